import pytest


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    """Keep the universal-polynomial disk cache out of the user's home."""
    import os
    cache = tmp_path_factory.mktemp("wittlab-cache")
    old = os.environ.get("WITTLAB_CACHE_DIR")
    os.environ["WITTLAB_CACHE_DIR"] = str(cache)
    yield
    if old is None:
        os.environ.pop("WITTLAB_CACHE_DIR", None)
    else:
        os.environ["WITTLAB_CACHE_DIR"] = old
