"""Formal group laws: builtins, validation, logarithms, inverses."""

import json

import pytest

from wittlab.errors import (
    NotAssociative,
    NotCommutative,
    NotUnital,
    WittlabError,
)
from wittlab.fgl import (
    FormalGroupLaw,
    formal_inverse,
    formal_log,
    load_fgl,
)
from wittlab.rings import Frac, make_ring_config

Z2 = make_ring_config({"p": 2})
Z5 = make_ring_config({"p": 5})


# ----------------------------------------------------------------------
# builtins


def test_builtin_additive():
    ga = load_fgl("ga", Z2)
    assert ga.exact and ga.is_additive
    sym = Z2.adjoin(["x", "y"])
    x, y = sym.var("x"), sym.var("y")
    assert ga.evaluate(x, y) == x + y


def test_builtin_multiplicative():
    gm = load_fgl("gm", Z5)
    assert gm.exact and not gm.is_additive
    sym = Z5.adjoin(["x", "y"])
    x, y = sym.var("x"), sym.var("y")
    assert gm.evaluate(x, y) == x + y + x * y


# ----------------------------------------------------------------------
# logarithm streams


def test_log_additive_vanishes():
    ga = load_fgl("ga", Z2)
    a = formal_log(ga, 6)
    assert a[0] == Frac(Z2.one(), 1)
    assert all(f.num.is_zero() for f in a[1:])


def test_log_multiplicative():
    gm = load_fgl("gm", Z5)
    a = formal_log(gm, 6)
    # log(1+X) = X - X^2/2 + X^3/3 - ...
    for k, f in enumerate(a, start=1):
        assert f == Frac(Z5.from_int((-1) ** (k + 1)), k)


def test_log_scaled_multiplicative():
    law = FormalGroupLaw(Z5, 4, {
        (1, 0): Z5.one(), (0, 1): Z5.one(), (1, 1): Z5.from_int(2)})
    a = formal_log(law, 4)
    # F = (1/2)((1+2X)(1+2Y) - 1), log = log(1+2X)/2
    for k, f in enumerate(a, start=1):
        assert f == Frac(Z5.from_int((-1) ** (k + 1) * 2 ** (k - 1)), k)


def test_log_custom_degree_guard():
    law = FormalGroupLaw(Z5, 4, {
        (1, 0): Z5.one(), (0, 1): Z5.one(), (1, 1): Z5.from_int(2)})
    with pytest.raises(WittlabError):
        formal_log(law, 12)


# ----------------------------------------------------------------------
# formal inverse


def test_inverse_additive():
    ga = load_fgl("ga", Z2)
    b = formal_inverse(ga, 5)
    assert [c.to_int() for c in b] == [-1, 0, 0, 0, 0]


def test_inverse_multiplicative():
    gm = load_fgl("gm", Z2)
    b = formal_inverse(gm, 5)
    # [-1](X) = (1+X)^{-1} - 1 = -X + X^2 - X^3 + ...
    assert [c.to_int() for c in b] == [-1, 1, -1, 1, -1]


def test_inverse_is_inverse():
    gm = load_fgl("gm", Z2)
    b = formal_inverse(gm, 6)
    sym = Z2.adjoin(["x"])
    x = sym.var("x")
    inv = sym.zero()
    for k, c in enumerate(b, start=1):
        inv = inv + sym.convert(c) * x ** k
    out = gm.evaluate(x, inv, max_degree=6).truncate_degree(6)
    assert out.is_zero()


# ----------------------------------------------------------------------
# validation


def test_not_unital():
    with pytest.raises(NotUnital):
        FormalGroupLaw(Z2, 3, {(1, 0): Z2.from_int(2), (0, 1): Z2.one()})


def test_not_commutative():
    with pytest.raises(NotCommutative):
        FormalGroupLaw(Z2, 3, {(1, 0): Z2.one(), (0, 1): Z2.one(),
                               (2, 1): Z2.one()})


def test_not_associative():
    # X + Y + X^2 Y^2 fails at degree 4: obstruction 2XYZ(Z - X)
    with pytest.raises(NotAssociative):
        FormalGroupLaw(Z2, 4, {(1, 0): Z2.one(), (0, 1): Z2.one(),
                               (2, 2): Z2.one()})


def test_coefficient_beyond_degree():
    with pytest.raises(WittlabError):
        FormalGroupLaw(Z2, 2, {(1, 0): Z2.one(), (0, 1): Z2.one(),
                               (2, 2): Z2.one()})


# ----------------------------------------------------------------------
# custom laws from JSON


def test_load_custom_file(tmp_path):
    path = tmp_path / "law.json"
    path.write_text(json.dumps({
        "degree": 4,
        "coeffs": [
            {"i": 1, "j": 0, "c": 1},
            {"i": 0, "j": 1, "c": 1},
            {"i": 1, "j": 1, "c": 2},
        ],
    }))
    law = load_fgl(str(path), Z5)
    assert law.degree == 4
    assert not law.exact
    assert law.coeff(1, 1) == Z5.from_int(2)


def test_load_custom_dict():
    law = load_fgl({"degree": 3, "coeffs": [
        {"i": 1, "j": 0, "c": 1}, {"i": 0, "j": 1, "c": 1},
        {"i": 1, "j": 1, "c": 1}]}, Z2)
    assert law.coeff(1, 1) == Z2.one()


def test_load_garbage():
    with pytest.raises(WittlabError):
        load_fgl({"nope": True}, Z2)
