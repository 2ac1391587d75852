"""Length-(n+1) Witt vectors over a base ring: ghost calculus, the ring
structure, T / F / V, Teichmuller lifts, the multiplication-by-pi map,
the universal exponential for the delta structure, and symbolic generation
of the universal structure polynomials (with a disk cache)."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .errors import (
    BaseMismatch,
    BudgetExceeded,
    InternalError,
    LengthMismatch,
    NonDivisible,
    NonIntegral,
    TorsionBase,
    WittlabError,
    ZeroLength,
)

TERM_BUDGET = 5_000_000


class WittVector:
    """Components (x_0 .. x_n) over one base ring.

    ``twist`` counts how many Frobenius applications produced this vector;
    it only tracks the B^phi bookkeeping of the structure map and has no
    effect on arithmetic.
    """

    __slots__ = ("cfg", "comps", "twist")

    def __init__(self, cfg, comps, twist=0):
        comps = tuple(comps)
        if not comps:
            raise ZeroLength("a Witt vector needs at least one component")
        for c in comps:
            if c.cfg != cfg:
                raise BaseMismatch("component ring differs from vector ring")
        self.cfg = cfg
        self.comps = comps
        self.twist = twist

    @property
    def n(self):
        return len(self.comps) - 1

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return self.cfg == other.cfg and self.comps == other.comps

    def __hash__(self):
        return hash((self.cfg.key, self.comps))

    def __repr__(self):
        return "W(" + ", ".join(repr(c) for c in self.comps) + ")"


class GhostVector:
    """Ghost coordinates <w_0 .. w_n>; ``head_count`` is None for the plain
    product ring and m+1 when the vector lives on the shifted ghost side."""

    __slots__ = ("entries", "head_count")

    def __init__(self, entries, head_count=None):
        self.entries = tuple(entries)
        self.head_count = head_count

    @property
    def n(self):
        return len(self.entries) - 1

    def __eq__(self, other):
        if not isinstance(other, GhostVector):
            return NotImplemented
        return (self.entries == other.entries
                and self.head_count == other.head_count)

    def __repr__(self):
        return "<" + ", ".join(repr(c) for c in self.entries) + ">"


def _ghost_entry(cfg, comps, i):
    pi = cfg.pi_elem()
    q = cfg.q
    acc = cfg.zero()
    for j in range(i + 1):
        acc = acc + pi ** j * comps[j] ** (q ** (i - j))
    return acc


def ghost(v):
    cfg = v.cfg
    return GhostVector(_ghost_entry(cfg, v.comps, i)
                       for i in range(len(v.comps)))


def ghost_solve(g, cfg=None):
    """Invert the ghost map by the triangular exact-division recursion."""
    if cfg is None:
        cfg = g.entries[0].cfg
    if not cfg.torsion_free:
        raise TorsionBase("ghost_solve needs a pi-torsion-free exact base")
    pi = cfg.pi_elem()
    q = cfg.q
    comps = []
    for i, gi in enumerate(g.entries):
        acc = gi
        for j in range(i):
            acc = acc - pi ** j * comps[j] ** (q ** (i - j))
        for _ in range(i):
            try:
                acc = acc.div_pi()
            except NonDivisible:
                raise NonIntegral(
                    f"ghost entry {i} is not in the image of the ghost map")
        comps.append(acc)
    return WittVector(cfg, comps)


def _check_pair(u, v):
    if u.n != v.n:
        raise LengthMismatch(f"lengths {u.n} and {v.n} differ")
    if u.cfg != v.cfg:
        raise BaseMismatch("Witt vectors live over different rings")


def _lift(v):
    cover = v.cfg.exact_cover()
    return WittVector(cover, (cover.convert(c) for c in v.comps), v.twist)


def _reduce_to(cfg, v):
    return WittVector(cfg, (cfg.convert(c) for c in v.comps), v.twist)


def _entrywise(op, u, v):
    gu, gv = ghost(u), ghost(v)
    return GhostVector(op(a, b) for a, b in zip(gu.entries, gv.entries))


def witt_add(u, v):
    _check_pair(u, v)
    if not u.cfg.torsion_free:
        return _reduce_to(u.cfg, witt_add(_lift(u), _lift(v)))
    return ghost_solve(_entrywise(lambda a, b: a + b, u, v), u.cfg)


def witt_mul(u, v):
    _check_pair(u, v)
    if not u.cfg.torsion_free:
        return _reduce_to(u.cfg, witt_mul(_lift(u), _lift(v)))
    return ghost_solve(_entrywise(lambda a, b: a * b, u, v), u.cfg)


def witt_neg(u):
    if not u.cfg.torsion_free:
        return _reduce_to(u.cfg, witt_neg(_lift(u)))
    g = ghost(u)
    return ghost_solve(GhostVector(-a for a in g.entries), u.cfg)


def witt_sub(u, v):
    return witt_add(u, witt_neg(v))


def witt_zero(cfg, n):
    return WittVector(cfg, (cfg.zero(),) * (n + 1))


def truncate(v):
    if v.n < 1:
        raise ZeroLength("cannot truncate a length-1 Witt vector")
    return WittVector(v.cfg, v.comps[:-1], v.twist)


def frobenius(v):
    if v.n < 1:
        raise ZeroLength("Frobenius needs length >= 2")
    if not v.cfg.torsion_free:
        return _reduce_to(v.cfg, frobenius(_lift(v)))
    g = ghost(v)
    try:
        out = ghost_solve(GhostVector(g.entries[1:]), v.cfg)
    except NonIntegral as exc:  # pragma: no cover - integral by construction
        raise InternalError(f"Frobenius ghost shift failed to solve: {exc}")
    return WittVector(v.cfg, out.comps, v.twist + 1)


def frobenius_iter(v, k):
    for _ in range(k):
        v = frobenius(v)
    return v


def verschiebung(v, times=1):
    cfg = v.cfg
    comps = (cfg.zero(),) * times + v.comps
    return WittVector(cfg, comps, v.twist)


def teichmuller(b, n):
    cfg = b.cfg
    return WittVector(cfg, (b,) + (cfg.zero(),) * n)


def mult_pi(v):
    """The unique map whose ghost is entrywise multiplication by pi."""
    if not v.cfg.torsion_free:
        return _reduce_to(v.cfg, mult_pi(_lift(v)))
    pi = v.cfg.pi_elem()
    g = ghost(v)
    try:
        return ghost_solve(GhostVector(pi * a for a in g.entries), v.cfg)
    except NonIntegral as exc:  # pragma: no cover
        raise InternalError(f"(pi) map failed to solve: {exc}")


def scalar_witt(cfg, r, n):
    """Image of a base scalar under the structure map R -> W_n(B)."""
    return exp_delta(r, n)


def scalar_mul(r, v):
    return witt_mul(exp_delta_in(v.cfg, r, v.n), v)


def exp_delta(r, n):
    """The unique vector with ghost <r, phi(r), ..., phi^n(r)>."""
    cfg = r.cfg
    if not cfg.torsion_free:
        raise TorsionBase("exp_delta needs an exact base")
    entries = []
    cur = r
    for _ in range(n + 1):
        entries.append(cur)
        cur = cur.phi()
    try:
        return ghost_solve(GhostVector(entries), cfg)
    except NonIntegral as exc:  # pragma: no cover - phi is a valid lift
        raise InternalError(f"exp_delta failed to solve: {exc}")


def exp_delta_in(cfg, r, n):
    """exp_delta of a scalar, landing in a possibly-truncated config."""
    exact = cfg.exact_cover()
    lifted = exp_delta(exact.convert(r), n)
    return _reduce_to(cfg, lifted) if cfg is not exact else lifted


def delta(r):
    """(phi(r) - r^q) / pi, the pi-derivation attached to the lift."""
    return (r.phi() - r ** r.cfg.q).div_pi()


# ----------------------------------------------------------------------
# universal structure polynomials


_UNIVERSAL_OPS = ("sum", "prod", "frobenius", "mult_pi")
_MEMO = {}


def _cache_dir():
    root = os.environ.get("WITTLAB_CACHE_DIR")
    if root:
        return Path(root)
    return Path.home() / ".cache" / "wittlab"


def _cache_key(op, n, cfg):
    payload = {"op": op, "n": n, "p": cfg.p,
               "modulus": list(cfg.modulus) if cfg.modulus else None,
               "phi_pi": list(cfg.phi_pi) if cfg.phi_pi else None}
    blob = json.dumps(payload, sort_keys=True)
    return payload, hashlib.sha256(blob.encode()).hexdigest()


def _budget_check(polys, budget):
    total = sum(len(p.terms) for p in polys)
    if total > budget:
        raise BudgetExceeded(
            f"symbolic expansion hit {total} terms (budget {budget})")


def universal_polynomials(op, n, p=None, cfg=None, budget=TERM_BUDGET):
    """Exact structure polynomials in x_0..x_n (and y_0..y_n for binary
    ops), computed once by symbolic ghost-solve and cached on disk."""
    if op not in _UNIVERSAL_OPS:
        raise WittlabError(f"unknown universal operation {op!r}")
    if n < 0:
        raise WittlabError("n must be >= 0")
    if cfg is None:
        if p is None:
            raise WittlabError("need p or cfg")
        from .rings import make_ring_config
        cfg = make_ring_config({"p": p})
    base = cfg.base_exact()
    payload, digest = _cache_key(op, n, base)
    memo_key = (op, n, base.key)
    if memo_key in _MEMO:
        return _MEMO[memo_key]

    xs = [f"x{i}" for i in range(n + 1)]
    ys = [f"y{i}" for i in range(n + 1)] if op in ("sum", "prod") else []
    sym = base.adjoin(xs + ys)

    path = _cache_dir() / f"{op}-n{n}-p{base.p}-{digest[:16]}.json"
    if path.exists():
        from .serialize import decode_element
        data = json.loads(path.read_text())
        polys = [decode_element(sym, enc) for enc in data["polys"]]
        _MEMO[memo_key] = polys
        return polys

    xv = WittVector(sym, [sym.var(v) for v in xs])
    if op == "sum":
        yv = WittVector(sym, [sym.var(v) for v in ys])
        polys = list(witt_add(xv, yv).comps)
    elif op == "prod":
        yv = WittVector(sym, [sym.var(v) for v in ys])
        polys = list(witt_mul(xv, yv).comps)
    elif op == "frobenius":
        if n < 1:
            raise WittlabError("frobenius polynomials need n >= 1")
        polys = list(frobenius(xv).comps)
    else:
        polys = list(mult_pi(xv).comps)
    _budget_check(polys, budget)

    from .serialize import encode_element
    data = dict(payload)
    data["polys"] = [encode_element(pe) for pe in polys]
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = tempfile.NamedTemporaryFile("w", dir=path.parent, delete=False,
                                      suffix=".tmp")
    try:
        json.dump(data, tmp, sort_keys=True)
        tmp.close()
        os.replace(tmp.name, path)
    finally:
        if os.path.exists(tmp.name):
            os.unlink(tmp.name)
    _MEMO[memo_key] = polys
    return polys


def frobenius_polynomials(length, cfg):
    """F_0 .. F_{length-1} for the Frobenius W_length -> W_{length-1}."""
    return universal_polynomials("frobenius", length, cfg=cfg)
