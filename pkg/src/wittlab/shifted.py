"""Shifted Witt rings W_[m]n(B): a head of m+1 coordinates over R glued to
a tail of n coordinates over B, with the shifted ghost calculus and the
three operators that act on it (tail restriction, lateral Frobenius, and
the head-dropping ring map implemented by the plain Frobenius polynomials).
"""

from __future__ import annotations

from .errors import (
    BaseMismatch,
    InternalError,
    LengthMismatch,
    NonDivisible,
    NonIntegral,
    TorsionBase,
    WittlabError,
    ZeroShift,
    ZeroTail,
)
from .witt import (
    GhostVector,
    WittVector,
    exp_delta,
    frobenius_polynomials,
)


class ShiftedWittVector:
    """Head (r_0..r_m) over R and tail (b_{m+1}..b_{m+n}) over B."""

    __slots__ = ("rcfg", "bcfg", "m", "head", "tail")

    def __init__(self, rcfg, bcfg, m, head, tail):
        head = tuple(head)
        tail = tuple(tail)
        if m < 0 or len(head) != m + 1:
            raise LengthMismatch(f"head must have m+1={m + 1} entries")
        if not rcfg.torsion_free:
            raise WittlabError("the head ring R must be exact")
        if not bcfg.compatible(rcfg):
            raise BaseMismatch("B must be an algebra over the same R")
        for r in head:
            if r.cfg != rcfg:
                raise BaseMismatch("head entry outside R")
        for b in tail:
            if b.cfg != bcfg:
                raise BaseMismatch("tail entry outside B")
        self.rcfg = rcfg
        self.bcfg = bcfg
        self.m = m
        self.head = head
        self.tail = tail

    @property
    def n(self):
        return len(self.tail)

    def f(self, r):
        """Structure map R -> B."""
        return self.bcfg.convert(r)

    def __eq__(self, other):
        if not isinstance(other, ShiftedWittVector):
            return NotImplemented
        return (self.m == other.m and self.rcfg == other.rcfg
                and self.bcfg == other.bcfg and self.head == other.head
                and self.tail == other.tail)

    def __hash__(self):
        return hash((self.rcfg.key, self.bcfg.key, self.m,
                     self.head, self.tail))

    def __repr__(self):
        hs = ", ".join(repr(r) for r in self.head)
        ts = ", ".join(repr(b) for b in self.tail)
        return f"W[{self.m}]({hs}; {ts})"


def shifted_zero(rcfg, bcfg, m, n):
    return ShiftedWittVector(rcfg, bcfg, m,
                             (rcfg.zero(),) * (m + 1),
                             (bcfg.zero(),) * n)


def _check_pair(u, v):
    if u.m != v.m or u.n != v.n:
        raise LengthMismatch(
            f"shapes ({u.m},{u.n}) and ({v.m},{v.n}) differ")
    if u.rcfg != v.rcfg or u.bcfg != v.bcfg:
        raise BaseMismatch("shifted vectors live over different rings")


def shifted_ghost(v):
    """Entries 0..m are computed in R, entries m+1..m+n in B."""
    rcfg, bcfg = v.rcfg, v.bcfg
    q = rcfg.q
    entries = []
    pi_r = rcfg.pi_elem()
    for i in range(v.m + 1):
        acc = rcfg.zero()
        for j in range(i + 1):
            acc = acc + pi_r ** j * v.head[j] ** (q ** (i - j))
        entries.append(acc)
    pi_b = bcfg.pi_elem()
    for i in range(v.m + 1, v.m + v.n + 1):
        acc = bcfg.zero()
        for j in range(i + 1):
            xj = v.f(v.head[j]) if j <= v.m else v.tail[j - v.m - 1]
            acc = acc + pi_b ** j * xj ** (q ** (i - j))
        entries.append(acc)
    return GhostVector(entries, head_count=v.m + 1)


def shifted_ghost_solve(g, rcfg, bcfg):
    if g.head_count is None:
        raise WittlabError("ghost vector is not in shifted form")
    m = g.head_count - 1
    n = len(g.entries) - g.head_count
    if not bcfg.torsion_free:
        raise TorsionBase("shifted ghost solve needs exact torsion-free B")
    q = rcfg.q
    head = []
    pi_r = rcfg.pi_elem()
    for i in range(m + 1):
        acc = g.entries[i]
        for j in range(i):
            acc = acc - pi_r ** j * head[j] ** (q ** (i - j))
        for _ in range(i):
            try:
                acc = acc.div_pi()
            except NonDivisible:
                raise NonIntegral(f"head ghost entry {i} does not solve")
        head.append(acc)
    tail = []
    pi_b = bcfg.pi_elem()
    f_head = [bcfg.convert(r) for r in head]
    for i in range(m + 1, m + n + 1):
        acc = g.entries[i]
        for j in range(i):
            xj = f_head[j] if j <= m else tail[j - m - 1]
            acc = acc - pi_b ** j * xj ** (q ** (i - j))
        for _ in range(i):
            try:
                acc = acc.div_pi()
            except NonDivisible:
                raise NonIntegral(f"tail ghost entry {i} does not solve")
        tail.append(acc)
    return ShiftedWittVector(rcfg, bcfg, m, head, tail)


def _lift(v):
    cover = v.bcfg.exact_cover()
    return ShiftedWittVector(v.rcfg, cover, v.m, v.head,
                             (cover.convert(b) for b in v.tail))


def _reduce_to(bcfg, v):
    return ShiftedWittVector(v.rcfg, bcfg, v.m, v.head,
                             (bcfg.convert(b) for b in v.tail))


def _entrywise(op, u, v):
    gu, gv = shifted_ghost(u), shifted_ghost(v)
    return GhostVector((op(a, b) for a, b in zip(gu.entries, gv.entries)),
                       head_count=gu.head_count)


def shifted_add(u, v):
    _check_pair(u, v)
    if not u.bcfg.torsion_free:
        return _reduce_to(u.bcfg, shifted_add(_lift(u), _lift(v)))
    return shifted_ghost_solve(_entrywise(lambda a, b: a + b, u, v),
                               u.rcfg, u.bcfg)


def shifted_mul(u, v):
    _check_pair(u, v)
    if not u.bcfg.torsion_free:
        return _reduce_to(u.bcfg, shifted_mul(_lift(u), _lift(v)))
    return shifted_ghost_solve(_entrywise(lambda a, b: a * b, u, v),
                               u.rcfg, u.bcfg)


def shifted_neg(u):
    if not u.bcfg.torsion_free:
        return _reduce_to(u.bcfg, shifted_neg(_lift(u)))
    g = shifted_ghost(u)
    return shifted_ghost_solve(
        GhostVector((-a for a in g.entries), head_count=g.head_count),
        u.rcfg, u.bcfg)


def include_I(v):
    """The natural ring map into W_{m+n}(B): push the head through f."""
    comps = [v.f(r) for r in v.head] + list(v.tail)
    return WittVector(v.bcfg, comps)


def restrict_T(v):
    if v.n < 1:
        raise ZeroTail("restriction needs a nonempty tail")
    return ShiftedWittVector(v.rcfg, v.bcfg, v.m, v.head, v.tail[:-1])


def lateral_frobenius(v):
    """Ghost rule: apply phi to the m+1 head entries and drop the first
    tail ghost entry; every output coordinate is congruent to the q-th
    power of its input coordinate mod pi."""
    if v.n < 1:
        raise ZeroTail("lateral Frobenius needs a nonempty tail")
    if not v.bcfg.torsion_free:
        return _reduce_to(v.bcfg, lateral_frobenius(_lift(v)))
    g = shifted_ghost(v)
    entries = ([e.phi() for e in g.entries[:v.m + 1]]
               + list(g.entries[v.m + 2:]))
    try:
        return shifted_ghost_solve(
            GhostVector(entries, head_count=v.m + 1), v.rcfg, v.bcfg)
    except NonIntegral as exc:  # pragma: no cover - Theorem guarantees this
        raise InternalError(f"lateral Frobenius failed to solve: {exc}")


def shift_E(v, path="auto"):
    """The ring map W_[m]n -> W_[m-1]n given coordinatewise by the plain
    Frobenius polynomials; its shifted ghost drops the leading entry.

    ``path`` selects the implementation: "ghost" (solve the shifted ghost
    shift, lifting truncated bases), "coords" (evaluate the cached
    Frobenius polynomials), or "auto" (ghost).
    """
    if v.m < 1:
        raise ZeroShift("shift needs m >= 1")
    if path == "coords":
        return _shift_E_coords(v)
    if not v.bcfg.torsion_free:
        return _reduce_to(v.bcfg, shift_E(_lift(v)))
    g = shifted_ghost(v)
    try:
        return shifted_ghost_solve(
            GhostVector(g.entries[1:], head_count=v.m), v.rcfg, v.bcfg)
    except NonIntegral as exc:  # pragma: no cover - integral coordinates
        raise InternalError(f"shift_E ghost path failed to solve: {exc}")


def _shift_E_coords(v):
    length = v.m + v.n
    polys = frobenius_polynomials(length, v.rcfg)
    # F_i only involves x_0..x_{i+1}, so zero-filling the rest is harmless
    head_vals = {f"x{i}": v.head[i] if i <= v.m else v.rcfg.zero()
                 for i in range(length + 1)}
    head = [polys[i].substitute(head_vals, v.rcfg) for i in range(v.m)]
    full = [v.f(r) for r in v.head] + list(v.tail)
    full_vals = {f"x{i}": full[i] for i in range(length + 1)}
    tail = [polys[i].substitute(full_vals, v.bcfg)
            for i in range(v.m, length)]
    return ShiftedWittVector(v.rcfg, v.bcfg, v.m - 1, head, tail)


def scalar_shifted(rcfg, bcfg, m, n, r):
    """Image of r in W_[m]n(B) under the structure map (ghost entry i is
    phi^i(r))."""
    vec = exp_delta(r, m + n)
    head = vec.comps[:m + 1]
    tail = [bcfg.convert(c) for c in vec.comps[m + 1:]]
    return ShiftedWittVector(rcfg, bcfg, m, head, tail)
