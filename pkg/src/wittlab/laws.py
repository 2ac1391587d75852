"""Uniform law harness: every identity in the suite (L1-L16 plus the
comparison-table identities) as a seeded, reproducible check, with
optional exact symbolic verification and machine-readable reports.

Random inputs follow a fixed documented distribution: integer coordinates
in [-1000, 1000] (coefficientwise for order elements) and, for symbolic
sabotage runs, sparse polynomials of degree <= 2 in <= 4 variables with
coefficients in [-9, 9].  Each trial draws an independent RNG stream from
(seed, law id, trial index), so results are order-independent.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .errors import (
    ConfigUnsupported,
    UnknownLaw,
    WittlabError,
)
from .fgl import load_fgl
from .kernel import (
    KernelPoint,
    difference_character,
    kernel_add,
    kernel_embed,
    kernel_lateral_f,
    kernel_phi,
    kernel_project_u,
    kernel_section_sigma,
    kernel_witt_point,
    psi_map,
)
from .rings import c_pi, make_ring_config
from .serialize import encode_config, encode_element, encode_witt
from .shifted import (
    ShiftedWittVector,
    include_I,
    lateral_frobenius,
    shift_E,
    shifted_ghost,
    shifted_ghost_solve,
)
from .witt import (
    GhostVector,
    WittVector,
    delta,
    frobenius,
    frobenius_iter,
    ghost,
    ghost_solve,
    mult_pi,
    verschiebung,
    witt_add,
    witt_mul,
)

INT_BOUND = 1000
POLY_COEFF_BOUND = 9


# ----------------------------------------------------------------------
# random input distribution



def _pick(rng, lo, hi, cap):
    """Uniform in [lo, hi], optionally capped (never below lo)."""
    if cap is not None:
        hi = max(lo, min(hi, cap))
    return rng.randint(lo, hi)


def _rand_elem(cfg, rng, bound=INT_BOUND):
    return cfg.from_coeff([rng.randint(-bound, bound)
                           for _ in range(cfg.d)])


def _rand_witt(cfg, n, rng, bound=INT_BOUND):
    return WittVector(cfg, [_rand_elem(cfg, rng, bound)
                            for _ in range(n + 1)])


def _rand_shifted(cfg, m, n, rng, bound=INT_BOUND):
    return ShiftedWittVector(cfg, cfg, m,
                             [_rand_elem(cfg, rng, bound)
                              for _ in range(m + 1)],
                             [_rand_elem(cfg, rng, bound) for _ in range(n)])


def _rand_poly(cfg, rng):
    acc = cfg.zero()
    names = cfg.vars[:4]
    for _ in range(rng.randrange(1, 4)):
        term = cfg.from_int(rng.randint(-POLY_COEFF_BOUND, POLY_COEFF_BOUND))
        for _ in range(rng.randrange(0, 3)):
            term = term * cfg.var(rng.choice(names))
        acc = acc + term
    return acc


def _phi_fixes_pi(cfg):
    return cfg.pi_elem().phi() == cfg.pi_elem()


def _ce(**kw):
    return kw


def _enc(v):
    if isinstance(v, int):
        return v
    if isinstance(v, WittVector):
        return encode_witt(v)
    if isinstance(v, ShiftedWittVector):
        from .serialize import encode_shifted
        return encode_shifted(v)
    if isinstance(v, KernelPoint):
        return [encode_element(c) for c in v.coords]
    if isinstance(v, GhostVector):
        return [encode_element(c) for c in v.entries]
    if isinstance(v, (list, tuple)):
        return [_enc(x) for x in v]
    return encode_element(v)


def _mismatch(inputs, lhs, rhs):
    return _ce(inputs={k: _enc(v) for k, v in inputs.items()},
               lhs=_enc(lhs), rhs=_enc(rhs))


# ----------------------------------------------------------------------
# the laws, one trial each


def _law_l1(cfg, rng, params):
    n = rng.randrange(1, 4)
    u, v = _rand_witt(cfg, n, rng), _rand_witt(cfg, n, rng)
    gu, gv = ghost(u), ghost(v)
    gs, gp = ghost(witt_add(u, v)), ghost(witt_mul(u, v))
    for a, b, s, p in zip(gu.entries, gv.entries, gs.entries, gp.entries):
        if a + b != s or a * b != p:
            return _mismatch({"u": u, "v": v}, gs, gp)
    return None


def _law_l2(cfg, rng, params):
    n = rng.randrange(0, 5)
    v = _rand_witt(cfg, n, rng)
    back = ghost_solve(ghost(v), cfg)
    if back != v:
        return _mismatch({"v": v}, back, v)
    return None


def _hyp_phi_pi(cfg, params):
    if not _phi_fixes_pi(cfg):
        return "phi(pi) != pi"
    return None


def _law_l3(cfg, rng, params):
    n = rng.randrange(1, 4)
    v = _rand_witt(cfg, n, rng)
    lhs = frobenius(verschiebung(v))
    rhs = mult_pi(v)
    if lhs != rhs:
        return _mismatch({"v": v}, lhs, rhs)
    m = rng.randrange(0, 4)
    t = _rand_witt(cfg, rng.randrange(0, 3), rng)
    lhs = frobenius(verschiebung(t, m + 1))
    rhs = verschiebung(mult_pi(t), m)
    if lhs != rhs:
        return _mismatch({"t": t, "m": m}, lhs, rhs)
    return None


def _div_pi(x):
    """x = 0 mod pi, checked in R/pi."""
    return x.is_zero() or x.pi_val() >= 1


def _law_l4(cfg, rng, params):
    n = rng.randrange(1, 4)
    v = _rand_witt(cfg, n, rng)
    out = frobenius(v)
    q = cfg.q
    for i, c in enumerate(out.comps):
        if not _div_pi(c - v.comps[i] ** q):
            return _mismatch({"v": v, "i": v.comps[i]}, out, v)
    return None


def _law_l5(cfg, rng, params):
    x, y = _rand_elem(cfg, rng), _rand_elem(cfg, rng)
    if not delta(cfg.one()).is_zero():
        return _ce(axiom=1)
    lhs = delta(x + y)
    rhs = delta(x) + delta(y) + c_pi(x, y)
    if lhs != rhs:
        return _mismatch({"x": x, "y": y}, lhs, rhs)
    q = cfg.q
    lhs = delta(x * y)
    rhs = (x ** q * delta(y) + y ** q * delta(x)
           + cfg.pi_elem() * delta(x) * delta(y))
    if lhs != rhs:
        return _mismatch({"x": x, "y": y}, lhs, rhs)
    return None


def _l6_sides(v, lateral=lateral_frobenius):
    lhs = frobenius_iter(include_I(v), v.m + 2)
    rhs = frobenius_iter(include_I(lateral(v)), v.m + 1)
    return lhs, rhs


def _law_l6(cfg, rng, params):
    m = _pick(rng, 0, 2, params.get("m_max"))
    n = _pick(rng, 2, 3, params.get("n_max"))
    v = _rand_shifted(cfg, m, n, rng)
    lhs, rhs = _l6_sides(v)
    if lhs != rhs:
        return _mismatch({"v": v}, lhs, rhs)
    return None


def _sym_shifted(p, m, n):
    base = make_ring_config({"p": p})
    names = [f"x{i}" for i in range(m + n + 1)]
    sym = base.adjoin(names)
    return ShiftedWittVector(sym, sym, m,
                             [sym.var(names[i]) for i in range(m + 1)],
                             [sym.var(names[m + 1 + i]) for i in range(n)])


def _sym_l6(params):
    v = _sym_shifted(params["p"], params["m"], params["n"])
    lhs, rhs = _l6_sides(v)
    if lhs != rhs:
        return _mismatch({"v": v}, lhs, rhs)
    return None


def _law_l7(cfg, rng, params):
    m = _pick(rng, 1, 2, params.get("m_max"))
    n = _pick(rng, 1, 3, params.get("n_max"))
    v = _rand_shifted(cfg, m, n, rng)
    lhs = include_I(shift_E(v))
    rhs = frobenius(include_I(v))
    if lhs != rhs:
        return _mismatch({"v": v}, lhs, rhs)
    return None


def _sym_l7(params):
    v = _sym_shifted(params["p"], params["m"], params["n"])
    lhs = include_I(shift_E(v))
    rhs = frobenius(include_I(v))
    if lhs != rhs:
        return _mismatch({"v": v}, lhs, rhs)
    return None


def _law_l8(cfg, rng, params):
    m = _pick(rng, 1, 2, params.get("m_max"))
    n = _pick(rng, 1, 3, params.get("n_max"))
    v = _rand_shifted(cfg, m, n, rng)
    lhs = shifted_ghost(shift_E(v)).entries
    rhs = shifted_ghost(v).entries[1:]
    if lhs != rhs:
        return _mismatch({"v": v}, list(lhs), list(rhs))
    return None


def _sym_l8(params):
    v = _sym_shifted(params["p"], params["m"], params["n"])
    lhs = shifted_ghost(shift_E(v)).entries
    rhs = shifted_ghost(v).entries[1:]
    if lhs != rhs:
        return _mismatch({"v": v}, list(lhs), list(rhs))
    return None


def _law_l9(cfg, rng, params):
    m = _pick(rng, 1, 2, params.get("m_max"))
    n = _pick(rng, 1, 3, params.get("n_max"))
    v = _rand_shifted(cfg, m, n, rng)
    lhs = shift_E(lateral_frobenius(v))
    rhs = lateral_frobenius(shift_E(v))
    if lhs != rhs:
        return _mismatch({"v": v}, lhs, rhs)
    return None


def _sym_l9(params):
    v = _sym_shifted(params["p"], params["m"], params["n"])
    lhs = shift_E(lateral_frobenius(v))
    rhs = lateral_frobenius(shift_E(v))
    if lhs != rhs:
        return _mismatch({"v": v}, lhs, rhs)
    return None


def _law_l10(cfg, rng, params):
    m = _pick(rng, 0, 2, params.get("m_max"))
    n = _pick(rng, 1, 3, params.get("n_max"))
    v = _rand_shifted(cfg, m, n, rng)
    out = lateral_frobenius(v)
    q = cfg.q
    ins = list(v.head) + list(v.tail)
    outs = list(out.head) + list(out.tail)
    for i, o in enumerate(outs):
        if not _div_pi(o - ins[i] ** q):
            return _mismatch({"v": v}, out, v)
    return None


def _ga_point(cfg, m, n, rng, bound=INT_BOUND):
    law = load_fgl("ga", cfg.base_exact())
    return KernelPoint(law, cfg, cfg, m,
                       [_rand_elem(cfg, rng, bound) for _ in range(n)])


def _law_l11(cfg, rng, params):
    m = _pick(rng, 0, 2, params.get("m_max"))
    n = _pick(rng, 2, 4, params.get("n_max"))
    t = _ga_point(cfg, m, n, rng)
    lhs = kernel_lateral_f(t).coords
    rhs = frobenius(WittVector(cfg, t.coords)).comps
    if lhs != rhs:
        return _mismatch({"t": t}, list(lhs), list(rhs))
    return None


def _l12_check(t):
    g = shifted_ghost(kernel_embed(t))
    pw = t.bcfg.pi_elem() ** (t.m + 1)
    wt = ghost(WittVector(t.bcfg, t.coords))
    for i in range(t.m + 1):
        if not g.entries[i].is_zero():
            return _mismatch({"t": t}, g, wt)
    for i in range(t.n):
        if g.entries[t.m + 1 + i] != pw * wt.entries[i]:
            return _mismatch({"t": t}, g, wt)
    return None


def _law_l12(cfg, rng, params):
    m = _pick(rng, 0, 2, params.get("m_max"))
    n = _pick(rng, 1, 3, params.get("n_max"))
    return _l12_check(_ga_point(cfg, m, n, rng))


def _sym_l12(params):
    base = make_ring_config({"p": params["p"]})
    m, n = params["m"], params["n"]
    names = [f"t{i}" for i in range(n)]
    sym = base.adjoin(names)
    law = load_fgl("ga", base)
    t = KernelPoint(law, sym, sym, m, [sym.var(v) for v in names])
    return _l12_check(t)


def _law_l13(cfg, rng, params):
    m = _pick(rng, 1, 2, params.get("m_max"))
    n = _pick(rng, 1, 3, params.get("n_max"))
    t = _ga_point(cfg, m, n, rng)
    lhs = frobenius(kernel_witt_point(t))
    rhs = kernel_witt_point(kernel_phi(t))
    if lhs != rhs:
        return _mismatch({"t": t}, lhs, rhs)
    return None


def _law_l14(cfg, rng, params):
    m = _pick(rng, 0, 2, params.get("m_max"))
    n = _pick(rng, 2, 3, params.get("n_max"))
    t = _ga_point(cfg, m, n, rng)
    s = kernel_lateral_f(t)
    for j in range(2, n + 1):
        lhs = frobenius_iter(kernel_witt_point(t), m + j)
        rhs = frobenius_iter(kernel_witt_point(s), m + j - 1)
        if lhs != rhs:
            return _mismatch({"t": t, "j": cfg.from_int(j)}, lhs, rhs)
    return None


def _hyp_psi(cfg, params):
    if not cfg.psi_integral:
        return "psi_integral=false"
    return None


def _law_l15(cfg, rng, params):
    prec = params.get("prec", 6)
    base = cfg.base_exact()
    B = cfg.truncated(prec)
    gm = load_fgl("gm", base)
    ga = load_fgl("ga", base)
    t0 = _rand_elem(B, rng)
    t = KernelPoint(gm, base, B, 1, [t0])
    lhs = psi_map(gm, 0, kernel_phi(t).coords[0])
    rhs = B.convert(base.pi_elem()) * psi_map(gm, 1, t0)
    if lhs != rhs:
        return _mismatch({"t0": t0}, lhs, rhs)
    s0 = _rand_elem(B, rng)
    s = KernelPoint(gm, base, B, 1, [s0])
    lhs = psi_map(gm, 1, kernel_add(t, s).coords[0])
    rhs = psi_map(gm, 1, t0) + psi_map(gm, 1, s0)
    if lhs != rhs:
        return _mismatch({"t0": t0, "s0": s0}, lhs, rhs)
    # additive degeneration: Psi = id and Phi = pi
    a = KernelPoint(ga, base, base, 1, [_rand_elem(base, rng)])
    if psi_map(ga, 1, a.coords[0], precision=prec) != a.coords[0]:
        return _ce(part="psi_ga", inputs={"a": _enc(a)})
    if kernel_phi(a).coords[0] != base.pi_elem() * a.coords[0]:
        return _ce(part="phi_ga", inputs={"a": _enc(a)})
    return None


def _l16_check(t):
    lhs = difference_character(t)
    rhs = difference_character(
        kernel_section_sigma(kernel_project_u(t, 1), t.n))
    if lhs != rhs:
        return _mismatch({"t": t}, lhs, rhs)
    return None


def _law_l16(cfg, rng, params):
    prec = params.get("prec", 6)
    m = _pick(rng, 0, 2, params.get("m_max"))
    n = _pick(rng, 2, 4, params.get("n_max"))
    ce = _l16_check(_ga_point(cfg, m, n, rng))
    if ce:
        return ce
    base = cfg.base_exact()
    B = cfg.truncated(prec)
    gm = load_fgl("gm", base)
    m = _pick(rng, 0, 1, params.get("m_max"))
    n = _pick(rng, 2, 3, params.get("n_max"))
    t = KernelPoint(gm, base, B, m, [_rand_elem(B, rng) for _ in range(n)])
    return _l16_check(t)


def _law_table_i(cfg, rng, params):
    m = _pick(rng, 1, 3, params.get("m_max"))
    t = _rand_witt(cfg, _pick(rng, 0, 2, params.get("n_max")), rng)
    lhs = frobenius(verschiebung(t, m + 1))
    rhs = verschiebung(mult_pi(t), m)
    if lhs != rhs:
        return _mismatch({"t": t, "m": m}, lhs, rhs)
    m = _pick(rng, 1, 2, params.get("m_max"))
    pt = _ga_point(cfg, m, _pick(rng, 1, 3, params.get("n_max")), rng)
    lhs = frobenius(kernel_witt_point(pt))
    rhs = kernel_witt_point(kernel_phi(pt))
    if lhs != rhs:
        return _mismatch({"t": pt}, lhs, rhs)
    return None


def _law_table_ii(cfg, rng, params):
    m = _pick(rng, 0, 2, params.get("m_max"))
    n = _pick(rng, 2, 3, params.get("n_max"))
    t = _rand_witt(cfg, n - 1, rng)
    lhs = frobenius_iter(verschiebung(t, m + 1), m + n)
    rhs = frobenius_iter(verschiebung(frobenius(t), m + 1), m + n - 1)
    if lhs != rhs:
        return _mismatch({"t": t, "m": m}, lhs, rhs)
    pt = _ga_point(cfg, m, n, rng)
    lhs = frobenius_iter(kernel_witt_point(pt), m + n)
    rhs = frobenius_iter(kernel_witt_point(kernel_lateral_f(pt)), m + n - 1)
    if lhs != rhs:
        return _mismatch({"t": pt}, lhs, rhs)
    return None


def _law_table_iii(cfg, rng, params):
    v = _rand_witt(cfg, rng.randrange(1, 4), rng)
    lhs = mult_pi(frobenius(v))
    rhs = frobenius(mult_pi(v))
    if lhs != rhs:
        return _mismatch({"v": v}, lhs, rhs)
    m = _pick(rng, 1, 2, params.get("m_max"))
    n = _pick(rng, 2, 3, params.get("n_max"))
    pt = _ga_point(cfg, m, n, rng)
    lhs = kernel_phi(kernel_lateral_f(pt))
    rhs = kernel_lateral_f(kernel_phi(pt))
    if lhs != rhs:
        return _mismatch({"t": pt}, lhs, rhs)
    return None


# ----------------------------------------------------------------------
# sabotage variants (mutation self-tests; these are supposed to fail)


def _sabotage_lateral(v):
    g = shifted_ghost(v)
    entries = list(g.entries[:v.m + 1]) + list(g.entries[v.m + 2:])
    return shifted_ghost_solve(
        GhostVector(entries, head_count=v.m + 1), v.rcfg, v.bcfg)


def _sabotage_shift(v):
    g = shifted_ghost(v)
    return shifted_ghost_solve(
        GhostVector(g.entries[:-1], head_count=v.m), v.rcfg, v.bcfg)


def _rand_poly_shifted(cfg, m, n, rng):
    sym = cfg.adjoin(["u0", "u1"])
    return ShiftedWittVector(sym, sym, m,
                             [_rand_poly(sym, rng) for _ in range(m + 1)],
                             [_rand_poly(sym, rng) for _ in range(n)])


def _law_sabotage_lateral(cfg, rng, params):
    v = _rand_poly_shifted(cfg, params.get("m", 1), params.get("n", 2), rng)
    lhs, rhs = _l6_sides(v, lateral=_sabotage_lateral)
    if lhs != rhs:
        return _mismatch({"v": v}, lhs, rhs)
    return None


def _law_sabotage_shift(cfg, rng, params):
    v = _rand_poly_shifted(cfg, params.get("m", 1), params.get("n", 2), rng)
    lhs = shifted_ghost(_sabotage_shift(v)).entries
    rhs = shifted_ghost(v).entries[1:]
    if lhs != rhs:
        return _mismatch({"v": v}, list(lhs), list(rhs))
    return None


# ----------------------------------------------------------------------
# registry and drivers


@dataclass(frozen=True)
class LawSpec:
    id: str
    description: str
    numeric: object
    trials: int = 100
    hypothesis: object = None
    symbolic: object = None
    symbolic_cases: tuple = ()
    sabotage: bool = False


@dataclass
class TrialReport:
    law: str
    config: dict
    seed: int
    trials: int
    status: str
    counterexample: object
    ms: float
    reason: str = ""
    mode: str = "numeric"

    def to_json(self):
        out = {
            "law": self.law,
            "config": self.config,
            "seed": self.seed,
            "trials": self.trials,
            "status": self.status,
            "counterexample": self.counterexample,
            "ms": self.ms,
            "mode": self.mode,
        }
        if self.reason:
            out["reason"] = self.reason
        return out


REPORT_SCHEMA = {
    "type": "object",
    "required": ["law", "config", "seed", "trials", "status",
                 "counterexample", "ms", "mode"],
    "properties": {
        "law": {"type": "string"},
        "config": {"type": "object"},
        "seed": {"type": "integer"},
        "trials": {"type": "integer", "minimum": 0},
        "status": {"enum": ["pass", "fail", "skipped"]},
        "counterexample": {"type": ["object", "null"]},
        "ms": {"type": "number", "minimum": 0},
        "mode": {"enum": ["numeric", "symbolic"]},
        "reason": {"type": "string"},
    },
    "additionalProperties": False,
}


def _case(p, m, n):
    return {"p": p, "m": m, "n": n}


REGISTRY = {}


def _register(spec):
    REGISTRY[spec.id] = spec


_register(LawSpec("L1", "ghost is a ring homomorphism", _law_l1, 200))
_register(LawSpec("L2", "ghost_solve inverts ghost", _law_l2, 200))
_register(LawSpec("L3", "F(V(x)) = (pi)(x) and F(V^(m+1)) = V^m (pi)",
                  _law_l3, 100, hypothesis=_hyp_phi_pi))
_register(LawSpec("L4", "F(x)_i = x_i^q mod pi", _law_l4, 200))
_register(LawSpec("L5", "delta axioms (1)-(3)", _law_l5, 200))
_register(LawSpec(
    "L6", "F^(m+2) I = F^(m+1) I F_[m]", _law_l6, 100, symbolic=_sym_l6,
    symbolic_cases=(_case(2, 0, 2), _case(2, 1, 2), _case(3, 0, 2),
                    _case(2, 1, 3))))
_register(LawSpec("L7", "I E_[m] = F I", _law_l7, 100, symbolic=_sym_l7,
                  symbolic_cases=(_case(2, 1, 2),)))
_register(LawSpec("L8", "ghost of E_[m] is the right shift", _law_l8, 100,
                  symbolic=_sym_l8, symbolic_cases=(_case(2, 1, 2),)))
_register(LawSpec("L9", "E_[m] F_[m] = F_[m-1] E_[m]", _law_l9, 100,
                  symbolic=_sym_l9, symbolic_cases=(_case(2, 1, 2),)))
_register(LawSpec("L10", "lateral Frobenius congruence mod pi",
                  _law_l10, 200))
_register(LawSpec("L11", "kernel lateral Frobenius = F on additive tails",
                  _law_l11, 100))
_register(LawSpec(
    "L12", "embedded kernel ghost = pi^(m+1) times tail ghost", _law_l12,
    100, symbolic=_sym_l12,
    symbolic_cases=(_case(2, 1, 1), _case(2, 0, 2), _case(2, 1, 3))))
_register(LawSpec("L13", "F iota_m = iota_(m-1) Phi_[m]", _law_l13, 100))
_register(LawSpec("L14", "phi^(m+j) iota_m = phi^(m+j-1) iota_m f_m",
                  _law_l14, 100))
_register(LawSpec("L15", "Psi ladder and additivity", _law_l15, 50,
                  hypothesis=_hyp_psi))
_register(LawSpec("L16", "difference character factors through t_0",
                  _law_l16, 50))
_register(LawSpec("table-i", "F V^(m+1) = V^m (pi); F iota = iota Phi",
                  _law_table_i, 100))
_register(LawSpec("table-ii",
                  "F^(m+n) V^(m+1) = F^(m-1+n) V^(m+1) F; kernel analogue",
                  _law_table_ii, 100))
_register(LawSpec("table-iii", "(pi) F = F (pi); Phi f = f Phi",
                  _law_table_iii, 100))
_register(LawSpec("sabotage-lateral",
                  "lateral Frobenius with un-phi'd head (must fail L6)",
                  _law_sabotage_lateral, 100, sabotage=True))
_register(LawSpec("sabotage-shift",
                  "E_[m] dropping the wrong ghost entry (must fail L8)",
                  _law_sabotage_shift, 100, sabotage=True))


def _law_sort_key(law_id):
    if law_id.startswith("L") and law_id[1:].isdigit():
        return (0, int(law_id[1:]), law_id)
    return (1, 0, law_id)


def run_law(law_id, cfg, trials=None, seed=0, **params):
    if law_id not in REGISTRY:
        raise UnknownLaw(f"no law {law_id!r}")
    spec = REGISTRY[law_id]
    if trials is None:
        trials = spec.trials
    start = time.perf_counter()
    if spec.hypothesis is not None:
        reason = spec.hypothesis(cfg, params)
        if reason:
            return TrialReport(law_id, encode_config(cfg), seed, 0,
                               "skipped", None,
                               (time.perf_counter() - start) * 1000,
                               reason=reason)
    status, ce, ran = "pass", None, 0
    for trial in range(trials):
        rng = random.Random(f"{seed}:{law_id}:{trial}")
        ran = trial + 1
        try:
            ce = spec.numeric(cfg, rng, params)
        except WittlabError as exc:
            ce = _ce(error=type(exc).__name__, message=str(exc))
        if ce is not None:
            ce["trial"] = trial
            status = "fail"
            break
    return TrialReport(law_id, encode_config(cfg), seed, ran, status, ce,
                       (time.perf_counter() - start) * 1000)


def symbolic_verify(law_id, case, seed=0):
    if law_id not in REGISTRY:
        raise UnknownLaw(f"no law {law_id!r}")
    spec = REGISTRY[law_id]
    if spec.symbolic is None:
        raise ConfigUnsupported(f"{law_id} has no symbolic mode")
    start = time.perf_counter()
    base = make_ring_config({"p": case["p"]})
    try:
        ce = spec.symbolic(case)
    except WittlabError as exc:
        ce = _ce(error=type(exc).__name__, message=str(exc))
    status = "pass" if ce is None else "fail"
    config = encode_config(base)
    config.update({k: v for k, v in case.items() if k != "p"})
    return TrialReport(law_id, config, seed, 1, status, ce,
                       (time.perf_counter() - start) * 1000,
                       mode="symbolic")


def default_matrix():
    return [
        make_ring_config({"p": 2}),
        make_ring_config({"p": 3}),
        make_ring_config({"p": 5, "modulus": [-5, 0, 1]}),
    ]


def run_suite(law_filter="all", configs=None, trials=None, seed=0,
              include_sabotage=False, **params):
    if configs is None:
        configs = default_matrix()
    if law_filter == "all":
        ids = [i for i in REGISTRY
               if include_sabotage or not REGISTRY[i].sabotage]
    else:
        wanted = (law_filter if isinstance(law_filter, (list, tuple))
                  else [law_filter])
        for i in wanted:
            if i not in REGISTRY:
                raise UnknownLaw(f"no law {i!r}")
        ids = list(wanted)
    ids.sort(key=_law_sort_key)
    reports = []
    for law_id in ids:
        spec = REGISTRY[law_id]
        for cfg in configs:
            reports.append(run_law(law_id, cfg, trials=trials, seed=seed,
                                   **params))
        for case in spec.symbolic_cases:
            reports.append(symbolic_verify(law_id, case, seed=seed))
    summary = {
        "pass": sum(r.status == "pass" for r in reports),
        "fail": sum(r.status == "fail" for r in reports),
        "skipped": sum(r.status == "skipped" for r in reports),
        "total": len(reports),
    }
    return reports, summary
