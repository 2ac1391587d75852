"""Exact arithmetic for the base rings everything else is generic over.

Supported rings: the integers with pi = p; monogenic orders Z[x]/(f) with f
monic and Eisenstein at p, uniformized by the class of x; multivariate
polynomial extensions of either (for symbolic verification); and pi-power
truncations R/pi^N.  Elements are kept in a canonical form so equality is a
representation comparison.
"""

from __future__ import annotations

import math

from .errors import (
    BadFrobeniusLift,
    DuplicateName,
    InternalError,
    NonDivisible,
    RejectedModulus,
    TorsionBase,
    WittlabError,
)

INFINITY = math.inf


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class RingConfig:
    """Immutable description of one arithmetic context.

    Coefficients of the underlying order are stored as integer tuples of
    length ``d`` in the power basis of pi; polynomial elements map exponent
    tuples (one slot per adjoined variable) to such coefficients.
    """

    def __init__(self, p, modulus=None, phi_pi=None, trunc=0, variables=()):
        if not isinstance(p, int) or not _is_prime(p):
            raise RejectedModulus(f"p={p!r} is not a prime integer")
        self.p = p
        self.q = p
        if modulus is not None:
            modulus = tuple(int(c) for c in modulus)
            self._check_modulus(p, modulus)
            self.d = len(modulus) - 1
        else:
            self.d = 1
        self.modulus = modulus
        trunc = int(trunc)
        if trunc < 0:
            raise WittlabError("truncation exponent must be >= 0")
        self.trunc = trunc
        variables = tuple(str(v) for v in variables)
        if len(set(variables)) != len(variables):
            raise DuplicateName(f"duplicate adjoined variable in {variables}")
        self.vars = variables
        self.nvars = len(variables)
        if phi_pi is not None:
            if modulus is None:
                raise BadFrobeniusLift("phi_pi only applies to order configs")
            phi_pi = tuple(int(c) for c in phi_pi)
            if len(phi_pi) != self.d:
                raise BadFrobeniusLift("phi_pi must have d coordinates")
            if phi_pi == self._pi_coeff():
                phi_pi = None
        self.phi_pi = phi_pi
        self.torsion_free = self.trunc == 0
        self._hnf = self._compute_hnf() if self.trunc else None
        self.e = self._compute_e()
        self.psi_integral = self.e <= p - 2
        self._validate_phi()
        self.key = (self.p, self.modulus, self.phi_pi, self.trunc, self.vars)
        self.base_key = (self.p, self.modulus, self.phi_pi)

    @staticmethod
    def _check_modulus(p, modulus):
        d = len(modulus) - 1
        if d < 2:
            raise RejectedModulus("modulus must have degree >= 2")
        if modulus[-1] != 1:
            raise RejectedModulus("modulus must be monic")
        for c in modulus[:-1]:
            if c % p != 0:
                raise RejectedModulus(
                    f"modulus {modulus} is not Eisenstein at {p}")
        if modulus[0] % (p * p) == 0:
            raise RejectedModulus(
                f"constant term of {modulus} is divisible by {p}^2")

    # ------------------------------------------------------------------
    # coefficient arithmetic (integer tuples of length d, power basis of pi)

    def czero(self):
        return (0,) * self.d

    def cone(self):
        return (1,) + (0,) * (self.d - 1)

    def cfrom_int(self, n):
        return (int(n),) + (0,) * (self.d - 1)

    def _pi_coeff(self):
        if self.modulus is None:
            return (self.p,)
        return (0, 1) + (0,) * (self.d - 2)

    def cadd(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def csub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def cneg(self, a):
        return tuple(-x for x in a)

    def cmulint(self, a, k):
        return tuple(x * k for x in a)

    def cmul(self, a, b):
        d = self.d
        if d == 1:
            return (a[0] * b[0],)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        mod = self.modulus
        for k in range(2 * d - 2, d - 1, -1):
            t = conv[k]
            if t:
                conv[k] = 0
                for j in range(d):
                    conv[k - d + j] -= t * mod[j]
        return tuple(conv[:d])

    def cphi(self, a):
        if self.phi_pi is None:
            return a
        res = self.czero()
        for c in reversed(a):
            res = self.cmul(res, self.phi_pi)
            res = self.cadd(res, self.cfrom_int(c))
        return res

    def cdivpi(self, a):
        if not self.torsion_free:
            raise TorsionBase("exact division by pi needs an exact config")
        if self.d == 1:
            q, r = divmod(a[0], self.p)
            if r:
                raise NonDivisible(f"integer not divisible by {self.p}")
            return (q,)
        c0 = self.modulus[0]
        q, r = divmod(a[0], c0)
        if r:
            raise NonDivisible("coefficient not divisible by pi")
        t = -q
        b = [0] * self.d
        b[self.d - 1] = t
        for j in range(1, self.d):
            b[j - 1] = a[j] + t * self.modulus[j]
        return tuple(b)

    def cdivint(self, a, k):
        out = []
        for x in a:
            q, r = divmod(x, k)
            if r:
                raise NonDivisible(f"coefficient not divisible by {k}")
            out.append(q)
        return tuple(out)

    def cval(self, a):
        """pi-adic valuation of a coefficient; INFINITY for zero."""
        if not any(a):
            return INFINITY
        v = 0
        while True:
            try:
                a = self.cdivpi(a)
            except NonDivisible:
                return v
            v += 1

    def _compute_e(self):
        if self.modulus is None:
            return 1
        probe = RingConfig(self.p, self.modulus) if self.trunc else self
        e = probe.cval(probe.cfrom_int(self.p))
        if e is INFINITY or e < 1:
            raise RejectedModulus("p has no positive finite pi-valuation")
        return e

    def _compute_hnf(self):
        """Triangular basis of the lattice pi^N * R inside Z^d."""
        d = self.d
        exact = RingConfig(self.p, self.modulus) if self.modulus else None
        cmul = exact.cmul if exact else self.cmul
        pi = self._pi_coeff()
        row = self.cone()
        for _ in range(self.trunc):
            row = cmul(row, pi)
        mat = []
        for _ in range(d):
            mat.append(list(row))
            row = cmul(row, pi)
        for col in range(d):
            while True:
                nz = [i for i in range(col, d) if mat[i][col] != 0]
                if not nz:
                    raise InternalError("pi^N lattice is not full rank")
                if len(nz) == 1:
                    break
                nz.sort(key=lambda i: abs(mat[i][col]))
                base = nz[0]
                for i in nz[1:]:
                    qq = mat[i][col] // mat[base][col]
                    mat[i] = [x - qq * y for x, y in zip(mat[i], mat[base])]
            base = nz[0]
            mat[col], mat[base] = mat[base], mat[col]
            if mat[col][col] < 0:
                mat[col] = [-x for x in mat[col]]
            for i in range(col):
                qq = mat[i][col] // mat[col][col]
                if qq:
                    mat[i] = [x - qq * y for x, y in zip(mat[i], mat[col])]
        return [tuple(r) for r in mat]

    def creduce(self, a):
        if self._hnf is None:
            return a
        v = list(a)
        for i in range(self.d):
            qq = v[i] // self._hnf[i][i]
            if qq:
                v = [x - qq * y for x, y in zip(v, self._hnf[i])]
        return tuple(v)

    def _validate_phi(self):
        if self.modulus is None:
            return
        probe = self if self.torsion_free else RingConfig(self.p, self.modulus)
        if self.phi_pi is not None:
            # phi must be a well defined endomorphism: f(phi(pi)) = 0.
            acc = probe.czero()
            for c in reversed(self.modulus):
                acc = probe.cmul(acc, self.phi_pi)
                acc = probe.cadd(acc, probe.cfrom_int(c))
            if any(acc):
                raise BadFrobeniusLift(
                    "phi_pi is not a root of the defining modulus")
            img = self.phi_pi
        else:
            img = probe._pi_coeff()
        # Frobenius-lift congruence on the generator: phi(pi) = pi^q mod pi.
        power = probe.cone()
        for _ in range(self.q):
            power = probe.cmul(power, probe._pi_coeff())
        diff = probe.csub(img, power)
        if probe.cval(diff) < 1:
            raise BadFrobeniusLift("phi(pi) is not congruent to pi^q mod pi")

    # ------------------------------------------------------------------
    # element constructors

    def _make(self, terms):
        """Canonicalize a raw {exponent tuple: coeff tuple} dict."""
        if self._hnf is not None:
            terms = {m: self.creduce(c) for m, c in terms.items()}
        terms = {m: c for m, c in terms.items() if any(c)}
        return RingElement(self, terms)

    def zero(self):
        return RingElement(self, {})

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        return self._make({(0,) * self.nvars: self.cfrom_int(n)})

    def from_coeff(self, coeff):
        coeff = tuple(int(c) for c in coeff)
        if len(coeff) != self.d:
            raise WittlabError(f"coefficient needs {self.d} coordinates")
        return self._make({(0,) * self.nvars: coeff})

    def pi_elem(self):
        return self._make({(0,) * self.nvars: self._pi_coeff()})

    def var(self, name):
        if name not in self.vars:
            raise WittlabError(f"unknown variable {name!r}")
        mono = tuple(1 if v == name else 0 for v in self.vars)
        return self._make({mono: self.cone()})

    # ------------------------------------------------------------------
    # derived configs and coercion

    def adjoin(self, names):
        return _config(self.p, self.modulus, self.phi_pi, self.trunc,
                       self.vars + tuple(names))

    def truncated(self, n):
        return _config(self.p, self.modulus, self.phi_pi, n, self.vars)

    def exact_cover(self):
        if self.torsion_free:
            return self
        return _config(self.p, self.modulus, self.phi_pi, 0, self.vars)

    def base_exact(self):
        return _config(self.p, self.modulus, self.phi_pi, 0, ())

    def compatible(self, other):
        return self.base_key == other.base_key

    def convert(self, elem):
        """Map an element of a compatible config into this one.

        Exact-to-truncated is the quotient map; truncated-to-exact is the
        canonical set-theoretic lift.  The source's variables must all be
        present here.
        """
        src = elem.cfg
        if src is self:
            return elem
        if not self.compatible(src):
            raise BaseMismatchError(src, self)
        positions = []
        for v in src.vars:
            if v not in self.vars:
                raise WittlabError(
                    f"variable {v!r} is absent from the target config")
            positions.append(self.vars.index(v))
        terms = {}
        for mono, coeff in elem.terms.items():
            new = [0] * self.nvars
            for pos, exp in zip(positions, mono):
                new[pos] = exp
            terms[tuple(new)] = coeff
        return self._make(terms)

    # ------------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, RingConfig) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        bits = [f"p={self.p}"]
        if self.modulus is not None:
            bits.append(f"modulus={list(self.modulus)}")
        if self.trunc:
            bits.append(f"trunc={self.trunc}")
        if self.vars:
            bits.append(f"vars={list(self.vars)}")
        return f"RingConfig({', '.join(bits)})"


def BaseMismatchError(src, dst):
    from .errors import BaseMismatch
    return BaseMismatch(f"cannot coerce between {src!r} and {dst!r}")


_CONFIG_CACHE = {}


def _config(p, modulus, phi_pi, trunc, variables):
    key = (p, modulus, phi_pi, trunc, tuple(variables))
    cfg = _CONFIG_CACHE.get(key)
    if cfg is None:
        cfg = RingConfig(p, modulus, phi_pi, trunc, variables)
        _CONFIG_CACHE[key] = cfg
    return cfg


class RingElement:
    """Canonical multivariate polynomial over the config's order."""

    __slots__ = ("cfg", "terms", "_hash")

    def __init__(self, cfg, terms):
        self.cfg = cfg
        self.terms = terms
        self._hash = None

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def const_coeff(self):
        zero_mono = (0,) * self.cfg.nvars
        return self.terms.get(zero_mono, self.cfg.czero())

    def to_int(self):
        if self.cfg.d != 1 or not self.is_constant():
            raise WittlabError(f"{self!r} is not an integer constant")
        return self.const_coeff()[0]

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.cfg is self.cfg or other.cfg == self.cfg:
                return other
            raise BaseMismatchError(other.cfg, self.cfg)
        if isinstance(other, int):
            return self.cfg.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        cfg = self.cfg
        terms = dict(self.terms)
        for m, c in other.terms.items():
            prev = terms.get(m)
            terms[m] = cfg.cadd(prev, c) if prev is not None else c
        return cfg._make(terms)

    __radd__ = __add__

    def __neg__(self):
        cfg = self.cfg
        return cfg._make({m: cfg.cneg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        cfg = self.cfg
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                prod = cfg.cmul(ca, cb)
                prev = out.get(mono)
                out[mono] = cfg.cadd(prev, prod) if prev is not None else prod
        return cfg._make(out)

    __rmul__ = __mul__

    def __pow__(self, exp):
        if not isinstance(exp, int) or exp < 0:
            raise WittlabError("exponent must be a nonnegative integer")
        result = self.cfg.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base_needed = exp >> 1
            if base_needed:
                base = base * base
            exp = base_needed
        return result

    # -- ring-specific operations --------------------------------------

    def phi(self):
        """Apply the configured Frobenius lift (variables go to q-th powers)."""
        cfg = self.cfg
        q = cfg.q
        terms = {}
        for m, c in self.terms.items():
            terms[tuple(e * q for e in m)] = cfg.cphi(c)
        return cfg._make(terms)

    def phi_power(self, k):
        out = self
        for _ in range(k):
            out = out.phi()
        return out

    def div_pi(self):
        cfg = self.cfg
        return cfg._make({m: cfg.cdivpi(c) for m, c in self.terms.items()})

    def div_int(self, k):
        cfg = self.cfg
        return cfg._make({m: cfg.cdivint(c, k) for m, c in self.terms.items()})

    def pi_val(self):
        if not self.cfg.torsion_free:
            raise TorsionBase("valuation needs an exact config")
        if not self.terms:
            return INFINITY
        return min(self.cfg.cval(c) for c in self.terms.values())

    def truncate_degree(self, max_deg):
        terms = {m: c for m, c in self.terms.items() if sum(m) <= max_deg}
        return self.cfg._make(terms)

    def substitute(self, values, target_cfg=None):
        """Evaluate at ``values`` (a name -> element mapping).

        Unmapped variables must exist in the target config and are kept.
        """
        cfg = self.cfg
        if target_cfg is None:
            sample = next(iter(values.values()), None)
            target_cfg = sample.cfg if sample is not None else cfg
        images = []
        for name in cfg.vars:
            if name in values:
                images.append(target_cfg.convert(values[name])
                              if values[name].cfg is not target_cfg
                              else values[name])
            else:
                images.append(target_cfg.var(name))
        result = target_cfg.zero()
        pow_cache = [dict() for _ in images]
        for mono, coeff in self.terms.items():
            term = target_cfg.from_coeff(coeff)
            for i, e in enumerate(mono):
                if e:
                    cached = pow_cache[i].get(e)
                    if cached is None:
                        cached = images[i] ** e
                        pow_cache[i][e] = cached
                    term = term * cached
            result = result + term
        return result

    # -- dunder plumbing -----------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.cfg.from_int(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.cfg == other.cfg and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cfg.key, tuple(self._sorted_terms())))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono, coeff in self._sorted_terms():
            if self.cfg.d == 1:
                cs = str(coeff[0])
            else:
                cs = "(" + "+".join(
                    f"{c}*pi^{i}" if i else str(c)
                    for i, c in enumerate(coeff) if c) + ")"
            vs = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.cfg.vars, mono) if e)
            bits.append(cs + ("*" + vs if vs else ""))
        return " + ".join(bits)


class Frac:
    """Numerator/denominator pair with a positive integer denominator.

    Only used for formal-group logarithm coefficient streams; these values
    never enter Witt-vector components.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if den == 0:
            raise WittlabError("zero denominator")
        if den < 0:
            num, den = -num, -den
        if den != 1 and num.terms:
            g = den
            for coeff in num.terms.values():
                for c in coeff:
                    g = math.gcd(g, c)
            if g > 1:
                num = num.div_int(g)
                den //= g
        if not num.terms:
            den = 1
        self.num = num
        self.den = den

    @property
    def cfg(self):
        return self.num.cfg

    def __add__(self, other):
        other = self._coerce(other)
        return Frac(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return Frac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, Frac):
            return other
        if isinstance(other, RingElement):
            return Frac(other)
        if isinstance(other, int):
            return Frac(self.cfg.from_int(other))
        raise WittlabError(f"cannot coerce {other!r} to Frac")

    def pi_val(self):
        den_val = self.cfg.from_int(self.den).pi_val()
        return self.num.pi_val() - den_val

    def is_integral(self):
        try:
            self.num.div_int(self.den)
        except NonDivisible:
            return False
        return True

    def as_element(self):
        return self.num.div_int(self.den)

    def __eq__(self, other):
        if not isinstance(other, Frac):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        return f"({self.num!r})/{self.den}"


# ----------------------------------------------------------------------
# config construction


def make_ring_config(spec):
    """Build a validated config from a plain description dict.

    Keys: ``p`` (required), ``modulus`` (coefficient list, lowest first,
    or None), ``phi_pi`` ("pi" or a coefficient list), ``trunc`` (int,
    0 = exact), ``vars`` (list of names).
    """
    p = spec["p"]
    modulus = spec.get("modulus")
    phi_pi = spec.get("phi_pi", "pi")
    if phi_pi == "pi":
        phi_pi = None
    trunc = spec.get("trunc", 0)
    variables = tuple(spec.get("vars", ()))
    return _config(p, tuple(modulus) if modulus else None,
                   tuple(phi_pi) if phi_pi else None, trunc, variables)


def exact_div_pi(a):
    return a.div_pi()


def pi_valuation(a):
    return a.pi_val()


def phi_apply(a):
    return a.phi()


def c_pi(x, y):
    """Universal carry term (x^q + y^q - (x+y)^q) / pi."""
    q = x.cfg.q
    try:
        return (x ** q + y ** q - (x + y) ** q).div_pi()
    except NonDivisible as exc:  # pragma: no cover - binomial divisibility
        raise InternalError(f"carry term not divisible by pi: {exc}")


def adjoin_variables(cfg, names):
    return cfg.adjoin(names)


def reduce_mod(a, n):
    if n <= 0:
        raise WittlabError("truncation exponent must be positive")
    return a.cfg.truncated(n).convert(a)
