"""Base ring layer: configs, canonical elements, exact pi-division."""

import pytest
from hypothesis import given, settings, strategies as st

from wittlab.errors import (
    BadFrobeniusLift,
    NonDivisible,
    RejectedModulus,
    TorsionBase,
    WittlabError,
)
from wittlab.rings import Frac, make_ring_config


Z2 = make_ring_config({"p": 2})
Z3 = make_ring_config({"p": 3})
RAM5 = make_ring_config({"p": 5, "modulus": [-5, 0, 1]})


# ----------------------------------------------------------------------
# config validation


def test_p_must_be_prime():
    with pytest.raises(WittlabError):
        make_ring_config({"p": 6})


@pytest.mark.parametrize("modulus", [
    [-5, 0, 2],      # not monic
    [-3, 0, 1],      # constant term not divisible by 5
    [-25, 0, 1],     # p^2 divides constant term
    [0, -5, 1],      # middle coefficient not divisible by p... zero const
])
def test_eisenstein_rejection(modulus):
    with pytest.raises(RejectedModulus):
        make_ring_config({"p": 5, "modulus": modulus})


def test_ramification_index():
    assert Z2.e == 1
    assert RAM5.e == 2
    assert RAM5.psi_integral          # e=2 <= p-2=3
    assert not Z2.psi_integral        # e=1 > p-2=0
    assert Z3.psi_integral


def test_bad_phi_lift_rejected():
    # phi(pi) = pi + 1 is not congruent to pi^q mod pi
    with pytest.raises(BadFrobeniusLift):
        make_ring_config({"p": 5, "modulus": [-5, 0, 1],
                          "phi_pi": [1, 1]})


def test_valid_phi_lift_accepted():
    # phi(pi) = -pi also satisfies f(phi(pi)) = 0 and -pi = pi^5 mod pi
    cfg = make_ring_config({"p": 5, "modulus": [-5, 0, 1],
                            "phi_pi": [0, -1]})
    pi = cfg.pi_elem()
    assert pi.phi() == -pi


# ----------------------------------------------------------------------
# arithmetic in the order Z[x]/(x^2-5)


def test_order_arithmetic():
    pi = RAM5.pi_elem()
    a = RAM5.from_coeff([2, 3])       # 2 + 3 pi
    assert a * a == RAM5.from_coeff([49, 12])    # 4 + 12 pi + 9 pi^2
    assert pi * pi == RAM5.from_int(5)
    assert (a - a).is_zero()


def test_exact_div_pi():
    pi = RAM5.pi_elem()
    a = RAM5.from_coeff([10, 3])      # 10 + 3 pi = pi(3 + 2 pi)
    assert a.div_pi() == RAM5.from_coeff([3, 2])
    with pytest.raises(NonDivisible):
        RAM5.from_coeff([1, 0]).div_pi()
    # integers: division by pi is division by p
    assert Z2.from_int(6).div_pi() == Z2.from_int(3)
    with pytest.raises(NonDivisible):
        Z2.from_int(3).div_pi()


def test_pi_valuation():
    assert Z2.from_int(8).pi_val() == 3
    assert RAM5.from_int(5).pi_val() == 2
    assert RAM5.pi_elem().pi_val() == 1
    assert RAM5.from_coeff([5, 1]).pi_val() == 1


def test_phi_on_order():
    # default phi fixes pi and raises polynomial variables to the q-th power
    pi = RAM5.pi_elem()
    assert pi.phi() == pi
    sym = RAM5.adjoin(["t"])
    t = sym.var("t")
    assert t.phi() == t ** 5
    assert (t + sym.one()).phi() == t ** 5 + sym.one()


# ----------------------------------------------------------------------
# truncations


def test_truncated_reduction():
    B = Z2.truncated(4)
    assert B.from_int(16).is_zero()
    assert B.from_int(17) == B.from_int(1)
    assert B.from_int(-1) == B.from_int(15)


def test_truncated_order_reduction():
    B = RAM5.truncated(3)
    # pi^3 = 5 pi = 0 in R/pi^3
    pi = B.pi_elem()
    assert (pi * pi * pi).is_zero()
    assert B.from_int(25).is_zero()   # v(25) = 4 >= 3
    assert not B.from_int(5).is_zero()


def test_truncated_refuses_exact_ops():
    B = Z2.truncated(3)
    with pytest.raises(TorsionBase):
        B.from_int(2).pi_val()


def test_convert_roundtrip():
    B = Z2.truncated(4)
    x = Z2.from_int(13)
    assert Z2.convert(B.convert(x)) == x
    sym = Z2.adjoin(["a", "b"])
    y = sym.var("a") * sym.var("b") + sym.from_int(3)
    assert sym.convert(y) is y


# ----------------------------------------------------------------------
# polynomials


def test_polynomial_arithmetic():
    sym = Z2.adjoin(["x", "y"])
    x, y = sym.var("x"), sym.var("y")
    assert (x + y) ** 2 == x ** 2 + 2 * x * y + y ** 2
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    p = x ** 2 * y + sym.from_int(3)
    assert p.total_degree() == 3
    assert p.truncate_degree(2) == sym.from_int(3)


def test_substitution():
    sym = Z2.adjoin(["x", "y"])
    x, y = sym.var("x"), sym.var("y")
    p = x ** 2 + y
    assert p.substitute({"x": Z2.from_int(3), "y": Z2.from_int(4)},
                        Z2) == Z2.from_int(13)


@settings(max_examples=50, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50),
       st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_order_ring_axioms(a0, a1, b0, b1, c0, c1):
    a = RAM5.from_coeff([a0, a1])
    b = RAM5.from_coeff([b0, b1])
    c = RAM5.from_coeff([c0, c1])
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# ----------------------------------------------------------------------
# fractions (logarithm coefficient stream only)


def test_frac_normalization():
    half = Frac(Z2.from_int(2), 4)
    assert half == Frac(Z2.from_int(1), 2)
    assert not half.is_integral()
    assert Frac(Z2.from_int(4), 2).is_integral()
    assert Frac(Z2.from_int(4), 2).as_element() == Z2.from_int(2)


def test_frac_arithmetic():
    a = Frac(Z2.from_int(1), 2)
    b = Frac(Z2.from_int(1), 3)
    assert a + b == Frac(Z2.from_int(5), 6)
    assert a * b == Frac(Z2.from_int(1), 6)
    assert (a - a).num.is_zero()


def test_frac_valuation():
    assert Frac(Z2.from_int(4), 1).pi_val() == 2
    assert Frac(Z2.from_int(1), 2).pi_val() == -1
    assert Frac(RAM5.from_int(1), 5).pi_val() == -2
