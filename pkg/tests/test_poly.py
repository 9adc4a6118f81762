import pytest
from hypothesis import given, settings, strategies as st

from gccodes.field import field_build
from gccodes.poly import (
    Polynomial,
    coefficients_in_subfield,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_lcm,
    poly_mod_xn_minus_1,
    poly_psi,
    poly_reciprocal,
    poly_sigma,
)

F2 = field_build(2, 1)
F4 = field_build(2, 2)
W, W2 = 2, 3  # omega and omega^2 = omega + 1 in GF(4)


def P(F, *coeffs):
    return Polynomial(F, tuple(coeffs))


def test_normalization_and_degree():
    assert P(F4, 1, 0, 0).degree == 0
    assert P(F4).degree is None
    assert P(F4, 0, 0).is_zero


def test_gcd_examples():
    assert poly_gcd(P(F2, 1, 0, 0, 1), P(F2, 1, 1)) == P(F2, 1, 1)
    assert poly_gcd(P(F4, W, 1), P(F4, W2, 1)) == Polynomial.one(F4)
    assert poly_lcm(P(F4, W, 1), P(F4, W2, 1)) == P(F4, 1, 1, 1)


def test_gcd_of_zeros_rejected():
    with pytest.raises(ValueError):
        poly_gcd(Polynomial.zero(F4), Polynomial.zero(F4))


def test_psi_examples():
    assert poly_psi(P(F4, 1, 1, 0, 1), 2).is_zero
    assert poly_psi(P(F4, 0, W), 2) == P(F4, 0, 1)


def test_reciprocal_examples():
    assert poly_reciprocal(P(F4, W, 1)) == P(F4, 1, W)
    assert poly_reciprocal(P(F4, 1, 1, 1)) == P(F4, 1, 1, 1)


def test_mod_and_eval():
    assert poly_mod_xn_minus_1(Polynomial.monomial(F4, 5), 3) == Polynomial.monomial(F4, 2)
    assert poly_eval(P(F4, 1, 1, 1), F4(W)) == F4.zero
    f = P(F4, W, 1, W2, 1)
    total = F4.zero
    for c in f.elements():
        total = total + c
    assert poly_eval(f, F4.one) == total


def test_subfield_coefficients():
    assert coefficients_in_subfield(P(F4, 1, 0, 1), 1)
    assert not coefficients_in_subfield(P(F4, W, 1), 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(P(F4, 1, 1), Polynomial.zero(F4))


F8 = field_build(2, 3)
polys8 = st.lists(st.integers(0, 7), min_size=0, max_size=7).map(lambda c: Polynomial(F8, tuple(c)))
nonzero8 = polys8.filter(lambda f: not f.is_zero)


@settings(max_examples=150, deadline=None)
@given(polys8, nonzero8)
def test_divmod_identity(f, g):
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero or r.degree < g.degree


@settings(max_examples=150, deadline=None)
@given(nonzero8, nonzero8, nonzero8)
def test_gcd_is_greatest_common_divisor(f, g, h):
    d = poly_gcd(f, g)
    assert (f % d).is_zero and (g % d).is_zero
    # a common factor h survives into the gcd
    assert (poly_gcd(f * h, g * h) % h.monic()).is_zero
    L = poly_lcm(f, g)
    assert L * d == (f * g).monic()


@settings(max_examples=100, deadline=None)
@given(polys8, polys8)
def test_psi_linear_and_sigma_order(f, g):
    assert poly_psi(f + g, 2) == poly_psi(f, 2) + poly_psi(g, 2)
    assert poly_sigma(f, 2, 3) == f


@settings(max_examples=100, deadline=None)
@given(nonzero8)
def test_reciprocal_involution(f):
    if f.coeffs[0]:
        assert poly_reciprocal(poly_reciprocal(f)) == f
