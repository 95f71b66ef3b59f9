from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from sylvester.fields import MERSENNE_61, prime_field
from sylvester.poly import ZERO_DEGREE, Polynomial, poly_divrem, poly_eval, poly_mul, vieta_from_roots
from sylvester.symfun import e_bruteforce

FM = prime_field()
X = sympy.Symbol("X")


def P(*coeffs):
    return Polynomial([Fraction(c) for c in coeffs])


def to_sympy(poly):
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(poly.coeffs)]
    return sympy.Poly(coeffs or [0], X, domain="QQ")


fm_polys = st.lists(st.integers(0, MERSENNE_61 - 1), max_size=7).map(lambda cs: Polynomial([FM(c) for c in cs]))
small_polys = st.lists(st.integers(-9, 9), max_size=6).map(lambda cs: P(*cs))


def test_mul_examples():
    assert P(1, 1) * P(-1, 1) == P(-1, 0, 1)
    assert P(2, -3, 1) * P(1) == P(2, -3, 1)
    assert P(3, 1) * P(2, -3, 1) == P(6, -7, 0, 1)


def test_mul_matches_sympy():
    a, b = P(3, 1), P(2, -3, 1)
    expected = sympy.Poly((X + 3) * (X**2 - 3 * X + 2), X, domain="QQ")
    assert to_sympy(a * b) == expected


def test_divrem_examples():
    q, r = poly_divrem(P(0, 0, 0, 1), P(2, -3, 1))
    assert (q, r) == (P(3, 1), P(-6, 7))
    assert q * P(2, -3, 1) + r == P(0, 0, 0, 1)

    q, r = poly_divrem(P(0, 1), P(0, 0, 1))
    assert q.is_zero() and r == P(0, 1)

    q, r = poly_divrem(P(2, -3, 1), P(-1, 1))
    assert q == P(-2, 1) and r.is_zero()


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divrem(P(1, 2), Polynomial())


@given(small_polys, small_polys)
def test_divrem_matches_sympy(a, b):
    if b.is_zero():
        return
    q, r = poly_divrem(a, b)
    sq, sr = sympy.div(to_sympy(a), to_sympy(b), domain="QQ")
    assert to_sympy(q) == sq and to_sympy(r) == sr


@given(fm_polys, fm_polys)
def test_divrem_round_trip_mod_p(a, b):
    if b.is_zero():
        return
    q, r = poly_divrem(a, b)
    assert poly_mul(q, b) + r == a
    assert r.degree < b.degree


def test_eval_examples():
    assert poly_eval(P(-6, 7), Fraction(1)) == 1
    assert poly_eval(P(-6, 7), Fraction(2)) == 8
    assert poly_eval(Polynomial(), Fraction(5)) == 0
    assert poly_eval(Polynomial(), FM(5)) == FM.zero


@given(fm_polys, fm_polys, st.integers(0, MERSENNE_61 - 1))
def test_eval_is_multiplicative(a, b, x):
    x = FM(x)
    assert poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x)
    assert poly_eval(a + b, x) == poly_eval(a, x) + poly_eval(b, x)


def test_vieta_examples():
    assert vieta_from_roots([Fraction(1), Fraction(2)]) == P(2, -3, 1)
    assert vieta_from_roots([]) == P(1)
    assert vieta_from_roots([Fraction(v) for v in (1, 2, 3)]) == P(-6, 11, -6, 1)


@given(st.lists(st.integers(0, MERSENNE_61 - 1), min_size=0, max_size=7))
def test_vieta_coefficients_are_signed_elementary(raw):
    roots = [FM(r) for r in raw]
    poly = vieta_from_roots(roots, one=FM.one)
    n = len(roots)
    assert poly.degree == n and poly.coeffs[-1] == 1
    for k in range(n + 1):
        assert poly.coeffs[n - k] == (-1) ** k * e_bruteforce(k, roots, one=FM.one)
    for x in roots:
        assert poly_eval(poly, x) == 0


def test_zero_polynomial_degree_is_sentinel():
    zero = Polynomial([Fraction(0), Fraction(0)])
    assert zero.coeffs == () and zero.degree == ZERO_DEGREE
    assert zero.degree < 0 and zero.degree + 5 == ZERO_DEGREE
    assert P(7).degree == 0


def test_monomial_and_padding():
    assert Polynomial.monomial(3) == P(0, 0, 0, 1)
    assert P(1, 2).padded(4) == (1, 2, 0, 0)
    assert Polynomial.monomial(2, FM.one).coeffs[-1] == FM.one
