from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sylvester.fields import (
    FLOAT64,
    MERSENNE_61,
    RATIONAL,
    FieldConfig,
    NotInvertibleError,
    PrimeField,
    PrimeFieldElement,
    field_from_label,
    field_inverse,
    field_of,
    field_pow,
    is_prime,
    prime_field,
    rat_normalize,
)

F7 = PrimeField(7)
FM = prime_field()

small_fracs = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 30))
residues = st.integers(0, MERSENNE_61 - 1).map(lambda r: PrimeFieldElement(r, MERSENNE_61))


@pytest.mark.parametrize(
    "num, den, expected",
    [(6, -4, (-3, 2)), (0, 7, (0, 1)), (21, 14, (3, 2)), (-5, -10, (1, 2))],
)
def test_rat_normalize(num, den, expected):
    r = rat_normalize(num, den)
    assert (r.numerator, r.denominator) == expected
    assert r.denominator > 0


def test_rat_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_normalize(3, 0)


def test_field_inverse_examples():
    assert field_inverse(Fraction(3, 2)) == Fraction(2, 3)
    assert field_inverse(Fraction(1)) == 1
    inv3 = field_inverse(F7(3))
    assert inv3 == 5
    # direct check: 3 * 5 = 15 = 2*7 + 1
    assert (3 * 5) % 7 == 1


@pytest.mark.parametrize("zero", [Fraction(0), F7(0), FM(0), 0.0])
def test_field_inverse_of_zero(zero):
    with pytest.raises(NotInvertibleError):
        field_inverse(zero)


def test_field_pow_examples():
    assert field_pow(Fraction(2), 10) == 1024
    assert field_pow(Fraction(0), 0) == 1
    assert field_pow(F7(0), 0) == 1
    acc = 1
    for _ in range(6):
        acc = acc * 3 % 7
    assert acc == 1
    assert field_pow(F7(3), 6) == 1


def test_field_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        field_pow(Fraction(2), -1)


@given(st.integers(0, 200), st.integers(0, 6))
def test_field_pow_matches_repeated_multiplication(base, k):
    x = FM(base)
    expected = FM.one
    for _ in range(k):
        expected = expected * x
    assert field_pow(x, k) == expected
    assert field_pow(Fraction(base, 3), k) == Fraction(base, 3) ** k


def test_primality():
    assert is_prime(MERSENNE_61)
    assert is_prime(7) and is_prime(2**31 - 1)
    assert not is_prime(1) and not is_prime(561) and not is_prime(2**61 + 1)
    brute = [q for q in range(2, 400) if all(q % r for r in range(2, q))]
    assert [q for q in range(400) if is_prime(q)] == brute


@pytest.mark.parametrize("p", [2, 4, 9, 561])
def test_prime_field_rejects_bad_modulus(p):
    with pytest.raises(ValueError):
        PrimeField(p)


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        F7(1) + PrimeField(11)(1)


@given(residues, residues, residues)
def test_prime_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    assert a - b == a + (-b)
    if a:
        assert a * field_inverse(a) == 1
        assert (b / a) * a == b


@given(small_fracs, small_fracs, small_fracs)
def test_rational_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a:
        assert a * field_inverse(a) == 1


@given(st.floats(-10, 10), st.floats(-10, 10))
def test_float_adapter_is_commutative(a, b):
    assert a + b == b + a and a * b == b * a


@given(st.integers(-99, 99), st.integers(1, 99), st.integers(-99, 99), st.integers(1, 99))
def test_rational_addition_round_trip(a, b, c, d):
    assert rat_normalize(a * d + c * b, b * d) == Fraction(a, b) + Fraction(c, d)


@given(small_fracs, small_fracs)
def test_reduction_mod_p_is_a_homomorphism(a, b):
    # denominators <= 30 are units mod 2^61 - 1
    assert FM(a + b) == FM(a) + FM(b)
    assert FM(a * b) == FM(a) * FM(b)
    if a:
        assert FM(1 / a) == field_inverse(FM(a))


def test_reduction_of_non_unit_denominator_fails():
    with pytest.raises(NotInvertibleError):
        F7(Fraction(1, 14))


def test_field_inference_and_labels():
    assert field_of(Fraction(1, 2)) is RATIONAL
    assert field_of(3) is RATIONAL
    assert field_of(2.5) is FLOAT64
    assert field_of(F7(3)) == F7
    for fld in (RATIONAL, FLOAT64, F7, FM):
        assert field_from_label(fld.label) == fld


@pytest.mark.parametrize("fld", [RATIONAL, F7, FM])
@pytest.mark.parametrize("text", ["3", "-4", "5/3"])
def test_format_parse_round_trip(fld, text):
    x = fld.parse(text)
    assert fld.parse(fld.format(x)) == x


def test_rational_format():
    assert RATIONAL.format(Fraction(7)) == "7"
    assert RATIONAL.format(Fraction(-3, 2)) == "-3/2"


def test_field_config():
    assert FieldConfig().build() is RATIONAL
    assert FieldConfig("prime").p == MERSENNE_61
    assert FieldConfig("prime", 7).build() == F7
    with pytest.raises(ValueError):
        FieldConfig("prime", 15)
    with pytest.raises(ValueError):
        FieldConfig("rational", 7)
    with pytest.raises(ValueError):
        FieldConfig("prime", 7).check_nodes(7)
    FieldConfig("prime", 7).check_nodes(6)
