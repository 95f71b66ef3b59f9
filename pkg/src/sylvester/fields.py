"""Field realizations shared by every other module.

Three fields are provided:

* ``RationalField`` -- exact rationals, backed by :class:`fractions.Fraction`.
* ``PrimeField(p)`` -- residues modulo an odd prime ``p``.
* ``Float64Field`` -- IEEE doubles; same interface, never used for exact
  equality checks.

Elements are plain Python values where possible (``Fraction``, ``float``) and
:class:`PrimeFieldElement` for F_p. All of them support ``+ - * /``, unary
minus, integer powers and mixing with Python ints, so polynomial and
symmetric-function code is written once against the operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from numbers import Rational as _RationalABC

MERSENNE_61 = (1 << 61) - 1


class NotInvertibleError(ZeroDivisionError):
    """Raised when inverting the zero element of a field."""


def rat_normalize(num: int, den: int) -> Fraction:
    """Return the reduced fraction ``num/den`` with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError(f"rational with zero denominator: {num}/0")
    return Fraction(num, den)


# Deterministic Miller-Rabin: these bases are exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= _MR_LIMIT:
        raise ValueError(f"primality of {n} cannot be decided deterministically here")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeFieldElement:
    """A residue modulo ``p``. The modulus travels with the value."""

    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int):
        self.residue = residue % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p} elements")
            return other.residue
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, _RationalABC):
            den = other.denominator % self.p
            if den == 0:
                raise NotInvertibleError(f"denominator of {other} vanishes mod {self.p}")
            return other.numerator * pow(den, -1, self.p) % self.p
        return None

    def __add__(self, other):
        r = self._lift(other)
        if r is None:
            return NotImplemented
        return PrimeFieldElement(self.residue + r, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._lift(other)
        if r is None:
            return NotImplemented
        return PrimeFieldElement(self.residue - r, self.p)

    def __rsub__(self, other):
        r = self._lift(other)
        if r is None:
            return NotImplemented
        return PrimeFieldElement(r - self.residue, self.p)

    def __mul__(self, other):
        r = self._lift(other)
        if r is None:
            return NotImplemented
        return PrimeFieldElement(self.residue * r, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._lift(other)
        if r is None:
            return NotImplemented
        if r == 0:
            raise NotInvertibleError(f"division by zero in F_{self.p}")
        return PrimeFieldElement(self.residue * pow(r, -1, self.p), self.p)

    def __rtruediv__(self, other):
        r = self._lift(other)
        if r is None:
            return NotImplemented
        return PrimeFieldElement(r, self.p) / self

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElement(pow(self.residue, k, self.p), self.p)

    def inverse(self) -> PrimeFieldElement:
        if self.residue == 0:
            raise NotInvertibleError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElement(pow(self.residue, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"PrimeFieldElement({self.residue}, p={self.p})"

    def __str__(self):
        return str(self.residue)


class RationalField:
    kind = "rational"
    exact = True
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, float):
            # exact dyadic value of the double
            return Fraction(value)
        return Fraction(value)

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def format(self, x: Fraction) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def parse(self, text: str) -> Fraction:
        num, sep, den = text.strip().partition("/")
        return rat_normalize(int(num), int(den) if sep else 1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return "RationalField()"

    @property
    def label(self) -> str:
        return "rational"


class PrimeField:
    """The field F_p. Construction checks that ``p`` is an odd prime."""

    kind = "prime"
    exact = True

    def __init__(self, p: int = MERSENNE_61):
        p = int(p)
        if p == 2 or not is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        self.p = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def __call__(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.p != self.p:
                raise ValueError(f"element of F_{value.p} given to F_{self.p}")
            return value
        if isinstance(value, (int, _RationalABC)):
            return self.zero + value
        raise TypeError(f"cannot map {value!r} into F_{self.p}")

    def contains(self, x) -> bool:
        return isinstance(x, PrimeFieldElement) and x.p == self.p

    def format(self, x: PrimeFieldElement) -> str:
        return str(self(x).residue)

    def parse(self, text: str) -> PrimeFieldElement:
        return self(RationalField().parse(text))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    @property
    def label(self) -> str:
        return f"prime:{self.p}"


class Float64Field:
    kind = "float64"
    exact = False
    zero = 0.0
    one = 1.0

    def __call__(self, value) -> float:
        if isinstance(value, PrimeFieldElement):
            raise TypeError("prime-field elements have no float image")
        return float(value)

    def contains(self, x) -> bool:
        return isinstance(x, float)

    def format(self, x: float) -> str:
        return repr(float(x))

    def parse(self, text: str) -> float:
        text = text.strip()
        if "/" in text:
            return float(RationalField().parse(text))
        return float(text)

    def __eq__(self, other):
        return isinstance(other, Float64Field)

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return "Float64Field()"

    @property
    def label(self) -> str:
        return "float64"


Field = RationalField | PrimeField | Float64Field

RATIONAL = RationalField()
FLOAT64 = Float64Field()


@lru_cache(maxsize=None)
def prime_field(p: int = MERSENNE_61) -> PrimeField:
    """Shared ``PrimeField`` instance per modulus (primality is checked once)."""
    return PrimeField(p)


def field_of(x) -> Field:
    """Infer the field an element lives in. Ints count as rationals."""
    if isinstance(x, PrimeFieldElement):
        return prime_field(x.p)
    if isinstance(x, float):
        return FLOAT64
    if isinstance(x, _RationalABC):
        return RATIONAL
    raise TypeError(f"not a field element: {x!r}")


def field_from_label(label: str) -> Field:
    """Inverse of ``Field.label``: ``rational``, ``float64`` or ``prime:<p>``."""
    if label == "rational":
        return RATIONAL
    if label == "float64":
        return FLOAT64
    kind, _, p = label.partition(":")
    if kind == "prime":
        return prime_field(int(p)) if p else prime_field()
    raise ValueError(f"unknown field label {label!r}")


def field_inverse(a):
    """Multiplicative inverse; raises :class:`NotInvertibleError` on zero."""
    if isinstance(a, PrimeFieldElement):
        return a.inverse()
    if a == 0:
        raise NotInvertibleError("zero has no multiplicative inverse")
    if isinstance(a, float):
        return 1.0 / a
    return 1 / Fraction(a)


def field_pow(a, k: int):
    """``a**k`` for ``k >= 0`` by square-and-multiply; ``a**0 == 1`` even for ``a == 0``."""
    if k < 0:
        raise ValueError("field_pow takes a non-negative exponent")
    result = field_of(a).one
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


@dataclass(frozen=True)
class FieldConfig:
    """Which field a computation runs in, as chosen on the command line."""

    kind: str = "rational"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("rational", "prime", "float64"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "prime":
            p = MERSENNE_61 if self.p is None else self.p
            if p == 2 or not is_prime(p):
                raise ValueError(f"modulus must be an odd prime, got {p}")
            object.__setattr__(self, "p", p)
        elif self.p is not None:
            raise ValueError("a modulus only makes sense for the prime field")

    def build(self) -> Field:
        if self.kind == "rational":
            return RATIONAL
        if self.kind == "float64":
            return FLOAT64
        return prime_field(self.p)

    def check_nodes(self, n: int) -> None:
        if self.kind == "prime" and self.p <= n:
            raise ValueError(f"F_{self.p} has fewer than {n} distinct elements")
