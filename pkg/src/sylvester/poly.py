"""Dense univariate polynomials over any of the fields in :mod:`sylvester.fields`.

Coefficients are stored low-degree-first: ``coeffs[i]`` multiplies ``X**i``.
The highest stored coefficient is never zero, so the zero polynomial has an
empty coefficient tuple and degree ``-inf``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .fields import field_inverse

ZERO_DEGREE = -math.inf


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def monomial(cls, d: int, one=Fraction(1)) -> Polynomial:
        """``X**d`` with leading coefficient ``one``."""
        zero = one * 0
        return cls([zero] * d + [one])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int):
        """Coefficient of ``X**i``; plain ``0`` beyond the stored range."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> tuple:
        """The first ``n`` coefficients, zero-filled."""
        zero = self.coeffs[0] * 0 if self.coeffs else 0
        return tuple(self.coeffs[i] if i < len(self.coeffs) else zero for i in range(n))

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        return poly_mul(self, other)

    def __divmod__(self, other: Polynomial):
        return poly_divrem(self, other)

    def __call__(self, x):
        return poly_eval(self, x)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            terms.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(terms)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Schoolbook product."""
    if a.is_zero() or b.is_zero():
        return Polynomial()
    zero = a.coeffs[0] * 0
    out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] = out[i + j] + x * y
    return Polynomial(out)


def poly_divrem(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Return ``(q, r)`` with ``a == q*b + r`` and ``deg r < deg b``.

    Raises ZeroDivisionError when ``b`` is the zero polynomial.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b.coeffs) - 1
    rem = list(a.coeffs)
    if len(rem) <= db:
        return Polynomial(), Polynomial(rem)
    lead_inv = field_inverse(b.coeffs[-1])
    zero = b.coeffs[-1] * 0
    quot = [zero] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] * lead_inv
        quot[k] = c
        if c == 0:
            continue
        for j, y in enumerate(b.coeffs):
            rem[k + j] = rem[k + j] - c * y
    return Polynomial(quot), Polynomial(rem[:db])


def poly_eval(a: Polynomial, x):
    """Horner evaluation. The zero polynomial evaluates to the zero of ``x``'s field."""
    acc = x * 0
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def vieta_from_roots(nodes, one=None) -> Polynomial:
    """The monic product ``prod_i (X - nodes[i])``.

    ``one`` fixes the field when ``nodes`` is empty (defaults to rationals).
    """
    nodes = list(nodes)
    if one is None:
        one = nodes[0] ** 0 if nodes else Fraction(1)
    coeffs = [one]
    for x in nodes:
        nxt = [x * 0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - x * c
        coeffs = nxt
    return Polynomial(coeffs)
