"""Complete homogeneous (h_k) and elementary (e_k) symmetric functions.

Everything here evaluates at a concrete list of field elements; nothing is
symbolic. Each family has a brute-force oracle that walks the defining index
set and a fast route, and the two are expected to agree everywhere.

Index conventions: ``h_0 = e_0 = 1``, ``h_k = 0`` for ``k < 0`` and
``e_k = 0`` for ``k < 0`` or ``k > n``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .fields import PrimeFieldElement
from .poly import vieta_from_roots

DEFAULT_BUDGET = 10**7


class BudgetExceededError(ValueError):
    """A brute-force enumeration would visit more terms than allowed."""


def _one(xs, one=None):
    if one is not None:
        return one
    return xs[0] ** 0 if xs else Fraction(1)


def composition_count(k: int, n: int) -> int:
    """Number of compositions of ``k`` into ``n`` non-negative parts."""
    if k < 0 or n < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return math.comb(k + n - 1, n - 1)


def enum_compositions(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """Yield every ``(l_1, ..., l_n)`` with ``l_i >= 0`` and sum ``k``.

    Tuples come out in increasing lexicographic order, so ``(0, ..., 0, k)``
    is first and ``(k, 0, ..., 0)`` is last.
    """
    if k < 0 or n < 0:
        return
    if n == 0:
        if k == 0:
            yield ()
        return
    c = [0] * (n - 1) + [k]
    yield tuple(c)
    while c[0] != k:
        # successor: bump the last slot that still has mass to its right,
        # then push all of that mass into the final slot
        j = n - 2
        tail = c[n - 1]
        while tail == 0:
            tail = c[j]
            c[j] = 0
            j -= 1
        c[j] += 1
        c[n - 1] = tail - 1
        yield tuple(c)


def h_bruteforce(k: int, xs, *, one=None, budget: int = DEFAULT_BUDGET):
    """Sum of all degree-``k`` monomials in ``xs``, one composition at a time.

    Raises :class:`BudgetExceededError` when there are more than ``budget``
    monomials.
    """
    xs = list(xs)
    one = _one(xs, one)
    if k < 0:
        return one * 0
    count = composition_count(k, len(xs))
    if count > budget:
        raise BudgetExceededError(
            f"h_{k} in {len(xs)} variables has {count} terms (budget {budget})"
        )
    if isinstance(one, PrimeFieldElement):
        return _h_bruteforce_mod(k, [x.residue for x in xs], one.p)
    powers = []
    for x in xs:
        row = [one]
        for _ in range(k):
            row.append(row[-1] * x)
        powers.append(row)
    total = one * 0
    for lam in enum_compositions(k, len(xs)):
        term = one
        for row, e in zip(powers, lam):
            if e:
                term = term * row[e]
        total = total + term
    return total


def _h_bruteforce_mod(k: int, residues: list[int], p: int) -> PrimeFieldElement:
    # same walk on bare residues: one reduction per monomial
    powers = [[pow(r, e, p) for e in range(k + 1)] for r in residues]
    pick = list.__getitem__
    total = 0
    for lam in enum_compositions(k, len(residues)):
        total += math.prod(map(pick, powers, lam)) % p
    return PrimeFieldElement(total, p)


def h_sequence(kmax: int, xs, *, one=None) -> list:
    """``[h_0, h_1, ..., h_kmax]`` of ``xs``.

    Variables are adjoined one at a time: after adding ``x`` the table obeys
    ``H_new[m] = H_old[m] + x * H_new[m-1]``. Cost is ``O(len(xs) * kmax)``.
    """
    xs = list(xs)
    one = _one(xs, one)
    if kmax < 0:
        return []
    zero = one * 0
    h = [one] + [zero] * kmax
    for x in xs:
        for m in range(1, kmax + 1):
            h[m] = h[m] + x * h[m - 1]
    return h


def h_fast(k: int, xs, *, one=None):
    xs = list(xs)
    one = _one(xs, one)
    if k < 0:
        return one * 0
    return h_sequence(k, xs, one=one)[k]


def e_bruteforce(k: int, xs, *, one=None):
    """Sum over all ``k``-subsets of ``xs`` of the product of their entries."""
    xs = list(xs)
    one = _one(xs, one)
    if k < 0 or k > len(xs):
        return one * 0
    total = one * 0
    for subset in combinations(xs, k):
        term = one
        for x in subset:
            term = term * x
        total = total + term
    return total


def e_via_vieta(xs, *, one=None) -> list:
    """``[e_0, ..., e_n]`` read off the monic polynomial with roots ``xs``."""
    xs = list(xs)
    one = _one(xs, one)
    n = len(xs)
    coeffs = vieta_from_roots(xs, one=one).coeffs
    # prod (X - x_i) = sum_k (-1)^k e_k X^(n-k)
    return [coeffs[n - k] if k % 2 == 0 else -coeffs[n - k] for k in range(n + 1)]


def e_omit(m: int, xs, i: int, *, one=None):
    """``e_m`` of ``xs`` with the ``i``-th entry (1-based) removed."""
    xs = list(xs)
    if not 1 <= i <= len(xs):
        raise IndexError(f"omission index {i} outside 1..{len(xs)}")
    one = _one(xs, one)
    rest = xs[: i - 1] + xs[i:]
    if m < 0 or m > len(rest):
        return one * 0
    return e_via_vieta(rest, one=one)[m]


def omit_one_table(xs, *, one=None) -> list[list]:
    """``table[i][m] = e_m`` of ``xs`` without its ``i``-th entry (0-based ``i``).

    Each row comes from deflating ``prod_j (X - x_j)`` by ``(X - x_i)``,
    ``O(n)`` per row after one ``O(n**2)`` product.
    """
    xs = list(xs)
    one = _one(xs, one)
    n = len(xs)
    full = vieta_from_roots(xs, one=one).padded(n + 1)
    table = []
    for x in xs:
        # synthetic division, top coefficient first
        q = [one]
        for j in range(n - 1, 0, -1):
            q.append(full[j] + x * q[-1])
        table.append([c if m % 2 == 0 else -c for m, c in enumerate(q)])
    return table


def e_omit_all(m: int, xs, *, one=None) -> list:
    """``[e_m(xs without x_1), ..., e_m(xs without x_n)]``."""
    xs = list(xs)
    one = _one(xs, one)
    if m < 0 or m > len(xs) - 1:
        return [one * 0] * len(xs)
    return [row[m] for row in omit_one_table(xs, one=one)]
