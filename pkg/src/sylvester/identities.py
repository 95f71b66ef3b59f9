"""Executable forms of Sylvester's identity and its relatives.

For distinct nodes x_1..x_n the weighted power sum

    S_d = sum_i x_i**d / prod_{j != i} (x_i - x_j)

equals the complete homogeneous symmetric function h_{d-n+1}(x_1..x_n).
This module computes S_d along several independent routes (direct sum,
adjoin-one-node recurrence, order-n linear recurrence), the related
interpolation and remainder polynomials, and packages every identity check
as an :class:`IdentityReport`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .fields import RATIONAL, Field, field_inverse, field_of, field_pow
from .poly import Polynomial, poly_divrem, poly_eval, vieta_from_roots
from .symfun import (
    composition_count,
    e_omit_all,
    e_via_vieta,
    h_bruteforce,
    h_fast,
    h_sequence,
    omit_one_table,
)

REPORT_BRUTEFORCE_BUDGET = 10**5
REL_ERROR_FLOOR = 1e-300


class DistinctnessError(ValueError):
    """Two interpolation nodes coincide."""


class ParameterError(ValueError):
    """An identity was asked for outside its range of validity."""


@dataclass(frozen=True)
class NodeSet:
    """An ordered tuple of ``n >= 2`` pairwise distinct field elements.

    Integers and fractions are promoted into ``field`` (rationals when not
    given). For floats, ``min_separation`` sets the smallest allowed gap.
    """

    nodes: tuple
    field: Field = RATIONAL
    min_separation: float = 0.0

    def __init__(self, nodes, field: Field | None = None, min_separation: float = 0.0):
        nodes = list(nodes)
        if field is None:
            field = _infer_field(nodes)
        nodes = tuple(field(x) for x in nodes)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "min_separation", min_separation)
        if len(nodes) < 2:
            raise ParameterError(f"need at least 2 nodes, got {len(nodes)}")
        if field.exact:
            if len(set(nodes)) != len(nodes):
                raise DistinctnessError(f"nodes are not pairwise distinct: {self.formatted()}")
        else:
            ordered = sorted(nodes)
            gap = min(b - a for a, b in zip(ordered, ordered[1:]))
            if not gap > min_separation:
                raise DistinctnessError(
                    f"minimum node gap {gap!r} does not exceed {min_separation!r}"
                )

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def one(self):
        return self.field.one

    @property
    def zero(self):
        return self.field.zero

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, i):
        return self.nodes[i]

    def formatted(self) -> list[str]:
        return [self.field.format(x) for x in self.nodes]

    def permuted(self, order: Sequence[int]) -> NodeSet:
        return NodeSet([self.nodes[i] for i in order], self.field, self.min_separation)


def _infer_field(values) -> Field:
    for x in values:
        if not isinstance(x, int):
            return field_of(x)
    return RATIONAL


def as_nodeset(ns) -> NodeSet:
    return ns if isinstance(ns, NodeSet) else NodeSet(ns)


@dataclass
class IdentityReport:
    """Outcome of one identity check.

    ``lhs``/``rhs`` are field elements, or tuples of them for polynomial- or
    series-valued identities. In exact fields ``passed`` is ``lhs == rhs``
    together with any auxiliary cross-checks; in float64 it is ``None`` and
    ``relative_error`` is filled in instead.
    """

    identity: str
    params: dict
    lhs: object
    rhs: object
    passed: bool | None
    field: str
    relative_error: float | None = None
    details: dict = dc_field(default_factory=dict)


def relative_error(approx, exact) -> float:
    """``|approx - exact| / max(|exact|, 1e-300)``, maximised over tuple entries."""
    if isinstance(exact, tuple):
        return max((relative_error(a, b) for a, b in zip(approx, exact)), default=0.0)
    return abs(float(approx) - float(exact)) / max(abs(float(exact)), REL_ERROR_FLOOR)


def _report(name, params, lhs, rhs, fld: Field, checks=(), details=None) -> IdentityReport:
    details = dict(details or {})
    if fld.exact:
        passed = lhs == rhs and all(checks)
        return IdentityReport(name, params, lhs, rhs, passed, fld.label, None, details)
    return IdentityReport(name, params, lhs, rhs, None, fld.label, relative_error(lhs, rhs), details)


# -- weights and weighted power sums ------------------------------------------


def lagrange_denominators(ns) -> list:
    """``prod_{j != i} (x_i - x_j)`` for each node."""
    ns = as_nodeset(ns)
    xs = ns.nodes
    out = [ns.one] * ns.n
    for i in range(ns.n):
        for j in range(i + 1, ns.n):
            diff = xs[i] - xs[j]
            out[i] = out[i] * diff
            out[j] = out[j] * -diff
    if any(den == 0 for den in out):
        raise DistinctnessError("nodes are not pairwise distinct")
    return out


def barycentric_weights(ns) -> list:
    """Partial-fraction residues ``w_i = 1 / prod_{j != i} (x_i - x_j)``.

    These are the coefficients in ``1/prod(X - x_j) = sum_i w_i / (X - x_i)``;
    they always sum to zero.
    """
    return [field_inverse(den) for den in lagrange_denominators(ns)]


def weighted_power_sum(ns, d: int):
    """``S_d = sum_i x_i**d / prod_{j != i} (x_i - x_j)``, summed directly."""
    if d < 0:
        raise ParameterError("degree must be non-negative")
    ns = as_nodeset(ns)
    total = ns.zero
    for x, den in zip(ns, lagrange_denominators(ns)):
        total = total + field_pow(x, d) / den
    return total


def s_via_sylvester_recurrence(ns, d: int):
    """``S_d`` from the adjoin-one-node recurrence.

    With ``S_e^{(j)}`` the weighted power sum of the first ``j`` nodes,

        S_d^{(j)} = sum_{e=0}^{d-1} S_e^{(j-1)} * x_j**(d-e-1),

    started from the two-node geometric sum. The table is indexed by
    (prefix length, degree) and costs ``O(n * d**2)`` multiplications.
    """
    if d < 0:
        raise ParameterError("degree must be non-negative")
    ns = as_nodeset(ns)
    zero = ns.zero
    pw = [[ns.one] for _ in range(ns.n)]
    for row, x in zip(pw, ns):
        for _ in range(d):
            row.append(row[-1] * x)

    # two nodes: S_e = sum_{a+b=e-1} x_1^a x_2^b
    table = [zero]
    for e in range(1, d + 1):
        acc = zero
        for a in range(e):
            acc = acc + pw[0][a] * pw[1][e - 1 - a]
        table.append(acc)

    for j in range(2, ns.n):
        xpow = pw[j]
        nxt = [zero]
        for e in range(1, d + 1):
            acc = zero
            for t in range(e):
                acc = acc + table[t] * xpow[e - t - 1]
            nxt.append(acc)
        table = nxt
    return table[d]


def s_via_order_n_recurrence(ns, d: int):
    """``S_d`` from ``W_t = sum_{k=1}^n (-1)^(k-1) e_k W_{t-k}``.

    The first ``n`` values are seeded as ``(0, ..., 0, 1)`` (Euler's identity)
    instead of being recomputed.
    """
    if d < 0:
        raise ParameterError("degree must be non-negative")
    ns = as_nodeset(ns)
    n = ns.n
    seeds = euler_seeds(ns)
    if d < n:
        return seeds[d]
    e = e_via_vieta(ns.nodes, one=ns.one)
    w = list(seeds)
    for t in range(n, d + 1):
        acc = ns.zero
        for k in range(1, n + 1):
            term = e[k] * w[t - k]
            acc = acc + term if k % 2 else acc - term
        w.append(acc)
    return w[d]


def euler_seeds(ns) -> list:
    """``[S_0, ..., S_{n-1}] = [0, ..., 0, 1]``."""
    ns = as_nodeset(ns)
    return [ns.zero] * (ns.n - 1) + [ns.one]


# -- interpolation and remainders ---------------------------------------------


def lagrange_interpolate(ns, values) -> Polynomial:
    """The polynomial of degree < n with ``P(x_i) = values[i]``.

    Built as ``sum_i values[i] * prod_{j != i} (X - x_j) / (x_i - x_j)``.
    """
    ns = as_nodeset(ns)
    values = [ns.field(v) for v in values]
    if len(values) != ns.n:
        raise ParameterError(f"expected {ns.n} values, got {len(values)}")
    weights = barycentric_weights(ns)
    acc = [ns.zero] * ns.n
    for i, (v, w) in enumerate(zip(values, weights)):
        scale = v * w
        if scale == 0:
            continue
        basis = vieta_from_roots(ns.nodes[:i] + ns.nodes[i + 1 :], one=ns.one)
        for k, c in enumerate(basis.coeffs):
            acc[k] = acc[k] + scale * c
    return Polynomial(acc)


def remainder_closed_form(ns, d: int) -> Polynomial:
    """Remainder of ``X**d`` modulo ``prod (X - x_i)``, in closed form for ``d >= n``.

    The coefficient of ``X**m`` is
    ``sum_{k=n-m}^{n} (-1)^(k-1) e_k h_{d-m-k}`` with ``h`` of negative index 0.
    """
    ns = as_nodeset(ns)
    n = ns.n
    if d < n:
        raise ParameterError(f"closed-form remainder needs d >= n ({d} < {n})")
    e = e_via_vieta(ns.nodes, one=ns.one)
    h = h_sequence(d, ns.nodes, one=ns.one)
    coeffs = []
    for m in range(n):
        acc = ns.zero
        for k in range(n - m, n + 1):
            idx = d - m - k
            if idx < 0:
                continue
            term = e[k] * h[idx]
            acc = acc + term if k % 2 else acc - term
        coeffs.append(acc)
    return Polynomial(coeffs)


def division_remainder(ns, d: int) -> Polynomial:
    """Remainder of ``X**d`` divided by ``prod (X - x_i)`` via long division."""
    ns = as_nodeset(ns)
    _, r = poly_divrem(Polynomial.monomial(d, ns.one), vieta_from_roots(ns.nodes, one=ns.one))
    return r


# -- identity checks -----------------------------------------------------------


def verify_euler(ns, d: int) -> IdentityReport:
    ns = as_nodeset(ns)
    if not 0 <= d <= ns.n - 1:
        raise ParameterError(f"Euler's identity needs 0 <= d <= n-1, got d={d}, n={ns.n}")
    lhs = weighted_power_sum(ns, d)
    rhs = ns.one if d == ns.n - 1 else ns.zero
    return _report("euler", {"n": ns.n, "d": d}, lhs, rhs, ns.field)


def verify_sylvester(
    ns, d: int, *, cross_check: bool = False, budget: int = REPORT_BRUTEFORCE_BUDGET
) -> IdentityReport:
    """``S_d == h_{d-n+1}``.

    The enumeration oracle ``h_bruteforce`` is added (and must agree) when the
    number of monomials is within ``budget``. With ``cross_check`` the two
    recurrence routes for ``S_d`` are computed and must agree as well.
    """
    ns = as_nodeset(ns)
    if d < 0:
        raise ParameterError("degree must be non-negative")
    k = d - ns.n + 1
    lhs = weighted_power_sum(ns, d)
    rhs = h_fast(k, ns.nodes, one=ns.one)
    details, checks = {}, []
    if composition_count(k, ns.n) <= budget:
        brute = h_bruteforce(k, ns.nodes, one=ns.one, budget=budget)
        details["h_bruteforce"] = brute
        checks.append(brute == rhs)
    if cross_check:
        rec = s_via_sylvester_recurrence(ns, d)
        order_n = s_via_order_n_recurrence(ns, d)
        details["s_sylvester_recurrence"] = rec
        details["s_order_n_recurrence"] = order_n
        checks += [rec == lhs, order_n == lhs]
    return _report("sylvester", {"n": ns.n, "d": d}, lhs, rhs, ns.field, checks, details)


def verify_newton_relation(xs, d: int) -> IdentityReport:
    """``h_d == sum_{k=1}^n (-1)^(k-1) e_k h_{d-k}`` for ``d >= 1``."""
    ns = as_nodeset(xs)
    if d < 1:
        raise ParameterError("the h/e relation holds for d >= 1")
    h = h_sequence(d, ns.nodes, one=ns.one)
    e = e_via_vieta(ns.nodes, one=ns.one)
    rhs = ns.zero
    for k in range(1, ns.n + 1):
        if d - k < 0:
            break
        term = e[k] * h[d - k]
        rhs = rhs + term if k % 2 else rhs - term
    return _report("newton", {"n": ns.n, "d": d}, h[d], rhs, ns.field)


def verify_extended_euler(ns, d: int, m: int) -> IdentityReport:
    """``sum_i x_i^d e_m(omit i) / prod_{j!=i}(x_i - x_j)`` is ``(-1)^m`` iff ``d+m = n-1``, else 0."""
    ns = as_nodeset(ns)
    n = ns.n
    if not (0 <= d <= n - 1 and 0 <= m <= n - 1):
        raise ParameterError(f"need 0 <= d, m <= n-1, got d={d}, m={m}, n={n}")
    lhs = ns.zero
    omitted = e_omit_all(m, ns.nodes, one=ns.one)
    for x, e_m, den in zip(ns, omitted, lagrange_denominators(ns)):
        lhs = lhs + field_pow(x, d) * e_m / den
    if d + m == n - 1:
        rhs = ns.one if m % 2 == 0 else -ns.one
    else:
        rhs = ns.zero
    return _report("extended_euler", {"n": n, "d": d, "m": m}, lhs, rhs, ns.field)


def verify_f2(ns, a) -> IdentityReport:
    """``sum_i prod_{j!=i} (1 - a x_i x_j)/(x_i - x_j)`` is ``a^((n-1)/2)`` for odd n, else 0."""
    ns = as_nodeset(ns)
    a = ns.field(a)
    lhs = ns.zero
    for i, xi in enumerate(ns):
        term = ns.one
        for j, xj in enumerate(ns):
            if j != i:
                term = term * (1 - a * xi * xj) / (xi - xj)
        lhs = lhs + term
    rhs = field_pow(a, (ns.n - 1) // 2) if ns.n % 2 else ns.zero
    return _report("f2", {"n": ns.n, "a": ns.field.format(a)}, lhs, rhs, ns.field)


def _pascal_row(n: int) -> list[int]:
    row = [1]
    for _ in range(n):
        row = [1] + [row[k] + row[k + 1] for k in range(len(row) - 1)] + [1]
    return row


def dilcher_sides(n: int, d: int) -> tuple[Fraction, Fraction]:
    """Both sides of ``sum_i (-1)^(i-1) C(n,i) / i^d = sum_{i_1<=..<=i_d} 1/(i_1...i_d)``.

    The right side is evaluated as ``h_d(1, 1/2, ..., 1/n)``.
    """
    binom = _pascal_row(n)
    lhs = Fraction(0)
    for i in range(1, n + 1):
        term = Fraction(binom[i], i**d)
        lhs += term if i % 2 else -term
    rhs = h_fast(d, [Fraction(1, i) for i in range(1, n + 1)])
    return lhs, rhs


def dilcher_check(n: int, d: int) -> IdentityReport:
    """Dilcher's alternating binomial sum against the multiple harmonic sum.

    For ``n >= 2`` the check also runs Sylvester's identity at nodes
    ``x_i = 1/i`` with degree ``d+n-1`` and requires its two sides, and each
    term of its weighted sum, to match Dilcher's. With ``n == 1`` there is
    no node set and only the direct comparison is made.
    """
    if n < 1 or d < 1:
        raise ParameterError(f"Dilcher's identity needs n >= 1 and d >= 1, got n={n}, d={d}")
    lhs, rhs = dilcher_sides(n, d)
    checks, details = [], {}
    if n >= 2:
        ns = NodeSet([Fraction(1, i) for i in range(1, n + 1)])
        syl = verify_sylvester(ns, d + n - 1, budget=0)
        binom = _pascal_row(n)
        terms_ok = all(
            x ** (d + n - 1) * w == Fraction((-1) ** (i - 1) * binom[i], i**d)
            for i, (x, w) in enumerate(zip(ns, barycentric_weights(ns)), start=1)
        )
        details["sylvester_lhs"] = syl.lhs
        details["sylvester_rhs"] = syl.rhs
        checks += [syl.lhs == lhs, syl.rhs == rhs, terms_ok]
    return _report("dilcher", {"n": n, "d": d}, lhs, rhs, RATIONAL, checks, details)


def egf_coefficients(ns, K: int) -> tuple[tuple, tuple]:
    """Coefficients of ``z^0..z^K`` on both sides of the exponential identity.

    Left: ``sum_i w_i * exp(x_i z)`` with each exponential truncated at ``z^K``.
    Right: ``sum_{d >= n-1} h_{d-n+1} z^d / d!``.
    """
    ns = as_nodeset(ns)
    n = ns.n
    inv_fact = [field_inverse(ns.field(math.factorial(t))) for t in range(K + 1)]
    lhs = [ns.zero] * (K + 1)
    for x, w in zip(ns, barycentric_weights(ns)):
        xp = ns.one
        for t in range(K + 1):
            lhs[t] = lhs[t] + w * xp * inv_fact[t]
            xp = xp * x
    h = h_sequence(K - n + 1, ns.nodes, one=ns.one)
    rhs = [ns.zero if t < n - 1 else h[t - n + 1] * inv_fact[t] for t in range(K + 1)]
    return tuple(lhs), tuple(rhs)


def egf_truncated_check(ns, K: int) -> IdentityReport:
    ns = as_nodeset(ns)
    if not ns.field.exact:
        raise ParameterError("the series comparison is exact-field only")
    if K < ns.n - 1:
        raise ParameterError(f"truncation order K={K} must be at least n-1={ns.n - 1}")
    lhs, rhs = egf_coefficients(ns, K)
    return _report("egf", {"n": ns.n, "K": K}, lhs, rhs, ns.field)


def interpolation_coefficients(ns, d: int) -> tuple:
    """Coefficients of ``sum_i x_i^d prod_{j!=i} (X - x_j)/(x_i - x_j)`` via omit-one ``e_m``.

    The ``X^m`` coefficient is ``(-1)^(n-1-m) sum_i x_i^d e_{n-1-m}(omit i) w_i``.
    """
    ns = as_nodeset(ns)
    n = ns.n
    scaled = [field_pow(x, d) * w for x, w in zip(ns, barycentric_weights(ns))]
    table = omit_one_table(ns.nodes, one=ns.one)
    out = []
    for m in range(n):
        r = n - 1 - m
        acc = ns.zero
        for s, row in zip(scaled, table):
            acc = acc + s * row[r]
        out.append(acc if r % 2 == 0 else -acc)
    return tuple(out)


def extended_sylvester_check(ns, d: int) -> IdentityReport:
    """Closed-form remainder coefficients against the interpolation expansion, for ``d >= n``.

    The top (``X^{n-1}``) coefficient must additionally equal ``S_d``.
    """
    ns = as_nodeset(ns)
    if d < ns.n:
        raise ParameterError(f"needs d >= n ({d} < {ns.n})")
    lhs = remainder_closed_form(ns, d).padded(ns.n)
    rhs = interpolation_coefficients(ns, d)
    s_d = weighted_power_sum(ns, d)
    details = {"weighted_power_sum": s_d}
    return _report(
        "extended_sylvester", {"n": ns.n, "d": d}, lhs, rhs, ns.field, [lhs[-1] == s_d], details
    )


def verify_remainder(ns, d: int) -> IdentityReport:
    """Closed form vs long division vs Lagrange interpolation of ``x_i^d``.

    ``lhs`` is the closed-form remainder, ``rhs`` the division remainder; the
    interpolant and the values ``R(x_i) == x_i^d`` are extra checks.
    """
    ns = as_nodeset(ns)
    closed = remainder_closed_form(ns, d)
    divided = division_remainder(ns, d)
    interp = lagrange_interpolate(ns, [field_pow(x, d) for x in ns])
    interpolates = all(poly_eval(closed, x) == field_pow(x, d) for x in ns)
    details = {"lagrange": interp.padded(ns.n)}
    return _report(
        "remainder",
        {"n": ns.n, "d": d},
        closed.padded(ns.n),
        divided.padded(ns.n),
        ns.field,
        [interp == closed, interpolates],
        details,
    )


IDENTITIES = {
    "euler": "S_d is 0 for d <= n-2 and 1 for d = n-1",
    "sylvester": "S_d equals h_{d-n+1} of the nodes",
    "newton": "h_d = sum_k (-1)^(k-1) e_k h_{d-k}",
    "extended_euler": "omit-one e_m weighted sums are (-1)^m on d+m = n-1, else 0",
    "f2": "sum_i prod_{j!=i} (1 - a x_i x_j)/(x_i - x_j) = a^((n-1)/2) or 0",
    "dilcher": "alternating binomial sum of 1/i^d equals the multiple harmonic sum",
    "egf": "sum_i w_i exp(x_i z) = sum_d h_{d-n+1} z^d/d!, coefficient-wise to z^K",
    "remainder": "closed-form remainder = division remainder = Lagrange interpolant",
    "extended_sylvester": "closed-form remainder coefficients = interpolation expansion",
}
