"""The remainder of X^d modulo prod (X - x_i), computed three ways."""
from fractions import Fraction

from sylvester import NodeSet
from sylvester.identities import (
    division_remainder,
    extended_sylvester_check,
    lagrange_interpolate,
    remainder_closed_form,
    verify_remainder,
)

ns = NodeSet([Fraction(1), Fraction(2)])

# X^3 mod (X-1)(X-2) = 7X - 6
print(remainder_closed_form(ns, 3))
print(division_remainder(ns, 3))
print(lagrange_interpolate(ns, [Fraction(1), Fraction(8)]))

# three nodes, degree 4
ns3 = NodeSet([Fraction(v) for v in (1, 2, 3)])
r = verify_remainder(ns3, 4)
print([str(c) for c in r.lhs], r.passed)

# every coefficient of the remainder has its own identity; the top one is S_d
e = extended_sylvester_check(ns3, 6)
print([str(c) for c in e.lhs], "top coefficient = S_6 =", e.details["weighted_power_sum"])
