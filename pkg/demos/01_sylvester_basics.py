"""Sylvester's identity on a handful of nodes, step by step."""
from fractions import Fraction

from sylvester import NodeSet, barycentric_weights, prime_field, h_fast, verify_euler, verify_sylvester, weighted_power_sum

# three distinct rational nodes
ns = NodeSet([Fraction(1), Fraction(2), Fraction(3)])

# the weights 1 / prod_{j != i} (x_i - x_j)
w = barycentric_weights(ns)
print("weights:", [str(x) for x in w])  # 1/2, -1, 1/2

# below degree n-1 the weighted power sums vanish, at n-1 they give 1
for d in range(ns.n):
    print("S_%d =" % d, weighted_power_sum(ns, d), "passed:", verify_euler(ns, d).passed)

# above that they equal h_{d-n+1}, the complete homogeneous symmetric function
for d in range(3, 7):
    r = verify_sylvester(ns, d, cross_check=True)
    print("S_%d = %s = h_%d = %s" % (d, r.lhs, d - ns.n + 1, h_fast(d - ns.n + 1, ns.nodes)))

# the same thing over F_p and in doubles
print(verify_sylvester(NodeSet([1, 2, 3], field=prime_field()), 4).passed)
print(verify_sylvester(NodeSet([1.0, 2.0, 3.0]), 4).relative_error)
