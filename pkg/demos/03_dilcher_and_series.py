"""Alternating binomial sums against multiple harmonic sums, and the series form."""
from fractions import Fraction

from sylvester import NodeSet
from sylvester.cli import cmd_dilcher_table
from sylvester.identities import dilcher_sides, egf_coefficients

# d = 1 gives the harmonic numbers
for n in range(1, 7):
    lhs, rhs = dilcher_sides(n, 1)
    print(n, lhs, rhs)

# a small table, as the CLI prints it
for cell in cmd_dilcher_table(4, 3):
    print(cell["n"], cell["d"], cell["lhs"], cell["match"])

# coefficients of sum_i w_i exp(x_i z) and of sum_d h_{d-n+1} z^d / d!
lhs, rhs = egf_coefficients(NodeSet([Fraction(1), Fraction(2), Fraction(3)]), 5)
print([str(c) for c in lhs])
print(lhs == rhs)
