"""
Truncated Levi-Civita arithmetic
================================

Series in a positive infinitesimal d with rational exponents, carried to a
knowledge order beyond which nothing is claimed.
"""

from fractions import Fraction as F

from hyperspin import LCNumber, N, d, expand_in_d, lc_divergence_witness, parse_lc

x = parse_lc("1 - d", order=3)
print("1/(1-d) =", x.inverse().render())

root = LCNumber.monomial(1, F(1, 2))
print("d^(1/2) * d^(1/2) =", (root * root).render())

# multiplying by an infinite number costs knowledge order
y = LCNumber({-1: 1}, 4) * LCNumber({0: 1, 1: 1}, 4)
print("d^(-1) * (1 + d) =", y.render())

# d sits below every positive rational
print("d < 1/10^9:", d < LCNumber.const(F(1, 10**9)))

# a rational function of N, rewritten in d = 1/N
print("N/(N+1) =", expand_in_d(N / (N + 1), 5).render())

# the sequence n*d never settles: its gaps stay equal to d
print(lc_divergence_witness(d, 100).to_text())
