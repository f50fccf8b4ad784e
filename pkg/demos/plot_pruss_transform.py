"""
Stretching the infinitesimal part
=================================

Scaling the infinitesimal part of every probability by alpha keeps the
order of events and keeps each value infinitely close to the original.
Summing singletons shows what breaks.
"""

from fractions import Fraction as F

from hyperspin import FULL, additivity_defect, arc, hyper_P, point, pruss_order_check, pruss_transform

alpha = F(2)
single = hyper_P(point(0))
print("P_N(point) =", single.render(), "->", pruss_transform(single, alpha).render())

# comparisons survive the transform
pairs = [(point(0), arc(0, F(1, 4))), (arc(0, F(1, 3)) - point(0), arc(0, F(1, 3)))]
print(pruss_order_check(pairs, alpha).to_text())

# at a stand-in N = 6 the 12 singleton masses add up to alpha, not 1
n = 6
total = sum(pruss_transform(hyper_P(point(F(k, 2 * n))), alpha)(n) for k in range(2 * n))
print("sum over grid of transformed singletons:", total)
print("transformed mass of the whole circle:  ", pruss_transform(hyper_P(FULL), alpha))
print("defect:", additivity_defect(alpha))
