"""
Finite and hyperfinite spinners
===============================

A spinner that lands on one of the 2n points k/(2n) gives each point mass
1/(2n).  Letting n be an infinite hypernatural N keeps every answer exact.
"""

from fractions import Fraction as F

from hyperspin import FiniteEvent, arc, ev_lebesgue, finite_P, hyper_P, hyper_Q, point

# half the circle, minus the quarter turn
a = arc(0, F(1, 2)) - point(F(1, 4))
print("event:", a.render())

# on a finite grid the answer moves with n
for n in (2, 6, 12):
    print(f"  P_{n} =", finite_P(FiniteEvent.from_event(a, n)))

# symbolically the grid is S_N, and the missing point costs exactly 1/(2N)
p = hyper_P(a)
print("  P_N =", p.render())
print("  st(P_N) =", p.standard_part(), " Lebesgue =", ev_lebesgue(a))

# plugging in N = 12 recovers the finite answer, since 4 | 2*12
print("  P_N at N=12:", p(12))

# the doubled spinner x -> 2x mod 1 on S_2N gives the same measure
print("  Q_N =", hyper_Q(a).render(), " equal:", hyper_Q(a) == p)
