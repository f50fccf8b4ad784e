"""
Events on the circle
====================

Finite unions of half-open arcs with points added or taken away, closed
under the boolean operations, rotation and the doubling preimage.
"""

from fractions import Fraction as F

from hyperspin import ev_double_preimage, ev_lebesgue, ev_rotate, parse_event

a = parse_event("arc(3/4,1/4) + point(1/2) - point(0)")
print("a          =", a.render())
print("complement =", (~a).render())
print("in degrees =", a.render("degrees"))

b = parse_event("arc(90,270)", unit="degrees")
print("a | b      =", (a | b).render())
print("a & b      =", (a & b).render())

print("rotated by 1/8:", ev_rotate(a, F(1, 8)).render())

# the two halves pulled back by x -> 2x mod 1
pre = ev_double_preimage(a)
print("doubling preimage:", pre.render())
print("lengths:", ev_lebesgue(a), ev_lebesgue(pre))
