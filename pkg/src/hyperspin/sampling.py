"""Seeded random generators for the property sweeps."""

from __future__ import annotations

import random
from fractions import Fraction

from .circle import EMPTY, CircleEvent, arc, point
from .exact import HyperRatFun, Poly
from .levicivita import LCNumber


def rational(rng: random.Random, max_num: int = 9, max_den: int = 6, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        if q or not nonzero:
            return q


def angle(rng: random.Random, denominators=(1, 2, 3, 4, 5, 6, 8, 12)) -> Fraction:
    den = rng.choice(denominators)
    return Fraction(rng.randrange(den), den)


def circle_event(rng: random.Random, denominators=(1, 2, 3, 4, 5, 6, 8, 12), max_terms: int = 4) -> CircleEvent:
    """Union/difference of a few arcs and points with endpoints over ``denominators``."""
    ev = EMPTY
    for i in range(rng.randint(0, max_terms)):
        if rng.random() < 0.6:
            a, b = angle(rng, denominators), angle(rng, denominators)
            if a == b:
                continue
            term = arc(a, b)
        else:
            term = point(angle(rng, denominators))
        ev = ev - term if i and rng.random() < 0.35 else ev | term
    return ev


def poly(rng: random.Random, max_degree: int = 3) -> Poly:
    return Poly(rational(rng) for _ in range(rng.randint(0, max_degree) + 1))


def hyper_ratfun(rng: random.Random, max_degree: int = 3) -> HyperRatFun:
    num = poly(rng, max_degree)
    den = poly(rng, max_degree)
    while den.is_zero():
        den = poly(rng, max_degree)
    return HyperRatFun(num, den)


def finite_hyper_ratfun(rng: random.Random, max_degree: int = 3) -> HyperRatFun:
    """A random element that is not infinite (degree of numerator <= denominator)."""
    x = hyper_ratfun(rng, max_degree)
    while x.num.degree > x.den.degree:
        x = hyper_ratfun(rng, max_degree)
    return x


def lc_number(rng: random.Random, order=8, max_terms: int = 4, exp_range=(-2, 4), denominators=(1, 2, 3)) -> LCNumber:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        den = rng.choice(denominators)
        q = Fraction(rng.randint(exp_range[0] * den, exp_range[1] * den), den)
        terms[q] = rational(rng, nonzero=True)
    return LCNumber(terms, order)


def nonzero_lc_number(rng: random.Random, **kw) -> LCNumber:
    while True:
        x = lc_number(rng, **kw)
        if x.terms:
            return x
