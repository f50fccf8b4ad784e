"""The full property sweep behind ``hyperspin suite``.

Each sweep draws from its own ``random.Random(seed * 1000 + k)`` so the report
for one sweep does not depend on which other sweeps ran.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable

from . import sampling
from .circle import EMPTY, ev_lebesgue, ev_rotate, parse_event
from .exact import N, Magnitude, expand_in_d, parse_hrf
from .levicivita import LCNumber, d, lc_divergence_witness, lc_from_terms, parse_lc
from .report import DIVISIBILITY_NOTE, MeasureReport
from .spinners import (
    FiniteEvent,
    additivity_defect,
    finite_coherence_check,
    finite_compatibility_check,
    finite_P,
    finite_Q,
    hyper_P,
    hyper_Q,
    pruss_order_check,
    pruss_transform,
)

ALPHAS = (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(10), Fraction(7, 3))


def _report(name, passed, value, expected, witness=None, inputs=None, notes=()):
    return MeasureReport(
        check=name,
        inputs=inputs or {},
        value=value,
        expected=expected,
        passed=passed,
        witness=witness,
        notes=tuple(notes),
    )


def finite_formula(rng: random.Random) -> MeasureReport:
    for n in range(1, 5):
        for r in range(2 * n + 1):
            for combo in itertools.combinations(range(2 * n), r):
                e = FiniteEvent.of(n, combo)
                target = Fraction(len(combo), 2 * n)
                if finite_P(e) != target or finite_Q(e) != target:
                    return _report("finite_formula", False, "mismatch", "|A|/(2n)", witness=e.render())
    return _report("finite_formula", True, "all subsets of S_1..S_4", "P_n = Q_n = |A|/(2n)")


def compatibility(rng: random.Random) -> MeasureReport:
    pairs = [(n, m) for m in range(1, 7) for n in range(1, m + 1) if m % n == 0]
    reports = [finite_compatibility_check(n, m) for n, m in pairs]
    reports.append(finite_compatibility_check(6, 24, samples=1000, seed=rng.randrange(2**32), exhaustive=False))
    bad = [r for r in reports if not r.passed]
    return _report(
        "compatibility",
        not bad,
        f"{len(reports) - len(bad)}/{len(reports)} (n, m) cases",
        "all cases pass",
        witness=bad[0].witness if bad else None,
    )


def finite_coherence(rng: random.Random) -> MeasureReport:
    count = 0
    for n in range(1, 13):
        for h in range(2 * n):
            for k in range(h + 1, 2 * n + 1):
                r = finite_coherence_check(n, h, k)
                count += 1
                if not r.passed:
                    return _report("finite_coherence", False, r.value, r.expected, inputs=r.inputs)
    return _report("finite_coherence", True, f"{count} arcs", "(k-h)/(2n)")


def hyper_coherence(rng: random.Random) -> MeasureReport:
    for _ in range(200):
        a = sampling.circle_event(rng)
        p = hyper_P(a)
        leb = ev_lebesgue(a)
        if p.standard_part() != leb or (p - leb).magnitude() not in (Magnitude.ZERO, Magnitude.INFINITESIMAL):
            return _report("hyper_coherence", False, p.render(), str(leb), witness=a.render())
    return _report("hyper_coherence", True, "200 events", "st(P_N(A)) = lebesgue(A)", notes=[DIVISIBILITY_NOTE])


def rebuttal(rng: random.Random) -> MeasureReport:
    for _ in range(200):
        a = sampling.circle_event(rng)
        if hyper_Q(a) != hyper_P(a):
            return _report("rebuttal_Q_equals_P", False, hyper_Q(a).render(), hyper_P(a).render(), witness=a.render())
    return _report("rebuttal_Q_equals_P", True, "200 events", "Q_N(A) = P_N(A)", notes=[DIVISIBILITY_NOTE])


def regularity_uniformity(rng: random.Random) -> MeasureReport:
    events = [sampling.circle_event(rng) for _ in range(200)]
    for a in events:
        if hyper_P(a).is_zero() != a.is_empty():
            return _report("regularity_uniformity", False, hyper_P(a).render(), "0 iff empty", witness=a.render())
    by_key: dict[tuple, object] = {}
    for a in events:
        key = (ev_lebesgue(a), a.net_points())
        p = hyper_P(a)
        if key in by_key and by_key[key] != p:
            return _report("regularity_uniformity", False, p.render(), by_key[key].render(), witness=a.render())
        by_key.setdefault(key, p)
    return _report("regularity_uniformity", True, "200 events", "P_N(A)=0 iff A empty; equal length+net points => equal P_N")


def rotation_symmetry(rng: random.Random) -> MeasureReport:
    for _ in range(100):
        a = sampling.circle_event(rng)
        theta = sampling.angle(rng, denominators=(1, 2, 3, 5, 7, 9, 10, 24))
        if hyper_P(ev_rotate(a, theta)) != hyper_P(a):
            return _report("rotation_symmetry", False, "mismatch", "equal", witness=f"{a.render()} by {theta}")
    return _report("rotation_symmetry", True, "100 pairs", "P_N(rotate(A)) = P_N(A)", notes=[DIVISIBILITY_NOTE])


def pruss_defect(rng: random.Random) -> MeasureReport:
    for alpha in ALPHAS:
        if additivity_defect(alpha) != alpha - 1:
            return _report("pruss_defect", False, str(additivity_defect(alpha)), str(alpha - 1), inputs={"alpha": str(alpha)})
        pairs = [(sampling.circle_event(rng), sampling.circle_event(rng)) for _ in range(100)]
        r = pruss_order_check(pairs, alpha)
        if not r.passed:
            return _report("pruss_defect", False, r.value, r.expected, witness=r.witness, inputs=r.inputs)
    for _ in range(100):
        p = sampling.finite_hyper_ratfun(rng)
        if pruss_transform(p, 1) != p:
            return _report("pruss_defect", False, "alpha=1 changed a value", "identity", witness=p.render())
    return _report("pruss_defect", True, "defect = alpha-1 for all alpha; order preserved", "alpha-1; preserved")


def levi_civita(rng: random.Random) -> MeasureReport:
    for _ in range(500):
        a, b, c = (sampling.lc_number(rng) for _ in range(3))
        checks = [
            ((a + b) + c, a + (b + c)),
            (a * (b + c), a * b + a * c),
            (a * b, b * a),
            ((a * b) * c, a * (b * c)),
        ]
        for lhs, rhs in checks:
            if not lhs.eq_up_to(rhs):
                return _report("levi_civita", False, lhs.render(), rhs.render(), witness=f"a={a}, b={b}, c={c}")
        x = sampling.nonzero_lc_number(rng)
        prod = x * x.inverse()
        if prod.terms != ((Fraction(0), Fraction(1)),):
            return _report("levi_civita", False, prod.render(), "1", witness=f"x={x}")
    inv = lc_from_terms([(0, 1), (1, -1)], 3).inverse()
    if inv != parse_lc("1 + d + d^2 + d^3 + O(d>3)"):
        return _report("levi_civita", False, inv.render(), "1 + d + d^2 + d^3 + O(d>3)")
    half = LCNumber.monomial(1, Fraction(1, 2))
    if (half * half).terms != d.terms:
        return _report("levi_civita", False, (half * half).render(), "d")
    div = lc_divergence_witness(d, 100)
    if not div.passed:
        return _report("levi_civita", False, div.value, div.expected, witness=div.witness)
    return _report("levi_civita", True, "ring axioms, inverses, d^(1/2)^2 = d, {n*d} gaps constant", "all hold")


def embedding(rng: random.Random) -> MeasureReport:
    for _ in range(100):
        x, y = sampling.hyper_ratfun(rng), sampling.hyper_ratfun(rng)
        lhs = expand_in_d(x * y, 8)
        rhs = expand_in_d(x, 8) * expand_in_d(y, 8)
        if not lhs.eq_up_to(rhs):
            return _report("embedding", False, lhs.render(), rhs.render(), witness=f"x={x}, y={y}")
    e = expand_in_d(N / (N + 1), 5)
    target = parse_lc("1 - d + d^2 - d^3 + d^4 - d^5 + O(d>5)")
    if e != target:
        return _report("embedding", False, e.render(), target.render())
    return _report("embedding", True, "100 products; N/(N+1) expanded", "expand is multiplicative up to order 8")


def hyper_finite_consistency(rng: random.Random) -> MeasureReport:
    dens = (1, 2, 3, 4, 6, 8, 12, 24)
    for _ in range(100):
        a = sampling.circle_event(rng, denominators=dens)
        symbolic = hyper_P(a)(24)
        discrete = finite_P(FiniteEvent.from_event(a, 24))
        if symbolic != discrete:
            return _report("hyper_finite_consistency", False, str(symbolic), str(discrete), witness=a.render())
    return _report("hyper_finite_consistency", True, "100 events", "P_N at N=24 equals P_24")


def round_trip(rng: random.Random) -> MeasureReport:
    for i in range(200):
        kind = i % 3
        if kind == 0:
            v = sampling.circle_event(rng)
            back = parse_event(v.render())
        elif kind == 1:
            v = sampling.hyper_ratfun(rng)
            back = parse_hrf(v.render())
        else:
            v = sampling.lc_number(rng)
            back = parse_lc(v.render())
        if back != v:
            return _report("round_trip", False, back.render(), v.render())
    return _report("round_trip", True, "200 values", "parse(render(x)) = x")


SWEEPS: list[tuple[str, Callable[[random.Random], MeasureReport]]] = [
    ("finite_formula", finite_formula),
    ("compatibility", compatibility),
    ("finite_coherence", finite_coherence),
    ("hyper_coherence", hyper_coherence),
    ("rebuttal", rebuttal),
    ("regularity_uniformity", regularity_uniformity),
    ("rotation_symmetry", rotation_symmetry),
    ("pruss_defect", pruss_defect),
    ("levi_civita", levi_civita),
    ("embedding", embedding),
    ("hyper_finite_consistency", hyper_finite_consistency),
    ("round_trip", round_trip),
]


def run_suite(seed: int = 42) -> list[MeasureReport]:
    reports = []
    for k, (name, sweep) in enumerate(SWEEPS, start=1):
        r = sweep(random.Random(seed * 1000 + k))
        reports.append(
            MeasureReport(
                check=f"{k:02d}_{r.check}",
                inputs={"seed": str(seed), **r.inputs},
                value=r.value,
                expected=r.expected,
                passed=r.passed,
                witness=r.witness,
                notes=r.notes,
            )
        )
    return reports
