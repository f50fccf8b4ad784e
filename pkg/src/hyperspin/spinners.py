"""Probability models of a uniform spinner and the checks run against them.

Finite models live on the grid ``S_n = {k/(2n) : 0 <= k < 2n}`` (turn
coordinates).  The hyperfinite model is the same grid for an infinite
hypernatural ``N`` that is divisible by every standard integer.  Under that
assumption every rational angle is a grid point and an arc ``[a, b)`` with
rational endpoints contains exactly ``2N(b - a)`` grid points, so

    P_N(A) = length(A) + (#added points - #removed points) / (2N)

is an exact element of the rational-function field in ``N``.

The Pruss transform ``st(P) + alpha (P - st(P))`` preserves every comparison
and stays infinitely close to ``P``, but the singleton masses of the
transformed measure sum to ``alpha`` over the whole grid while the grid itself
still gets mass 1.  That gap, ``alpha - 1``, is the additivity defect: for
``alpha != 1`` the transform is not hyperfinitely additive and therefore
cannot be an internal measure.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .circle import EMPTY, FULL, CircleEvent, arc, ev_double_preimage, ev_lebesgue, ev_rotate, point
from .errors import InfiniteValueError, PreconditionError
from .exact import N, HyperRatFun, Magnitude, hrf_compare, render_rational
from .report import DIVISIBILITY_NOTE, MeasureReport

Scalar = Union[int, Fraction]

EXHAUSTIVE_LIMIT = 12


@dataclass(frozen=True)
class FiniteGrid:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise PreconditionError(f"grid parameter must be a positive integer, got {self.n!r}")

    @property
    def size(self) -> int:
        return 2 * self.n

    def point(self, k: int) -> Fraction:
        return Fraction(k, 2 * self.n)

    def points(self) -> list[Fraction]:
        return [self.point(k) for k in range(self.size)]

    def index(self, x: Fraction) -> int | None:
        k = x * self.size
        return int(k) if k.denominator == 1 else None


@dataclass(frozen=True)
class FiniteEvent:
    grid: FiniteGrid
    indices: frozenset[int]

    def __post_init__(self):
        bad = [k for k in self.indices if not 0 <= k < self.grid.size]
        if bad:
            raise PreconditionError(f"indices {sorted(bad)} outside S_{self.grid.n}")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "FiniteEvent":
        return cls(FiniteGrid(n), frozenset(indices))

    @classmethod
    def from_event(cls, event: CircleEvent, n: int) -> "FiniteEvent":
        """The trace ``A ∩ S_n`` of a circle event on the grid."""
        grid = FiniteGrid(n)
        return cls(grid, frozenset(k for k in range(grid.size) if grid.point(k) in event))

    def render(self) -> str:
        return "{" + ",".join(str(k) for k in sorted(self.indices)) + f"}}⊆S_{self.grid.n}"


def finite_P(e: FiniteEvent) -> Fraction:
    return Fraction(len(e.indices), e.grid.size)


def finite_Q(e: FiniteEvent) -> Fraction:
    """Doubled spinner on ``S_n``: ``P_{2n}`` of the doubling preimage of ``e``."""
    fine = FiniteGrid(2 * e.grid.n)
    total = Fraction(0)
    for k in e.indices:
        x = e.grid.point(k)
        halves = FiniteEvent(fine, frozenset(fine.index(h) for h in (x / 2, x / 2 + Fraction(1, 2))))
        total += finite_P(halves)
    return total


def _subsets(size: int) -> Iterable[frozenset[int]]:
    for r in range(size + 1):
        for combo in itertools.combinations(range(size), r):
            yield frozenset(combo)


def finite_compatibility_check(
    n: int, m: int, samples: int = 1000, seed: int = 0, exhaustive: bool | None = None
) -> MeasureReport:
    """``P_n(A) = P_m({x in S_m : (m/n) x mod 1 in A})`` for ``n | m``.

    By default exhaustive over all subsets of ``S_n`` when ``2n <= 12``, otherwise
    over ``samples`` seeded random subsets; ``exhaustive`` forces either mode.
    """
    if n < 1 or m < 1 or m % n:
        raise PreconditionError(f"compatibility needs n | m, got n={n}, m={m}")
    coarse, fine = FiniteGrid(n), FiniteGrid(m)
    ratio = Fraction(m, n)
    if exhaustive is None:
        exhaustive = coarse.size <= EXHAUSTIVE_LIMIT
    if exhaustive:
        subsets: Iterable[frozenset[int]] = _subsets(coarse.size)
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        subsets = [frozenset(k for k in range(coarse.size) if rng.random() < 0.5) for _ in range(samples)]
        mode = f"{samples} random subsets (seed {seed})"
    checked = 0
    witness = None
    for subset in subsets:
        checked += 1
        a = FiniteEvent(coarse, subset)
        members = {coarse.point(k) for k in subset}
        pulled = frozenset(j for j in range(fine.size) if (ratio * fine.point(j)) % 1 in members)
        lhs, rhs = finite_P(a), finite_P(FiniteEvent(fine, pulled))
        if lhs != rhs:
            witness = f"{a.render()}: {lhs} != {rhs}"
            break
    return MeasureReport(
        check="compatibility",
        inputs={"n": str(n), "m": str(m), "mode": mode},
        value=f"{checked} subsets agree" if witness is None else "mismatch",
        expected="P_n(A) = P_m(pullback of A)",
        passed=witness is None,
        witness=witness,
    )


def finite_coherence_check(n: int, h: int, k: int) -> MeasureReport:
    """Lebesgue length of ``[h/(2n), k/(2n))`` against ``P_n`` of the grid points it holds."""
    if not (n >= 1 and 0 <= h < k <= 2 * n):
        raise PreconditionError(f"need 0 <= h < k <= 2n, got n={n}, h={h}, k={k}")
    grid = FiniteGrid(n)
    event = FULL if k - h == grid.size else arc(grid.point(h), grid.point(k) % 1)
    lebesgue = ev_lebesgue(event)
    trace = FiniteEvent.from_event(event, n)
    discrete = finite_P(trace)
    expected = Fraction(k - h, grid.size)
    ok = lebesgue == discrete == expected and trace.indices == frozenset(range(h, k))
    return MeasureReport(
        check="finite_coherence",
        inputs={"n": str(n), "h": str(h), "k": str(k)},
        value=f"lebesgue={render_rational(lebesgue)} P_n={render_rational(discrete)}",
        expected=render_rational(expected),
        passed=ok,
        witness=None if ok else f"trace={trace.render()}",
    )


@dataclass(frozen=True)
class HyperfiniteModel:
    """Uniform measure on ``S_N`` for a symbolic infinite ``N``.

    Nothing here is computed from a concrete ``N``; the divisibility assumption
    is what makes every rational-arc count an exact multiple of ``2N``.
    """

    assumption: str = DIVISIBILITY_NOTE

    @property
    def grid_size(self) -> HyperRatFun:
        return 2 * N

    def measure(self, event: CircleEvent, grid_size: HyperRatFun) -> HyperRatFun:
        return ev_lebesgue(event) + Fraction(event.net_points()) / grid_size

    def P(self, event: CircleEvent) -> HyperRatFun:
        return self.measure(event, self.grid_size)

    def Q(self, event: CircleEvent) -> HyperRatFun:
        """Doubled spinner: ``P_{2N}`` on the doubling preimage (grid of ``4N`` points)."""
        return self.measure(ev_double_preimage(event), 2 * self.grid_size)


HYPERFINITE = HyperfiniteModel()


def hyper_P(a: CircleEvent) -> HyperRatFun:
    return HYPERFINITE.P(a)


def hyper_Q(a: CircleEvent) -> HyperRatFun:
    return HYPERFINITE.Q(a)


@dataclass(frozen=True)
class PrussAlpha:
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 0:
            raise PreconditionError(f"alpha must be positive, got {self.alpha}")


def _alpha(alpha) -> Fraction:
    return alpha.alpha if isinstance(alpha, PrussAlpha) else PrussAlpha(alpha).alpha


def pruss_transform(p: HyperRatFun, alpha) -> HyperRatFun:
    """``st(p) + alpha * (p - st(p))``."""
    p = HyperRatFun.coerce(p)
    a = _alpha(alpha)
    if p.magnitude() is Magnitude.INFINITE:
        raise InfiniteValueError(f"{p.render()} is infinite")
    st = p.standard_part()
    return st + a * (p - st)


def additivity_defect(alpha) -> Fraction:
    """Total transformed singleton mass over ``S_N`` minus the mass of ``S_N``.

    Every singleton of ``S_N`` gets the same mass, so the hyperfinite sum over
    the ``2N`` points is ``2N`` times one of them.
    """
    a = _alpha(alpha)
    singleton = pruss_transform(hyper_P(point(0)), a)
    defect = HYPERFINITE.grid_size * singleton - pruss_transform(hyper_P(FULL), a)
    if not defect.is_constant():
        raise AssertionError(f"defect {defect.render()} is not a standard number")
    return defect.standard_part()


def pruss_order_check(pairs: Sequence[tuple[CircleEvent, CircleEvent]], alpha) -> MeasureReport:
    a = _alpha(alpha)
    witness = None
    for A, B in pairs:
        pa, pb = hyper_P(A), hyper_P(B)
        ta, tb = pruss_transform(pa, a), pruss_transform(pb, a)
        before, after = hrf_compare(pa, pb), hrf_compare(ta, tb)
        if before != after:
            witness = f"({A.render()}, {B.render()}): {before} vs {after}"
            break
        for ev, p, t in ((A, pa, ta), (B, pb, tb)):
            if (t - p).magnitude() not in (Magnitude.ZERO, Magnitude.INFINITESIMAL):
                witness = f"{ev.render()}: P_alpha - P = {(t - p).render()} is appreciable"
                break
        if witness:
            break
    return MeasureReport(
        check="pruss_order",
        inputs={"alpha": render_rational(a), "pairs": str(len(pairs))},
        value="order preserved, differences infinitesimal" if witness is None else "violation",
        expected="order preserved, differences infinitesimal",
        passed=witness is None,
        witness=witness,
        notes=(DIVISIBILITY_NOTE, f"additivity defect = {render_rational(additivity_defect(a))}"),
    )


def coherence_check(a: CircleEvent) -> MeasureReport:
    p = hyper_P(a)
    st = p.standard_part()
    leb = ev_lebesgue(a)
    close = (p - leb).magnitude() in (Magnitude.ZERO, Magnitude.INFINITESIMAL)
    return MeasureReport(
        check="coherence",
        inputs={"event": a.render()},
        value=f"st({p.render()}) = {render_rational(st)}",
        expected=render_rational(leb),
        passed=st == leb and close,
        notes=(DIVISIBILITY_NOTE, "exact equality of standard parts implies P_N(A) ≈ P_mu(A)"),
    )


def symmetry_check(a: CircleEvent, theta: Scalar) -> MeasureReport:
    rotated = ev_rotate(a, theta)
    p, q = hyper_P(a), hyper_P(rotated)
    return MeasureReport(
        check="symmetry",
        inputs={"event": a.render(), "theta": render_rational(Fraction(theta))},
        value=q.render(),
        expected=p.render(),
        passed=p == q,
        witness=None if p == q else f"rotated event {rotated.render()}",
        notes=(DIVISIBILITY_NOTE,),
    )


def regularity_check(a: CircleEvent) -> MeasureReport:
    p = hyper_P(a)
    if a.is_empty():
        ok = p.is_zero()
        expected = "0"
    else:
        ok = not p.is_zero() and p >= 1 / HYPERFINITE.grid_size
        expected = ">= 1/(2*N)"
    return MeasureReport(
        check="regularity",
        inputs={"event": a.render()},
        value=p.render(),
        expected=expected,
        passed=ok,
        notes=(DIVISIBILITY_NOTE,),
    )


def uniformity_check(a: CircleEvent, b: CircleEvent) -> MeasureReport:
    """Events with equal length and equal net point count get equal mass."""
    if ev_lebesgue(a) != ev_lebesgue(b) or a.net_points() != b.net_points():
        raise PreconditionError("uniformity applies to events of equal length and net point count")
    pa, pb = hyper_P(a), hyper_P(b)
    return MeasureReport(
        check="uniformity",
        inputs={"a": a.render(), "b": b.render()},
        value=pb.render(),
        expected=pa.render(),
        passed=pa == pb,
        notes=(DIVISIBILITY_NOTE,),
    )


def omega_limit_conditional(a: CircleEvent, lam: Iterable[Scalar]) -> Fraction:
    """Finite conditional ``P(A | lam) = |A ∩ lam| / |lam|`` for a finite sample ``lam``."""
    pts = {Fraction(x) % 1 for x in lam}
    if not pts:
        raise PreconditionError("lambda must be a nonempty finite set")
    return Fraction(sum(1 for x in pts if x in a), len(pts))


__all__ = [
    "FiniteGrid",
    "FiniteEvent",
    "HyperfiniteModel",
    "HYPERFINITE",
    "PrussAlpha",
    "finite_P",
    "finite_Q",
    "finite_compatibility_check",
    "finite_coherence_check",
    "hyper_P",
    "hyper_Q",
    "pruss_transform",
    "additivity_defect",
    "pruss_order_check",
    "coherence_check",
    "symmetry_check",
    "regularity_check",
    "uniformity_check",
    "omega_limit_conditional",
    "EMPTY",
    "FULL",
]
