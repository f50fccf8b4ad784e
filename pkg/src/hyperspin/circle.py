"""Exact events on the unit circle.

Angles are rational fractions of a full turn in ``[0, 1)``.  An event is a finite
union of half-open arcs ``[a, b)`` adjusted by finitely many added or removed
points.  Every event has a unique canonical form:

* ``segments`` -- the points ``x`` such that ``[x, x + eps)`` lies in the event
  for some ``eps > 0``, stored as disjoint, non-adjacent linear pieces
  ``[a, b)`` with ``0 <= a < b <= 1`` (an arc wrapping past 0 appears as two
  pieces, one ending at 1 and one starting at 0);
* ``added`` -- members of the event not covered by ``segments``;
* ``removed`` -- points covered by ``segments`` that are not members.

All operations (boolean algebra, rotation, doubling preimage) are carried out
by sampling a membership predicate at the finitely many critical points of the
inputs and at one interior point of every gap between them, then rebuilding
the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

from .errors import ParseError, PreconditionError
from .exact import render_rational

Scalar = Union[int, Fraction]

__all__ = [
    "CircleEvent",
    "arc",
    "point",
    "points",
    "FULL",
    "EMPTY",
    "angle",
    "ev_boolean",
    "ev_rotate",
    "ev_double_preimage",
    "ev_lebesgue",
    "parse_event",
    "UNIT_SCALE",
]

# one full turn expressed in each accepted input unit
UNIT_SCALE = {"turns": Fraction(1), "radians-pi": Fraction(2), "degrees": Fraction(360)}


def angle(x: Scalar) -> Fraction:
    """Reduce a rational angle (in turns) into ``[0, 1)``."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class CircleEvent:
    segments: tuple[tuple[Fraction, Fraction], ...] = ()
    added: frozenset[Fraction] = frozenset()
    removed: frozenset[Fraction] = frozenset()

    def __contains__(self, x: Scalar) -> bool:
        x = angle(x)
        if x in self.added:
            return True
        if x in self.removed:
            return False
        return self._covered(x)

    def _covered(self, x: Fraction) -> bool:
        for a, b in self.segments:
            if a <= x < b:
                return True
            if a > x:
                break
        return False

    @property
    def arcs(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Circular arcs ``(start, end)``; ``end <= start`` means the arc wraps past 0."""
        segs = list(self.segments)
        if self.is_full_arcs():
            return ()
        if len(segs) >= 2 and segs[0][0] == 0 and segs[-1][1] == 1:
            first = segs.pop(0)
            last = segs.pop()
            segs.append((last[0], first[1]))
        return tuple(sorted((a, angle(b)) for a, b in segs))

    def is_full_arcs(self) -> bool:
        return self.segments == ((Fraction(0), Fraction(1)),)

    def is_empty(self) -> bool:
        return not self.segments and not self.added

    def critical_points(self) -> set[Fraction]:
        pts = {Fraction(0)} | set(self.added) | set(self.removed)
        for a, b in self.segments:
            pts.add(a)
            pts.add(angle(b))
        return pts

    # -- set operations ---------------------------------------------------

    def __or__(self, other: "CircleEvent") -> "CircleEvent":
        return ev_boolean(self, other, "union")

    def __and__(self, other: "CircleEvent") -> "CircleEvent":
        return ev_boolean(self, other, "intersect")

    def __sub__(self, other: "CircleEvent") -> "CircleEvent":
        return ev_boolean(self, other, "difference")

    def __invert__(self) -> "CircleEvent":
        return ev_boolean(self, EMPTY, "complement")

    def rotate(self, theta: Scalar) -> "CircleEvent":
        return ev_rotate(self, theta)

    def double_preimage(self) -> "CircleEvent":
        return ev_double_preimage(self)

    def length(self) -> Fraction:
        return ev_lebesgue(self)

    def net_points(self) -> int:
        return len(self.added) - len(self.removed)

    def denominators(self) -> set[int]:
        return {x.denominator for x in self.critical_points()}

    def render(self, unit: str = "turns") -> str:
        scale = UNIT_SCALE[unit]

        def r(x):
            return render_rational(x * scale)

        terms = []
        if self.is_full_arcs():
            terms.append("full")
        else:
            terms.extend(f"arc({r(a)},{r(b)})" for a, b in self.arcs)
        terms.extend(f"point({r(p)})" for p in sorted(self.added))
        out = " + ".join(terms) if terms else "empty"
        for p in sorted(self.removed):
            out += f" - point({r(p)})"
        return out

    def __str__(self):
        return self.render()


def _build(critical: Iterable[Fraction], member: Callable[[Fraction], bool]) -> CircleEvent:
    """Canonical event for a predicate that is constant between the critical points."""
    cps = sorted({angle(c) for c in critical} | {Fraction(0)})
    bounds = cps + [Fraction(1)]
    segments: list[tuple[Fraction, Fraction]] = []
    added, removed = set(), set()
    for i, c in enumerate(cps):
        nxt = bounds[i + 1]
        inside = member((c + nxt) / 2)
        at_c = member(c)
        if inside:
            if segments and segments[-1][1] == c:
                segments[-1] = (segments[-1][0], nxt)
            else:
                segments.append((c, nxt))
            if not at_c:
                removed.add(c)
        elif at_c:
            added.add(c)
    return CircleEvent(tuple(segments), frozenset(added), frozenset(removed))


FULL = CircleEvent(((Fraction(0), Fraction(1)),))
EMPTY = CircleEvent()


def arc(start: Scalar, end: Scalar) -> CircleEvent:
    """Half-open arc ``[start, end)`` in turns, wrapping past 0 when ``end <= start``."""
    a, b = Fraction(start), Fraction(end)
    if not (0 <= a < 1 and 0 <= b < 1):
        raise PreconditionError(f"arc endpoints must lie in [0, 1): {render_rational(a)}, {render_rational(b)}")
    if a == b:
        raise PreconditionError("arc endpoints must differ; use FULL or EMPTY")
    if a < b:
        return CircleEvent(((a, b),))
    segs = ([(Fraction(0), b)] if b > 0 else []) + [(a, Fraction(1))]
    return CircleEvent(tuple(segs))


def point(x: Scalar) -> CircleEvent:
    return CircleEvent(added=frozenset({angle(x)}))


def points(xs: Iterable[Scalar]) -> CircleEvent:
    return CircleEvent(added=frozenset(angle(x) for x in xs))


def ev_boolean(a: CircleEvent, b: CircleEvent, kind: str) -> CircleEvent:
    """``kind`` is one of union, intersect, difference, complement (of ``a``)."""
    ops = {
        "union": lambda x: x in a or x in b,
        "intersect": lambda x: x in a and x in b,
        "difference": lambda x: x in a and x not in b,
        "complement": lambda x: x not in a,
        "complement-of-a": lambda x: x not in a,
    }
    if kind not in ops:
        raise ValueError(f"unknown boolean operation {kind!r}")
    return _build(a.critical_points() | b.critical_points(), ops[kind])


def ev_rotate(a: CircleEvent, theta: Scalar) -> CircleEvent:
    t = angle(theta)
    return _build((c + t for c in a.critical_points()), lambda x: angle(x - t) in a)


def ev_double_preimage(a: CircleEvent) -> CircleEvent:
    """Preimage of ``a`` under the doubling map ``x -> 2x mod 1``."""
    crit = [h + c / 2 for c in a.critical_points() for h in (Fraction(0), Fraction(1, 2))]
    return _build(crit, lambda x: angle(2 * x) in a)


def ev_lebesgue(a: CircleEvent) -> Fraction:
    """Normalised arc length; points are null."""
    return sum((b - s for s, b in a.segments), Fraction(0))


# -- parsing -------------------------------------------------------------------


class _EventParser:
    def __init__(self, text: str, unit: str):
        self.text = text
        self.i = 0
        self.scale = UNIT_SCALE[unit]

    def error(self, msg, at=None):
        raise ParseError(msg, self.text, self.i if at is None else at)

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, s):
        self.skip()
        if not self.text.startswith(s, self.i):
            self.error(f"expected {s!r}")
        self.i += len(s)

    def integer(self) -> int:
        self.skip()
        j = self.i
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == self.i:
            self.error("expected integer")
        v = int(self.text[self.i:j])
        self.i = j
        return v

    def rat(self) -> tuple[Fraction, int]:
        self.skip()
        at = self.i
        v = Fraction(self.integer())
        if self.peek() == "/":
            self.i += 1
            den_at = self.i
            den = self.integer()
            if den == 0:
                self.error("zero denominator", den_at)
            v /= den
        turns = v / self.scale
        if turns >= 1:
            self.error(f"angle {render_rational(v)} is not below one full turn", at)
        return turns, at

    def word(self) -> str:
        self.skip()
        j = self.i
        while j < len(self.text) and self.text[j].isalpha():
            j += 1
        w = self.text[self.i:j]
        self.i = j
        return w

    def term(self) -> CircleEvent:
        self.skip()
        at = self.i
        w = self.word()
        if w == "full":
            return FULL
        if w == "empty":
            return EMPTY
        if w == "arc":
            self.expect("(")
            a, _ = self.rat()
            self.expect(",")
            b, b_at = self.rat()
            self.expect(")")
            if a == b:
                self.error("arc endpoints must differ", b_at)
            return arc(a, b)
        if w == "point":
            self.expect("(")
            p, _ = self.rat()
            self.expect(")")
            return point(p)
        self.error(f"expected arc, point, full or empty, found {w or self.peek()!r}", at)

    def parse(self) -> CircleEvent:
        ev = self.term()
        while True:
            ch = self.peek()
            if ch == "":
                return ev
            if ch == "+":
                self.i += 1
                ev = ev | self.term()
            elif ch in ("-", "−"):
                self.i += 1
                ev = ev - self.term()
            else:
                self.error(f"unexpected {ch!r}")


def parse_event(text: str, unit: str = "turns") -> CircleEvent:
    """Parse ``arc(0,1/2) - point(1/4) + full ...``; endpoints in ``unit``."""
    if unit not in UNIT_SCALE:
        raise ValueError(f"unknown unit {unit!r}")
    return _EventParser(text, unit).parse()
