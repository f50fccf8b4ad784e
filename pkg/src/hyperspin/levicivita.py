"""Truncated Levi-Civita numbers.

A Levi-Civita number is a formal series ``sum a_q d^q`` over rational exponents
whose support meets every ray ``(-inf, q]`` in a finite set; ``d`` is a positive
infinitesimal.  Only finitely many terms can be stored, so every
:class:`LCNumber` carries a *knowledge order*: all terms with exponent at or
below it are exact, everything above it is unknown.  Each operation states the
order up to which its result is exact, and equality is only ever certified up
to that order.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import ExactDivisionError, InfiniteValueError, ParseError, PreconditionError
from .exact import render_rational
from .report import MeasureReport

DEFAULT_ORDER = Fraction(10)

Scalar = Union[int, Fraction]

__all__ = [
    "DEFAULT_ORDER",
    "LCNumber",
    "LCOrdering",
    "d",
    "lc_from_terms",
    "lc_add",
    "lc_mul",
    "lc_inv",
    "lc_compare",
    "lc_standard_part",
    "lc_divergence_witness",
    "parse_lc",
]


class LCOrdering(enum.Enum):
    LESS = "less"
    EQUAL_UP_TO_ORDER = "equal_up_to_order"
    GREATER = "greater"


class LCNumber:
    """Levi-Civita number known exactly up to ``order``.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs sorted by exponent,
    with no zero coefficients and no exponent above ``order``.
    """

    __slots__ = ("terms", "order")

    def __init__(self, terms: Mapping[Scalar, Scalar] | Iterable[tuple[Scalar, Scalar]] = (), order: Scalar = DEFAULT_ORDER):
        order = Fraction(order)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, Fraction] = {}
        for q, c in items:
            q, c = Fraction(q), Fraction(c)
            if q <= order:
                acc[q] = acc.get(q, Fraction(0)) + c
        self.terms: tuple[tuple[Fraction, Fraction], ...] = tuple(sorted((q, c) for q, c in acc.items() if c))
        self.order = order

    @classmethod
    def const(cls, c: Scalar, order: Scalar = DEFAULT_ORDER) -> "LCNumber":
        return cls({0: c}, order)

    @classmethod
    def monomial(cls, c: Scalar, q: Scalar, order: Scalar = DEFAULT_ORDER) -> "LCNumber":
        return cls({q: c}, order)

    @property
    def coeffs(self) -> dict[Fraction, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        """True when no term is known to be nonzero within the knowledge window."""
        return not self.terms

    def least_exponent(self) -> Fraction:
        """Least exponent of the support.

        An element with an empty term map is only known to have its support above
        ``order``; ``min(0, order)`` is used so derived orders stay sound.
        """
        if self.terms:
            return self.terms[0][0]
        return min(Fraction(0), self.order)

    def leading(self) -> tuple[Fraction, Fraction]:
        if not self.terms:
            raise ExactDivisionError("zero Levi-Civita number has no leading term")
        return self.terms[0]

    def truncate(self, order: Scalar) -> "LCNumber":
        order = Fraction(order)
        if order > self.order:
            raise PreconditionError(f"cannot extend knowledge order {self.order} to {order}")
        return LCNumber(self.terms, order)

    def eq_up_to(self, other: "LCNumber", order: Scalar | None = None) -> bool:
        """Term-map equality over the common knowledge window (or ``order`` if smaller)."""
        k = min(self.order, other.order)
        if order is not None:
            k = min(k, Fraction(order))
        return self.truncate(k).terms == other.truncate(k).terms

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LCNumber.const(other, self.order)
        if not isinstance(other, LCNumber):
            return NotImplemented
        acc = dict(self.terms)
        for q, c in other.terms:
            acc[q] = acc.get(q, Fraction(0)) + c
        return LCNumber(acc, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return LCNumber(((q, -c) for q, c in self.terms), self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LCNumber.const(other, self.order)
        if not isinstance(other, LCNumber):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "LCNumber":
        c = Fraction(c)
        return LCNumber(((q, c * a) for q, a in self.terms), self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LCNumber):
            return NotImplemented
        order = min(self.order + other.least_exponent(), other.order + self.least_exponent())
        acc: dict[Fraction, Fraction] = {}
        for q1, c1 in self.terms:
            for q2, c2 in other.terms:
                q = q1 + q2
                if q <= order:
                    acc[q] = acc.get(q, Fraction(0)) + c1 * c2
        return LCNumber(acc, order)

    __rmul__ = __mul__

    def inverse(self) -> "LCNumber":
        """Multiplicative inverse via ``a = c d^lam (1 + eps)``.

        ``1/(1 + eps)`` is summed on the additive monoid generated by the exponents
        of ``eps``; the result is exact to ``order - 2*lam``.
        """
        if not self.terms:
            raise ExactDivisionError("inverse of zero Levi-Civita number")
        lam, c = self.terms[0]
        rel = self.order - lam
        eps = [(q - lam, a / c) for q, a in self.terms[1:]]
        support = {Fraction(0)}
        frontier = [Fraction(0)]
        while frontier:
            nxt = []
            for e in frontier:
                for f, _ in eps:
                    s = e + f
                    if s <= rel and s not in support:
                        support.add(s)
                        nxt.append(s)
            frontier = nxt
        series: dict[Fraction, Fraction] = {}
        for e in sorted(support):
            if e == 0:
                series[e] = Fraction(1)
                continue
            acc = Fraction(0)
            for f, a in eps:
                if f > e:
                    break
                prev = series.get(e - f)
                if prev:
                    acc -= a * prev
            series[e] = acc
        return LCNumber(((e - lam, b / c) for e, b in series.items()), self.order - 2 * lam)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ExactDivisionError("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if not isinstance(other, LCNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return LCNumber.const(1, self.order)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    # -- order --------------------------------------------------------------

    def compare(self, other) -> LCOrdering:
        if isinstance(other, (int, Fraction)):
            other = LCNumber.const(other, self.order)
        diff = self - other
        if not diff.terms:
            return LCOrdering.EQUAL_UP_TO_ORDER
        return LCOrdering.GREATER if diff.terms[0][1] > 0 else LCOrdering.LESS

    def sign(self) -> int:
        if not self.terms:
            return 0
        return 1 if self.terms[0][1] > 0 else -1

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __lt__(self, other):
        return self.compare(other) is LCOrdering.LESS

    def __gt__(self, other):
        return self.compare(other) is LCOrdering.GREATER

    def __eq__(self, other):
        if isinstance(other, LCNumber):
            return self.terms == other.terms and self.order == other.order
        return NotImplemented

    def __hash__(self):
        return hash((self.terms, self.order))

    def is_infinitesimal(self) -> bool:
        return bool(self.terms) and self.terms[0][0] > 0

    def standard_part(self) -> Fraction:
        if self.terms and self.terms[0][0] < 0:
            raise InfiniteValueError(f"{self.render()} is infinite")
        return self.coeffs.get(Fraction(0), Fraction(0))

    # -- text ---------------------------------------------------------------

    def render(self) -> str:
        parts = []
        for q, c in self.terms:
            mag = abs(c)
            if q == 0:
                body = render_rational(mag)
            else:
                if q == 1:
                    var = "d"
                elif q.denominator == 1 and q > 0:
                    var = f"d^{q.numerator}"
                else:
                    var = f"d^({render_rational(q)})"
                body = var if mag == 1 else f"{render_rational(mag)}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            head = "0"
        else:
            head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, body in parts[1:]:
                head += f" {sign} {body}"
        return f"{head} + O(d>{render_rational(self.order)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LCNumber({self.render()!r})"


d = LCNumber.monomial(1, 1)


def lc_from_terms(pairs: Iterable[tuple[Scalar, Scalar]], order: Scalar = DEFAULT_ORDER) -> LCNumber:
    pairs = [(Fraction(q), Fraction(c)) for q, c in pairs]
    seen = set()
    for q, _ in pairs:
        if q in seen:
            raise PreconditionError(f"duplicate exponent {render_rational(q)}")
        seen.add(q)
    return LCNumber(pairs, order)


def lc_add(a: LCNumber, b: LCNumber) -> LCNumber:
    return a + b


def lc_mul(a: LCNumber, b: LCNumber) -> LCNumber:
    return a * b


def lc_inv(a: LCNumber) -> LCNumber:
    return a.inverse()


def lc_compare(a: LCNumber, b) -> LCOrdering:
    return a.compare(b)


def lc_standard_part(a: LCNumber) -> Fraction:
    return a.standard_part()


def lc_divergence_witness(h: LCNumber, n_max: int) -> MeasureReport:
    """Certify that ``n*h`` (n = 1..n_max) never settles down for infinitesimal ``h``.

    Consecutive terms differ by exactly ``h`` and any two distinct terms are at
    least ``h`` apart, so no tail of the sequence is Cauchy for the threshold ``h``.
    """
    if not h.is_infinitesimal():
        raise PreconditionError(f"{h.render()} is not a nonzero infinitesimal")
    if n_max < 2:
        raise PreconditionError("need at least two terms")
    seq = [h * n for n in range(1, n_max + 1)]
    witness = None
    for i in range(1, n_max):
        gap = seq[i] - seq[i - 1]
        if gap.compare(h) is not LCOrdering.EQUAL_UP_TO_ORDER:
            witness = f"gap {i}->{i + 1} is {gap.render()}"
            break
    if witness is None:
        for i in range(n_max):
            for j in range(i + 1, n_max):
                if abs(seq[j] - seq[i]).compare(h) is LCOrdering.LESS:
                    witness = f"|{j + 1}h - {i + 1}h| < h"
                    break
            if witness:
                break
    return MeasureReport(
        check="lc_divergence",
        inputs={"h": h.render(), "n_max": str(n_max)},
        value="all gaps equal h" if witness is None else "gap mismatch",
        expected="all gaps equal h",
        passed=witness is None,
        witness=witness,
        notes=("a constant positive gap means {n*h} is not Cauchy, hence does not converge",),
    )


# -- parsing -------------------------------------------------------------------


class _LCParser:
    def __init__(self, text: str, default_order: Fraction):
        self.text = text
        self.i = 0
        self.default_order = default_order

    def error(self, msg):
        raise ParseError(msg, self.text, self.i)

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, s: str):
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

    def rational(self, signed=False) -> Fraction:
        neg = False
        if signed and self.peek() in ("-", "−"):
            self.i += 1
            neg = True
        v = Fraction(self.integer())
        if self.peek() == "/":
            self.i += 1
            den = self.integer()
            if den == 0:
                self.error("zero denominator")
            v /= den
        return -v if neg else v

    def exponent(self) -> Fraction:
        if self.peek() == "^":
            self.i += 1
            if self.peek() == "(":
                self.i += 1
                q = self.rational(signed=True)
                self.expect(")")
                return q
            return self.rational(signed=True)
        return Fraction(1)

    def term(self) -> tuple[Fraction, Fraction]:
        ch = self.peek()
        if ch == "d":
            self.i += 1
            return self.exponent(), Fraction(1)
        c = self.rational()
        if self.peek() == "*":
            self.i += 1
            if self.peek() != "d":
                self.error("expected 'd'")
            self.i += 1
            return self.exponent(), c
        return Fraction(0), c

    def parse(self) -> LCNumber:
        pairs = []
        sign = 1
        if self.peek() in ("-", "−"):
            self.i += 1
            sign = -1
        order = None
        while True:
            start = self.i
            if self.peek() == "O":
                self.i += 1
                self.expect("(")
                self.expect("d")
                self.expect(">")
                order = self.rational(signed=True)
                self.expect(")")
                if sign < 0:
                    self.i = start
                    self.error("order marker cannot be negated")
            else:
                q, c = self.term()
                if any(q == p for p, _ in pairs):
                    self.i = start
                    self.error(f"duplicate exponent {render_rational(q)}")
                pairs.append((q, sign * c))
            ch = self.peek()
            if ch == "":
                break
            if order is not None:
                self.error("order marker must come last")
            if ch == "+":
                sign = 1
            elif ch in ("-", "−"):
                sign = -1
            else:
                self.error(f"unexpected {ch!r}")
            self.i += 1
        if order is None:
            order = self.default_order
        for q, _ in pairs:
            if q > order:
                raise ParseError(f"term d^{render_rational(q)} lies above the order {render_rational(order)}", self.text, 0)
        return LCNumber(pairs, order)


def parse_lc(text: str, order: Scalar = DEFAULT_ORDER) -> LCNumber:
    """Parse e.g. ``1 - d + 1/2*d^(3/2) + O(d>4)``; without a marker ``order`` applies."""
    if not text.strip():
        raise ParseError("empty input", text, 0)
    return _LCParser(text, Fraction(order)).parse()
