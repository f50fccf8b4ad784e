"""Exact rationals, univariate polynomials and rational functions of an infinite N.

A :class:`HyperRatFun` is a rational function ``p(N)/q(N)`` where ``N`` stands
for a fixed infinite hypernatural.  Two such functions are ordered by eventual
dominance: ``f > g`` when ``f(M) > g(M)`` for every sufficiently large integer
``M``.  With this order the rational functions form a non-Archimedean ordered
field in which ``1/N`` is a positive infinitesimal.

Values are always stored in canonical form (integer coefficients, coprime
numerator and denominator, no common content, positive leading coefficient in
the denominator), so ``==`` is structural equality.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import ExactDivisionError, InfiniteValueError, ParseError

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "Poly",
    "HyperRatFun",
    "Magnitude",
    "N",
    "rat_arith",
    "hrf_arith",
    "hrf_compare",
    "classify",
    "standard_part",
    "expand_in_d",
    "parse_hrf",
    "render_rational",
]


def rat_arith(a: Scalar, b: Scalar, kind: str) -> Fraction:
    """Exact ``a <kind> b`` for ``kind`` in add/sub/mul/div."""
    a, b = Fraction(a), Fraction(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        if b == 0:
            raise ExactDivisionError(f"{a} / 0")
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def render_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Poly:
    """Univariate polynomial in ``N`` with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``N**k``; trailing zeros are stripped,
    so the zero polynomial has an empty tuple and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[render_rational(c) for c in self.coeffs]})"

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, c: Scalar) -> "Poly":
        return Poly(Fraction(c) * x for x in self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ExactDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        lead = other.lead
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def monic(self) -> "Poly":
        return self.scale(1 / self.lead) if self.coeffs else self

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd by the Euclidean algorithm over the rationals."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def root_bound(self) -> Fraction:
        """Cauchy bound: every real root has absolute value below this."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.lead)
        return 1 + max(abs(c) / lead for c in self.coeffs[:-1])

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = render_rational(mag)
            else:
                var = "N" if k == 1 else f"N^{k}"
                body = var if mag == 1 else f"{render_rational(mag)}*{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out


_ONE = Poly((1,))


def _content(cs: Sequence[Fraction]) -> Fraction:
    """Positive rational ``c`` such that ``cs / c`` is a primitive integer vector."""
    den = reduce(math.lcm, (c.denominator for c in cs), 1)
    num = reduce(math.gcd, (c.numerator * (den // c.denominator) for c in cs), 0)
    return Fraction(num, den)


class Magnitude(enum.Enum):
    ZERO = "zero"
    INFINITESIMAL = "infinitesimal"
    APPRECIABLE = "appreciable"
    INFINITE = "infinite"


class HyperRatFun:
    """Element ``num(N)/den(N)`` of the ordered field of rational functions in N."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | Scalar = 0, den: Poly | Scalar = 1):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ExactDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        if num.degree > 0 and den.degree > 0:
            g = num.gcd(den)
        else:
            g = _ONE
        if g.degree > 0:
            num, den = num.divmod(g)[0], den.divmod(g)[0]
        c = _content(num.coeffs + den.coeffs)
        if den.lead < 0:
            c = -c
        self.num, self.den = num.scale(1 / c), den.scale(1 / c)

    @classmethod
    def coerce(cls, x) -> "HyperRatFun":
        if isinstance(x, HyperRatFun):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot convert {type(x).__name__} to HyperRatFun")

    # -- field operations -------------------------------------------------

    def __add__(self, other):
        try:
            o = HyperRatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return HyperRatFun(self.num + o.num, self.den)
        return HyperRatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return HyperRatFun(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = HyperRatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return HyperRatFun.coerce(other) - self

    def __mul__(self, other):
        try:
            o = HyperRatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return HyperRatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = HyperRatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ExactDivisionError(f"({self.render()}) / 0")
        return HyperRatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return HyperRatFun.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return HyperRatFun(1) / self ** (-k)
        out = HyperRatFun(1)
        for _ in range(k):
            out = out * self
        return out

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        """Eventual sign as N grows; the denominator lead is positive."""
        if self.num.is_zero():
            return 0
        return 1 if self.num.lead > 0 else -1

    def _cmp(self, other) -> int:
        return (self - HyperRatFun.coerce(other)).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HyperRatFun(other)
        if isinstance(other, HyperRatFun):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def magnitude(self) -> Magnitude:
        if self.is_zero():
            return Magnitude.ZERO
        dn, dd = self.num.degree, self.den.degree
        if dn > dd:
            return Magnitude.INFINITE
        if dn < dd:
            return Magnitude.INFINITESIMAL
        return Magnitude.APPRECIABLE

    def standard_part(self) -> Fraction:
        m = self.magnitude()
        if m is Magnitude.INFINITE:
            raise InfiniteValueError(f"{self.render()} is infinite")
        if m is Magnitude.APPRECIABLE:
            return self.num.lead / self.den.lead
        return Fraction(0)

    def __call__(self, n: Scalar) -> Fraction:
        """Exact value with the symbol N replaced by the number ``n``."""
        d = self.den(n)
        if d == 0:
            raise ExactDivisionError(f"denominator of {self.render()} vanishes at N={n}")
        return self.num(n) / d

    def render(self) -> str:
        num, den = self.num, self.den
        if den.degree == 0:
            if num.degree <= 0:
                return render_rational(num.lead / den.lead)
            return num.scale(1 / den.lead).render()

        def simple(p: Poly) -> bool:
            # a bare integer or a bare power of N needs no parentheses
            nz = [c for c in p.coeffs if c]
            return len(nz) == 1 and (p.degree == 0 or p.lead == 1)

        ns = num.render()
        if len([c for c in num.coeffs if c]) > 1:
            ns = f"({ns})"
        ds = den.render()
        if not simple(den):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"HyperRatFun({self.render()!r})"


N = HyperRatFun(Poly((0, 1)))


def hrf_arith(a, b, kind: str) -> HyperRatFun:
    a, b = HyperRatFun.coerce(a), HyperRatFun.coerce(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def hrf_compare(a, b) -> str:
    """Return ``'less'``, ``'equal'`` or ``'greater'`` under eventual dominance."""
    s = HyperRatFun.coerce(a)._cmp(b)
    return {-1: "less", 0: "equal", 1: "greater"}[s]


def classify(x) -> Magnitude:
    return HyperRatFun.coerce(x).magnitude()


def standard_part(x) -> Fraction:
    return HyperRatFun.coerce(x).standard_part()


def _series_quotient(num: Sequence[Fraction], den: Sequence[Fraction], terms: int) -> list[Fraction]:
    """First ``terms`` coefficients of the power series num(d)/den(d); den[0] != 0."""
    out = []
    for k in range(terms):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / den[0])
    return out


def expand_in_d(x, order: Scalar):
    """Laurent expansion of ``x`` under the substitution ``N = 1/d``.

    The result is a Levi-Civita number exact for every exponent ``<= order``.
    """
    from .levicivita import LCNumber

    x = HyperRatFun.coerce(x)
    order = Fraction(order)
    if x.is_zero():
        return LCNumber({}, order)
    # p(1/d) = d^-deg(p) * reversed(p)(d)
    rn = tuple(reversed(x.num.coeffs))
    rd = tuple(reversed(x.den.coeffs))
    shift = x.den.degree - x.num.degree
    top = math.floor(order) - shift
    if top < 0:
        return LCNumber({}, order)
    coeffs = _series_quotient(rn, rd, top + 1)
    return LCNumber({Fraction(shift + k): c for k, c in enumerate(coeffs) if c}, order)


# -- parsing -------------------------------------------------------------------


def _tokenize(text: str, idents: set[str]) -> list[tuple[str, object, int]]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word not in idents:
                raise ParseError(f"unknown name {word!r}", text, i)
            toks.append(("id", word, i))
            i = j
        elif ch in "+-*/^()":
            toks.append((ch, ch, i))
            i += 1
        elif ch == "−":
            toks.append(("-", "-", i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    toks.append(("end", None, len(text)))
    return toks


class _ExprParser:
    """Precedence-climbing parser for ``+ - * / ^`` over integers and one symbol."""

    def __init__(self, text: str, symbol: str, value):
        self.text = text
        self.symbol = symbol
        self.value = value
        self.toks = _tokenize(text, {symbol})
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", self.text, tok[2])
        self.pos += 1
        return tok

    def parse(self):
        v = self.sum()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0]!r}", self.text, tok[2])
        return v

    def sum(self):
        v = self.product()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.product()
            v = v + rhs if op == "+" else v - rhs
        return v

    def product(self):
        v = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, at = self.take()
            rhs = self.unary()
            if op == "*":
                v = v * rhs
            else:
                try:
                    v = v / rhs
                except ExactDivisionError:
                    raise ParseError("division by zero", self.text, at) from None
        return v

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            neg = False
            if self.peek()[0] == "-":
                self.take()
                neg = True
            _, k, at = self.take("int")
            try:
                base = base ** (-k if neg else k)
            except ExactDivisionError:
                raise ParseError("division by zero", self.text, at) from None
        return base

    def atom(self):
        kind, val, at = self.peek()
        if kind == "int":
            self.take()
            return HyperRatFun(val)
        if kind == "id":
            self.take()
            return self.value
        if kind == "(":
            self.take()
            v = self.sum()
            self.take(")")
            return v
        raise ParseError(f"unexpected {kind!r}", self.text, at)


def parse_hrf(text: str) -> HyperRatFun:
    """Parse an arithmetic expression in ``N``, e.g. ``(N-1)/(2*N)``."""
    return _ExprParser(text, "N", N).parse()
