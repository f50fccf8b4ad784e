from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperspin.errors import ExactDivisionError, InfiniteValueError, ParseError, PreconditionError
from hyperspin.exact import expand_in_d
from hyperspin.levicivita import (
    LCNumber,
    LCOrdering,
    d,
    lc_add,
    lc_compare,
    lc_divergence_witness,
    lc_from_terms,
    lc_inv,
    lc_mul,
    lc_standard_part,
    parse_lc,
)
from strategies import hrfs, lc_numbers

F = Fraction


def naive_product(a: LCNumber, b: LCNumber) -> dict:
    """Every exponent pair, no pruning."""
    out = {}
    for q1, c1 in a.terms:
        for q2, c2 in b.terms:
            out[q1 + q2] = out.get(q1 + q2, 0) + c1 * c2
    return {q: c for q, c in out.items() if c}


def test_from_terms_examples():
    assert lc_from_terms([(0, 1), (1, -1)], 5) == LCNumber({0: 1, 1: -1}, 5)
    assert lc_from_terms([(1, 0)], 5).terms == ()
    x = lc_from_terms([(-1, 2), (F(1, 2), 3)], 0)
    assert x.terms == ((-1, 2),) and x.order == 0
    with pytest.raises(PreconditionError):
        lc_from_terms([(1, 1), (1, 2)], 5)


def test_add_examples():
    one = LCNumber.const(1)
    assert lc_add(one + d, one - d) == LCNumber.const(2)
    assert (d + d**2).terms == ((1, 1), (2, 1))
    x = LCNumber.const(1, 2) + LCNumber.monomial(5, 3)
    assert x.terms == ((0, 1),) and x.order == 2


def test_mul_examples():
    assert lc_mul(1 + d, 1 - d) == LCNumber({0: 1, 2: -1}, 10)
    half = LCNumber.monomial(1, F(1, 2))
    assert (half * half).terms == ((1, 1),)
    a = lc_from_terms([(0, 1), (1, -1)], 3)
    b = lc_from_terms([(k, 1) for k in range(4)], 3)
    # by hand: (1 - d)(1 + d + d^2 + d^3) = 1 - d^4
    assert lc_mul(a, b) == LCNumber({0: 1}, 3)


def test_mul_order_rule():
    a = LCNumber({-1: 1}, 4)
    b = LCNumber({2: 1}, 6)
    # min(4 + 2, 6 - 1)
    assert (a * b).order == 5


def test_inverse_examples():
    assert lc_inv(lc_from_terms([(0, 1), (1, -1)], 3)) == LCNumber({0: 1, 1: 1, 2: 1, 3: 1}, 3)
    assert lc_inv(d).terms == ((-1, 1),)
    with pytest.raises(ExactDivisionError):
        lc_inv(LCNumber({}))


def test_inverse_with_fractional_exponents():
    x = LCNumber({0: 2, F(1, 3): 1}, 2)
    y = x.inverse()
    assert (x * y).terms == ((0, 1),)
    # 1/(2 + t) = 1/2 - t/4 + t^2/8 - ..., t = d^(1/3)
    assert y.coeffs[F(1, 3)] == F(-1, 4) and y.coeffs[F(2, 3)] == F(1, 8)


def test_compare_examples():
    assert lc_compare(d, 0) is LCOrdering.GREATER
    assert lc_compare(d, F(1, 1000)) is LCOrdering.LESS
    assert lc_compare(1 + d, 1) is LCOrdering.GREATER
    assert lc_compare(LCNumber.const(1), LCNumber.const(1)) is LCOrdering.EQUAL_UP_TO_ORDER


@pytest.mark.parametrize("r", [F(1), F(1, 10**6), F(1, 10**30)])
def test_d_below_every_positive_rational(r):
    assert d < LCNumber.const(r)
    assert d.inverse() > LCNumber.const(1 / r)


def test_standard_part():
    assert lc_standard_part(LCNumber({0: F(1, 2), 1: 3})) == F(1, 2)
    assert lc_standard_part(d) == 0
    with pytest.raises(InfiniteValueError):
        lc_standard_part(d.inverse())


def test_divergence_witness():
    r = lc_divergence_witness(d, 4)
    assert r.passed
    r = lc_divergence_witness(d**2, 3)
    assert r.passed and "d^2" in r.inputs["h"]
    with pytest.raises(PreconditionError):
        lc_divergence_witness(LCNumber.const(1), 3)


@pytest.mark.parametrize(
    "x, text",
    [
        (1 - d, "1 - d + O(d>10)"),
        (LCNumber({-1: 2, F(1, 2): -3}, 4), "2*d^(-1) - 3*d^(1/2) + O(d>4)"),
        (LCNumber({}, 3), "0 + O(d>3)"),
        (LCNumber({2: F(-1, 2)}, F(7, 2)), "-1/2*d^2 + O(d>7/2)"),
    ],
)
def test_render_and_parse(x, text):
    assert x.render() == text
    assert parse_lc(text) == x


def test_parse_variants():
    assert parse_lc("d^-1 + 2") == LCNumber({-1: 1, 0: 2})
    assert parse_lc("1 − d", order=3) == LCNumber({0: 1, 1: -1}, 3)
    for bad in ("1 + + d", "d + d", "2*x", "O(d>2) + d", "d^3 + O(d>2)", ""):
        with pytest.raises(ParseError):
            parse_lc(bad)


@given(lc_numbers())
def test_round_trip(x):
    assert parse_lc(x.render()) == x


@given(lc_numbers(), lc_numbers(), lc_numbers())
def test_ring_axioms_up_to_order(a, b, c):
    assert ((a + b) + c).eq_up_to(a + (b + c))
    assert (a * (b + c)).eq_up_to(a * b + a * c)
    assert (a * b).eq_up_to(b * a)
    assert ((a * b) * c).eq_up_to(a * (b * c))


@given(lc_numbers().filter(lambda x: bool(x.terms)))
def test_inverse_law(a):
    assert (a * a.inverse()).terms == ((0, 1),)


@given(lc_numbers(), lc_numbers(), lc_numbers())
def test_translation_invariance(a, b, c):
    if a < b:
        assert not (a + c > b + c)
        k = min(a.order, b.order, c.order)
        if (b - a).terms and (b - a).terms[0][0] <= k:
            assert a + c < b + c


@given(lc_numbers(), lc_numbers())
def test_trichotomy(a, b):
    results = {a.compare(b), b.compare(a)}
    assert results in ({LCOrdering.LESS, LCOrdering.GREATER}, {LCOrdering.EQUAL_UP_TO_ORDER})


@given(lc_numbers(), lc_numbers())
def test_product_matches_naive_convolution(a, b):
    p = a * b
    naive = naive_product(a, b)
    assert p.coeffs == {q: c for q, c in naive.items() if q <= p.order}


def test_retained_terms_are_exact():
    # the true value of (1 - d)^-1 is 1 + d + d^2 + ...; a truncated input must
    # never produce a wrong coefficient inside the stated window
    x = LCNumber({0: 1, 1: -1}, 3)
    exact = LCNumber({k: 1 for k in range(20)}, 19)
    assert x.inverse().eq_up_to(exact)
    y = LCNumber({-1: 1}, 2) * x
    assert y.order == 2 and y.eq_up_to(LCNumber({-1: 1, 0: -1}, 19))


@given(hrfs, hrfs)
def test_embedding_consistency(x, y):
    prod = expand_in_d(x, 8) * expand_in_d(y, 8)
    assert prod.eq_up_to(expand_in_d(x * y, 8))


def test_operators_with_scalars():
    assert 2 * d == LCNumber({1: 2})
    assert (d + 1).standard_part() == 1
    assert (1 - d).terms == ((0, 1), (1, -1))
    assert (d / 2).terms == ((1, F(1, 2)),)
    assert ((1 + d) / (1 + d)).terms == ((0, 1),)
