import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperspin.circle import (
    EMPTY,
    FULL,
    CircleEvent,
    arc,
    ev_boolean,
    ev_double_preimage,
    ev_lebesgue,
    ev_rotate,
    parse_event,
    point,
)
from hyperspin.errors import ParseError, PreconditionError
from strategies import angles, events

F = Fraction


# -- naive oracle: evaluate an expression term by term -----------------------


def term_member(term, x):
    kind, *args = term
    if kind == "full":
        return True
    if kind == "empty":
        return False
    if kind == "point":
        return x == args[0]
    a, b = args
    return a <= x < b if a < b else (x >= a or x < b)


def expr_member(expr, x):
    inside = False
    for op, term in expr:
        if op == "+":
            inside = inside or term_member(term, x)
        else:
            inside = inside and not term_member(term, x)
    return inside


def expr_text(expr):
    def t(term):
        kind, *args = term
        if kind in ("full", "empty"):
            return kind
        return f"{kind}({','.join(str(a) for a in args)})"

    out = t(expr[0][1])
    for op, term in expr[1:]:
        out += f" {op} {t(term)}"
    return out


def random_expr(rng):
    dens = (2, 3, 4, 6, 8)

    def ang():
        q = rng.choice(dens)
        return F(rng.randrange(q), q)

    expr = []
    for i in range(rng.randint(1, 5)):
        r = rng.random()
        if r < 0.5:
            a, b = ang(), ang()
            while b == a:
                b = ang()
            term = ("arc", a, b)
        elif r < 0.9:
            term = ("point", ang())
        else:
            term = (rng.choice(("full", "empty")),)
        expr.append(("+" if i == 0 or rng.random() < 0.6 else "-", term))
    return expr


def sample_angles(rng, k=1000):
    pts = [F(rng.randrange(240), 240) for _ in range(k // 2)]
    pts += [F(rng.randrange(1, 97), 97) for _ in range(k - len(pts))]
    return pts


# -- examples ----------------------------------------------------------------


def test_complement_and_merge():
    assert ev_boolean(arc(0, F(1, 2)), EMPTY, "complement-of-a") == arc(F(1, 2), 0)
    assert arc(0, F(1, 2)) | arc(F(1, 2), 0) == FULL


def test_intersection_example():
    lhs = (arc(0, F(1, 2)) - point(F(1, 4))) & arc(F(1, 8), F(3, 8))
    rhs = arc(F(1, 8), F(3, 8)) - point(F(1, 4))
    assert lhs == rhs
    grid = [F(k, 64) for k in range(64)] + [F(1, 4)]
    for x in grid:
        assert (x in lhs) == ((0 <= x < F(1, 2)) and x != F(1, 4) and (F(1, 8) <= x < F(3, 8)))


def test_rotation_examples():
    assert ev_rotate(arc(0, F(1, 4)), F(1, 2)) == arc(F(1, 2), F(3, 4))
    assert ev_rotate(point(F(7, 8)), F(1, 4)) == point(F(1, 8))
    e = arc(F(1, 3), F(1, 6)) - point(F(1, 2)) | point(F(1, 4))
    assert ev_rotate(e, 0) == e


def test_double_preimage_examples():
    pre = ev_double_preimage(arc(0, F(1, 2)))
    assert pre == arc(0, F(1, 4)) | arc(F(1, 2), F(3, 4))
    for k in range(64):
        x = F(k, 64)
        assert (x in pre) == ((2 * x) % 1 < F(1, 2))
    assert ev_double_preimage(point(0)) == point(0) | point(F(1, 2))
    assert ev_double_preimage(FULL) == FULL
    assert ev_double_preimage(EMPTY) == EMPTY


def test_lebesgue_examples():
    assert ev_lebesgue(arc(0, F(1, 2))) == F(1, 2)
    assert ev_lebesgue(point(F(1, 3))) == 0
    assert ev_lebesgue(arc(F(3, 4), F(1, 4))) == F(1, 4) + F(1, 4)
    assert ev_lebesgue(FULL - point(0)) == 1


def test_endpoint_point_collisions():
    # closed start endpoint: absorbed
    assert arc(0, F(1, 2)) | point(0) == arc(0, F(1, 2))
    # open end endpoint: stays an added point
    e = arc(0, F(1, 2)) | point(F(1, 2))
    assert e.added == {F(1, 2)} and e.segments == ((0, F(1, 2)),)
    # filling the gap removes the point
    assert (FULL - point(F(1, 3))) | point(F(1, 3)) == FULL


def test_canonical_wrap_arc():
    e = arc(F(3, 4), F(1, 4))
    assert e.segments == ((0, F(1, 4)), (F(3, 4), 1))
    assert e.arcs == ((F(3, 4), F(1, 4)),)
    assert e == arc(F(3, 4), 0) | arc(0, F(1, 4))


def test_arc_preconditions():
    with pytest.raises(PreconditionError):
        arc(F(1, 3), F(1, 3))
    with pytest.raises(PreconditionError):
        arc(0, 1)


@pytest.mark.parametrize(
    "text",
    [
        "empty",
        "full",
        "full - point(0)",
        "arc(3/4,1/4) + point(1/2) - point(0)",
        "arc(0,1/4) + arc(1/2,3/4)",
        "point(1/3) + point(2/3)",
    ],
)
def test_render_round_trip_examples(text):
    assert parse_event(text).render() == text


def test_units():
    assert parse_event("arc(0,180)", unit="degrees") == arc(0, F(1, 2))
    assert parse_event("arc(1/2,3/2)", unit="radians-pi") == arc(F(1, 4), F(3, 4))
    assert arc(0, F(1, 2)).render("degrees") == "arc(0,180)"
    with pytest.raises(ParseError):
        parse_event("point(360)", unit="degrees")


@pytest.mark.parametrize("bad, pos", [("arc(0,1/2", 9), ("arc(1/2,1/2)", 8), ("circle", 0), ("point(1)", 6), ("full +", 6), ("full * empty", 5), ("point(1/0)", 8)])
def test_parse_errors(bad, pos):
    with pytest.raises(ParseError) as exc:
        parse_event(bad)
    assert exc.value.pos == pos


# -- properties ----------------------------------------------------------------


def test_membership_oracle_agreement():
    rng = random.Random(7)
    for _ in range(60):
        expr = random_expr(rng)
        ev = parse_event(expr_text(expr))
        crit = [x for _, term in expr for x in term[1:]]
        for x in sample_angles(rng) + crit:
            assert (x in ev) == expr_member(expr, x), (expr_text(expr), x)


def test_canonical_form_unique_per_set():
    rng = random.Random(11)
    for _ in range(100):
        expr = random_expr(rng)
        ev = parse_event(expr_text(expr))
        assert parse_event(ev.render()) == ev
        # an equal set built another way has the same canonical form
        assert ~~ev == ev
        assert (ev | EMPTY) == ev == (ev & FULL)


@given(events(), events(), events())
def test_boolean_laws(a, b, c):
    assert ~(a | b) == ~a & ~b
    assert ~(a & b) == ~a | ~b
    assert a | (a & b) == a
    assert a & (a | b) == a
    assert ~~a == a
    assert a & (b | c) == (a & b) | (a & c)
    assert a - b == a & ~b


@given(events(), events())
def test_lebesgue_finitely_additive(a, b):
    b = b - a
    assert ev_lebesgue(a | b) == ev_lebesgue(a) + ev_lebesgue(b)


@given(events(), angles)
def test_lebesgue_rotation_invariant(a, theta):
    assert ev_lebesgue(ev_rotate(a, theta)) == ev_lebesgue(a)
    assert ev_rotate(ev_rotate(a, theta), 1 - theta) == a


@given(events())
def test_double_preimage_preserves_length(a):
    pre = ev_double_preimage(a)
    assert ev_lebesgue(pre) == ev_lebesgue(a)
    assert len(pre.added) == 2 * len(a.added) and len(pre.removed) == 2 * len(a.removed)


@given(events(), st.lists(angles, min_size=1, max_size=10))
def test_double_preimage_membership(a, xs):
    pre = ev_double_preimage(a)
    for x in xs + [x / 2 for x in xs] + [x / 2 + F(1, 2) for x in xs]:
        assert (x in pre) == ((2 * x) % 1 in a)


@given(events())
def test_invariants_hold(a):
    for p in a.added:
        assert not a._covered(p)
    for p in a.removed:
        assert a._covered(p)
    for (s1, e1), (s2, e2) in zip(a.segments, a.segments[1:]):
        assert e1 < s2
