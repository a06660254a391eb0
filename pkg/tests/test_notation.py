import random

import pytest
from hypothesis import given, strategies as st

from conftest import QQ, ZZ, Z8, ctx_of
from syzcalc.notation import ParseError, format_polynomial, parse_polynomial, poly_from_json, poly_to_json
from syzcalc.orders import ModuleMonomial
from syzcalc.testkit import random_vector


def test_parse_grammar_examples():
    ctx = ctx_of(Z8, rank=2)
    v = parse_polynomial("2*x^2*y*e1 + x*y^2*e1", ctx)
    assert v.coefficient(((2, 1), 0)) == 2 and v.coefficient(((1, 2), 0)) == 1
    w = parse_polynomial("4*x*e2", ctx)
    assert list(w.items()) == [(ModuleMonomial((1, 0), 1), 4)]
    assert parse_polynomial("0", ctx).is_zero()
    # juxtaposition and a leading sign
    assert parse_polynomial("-3 x y e2", ctx) == parse_polynomial("5*x*y*e2", ctx)


def test_parse_merges_like_terms():
    ctx = ctx_of(ZZ)
    assert parse_polynomial("x + x - 2*x", ctx).is_zero()


@pytest.mark.parametrize(
    "text,ring,rank,fragment",
    [
        ("x + z", ZZ, 1, "unknown variable"),
        ("x*e3", ZZ, 2, "out of range"),
        ("1/2*x", ZZ, 1, "outside QQ"),
        ("x +", ZZ, 1, "expected a term"),
        ("x ^ y", ZZ, 1, "expected an integer"),
        ("", ZZ, 1, "empty"),
        ("x*e1*e2", ZZ, 2, "only one basis"),
        ("x $ y", ZZ, 1, "unexpected"),
    ],
)
def test_parse_errors(text, ring, rank, fragment):
    with pytest.raises(ParseError) as exc:
        parse_polynomial(text, ctx_of(ring, rank=rank))
    assert fragment in str(exc.value)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x + 2*q", ctx_of(ZZ))
    assert exc.value.position == 6


def test_format_examples():
    ctx = ctx_of(ZZ)
    assert format_polynomial(parse_polynomial("-x + 1 - y^2", ctx)) == "-y^2 - x + 1"
    assert format_polynomial(ctx.zero()) == "0"
    assert format_polynomial(parse_polynomial("-1", ctx)) == "-1"
    q = ctx_of(QQ)
    assert format_polynomial(parse_polynomial("1/2*x - 3/4", q)) == "1/2*x - 3/4"
    m = ctx_of(Z8, rank=2)
    assert format_polynomial(parse_polynomial("-x*e2 + 4*e1", m)) == "7*x*e2 + 4*e1"
    assert format_polynomial(parse_polynomial("4*e1", m), basis="s") == "4*s1"


rings = st.sampled_from([ZZ, QQ, Z8])


@given(rings, st.sampled_from(["lex", "grlex", "grevlex"]), st.sampled_from(["top", "pot"]),
       st.integers(1, 3), st.integers(0, 10**6))
def test_parse_format_round_trip(R, order, mod, rank, seed):
    ctx = ctx_of(R, "x,y,z", rank, order, mod)
    v = random_vector(random.Random(seed), ctx, 4, 20, 5, nonzero=False)
    text = format_polynomial(v)
    assert parse_polynomial(text, ctx) == v
    assert format_polynomial(parse_polynomial(text, ctx)) == text
    assert poly_from_json(poly_to_json(v), ctx) == v
