from fractions import Fraction

from conftest import QQ, ZZ, Z8, ctx_of, polys
from syzcalc.division import divide
from syzcalc.polynomials import PolyVector
from syzcalc.syzygies import SyzygyVector
from syzcalc.testkit import (
    RandomInstanceSpec,
    brute_force_syzygies,
    division_violations,
    field_buchberger_oracle,
    field_reduce,
    FieldPoly,
    random_instance,
    span_closure,
    verify_syzygy,
)


def test_random_instances_are_reproducible():
    spec = RandomInstanceSpec("ZZ/8", 3, 2, 3, 4, 5, seed=11)
    assert random_instance(spec)[1] == random_instance(spec)[1]
    assert all(f for f in random_instance(spec)[1])


def test_verify_syzygy_examples():
    ctx = ctx_of(ZZ, "u")
    fs = polys(ctx, "2", "u", "u + 2")
    assert verify_syzygy(SyzygyVector(tuple(polys(ctx, "1", "1", "-1"))), fs)
    assert not verify_syzygy(SyzygyVector(tuple(polys(ctx, "1"))), fs[:1])


def test_brute_force_unit_term():
    ctx = ctx_of(Z8, "x")
    assert brute_force_syzygies(ctx, [(1, ctx.variable(0).lm())], 1) == []


def test_span_closure():
    assert span_closure([(2, 0)], 8, 2) == {(0, 0), (2, 0), (4, 0), (6, 0)}


def test_field_oracle_trivial_cases():
    x = {(1, 0): Fraction(1)}
    assert [g.terms for g in field_buchberger_oracle([x])] == [x]
    one = {(0, 0): Fraction(1)}
    assert [g.terms for g in field_buchberger_oracle([one, x])] == [one]


def test_field_oracle_known_basis():
    G = field_buchberger_oracle(
        [{(2, 0): 1, (0, 1): -1}, {(3, 0): 1, (1, 0): -1}], "lex"
    )
    # x^3 - x reduces to zero modulo the basis, and so does x^2 - y
    for f in ({(2, 0): 1, (0, 1): -1}, {(3, 0): 1, (1, 0): -1}):
        assert not field_reduce(FieldPoly(f, "lex"), G)
    assert sorted(g.lead()[0] for g in G) == [(0, 2), (1, 1), (2, 0)]


def test_division_violations_detects_bad_results():
    ctx = ctx_of(ZZ)
    u, h = polys(ctx, "x", "x")
    good = divide(u, [h])
    assert division_violations(u, [h], good) == []
    bad = type(good)([ctx.zero()], u)  # remainder still reducible
    assert division_violations(u, [h], bad) == ["remainder term at ModuleMonomial(exponents=(1, 0), position=0) is reducible"]
    wrong = type(good)([ctx.one()], u)
    assert "reconstruction identity fails" in division_violations(u, [h], wrong)
