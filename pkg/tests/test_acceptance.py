"""Acceptance criteria 1-10.

Each criterion runs under its time limit and prints one PASS/FAIL line.
Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

import io
import random
import sys
import time

import pytest

from syzcalc.cli import EXIT_LIMIT, run
from syzcalc.division import divide
from syzcalc.groebner import (
    GroebnerBasis,
    RoundLimitExceeded,
    buchberger,
    buchberger_criterion,
    groebner_basis,
    mlt_generators_up_to,
    term_in_lt_module,
)
from syzcalc.notation import parse_polynomial
from syzcalc.polynomials import PolyContext, linear_combination
from syzcalc.resolutions import free_resolution, schreyer_syzygies
from syzcalc.rings import Integers, IntegersMod, Rationals
from syzcalc.resolutions import syzygies_of_generators
from syzcalc.syzygies import (
    RewriteState,
    SyzygyVector,
    iterated_rewrite,
    iterated_s_list,
    position_level_sets,
    rewrite_step,
    syzygies_of_terms,
)
from syzcalc.testkit import (
    RandomInstanceSpec,
    division_violations,
    field_buchberger_oracle,
    field_spans_equal,
    random_instance,
    schreyer_leading_term_violations,
    to_field_dict,
    verify_syzygy,
)


def P(ctx, *texts):
    return [parse_polynomial(t, ctx) for t in texts]


def ex42_context():
    ctx = PolyContext.create(IntegersMod(8), ("X", "Y"), 2)
    return ctx, P(ctx, "2*X^2*Y*e1", "X*Y^2*e1", "4*X*e2")


def mutually_reduce(A, B):
    """Every vector of A reduces to zero modulo a Groebner basis of B and
    vice versa."""
    GA = groebner_basis(A, 16).elements
    GB = groebner_basis(B, 16).elements
    return all(divide(b, list(GA)).remainder.is_zero() for b in B) and all(
        divide(a, list(GB)).remainder.is_zero() for a in A
    )


# ---------------------------------------------------------------------------
# criteria; each returns (ok, detail)


def criterion_1():
    ctx, fs = ex42_context()
    terms = [f.leading_term() for f in fs]
    sets = position_level_sets([t.monomial for t in terms])
    syz = syzygies_of_terms(ctx, terms)
    rank3 = PolyContext.create(IntegersMod(8), ("X", "Y"), 3)
    got = [S.to_vector(rank3) for S in syz]
    want = P(rank3, "4*e1", "2*e3", "Y*e1 + 6*X*e2")
    ok_sets = sets == [(0,), (1,), (2,), (0, 1)]
    ok_span = mutually_reduce(got, want)
    ok_syz = all(verify_syzygy(S, fs) for S in syz)
    return ok_sets and ok_span and ok_syz, f"level sets {sets}, span match {ok_span}"


def criterion_2():
    ctx = PolyContext.create(Integers(), ("X", "Y", "Z"), 1, "grlex")
    g = P(ctx, "5*X*Z + 10*Z^2", "-2*Y + 2*Z", "-3*X^2*Y - 6*X*Y^2")
    f = P(ctx, "6*X*Y^2", "15*X^2*Y*Z", "10*Z^2")
    first = rewrite_step(RewriteState.start(list(zip(g, f))))
    ok_mid = [p[0] for p in first.pairs[:3]] == P(ctx, "10*Z^2", "2*Z", "-3*X^2*Y - 6*X*Y^2")
    res = iterated_rewrite(list(zip(g, f)))
    grouped = res.state.grouped_decomposition()
    want = {((0, 1), 0): -1, ((1, 2), 0): -1, ((0, 2), 0): -2}
    ok_coeffs = {k: v[0] for k, v in grouped.items()} == {k: ctx.constant(c) for k, c in want.items()}
    # substitution identity: g = sum c_k * S_k, componentwise
    total = [ctx.zero()] * 3
    for c, S in grouped.values():
        total = [t + s.times(c) for t, s in zip(total, S)]
    ok_identity = total == g
    return ok_mid and ok_coeffs and ok_identity, f"q={res.q}, g'={ok_mid}, coefficients={ok_coeffs}"


def criterion_3():
    ctx = PolyContext.create(Integers(), ("X", "Y"), 1, "lex")
    g = P(ctx, "2*X + Y", "-3*X^2 + 2*X*Y", "3*X*Y - 9*Y^2")
    f = P(ctx, "3*X*Y", "3*Y", "X")
    ok_ring = Integers().syzygy_generators((3, 3, 1)).generators == ((-1, 1, 0), (-1, 0, 3))
    res = iterated_rewrite(list(zip(g, f)))
    grouped = res.state.grouped_decomposition()
    want = {
        ((0, 1, 2), 0): (P(ctx, "-3*X + 2*Y")[0], tuple(P(ctx, "-1", "X", "0"))),
        ((0, 1, 2), 1): (P(ctx, "X - 3*Y")[0], tuple(P(ctx, "-1", "0", "3*Y"))),
    }
    ok_decomp = {k: (v[0], tuple(v[1])) for k, v in grouped.items()} == want
    total = [ctx.zero()] * 3
    for c, S in grouped.values():
        total = [t + s.times(c) for t, s in zip(total, S)]
    return ok_ring and ok_decomp and total == g, f"Syz(3,3,1) {ok_ring}, decomposition {ok_decomp}"


def criterion_4():
    ctx = PolyContext.create(Integers(), ("u",), 1)
    H = P(ctx, "2", "u", "u + 2")
    target = SyzygyVector(tuple(P(ctx, "1", "1", "-1")))
    ok_verify = verify_syzygy(target, H)
    syz = syzygies_of_generators(H)
    ok_outputs = all(verify_syzygy(v, H) for v in syz)
    rank3 = PolyContext.create(Integers(), ("u",), 3)
    module = groebner_basis([v.to_vector(rank3) for v in syz], 16).elements
    r = divide(target.to_vector(rank3), list(module)).remainder
    return ok_verify and ok_outputs and r.is_zero(), f"verify {ok_verify}, remainder {r}"


DIVISION_BACKENDS = ("ZZ", "QQ", "ZZ/8", "ZZ/6")


def criterion_5():
    failures = 0
    count = 0
    for ring in DIVISION_BACKENDS:
        for seed in range(500):
            rng = random.Random(seed)
            spec = RandomInstanceSpec(
                ring, rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 3) + 1, 4, 9, seed, 4,
                rng.choice(["lex", "grlex", "grevlex"]), rng.choice(["top", "pot"]),
            )
            _, fs = random_instance(spec)
            u, hs = fs[0], fs[1:]
            failures += bool(division_violations(u, hs, divide(u, hs)))
            count += 1
    return failures == 0, f"{count} instances, {failures} failures"


def random_buchberger_instances():
    for ring in ("ZZ", "ZZ/8"):
        for seed in range(200):
            rng = random.Random(seed)
            yield RandomInstanceSpec(ring, rng.randint(1, 2), rng.randint(1, 2), rng.randint(1, 3), 2, 4, seed, 3)


def criterion_6():
    failures = terminated = 0
    for spec in random_buchberger_instances():
        _, fs = random_instance(spec)
        G, report = buchberger(fs, 8)
        if not report.terminated:
            continue
        terminated += 1
        if not buchberger_criterion(G.elements):
            failures += 1
        elif not all(divide(f, list(G.elements)).remainder.is_zero() for f in fs):
            failures += 1
    # the round-capped path: a partial basis and exit status 2
    text = "x^3 - y + 1\nx*y^2 - 2\ny^3 - x\n"
    code, out, _ = run(["groebner", "--vars", "x,y", "--max-rounds", "1"], io.StringIO(text))
    ctx = PolyContext.create(Integers(), ("x", "y"))
    try:
        groebner_basis(P(ctx, *text.split("\n")[:3]), max_rounds=1)
        raised = False
    except RoundLimitExceeded as exc:
        raised = len(exc.basis) > 3
    ok_cap = code == EXIT_LIMIT and "round limit reached" in out and raised
    return failures == 0 and terminated > 0 and ok_cap, (
        f"{terminated}/400 terminated, {failures} failures, round cap exit {code}"
    )


def criterion_7():
    mismatches = 0
    for seed in range(100):
        rng = random.Random(5000 + seed)
        order = rng.choice(["lex", "grlex", "grevlex"])
        spec = RandomInstanceSpec("QQ", rng.randint(1, 3), 1, rng.randint(1, 3), 3, 5, 5000 + seed, 3, order)
        _, fs = random_instance(spec)
        G = groebner_basis(fs, 32)
        oracle = field_buchberger_oracle([to_field_dict(f) for f in fs], order)
        if not field_spans_equal([to_field_dict(g) for g in G.elements], [o.terms for o in oracle], order):
            mismatches += 1
    return mismatches == 0, f"100 ideals, {mismatches} mismatches"


def golden_bases():
    ctx, fs = ex42_context()
    yield fs
    q = PolyContext.create(Rationals(), ("X", "Y"))
    yield P(q, "X", "Y")
    z3 = PolyContext.create(Integers(), ("X", "Y", "Z"))
    yield P(z3, "6*X*Y^2", "15*X^2*Y*Z", "10*Z^2")
    z2 = PolyContext.create(Integers(), ("X", "Y"), 1, "lex")
    yield P(z2, "3*X*Y", "3*Y", "X")
    z = PolyContext.create(Integers(), ("x", "y"))
    yield P(z, "2*x", "x + y", "2*y")


def criterion_8():
    failures = checked = 0
    bases = list(golden_bases())
    for spec in list(random_buchberger_instances())[::4]:
        _, fs = random_instance(spec)
        G, report = buchberger(fs, 8)
        if report.terminated:
            bases.append(list(G.elements))
    for seed in range(50):
        _, fs = random_instance(RandomInstanceSpec("QQ", 2, 1, 2, 2, 4, seed, 3))
        bases.append(list(groebner_basis(fs, 16).elements))
    # the stages of resolutions are Groebner bases under Schreyer orders
    _, fs = ex42_context()
    res = free_resolution(fs)
    bases += [list(st.elements) for st in res.stages if st.elements]
    for G in bases:
        out = schreyer_syzygies(G)
        checked += len(out.syzygies)
        failures += len(schreyer_leading_term_violations(G, out))
    return failures == 0 and checked > 0, f"{checked} syzygies over {len(bases)} bases, {failures} failures"


def criterion_9():
    q = PolyContext.create(Rationals(), ("X", "Y"))
    res = free_resolution(P(q, "X", "Y"))
    ok_koszul = res.ranks == [1, 2, 1] and res.length == 2 and res.composition_zero()
    _, fs = ex42_context()
    res2 = free_resolution(fs)
    ok_len = res2.complete and res2.length <= 3 and res2.composition_zero()
    gone = set()
    ok_elim = True
    for st in res2.stages:
        for g in st.elements:
            ok_elim &= all(g.lm().exponents[v] == 0 for v in gone)
        if st.eliminated is not None:
            gone.add(st.eliminated)
    return ok_koszul and ok_len and ok_elim, (
        f"<X,Y> ranks {res.ranks}; Z/8 example ranks {res2.ranks}, length {res2.length}, "
        f"elimination {ok_elim}"
    )


def criterion_10():
    failures = 0
    for seed in range(40):
        ring = ("ZZ", "ZZ/8", "QQ")[seed % 3]
        _, fs = random_instance(RandomInstanceSpec(ring, 2, 1, 2, 2, 4, seed, 2))
        levels = [mlt_generators_up_to(q, fs) for q in range(3)]
        for lo, hi in zip(levels, levels[1:]):
            if hi[: len(lo)] != lo:
                failures += 1
        lists = [iterated_s_list(q, fs) for q in range(3)]
        for t in levels[1]:
            if not term_in_lt_module(t, lists[2]).member:
                failures += 1
    # explicit non-termination reporting
    ctx = PolyContext.create(Integers(), ("x", "y"))
    fs = P(ctx, "x^3 - y + 1", "x*y^2 - 2", "y^3 - x")
    _, report = buchberger(fs, max_rounds=1)
    ok_cap = not report.terminated and report.rounds == 1
    return failures == 0 and ok_cap, f"{failures} chain failures, capped run terminated={report.terminated}"


CRITERIA = {
    1: (criterion_1, 1.0),
    2: (criterion_2, 1.0),
    3: (criterion_3, 1.0),
    4: (criterion_4, 1.0),
    5: (criterion_5, 30.0),
    6: (criterion_6, 60.0),
    7: (criterion_7, 30.0),
    8: (criterion_8, None),
    9: (criterion_9, 5.0),
    10: (criterion_10, None),
}


def evaluate(n):
    fn, limit = CRITERIA[n]
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed <= limit
    status = "PASS" if ok and in_time else "FAIL"
    bound = "no limit" if limit is None else f"limit {limit:g} s"
    line = f"criterion {n:2d}: {status}  ({elapsed:.2f} s, {bound})  {detail}"
    return ok and in_time, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line = evaluate(n)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
