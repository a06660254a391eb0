"""Random instances and independent oracles for the test suite.

The oracles here deliberately avoid the kernel's division, syzygy and
linear-algebra code.  Polynomials are plain dicts ``{(exps, pos): coeff}``
and orders are re-implemented locally, so that agreement between the two
sides is evidence rather than tautology.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .orders import ModuleMonomial
from .polynomials import PolyContext, PolyVector
from .rings import IntegersMod, Rationals, parse_ring
from .syzygies import SyzygyVector


# ---------------------------------------------------------------------------
# random instances


@dataclass(frozen=True)
class RandomInstanceSpec:
    ring: str = "ZZ"
    n: int = 2
    m: int = 1
    p: int = 2
    max_degree: int = 2
    coeff_bound: int = 5
    seed: int = 0
    max_terms: int = 3
    order: str = "grlex"
    module_order: str = "top"

    def context(self):
        names = tuple(f"x{i + 1}" for i in range(self.n))
        return PolyContext.create(parse_ring(self.ring), names, self.m, self.order, self.module_order)


def random_coefficient(rng, ring, bound):
    if isinstance(ring, Rationals):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
    if isinstance(ring, IntegersMod):
        return rng.randrange(ring.n)
    return rng.randint(-bound, bound)


def random_exponents(rng, n, max_degree):
    d = rng.randint(0, max_degree)
    exps = [0] * n
    for _ in range(d):
        exps[rng.randrange(n)] += 1
    return tuple(exps)


def random_vector(rng, ctx, max_degree, coeff_bound, max_terms, nonzero=True):
    while True:
        raw = []
        for _ in range(rng.randint(1, max_terms)):
            raw.append(
                (
                    random_coefficient(rng, ctx.ring, coeff_bound),
                    (random_exponents(rng, ctx.num_vars, max_degree), rng.randrange(ctx.rank)),
                )
            )
        v = PolyVector.from_terms(ctx, raw)
        if v or not nonzero:
            return v


def random_instance(spec: RandomInstanceSpec):
    """``(ctx, [f_1..f_p])`` with nonzero ``f_j``, reproducible from the seed."""
    rng = random.Random(spec.seed)
    ctx = spec.context()
    fs = [random_vector(rng, ctx, spec.max_degree, spec.coeff_bound, spec.max_terms) for _ in range(spec.p)]
    return ctx, fs


def random_scalar(rng, ctx, max_degree, coeff_bound, max_terms):
    return random_vector(rng, ctx.scalars(), max_degree, coeff_bound, max_terms, nonzero=False)


# ---------------------------------------------------------------------------
# substitution check


def _dict_of(v):
    return {(m.exponents, m.position): c for m, c in v.items()}


def _times(ring, scalar, vec):
    out = {}
    for (se, _), sc in scalar.items():
        for (e, pos), c in vec.items():
            key = (tuple(a + b for a, b in zip(se, e)), pos)
            out[key] = ring.add(out.get(key, ring.zero), ring.mul(sc, c))
    return out


def dict_combination(ring, scalars, fs):
    out = {}
    for g, f in zip(scalars, fs):
        for k, c in _times(ring, _dict_of(g), _dict_of(f)).items():
            out[k] = ring.add(out.get(k, ring.zero), c)
    return {k: c for k, c in out.items() if not ring.is_zero(c)}


def verify_syzygy(v, fs):
    """Exact check ``sum v_j f_j = 0``."""
    entries = v.entries if isinstance(v, SyzygyVector) else tuple(v)
    fs = list(fs)
    if len(entries) != len(fs):
        raise ValueError("length mismatch")
    if not fs:
        return True
    return not dict_combination(fs[0].ctx.ring, entries, fs)


# ---------------------------------------------------------------------------
# division contract


def _lt_member(ring, coeff, mono, leads):
    D = [c for c, m in leads if m.position == mono.position
         and all(a <= b for a, b in zip(m.exponents, mono.exponents))]
    return ring.ideal_member(coeff, D).member


def division_violations(u, divisors, result):
    """Broken clauses of the division contract, as messages.

    Checked: ``u = sum q_j h_j + r`` (recomputed with dict arithmetic),
    ``LM(q_j h_j) <= LM(u)`` for nonzero products, and that no term of
    ``r`` lies in the module of the divisors' leading terms.
    """
    ring = u.ctx.ring
    key = u.ctx.order.key
    problems = []
    recon = dict_combination(ring, result.quotients, divisors)
    for m, c in _dict_of(result.remainder).items():
        recon[m] = ring.add(recon.get(m, ring.zero), c)
    recon = {m: c for m, c in recon.items() if not ring.is_zero(c)}
    if recon != _dict_of(u):
        problems.append("reconstruction identity fails")
    for j, (q, h) in enumerate(zip(result.quotients, divisors)):
        if q.is_zero():
            continue
        prod = dict_combination(ring, [q], [h])
        if not prod:
            continue
        top = max((ModuleMonomial(e, pos) for e, pos in prod), key=key)
        if u.is_zero() or key(top) > key(u.lm()):
            problems.append(f"quotient {j} exceeds LM(u)")
    leads = [(t.coeff, t.monomial) for t in (h.leading_term() for h in divisors)]
    for m, c in result.remainder.items():
        if _lt_member(ring, c, m, leads):
            problems.append(f"remainder term at {m} is reducible")
    return problems


# ---------------------------------------------------------------------------
# Schreyer leading terms


def schreyer_leading_term_violations(G, output):
    """Syzygies whose leading term under the Schreyer order is not
    ``s_r * (M^E / M_r) * eps_r`` with ``r`` the first index of ``E`` where
    ``s`` is nonzero."""
    elems = list(G)
    ring = elems[0].ctx.ring
    lms = [g.lm() for g in elems]
    bad = []
    for u in output.syzygies:
        E, i = u.label
        r, s_r = next((j, c) for j, c in zip(E, u.coefficients) if not ring.is_zero(c))
        shift = tuple(a - b for a, b in zip(u.lcm.exponents, lms[r].exponents))
        lt = u.to_vector(output.context).leading_term()
        if lt is None or lt.coeff != s_r or lt.monomial != ModuleMonomial(shift, r):
            bad.append(u.label)
    return bad


# ---------------------------------------------------------------------------
# brute-force syzygies of terms over Z/n


@dataclass(frozen=True)
class HomogeneousSyzygy:
    """Syzygy of terms concentrated at one target monomial ``T``."""

    target: tuple  # (exponents, position)
    coefficients: dict  # j -> c_j, with entry j = c_j * T / M_j

    def to_syzygy(self, ctx, terms):
        sctx = ctx.scalars()
        entries = [sctx.zero()] * len(terms)
        texps, _ = self.target
        for j, c in self.coefficients.items():
            q = tuple(a - b for a, b in zip(texps, terms[j][1].exponents))
            entries[j] = sctx.monomial(q, 0, c)
        return SyzygyVector(tuple(entries))


def _monomials_up_to(n, degree):
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            yield tuple(e)


def _target_divisors(terms, target):
    texps, tpos = target
    return [
        j
        for j, (_, m) in enumerate(terms)
        if m.position == tpos and all(a <= b for a, b in zip(m.exponents, texps))
    ]


def brute_force_syzygies(ctx, terms, degree_bound, limit=200_000):
    """All nonzero syzygies of ``terms`` homogeneous at a target monomial of
    degree at most ``max deg(M_j) + degree_bound``, by exhaustive search over
    the coefficients (Z/n only)."""
    ring = ctx.ring
    if not isinstance(ring, IntegersMod):
        raise ValueError("brute force needs a finite coefficient ring")
    n = ring.n
    top = max(sum(m.exponents) for _, m in terms) + degree_bound
    positions = sorted({m.position for _, m in terms})
    out = []
    work = 0
    for pos in positions:
        for texps in _monomials_up_to(ctx.num_vars, top):
            D = _target_divisors(terms, (texps, pos))
            if not D:
                continue
            work += n ** len(D)
            if work > limit:
                raise RuntimeError("brute-force bound exceeded")
            for cs in itertools.product(range(n), repeat=len(D)):
                if not any(cs):
                    continue
                if sum(c * terms[j][0] for c, j in zip(cs, D)) % n == 0:
                    out.append(HomogeneousSyzygy((texps, pos), dict(zip(D, cs))))
    return out


def span_closure(vectors, n, length):
    """The Z/n-span of ``vectors`` in (Z/n)^length, by closure under
    addition and scaling."""
    gens = [tuple(x % n for x in v) for v in vectors]
    span = {(0,) * length}
    frontier = [(0,) * length]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                for k in range(1, n):
                    t = tuple((a + k * b) % n for a, b in zip(s, g))
                    if t not in span:
                        span.add(t)
                        nxt.append(t)
        frontier = nxt
    return span


def lifted_generators_at(target, terms, generators):
    """Coefficient vectors (over the divisors of ``target``) of those
    generators whose lcm monomial divides ``target``.

    ``generators`` are ``(E, s, lcm_exps, lcm_pos)``: coefficient tuple
    ``s`` on index set ``E`` with lcm monomial ``M^E``.
    """
    texps, tpos = target
    D = _target_divisors(terms, target)
    index = {j: k for k, j in enumerate(D)}
    out = []
    for E, s, lcm_exps, lcm_pos in generators:
        if lcm_pos != tpos or not all(a <= b for a, b in zip(lcm_exps, texps)):
            continue
        v = [0] * len(D)
        for j, c in zip(E, s):
            v[index[j]] = c
        out.append(tuple(v))
    return D, out


def syzygy_in_span(h: HomogeneousSyzygy, terms, generators, n):
    """Is the homogeneous syzygy ``h`` in the span of the term syzygies
    ``generators`` (each multiplied up to ``h.target``)?"""
    D, vecs = lifted_generators_at(h.target, terms, generators)
    want = tuple(h.coefficients.get(j, 0) % n for j in D)
    return want in span_closure(vecs, n, len(D))


# ---------------------------------------------------------------------------
# textbook Buchberger over Q, ideals only


def _order_key(name, exps):
    if name == "lex":
        return tuple(exps)
    if name == "grlex":
        return (sum(exps), tuple(exps))
    if name == "grevlex":
        return (sum(exps), tuple(-e for e in reversed(exps)))
    raise ValueError(name)


class FieldPoly:
    """Sparse polynomial over Q as ``{exps: Fraction}``."""

    def __init__(self, terms, order):
        self.terms = {e: Fraction(c) for e, c in terms.items() if c != 0}
        self.order = order

    def lead(self):
        e = max(self.terms, key=lambda x: _order_key(self.order, x))
        return e, self.terms[e]

    def __bool__(self):
        return bool(self.terms)

    def sub_multiple(self, c, shift, other):
        out = dict(self.terms)
        for e, a in other.terms.items():
            k = tuple(x + y for x, y in zip(e, shift))
            out[k] = out.get(k, 0) - c * a
        return FieldPoly(out, self.order)

    def monic(self):
        _, c = self.lead()
        return FieldPoly({e: a / c for e, a in self.terms.items()}, self.order)


def field_reduce(f, G):
    """Normal form of ``f`` by ``G``, one divisor at a time."""
    r = {}
    f = FieldPoly(f.terms, f.order)
    while f:
        e, c = f.lead()
        for g in G:
            ge, gc = g.lead()
            if all(a <= b for a, b in zip(ge, e)):
                f = f.sub_multiple(c / gc, tuple(a - b for a, b in zip(e, ge)), g)
                break
        else:
            r[e] = c
            del f.terms[e]
    return FieldPoly(r, f.order)


def _s_poly(f, g):
    fe, fc = f.lead()
    ge, gc = g.lead()
    lcm = tuple(max(a, b) for a, b in zip(fe, ge))
    zero = FieldPoly({}, f.order)
    a = zero.sub_multiple(-1 / fc, tuple(x - y for x, y in zip(lcm, fe)), f)
    return a.sub_multiple(1 / gc, tuple(x - y for x, y in zip(lcm, ge)), g)


def field_buchberger_oracle(polys, order="grlex"):
    """Reduced Gröbner basis of the ideal of ``polys`` (dicts over Q)."""
    G = [FieldPoly(p, order) for p in polys]
    G = [g for g in G if g]
    pairs = list(itertools.combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.pop(0)
        r = field_reduce(_s_poly(G[i], G[j]), G)
        if r:
            G.append(r)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    # minimal then reduced
    G = [g.monic() for g in G]
    minimal = []
    for k, g in enumerate(G):
        ge, _ = g.lead()
        covered = False
        for l, h in enumerate(G):
            if l == k:
                continue
            he, _ = h.lead()
            if all(a <= b for a, b in zip(he, ge)) and (he != ge or l < k):
                covered = True
                break
        if not covered:
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        e, c = g.lead()
        tail = field_reduce(FieldPoly({x: a for x, a in g.terms.items() if x != e}, order), others)
        tail.terms[e] = c
        reduced.append(FieldPoly(tail.terms, order))
    return reduced


def to_field_dict(v):
    """Kernel ideal element (rank 1) as a plain dict."""
    if v.ctx.rank != 1:
        raise ValueError("the field oracle handles ideals only")
    return {m.exponents: Fraction(c) for m, c in v.items()}


def field_spans_equal(A, B, order):
    """Both lists are Gröbner bases of the same ideal iff each reduces the
    other to zero (ideal equality, given both are bases)."""
    A = [FieldPoly(a, order) for a in A]
    B = [FieldPoly(b, order) for b in B]
    A = [a for a in A if a]
    B = [b for b in B if b]
    return all(not field_reduce(a, B) for a in A) and all(not field_reduce(b, A) for b in B)


__all__ = [
    "RandomInstanceSpec",
    "random_instance",
    "random_vector",
    "random_scalar",
    "verify_syzygy",
    "division_violations",
    "schreyer_leading_term_violations",
    "brute_force_syzygies",
    "syzygy_in_span",
    "span_closure",
    "field_buchberger_oracle",
    "field_reduce",
    "field_spans_equal",
    "to_field_dict",
]
