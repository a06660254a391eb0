"""Schreyer syzygies, syzygies of arbitrary generators, free resolutions.

A syzygy of ``G = (g_1..g_p)`` lives in R[X]^p.  :func:`schreyer_syzygies`
returns both the :class:`SyzygyVector` form (scalars indexed by ``j``) and
the module-vector form in a rank-``p`` context ordered by the Schreyer
order that ``G`` induces; the latter is what the next resolution stage
takes as its Gröbner basis.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .division import divide
from .groebner import (
    DEFAULT_MAX_ROUNDS,
    GroebnerBasis,
    NotAGroebnerBasis,
    _combine,
    groebner_basis,
    term_in_lt_module,
)
from .orders import OrderSpec, schreyer_order
from .polynomials import PolyContext, PolyVector, linear_combination
from .syzygies import DEFAULT_LEVEL_SET_CAP, SyzygyVector, syzygies_of_terms


class StageLimitError(RuntimeError):
    def __init__(self, resolution):
        super().__init__(f"resolution not finished after {len(resolution.stages)} stages")
        self.resolution = resolution


StageLimitExceeded = StageLimitError


@dataclass(frozen=True)
class SchreyerOutput:
    syzygies: Tuple[SyzygyVector, ...]
    order: OrderSpec
    context: PolyContext  # rank p, Schreyer order

    def vectors(self):
        return [s.to_vector(self.context) for s in self.syzygies]


def syzygy_context(G):
    """Rank-``len(G)`` context carrying the Schreyer order induced by ``G``."""
    elems = list(G)
    ctx = elems[0].ctx
    order = schreyer_order(ctx.order, [g.lm() for g in elems])
    return PolyContext(ctx.ring, ctx.var_names, len(elems), order)


def schreyer_syzygies(G, cap=DEFAULT_LEVEL_SET_CAP):
    """``u = S - q`` for every generator ``S`` of the syzygies of ``LT(G)``,
    where ``q`` are the quotients of ``sum S_j g_j`` divided by ``G``."""
    elems = list(G)
    if not elems:
        raise ValueError("schreyer_syzygies needs a nonempty basis")
    ctx = elems[0].ctx
    sctx = syzygy_context(elems)
    out = []
    for S in syzygies_of_terms(ctx, [g.leading_term() for g in elems], cap=cap):
        v = linear_combination(((a, g) for a, g in zip(S.entries, elems) if not a.is_zero()), ctx)
        res = divide(v, elems)
        if not res.remainder.is_zero():
            raise NotAGroebnerBasis(f"S-combination {S.label} leaves remainder {res.remainder!r}")
        entries = tuple(a - q for a, q in zip(S.entries, res.quotients))
        out.append(SyzygyVector(entries, S.label, S.coefficients, S.lcm))
    return SchreyerOutput(tuple(out), sctx.order, sctx)


def _identity_rows(p, sctx):
    return [tuple(sctx.one() if j == k else sctx.zero() for j in range(p)) for k in range(p)]


def syzygies_of_generators(H, max_rounds=DEFAULT_MAX_ROUNDS):
    """Generators of the syzygy module of an arbitrary list ``H``.

    The Gröbner basis ``G`` of ``H`` carries a provenance matrix ``A``
    (``G = A H``).  When ``G`` starts with ``H`` (as Buchberger's output
    does), the syzygies are exactly ``u A`` for ``u`` a syzygy of ``G``.
    Otherwise ``H = B G`` is obtained by division and the rows of
    ``I - B A`` are added.
    """
    basis = H if isinstance(H, GroebnerBasis) else groebner_basis(list(H), max_rounds)
    p = len(basis.inputs)
    sctx = basis.ctx.scalars()
    out = []
    seen = set()

    def emit(row):
        row = tuple(row)
        if any(not e.is_zero() for e in row) and row not in seen:
            seen.add(row)
            out.append(SyzygyVector(row))

    for u in schreyer_syzygies(basis).syzygies:
        emit(_combine(u.entries, basis.provenance, sctx, p))
    if tuple(basis.elements[:p]) != tuple(basis.inputs):
        ident = _identity_rows(p, sctx)
        for j, h in enumerate(basis.inputs):
            res = divide(h, list(basis.elements))
            if not res.remainder.is_zero():
                raise NotAGroebnerBasis("an input does not reduce to zero")
            ba = _combine(res.quotients, basis.provenance, sctx, p)
            emit(a - b for a, b in zip(ident[j], ba))
    return out


def reorder_for_elimination(G, var):
    """Stable sort within each leading position by descending degree of the
    leading monomial in variable ``var``; returns ``(basis, permutation)``
    where ``permutation[k]`` is the old index of the new ``k``-th element."""
    if not isinstance(G, GroebnerBasis):
        G = GroebnerBasis.trivial(G)
    lms = [g.lm() for g in G.elements]
    slots = {}
    for k, m in enumerate(lms):
        slots.setdefault(m.position, []).append(k)
    perm = list(range(len(lms)))
    for idx in slots.values():
        ranked = sorted(idx, key=lambda k: -lms[k].exponents[var])
        for dst, src in zip(idx, ranked):
            perm[dst] = src
    basis = GroebnerBasis(
        tuple(G.elements[k] for k in perm), G.order, tuple(G.provenance[k] for k in perm), G.inputs
    )
    return basis, tuple(perm)


@dataclass
class Stage:
    """Generators of stage ``k``: vectors in R[X]^{rank} under ``order``.

    ``eliminated`` is the variable removed from the leading terms of the
    next stage (None for the last stage).
    """

    elements: Tuple[PolyVector, ...]
    context: PolyContext
    eliminated: Optional[int] = None
    pruned: int = 0

    @property
    def size(self):
        return len(self.elements)

    @property
    def rank(self):
        return self.context.rank

    @property
    def order(self):
        return self.context.order


@dataclass
class Resolution:
    """``0 <- F_0 <- F_1 <- ... <- F_q`` with stage ``k`` mapping ``F_{k+1}`` to ``F_k``.

    ``ranks = [rank F_0, rank F_1, ...]``.  If the final stage has constant
    leading terms, its module is the presentation left over the base ring.
    """

    stages: List[Stage] = field(default_factory=list)
    complete: bool = False

    @property
    def ranks(self):
        if not self.stages:
            return []
        return [self.stages[0].rank] + [s.size for s in self.stages]

    @property
    def length(self):
        return len(self.stages)

    def eliminated_variables(self):
        return [s.eliminated for s in self.stages if s.eliminated is not None]

    def composition_zero(self):
        for prev, cur in zip(self.stages, self.stages[1:]):
            for u in cur.elements:
                if not linear_combination(zip(u.components(), prev.elements), prev.context).is_zero():
                    return False
        return True


def _highest_variable(elements):
    present = [i for i in range(elements[0].ctx.num_vars) if any(g.lm().exponents[i] for g in elements)]
    return max(present) if present else None


def _constant_leads(elements):
    return all(not any(g.lm().exponents) for g in elements)


def next_stage(elements, var, cap=DEFAULT_LEVEL_SET_CAP):
    """Reorder ``elements`` for eliminating ``var`` and compute their Schreyer
    syzygies, dropping those whose leading term still contains ``var``.

    Such a syzygy arises from a level set ``E`` whose first nonzero
    coefficient is not at ``min E``; its leading term already lies in the
    module generated by the leading terms of the syzygies of the smaller
    level set (its coefficient support), so the rest is still a Gröbner
    basis of the same module.
    """
    basis, perm = reorder_for_elimination(list(elements), var)
    out = schreyer_syzygies(basis, cap)
    vecs = [v for v in out.vectors() if not v.is_zero()]
    kept = [v for v in vecs if v.lm().exponents[var] == 0]
    dropped = [v for v in vecs if v.lm().exponents[var] != 0]
    for v in dropped:
        if not kept or not term_in_lt_module(v.leading_term(), kept).member:
            raise RuntimeError("a syzygy with the eliminated variable is not covered by the others")
    return basis.elements, out.context, kept, len(dropped)


def free_resolution(gens, max_stage=None, max_rounds=DEFAULT_MAX_ROUNDS, cap=DEFAULT_LEVEL_SET_CAP):
    """Free resolution by repeated Schreyer syzygies with variable elimination.

    Stage 0 is a Gröbner basis of ``gens``.  Before passing from one stage to
    the next, the highest-indexed variable still present in its leading
    terms is eliminated.  Stops when a stage is empty or has constant
    leading terms; ``max_stage`` bounds the number of stages.
    """
    gens = [g for g in gens]
    if not gens or any(g.is_zero() for g in gens):
        raise ValueError("free_resolution needs nonzero generators")
    n = gens[0].ctx.num_vars
    limit = n + 1 if max_stage is None else max_stage
    basis = groebner_basis(gens, max_rounds)
    res = Resolution()
    elements = tuple(basis.elements)
    ctx = gens[0].ctx
    while True:
        if len(res.stages) >= limit:
            raise StageLimitError(res)
        var = None if _constant_leads(elements) else _highest_variable(elements)
        if var is None:
            res.stages.append(Stage(elements, ctx))
            res.complete = True
            break
        ordered, sctx, syz, pruned = next_stage(elements, var, cap)
        res.stages.append(Stage(tuple(ordered), ctx, var, pruned))
        if not syz:
            res.complete = True
            break
        elements, ctx = tuple(syz), sctx
    if not res.composition_zero():
        raise AssertionError("consecutive stages do not compose to zero")
    if res.length > n + 1:
        raise AssertionError(f"resolution length {res.length} exceeds {n + 1}")
    return res
