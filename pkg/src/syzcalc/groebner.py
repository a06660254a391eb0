"""Gröbner bases over strongly discrete coherent rings."""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .division import divide
from .orders import OrderSpec
from .polynomials import PolyVector, monomial_divides
from .syzygies import (
    DEFAULT_LEVEL_SET_CAP,
    SyzygyVector,
    iterated_s_list,
    s_list_items,
)

DEFAULT_MAX_ROUNDS = 32


@dataclass(frozen=True)
class GroebnerBasis:
    """``elements[k] = sum_j provenance[k][j] * inputs[j]``."""

    elements: Tuple[PolyVector, ...]
    order: OrderSpec
    provenance: Tuple[Tuple[PolyVector, ...], ...]
    inputs: Tuple[PolyVector, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    @property
    def ctx(self):
        return self.elements[0].ctx

    @classmethod
    def trivial(cls, fs):
        """Wrap ``fs`` with identity provenance (no check that it is a basis)."""
        fs = tuple(fs)
        sctx = fs[0].ctx.scalars()
        prov = tuple(
            tuple(sctx.one() if j == k else sctx.zero() for j in range(len(fs))) for k in range(len(fs))
        )
        return cls(fs, fs[0].ctx.order, prov, fs)


@dataclass
class BuchbergerReport:
    rounds: int = 0
    added: List[PolyVector] = field(default_factory=list)
    terminated: bool = False


class RoundLimitExceeded(RuntimeError):
    def __init__(self, basis, report):
        super().__init__(f"Buchberger did not terminate within {report.rounds} rounds")
        self.basis = basis
        self.report = report


class NotAGroebnerBasis(ValueError):
    pass


@dataclass(frozen=True)
class LTMembership:
    member: bool
    divisors: Tuple[int, ...] = ()
    coefficients: Optional[Tuple] = None


def term_in_lt_module(term, G):
    """Decide ``c*M in <LT(G)>``: ``c`` must lie in the ideal of the leading
    coefficients of those ``g`` whose leading monomial divides ``M``."""
    coeff, mono = term
    ring = G[0].ctx.ring
    leads = [g.leading_term() for g in G]
    D = tuple(j for j, t in enumerate(leads) if monomial_divides(t.monomial, mono))
    cert = ring.ideal_member(coeff, [leads[j].coeff for j in D])
    if not cert.member:
        return LTMembership(False, D)
    return LTMembership(True, D, cert.coefficients)


@dataclass(frozen=True)
class CriterionResult:
    holds: bool
    witness: Optional[PolyVector] = None
    syzygy: Optional[SyzygyVector] = None

    def __bool__(self):
        return self.holds


def buchberger_criterion(G, bezout_pairs=False, cap=DEFAULT_LEVEL_SET_CAP):
    """Every S-list combination of ``G`` must divide to zero by ``G``.

    Returns the first nonzero remainder as witness when it fails.
    """
    G = list(G)
    for item in s_list_items(G, bezout_pairs, cap):
        r = divide(item.vector, G).remainder
        if not r.is_zero():
            return CriterionResult(False, r, item.syzygy)
    return CriterionResult(True)


def _combine(scalars, certs, sctx, width):
    """``sum_j scalars[j] * certs[j]`` as a tuple of ``width`` scalars."""
    out = [sctx.zero()] * width
    for a, cert in zip(scalars, certs):
        if a.is_zero():
            continue
        for k in range(width):
            if not cert[k].is_zero():
                out[k] = out[k] + cert[k].times(a)
    return out


def buchberger(fs, max_rounds=DEFAULT_MAX_ROUNDS, bezout_pairs=False, cap=DEFAULT_LEVEL_SET_CAP):
    """Extend ``fs`` to a Gröbner basis.

    Each round forms the S-list of the current list and divides every item
    by the list (including remainders appended earlier in the same round);
    nonzero remainders are appended.  Stops after a round adds nothing, or
    after ``max_rounds`` rounds with ``report.terminated = False``.
    """
    fs = list(fs)
    if not fs:
        raise ValueError("buchberger needs at least one generator")
    if any(f.is_zero() for f in fs):
        raise ValueError("generators must be nonzero")
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")
    ctx = fs[0].ctx
    sctx = ctx.scalars()
    p = len(fs)
    G = list(fs)
    certs = [tuple(sctx.one() if j == k else sctx.zero() for j in range(p)) for k in range(p)]
    report = BuchbergerReport()
    while report.rounds < max_rounds:
        report.rounds += 1
        items = s_list_items(G, bezout_pairs, cap)
        base = len(G)
        for item in items:
            res = divide(item.vector, G)
            r = res.remainder
            if r.is_zero():
                continue
            # r = item - sum q_j G_j, item = sum S_j G_j
            cert = _combine(item.syzygy.entries, certs[:base], sctx, p)
            minus = _combine([-q for q in res.quotients], certs, sctx, p)
            G.append(r)
            certs.append(tuple(a + b for a, b in zip(cert, minus)))
            report.added.append(r)
        if len(G) == base:
            report.terminated = True
            break
    basis = GroebnerBasis(tuple(G), ctx.order, tuple(certs), tuple(fs))
    return basis, report


def groebner_basis(fs, max_rounds=DEFAULT_MAX_ROUNDS, **kw):
    """Like :func:`buchberger` but raises :class:`RoundLimitExceeded`."""
    basis, report = buchberger(fs, max_rounds, **kw)
    if not report.terminated:
        raise RoundLimitExceeded(basis, report)
    return basis


def pseudo_reduce(G, max_passes=1000):
    """Replace each element by its remainder modulo the others until stable,
    dropping elements that reduce to zero."""
    if not isinstance(G, GroebnerBasis):
        G = GroebnerBasis.trivial(G)
    elems = list(G.elements)
    certs = [list(c) for c in G.provenance]
    sctx = G.ctx.scalars()
    width = len(G.inputs)
    for _ in range(max_passes):
        changed = False
        k = 0
        while k < len(elems):
            others = [j for j in range(len(elems)) if j != k]
            if not others:
                break
            res = divide(elems[k], [elems[j] for j in others])
            r = res.remainder
            if r != elems[k]:
                changed = True
                minus = _combine([-q for q in res.quotients], [certs[j] for j in others], sctx, width)
                if r.is_zero():
                    del elems[k]
                    del certs[k]
                    continue
                elems[k] = r
                certs[k] = [a + b for a, b in zip(certs[k], minus)]
            k += 1
        if not changed:
            return GroebnerBasis(tuple(elems), G.order, tuple(tuple(c) for c in certs), G.inputs)
    raise RuntimeError("pseudo-reduction did not stabilise")


def mlt_generators_up_to(q, fs, bezout_pairs=False, cap=DEFAULT_LEVEL_SET_CAP):
    """Leading terms of the q-th iterated S-list."""
    return [f.leading_term() for f in iterated_s_list(q, fs, bezout_pairs, cap)]

