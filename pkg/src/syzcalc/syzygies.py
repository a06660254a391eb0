"""Syzygies of terms, S-lists, and rewriting of linear combinations.

Index sets are 0-based tuples.  A syzygy of ``p`` elements is a
:class:`SyzygyVector`: ``p`` polynomial scalars, optionally labelled by the
level set ``E`` and generator index ``i`` it came from.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

from .orders import ModuleMonomial
from .polynomials import (
    PolyVector,
    linear_combination,
    monomial_lcm,
    monomial_quotient,
    mono_mul,
    vector_from_components,
)
from .rings import CoherenceCertificate, NoSolution

DEFAULT_LEVEL_SET_CAP = 2 ** 16


class SizeLimitError(RuntimeError):
    """Too many position level sets to enumerate."""


@dataclass(frozen=True)
class SyzygyVector:
    entries: Tuple[PolyVector, ...]
    label: Optional[Tuple[Tuple[int, ...], int]] = None
    coefficients: Optional[Tuple] = None  # s^E_i, indexed like label[0]
    lcm: Optional[ModuleMonomial] = None  # M^E

    def __len__(self):
        return len(self.entries)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def apply(self, fs):
        """``sum entries[j] * fs[j]``."""
        if len(fs) != len(self.entries):
            raise ValueError("length mismatch")
        return linear_combination(zip(self.entries, fs), fs[0].ctx if fs else None)

    def to_vector(self, ctx):
        return vector_from_components(ctx, list(self.entries))

    @classmethod
    def from_vector(cls, v, label=None):
        return cls(tuple(v.components()), label)


def position_level_sets(monomials, cap=DEFAULT_LEVEL_SET_CAP, max_size=None):
    """Nonempty index sets whose monomials share one position.

    Ordered by size, then lexicographically.  ``max_size`` restricts to
    small sets (the Bezout pair mode uses 2).
    """
    groups = {}
    for j, m in enumerate(monomials):
        groups.setdefault(m.position, []).append(j)
    total = 0
    for idx in groups.values():
        k = len(idx)
        if max_size is None:
            total += 2 ** k - 1
        else:
            total += sum(_binom(k, r) for r in range(1, min(k, max_size) + 1))
    if total > cap:
        raise SizeLimitError(f"{total} position level sets exceed the cap of {cap}")
    out = []
    for idx in groups.values():
        top = len(idx) if max_size is None else min(len(idx), max_size)
        for r in range(1, top + 1):
            out.extend(combinations(idx, r))
    out.sort(key=lambda E: (len(E), E))
    return out


def _binom(n, r):
    from math import comb

    return comb(n, r)


def _level_generators(ring, values, bezout_pairs):
    if not bezout_pairs:
        return ring.syzygy_generators(values).generators
    if len(values) == 1:
        return tuple((b,) for b in ring.annihilator(values[0]))
    _, b1, b2, _, _ = ring.strict_bezout_decompose(values[0], values[1])
    v = (b2, ring.neg(b1))
    return (v,) if any(not ring.is_zero(x) for x in v) else ()


def basic_syzygies_of_terms(ctx, terms, E, bezout_pairs=False):
    """Lift the coefficient syzygies of ``(a_j)_{j in E}`` to syzygies of the
    terms: entry ``j`` is ``s_j * M^E / M_j`` inside ``E``, zero outside.

    ``terms`` holds ``(coeff, monomial)`` pairs; entries outside ``E`` may be
    ``None``.  Zero generators are dropped.
    """
    ring = ctx.ring
    sctx = ctx.scalars()
    E = tuple(E)
    p = len(terms)
    values = tuple(terms[j][0] for j in E)
    mE = monomial_lcm(terms[j][1] for j in E)
    out = []
    for s in _level_generators(ring, values, bezout_pairs):
        if all(ring.is_zero(x) for x in s):
            continue
        entries = [sctx.zero()] * p
        for j, sj in zip(E, s):
            if not ring.is_zero(sj):
                entries[j] = PolyVector(sctx, {ModuleMonomial(monomial_quotient(mE, terms[j][1]), 0): sj})
        out.append(SyzygyVector(tuple(entries), (E, len(out)), tuple(s), mE))
    return out


def syzygies_of_terms(ctx, terms, bezout_pairs=False, cap=DEFAULT_LEVEL_SET_CAP):
    """Generators of the syzygy module of the terms, concatenated over all
    position level sets."""
    terms = list(terms)
    monos = [t[1] for t in terms]
    out = []
    for E in position_level_sets(monos, cap, 2 if bezout_pairs else None):
        out.extend(basic_syzygies_of_terms(ctx, terms, E, bezout_pairs))
    return out


@dataclass(frozen=True)
class SListItem:
    vector: PolyVector
    syzygy: SyzygyVector  # combination of the inputs producing ``vector``


def s_list_items(fs, bezout_pairs=False, cap=DEFAULT_LEVEL_SET_CAP):
    fs = list(fs)
    if not fs:
        return []
    if any(f.is_zero() for f in fs):
        raise ValueError("S-lists need nonzero vectors")
    ctx = fs[0].ctx
    out = []
    for S in syzygies_of_terms(ctx, [f.leading_term() for f in fs], bezout_pairs, cap):
        v = linear_combination(((g, f) for g, f in zip(S.entries, fs) if not g.is_zero()), ctx)
        if not v.is_zero():
            out.append(SListItem(v, S))
    return out


def s_list(fs, bezout_pairs=False, cap=DEFAULT_LEVEL_SET_CAP):
    return [item.vector for item in s_list_items(fs, bezout_pairs, cap)]


def iterated_s_list(q, fs, bezout_pairs=False, cap=DEFAULT_LEVEL_SET_CAP):
    current = list(fs)
    for _ in range(q):
        current = current + s_list(current, bezout_pairs, cap)
    return current


# ---------------------------------------------------------------------------
# rewriting


class RewriteError(ValueError):
    """The leading monomial of the sum already equals that of the summands."""


@dataclass
class RewriteState:
    """Expression ``u = sum g_j f_j``.

    ``certificates[j]`` writes ``f_j`` over the original vectors, so that
    ``sum_j g_j * certificates[j]`` is invariant under rewriting.
    """

    pairs: List[Tuple[PolyVector, PolyVector]]
    certificates: List[Tuple[PolyVector, ...]]
    labels: List[Optional[tuple]]
    u: PolyVector
    steps: int = 0

    @classmethod
    def start(cls, pairs):
        pairs = [(g, f) for g, f in pairs]
        if not pairs:
            raise ValueError("empty expression")
        fctx = pairs[0][1].ctx
        sctx = fctx.scalars()
        p = len(pairs)
        certs = []
        for j in range(p):
            c = [sctx.zero()] * p
            c[j] = sctx.one()
            certs.append(tuple(c))
        u = linear_combination(pairs, fctx)
        return cls(pairs, certs, [None] * p, u)

    @property
    def ctx(self):
        return self.pairs[0][1].ctx

    def summand_monomials(self):
        """``{j: LM(g_j) LM(f_j)}`` over the nonzero summands."""
        out = {}
        for j, (g, f) in enumerate(self.pairs):
            if g.is_zero() or f.is_zero():
                continue
            out[j] = mono_mul(g.lm().exponents, f.lm())
        return out

    @property
    def alm(self):
        mons = self.summand_monomials()
        if not mons:
            return None
        return max(mons.values(), key=self.ctx.order.key)

    @property
    def E(self):
        mons = self.summand_monomials()
        if not mons:
            return ()
        top = max(mons.values(), key=self.ctx.order.key)
        return tuple(j for j, m in mons.items() if m == top)

    def needs_rewrite(self):
        alm = self.alm
        if alm is None:
            return False
        if self.u.is_zero():
            return True
        key = self.ctx.order.key
        return key(self.u.lm()) < key(alm)

    def combination(self):
        """``sum_j g_j * certificates[j]`` as original-length scalar tuple."""
        p = len(self.certificates[0])
        sctx = self.ctx.scalars()
        out = [sctx.zero()] * p
        for (g, _), cert in zip(self.pairs, self.certificates):
            if g.is_zero():
                continue
            for k in range(p):
                if not cert[k].is_zero():
                    out[k] = out[k] + _smul(g, cert[k])
        return tuple(out)

    def decomposition(self):
        """Nonzero ``(label, g, certificate)`` triples of the current expression."""
        return [
            (lab, g, cert)
            for (g, _), cert, lab in zip(self.pairs, self.certificates, self.labels)
            if not g.is_zero()
        ]

    def grouped_decomposition(self):
        """Coefficients summed per syzygy label ``(E, i)``, in first-seen
        order; summands that are not labelled (original pairs) are skipped."""
        out = {}
        for lab, g, cert in self.decomposition():
            if lab is None:
                continue
            key = (lab[0], lab[1])
            if key in out:
                out[key] = (out[key][0] + g, cert)
            else:
                out[key] = (g, cert)
        return {k: v for k, v in out.items() if not v[0].is_zero()}


def _smul(a, b):
    return b.times(a)


def rewrite_step(state, bezout_pairs=False):
    """One rewriting step: returns a new state whose summands all have
    leading monomial below the current one, representing the same sum."""
    if not state.needs_rewrite():
        raise RewriteError("leading monomial of the sum is not below that of the summands")
    ctx = state.ctx
    ring = ctx.ring
    sctx = ctx.scalars()
    alm, E = state.alm, state.E
    p = len(state.pairs)
    terms = [None] * p
    for j in E:
        terms[j] = state.pairs[j][1].leading_term()
    syz = basic_syzygies_of_terms(ctx, terms, E, bezout_pairs)
    b = tuple(state.pairs[j][0].lc() for j in E)
    cert = CoherenceCertificate(tuple(t[0] for t in (terms[j] for j in E)), tuple(S.coefficients for S in syz))
    c = ring.represent_syzygy(b, cert)
    if not syz:
        raise NoSolution("leading coefficients of the summands are not a syzygy")
    mE = syz[0].lcm
    shift = monomial_quotient(alm, mE)
    pairs = list(state.pairs)
    certs = list(state.certificates)
    labels = list(state.labels)
    for i, S in enumerate(syz):
        g_new = PolyVector(sctx, {ModuleMonomial(shift, 0): c[i]}) if not ring.is_zero(c[i]) else sctx.zero()
        f_new = linear_combination(((S.entries[j], pairs[j][1]) for j in E), ctx)
        cert_new = [sctx.zero()] * len(certs[0])
        for j in E:
            for k, ck in enumerate(certs[j]):
                if not ck.is_zero():
                    cert_new[k] = cert_new[k] + _smul(S.entries[j], ck)
        pairs.append((g_new, f_new))
        certs.append(tuple(cert_new))
        labels.append((E, i, state.steps))
    for j in E:
        g, f = pairs[j]
        lt = g.leading_term()
        pairs[j] = (g - PolyVector(sctx, {lt.monomial: lt.coeff}), f)
    return RewriteState(pairs, certs, labels, state.u, state.steps + 1)


@dataclass
class RewriteResult:
    q: int
    fs: List[PolyVector]
    state: RewriteState
    history: List[RewriteState] = field(default_factory=list)


def iterated_rewrite(pairs, bezout_pairs=False, max_steps=None):
    """Rewrite ``sum g_j f_j`` until the leading monomial of the sum equals
    that of the summands (or no summand is left).

    On exit ``LT(u)`` lies in the module generated by the leading terms of
    the extended f-list.
    """
    state = pairs if isinstance(pairs, RewriteState) else RewriteState.start(pairs)
    if any(f.is_zero() for _, f in state.pairs):
        raise ValueError("iterated rewriting needs nonzero vectors")
    history = [state]
    while state.needs_rewrite():
        if max_steps is not None and state.steps >= max_steps:
            raise RuntimeError(f"rewriting did not finish in {max_steps} steps")
        state = rewrite_step(state, bezout_pairs)
        history.append(state)
    return RewriteResult(state.steps, [f for _, f in state.pairs], state, history)
