"""Sparse polynomial vectors in R[X_1..X_n]^m.

A :class:`PolyVector` is an immutable mapping from module monomials to
nonzero coefficients, bound to a :class:`PolyContext` that fixes the ring,
the variables, the rank and the order.  Polynomial scalars (quotients,
syzygy entries) are PolyVectors of rank 1.
"""

from dataclasses import dataclass
from typing import NamedTuple, Tuple

from .orders import ModuleMonomial, MonomialOrder, OrderSpec
from .rings import Ring, RingError


class ContextError(ValueError):
    """Operands live in different contexts."""


class _NegInf:
    """Multidegree of the zero vector."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


@dataclass(frozen=True)
class PolyContext:
    ring: Ring
    var_names: Tuple[str, ...]
    rank: int
    order: OrderSpec

    def __post_init__(self):
        if len(self.var_names) < 1:
            raise ValueError("at least one variable is required")
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError("variable names must be distinct")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if len(self.order.base.priority) != len(self.var_names):
            raise ValueError("order and variable count disagree")

    @classmethod
    def create(cls, ring, var_names, rank=1, order="grlex", module_order="top"):
        var_names = tuple(var_names)
        base = MonomialOrder.default(order, len(var_names))
        return cls(ring, var_names, rank, OrderSpec(base, module_order))

    @property
    def num_vars(self):
        return len(self.var_names)

    def scalars(self):
        """Context of polynomial scalars R[X]."""
        if self.rank == 1 and self.order.module_rule == "top":
            return self
        return PolyContext(self.ring, self.var_names, 1, self.order.scalar_order())

    def with_rank(self, rank, order=None):
        return PolyContext(self.ring, self.var_names, rank, order or self.order)

    def zero(self):
        return PolyVector(self, {})

    def one(self, position=0):
        return self.monomial((0,) * self.num_vars, position)

    def monomial(self, exps, position=0, coeff=None):
        c = self.ring.one if coeff is None else self.ring.element(coeff)
        if self.ring.is_zero(c):
            return self.zero()
        return PolyVector(self, {ModuleMonomial(tuple(exps), position): c})

    def variable(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self.var_names.index(name_or_index)
        exps = [0] * self.num_vars
        exps[i] = 1
        return self.monomial(exps)

    def unit_vector(self, position):
        return self.one(position)

    def constant(self, c, position=0):
        return self.monomial((0,) * self.num_vars, position, c)

    def same(self, other):
        return self is other or self == other


class Term(NamedTuple):
    coeff: object
    monomial: ModuleMonomial


@dataclass(frozen=True)
class LeadingData:
    lc: object
    lm: object  # ModuleMonomial, or None for the zero vector
    lt: object  # Term, or None for the zero vector
    mdeg: object  # exponent tuple or NEG_INF

    @property
    def lp(self):
        if self.lm is None:
            raise ValueError("the leading position of the zero vector is undefined")
        return self.lm.position


def mono_mul(exps, m):
    """``X^exps * M``."""
    return ModuleMonomial(tuple(a + b for a, b in zip(exps, m.exponents)), m.position)


def monomial_divides(m, n):
    return m.position == n.position and all(a <= b for a, b in zip(m.exponents, n.exponents))


def monomial_quotient(n, m):
    """Ring monomial ``N/M`` (exponent tuple); requires ``M | N``."""
    if not monomial_divides(m, n):
        raise ValueError(f"{m} does not divide {n}")
    return tuple(b - a for a, b in zip(m.exponents, n.exponents))


def monomial_lcm(monomials):
    monomials = list(monomials)
    if not monomials:
        raise ValueError("lcm of an empty list")
    pos = monomials[0].position
    if any(m.position != pos for m in monomials):
        raise ValueError("lcm of monomials in different positions")
    return ModuleMonomial(tuple(max(col) for col in zip(*(m.exponents for m in monomials))), pos)


class PolyVector:
    """Immutable element of R[X]^m."""

    __slots__ = ("ctx", "_coeffs", "_sorted")

    def __init__(self, ctx, coeffs):
        # trusted constructor: coeffs is a dict of nonzero canonical entries
        self.ctx = ctx
        self._coeffs = coeffs
        self._sorted = None

    @classmethod
    def from_terms(cls, ctx, raw_terms):
        """Normalize ``(coeff, monomial)`` pairs: merge, drop zeros, validate."""
        ring = ctx.ring
        acc = {}
        for coeff, mono in raw_terms:
            exps, pos = mono
            mono = ModuleMonomial(tuple(int(e) for e in exps), int(pos))
            if len(mono.exponents) != ctx.num_vars or any(e < 0 for e in mono.exponents):
                raise ValueError(f"bad exponent vector {mono.exponents}")
            if not 0 <= mono.position < ctx.rank:
                raise ValueError(f"position {mono.position} out of range for rank {ctx.rank}")
            c = ring.element(coeff)
            acc[mono] = ring.add(acc[mono], c) if mono in acc else c
        return cls(ctx, {m: c for m, c in acc.items() if not ring.is_zero(c)})

    # basic protocol -------------------------------------------------------
    def __bool__(self):
        return bool(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.ctx.same(other.ctx) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        from .notation import format_polynomial

        return f"PolyVector({format_polynomial(self)!r})"

    def coefficient(self, mono):
        return self._coeffs.get(ModuleMonomial(*mono), self.ctx.ring.zero)

    def items(self):
        return self._coeffs.items()

    @property
    def terms(self):
        """Terms in strictly decreasing order."""
        if self._sorted is None:
            key = self.ctx.order.key
            self._sorted = tuple(
                Term(self._coeffs[m], m) for m in sorted(self._coeffs, key=key, reverse=True)
            )
        return self._sorted

    def monomials(self):
        return [t.monomial for t in self.terms]

    # leading data -----------------------------------------------------------
    def leading_term(self):
        if not self._coeffs:
            return None
        if self._sorted is not None:
            return self._sorted[0]
        m = max(self._coeffs, key=self.ctx.order.key)
        return Term(self._coeffs[m], m)

    def lt(self):
        return self.leading_term()

    def lm(self):
        t = self.leading_term()
        return None if t is None else t.monomial

    def lc(self):
        t = self.leading_term()
        return self.ctx.ring.zero if t is None else t.coeff

    def leading_data(self):
        t = self.leading_term()
        if t is None:
            return LeadingData(self.ctx.ring.zero, None, None, NEG_INF)
        return LeadingData(t.coeff, t.monomial, t, t.monomial.exponents)

    # arithmetic -------------------------------------------------------------
    def _check(self, other):
        if not self.ctx.same(other.ctx):
            raise ContextError("polynomial vectors from different contexts")

    def __add__(self, other):
        self._check(other)
        ring = self.ctx.ring
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            if m in out:
                s = ring.add(out[m], c)
                if ring.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return PolyVector(self.ctx, out)

    def __neg__(self):
        ring = self.ctx.ring
        return PolyVector(self.ctx, {m: ring.neg(c) for m, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        ring = self.ctx.ring
        out = {}
        for m, a in self._coeffs.items():
            p = ring.mul(c, a)
            if not ring.is_zero(p):
                out[m] = p
        return PolyVector(self.ctx, out)

    def mul_term(self, coeff, exps):
        """``coeff * X^exps * self``."""
        ring = self.ctx.ring
        out = {}
        for m, a in self._coeffs.items():
            p = ring.mul(coeff, a)
            if not ring.is_zero(p):
                out[mono_mul(exps, m)] = p
        return PolyVector(self.ctx, out)

    def scale_by_term(self, t):
        return self.mul_term(t.coeff, t.monomial.exponents)

    def times(self, scalar):
        """Product ``scalar * self`` with ``scalar`` in R[X] (a rank-1 vector)."""
        if scalar.ctx.rank != 1:
            raise ContextError("left factor must be a polynomial scalar")
        if scalar.ctx.ring != self.ctx.ring or scalar.ctx.var_names != self.ctx.var_names:
            raise ContextError("polynomial scalar from a different ring")
        ring = self.ctx.ring
        out = {}
        for sm, sc in scalar._coeffs.items():
            for m, a in self._coeffs.items():
                mm = mono_mul(sm.exponents, m)
                p = ring.mul(sc, a)
                if mm in out:
                    p = ring.add(out[mm], p)
                out[mm] = p
        return PolyVector(self.ctx, {m: c for m, c in out.items() if not ring.is_zero(c)})

    def component(self, position):
        """The ``position``-th coordinate as a polynomial scalar."""
        sctx = self.ctx.scalars()
        return PolyVector(
            sctx,
            {ModuleMonomial(m.exponents, 0): c for m, c in self._coeffs.items() if m.position == position},
        )

    def components(self):
        return [self.component(i) for i in range(self.ctx.rank)]

    def with_context(self, ctx):
        """Reinterpret in a context with the same ring, variables and rank
        (typically a different order)."""
        if ctx.ring != self.ctx.ring or ctx.num_vars != self.ctx.num_vars:
            raise ContextError("incompatible context")
        if any(m.position >= ctx.rank for m in self._coeffs):
            raise ContextError("rank too small")
        return PolyVector(ctx, dict(self._coeffs))

    def evaluate_coefficients(self, fn):
        ring = self.ctx.ring
        out = {m: fn(c) for m, c in self._coeffs.items()}
        return PolyVector(self.ctx, {m: c for m, c in out.items() if not ring.is_zero(c)})


def normalize(raw_terms, ctx):
    return PolyVector.from_terms(ctx, raw_terms)


def add(u, v):
    return u + v


def subtract(u, v):
    return u - v


def scale_by_term(u, t):
    return u.scale_by_term(t)


def linear_combination(pairs, ctx=None):
    """``sum g_j * f_j`` for pairs ``(g_j, f_j)`` of scalar and vector."""
    pairs = list(pairs)
    if ctx is None:
        if not pairs:
            raise ValueError("empty combination needs an explicit context")
        ctx = pairs[0][1].ctx
    ring = ctx.ring
    out = {}
    for g, f in pairs:
        if not f.ctx.same(ctx):
            raise ContextError("polynomial vectors from different contexts")
        for sm, sc in g._coeffs.items():
            for m, a in f._coeffs.items():
                mm = mono_mul(sm.exponents, m)
                p = ring.mul(sc, a)
                if mm in out:
                    p = ring.add(out[mm], p)
                out[mm] = p
    return PolyVector(ctx, {m: c for m, c in out.items() if not ring.is_zero(c)})


def vector_from_components(ctx, comps):
    """Assemble ``sum comps[j] * e_j`` in the rank-``len(comps)`` context ``ctx``."""
    if len(comps) != ctx.rank:
        raise ValueError("component count must equal the rank")
    out = {}
    for j, g in enumerate(comps):
        for m, c in g._coeffs.items():
            out[ModuleMonomial(m.exponents, j)] = c
    return PolyVector(ctx, out)


def leading_data(u):
    return u.leading_data()


def check_ring(ctx, ring):
    if ctx.ring != ring:
        raise RingError(f"ring mismatch: {ctx.ring} vs {ring}")
