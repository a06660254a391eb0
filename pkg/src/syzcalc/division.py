"""Division of a polynomial vector by a list, over a strongly discrete ring."""

from dataclasses import dataclass
from typing import List

from .orders import ModuleMonomial
from .polynomials import PolyVector


class ZeroDivisor(ValueError):
    """A divisor in the list is the zero vector."""


@dataclass(frozen=True)
class DivisionResult:
    quotients: List[PolyVector]
    remainder: PolyVector


def divide(u, divisors):
    """Divide ``u`` by ``divisors``.

    While ``u`` is nonzero, with leading term ``c*M``: gather the divisors
    whose leading monomial divides ``M``; if ``c`` lies in the ideal of
    their leading coefficients, subtract the whole combination at once,
    otherwise move ``c*M`` to the remainder.  Returns quotients ``q_j`` and
    remainder ``r`` with ``u = sum q_j h_j + r``.
    """
    divisors = list(divisors)
    ctx = u.ctx
    ring = ctx.ring
    for h in divisors:
        if not h.ctx.same(ctx):
            raise ValueError("divisor from a different context")
        if h.is_zero():
            raise ZeroDivisor("cannot divide by the zero vector")
    key = ctx.order.key
    leads = [h.leading_term() for h in divisors]
    lead_data = [(t.monomial.position, t.monomial.exponents) for t in leads]
    work = dict(u.items())
    rem = {}
    quot = [dict() for _ in divisors]
    while work:
        m = max(work, key=key)
        c = work[m]
        mexps, mpos = m
        D = [
            j
            for j, (pos, exps) in enumerate(lead_data)
            if pos == mpos and all(a <= b for a, b in zip(exps, mexps))
        ]
        cert = ring.ideal_member(c, [leads[j].coeff for j in D]) if D else None
        if cert is not None and cert.member:
            for j, a in zip(D, cert.coefficients):
                if ring.is_zero(a):
                    continue
                shift = tuple(b - e for b, e in zip(mexps, lead_data[j][1]))
                for (hexps, hpos), hc in divisors[j].items():
                    mm = ModuleMonomial(tuple(x + y for x, y in zip(shift, hexps)), hpos)
                    v = ring.sub(work.get(mm, ring.zero), ring.mul(a, hc))
                    if ring.is_zero(v):
                        work.pop(mm, None)
                    else:
                        work[mm] = v
                qm = ModuleMonomial(shift, 0)
                q = quot[j]
                v = ring.add(q.get(qm, ring.zero), a)
                if ring.is_zero(v):
                    q.pop(qm, None)
                else:
                    q[qm] = v
            assert m not in work, "membership witness failed to cancel the leading term"
        else:
            rem[m] = c
            del work[m]
    sctx = ctx.scalars()
    return DivisionResult([PolyVector(sctx, q) for q in quot], PolyVector(ctx, rem))


def remainder(u, divisors):
    return divide(u, divisors).remainder
