"""Text and JSON notation for polynomial vectors.

Grammar (whitespace is insignificant)::

    poly   := ['+'|'-'] sterm (('+'|'-') sterm)*
    sterm  := coeff | [coeff ['*']] factor (['*'] factor)*
    coeff  := INT ['/' INT]                 (fractions only over QQ)
    factor := VAR ['^' INT] | BASIS INT     (BASIS is 'e' by default)

A term without a basis factor sits in position 1.  Positions are written
1-based (``e1``) and stored 0-based.
"""

import re
from fractions import Fraction

from .orders import ModuleMonomial
from .polynomials import PolyVector
from .rings import Rationals, RingError


class ParseError(ValueError):
    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message}{where}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def _basis_index(name, basis):
    if name.startswith(basis) and name[len(basis):].isdigit():
        return int(name[len(basis):])
    return None


def parse_polynomial(text, ctx, basis="e"):
    """Parse ``text`` into a normalized :class:`PolyVector` of ``ctx``."""
    toks = _tokenize(text)
    i = 0
    ring = ctx.ring
    names = {v: k for k, v in enumerate(ctx.var_names)}
    raw = []

    def peek():
        return toks[i]

    def expect_int():
        nonlocal i
        kind, val, at = toks[i]
        if kind != "int":
            raise ParseError(f"expected an integer, found {val or 'end of input'!r}", at, text)
        i += 1
        return int(val)

    def parse_factor(exps, where):
        nonlocal i
        kind, val, at = toks[i]
        if kind != "name":
            raise ParseError(f"expected a variable, found {val or 'end of input'!r}", at, text)
        i += 1
        if val in names:
            power = 1
            if peek()[:2] == ("op", "^"):
                i += 1
                power = expect_int()
            exps[names[val]] += power
            return None
        k = _basis_index(val, basis)
        if k is None:
            raise ParseError(f"unknown variable {val!r}", at, text)
        if not 1 <= k <= ctx.rank:
            raise ParseError(f"position {val!r} out of range for rank {ctx.rank}", at, text)
        if where[0] is not None:
            raise ParseError("a term may name only one basis vector", at, text)
        where[0] = k - 1
        return None

    def parse_sterm(sign):
        nonlocal i
        exps = [0] * ctx.num_vars
        where = [None]
        coeff = None
        kind, val, at = peek()
        if kind == "int":
            num = expect_int()
            if peek()[:2] == ("op", "/"):
                i += 1
                den = expect_int()
                if not isinstance(ring, Rationals):
                    raise ParseError(f"rational coefficient outside QQ (ring {ring})", at, text)
                if den == 0:
                    raise ParseError("zero denominator", at, text)
                coeff = Fraction(num, den)
            else:
                coeff = num
            if peek()[:2] == ("op", "*"):
                i += 1
                parse_factor(exps, where)
        elif kind == "name":
            parse_factor(exps, where)
        else:
            raise ParseError(f"expected a term, found {val or 'end of input'!r}", at, text)
        while True:
            kind, val, at = peek()
            if (kind, val) == ("op", "*"):
                i += 1
                parse_factor(exps, where)
            elif kind == "name":
                parse_factor(exps, where)
            else:
                break
        c = 1 if coeff is None else coeff
        if sign < 0:
            c = -c
        try:
            c = ring.element(c)
        except RingError as exc:
            raise ParseError(str(exc), at, text) from None
        raw.append((c, ModuleMonomial(tuple(exps), where[0] or 0)))

    kind, val, at = peek()
    if kind == "end":
        raise ParseError("empty polynomial", at, text)
    sign = 1
    if (kind, val) in (("op", "+"), ("op", "-")):
        sign = -1 if val == "-" else 1
        i += 1
    parse_sterm(sign)
    while True:
        kind, val, at = peek()
        if kind == "end":
            break
        if (kind, val) not in (("op", "+"), ("op", "-")):
            raise ParseError(f"unexpected {val!r}", at, text)
        i += 1
        parse_sterm(-1 if val == "-" else 1)
    return PolyVector.from_terms(ctx, raw)


def _is_negative(c):
    return isinstance(c, (int, Fraction)) and c < 0


def format_term(coeff, mono, ctx, basis="e", show_basis=None):
    ring = ctx.ring
    if show_basis is None:
        show_basis = ctx.rank > 1 or basis != "e"
    factors = []
    for name, e in zip(ctx.var_names, mono.exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if show_basis:
        factors.append(f"{basis}{mono.position + 1}")
    c = ring.format(coeff)
    if not factors:
        return c
    if coeff == ring.one:
        return "*".join(factors)
    if _is_negative(coeff) and coeff == -ring.one:
        return "-" + "*".join(factors)
    return c + "*" + "*".join(factors)


def format_polynomial(u, basis="e"):
    """Canonical text: terms in decreasing order, ``0`` for the zero vector."""
    ctx = u.ctx
    terms = u.terms
    if not terms:
        return "0"
    parts = []
    for k, (c, m) in enumerate(terms):
        if k == 0:
            parts.append(format_term(c, m, ctx, basis))
        elif _is_negative(c):
            parts.append(" - " + format_term(-c, m, ctx, basis))
        else:
            parts.append(" + " + format_term(c, m, ctx, basis))
    return "".join(parts)


def poly_to_json(u):
    """Term array ``[[coeff-string, [exponents], position], ...]``."""
    ring = u.ctx.ring
    return [[ring.format(c), list(m.exponents), m.position + 1] for c, m in u.terms]


def poly_from_json(data, ctx):
    ring = ctx.ring
    raw = []
    for entry in data:
        try:
            c, exps, pos = entry
        except (TypeError, ValueError):
            raise ParseError(f"malformed term {entry!r}") from None
        try:
            coeff = ring.parse(str(c))
        except (RingError, ValueError) as exc:
            raise ParseError(str(exc)) from None
        if len(exps) != ctx.num_vars:
            raise ParseError(f"exponent vector {exps} has the wrong length")
        if not 1 <= int(pos) <= ctx.rank:
            raise ParseError(f"position {pos} out of range")
        raw.append((coeff, (tuple(exps), int(pos) - 1)))
    return PolyVector.from_terms(ctx, raw)
