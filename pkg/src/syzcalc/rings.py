"""Coefficient rings: Z, Q and Z/nZ with the operations a strongly discrete
coherent ring has to provide.

Elements are plain Python values in canonical form: ``int`` for Z,
``Fraction`` for Q, and ``int`` residues in ``[0, n-1]`` for Z/nZ.  A ring
object is its own descriptor; two rings are interchangeable iff they
compare equal.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Tuple

from . import linalg


class RingError(ValueError):
    """Usage error: an element does not belong to the ring, or rings differ."""


class NoSolution(ArithmeticError):
    """A linear system that was required to be solvable has no solution."""


class ZeroEntry(ValueError):
    pass


@dataclass(frozen=True)
class MembershipCertificate:
    member: bool
    coefficients: Optional[Tuple] = None


@dataclass(frozen=True)
class CoherenceCertificate:
    """Generators of the syzygy module of ``values``."""

    values: Tuple
    generators: Tuple[Tuple, ...]


class Ring:
    """Common interface.  Subclasses are frozen dataclasses."""

    zero = 0
    one = 1

    # arithmetic -----------------------------------------------------------
    def element(self, x):
        raise NotImplementedError

    def contains(self, x):
        raise NotImplementedError

    def check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise RingError(f"{x!r} is not a canonical element of {self}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def equals(self, a, b):
        return a == b

    def sum(self, xs):
        s = self.zero
        for x in xs:
            s = self.add(s, x)
        return s

    def dot(self, xs, ys):
        return self.sum(self.mul(x, y) for x, y in zip(xs, ys))

    # text -------------------------------------------------------------------
    def format(self, a):
        return str(a)

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            raise RingError(f"rational coefficient {text!r} outside QQ")
        return self.element(int(text))

    # strongly discrete / coherent ------------------------------------------
    def annihilator(self, a):
        raise NotImplementedError

    def ideal_member(self, c, gens):
        raise NotImplementedError

    def syzygy_generators(self, values):
        raise NotImplementedError

    def represent_syzygy(self, v, cert):
        raise NotImplementedError

    def strict_bezout_decompose(self, b1, b2):
        raise NotImplementedError

    def bezout_syzygies(self, values):
        """Pair syzygies plus annihilator syzygies of a tuple of nonzero
        elements (strict Bezout rings with principal annihilators)."""
        values = tuple(values)
        if any(self.is_zero(a) for a in values):
            raise ZeroEntry("bezout_syzygies needs nonzero entries")
        s = len(values)
        gens = []
        for i in range(s):
            for j in range(i + 1, s):
                _, bi, bj, _, _ = self.strict_bezout_decompose(values[i], values[j])
                v = [self.zero] * s
                v[i] = bj
                v[j] = self.neg(bi)
                if any(not self.is_zero(x) for x in v):
                    gens.append(tuple(v))
        for k in range(s):
            for b in self.annihilator(values[k]):
                v = [self.zero] * s
                v[k] = b
                gens.append(tuple(v))
        return CoherenceCertificate(values, tuple(gens))


@dataclass(frozen=True)
class Integers(Ring):
    def __str__(self):
        return "ZZ"

    def element(self, x):
        if isinstance(x, bool):
            raise RingError("booleans are not ring elements")
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise RingError(f"{x} is not an integer")
            return int(x.numerator)
        if isinstance(x, int):
            return x
        raise RingError(f"cannot coerce {x!r} into ZZ")

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool)

    def annihilator(self, a):
        return [1] if a == 0 else []

    def ideal_member(self, c, gens):
        gens = tuple(gens)
        if not gens:
            return MembershipCertificate(c == 0, () if c == 0 else None)
        g, coeffs = linalg.gcd_combination(gens)
        if g == 0:
            return MembershipCertificate(c == 0, tuple(0 for _ in gens) if c == 0 else None)
        if c % g:
            return MembershipCertificate(False)
        q = c // g
        return MembershipCertificate(True, tuple(q * x for x in coeffs))

    def syzygy_generators(self, values):
        return _integer_syzygies(tuple(values))

    def represent_syzygy(self, v, cert):
        s = len(cert.values)
        gens = cert.generators
        if not gens:
            if any(v):
                raise NoSolution("vector is not in the span of the generators")
            return []
        A = [[g[r] for g in gens] for r in range(s)]
        x = linalg.solve_integer(A, list(v), len(gens))
        if x is None:
            raise NoSolution("vector is not in the span of the generators")
        return x

    def strict_bezout_decompose(self, b1, b2):
        if b1 == 0 and b2 == 0:
            return 0, 0, 1, 0, 1
        d, c1, c2 = linalg.egcd(b1, b2)
        return d, b1 // d, b2 // d, c1, c2


@lru_cache(maxsize=4096)
def _integer_syzygies(values):
    gens = []
    for v in linalg.integer_kernel([list(values)], len(values)):
        if any(v):
            gens.append(tuple(v))
    return CoherenceCertificate(values, tuple(gens))


@dataclass(frozen=True)
class Rationals(Ring):
    zero = Fraction(0)
    one = Fraction(1)

    def __str__(self):
        return "QQ"

    def element(self, x):
        if isinstance(x, bool):
            raise RingError("booleans are not ring elements")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise RingError(f"cannot coerce {x!r} into QQ")

    def contains(self, x):
        return isinstance(x, Fraction)

    def format(self, a):
        return str(a)

    def parse(self, text):
        return Fraction(text.strip())

    def annihilator(self, a):
        return [self.one] if a == 0 else []

    def ideal_member(self, c, gens):
        gens = tuple(gens)
        if c == 0:
            return MembershipCertificate(True, tuple(self.zero for _ in gens))
        for k, g in enumerate(gens):
            if g != 0:
                coeffs = [self.zero] * len(gens)
                coeffs[k] = c / g
                return MembershipCertificate(True, tuple(coeffs))
        return MembershipCertificate(False)

    def syzygy_generators(self, values):
        values = tuple(values)
        k = next((i for i, a in enumerate(values) if a != 0), None)
        gens = []
        for j in range(len(values)):
            if k is None:
                v = [self.zero] * len(values)
                v[j] = self.one
                gens.append(tuple(v))
            elif j != k:
                # (-a_j/a_k) e_k + e_j, scaled to mirror the integer convention
                v = [self.zero] * len(values)
                v[k] = -values[j] / values[k]
                v[j] = self.one
                gens.append(tuple(v))
        return CoherenceCertificate(values, tuple(gens))

    def represent_syzygy(self, v, cert):
        s = len(cert.values)
        gens = cert.generators
        if not gens:
            if any(v):
                raise NoSolution("vector is not in the span of the generators")
            return []
        A = [[g[r] for g in gens] for r in range(s)]
        x = linalg.solve_rational(A, list(v), len(gens))
        if x is None:
            raise NoSolution("vector is not in the span of the generators")
        return x

    def strict_bezout_decompose(self, b1, b2):
        if b1 != 0:
            return b1, self.one, b2 / b1, self.one, self.zero
        if b2 != 0:
            return b2, self.zero, self.one, self.zero, self.one
        return self.zero, self.zero, self.one, self.zero, self.one


@dataclass(frozen=True)
class IntegersMod(Ring):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise RingError(f"modulus must be an integer >= 2, got {self.n!r}")

    def __str__(self):
        return f"ZZ/{self.n}"

    def element(self, x):
        if isinstance(x, bool):
            raise RingError("booleans are not ring elements")
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise RingError(f"rational coefficient {x} outside QQ")
            x = int(x.numerator)
        if isinstance(x, int):
            return x % self.n
        raise RingError(f"cannot coerce {x!r} into {self}")

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.n

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return a * b % self.n

    def annihilator(self, a):
        b = self.n // gcd(a, self.n)
        return [] if b % self.n == 0 else [b % self.n]

    def ideal_member(self, c, gens):
        gens = tuple(gens)
        if c == 0:
            return MembershipCertificate(True, tuple(0 for _ in gens))
        g, coeffs = linalg.gcd_combination(list(gens) + [self.n])
        if c % g:
            return MembershipCertificate(False)
        q = c // g
        return MembershipCertificate(True, tuple(q * x % self.n for x in coeffs[:-1]))

    def syzygy_generators(self, values):
        return _modular_syzygies(self.n, tuple(values))

    def represent_syzygy(self, v, cert):
        s = len(cert.values)
        gens = cert.generators
        n = self.n
        # [generators | n*I] (c, y) = v over Z
        A = [[g[r] for g in gens] + [n * int(r == k) for k in range(s)] for r in range(s)]
        x = linalg.solve_integer(A, list(v), len(gens) + s)
        if x is None:
            raise NoSolution("vector is not in the span of the generators")
        return [xi % n for xi in x[: len(gens)]]

    def strict_bezout_decompose(self, b1, b2):
        n = self.n
        if b1 == 0 and b2 == 0:
            return 0, 0, 1, 0, 1
        d = gcd(gcd(b1, b2), n)
        x1, x2 = b1 // d, b2 // d
        step = n // d
        # shift x2 by multiples of n/d until (x1, x2) generate the unit ideal
        for k in range(n):
            y2 = x2 + k * step
            if gcd(gcd(x1, y2), n) == 1:
                x2 = y2
                break
        else:  # pragma: no cover - Z/nZ is strict Bezout, the search succeeds
            raise ArithmeticError("no strict Bezout decomposition found")
        sol = linalg.solve_integer([[x1, x2, n]], [1])
        c1, c2 = sol[0] % n, sol[1] % n
        return d % n, x1 % n, x2 % n, c1, c2

    def unit_normalize(self, v):
        """Scale ``v`` by a unit so its first nonzero entry divides ``n``."""
        n = self.n
        x = next((e for e in v if e), None)
        if x is None:
            return tuple(v)
        g = gcd(x, n)
        for u in range(1, n):
            if gcd(u, n) == 1 and u * x % n == g:
                return tuple(u * e % n for e in v)
        return tuple(v)  # pragma: no cover


@lru_cache(maxsize=4096)
def _modular_syzygies(n, values):
    ring = IntegersMod(n)
    gens = []
    seen = set()
    for v in linalg.integer_kernel([list(values) + [n]], len(values) + 1):
        w = ring.unit_normalize([x % n for x in v[:-1]])
        if any(w) and w not in seen:
            seen.add(w)
            gens.append(w)
    return CoherenceCertificate(values, tuple(gens))


_RING_RE = re.compile(r"^\s*(ZZ|QQ)\s*(?:/\s*(\d+))?\s*$")


def parse_ring(text):
    """Parse ``ZZ``, ``QQ`` or ``ZZ/<n>``."""
    m = _RING_RE.match(text)
    if not m:
        raise RingError(f"unknown ring descriptor {text!r}")
    kind, n = m.groups()
    if kind == "QQ":
        if n is not None:
            raise RingError("QQ/<n> is not supported")
        return Rationals()
    if n is None:
        return Integers()
    return IntegersMod(int(n))
