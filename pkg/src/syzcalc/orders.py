"""Monomial orders on R[X] and on free modules R[X]^m.

Every order is realised as a sort key: ``M > N`` iff ``key(M) > key(N)``.
Keys are tuples, so module orders built on top of ring orders (TOP, POT,
and Schreyer's induced order) compose by nesting tuples.
"""

from dataclasses import dataclass, field
from typing import NamedTuple, Tuple, Union

BASE_ORDERS = ("lex", "grlex", "grevlex")
LESS, EQUAL, GREATER = -1, 0, 1


class ModuleMonomial(NamedTuple):
    """``X^exponents * e_position`` with a 0-based position."""

    exponents: Tuple[int, ...]
    position: int


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grlex or grevlex on R[X_1..X_n].

    ``priority`` lists variable indices from the largest variable to the
    smallest; ``(1, 0)`` encodes ``X_2 > X_1``.
    """

    name: str
    priority: Tuple[int, ...]

    def __post_init__(self):
        if self.name not in BASE_ORDERS:
            raise ValueError(f"unknown monomial order {self.name!r}")
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError(f"priority {self.priority} is not a permutation")

    @classmethod
    def default(cls, name, nvars):
        return cls(name, tuple(range(nvars)))

    def key(self, exps):
        lexkey = tuple(exps[i] for i in self.priority)
        if self.name == "lex":
            return lexkey
        deg = sum(exps)
        if self.name == "grlex":
            return (deg, lexkey)
        return (deg, tuple(-exps[i] for i in reversed(self.priority)))


@dataclass(frozen=True)
class Schreyer:
    """Order on R[X]^p induced by a target order and ``LM(f_1..f_p)``."""

    target: "OrderSpec"
    leading: Tuple[ModuleMonomial, ...]


@dataclass(frozen=True)
class OrderSpec:
    base: MonomialOrder
    module_rule: Union[str, Schreyer] = "top"
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if isinstance(self.module_rule, str) and self.module_rule not in ("top", "pot"):
            raise ValueError(f"unknown module order {self.module_rule!r}")

    @property
    def is_schreyer(self):
        return isinstance(self.module_rule, Schreyer)

    def key(self, m):
        try:
            return self._cache[m]
        except KeyError:
            pass
        exps, pos = m
        rule = self.module_rule
        if rule == "top":
            k = (self.base.key(exps), -pos)
        elif rule == "pot":
            k = (-pos, self.base.key(exps))
        else:
            lead = rule.leading[pos]
            image = ModuleMonomial(tuple(a + b for a, b in zip(exps, lead.exponents)), lead.position)
            k = (rule.target.key(image), -pos)
        self._cache[m] = k
        return k

    def compare(self, m, n):
        a, b = self.key(m), self.key(n)
        return GREATER if a > b else LESS if a < b else EQUAL

    def scalar_order(self):
        """The order on R[X] = R[X]^1 sharing this spec's ring order."""
        return OrderSpec(self.base, "top")


def schreyer_order(target, leading):
    """Schreyer's order induced by ``target`` and the leading monomials."""
    return OrderSpec(target.base, Schreyer(target, tuple(ModuleMonomial(*m) for m in leading)))


def compare(spec, m, n):
    return spec.compare(m, n)


def schreyer_compare(spec, m, n):
    if not spec.is_schreyer:
        raise ValueError("not a Schreyer order")
    return spec.compare(m, n)
