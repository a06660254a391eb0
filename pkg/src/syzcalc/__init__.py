"""Groebner bases, syzygies and free resolutions over R[X]^m for R = ZZ, QQ, ZZ/n."""

from .division import divide
from .groebner import GroebnerBasis, RoundLimitExceeded, buchberger, buchberger_criterion, groebner_basis
from .notation import ParseError, format_polynomial, parse_polynomial
from .polynomials import PolyContext, PolyVector
from .resolutions import free_resolution, schreyer_syzygies, syzygies_of_generators
from .rings import Integers, IntegersMod, Rationals, parse_ring

__all__ = [
    "GroebnerBasis", "Integers", "IntegersMod", "ParseError", "PolyContext", "PolyVector",
    "Rationals", "RoundLimitExceeded", "buchberger", "buchberger_criterion", "divide",
    "format_polynomial", "free_resolution", "groebner_basis", "parse_polynomial", "parse_ring",
    "schreyer_syzygies", "syzygies_of_generators",
]
