import pytest
from hypothesis import settings

from syzcalc.notation import parse_polynomial
from syzcalc.polynomials import PolyContext
from syzcalc.rings import Integers, IntegersMod, Rationals

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ZZ = Integers()
QQ = Rationals()
Z8 = IntegersMod(8)


def ctx_of(ring, names="x,y", rank=1, order="grlex", module_order="top"):
    return PolyContext.create(ring, names.split(","), rank, order, module_order)


def polys(ctx, *texts):
    return [parse_polynomial(t, ctx) for t in texts]


@pytest.fixture
def ex42():
    """The three terms over Z/8[X,Y]^2 used throughout."""
    ctx = ctx_of(Z8, "X,Y", rank=2)
    fs = polys(ctx, "2*X^2*Y*e1", "X*Y^2*e1", "4*X*e2")
    return ctx, fs
