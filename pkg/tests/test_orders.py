import itertools

import pytest
from hypothesis import given, strategies as st

from syzcalc.orders import ModuleMonomial, MonomialOrder, OrderSpec, schreyer_order

exps2 = st.tuples(st.integers(0, 4), st.integers(0, 4))
exps3 = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@pytest.mark.parametrize(
    "name,bigger,smaller",
    [
        ("lex", (1, 0, 0), (0, 5, 5)),
        ("grlex", (0, 3, 0), (2, 0, 0)),
        ("grlex", (2, 0, 1), (1, 2, 0)),
        ("grevlex", (0, 2, 0), (1, 0, 1)),  # smaller power of the last variable wins
        ("grlex", (1, 0, 1), (0, 2, 0)),
        ("grevlex", (2, 1, 0), (1, 2, 0)),
    ],
)
def test_base_orders(name, bigger, smaller):
    o = MonomialOrder.default(name, 3)
    assert o.key(bigger) > o.key(smaller)


def test_priority_reverses_variables():
    o = MonomialOrder("lex", (1, 0))
    assert o.key((0, 1)) > o.key((5, 0))


def test_bad_order():
    with pytest.raises(ValueError):
        MonomialOrder.default("revlex", 2)
    with pytest.raises(ValueError):
        OrderSpec(MonomialOrder.default("lex", 2), "xyz")


@pytest.mark.parametrize("name", ["lex", "grlex", "grevlex"])
@given(a=exps3, b=exps3, c=exps3)
def test_monomial_order_axioms(name, a, b, c):
    o = MonomialOrder.default(name, 3)
    ka, kb = o.key(a), o.key(b)
    # total and compatible with multiplication
    assert (ka == kb) == (a == b)
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    if ka < kb:
        assert o.key(ac) < o.key(bc)
    # well order: 1 is the smallest monomial
    assert o.key((0, 0, 0)) <= ka


def test_top_and_pot():
    base = MonomialOrder.default("grlex", 2)
    top = OrderSpec(base, "top")
    pot = OrderSpec(base, "pot")
    a = ModuleMonomial((2, 0), 1)
    b = ModuleMonomial((1, 0), 0)
    assert top.compare(a, b) == 1
    assert pot.compare(a, b) == -1
    # ties between positions: smaller index is larger
    assert top.compare(ModuleMonomial((1, 0), 0), ModuleMonomial((1, 0), 1)) == 1


@pytest.mark.parametrize("rule", ["top", "pot"])
@given(a=exps2, b=exps2, c=exps2, i=st.integers(0, 2), j=st.integers(0, 2))
def test_module_order_compatible(rule, a, b, c, i, j):
    o = OrderSpec(MonomialOrder.default("grevlex", 2), rule)
    m, n = ModuleMonomial(a, i), ModuleMonomial(b, j)
    mc = ModuleMonomial(tuple(x + y for x, y in zip(a, c)), i)
    nc = ModuleMonomial(tuple(x + y for x, y in zip(b, c)), j)
    assert o.compare(m, n) == o.compare(mc, nc)


def test_schreyer_order_definition():
    target = OrderSpec(MonomialOrder.default("grlex", 2), "top")
    leading = [ModuleMonomial((2, 1), 0), ModuleMonomial((1, 2), 0), ModuleMonomial((1, 0), 1)]
    s = schreyer_order(target, leading)
    # Y*eps_1 and 6X*eps_2 both map to X^2Y^2 e1; the smaller index wins
    assert s.compare(ModuleMonomial((0, 1), 0), ModuleMonomial((1, 0), 1)) == 1
    # images compared by the target order
    assert s.compare(ModuleMonomial((0, 0), 0), ModuleMonomial((0, 0), 2)) == 1
    assert s.is_schreyer and not target.is_schreyer


@given(st.lists(st.tuples(exps2, st.integers(0, 1)), min_size=1, max_size=4), st.data())
def test_schreyer_is_monomial_order(leads, data):
    target = OrderSpec(MonomialOrder.default("grlex", 2), "top")
    s = schreyer_order(target, [ModuleMonomial(*m) for m in leads])
    p = len(leads)
    a, b, c = data.draw(exps2), data.draw(exps2), data.draw(exps2)
    i, j = data.draw(st.integers(0, p - 1)), data.draw(st.integers(0, p - 1))
    m, n = ModuleMonomial(a, i), ModuleMonomial(b, j)
    assert (s.compare(m, n) == 0) == (m == n)
    mc = ModuleMonomial(tuple(x + y for x, y in zip(a, c)), i)
    nc = ModuleMonomial(tuple(x + y for x, y in zip(b, c)), j)
    assert s.compare(m, n) == s.compare(mc, nc)


def test_nested_schreyer_orders():
    target = OrderSpec(MonomialOrder.default("lex", 2), "top")
    s1 = schreyer_order(target, [ModuleMonomial((1, 0), 0), ModuleMonomial((0, 1), 0)])
    s2 = schreyer_order(s1, [ModuleMonomial((0, 1), 0)])
    keys = [s2.key(ModuleMonomial(e, 0)) for e in itertools.product(range(3), repeat=2)]
    assert len(set(keys)) == 9
