"""Print the worked examples: syzygies of terms over Z/8, two rewriting
traces over Z, and a free resolution."""

from syzcalc.notation import format_polynomial, parse_polynomial
from syzcalc.polynomials import PolyContext
from syzcalc.resolutions import free_resolution
from syzcalc.rings import Integers, IntegersMod
from syzcalc.syzygies import iterated_rewrite, position_level_sets, syzygies_of_terms


def show_terms_example():
    ctx = PolyContext.create(IntegersMod(8), ("X", "Y"), 2)
    fs = [parse_polynomial(t, ctx) for t in ("2*X^2*Y*e1", "X*Y^2*e1", "4*X*e2")]
    terms = [f.leading_term() for f in fs]
    sets = position_level_sets([t.monomial for t in terms])
    print("level sets:", " ".join("{" + ",".join(str(j + 1) for j in E) + "}" for E in sets))
    rank3 = PolyContext.create(IntegersMod(8), ("X", "Y"), 3)
    for S in syzygies_of_terms(ctx, terms):
        print("  ", format_polynomial(S.to_vector(rank3), basis="s"))
    return fs


def show_trace(title, ring, names, order, g, f):
    ctx = PolyContext.create(ring, names, 1, order)
    pairs = [(parse_polynomial(a, ctx), parse_polynomial(b, ctx)) for a, b in zip(g, f)]
    res = iterated_rewrite(pairs)
    print(f"{title}: {res.q} rewriting steps")
    for (E, i), (c, _) in res.state.grouped_decomposition().items():
        label = "{" + ",".join(str(j + 1) for j in E) + "}"
        print(f"   E={label} i={i + 1}: coefficient {format_polynomial(c)}")


def main():
    fs = show_terms_example()
    show_trace(
        "trace 1", Integers(), ("X", "Y", "Z"), "grlex",
        ["5*X*Z + 10*Z^2", "-2*Y + 2*Z", "-3*X^2*Y - 6*X*Y^2"],
        ["6*X*Y^2", "15*X^2*Y*Z", "10*Z^2"],
    )
    show_trace(
        "trace 2", Integers(), ("X", "Y"), "lex",
        ["2*X + Y", "-3*X^2 + 2*X*Y", "3*X*Y - 9*Y^2"],
        ["3*X*Y", "3*Y", "X"],
    )
    res = free_resolution(fs)
    print("resolution ranks:", " <- ".join(map(str, res.ranks)), f"(length {res.length})")
    print("composition of consecutive maps is zero:", res.composition_zero())


if __name__ == "__main__":
    main()
