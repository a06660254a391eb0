"""Run Buchberger with increasing round caps and report where it stops."""

import argparse

from syzcalc.groebner import buchberger
from syzcalc.notation import format_polynomial, parse_polynomial
from syzcalc.polynomials import PolyContext
from syzcalc.rings import parse_ring


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ring", default="ZZ")
    ap.add_argument("--vars", default="x,y")
    ap.add_argument("--max", type=int, default=6, help="largest round cap to try")
    ap.add_argument("polys", nargs="*", default=["x^3 - y + 1", "x*y^2 - 2", "y^3 - x"])
    args = ap.parse_args(argv)
    ctx = PolyContext.create(parse_ring(args.ring), args.vars.split(","))
    fs = [parse_polynomial(p, ctx) for p in args.polys]
    for cap in range(1, args.max + 1):
        G, report = buchberger(fs, cap)
        state = "terminated" if report.terminated else "round limit reached"
        print(f"cap {cap}: {state}, {len(G.elements)} elements after {report.rounds} rounds")
        if report.terminated:
            for g in G.elements:
                print("   ", format_polynomial(g))
            break


if __name__ == "__main__":
    main()
