"""``syzcalc`` command-line driver.

Input is a problem file (or stdin): optional ``key: value`` header lines
(``ring``, ``vars``, ``rank``, ``order``, ``module-order``), then one
polynomial vector per line.  ``#`` starts a comment line.  A JSON document
in the output schema is accepted too.  Command-line flags override the
header.

Exit status: 0 success, 1 usage error, 2 round or stage limit reached,
3 parse error.
"""

import argparse
import json
import sys

from .division import divide
from .groebner import (
    DEFAULT_MAX_ROUNDS,
    NotAGroebnerBasis,
    RoundLimitExceeded,
    buchberger,
    buchberger_criterion,
    pseudo_reduce,
)
from .notation import ParseError, format_polynomial, parse_polynomial, poly_from_json, poly_to_json
from .orders import BASE_ORDERS, OrderSpec
from .polynomials import PolyContext
from .resolutions import StageLimitError, free_resolution, schreyer_syzygies, syzygy_context
from .rings import RingError, parse_ring
from .syzygies import SizeLimitError, position_level_sets, s_list_items, syzygies_of_terms

EXIT_OK, EXIT_USAGE, EXIT_LIMIT, EXIT_PARSE = 0, 1, 2, 3
HEADER_KEYS = ("ring", "vars", "rank", "order", "module-order")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# problem input


def _split_header(text):
    header, body = {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip().lower() in HEADER_KEYS and not body:
            header[key.strip().lower()] = value.strip()
        else:
            body.append((lineno, line))
    return header, body


def _context(settings):
    try:
        ring = parse_ring(settings.get("ring", "ZZ"))
    except RingError as exc:
        raise ParseError(str(exc)) from None
    names = [v.strip() for v in settings.get("vars", "x").split(",") if v.strip()]
    try:
        rank = int(settings.get("rank", 1))
    except ValueError:
        raise ParseError(f"bad rank {settings.get('rank')!r}") from None
    try:
        return PolyContext.create(
            ring, names, rank, settings.get("order", "grlex"), settings.get("module-order", "top")
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _flag_settings(args):
    out = {}
    for key, attr in (("ring", "ring"), ("vars", "vars"), ("rank", "rank"), ("order", "order"),
                      ("module-order", "module_order")):
        val = getattr(args, attr, None)
        if val is not None:
            out[key] = str(val)
    return out


def read_problem(text, overrides=None):
    """``(ctx, [PolyVector])`` from problem-file or JSON text."""
    overrides = overrides or {}
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        c = doc.get("context", {})
        settings = {
            "ring": c.get("ring", "ZZ"),
            "vars": ",".join(c.get("vars", ["x"])),
            "rank": c.get("rank", 1),
            "order": c.get("order", "grlex"),
            "module-order": c.get("module_order", "top"),
        }
        settings.update(overrides)
        ctx = _context(settings)
        return ctx, [poly_from_json(p, ctx) for p in doc.get("polynomials", [])]
    header, body = _split_header(text)
    header.update(overrides)
    ctx = _context(header)
    polys = []
    for lineno, line in body:
        try:
            polys.append(parse_polynomial(line, ctx))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return ctx, polys


# ---------------------------------------------------------------------------
# output


def context_json(ctx):
    order = ctx.order
    return {
        "ring": str(ctx.ring),
        "vars": list(ctx.var_names),
        "rank": ctx.rank,
        "order": order.base.name,
        "module_order": order.module_rule if isinstance(order.module_rule, str) else "schreyer",
    }


def header_lines(ctx):
    return [
        f"ring: {ctx.ring}",
        f"vars: {', '.join(ctx.var_names)}",
        f"rank: {ctx.rank}",
        f"order: {ctx.order.base.name}",
        f"module-order: {ctx.order.module_rule}",
    ]


def _label_text(label):
    if label is None:
        return ""
    E, i = label[0], label[1]
    return "E={" + ",".join(str(j + 1) for j in E) + f"}} i={i + 1}"


def _label_json(label):
    if label is None:
        return None
    return {"E": [j + 1 for j in label[0]], "i": label[1] + 1}


class Output:
    def __init__(self, as_json):
        self.as_json = as_json
        self.lines = []
        self.doc = {}

    def emit(self):
        if self.as_json:
            return json.dumps(self.doc, indent=2, sort_keys=False) + "\n"
        return "\n".join(self.lines) + "\n"


def _syzygy_block(out, syzygies, sctx, kind, ctx):
    out.doc.update(
        {
            "context": context_json(ctx),
            "kind": kind,
            "syzygy_rank": sctx.rank,
            "polynomials": [poly_to_json(s.to_vector(sctx)) for s in syzygies],
            "labels": [_label_json(s.label) for s in syzygies],
        }
    )
    for s in syzygies:
        text = format_polynomial(s.to_vector(sctx), basis="s")
        lab = _label_text(s.label)
        out.lines.append(f"{text}    # {lab}" if lab else text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_groebner(args, ctx, polys, out):
    polys = [f for f in polys if f]
    if not polys:
        raise UsageError("no nonzero input polynomials")
    basis, report = buchberger(polys, args.max_rounds, args.bezout_pairs)
    if report.terminated and args.pseudo_reduce:
        basis = pseudo_reduce(basis)
    out.doc = {
        "context": context_json(ctx),
        "kind": "groebner_basis",
        "terminated": report.terminated,
        "rounds": report.rounds,
        "polynomials": [poly_to_json(g) for g in basis.elements],
    }
    out.lines += header_lines(ctx)
    status = "terminated" if report.terminated else "round limit reached"
    out.lines.append(f"# groebner basis: {len(basis)} elements, {report.rounds} rounds, {status}")
    out.lines += [format_polynomial(g) for g in basis.elements]
    return EXIT_OK if report.terminated else EXIT_LIMIT


def cmd_divide(args, ctx, polys, out):
    if len(polys) < 2:
        raise UsageError("divide needs a dividend followed by at least one divisor")
    u, divisors = polys[0], polys[1:]
    if any(h.is_zero() for h in divisors):
        raise UsageError("cannot divide by the zero vector")
    res = divide(u, divisors)
    out.doc = {
        "context": context_json(ctx),
        "kind": "division",
        "quotients": [poly_to_json(q) for q in res.quotients],
        "remainder": poly_to_json(res.remainder),
    }
    for j, q in enumerate(res.quotients, 1):
        out.lines.append(f"q{j} = {format_polynomial(q)}")
    out.lines.append(f"r = {format_polynomial(res.remainder)}")
    return EXIT_OK


def _terms_of(polys):
    terms = []
    for f in polys:
        if len(f) != 1:
            raise UsageError(f"{format_polynomial(f)} is not a single nonzero term")
        terms.append(f.leading_term())
    return terms


def cmd_syzygies_of_terms(args, ctx, polys, out):
    terms = _terms_of(polys)
    syz = syzygies_of_terms(ctx, terms, args.bezout_pairs)
    sets = position_level_sets([t.monomial for t in terms], max_size=2 if args.bezout_pairs else None)
    sctx = ctx.with_rank(len(terms), OrderSpec(ctx.order.base, "top"))
    out.lines.append("level sets: " + " ".join("{" + ",".join(str(j + 1) for j in E) + "}" for E in sets))
    _syzygy_block(out, syz, sctx, "syzygies_of_terms", ctx)
    out.doc["level_sets"] = [[j + 1 for j in E] for E in sets]
    return EXIT_OK


def cmd_slist(args, ctx, polys, out):
    polys = [f for f in polys if f]
    items = s_list_items(polys, args.bezout_pairs)
    out.doc = {
        "context": context_json(ctx),
        "kind": "s_list",
        "polynomials": [poly_to_json(it.vector) for it in items],
        "labels": [_label_json(it.syzygy.label) for it in items],
    }
    for it in items:
        out.lines.append(f"{format_polynomial(it.vector)}    # {_label_text(it.syzygy.label)}")
    return EXIT_OK


def cmd_schreyer(args, ctx, polys, out):
    polys = [f for f in polys if f]
    if not polys:
        raise UsageError("no nonzero input polynomials")
    res = schreyer_syzygies(polys)
    _syzygy_block(out, res.syzygies, syzygy_context(polys), "schreyer_syzygies", ctx)
    return EXIT_OK


def cmd_resolution(args, ctx, polys, out):
    polys = [f for f in polys if f]
    if not polys:
        raise UsageError("no nonzero input polynomials")
    res = free_resolution(polys, args.max_stage, args.max_rounds)
    out.doc = {
        "context": context_json(ctx),
        "kind": "resolution",
        "ranks": res.ranks,
        "length": res.length,
        "stages": [
            {
                "rank": st.rank,
                "eliminated": None if st.eliminated is None else ctx.var_names[st.eliminated],
                "polynomials": [poly_to_json(g) for g in st.elements],
            }
            for st in res.stages
        ],
    }
    out.lines.append("ranks: " + " <- ".join(str(r) for r in res.ranks))
    out.lines.append(f"length: {res.length}")
    for k, st in enumerate(res.stages):
        elim = "" if st.eliminated is None else f", eliminating {ctx.var_names[st.eliminated]} next"
        out.lines.append(f"stage {k}: {st.size} generators in rank {st.rank}{elim}")
        basis = "e" if k == 0 else "s"
        out.lines += ["  " + format_polynomial(g, basis=basis) for g in st.elements]
    return EXIT_OK


def cmd_check(args, ctx, polys, out):
    polys = [f for f in polys if f]
    if not polys:
        raise UsageError("no nonzero input polynomials")
    result = buchberger_criterion(polys, args.bezout_pairs)
    out.doc = {
        "context": context_json(ctx),
        "kind": "criterion",
        "holds": result.holds,
        "witness": None if result.holds else poly_to_json(result.witness),
    }
    out.lines.append("criterion: PASS" if result.holds else "criterion: FAIL")
    if not result.holds:
        out.lines.append(f"witness remainder: {format_polynomial(result.witness)}")
    return EXIT_OK


COMMANDS = {
    "groebner": (cmd_groebner, "Groebner basis by Buchberger's algorithm"),
    "divide": (cmd_divide, "divide the first vector by the others"),
    "syzygies-of-terms": (cmd_syzygies_of_terms, "syzygy generators of single terms"),
    "slist": (cmd_slist, "S-list of the input vectors"),
    "schreyer": (cmd_schreyer, "Schreyer syzygies of a Groebner basis"),
    "resolution": (cmd_resolution, "free resolution with variable elimination"),
    "check": (cmd_check, "Buchberger criterion"),
}


def build_parser():
    parser = _Parser(prog="syzcalc", description="Groebner bases, syzygies and free resolutions.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--ring", help="ZZ, QQ or ZZ/<n>")
        p.add_argument("--vars", help="comma separated variable names, largest first")
        p.add_argument("--rank", type=int, help="module rank m")
        p.add_argument("--order", choices=BASE_ORDERS)
        p.add_argument("--module-order", choices=("top", "pot"))
        p.add_argument("--max-rounds", type=int, default=DEFAULT_MAX_ROUNDS)
        p.add_argument("--max-stage", type=int, default=None)
        p.add_argument("--pseudo-reduce", action="store_true")
        p.add_argument("--bezout-pairs", action="store_true", help="pairwise syzygies for Bezout rings")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--input", "-i", help="problem file (default: stdin)")
    return parser


def run(argv, stdin=None):
    """Run the CLI; returns ``(exit_code, stdout_text, stderr_text)``."""
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        if args.max_rounds < 1:
            raise UsageError("--max-rounds must be >= 1")
        if args.max_stage is not None and args.max_stage < 1:
            raise UsageError("--max-stage must be >= 1")
        if args.input:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(str(exc)) from None
        else:
            text = (stdin if stdin is not None else sys.stdin).read()
        ctx, polys = read_problem(text, _flag_settings(args))
        out = Output(args.json)
        code = COMMANDS[args.command][0](args, ctx, polys, out)
        return code, out.emit(), ""
    except UsageError as exc:
        return EXIT_USAGE, "", f"syzcalc: {exc}\n"
    except ParseError as exc:
        return EXIT_PARSE, "", f"syzcalc: parse error: {exc}\n"
    except (RoundLimitExceeded, StageLimitError) as exc:
        return EXIT_LIMIT, "", f"syzcalc: {exc}\n"
    except (NotAGroebnerBasis, SizeLimitError, RingError) as exc:
        return EXIT_USAGE, "", f"syzcalc: {exc}\n"


def main(argv=None):
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
