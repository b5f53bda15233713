"""Command-line front end: ``cobwebs <subcommand> ...``.

Exit status: 0 on success, 1 when a verification suite fails, 2 on usage
errors (bad arguments, malformed descriptors, inadmissible input).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import connection as cn
from .chains import Layer, count_max_chains, count_max_chains_closed, enumerate_max_chains, DEFAULT_CAP
from .cobweb import (
    KROT_PARSES,
    CobwebPoset,
    diff_report,
    mobius_from_zeta,
    mobius_krot_matrix,
    zeta_blocks,
    zeta_definitional,
    zeta_dziemianczuk,
    zeta_krot_matrix,
    zeta_delta_fib,
    zeta_delta_general,
)
from .errors import CobwebError
from .fnomial import ccc_rowsum, fnomial, fnomial_recurrence, fnomial_table
from .render import STYLES, render_csv, render_la_scala
from .seq import make_sequence
from .verify import SUITES, run_suite

SEQ_GRAMMAR = "naturals | fibonacci | gaussian:<q> | constant:<c> | custom:<t1>,<t2>,..."
ROOT_GRAMMAR = "zeros | lucas | falling | qpowers:<q> | const:<c> | <r1>,<r2>,... (rationals p/q allowed)"
ZETA_FORMULAS = ("oracle", "dziemianczuk", "delta-fib", "delta-general", "blocks", "krot-grid")

GRAMMAR = f"""sequence descriptors: {SEQ_GRAMMAR}
root descriptors:     {ROOT_GRAMMAR}
"""


class UsageError(Exception):
    pass


def _sequence(text):
    try:
        return make_sequence(text)
    except CobwebError as exc:
        raise argparse.ArgumentTypeError(f"{exc} (grammar: {SEQ_GRAMMAR})")


def _roots(text):
    try:
        return cn.parse_roots(text)
    except CobwebError as exc:
        raise argparse.ArgumentTypeError(f"{exc} (grammar: {ROOT_GRAMMAR})")


def _target(text):
    name, _, arg = text.partition(":")
    try:
        if name == "fibonacci":
            return cn.fibonacci_target(int(arg))
        if name == "lucas":
            return [1] + cn.lucas_numbers(int(arg))[1:]
        if name == "pow2":
            return [2**n for n in range(int(arg) + 1)]
        return [Fraction(t) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"malformed target {text!r} (fibonacci:<n> | lucas:<n> | pow2:<n> | <C0>,<C1>,...)"
        )


def _formula_mobius(text):
    if text == "inverse":
        return ("inverse", None)
    name, _, parse = text.partition(":")
    if name == "krot":
        parse = parse or "each-minus-one"
        if parse in KROT_PARSES:
            return ("krot", parse)
    raise argparse.ArgumentTypeError(
        f"unknown formula {text!r} (inverse | krot:{{{','.join(KROT_PARSES)}}})"
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cobwebs",
        description="Exact F-nomials, connection constants and cobweb-poset matrices.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("-o", "--output", help="write output to this file instead of stdout")
    # -o is also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, metavar="subcommand")
    add = sub.add_parser

    def add_parser(name, **kw):
        return add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    c = sub.add_parser("fnomial", help="one F-nomial coefficient")
    c.add_argument("seq", type=_sequence)
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)

    c = sub.add_parser("triangle", help="F-nomial triangle as CSV")
    c.add_argument("seq", type=_sequence)
    c.add_argument("n", type=int)
    c.add_argument("--form", default="factorial", choices=("factorial", "form-A", "form-B", "q-form"))

    c = sub.add_parser("ccc", help="cumulative connection constants sum_k binom(n,k)_F")
    c.add_argument("seq", type=_sequence)
    c.add_argument("n", type=int)

    c = sub.add_parser("lah", help="generalized Lah table for root sequences r, s")
    c.add_argument("n", type=int)
    c.add_argument("--r", type=_roots, required=True, metavar="ROOTS")
    c.add_argument("--s", type=_roots, default=cn.zero_roots(), metavar="ROOTS")
    c.add_argument("--ccc", action="store_true", help="print row sums instead of the table")

    c = sub.add_parser("solve-roots", help="root sequence [r] whose Lah row sums hit a target")
    c.add_argument("target", type=_target)
    c.add_argument("--s", type=_roots, default=cn.zero_roots(), metavar="ROOTS")

    c = sub.add_parser("zeta", help="zeta matrix from one of the closed forms")
    c.add_argument("seq", type=_sequence, nargs="?", default=make_sequence("fibonacci"))
    c.add_argument("--formula", choices=ZETA_FORMULAS, default="oracle")
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--style", choices=STYLES, default="csv")
    c.add_argument("--k-start", type=int, choices=(0, 1), default=0)
    c.add_argument("--variant", choices=("knuth", "shift"), default="knuth")
    c.add_argument("--report", action="store_true", help="print a diff against the oracle instead")

    c = sub.add_parser("mobius", help="Moebius matrix as CSV")
    c.add_argument("seq", type=_sequence, nargs="?", default=make_sequence("fibonacci"))
    c.add_argument("--formula", type=_formula_mobius, default=("inverse", None))
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--report", action="store_true", help="print a diff against the inverse instead")

    c = sub.add_parser("lascala", help="render the zeta staircase")
    c.add_argument("seq", type=_sequence, nargs="?", default=make_sequence("fibonacci"))
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--style", choices=STYLES, default="ascii")
    c.add_argument("--align", choices=("right", "left"), default="right")

    c = sub.add_parser("chains", help="maximal chains of the layer <Phi_k -> Phi_n>")
    c.add_argument("seq", type=_sequence)
    c.add_argument("k", type=int)
    c.add_argument("n", type=int)
    c.add_argument("--list", action="store_true", help="list the chains (label tuples)")
    c.add_argument("--cap", type=int, default=DEFAULT_CAP)

    c = sub.add_parser("verify", help="run a verification suite")
    c.add_argument("suite", choices=(*SUITES, "all"))
    c.add_argument("seq", nargs="?", type=_sequence)
    c.add_argument("--size", type=int)
    return p


def _zeta(args):
    seq, size = args.seq, args.size
    if size < 1:
        raise UsageError("--size must be >= 1")
    poset = CobwebPoset.covering(seq, size)
    f = args.formula
    if f == "oracle":
        return zeta_definitional(poset, size)
    if f == "dziemianczuk":
        return zeta_dziemianczuk(seq, size)
    if f == "delta-fib":
        if seq.kind != "fibonacci":
            raise UsageError("delta-fib is defined for fibonacci only")
        return zeta_delta_fib(size, args.k_start)
    if f == "delta-general":
        return zeta_delta_general(seq, size, args.variant)
    if f == "blocks":
        return zeta_blocks(seq, poset.n_levels)[:size, :size]
    return zeta_krot_matrix(poset, size)


def _run(args) -> tuple[str, int]:
    cmd = args.command
    if cmd == "fnomial":
        return f"{fnomial(args.seq, args.n, args.k)}\n", 0
    if cmd == "triangle":
        if args.form == "factorial":
            table = fnomial_table(args.seq, args.n)
        else:
            table = fnomial_recurrence(args.seq, args.n, args.form)
        return table.to_csv(), 0
    if cmd == "ccc":
        return "".join(f"{n},{ccc_rowsum(args.seq, n)}\n" for n in range(args.n + 1)), 0
    if cmd == "lah":
        table = cn.lah_table(args.r, args.s, args.n)
        if args.ccc:
            return "".join(f"{n},{cn.ccc(table, n)}\n" for n in range(args.n + 1)), 0
        return table.to_csv(), 0
    if cmd == "solve-roots":
        roots = cn.solve_root_sequence(args.target, args.s)
        return ",".join(map(str, roots.terms)) + "\n", 0
    if cmd == "zeta":
        z = _zeta(args)
        if args.report:
            oracle = zeta_definitional(CobwebPoset.covering(args.seq, args.size), args.size)
            return diff_report(f"zeta {args.formula} vs oracle, {args.seq}, size {args.size}", oracle, z), 0
        return render_la_scala(z, args.style), 0
    if cmd == "mobius":
        poset = CobwebPoset.covering(args.seq, args.size)
        inverse = mobius_from_zeta(zeta_definitional(poset, args.size))
        kind, parse = args.formula
        mu = inverse if kind == "inverse" else mobius_krot_matrix(poset, parse, args.size)
        if args.report:
            return diff_report(f"mobius {kind}:{parse} vs inverse, {args.seq}, size {args.size}",
                               inverse, mu), 0
        return render_csv(mu), 0
    if cmd == "lascala":
        z = zeta_definitional(CobwebPoset.covering(args.seq, args.size), args.size)
        kw = {"align": args.align} if args.style == "ascii" else {}
        return render_la_scala(z, args.style, **kw), 0
    if cmd == "chains":
        if not 1 <= args.k <= args.n:
            raise UsageError("need 1 <= k <= n")
        layer = Layer(CobwebPoset(args.seq, args.n), args.k, args.n)
        if args.list:
            chains = enumerate_max_chains(layer, args.cap)
            return "".join(",".join(map(str, c)) + "\n" for c in chains), 0
        counted = count_max_chains(layer)
        closed = count_max_chains_closed(args.seq, args.k, args.n)
        return f"enumerated,{counted}\nclosed_form,{closed}\n", 0 if counted == closed else 1
    if cmd == "verify":
        results = run_suite(args.suite, args.seq, args.size)
        text = "".join(r.render() for r in results)
        ok = all(r.ok for r in results)
        text += "summary\n" + "".join(f"  {r.name}: {'PASS' if r.ok else 'FAIL'}\n" for r in results)
        return text, 0 if ok else 1
    raise UsageError(f"unknown command {cmd}")


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = _run(args)
    except (UsageError, CobwebError) as exc:
        print(f"cobwebs: error: {exc}\n{GRAMMAR}", file=sys.stderr, end="")
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code if isinstance(exc.code, int) else 2
    sys.exit(code)


if __name__ == "__main__":
    main()
