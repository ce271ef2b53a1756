"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import os
import random
import sys
import warnings
from fractions import Fraction

from . import dna
from .bench import bench
from .formats import (
    FORMATS,
    cell_text,
    dumps,
    point_json,
    render_matrix,
    table_rows_csv,
    vector_json,
    vector_text,
)
from .linalg import NotCentrosymmetricError, det_bareiss, det_centro, kernel, normalize_vector
from .rational import format_rational, parse_rational
from .table import build_table, render_table
from .verify import DEFAULT_TS, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational_arg(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_point_args(p, required=False):
    p.add_argument("--t", type=_rational_arg, help="hyperbola parameter, alpha=(t^2+1)/2t, beta=(t^2-1)/2t")
    p.add_argument("--alpha", type=_rational_arg)
    p.add_argument("--beta", type=_rational_arg)
    p.add_argument("--off-hyperbola", action="store_true", help="allow alpha^2 - beta^2 != 1")
    p.set_defaults(point_required=required)


def _add_format(p):
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--unicode", action="store_true", help="use α, β instead of a, b")


def _resolve_point(args):
    """Return (alpha, beta) or None for symbolic output."""
    given_ab = args.alpha is not None or args.beta is not None
    if args.t is not None and given_ab:
        raise UsageError("give either --t or --alpha/--beta, not both")
    if args.t is not None:
        if args.t == 0:
            raise UsageError("--t must be nonzero")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", dna.DegenerateRotationWarning)
            pt = dna.hyperbola_point(args.t)
        return pt.alpha, pt.beta
    if given_ab:
        if args.alpha is None or args.beta is None:
            raise UsageError("--alpha and --beta must be given together")
        if not args.off_hyperbola and args.alpha**2 - args.beta**2 != 1:
            raise UsageError(
                f"alpha^2 - beta^2 = {format_rational(args.alpha**2 - args.beta**2)}, not 1 "
                "(pass --off-hyperbola to allow this)"
            )
        return args.alpha, args.beta
    if args.point_required:
        raise UsageError("a point is required: --t or --alpha/--beta")
    return None


def _check_n(n):
    if n < 0:
        raise UsageError(f"--n must be >= 0, got {n}")


def _color(text, code):
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def cmd_build(args, out):
    _check_n(args.n)
    point = _resolve_point(args)
    m = dna.build_dna(args.n, args.mode)
    if point is not None:
        m = dna.eval_matrix(m, *point)
    out(render_matrix(m, args.format, point, args.unicode))
    return EXIT_OK


def cmd_det(args, out):
    _check_n(args.n)
    alpha, beta = _resolve_point(args)
    m = dna.eval_matrix(dna.build_dna(args.n), alpha, beta)
    values = {}
    if args.strategy in ("bareiss", "both"):
        values["bareiss"] = det_bareiss(m)
    if args.strategy in ("centro", "both"):
        try:
            values["centro"] = det_centro(m)
        except NotCentrosymmetricError as exc:
            raise UsageError(str(exc))
    agree = len(set(values.values())) == 1
    if args.format == "json":
        doc = {"n": args.n, "point": point_json((alpha, beta))}
        doc.update({k: format_rational(v) for k, v in values.items()})
        if args.strategy == "both":
            doc["agree"] = agree
        out(dumps(doc))
    elif args.format == "csv":
        header = ["n", "alpha", "beta"] + list(values) + (["agree"] if args.strategy == "both" else [])
        row = [str(args.n), format_rational(alpha), format_rational(beta)]
        row += [format_rational(v) for v in values.values()]
        if args.strategy == "both":
            row.append(str(agree).lower())
        out(table_rows_csv(header, [row]))
    elif args.format == "latex":
        out(f"\\det A_{{{args.n}}} = {cell_text(next(iter(values.values())), latex=True)}")
    elif args.strategy == "both":
        out(f"bareiss: {format_rational(values['bareiss'])}")
        out(f"centro: {format_rational(values['centro'])}")
        out(f"agree: {str(agree).lower()}")
    else:
        out(format_rational(next(iter(values.values()))))
    return EXIT_OK if agree else EXIT_FAIL


def cmd_nullspace(args, out):
    _check_n(args.n)
    alpha, beta = _resolve_point(args)
    m = dna.eval_matrix(dna.build_dna(args.n), alpha, beta)
    ker = kernel(m)
    binomial = None
    matches = None
    form = None
    if args.n >= 2 and args.n % 2 == 0:
        binomial = normalize_vector(dna.binomial_null_vector(args.n))
        matches = ker.dimension == 1 and ker.vectors[0] == binomial
        form = dna.invariant_form(args.n)
    if args.format == "json":
        out(dumps({
            "n": args.n,
            "point": point_json((alpha, beta)),
            "rank": ker.rank,
            "basis": [vector_json(v) for v in ker.vectors],
            "binomial_vector": vector_json(binomial),
            "matches_binomial": matches,
            "invariant_form": form,
        }))
    elif args.format == "csv":
        out(table_rows_csv(["index"] + [f"x{k}" for k in range(1, args.n + 2)],
                           [[str(i)] + vector_json(v) for i, v in enumerate(ker.vectors, 1)]))
    elif args.format == "latex":
        if not ker.vectors:
            out("\\{0\\}")
        for v in ker.vectors:
            out(vector_text(v, latex=True))
    else:
        out(f"rank: {ker.rank}")
        if not ker.vectors:
            out("basis: (empty)")
        for v in ker.vectors:
            out(f"basis: {vector_text(v)}")
        if binomial is not None:
            out(f"binomial vector: {vector_text(binomial)}")
            out(f"matches binomial: {str(matches).lower()}")
            out(f"invariant polynomial: {form}")
    return EXIT_OK


def cmd_table(args, out):
    if args.max_degree < 1:
        raise UsageError("--max-degree must be >= 1")
    if args.t in (0, 1, -1):
        raise UsageError(f"--t {format_rational(args.t)} is degenerate (beta = 0)")
    out(render_table(build_table(args.max_degree, args.t), args.format))
    return EXIT_OK


def cmd_verify(args, out):
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    ts = list(args.points) if args.points else list(DEFAULT_TS)
    if args.seed is not None:
        rng = random.Random(args.seed)
        target = len(ts) + 2
        while len(ts) < target:
            t = Fraction(rng.randint(2, 40), rng.randint(1, 13))
            if t not in ts and t != 1:
                ts.append(t)
    if any(t in (0, 1, -1) for t in ts):
        raise UsageError("verification points need t != 0, +1, -1")
    points = [dna.hyperbola_point(t) for t in ts]
    results = run_all(args.max_n, points)
    ok = all(r.passed for r in results)
    if args.format == "json":
        out(dumps({
            "passed": ok,
            "max_n": args.max_n,
            "points": [format_rational(t) for t in ts],
            "suites": [vars(r) for r in results],
        }))
    else:
        for r in results:
            tag = _color("PASS", "32") if r.passed else _color("FAIL", "31")
            out(f"{tag}  {r.name}  [{r.params}]")
        failed = [r for r in results if not r.passed]
        if failed:
            out(f"first counterexample ({failed[0].name}): {failed[0].counterexample}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bench(args, out):
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    if args.t == 0:
        raise UsageError("--t must be nonzero")
    records = bench(range(1, args.max_n + 1), args.t, repeat=args.repeat)
    if args.format == "json":
        out(json.dumps(records, indent=2))
        return EXIT_OK
    header = ["n", "bareiss_seconds", "centro_seconds", "bareiss_max_bits", "centro_max_bits", "agree"]
    rows = [
        [str(r["n"]), f"{r['bareiss_seconds']:.6f}", f"{r['centro_seconds']:.6f}",
         str(r["bareiss_max_bits"]), str(r["centro_max_bits"]), str(r["agree"]).lower()]
        for r in records
    ]
    if args.format == "csv":
        out(table_rows_csv(header, rows))
    else:
        widths = [max(len(h), *(len(r[k]) for r in rows)) for k, h in enumerate(header)]
        out("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for r in rows:
            out("  ".join(c.rjust(w) for c, w in zip(r, widths)))
    return EXIT_OK if all(r["agree"] for r in records) else EXIT_FAIL


def make_parser():
    parser = argparse.ArgumentParser(prog="dnamatrix", description="Exact DNA matrix toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="symbolic or evaluated DNA matrix A_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("closed_form", "fast"), default="closed_form")
    _add_point_args(p)
    _add_format(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("det", help="exact determinant of evaluated A_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strategy", choices=("bareiss", "centro", "both"), default="bareiss")
    _add_point_args(p, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("nullspace", help="exact kernel of evaluated A_n")
    p.add_argument("--n", type=int, required=True)
    _add_point_args(p, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_nullspace)

    p = sub.add_parser("table", help="determinants and null vectors for degrees 1..max")
    p.add_argument("--max-degree", type=int, default=10)
    p.add_argument("--t", type=_rational_arg, default=Fraction(2))
    _add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run every property suite")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, help="add two random hyperbola points drawn with this seed")
    p.add_argument("--points", type=_rational_arg, nargs="+", help="t values of the test points")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time det_bareiss against det_centro")
    p.add_argument("--max-n", type=int, default=15)
    p.add_argument("--t", type=_rational_arg, default=Fraction(2))
    p.add_argument("--repeat", type=int, default=3)
    _add_format(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=print):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
