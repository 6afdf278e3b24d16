"""Command-line front end: ``symdiv {divergence,curves,coding,verify}``."""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys

import numpy as np

from . import bounds, coding, fdiv, oracle
from .dist import read_distribution, total_variation
from .errors import SymdivError

LOG2 = math.log(2.0)

# measures reported in nats; the rest are dimensionless
DIVERGENCE_MEASURES = (
    "tv",
    "kl",
    "kl_dual",
    "jeffreys",
    "hellinger_sq",
    "capacitory",
    "bhattacharyya_coeff",
    "bhattacharyya_dist",
    "chernoff",
    "renyi",
)
_NAT_VALUED = {"kl", "kl_dual", "jeffreys", "capacitory", "bhattacharyya_dist", "chernoff", "renyi"}


def _fmt(v):
    if v is None:
        return "absent"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    v = float(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.12g}"


def _csv_num(v):
    v = float(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return repr(v)


def _write_csv(header, rows, out_path, stdout):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_csv_num(x) for x in row])
    text = buf.getvalue()
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _divergence_values(p, q, measures, lam, pad):
    out = []
    for name in measures:
        if name == "tv":
            v = total_variation(p, q, pad)
        elif name == "kl":
            v = fdiv.kl(p, q, pad)
        elif name == "kl_dual":
            v = fdiv.kl_dual(p, q, pad)
        elif name == "jeffreys":
            v = fdiv.jeffreys(p, q, pad)
        elif name == "hellinger_sq":
            v = fdiv.hellinger_sq(p, q, pad)
        elif name == "capacitory":
            v = fdiv.capacitory(p, q, pad)
        elif name == "bhattacharyya_coeff":
            v = fdiv.bhattacharyya_coefficient(p, q, pad)
        elif name == "bhattacharyya_dist":
            v = fdiv.bhattacharyya_distance(p, q, pad)
        elif name == "chernoff":
            v = fdiv.chernoff_information(p, q, pad).value
        else:
            v = fdiv.renyi_divergence(p, q, lam, pad)
            name = f"renyi@{lam:g}"
        out.append((name, v))
    return out


def cmd_divergence(args, stdout):
    p = read_distribution(args.p_file)
    q = read_distribution(args.q_file)
    measures = args.measures.split(",") if args.measures else list(DIVERGENCE_MEASURES)
    unknown = [m for m in measures if m not in DIVERGENCE_MEASURES]
    if unknown:
        raise SymdivError(f"unknown measure(s) {unknown}; choose from {list(DIVERGENCE_MEASURES)}")
    for name, v in _divergence_values(p, q, measures, args.lam, args.pad):
        base = name.split("@")[0]
        if args.bits and base in _NAT_VALUED:
            v = v / LOG2
        stdout.write(f"{name} {_fmt(v)}\n")
    return 0


BOUND_COLUMNS = (
    "bhattacharyya_lower",
    "bhattacharyya_upper",
    "chernoff_min",
    "capacitory_min",
    "jeffreys_min",
    "hellinger_sq_min",
    "L",
)


def _bound_row(eps):
    lo, hi = bounds.bhattacharyya_bounds(eps)
    return [
        lo,
        hi,
        bounds.chernoff_min(eps),
        bounds.capacitory_min(eps),
        bounds.jeffreys_min(eps),
        bounds.symmetric_fdiv_infimum(fdiv.HELLINGER_SQ, eps),
        bounds.l_curve(eps).value,
    ]


def cmd_curves(args, stdout):
    if not (0.0 <= args.eps_min < args.eps_max < 1.0):
        raise SymdivError("need 0 <= eps_min < eps_max < 1")
    if args.steps < 2:
        raise SymdivError("--steps must be at least 2")
    grid = np.linspace(args.eps_min, args.eps_max, args.steps)
    scale = 1.0 / LOG2 if args.bits else 1.0
    rows = []
    if args.which == "figure1":
        header = ["epsilon", "C", "L"] + (["L_over_C"] if args.ratio else [])
        for e in grid.tolist():
            c = bounds.chernoff_min(e)
            l = bounds.l_curve(e).value
            row = [e, c * scale, l * scale]
            if args.ratio:
                row.append(l / c if c > 0 else math.nan)
            rows.append(row)
    else:
        header = ["epsilon", *BOUND_COLUMNS]
        for e in grid.tolist():
            vals = _bound_row(e)
            rows.append([e, vals[0], vals[1]] + [v * scale for v in vals[2:]])
    _write_csv(header, rows, args.out, stdout)
    return 0


def cmd_coding(args, stdout):
    if args.grid:
        if args.steps < 2:
            raise SymdivError("--steps must be at least 2")
        if not 0.0 <= args.delta_min < args.delta_max:
            raise SymdivError("need 0 <= delta_min < delta_max")
        rows = []
        for delta in np.linspace(args.delta_min, args.delta_max, args.steps).tolist():
            b = coding.l1_bounds_from_redundancy(delta, args.d, True)
            rows.append([delta, b.csiszar, b.kl_tight, b.jeffreys_tight])
        _write_csv(["delta", "csiszar", "kl_tight", "jeffreys_tight"], rows, args.out, stdout)
        return 0

    if args.shannon:
        code = coding.shannon_code(read_distribution(args.shannon), args.d)
    elif args.code_file:
        code = coding.read_code(args.code_file, args.dist)
    else:
        raise SymdivError("give a code file, --shannon P_FILE, or --grid")
    report = coding.analyze(code)
    scale = 1.0 / LOG2 if args.bits else 1.0
    stdout.write(f"d {code.d}\n")
    stdout.write("lengths " + " ".join(str(l) for l in code.lengths) + "\n")
    stdout.write("q_induced " + " ".join(_fmt(x) for x in report.q_induced) + "\n")
    for name, v in report.rows():
        if name.endswith("_nats") and args.bits:
            name, v = name[:-5] + "_bits", v * scale
        stdout.write(f"{name} {_fmt(v)}\n")
    return 0


def cmd_verify(args, stdout):
    support = args.support
    if support is None:
        support = 3 if args.measure == "bhattacharyya_min" else 2
    report = oracle.sweep_pairs(support, args.epsilon, args.steps, args.measure)
    stdout.write(report.summary() + "\n")
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symdiv",
        description="Symmetric divergences, tight bounds at fixed total variation, and source-code audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divergence", help="divergence measures between two distribution files")
    p.add_argument("p_file")
    p.add_argument("q_file")
    p.add_argument("--measures", help=f"comma-separated subset of {','.join(DIVERGENCE_MEASURES)}")
    p.add_argument("--lambda", dest="lam", type=float, default=0.5, help="Renyi order in (0, 1)")
    p.add_argument("--bits", action="store_true", help="report divergences in bits instead of nats")
    p.add_argument("--pad", action="store_true", help="zero-pad the shorter distribution")
    p.set_defaults(func=cmd_divergence)

    p = sub.add_parser("curves", help="CSV of the bounds as functions of total variation")
    p.add_argument("which", choices=("figure1", "bounds"))
    p.add_argument("--eps-min", type=float, default=0.0)
    p.add_argument("--eps-max", type=float, default=0.99)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--ratio", action="store_true", help="figure1: add an L_over_C column")
    p.add_argument("--bits", action="store_true")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("coding", help="audit a UD code or emit the L1-bound grid")
    p.add_argument("code_file", nargs="?")
    p.add_argument("--dist", help="distribution file when the code file has no probabilities")
    p.add_argument("--shannon", metavar="P_FILE", help="build the Shannon code for this distribution")
    p.add_argument("--d", type=int, default=10, help="code alphabet size (default 10)")
    p.add_argument("--grid", action="store_true", help="emit delta,csiszar,kl_tight,jeffreys_tight CSV")
    p.add_argument("--delta-min", type=float, default=0.0)
    p.add_argument("--delta-max", type=float, default=0.1)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--bits", action="store_true")
    p.add_argument("--out", help="output path for --grid (default stdout)")
    p.set_defaults(func=cmd_coding)

    p = sub.add_parser("verify", help="brute-force oracle check of one bound")
    p.add_argument("measure", choices=sorted(oracle.MEASURES))
    p.add_argument("epsilon", type=float)
    p.add_argument(
        "--support", type=int, choices=(2, 3),
        help="support size (default 3 for bhattacharyya_min, else 2)",
    )
    p.add_argument("--steps", type=int, default=None, help="grid steps (default 200 / 40 for support 2 / 3)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, stdout)
    except (SymdivError, OSError) as exc:
        stderr.write(f"symdiv {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
