"""Command-line front end.

Exit status is 0 on success, 2 on domain errors (bad genus or level,
vanishing TV, too few points for a fit) and 3 on unparseable input.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import logging
import sys

from . import fixtures
from .asymptotics import QVSeries, fit_affine, fit_fixed_volume, fit_free, gnuplot_script
from .coloring import enumerate_fast
from .errors import DomainError, ParseError
from .hyperbolic import frigerio_angles, manifold_volume, tetrahedron_volume
from .numerics import DEFAULT_BITS, MIN_BITS, PrecisionContext
from .tables import FIT_HEADER, SWEEP_HEADER, VOLUME_HEADER, fmt, read_gb_csv, read_qv_csv, write_csv
from .turaev_viro import ARRANGEMENTS, tv_invariant, tv_transfer_result

DEFAULT_VOLUME_GENERA = "2-10,100,1000"

log = logging.getLogger("frigerio_tv")


def int_list(text: str) -> list[int]:
    """Parse "2,3,7-9" into [2, 3, 7, 8, 9]; the empty string gives []."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _int_list_arg(text):
    try:
        return int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers like '2,3,5-7', got {text!r}") from None


def _precision(text):
    bits = int(text)
    if bits < MIN_BITS:
        raise argparse.ArgumentTypeError(f"precision must be at least {MIN_BITS} bits")
    return bits


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_volume(args):
    ctx = PrecisionContext(args.prec)
    with _output(args.out) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(VOLUME_HEADER)
        for g in args.g:
            tet = tetrahedron_volume(frigerio_angles(g, ctx).tetrahedron(), ctx)
            writer.writerow([g, fmt(tet, args.digits), fmt((2 * g + 2) * tet, args.digits)])
    return 0


def _report_cache(args, result):
    if args.cache_stats and result.cache_stats:
        stats = result.cache_stats
        print(
            f"# 6j cache g={result.g} r={result.r}: hits={stats['hits']} misses={stats['misses']} size={stats['size']}",
            file=sys.stderr,
        )


def _tv(args, g, r):
    if args.method == "transfer":
        return tv_transfer_result(g, r, args.s, PrecisionContext(args.prec))
    return tv_invariant(
        g,
        r,
        args.s,
        PrecisionContext(args.prec),
        threads=args.threads,
        use_cache=not args.no_cache,
        arrangement=args.arrangement,
    )


def cmd_tv(args):
    result = _tv(args, args.g, args.r)
    with _output(args.out) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SWEEP_HEADER)
        writer.writerow(result.csv_row(args.digits))
    _report_cache(args, result)
    if args.verbose:
        print(f"# cancellation max|term|/|tv| = {fmt(result.cancellation, 6)}", file=sys.stderr)
    return 0


def cmd_qv_sweep(args):
    if args.r_min < 3:
        raise DomainError(f"r_min must be >= 3, got {args.r_min}")
    levels = [r for r in range(args.r_min, args.r_max + 1) if args.all_r or r % 2 == 1]
    with _output(args.out) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SWEEP_HEADER)
        out.flush()
        for g in args.g:
            for r in levels:
                result = _tv(args, g, r)
                writer.writerow(result.csv_row(args.digits))
                out.flush()
                _report_cache(args, result)
                if args.verbose:
                    print(f"# g={g} r={r} cancellation={fmt(result.cancellation, 6)}", file=sys.stderr)
    return 0


def cmd_colorings(args):
    g = args.g
    with _output(args.out) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["a", "b"] + [f"c_{i}" for i in range(g + 1)])
        for col in enumerate_fast(g, args.r):
            writer.writerow(col.as_row())
    return 0


def _load_series(args) -> list[QVSeries]:
    if args.input is not None:
        data = read_qv_csv(_read_input(args.input))
        genera = args.g or sorted(data)
        series = []
        for g in genera:
            if g not in data:
                raise DomainError(f"no rows for g={g} in input")
            points = [(r, v) for r, v in data[g] if args.r_max is None or r <= args.r_max]
            series.append(QVSeries(g, points))
        return series
    genera = args.g or [row.g for row in fixtures.FREE_FIT_TABLE]
    series = []
    for g in genera:
        r_max = args.r_max if args.r_max is not None else fixtures.fit_r_max(g)
        series.append(QVSeries(g, fixtures.qv_series(g, r_max, args.include_anomalous)))
    return series


def _volume_for(g, args):
    if args.vol_source == "fixture":
        return float(fixtures.volume_row(g).vol_manifold)
    return float(manifold_volume(g, PrecisionContext(args.prec)))


def cmd_fit(args):
    series = _load_series(args)
    results = []
    volumes = {}
    for s in series:
        volumes[s.g] = _volume_for(s.g, args)
        if args.model == "free":
            results.append(fit_free(s))
        else:
            results.append(fit_fixed_volume(s, volumes[s.g]))
    with _output(args.out) as out:
        if args.format == "jsonl":
            for res in results:
                out.write(json.dumps(res.as_dict()) + "\n")
        else:
            write_csv((res.as_row(args.digits) for res in results), FIT_HEADER, out)
    if args.plot:
        with open(args.plot, "w") as fh:
            fh.write(gnuplot_script(list(zip(series, results)), volumes))
    return 0


def cmd_bfit(args):
    if args.input is not None:
        pairs = read_gb_csv(_read_input(args.input))
    else:
        pairs = [(g, float(b)) for g, b in fixtures.B_COEFFICIENTS]
    if args.g:
        pairs = [(g, b) for g, b in pairs if g in args.g]
    res = fit_affine(pairs)
    with _output(args.out) as out:
        # intercept in column a, slope in column b
        write_csv([res.as_row(args.digits)], FIT_HEADER, out)
    if args.verbose:
        print(
            f"# b = {res.a:.4f} {res.b:+.4f} g, R^2 = {res.r_squared:.4f}",
            file=sys.stderr,
        )
    return 0


def cmd_fixtures(args):
    with _output(args.out) as out:
        writer = csv.writer(out, lineterminator="\n")
        if args.table == "volume":
            writer.writerow(VOLUME_HEADER)
            for row in fixtures.VOLUME_TABLE:
                writer.writerow([row.g, row.vol_tet, row.vol_manifold])
        elif args.table == "qv":
            writer.writerow(["g", "r", "qv_re", "anomalous"])
            for row in fixtures.QV_TABLE:
                writer.writerow([row.g, row.r, row.qv_re, str(row.anomalous).lower()])
        elif args.table == "free-fit":
            writer.writerow(["g", "r_max", "a", "b", "c"])
            for row in fixtures.FREE_FIT_TABLE:
                writer.writerow([row.g, row.r_max, row.a, row.b, row.c])
        elif args.table == "fixed-fit":
            writer.writerow(["g", "r_max", "b", "c"])
            for row in fixtures.FIXED_FIT_TABLE:
                writer.writerow([row.g, row.r_max, row.b, row.c])
        else:
            writer.writerow(["g", "b"])
            for g, b in fixtures.B_COEFFICIENTS:
                writer.writerow([g, b])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=_precision, default=DEFAULT_BITS, help="mantissa bits (default %(default)s)")
    common.add_argument("--threads", type=int, default=1, help="worker processes; 1 is the serial reference")
    common.add_argument("--out", default=None, help="write CSV here instead of standard output")
    common.add_argument("--digits", type=int, default=20, help="significant digits in output (default %(default)s)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="frigerio-tv",
        description="Turaev-Viro invariants and hyperbolic volumes of Frigerio's manifolds M_g.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("volume", parents=[common], help="Vol(T_g) and Vol(M_g) as CSV")
    p.add_argument("--g", type=_int_list_arg, default=int_list(DEFAULT_VOLUME_GENERA), help="genera, e.g. 2-10,100")
    p.set_defaults(func=cmd_volume)

    def sum_options(p):
        p.add_argument("--s", type=int, default=2)
        p.add_argument("--no-cache", action="store_true", help="evaluate every 6j symbol afresh")
        p.add_argument("--cache-stats", action="store_true", help="print 6j cache hits/misses/size to stderr")
        p.add_argument("--arrangement", choices=ARRANGEMENTS, default="canonical")
        p.add_argument(
            "--method",
            choices=("enumerate", "transfer"),
            default="enumerate",
            help="sum over colourings (reference) or cycle transfer matrices (fast for large g, r)",
        )

    p = sub.add_parser("tv", parents=[common], help="one TV/QV evaluation")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    sum_options(p)
    p.set_defaults(func=cmd_tv)

    p = sub.add_parser("qv-sweep", parents=[common], help="TV/QV over a range of levels, one row per r")
    p.add_argument("--g", type=_int_list_arg, required=True)
    p.add_argument("--r-min", type=int, default=5)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--all-r", action="store_true", help="include even r (default: odd r only)")
    sum_options(p)
    p.set_defaults(func=cmd_qv_sweep)

    p = sub.add_parser("colorings", parents=[common], help="admissible colourings as CSV")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("fit", parents=[common], help="fit the asymptotic expansion to QV data")
    p.add_argument("--input", default=None, help="sweep CSV (or '-'); default: the published QV table")
    p.add_argument("--g", type=_int_list_arg, default=None)
    p.add_argument("--r-max", type=int, default=None, help="last level used (default: published fit range)")
    p.add_argument("--include-anomalous", action="store_true")
    p.add_argument("--model", choices=("free", "fixed-volume"), default="free")
    p.add_argument("--vol-source", choices=("computed", "fixture"), default="computed")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--plot", default=None, help="write a gnuplot script here")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("bfit", parents=[common], help="affine fit of b against g")
    p.add_argument("--input", default=None, help="fit CSV with g and b columns; default: published b values")
    p.add_argument("--g", type=_int_list_arg, default=None)
    p.set_defaults(func=cmd_bfit)

    p = sub.add_parser("fixtures", parents=[common], help="dump an embedded reference table")
    p.add_argument("table", choices=("volume", "qv", "free-fit", "fixed-fit", "b"))
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
