"""Command line surface.

Subcommands: rank, table, enumerate, witness, validate.  Exit codes:
0 success, 1 domain error (validation failures, empty locus, degenerate
witness), 2 usage or parse error, 3 resource cap exceeded.

Machine output (--format json) is one self-describing JSON record per
line; tables can also be emitted as CSV with the survey columns plus
precision and stability.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from math import gcd

from . import monodromy
from .cache import ResultsCache, cache_from_options, cache_key
from .cover import default_precision
from .errors import (
    EmptyLocus,
    GaussRankError,
    MonodromyParseError,
    ResourceCapExceeded,
)
from .gaussmaps import (
    EscalatingPrecision,
    FixedPrecision,
    RankReport,
    compute_witness,
    stable_rank,
)

DEFAULT_GENUS_CAP = 30
DEFAULT_PRECISION_CAP = 600


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gaussrank",
        description="Exact rank bounds for Gaussian maps of cyclic covers of the line.",
    )
    parser.add_argument(
        "--max-genus",
        type=int,
        default=DEFAULT_GENUS_CAP,
        help="resource guard on the genus (default %(default)s)",
    )
    parser.add_argument(
        "--max-prec",
        type=int,
        default=DEFAULT_PRECISION_CAP,
        help="resource guard on the working precision (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="full pipeline report for one datum")
    p_rank.add_argument("monodromy", help="e.g. \"m=4;a=1^2,3^2,2^2\" or \"[1^4:2^2]\"")
    p_rank.add_argument("--prec", type=int, default=None, help="fixed working precision")
    p_rank.add_argument(
        "--escalate",
        metavar="START:FACTOR:MAX",
        default=None,
        help="recompute at growing precision until the rank stabilizes",
    )
    p_rank.add_argument("--branch-points", default=None, help="comma-separated rationals")
    p_rank.add_argument("--format", choices=("text", "json"), default="text")
    p_rank.add_argument("--cache", default=None, help="path of the results cache")
    p_rank.set_defaults(func=cmd_rank)

    p_table = sub.add_parser("table", help="survey rows over a genus range")
    p_table.add_argument("range", help="genus range like 5..8 or a single genus")
    p_table.add_argument("--gprime", type=int, default=1, help="quotient genus (default 1)")
    p_table.add_argument("--prec", type=int, default=None)
    p_table.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_table.add_argument("--cache", default=None)
    p_table.set_defaults(func=cmd_table)

    p_enum = sub.add_parser("enumerate", help="Hurwitz classes for (genus, g')")
    p_enum.add_argument("genus", type=int)
    p_enum.add_argument("gprime", type=int)
    p_enum.add_argument("--format", choices=("text", "json"), default="text")
    p_enum.set_defaults(func=cmd_enumerate)

    p_wit = sub.add_parser("witness", help="invariant quadric with nonzero mu2")
    p_wit.add_argument("genus", type=int)
    p_wit.add_argument("gprime", type=int)
    p_wit.add_argument("--prec", type=int, default=None)
    p_wit.add_argument("--class-index", type=int, default=0, help="component to use")
    p_wit.add_argument("--branch-points", default=None)
    p_wit.add_argument("--format", choices=("text", "json"), default="text")
    p_wit.set_defaults(func=cmd_witness)

    p_val = sub.add_parser("validate", help="check a monodromy string")
    p_val.add_argument("monodromy")
    p_val.add_argument("--format", choices=("text", "json"), default="text")
    p_val.set_defaults(func=cmd_validate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MonodromyParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except ResourceCapExceeded as exc:
        print("resource cap: %s" % exc, file=sys.stderr)
        return 3
    except GaussRankError as exc:
        print("error [%s]: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1


def _check_genus_cap(g, args):
    if g > args.max_genus:
        raise ResourceCapExceeded(
            "genus %d exceeds the cap %d (raise with --max-genus)" % (g, args.max_genus)
        )


def _check_precision_cap(prec, args):
    if prec > args.max_prec:
        raise ResourceCapExceeded(
            "precision %d exceeds the cap %d (raise with --max-prec)" % (prec, args.max_prec)
        )


def _policy_from_args(args, g):
    if args.escalate is not None:
        if args.prec is not None:
            raise MonodromyParseError("--prec and --escalate are mutually exclusive")
        parts = args.escalate.split(":")
        if len(parts) != 3:
            raise MonodromyParseError("--escalate expects START:FACTOR:MAX")
        try:
            start, factor, maximum = (int(p) for p in parts)
        except ValueError:
            raise MonodromyParseError("--escalate expects integers") from None
        _check_precision_cap(maximum, args)
        return EscalatingPrecision(start, factor, maximum)
    prec = args.prec if args.prec is not None else default_precision(g)
    _check_precision_cap(prec, args)
    return FixedPrecision(prec)


def _emit(record):
    print(json.dumps(record, sort_keys=True))


def _run_pipeline(datum, points, policy, cache):
    """stable_rank with a cache consult keyed on the request."""
    key = cache_key(datum, points, policy.describe())
    if cache is not None:
        hit = cache.lookup(key)
        if hit is not None:
            return RankReport.from_dict(hit)
    report = stable_rank(datum, points, policy)
    if cache is not None:
        cache.store(key, report.to_dict())
    return report


def _prepare_datum(text):
    """Parse, validate and normalize; returns (datum, swap_index)."""
    datum = monodromy.parse_monodromy(text)
    violations = monodromy.validate(datum)
    if violations:
        raise GaussRankError(
            "invalid monodromy datum: " + "; ".join(violations)
        )
    swap = next(
        (i for i, ai in enumerate(datum.a) if gcd(ai, datum.m) == 1), None
    )
    return monodromy.normalize(datum), swap


def cmd_rank(args):
    datum, swap = _prepare_datum(args.monodromy)
    g = monodromy.genus(datum)
    _check_genus_cap(g, args)
    if args.branch_points is not None:
        points = list(monodromy.parse_branch_points(args.branch_points))
        if swap and swap < len(points):
            points[0], points[swap] = points[swap], points[0]
        points = tuple(points)
    else:
        points = monodromy.default_branch_points(datum.r)
    policy = _policy_from_args(args, g)
    cache = cache_from_options(args.cache)
    report = _run_pipeline(datum, points, policy, cache)
    if args.format == "json":
        record = {"kind": "rank_report", "genus": g}
        record.update(report.to_dict())
        _emit(record)
    else:
        exact = report.mu2_rank_lower_bound == report.i2_dim
        print("datum:               %s  %s" % (datum.to_string(), datum.label()))
        print("genus:               %d" % g)
        print("branch points:       %s" % ", ".join(str(t) for t in report.branch_points))
        print("precision:           %d" % report.precision_used)
        print("multiplication rank: %d" % report.mult_rank)
        print("dim I2:              %d" % report.i2_dim)
        marker = "= (saturates I2, map injective)" if exact else ">="
        print("mu2 rank:            %s %d" % (marker, report.mu2_rank_lower_bound))
        print("stable:              %s" % ("yes" if report.stable else "no"))
        print("elapsed:             %.2fs" % report.elapsed)
    return 0


def _parse_genus_range(text):
    if ".." in text:
        lo, _, hi = text.partition("..")
    else:
        lo = hi = text
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise MonodromyParseError("bad genus range %r" % text) from None
    if lo > hi:
        raise MonodromyParseError("empty genus range %r" % text)
    return lo, hi


def table_rows(lo, hi, gprime, precision, cache=None):
    """Survey rows for the genus range; failures are recorded per row."""
    rows = []
    for g in range(lo, hi + 1):
        row = {"genus": g}
        try:
            datum = monodromy.survey_monodromy(g, gprime)
            points = monodromy.default_branch_points(datum.r)
            prec = precision if precision is not None else default_precision(g)
            policy = FixedPrecision(prec)
            report = _run_pipeline(datum, points, policy, cache)
            max_rank = report.max_possible_rank(bielliptic=(gprime == 1))
            row.update(
                {
                    "monodromy": datum.label(),
                    "mu2_rank": report.mu2_rank_lower_bound,
                    "exact": report.mu2_rank_lower_bound == max_rank,
                    "max_rank": max_rank,
                    "precision": report.precision_used,
                    "stable": report.stable,
                }
            )
        except GaussRankError as exc:
            row["error"] = "%s: %s" % (type(exc).__name__, exc)
        rows.append(row)
    return rows


_TABLE_FIELDS = ("genus", "monodromy", "mu2_rank", "exact", "max_rank", "precision", "stable")


def cmd_table(args):
    lo, hi = _parse_genus_range(args.range)
    _check_genus_cap(hi, args)
    if args.prec is not None:
        _check_precision_cap(args.prec, args)
    else:
        _check_precision_cap(default_precision(hi), args)
    if args.gprime < 1:
        raise GaussRankError("--gprime must be at least 1")
    cache = cache_from_options(args.cache)
    rows = table_rows(lo, hi, args.gprime, args.prec, cache)
    if args.format == "json":
        for row in rows:
            record = {"kind": "table_row"}
            record.update(row)
            _emit(record)
    elif args.format == "csv":
        writer = csv.DictWriter(
            sys.stdout, fieldnames=_TABLE_FIELDS + ("error",), extrasaction="ignore"
        )
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    else:
        print("genus  monodromy           mu2 rank   max rank  precision  stable")
        for row in rows:
            if "error" in row:
                print("%5d  %s" % (row["genus"], row["error"]))
                continue
            marker = "  " if row["exact"] else ">="
            print(
                "%5d  %-18s  %s %-6d  %8d  %9d  %s"
                % (
                    row["genus"],
                    row["monodromy"],
                    marker,
                    row["mu2_rank"],
                    row["max_rank"],
                    row["precision"],
                    "yes" if row["stable"] else "no",
                )
            )
    return 1 if any("error" in row for row in rows) else 0


def cmd_enumerate(args):
    _check_genus_cap(args.genus, args)
    classes = monodromy.enumerate_galois(args.genus, args.gprime)
    for cls in classes:
        dims = monodromy.eigenspace_dimensions(cls.representative)
        if args.format == "json":
            _emit(
                {
                    "kind": "galois_class",
                    "genus": cls.g,
                    "gprime": cls.gprime,
                    "s1": cls.s1,
                    "s3": cls.s3,
                    "r2": cls.r2,
                    "monodromy": cls.label(),
                    "datum": cls.representative.to_string(),
                    "eigenspace_dims": list(dims),
                }
            )
        else:
            print(
                "%s   s1=%d s3=%d r2=%d   dims=%s"
                % (cls.label(), cls.s1, cls.s3, cls.r2, list(dims))
            )
    return 0


def cmd_witness(args):
    _check_genus_cap(args.genus, args)
    classes = monodromy.enumerate_galois(args.genus, args.gprime)
    if not 0 <= args.class_index < len(classes):
        raise GaussRankError(
            "class index %d out of range (%d components)" % (args.class_index, len(classes))
        )
    datum = classes[args.class_index].representative
    prec = args.prec if args.prec is not None else default_precision(args.genus)
    _check_precision_cap(prec, args)
    points = (
        monodromy.parse_branch_points(args.branch_points)
        if args.branch_points is not None
        else None
    )
    report = compute_witness(datum, args.gprime, points, prec, max_precision=args.max_prec)
    if args.format == "json":
        record = {"kind": "witness", "genus": args.genus}
        record.update(report.to_dict())
        _emit(record)
    else:
        invariance = (
            "full deck group" if report.character == 0 else "involution subgroup"
        )
        print("component:            %s  (genus %d over genus %d)" % (datum.label(), args.genus, args.gprime))
        print("construction:         %s" % report.construction)
        print("quadric:              %s" % report.quadric_label())
        print("character:            %d mod %d  (invariant under %s)" % (report.character, datum.m, invariance))
        print("kernel membership:    verified exactly")
        print("mu2 vanishing order:  %d" % report.mu2_vanishing_order)
        print("mu2 leading coeff:    %s" % report.mu2_leading_coefficient)
        print("precision:            %d" % report.precision)
    return 0


def cmd_validate(args):
    datum = monodromy.parse_monodromy(args.monodromy)
    violations = monodromy.validate(datum)
    if args.format == "json":
        record = {
            "kind": "validation",
            "datum": datum.to_string(),
            "valid": not violations,
            "violations": violations,
        }
        try:
            record["genus"] = monodromy.genus(datum)
        except GaussRankError:
            pass
        _emit(record)
    else:
        if violations:
            print("invalid: %s" % datum.to_string())
            for v in violations:
                print("  - %s" % v)
        else:
            print("ok: %s  genus %d" % (datum.to_string(), monodromy.genus(datum)))
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
