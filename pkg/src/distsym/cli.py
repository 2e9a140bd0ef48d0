"""Command-line harness.

Subcommands: gen, distset, isosceles, symmetry, check, sweep, verify.
All output is exact (integers and p/q fractions), so identical invocations
produce byte-identical files.  Exit codes: 0 success, 1 a constant-free
claim was violated or verification failed, 2 bad input or an exceeded cap.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
import time
from pathlib import Path

from .bisectors import bisector_weight_map, extract_symmetric_subset
from .bounds import (
    CHAIN_CAP_DEFAULT,
    VERDICT_VIOLATED,
    abc_lower_report,
    guth_katz_ratio,
    hanson_inclusion_check,
    plunnecke_check,
    product_identity_report,
    thm1_report,
    thm2_report,
)
from .corpus import verify_corpus
from .errors import (
    CapExceededError,
    DegeneratePairError,
    EmptyInputError,
    MismatchedInputsError,
    ParseError,
    TooFewPointsError,
)
from .families import FamilySpec, generate_family
from .incidence import (
    BRUTE_CAP_DEFAULT,
    isosceles_count,
    isosceles_count_brute,
    st_bound_report,
)
from .parsing import (
    format_scalar,
    parse_point_set,
    parse_scalar_set,
    parse_scalar_token,
    point_set_to_text,
    scalar_set_to_text,
)
from .planar import PlanarPointSet, squared_distance_set
from .reports import (
    BOUND_CSV_HEADER,
    INCIDENCE_CSV_HEADER,
    bound_csv_row,
    bound_json_dict,
    dump_json,
    incidence_csv_row,
    incidence_json_dict,
    jsonable,
    symmetric_subset_json_dict,
    write_csv,
)
from .scalar_sets import ScalarSet

OUT_DIR_ENV = "DISTSYM_OUT_DIR"
BISECTOR_MAP_CAP = 5000

SCALAR_CHECKS = ("hanson", "plunnecke", "abc", "thm1", "guth-katz", "product-identity")
POINT_CHECKS = ("thm2", "st")

SCALAR_FAMILIES = ("ap", "gap2", "geometric", "random-int")
POINT_FAMILIES = ("grid", "random-int", "cartesian-of")


def _resolve_out(path):
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _open_out(args):
    p = _resolve_out(getattr(args, "out", None))
    if p is None:
        return sys.stdout, False
    p.parent.mkdir(parents=True, exist_ok=True)
    return open(p, "w", encoding="utf-8", newline=""), True


def _emit(args, text: str) -> None:
    stream, close = _open_out(args)
    try:
        stream.write(text)
    finally:
        if close:
            stream.close()


def _read_scalars(path) -> ScalarSet:
    return parse_scalar_set(Path(path).read_text(encoding="utf-8"))


def _read_points(path) -> PlanarPointSet:
    return parse_point_set(Path(path).read_text(encoding="utf-8"))


def _scalar_flag(value: str):
    return parse_scalar_token(value)


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _cap(args, default: int) -> int:
    cap = getattr(args, "max_size", None)
    if cap is None:
        return default
    if cap > default:
        _warn(f"cap raised from {default} to {cap}; runtime and memory grow quickly")
    return cap


def _family_spec(kind: str, args, size=None) -> FamilySpec:
    n = size if size is not None else args.n
    if kind == "ap":
        return FamilySpec(kind="ap", n=n, start=args.start, step=args.step)
    if kind == "gap2":
        return FamilySpec(kind="gap2", n=n, n2=args.n2, d1=args.d1, d2=args.d2)
    if kind == "geometric":
        start = args.start if args.start != 0 else 1
        return FamilySpec(kind="geometric", n=n, start=start, ratio=args.ratio)
    if kind == "random-int":
        seed = args.seed if size is None else args.seed + size
        return FamilySpec(
            kind="random_int", n=n, coord_range=args.range, seed=seed, dim=args.dim
        )
    if kind == "grid":
        return FamilySpec(kind="grid", n=n)
    if kind == "cartesian-of":
        base_kind = args.of or "ap"
        base = _family_spec(base_kind, args, size=n)
        if base.dim != 1 or base.kind == "grid":
            raise ValueError("cartesian-of needs a scalar base family")
        return FamilySpec(kind="cartesian_of", base=base)
    raise ValueError(f"unknown family {kind!r}")


# ---------------------------------------------------------------------------
# subcommands

def cmd_gen(args) -> int:
    spec = _family_spec(args.kind, args)
    fam = generate_family(spec)
    if isinstance(fam, ScalarSet):
        _emit(args, scalar_set_to_text(fam))
    else:
        _emit(args, point_set_to_text(fam))
    return 0


def cmd_distset(args) -> int:
    p = _read_points(args.input)
    ds = squared_distance_set(p, include_zero=args.include_zero_distance)
    if args.format == "json":
        buf = io.StringIO()
        dump_json(
            buf,
            {
                "count": len(ds),
                "includes_zero": ds.includes_zero,
                "squared_distances": jsonable(ds.squared),
            },
        )
        _emit(args, buf.getvalue())
    else:
        buf = io.StringIO()
        write_csv(buf, ("squared_distance",), ((format_scalar(x),) for x in ds.squared))
        _emit(args, buf.getvalue())
    return 0


def cmd_isosceles(args) -> int:
    p = _read_points(args.input)
    if args.brute:
        t = isosceles_count_brute(p, cap=_cap(args, BRUTE_CAP_DEFAULT))
    else:
        t = isosceles_count(p)
    if args.format == "json":
        buf = io.StringIO()
        dump_json(buf, {"N": len(p), "T": t})
        _emit(args, buf.getvalue())
    else:
        buf = io.StringIO()
        write_csv(buf, ("N", "T"), [(str(len(p)), str(t))])
        _emit(args, buf.getvalue())
    return 0


def cmd_symmetry(args) -> int:
    p = _read_points(args.input)
    _check_point_cap(args, len(p))
    sub = extract_symmetric_subset(p, include_fixed_points=args.include_fixed_points)
    if args.format == "json":
        buf = io.StringIO()
        dump_json(buf, symmetric_subset_json_dict(sub))
        _emit(args, buf.getvalue())
    else:
        buf = io.StringIO()
        write_csv(
            buf,
            ("axis", "weight", "subset_size", "mirror_size"),
            [
                (
                    f"{sub.axis.a} {sub.axis.b} {sub.axis.c}",
                    str(sub.weight),
                    str(len(sub.subset)),
                    str(len(sub.mirror)),
                )
            ],
        )
        _emit(args, buf.getvalue())
    return 0


def _check_point_cap(args, n: int) -> None:
    cap = _cap(args, BISECTOR_MAP_CAP)
    if n > cap:
        raise CapExceededError(
            f"bisector maps capped at {cap} points; pass --max-size to override"
        )


def run_check(name: str, args, scalars=None, points=None):
    """One named check on parsed config args.  Returns (kind, report) where
    kind is 'bound' or 'incidence'."""
    if name in SCALAR_CHECKS:
        a = scalars if scalars is not None else _read_scalars(args.input)
    else:
        p = points if points is not None else _read_points(args.input)
    if name == "hanson":
        return "bound", hanson_inclusion_check(a)
    if name == "plunnecke":
        return "bound", plunnecke_check(a, args.m, args.n_fold)
    if name == "abc":
        b = _read_scalars(args.input_b) if args.input_b else a
        c = _read_scalars(args.input_c) if args.input_c else a
        return "bound", abc_lower_report(a, b, c)
    if name == "thm1":
        return "bound", thm1_report(a, max_size=_cap(args, CHAIN_CAP_DEFAULT))
    if name == "guth-katz":
        return "bound", guth_katz_ratio(a)
    if name == "product-identity":
        return "bound", product_identity_report(a)
    if name == "thm2":
        _check_point_cap(args, len(p))
        report, _ = thm2_report(
            p,
            include_zero=args.include_zero_distance,
            include_fixed_points=args.include_fixed_points,
        )
        return "bound", report
    if name == "st":
        _check_point_cap(args, len(p))
        return "incidence", st_bound_report(p, bisector_weight_map(p))
    raise ValueError(f"unknown check {name!r}")


def cmd_check(args) -> int:
    kind, report = run_check(args.name, args)
    buf = io.StringIO()
    if kind == "bound":
        if args.format == "json":
            dump_json(buf, bound_json_dict(report))
        else:
            write_csv(buf, BOUND_CSV_HEADER, [bound_csv_row(report)])
        _emit(args, buf.getvalue())
        return 1 if report.verdict == VERDICT_VIOLATED else 0
    if args.format == "json":
        dump_json(buf, incidence_json_dict(report))
    else:
        write_csv(buf, INCIDENCE_CSV_HEADER, [incidence_csv_row(report)])
    _emit(args, buf.getvalue())
    return 0


def _parse_sizes(spec: str):
    lo, sep, hi = spec.partition(":")
    if not sep:
        raise ValueError("sizes must look like LO:HI")
    lo, hi = int(lo), int(hi)
    if lo < 1 or hi < lo:
        raise ValueError("sizes must satisfy 1 <= LO <= HI")
    return range(lo, hi + 1)


def run_sweep(args):
    """One check across a family size range.  Returns (header, csv rows,
    json rows, violated flag); capped sizes become skipped rows, not gaps."""
    name = args.check
    point_check = name in POINT_CHECKS
    if point_check and args.family not in POINT_FAMILIES:
        raise ValueError(f"check {name!r} needs a point family, not {args.family!r}")
    if not point_check and args.family not in SCALAR_FAMILIES:
        raise ValueError(f"check {name!r} needs a scalar family, not {args.family!r}")
    if point_check and args.family == "random-int" and args.dim != 2:
        args.dim = 2
    rows = []
    json_rows = []
    violated = False
    for size in _parse_sizes(args.sizes):
        spec = _family_spec(args.family, args, size=size)
        fam = generate_family(spec)
        label = f"{args.family}({size})"
        started = time.perf_counter()
        try:
            if point_check:
                kind, report = run_check(name, args, points=fam)
            else:
                kind, report = run_check(name, args, scalars=fam)
        except CapExceededError:
            elapsed = time.perf_counter() - started
            if name == "st":
                row = [label] + [""] * len(INCIDENCE_CSV_HEADER) + ["skipped"]
            else:
                row = [label, name, "", "", "", "", "", "skipped"]
            if args.timings:
                row.append(f"{elapsed:.3f}")
            rows.append(row)
            json_rows.append({"input": label, "skipped": True})
            continue
        elapsed = time.perf_counter() - started
        if kind == "bound":
            row = [label, *bound_csv_row(report)]
            violated = violated or report.verdict == VERDICT_VIOLATED
            json_rows.append({"input": label, "report": bound_json_dict(report, include_witness=False)})
        else:
            row = [label, *incidence_csv_row(report), "ok"]
            json_rows.append({"input": label, "report": incidence_json_dict(report)})
        if args.timings:
            row.append(f"{elapsed:.3f}")
        rows.append(row)
    if name == "st":
        header = ["input", *INCIDENCE_CSV_HEADER, "status"]
    else:
        header = ["input", *BOUND_CSV_HEADER]
    if args.timings:
        header.append("wall_time_s")
    return header, rows, json_rows, violated


def cmd_sweep(args) -> int:
    header, rows, json_rows, violated = run_sweep(args)
    buf = io.StringIO()
    if args.format == "json":
        dump_json(buf, json_rows)
    else:
        write_csv(buf, header, rows)
    _emit(args, buf.getvalue())
    return 1 if violated else 0


def cmd_verify(args) -> int:
    result = verify_corpus(seed=args.seed, scale=args.scale, corrupt=args.self_test_corrupt)
    for row in result.rows:
        status = "ok  " if row.ok else "FAIL"
        line = f"{status} {row.name:32s} {row.trials:4d} trials"
        if row.detail:
            line += f"  ({row.detail})"
        print(line)
    if result.passed:
        print(f"verification PASSED ({len(result.rows)} properties)")
        return 0
    print("verification FAILED")
    return 1


# ---------------------------------------------------------------------------
# parser

def _add_out_flags(sp, default_format="csv"):
    sp.add_argument("--out", help=f"output file; relative paths resolve under ${OUT_DIR_ENV} when set")
    sp.add_argument("--format", choices=("csv", "json"), default=default_format)


def _add_family_flags(sp):
    sp.add_argument("--n", type=int, default=8, help="family size")
    sp.add_argument("--start", type=_scalar_flag, default=0)
    sp.add_argument("--step", type=_scalar_flag, default=1)
    sp.add_argument("--ratio", type=_scalar_flag, default=2)
    sp.add_argument("--n2", type=int, default=2, help="gap2 second dimension")
    sp.add_argument("--d1", type=_scalar_flag, default=1)
    sp.add_argument("--d2", type=_scalar_flag, default=1)
    sp.add_argument("--range", type=int, default=100, help="random-int coordinate range")
    sp.add_argument("--dim", type=int, choices=(1, 2), default=1, help="random-int dimension")
    sp.add_argument("--of", choices=("ap", "gap2", "geometric", "random-int"),
                    help="base family for cartesian-of")
    sp.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distsym",
        description="Exact toolkit for distance sets, bisector weights and mirror symmetry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="generate an input family to a set/point file")
    sp.add_argument("--kind", required=True,
                    choices=("ap", "gap2", "geometric", "random-int", "grid", "cartesian-of"))
    _add_family_flags(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("distset", help="distinct squared distances of a point file")
    sp.add_argument("--input", required=True)
    sp.add_argument("--include-zero-distance", action=argparse.BooleanOptionalAction, default=True)
    _add_out_flags(sp)
    sp.set_defaults(func=cmd_distset)

    sp = sub.add_parser("isosceles", help="equal-distance triple count of a point file")
    sp.add_argument("--input", required=True)
    sp.add_argument("--brute", action="store_true", help="use the cubic oracle instead")
    sp.add_argument("--max-size", type=int, default=None)
    _add_out_flags(sp)
    sp.set_defaults(func=cmd_isosceles)

    sp = sub.add_parser("symmetry", help="extract the heaviest mirror-symmetric subset")
    sp.add_argument("--input", required=True)
    sp.add_argument("--include-fixed-points", action=argparse.BooleanOptionalAction, default=False)
    sp.add_argument("--max-size", type=int, default=None)
    _add_out_flags(sp, default_format="json")
    sp.set_defaults(func=cmd_symmetry)

    sp = sub.add_parser("check", help="run one named check on an input file")
    sp.add_argument("name", choices=SCALAR_CHECKS + POINT_CHECKS)
    sp.add_argument("--input", required=True)
    sp.add_argument("--input-b", help="second set for abc (defaults to --input)")
    sp.add_argument("--input-c", help="third set for abc (defaults to --input)")
    sp.add_argument("--m", type=int, default=3, help="plunnecke sum folds")
    sp.add_argument("--n", dest="n_fold", type=int, default=2, help="plunnecke difference folds")
    sp.add_argument("--include-zero-distance", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("--include-fixed-points", action=argparse.BooleanOptionalAction, default=False)
    sp.add_argument("--max-size", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    _add_out_flags(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("sweep", help="run one check across a family of growing inputs")
    sp.add_argument("--check", required=True, choices=SCALAR_CHECKS + POINT_CHECKS)
    sp.add_argument("--family", required=True,
                    choices=("ap", "gap2", "geometric", "random-int", "grid", "cartesian-of"))
    sp.add_argument("--sizes", required=True, help="inclusive size range LO:HI")
    _add_family_flags(sp)
    sp.add_argument("--m", type=int, default=3)
    sp.add_argument("--n-fold", dest="n_fold", type=int, default=2)
    sp.add_argument("--input-b", default=None)
    sp.add_argument("--input-c", default=None)
    sp.add_argument("--include-zero-distance", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("--include-fixed-points", action=argparse.BooleanOptionalAction, default=False)
    sp.add_argument("--max-size", type=int, default=None)
    sp.add_argument("--timings", action="store_true",
                    help="append wall times (off by default to keep reruns byte-identical)")
    _add_out_flags(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify", help="re-check core identities over seeded corpora")
    sp.add_argument("--seed", type=int, default=20260816)
    sp.add_argument("--scale", type=int, default=1, help="trial count multiplier")
    sp.add_argument("--self-test-corrupt", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        ParseError,
        EmptyInputError,
        TooFewPointsError,
        DegeneratePairError,
        MismatchedInputsError,
        CapExceededError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
