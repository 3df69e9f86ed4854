"""Command-line front end.

Exit codes: 0 pass, 1 claim failure or absence, 2 usage error, 3 budget
exceeded.  The default enumeration budget is 28 (log2 of codeword count),
overridable by the Z4RM_BUDGET environment variable and the --budget flag.
"""

from __future__ import annotations

import argparse
import os
import sys

from .analysis import (
    image_is_linear,
    image_is_linear_bruteforce,
    lee_weight_distribution,
    min_lee_weight_witness,
    nonequivalence_report,
    search_nonlinear_base,
    verify_theorem1,
)
from .codes import CodeParams, Z4Code, lrm, rm_binary
from .errors import CapacityError, CodeFileError, DimensionError, OverrideError, ZeroCodeError
from .fileformat import parse_code, render_code
from .linalg import enumerate_codewords
from .reports import nonequivalence_line, report_lines, verify_all_line
from .z4core import BitWord, Z4Word, gray, gray_inverse

ENV_BUDGET = "Z4RM_BUDGET"


def _default_budget() -> int:
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return 28
    try:
        return int(raw)
    except ValueError:
        raise CodeFileError(f"{ENV_BUDGET} must be an integer, got {raw!r}")


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="z4rm",
        description="Quaternary linear codes with Reed-Muller parameters: "
        "build, map through the Gray isometry, and verify.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def order_args(sp):
        sp.add_argument("r", type=int, help="order")
        sp.add_argument("m", type=int, help="level (code length 2^(m-1))")

    def budget_arg(sp):
        sp.add_argument("--budget", type=int, default=None,
                        help="log2 of the largest enumerable codeword count")

    def workers_arg(sp):
        sp.add_argument("--workers", type=int, default=1,
                        help="parallel sweep workers (result is identical for any count)")

    sp = sub.add_parser("build", help="construct LRM(r,m) and write its code file")
    order_args(sp)
    sp.add_argument("--override", action="append", default=[], metavar="NODE=FILE",
                    help="replace recursion node r,m by the code in FILE")
    sp.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    budget_arg(sp)

    sp = sub.add_parser("verify", help="check LRM(r,m) against its claimed parameters")
    order_args(sp)
    budget_arg(sp)
    workers_arg(sp)
    sp.add_argument("--fast", action="store_true",
                    help="stop the distance sweep once the claimed bound is reached")
    sp.add_argument("--override", action="append", default=[], metavar="NODE=FILE")

    sp = sub.add_parser("verify-all", help="verify every order with m <= M")
    sp.add_argument("M", type=int)
    budget_arg(sp)
    workers_arg(sp)

    for name, help_text in (
        ("gray", "map a code file or word list through the Gray isometry"),
        ("ungray", "map binary words back through the inverse Gray map"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file")

    sp = sub.add_parser("mindist", help="minimum Lee distance by full enumeration")
    sp.add_argument("file")
    budget_arg(sp)
    workers_arg(sp)

    sp = sub.add_parser("wdist", help="Lee weight distribution by full enumeration")
    sp.add_argument("file")
    budget_arg(sp)
    workers_arg(sp)

    sp = sub.add_parser("member", help="test whether WORD lies in the code")
    sp.add_argument("file")
    sp.add_argument("word")

    sp = sub.add_parser("image-linear", help="is the Gray image closed under XOR?")
    sp.add_argument("file")
    sp.add_argument("--brute", action="store_true",
                    help="use the exhaustive pairwise oracle instead of the generator test")
    budget_arg(sp)

    sp = sub.add_parser("enumerate", help="list every codeword in the frozen order")
    sp.add_argument("file")
    budget_arg(sp)

    sp = sub.add_parser("compare-qrm", help="size comparison against QRM for all m <= M")
    sp.add_argument("M", type=int)

    sp = sub.add_parser("rm", help="emit binary Reed-Muller RM(r,m) generator rows")
    order_args(sp)

    sp = sub.add_parser("search-nonlinear",
                        help="search for codes with the given parameters and nonlinear image")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--limit", type=int, default=8, help="largest searchable length")

    return p


def _parse_overrides(pairs, budget):
    overrides = {}
    for item in pairs:
        node, eq, path = item.partition("=")
        if not eq:
            raise _UsageError(f"override {item!r} is not of the form r,m=FILE")
        parts = node.split(",")
        if len(parts) != 2 or not all(s.lstrip("-").isdigit() for s in parts):
            raise _UsageError(f"override node {node!r} is not of the form r,m")
        overrides[(int(parts[0]), int(parts[1]))] = _load_code(path)
    return overrides


def _load_code(path) -> Z4Code:
    try:
        with open(path, "r", encoding="ascii", newline="") as f:
            return parse_code(f.read())
    except OSError as e:
        raise _UsageError(f"cannot read {path}: {e}")


def _read_words(path):
    """Z4 words from a code file (its generator rows) or a bare word list."""
    try:
        with open(path, "r", encoding="ascii", newline="") as f:
            text = f.read()
    except OSError as e:
        raise _UsageError(f"cannot read {path}: {e}")
    if text.startswith("Z4CODE"):
        return list(parse_code(text).generators)
    return [Z4Word.from_string(line) for line in text.split("\n") if line]


def _cmd_build(args, budget) -> int:
    overrides = _parse_overrides(args.override, budget)
    code = lrm(args.r, args.m, overrides or None, budget=budget)
    text = render_code(code)
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args, budget) -> int:
    overrides = _parse_overrides(args.override, budget)
    rep = verify_theorem1(
        args.r, args.m, overrides or None,
        budget=budget, workers=args.workers, fast=args.fast,
    )
    for line in report_lines(rep):
        print(line)
    if rep.passed:
        return 0
    return 1 if rep.failures else 3


def _cmd_verify_all(args, budget) -> int:
    failed = 0
    skipped = 0
    passed = 0
    for m in range(1, args.M + 1):
        for r in range(m + 1):
            rep = verify_theorem1(r, m, budget=budget, workers=args.workers)
            print(verify_all_line(rep))
            if rep.passed:
                passed += 1
            elif rep.failures:
                failed += 1
            else:
                skipped += 1
    print(f"passed={passed} failed={failed} skipped={skipped}")
    return 1 if failed else 0


def _cmd_gray(args) -> int:
    for w in _read_words(args.file):
        print(gray(w).digits())
    return 0


def _cmd_ungray(args) -> int:
    try:
        with open(args.file, "r", encoding="ascii", newline="") as f:
            text = f.read()
    except OSError as e:
        raise _UsageError(f"cannot read {args.file}: {e}")
    for line in text.split("\n"):
        if line:
            print(gray_inverse(BitWord.from_string(line)).digits())
    return 0


def _cmd_mindist(args, budget) -> int:
    code = _load_code(args.file)
    d, witness = min_lee_weight_witness(code, budget=budget, workers=args.workers)
    print(f"min_lee_distance={d}")
    print(f"witness={witness.digits()}")
    return 0


def _cmd_wdist(args, budget) -> int:
    dist = lee_weight_distribution(_load_code(args.file), budget=budget, workers=args.workers)
    for w, count in enumerate(dist.counts):
        if count:
            print(f"weight={w} count={count}")
    return 0


def _cmd_member(args) -> int:
    code = _load_code(args.file)
    word = Z4Word.from_string(args.word)
    if word.n != code.n:
        raise _UsageError(f"word length {word.n} does not match code length {code.n}")
    if code.contains(word):
        print("present")
        return 0
    print("absent")
    return 1


def _cmd_image_linear(args, budget) -> int:
    code = _load_code(args.file)
    if args.brute:
        from .analysis import BRUTE_ORACLE_BUDGET

        linear = image_is_linear_bruteforce(code, budget=min(budget, BRUTE_ORACLE_BUDGET))
    else:
        linear = image_is_linear(code)
    print(f"image_linear={'true' if linear else 'false'}")
    return 0 if linear else 1


def _cmd_enumerate(args, budget) -> int:
    for w in enumerate_codewords(_load_code(args.file).standard_form, budget=budget):
        print(w.digits())
    return 0


def _cmd_compare_qrm(args) -> int:
    for m in range(1, args.M + 1):
        for r in range(m + 1):
            print(nonequivalence_line(nonequivalence_report(r, m)))
    return 0


def _cmd_rm(args) -> int:
    for row in rm_binary(args.r, args.m):
        print(row.digits())
    return 0


def _cmd_search(args) -> int:
    target = CodeParams(args.n, args.k, args.d)
    found = search_nonlinear_base(target, length_limit=args.limit)
    for i, code in enumerate(found):
        if i:
            print()
        sys.stdout.write(render_code(code))
    return 0 if found else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        budget = args.budget if getattr(args, "budget", None) is not None else _default_budget()
        if args.command == "build":
            return _cmd_build(args, budget)
        if args.command == "verify":
            return _cmd_verify(args, budget)
        if args.command == "verify-all":
            return _cmd_verify_all(args, budget)
        if args.command == "gray":
            return _cmd_gray(args)
        if args.command == "ungray":
            return _cmd_ungray(args)
        if args.command == "mindist":
            return _cmd_mindist(args, budget)
        if args.command == "wdist":
            return _cmd_wdist(args, budget)
        if args.command == "member":
            return _cmd_member(args)
        if args.command == "image-linear":
            return _cmd_image_linear(args, budget)
        if args.command == "enumerate":
            return _cmd_enumerate(args, budget)
        if args.command == "compare-qrm":
            return _cmd_compare_qrm(args)
        if args.command == "rm":
            return _cmd_rm(args)
        if args.command == "search-nonlinear":
            return _cmd_search(args)
        raise AssertionError(f"unhandled command {args.command}")  # pragma: no cover
    except CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (OverrideError, ZeroCodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (_UsageError, CodeFileError, DimensionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
