"""Command-line front end.

Subcommands: ``test``, ``test-deleted``, ``build``, ``verify``, ``scan``.
Exit status: 0 hamiltonian/success, 1 not hamiltonian (or verify mismatch),
2 usage error, 3 resource limit.  Data goes to stdout, diagnostics to stderr.
With ``--json`` every invocation prints one record (``scan`` prints one per
row) carrying ``schemaVersion``.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .arith import DomainError, Moduli, gcd
from .characterize import (
    Verdict,
    is_deleted_rect_hamiltonian,
    is_pushed_product_hamiltonian,
)
from .construct import (
    EXPLICIT_LIMIT,
    NoCycleCover,
    NotHamiltonian,
    SizeLimitError,
    build_cycle_cover,
    build_deleted_ham_cycle,
    build_pushed_ham_cycles,
    is_single_cycle,
    knot_class,
)
from .grid import TorusDigraph
from .oracle import DEFAULT_LIMIT, enumerate_cycle_covers, enumerate_ham_cycles

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_NOT_HAMILTONIAN = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

_DECIMAL = re.compile(r"[0-9]+")
_RANGE = re.compile(r"([0-9]+)(?:\.\.([0-9]+))?")


class UsageError(Exception):
    pass


def parse_length(text: str, name: str) -> int:
    if not _DECIMAL.fullmatch(text):
        raise UsageError(f"{name} must be a decimal integer, got {text!r}")
    value = int(text)
    if value < 2:
        raise UsageError(f"{name} must be >= 2, got {value}")
    return value


def parse_range(text: str, name: str) -> range:
    match = _RANGE.fullmatch(text)
    if not match:
        raise UsageError(f"{name} must look like 'A' or 'A..B', got {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if lo < 2 or hi < lo:
        raise UsageError(f"{name} range {text!r} must satisfy 2 <= A <= B")
    return range(lo, hi + 1)


def emit_record(command: str, inputs: dict, result: dict, started: float, out=None) -> str:
    record = {
        "schemaVersion": SCHEMA_VERSION,
        "command": command,
        "input": inputs,
        "result": result,
        "elapsedMs": round((time.perf_counter() - started) * 1000.0, 3),
    }
    line = json.dumps(record, sort_keys=True, ensure_ascii=False)
    print(line, file=out or sys.stdout)
    return line


def _short(value) -> str:
    text = str(value)
    if len(text) > 40:
        return f"{text[:12]}...{text[-12:]} ({len(text.lstrip('-'))} digits)"
    return text


def _print_verdict(v: Verdict):
    status = "true" if v.hamiltonian else f"false ({v.failed.value})"
    print(f"hamiltonian: {status}")
    for key, value in v.witnesses.items():
        print(f"  {key} = {_short(value)}")


def cmd_test(args) -> int:
    started = time.perf_counter()
    m = parse_length(args.m, "m")
    n = parse_length(args.n, "n")
    v = is_pushed_product_hamiltonian(m, n)
    if args.json:
        emit_record("test", {"m": m, "n": n}, v.to_dict(), started)
    else:
        _print_verdict(v)
    return EXIT_OK if v.hamiltonian else EXIT_NOT_HAMILTONIAN


def cmd_test_deleted(args) -> int:
    started = time.perf_counter()
    m = parse_length(args.m, "m")
    n = parse_length(args.n, "n")
    a, b = (int(x) if _DECIMAL.fullmatch(x) else None for x in (args.a, args.b))
    if a is None or b is None:
        raise UsageError("a and b must be decimal integers")
    try:
        v = is_deleted_rect_hamiltonian(m, n, a, b)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        result = v.to_dict()
        result["orientation"] = "swapped" if v.swapped else "original"
        emit_record("test-deleted", {"m": m, "n": n, "a": a, "b": b}, result, started)
    else:
        _print_verdict(v)
        if v.hamiltonian:
            print(f"orientation: {'swapped' if v.swapped else 'original'}")
    return EXIT_OK if v.hamiltonian else EXIT_NOT_HAMILTONIAN


def cmd_build(args) -> int:
    started = time.perf_counter()
    m = parse_length(args.m, "m")
    n = parse_length(args.n, "n")
    limit = EXPLICIT_LIMIT if args.limit is None else args.limit
    if min(m, n) < 3:
        raise UsageError("build needs m, n >= 3")
    try:
        if args.target == "deleted":
            cycles = [build_deleted_ham_cycle(m, n, limit=limit)]
        else:
            cycles = list(build_pushed_ham_cycles(m, n, limit=limit))
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except NotHamiltonian as exc:
        print(f"not hamiltonian: {exc}", file=sys.stderr)
        return EXIT_NOT_HAMILTONIAN
    if args.format == "machine" or args.json:
        result = {
            "target": args.target,
            "cycles": [[list(v) for v in c.vertices] for c in cycles],
            "lengths": [len(c) for c in cycles],
        }
        emit_record("build", {"m": m, "n": n, "target": args.target}, result, started)
    else:
        print("\n\n".join(c.edge_list() for c in cycles))
    return EXIT_OK


# --- verify -------------------------------------------------------------------------


def _skip_min_inequality(m: int, n: int) -> bool:
    # negative control: the min-inequality condition is dropped
    if min(m, n) == 2:
        return bool(is_pushed_product_hamiltonian(m, n))
    mod = Moduli(m, n)
    return mod.g == 1 and gcd(mod.crt(0, -4) // m, mod.crt(-4, 0) // n) == 1


FAULTS = {
    "skip-min": _skip_min_inequality,
    "negate": lambda m, n: not is_pushed_product_hamiltonian(m, n),
}


def verify_instances(limit: int = 56, cap: int = 8, rect_limit: int = 0, fault: str | None = None):
    """Compare fast verdicts and constructions with the oracle on all ``2 <= m, n``, ``m*n <= limit``.

    Returns ``(checked, discrepancies)``; each discrepancy is a dict with
    ``m, n, check, expected, got``.
    """
    pushed_verdict = FAULTS[fault] if fault else (lambda m, n: bool(is_pushed_product_hamiltonian(m, n)))
    cap = max(cap, 2)
    bad = []
    checked = 0

    def record(m, n, check, expected, got):
        if expected != got:
            bad.append({"m": m, "n": n, "check": check, "expected": expected, "got": got})

    pairs = [(m, n) for m in range(2, limit // 2 + 1) for n in range(2, limit // m + 1)]
    for m, n in pairs:
        checked += 1
        ham = enumerate_ham_cycles(TorusDigraph.pushed(m, n), cap=cap, limit=limit)
        record(m, n, "pushed verdict", ham.count > 0, pushed_verdict(m, n))
        if ham.count > 0 and min(m, n) >= 3:
            record(m, n, "pushed cycle count", 2, ham.count)
            built = set(build_pushed_ham_cycles(m, n))
            record(m, n, "pushed constructions", True, built == set(ham.witnesses))
        if m * n == 4:
            continue
        g = TorusDigraph.rect_deleted(m, n)
        covers = enumerate_cycle_covers(g, cap=cap, limit=limit)
        record(m, n, "at most one cover", True, covers.count <= 1)
        if min(m, n) < 3:
            continue
        dham = enumerate_ham_cycles(g, cap=1, limit=limit)
        record(m, n, "deleted verdict", dham.count > 0, bool(is_deleted_rect_hamiltonian(m, n, 2, 2)))
        try:
            cover = build_cycle_cover(m, n)
        except NoCycleCover:
            record(m, n, "cover exists", covers.count > 0, False)
            continue
        record(m, n, "cover exists", covers.count > 0, True)
        if covers.count == 1:
            record(m, n, "cover equals oracle", True, cover == covers.witnesses[0])
        record(m, n, "knot-class prediction", dham.count > 0, is_single_cycle(knot_class(cover)))

    for m in range(3, rect_limit // 3 + 1):
        for n in range(3, rect_limit // m + 1):
            for a in range(1, m):
                for b in range(1, n):
                    found = enumerate_ham_cycles(TorusDigraph.rect_deleted(m, n, a, b), cap=0, limit=limit)
                    record(m, n, f"rectangle {a}x{b} verdict", found.count > 0,
                           bool(is_deleted_rect_hamiltonian(m, n, a, b)))
    return checked, bad


def cmd_verify(args) -> int:
    started = time.perf_counter()
    if args.limit > DEFAULT_LIMIT:
        print(f"error: limit {args.limit} exceeds the oracle cap {DEFAULT_LIMIT}", file=sys.stderr)
        return EXIT_LIMIT
    rect_limit = min(args.limit, 42) if args.rectangles else 0
    checked, bad = verify_instances(args.limit, args.cap, rect_limit, args.inject_fault)
    if args.json:
        emit_record(
            "verify",
            {"limit": args.limit, "rectangles": args.rectangles},
            {"instances": checked, "discrepancies": bad, "ok": not bad},
            started,
        )
    else:
        print(f"checked {checked} (m, n) pairs with m*n <= {args.limit}")
        if bad:
            print(f"{'m':>4} {'n':>4}  {'check':<24} expected  got")
            for row in bad:
                print(f"{row['m']:>4} {row['n']:>4}  {row['check']:<24} {row['expected']!s:<9} {row['got']}")
        else:
            print("all checks agree with the oracle")
    return EXIT_OK if not bad else EXIT_NOT_HAMILTONIAN


# --- scan ---------------------------------------------------------------------------


def _scan_row(pair):
    m, n = pair
    v = is_pushed_product_hamiltonian(m, n)
    return m, n, v.hamiltonian, None if v.failed is None else v.failed.value


def scan_rows(ms, ns, jobs: int = 1):
    pairs = [(m, n) for m in ms for n in ns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_row, pairs, chunksize=64))
    else:
        rows = [_scan_row(p) for p in pairs]
    return sorted(rows)


def cmd_scan(args) -> int:
    started = time.perf_counter()
    ms = parse_range(args.m, "m")
    ns = parse_range(args.n, "n")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    for m, n, ham, failed in scan_rows(ms, ns, args.jobs):
        if args.json:
            emit_record("scan", {"m": m, "n": n}, {"hamiltonian": ham, "failedCondition": failed}, started)
        else:
            print(f"{m} {n} {'true' if ham else 'false'}{'' if failed is None else ' ' + failed}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusham",
        description="Hamiltonicity of pushed and rectangle-deleted products of directed cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="decide whether P(C_m x C_n) is hamiltonian")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("test-deleted", help="decide whether (C_m x C_n) - R_{a,b} is hamiltonian")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_test_deleted)

    p = sub.add_parser("build", help="construct hamiltonian cycle(s)")
    p.add_argument("m")
    p.add_argument("n")
    p.add_argument("--target", choices=("pushed", "deleted"), default="pushed")
    p.add_argument("--format", choices=("edgelist", "machine"), default="edgelist")
    p.add_argument("--json", action="store_true", help="same as --format machine")
    p.add_argument("--limit", type=int, default=None, help=f"max m*n to construct (default {EXPLICIT_LIMIT})")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="cross-check everything against brute force")
    p.add_argument("--limit", type=int, default=56, help="max m*n (default 56)")
    p.add_argument("--cap", type=int, default=8, help="oracle witnesses kept per instance")
    p.add_argument("--rectangles", action="store_true", help="also check every a x b rectangle for m*n <= 42")
    p.add_argument("--json", action="store_true")
    p.add_argument("--inject-fault", choices=sorted(FAULTS), default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="tabulate P(C_m x C_n) verdicts over ranges")
    p.add_argument("m", help="A or A..B")
    p.add_argument("n", help="A or A..B")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"torusham: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
