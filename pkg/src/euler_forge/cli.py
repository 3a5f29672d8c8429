"""Command-line front end.

Three subcommands: `euler` prints the integer (or reduced) Euler table,
`constants` prints the pairwise constants s(n) exactly or the triple
constants t(n) by CRT reconstruction, and `verify` runs congruence checks
over a prime range. Output is CSV or JSON on stdout, byte-stable for a
fixed configuration regardless of thread count; big integers ride through
JSON as decimal strings so consumers never round them.

Exit codes: 0 clean, 1 at least one congruence failed, 2 usage error,
3 CRT reconstruction did not stabilize, 4 the Euler cache was too small.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .convolution import reconstruct_t_details
from .errors import CacheBoundError, StabilizationError
from .euler_exact import build_euler_cache, s_constant
from .modular_arith import Residue
from .verifier import IDENTITY_TAGS, CongruenceReport, run_suite

__all__ = [
    "EXIT_OK",
    "EXIT_FAIL",
    "EXIT_USAGE",
    "EXIT_NO_STABILIZE",
    "EXIT_CACHE",
    "RunConfig",
    "reports_to_csv",
    "reports_to_json",
    "reports_from_json",
    "exit_code_from_reports",
    "build_parser",
    "main",
    "entrypoint",
]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NO_STABILIZE = 3
EXIT_CACHE = 4

DEFAULT_MAX_INDEX = 600

_CSV_HEADER = ["identity", "p", "n", "lhs", "rhs", "outcome", "reason"]


@dataclass(frozen=True)
class RunConfig:
    """Validated bundle of everything one subcommand run needs."""

    command: str
    prime_lo: int = 3
    prime_hi: int = 199
    n_max: int = 10
    max_index: int = DEFAULT_MAX_INDEX
    format: str = "csv"
    stability: int = 3
    parallelism: int = 1
    modulus: int | None = None
    table: str | None = None
    identities: tuple[str, ...] = ()
    q_max: int = 4

    def __post_init__(self) -> None:
        if self.command not in ("euler", "constants", "verify"):
            raise ValueError(f"unknown command {self.command!r}")
        if self.prime_lo > self.prime_hi:
            raise ValueError("prime range is empty")
        if self.n_max < 0:
            raise ValueError("n_max must be >= 0")
        if self.max_index < 0:
            raise ValueError("max_index must be >= 0")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")
        if self.stability < 1:
            raise ValueError("stability must be >= 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


def _csv_text(header: list[str], rows: list[list[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def reports_to_csv(reports: list[CongruenceReport]) -> str:
    rows: list[list[object]] = []
    for r in reports:
        rows.append(
            [
                r.identity,
                r.p,
                "" if r.n is None else r.n,
                "" if r.lhs is None else r.lhs.value,
                "" if r.rhs is None else r.rhs.value,
                r.outcome,
                "" if r.skip_reason is None else r.skip_reason,
            ]
        )
    return _csv_text(_CSV_HEADER, rows)


def _report_object(report: CongruenceReport) -> dict[str, object]:
    return {
        "identity": report.identity,
        "p": report.p,
        "n": report.n,
        "lhs": None if report.lhs is None else str(report.lhs.value),
        "rhs": None if report.rhs is None else str(report.rhs.value),
        "outcome": report.outcome,
        "reason": report.skip_reason,
    }


def reports_to_json(reports: list[CongruenceReport]) -> str:
    return json.dumps([_report_object(r) for r in reports], indent=2) + "\n"


def reports_from_json(text: str) -> list[CongruenceReport]:
    """Inverse of reports_to_json; parse(emit(reports)) == reports."""
    out: list[CongruenceReport] = []
    for row in json.loads(text):
        p = row["p"]
        lhs = None if row["lhs"] is None else Residue(int(row["lhs"]), p)
        rhs = None if row["rhs"] is None else Residue(int(row["rhs"]), p)
        out.append(
            CongruenceReport(
                identity=row["identity"],
                p=p,
                n=row["n"],
                lhs=lhs,
                rhs=rhs,
                outcome=row["outcome"],
                skip_reason=row["reason"],
            )
        )
    return out


def exit_code_from_reports(reports: list[CongruenceReport]) -> int:
    """1 when any check failed; skips count as clean."""
    return EXIT_FAIL if any(r.outcome == "fail" for r in reports) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="euler-forge",
        description="Euler-number tables, convolution constants, and congruence checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_euler = sub.add_parser("euler", help="print E_0..E_max, exact or reduced")
    p_euler.add_argument("--max", type=int, required=True, help="largest index to print")
    p_euler.add_argument("--mod", type=int, default=None, help="reduce values mod this integer (>= 2)")
    p_euler.add_argument("--format", choices=("csv", "json"), default="csv")

    p_const = sub.add_parser("constants", help="print the s(n) or t(n) table")
    which = p_const.add_mutually_exclusive_group(required=True)
    which.add_argument("--s", action="store_true", help="pairwise even-index constants, exact")
    which.add_argument("--t", action="store_true", help="triple constants via CRT over many primes")
    p_const.add_argument("--max", type=int, required=True, help="largest n to print")
    p_const.add_argument("--stability", type=int, default=3, help="stable pushes required by --t")
    p_const.add_argument(
        "--max-index", type=int, default=DEFAULT_MAX_INDEX, help="Euler cache size for --t"
    )
    p_const.add_argument("--format", choices=("csv", "json"), default="csv")

    p_verify = sub.add_parser("verify", help="check congruences over a prime range")
    p_verify.add_argument(
        "--identities",
        default="all",
        help='comma-separated keys out of {1.1,1.2,1.4,1.5,1.6,1.7,1.8,1.9}, or "all"',
    )
    p_verify.add_argument("--primes", default="3..199", metavar="LO..HI", help="inclusive prime range")
    p_verify.add_argument("--n-max", dest="n_max", type=int, default=10, help="largest n to sweep")
    p_verify.add_argument("--format", choices=("csv", "json"), default="csv")
    p_verify.add_argument("--stability", type=int, default=3, help="stable pushes for t-table entries")
    p_verify.add_argument(
        "--threads", type=int, default=None, help="worker threads (default: EULER_FORGE_THREADS or cores)"
    )
    p_verify.add_argument("--max-index", type=int, default=DEFAULT_MAX_INDEX, help="Euler cache size")
    p_verify.add_argument("--q-max", dest="q_max", type=int, default=4, help="largest q for identity 1.7")
    return parser


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _parse_identities(text: str) -> tuple[str, ...] | None:
    if text.strip() == "all":
        return tuple(sorted(IDENTITY_TAGS))
    keys = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not keys or any(k not in IDENTITY_TAGS for k in keys):
        return None
    return tuple(sorted(set(keys)))


def _parse_prime_range(text: str) -> tuple[int, int] | None:
    lo, sep, hi = text.partition("..")
    if not sep:
        return None
    try:
        return int(lo), int(hi)
    except ValueError:
        return None


def _resolve_threads(flag: int | None) -> int | None:
    """Flag wins; then the environment; then however many cores exist.

    Returns None only when the flag is present but invalid, which the
    caller turns into a usage error.
    """
    if flag is not None:
        return flag if flag >= 1 else None
    env = os.environ.get("EULER_FORGE_THREADS")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            value = 0
        if value >= 1:
            return value
    return os.cpu_count() or 1


def cmd_euler(config: RunConfig) -> int:
    cache = build_euler_cache(config.max_index)
    if config.modulus is None:
        values = list(cache.values)
    else:
        values = [v % config.modulus for v in cache.values]
    if config.format == "csv":
        sys.stdout.write(_csv_text(["n", "value"], [[n, v] for n, v in enumerate(values)]))
    else:
        rows = [{"n": n, "value": str(v)} for n, v in enumerate(values)]
        sys.stdout.write(json.dumps(rows, indent=2) + "\n")
    return EXIT_OK


def cmd_constants(config: RunConfig) -> int:
    if config.table == "s":
        cache = build_euler_cache(2 * config.n_max)
        pairs = [(n, s_constant(n, cache)) for n in range(config.n_max + 1)]
        if config.format == "csv":
            sys.stdout.write(_csv_text(["n", "value"], [[n, v] for n, v in pairs]))
        else:
            rows = [{"n": n, "value": str(v)} for n, v in pairs]
            sys.stdout.write(json.dumps(rows, indent=2) + "\n")
        return EXIT_OK

    cache = build_euler_cache(config.max_index)
    try:
        details = [
            reconstruct_t_details(n, cache, config.stability) for n in range(config.n_max + 1)
        ]
    except StabilizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_STABILIZE
    if config.format == "csv":
        rows = [[d.n, d.value, " ".join(str(p) for p in d.primes)] for d in details]
        sys.stdout.write(_csv_text(["n", "value", "primes"], rows))
    else:
        objs = [{"n": d.n, "value": str(d.value), "primes": list(d.primes)} for d in details]
        sys.stdout.write(json.dumps(objs, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    try:
        reports = run_suite(
            config.prime_lo,
            config.prime_hi,
            config.n_max,
            set(config.identities),
            q_max=config.q_max,
            max_index=config.max_index,
            stability=config.stability,
            threads=config.parallelism,
        )
    except CacheBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except StabilizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_STABILIZE
    except ValueError as exc:
        return _fail_usage(str(exc))
    if config.format == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        sys.stdout.write(reports_to_json(reports))
    return exit_code_from_reports(reports)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.command == "euler":
        if args.max < 0:
            return _fail_usage("--max must be >= 0")
        if args.mod is not None and args.mod < 2:
            return _fail_usage("--mod must be >= 2")
        try:
            config = RunConfig(
                command="euler", max_index=args.max, format=args.format, modulus=args.mod
            )
            return cmd_euler(config)
        except ValueError as exc:
            return _fail_usage(str(exc))

    if args.command == "constants":
        if args.max < 0:
            return _fail_usage("--max must be >= 0")
        try:
            config = RunConfig(
                command="constants",
                n_max=args.max,
                max_index=args.max_index,
                format=args.format,
                stability=args.stability,
                table="s" if args.s else "t",
            )
        except ValueError as exc:
            return _fail_usage(str(exc))
        try:
            return cmd_constants(config)
        except StabilizationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NO_STABILIZE
        except ValueError as exc:
            return _fail_usage(str(exc))

    identities = _parse_identities(args.identities)
    if identities is None:
        return _fail_usage(
            f"--identities must be \"all\" or keys from {sorted(IDENTITY_TAGS)}, got {args.identities!r}"
        )
    prime_range = _parse_prime_range(args.primes)
    if prime_range is None:
        return _fail_usage(f"--primes must look like LO..HI, got {args.primes!r}")
    threads = _resolve_threads(args.threads)
    if threads is None:
        return _fail_usage("--threads must be >= 1")
    try:
        config = RunConfig(
            command="verify",
            prime_lo=prime_range[0],
            prime_hi=prime_range[1],
            n_max=args.n_max,
            max_index=args.max_index,
            format=args.format,
            stability=args.stability,
            parallelism=threads,
            identities=identities,
            q_max=args.q_max,
        )
    except ValueError as exc:
        return _fail_usage(str(exc))
    return cmd_verify(config)


def entrypoint() -> None:
    sys.exit(main())
