"""Command-line interface: count, pmf, series, verify.

Results go to stdout; diagnostics and logs go to stderr. Output is built in
full before anything is written, so error paths print nothing on stdout.
"""
import argparse
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from .core.config import CliSettings
from .core.errors import RunCountError
from .core.logging import configure_logging
from .services import counts, export
from .services.series import w_series
from .services.verifier import run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    defaults = CliSettings()
    parser = _Parser(prog="runcount", description="Exact counts of maximal runs in binary words.")
    parser.add_argument("--log-level", default=defaults.LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Log level for stderr.")
    parser.add_argument("--enumeration-limit", type=int, default=defaults.ORACLE_MAX_N,
                        help=f"Largest word length the oracle may enumerate (default: {defaults.ORACLE_MAX_N}).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="Count words with exactly k runs of length r.")
    p.add_argument("--n", type=int, required=True, help="Word length.")
    p.add_argument("--r", type=int, required=True, help="Run length.")
    p.add_argument("--k", type=int, required=True, help="Number of runs.")
    p.add_argument("--scope", choices=["prefix0", "all"], default="prefix0",
                   help="Count words starting with 0 (default) or all words.")
    p.add_argument("--statistic", choices=["runs", "success-runs"], default="runs")
    p.add_argument("--success", dest="statistic", action="store_const", const="success-runs",
                   help="Shorthand for --statistic success-runs.")

    p = sub.add_parser("pmf", help="Exact distribution of the number of runs of length r.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--k-min", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--success", action="store_true", help="Distribution of success runs (runs of 1s).")

    p = sub.add_parser("series", help="Print W(0,r) .. W(order,r), one per line.")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("verify", help="Check the formulas against brute-force enumeration.")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--r-max", type=int, default=None)
    return parser


def cmd_count(args: argparse.Namespace) -> str:
    q = counts.make_triple(args.n, args.r, args.k)
    value = counts.RunCounter().count(q, scope=args.scope, statistic=args.statistic)
    return f"{value}\n"


def cmd_pmf(args: argparse.Namespace) -> str:
    counter = counts.RunCounter()
    dist = counter.success_pmf(args.n, args.r) if args.success else counter.pmf(args.n, args.r)
    records = export.pmf_records(dist, args.k_min, args.k_max)
    return export.to_json(records) if args.format == "json" else export.to_csv(records)


def cmd_series(args: argparse.Namespace) -> str:
    series = w_series(args.r, args.order)
    return "".join(f"{c}\n" for c in series.coeffs)


def cmd_verify(args: argparse.Namespace, limit: int) -> Tuple[str, int]:
    if args.n_max < 0:
        raise UsageError(f"--n-max must be >= 0, got {args.n_max}")
    if args.r_max is not None and args.r_max < 1:
        raise UsageError(f"--r-max must be >= 1, got {args.r_max}")
    report = run_verification(args.n_max, args.r_max, limit=limit)
    lines: List[str] = [m.describe() for m in report.mismatches]
    if report.passed:
        lines.append(f"all checks passed ({report.checks_run} checks, n <= {args.n_max})")
        return "\n".join(lines) + "\n", EXIT_OK
    lines.append(f"{len(report.mismatches)} of {report.checks_run} checks failed")
    return "\n".join(lines) + "\n", EXIT_VERIFY_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE

    cli_settings = CliSettings(LOG_LEVEL=args.log_level, ORACLE_MAX_N=args.enumeration_limit)
    configure_logging(cli_settings.LOG_LEVEL)
    logger.debug("running %s", args.command)

    status = EXIT_OK
    try:
        if args.command == "count":
            output = cmd_count(args)
        elif args.command == "pmf":
            output = cmd_pmf(args)
        elif args.command == "series":
            output = cmd_series(args)
        else:
            output, status = cmd_verify(args, cli_settings.ORACLE_MAX_N)
    except (RunCountError, UsageError) as e:
        sys.stderr.write(f"runcount {args.command}: error: {e}\n")
        return EXIT_USAGE

    sys.stdout.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
