"""
wordperiods command line.

Exit codes: 0 success, 1 failed property check, 2 usage, 3 enumeration
budget, 4 precision.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from wordperiods import __version__
from wordperiods.api import check, const, count, dist, fw
from wordperiods.api.output import write_record
from wordperiods.core.exceptions import PeriodsError, ValidationError
from wordperiods.core.logging import configure_logging
from wordperiods.core.settings import load_settings
from wordperiods.schemas.records import CheckResult

logger = logging.getLogger(__name__)

COMMANDS = (fw, dist, const, count, check)


def common_options() -> argparse.ArgumentParser:
    """Flags accepted by every subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--digits", type=int, help="decimal digits for constants and probabilities")
    common.add_argument("--jobs", type=int, help="worker processes")
    common.add_argument("--budget-n", type=int, help="largest finite length for limits")
    common.add_argument("--budget-enum", type=int, help="largest alphabet^n to enumerate")
    common.add_argument("--config", type=Path, help="TOML file with budgets and defaults")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordperiods",
        description="Count words by periods and borders; evaluate limit constants.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_options()]
    for command in COMMANDS:
        command.register(subparsers, parents)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.digits is not None and args.digits < 1:
            raise ValidationError("--digits must be >= 1")
        cfg = load_settings(
            args.config,
            jobs=args.jobs,
            budget_n=args.budget_n,
            budget_enum=args.budget_enum,
            log_level=args.log_level,
        )
        configure_logging(cfg.log_level)
        record = args.handler(args, cfg)
        write_record(record, args.format, sys.stdout, by_period=getattr(args, "by_period", False))
    except PeriodsError as e:
        logger.debug("command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    if isinstance(record.result, CheckResult) and record.result.mismatches:
        return 1
    return 0
