"""count subcommand: F (least period) and G (all periods) for one query."""
from __future__ import annotations

import argparse

from wordperiods.core.exceptions import ValidationError
from wordperiods.core.settings import Settings
from wordperiods.domain.word import PeriodSet, parse_periods
from wordperiods.schemas.records import CountResult, OutputRecord, Query
from wordperiods.services.counting import counting_method, f_count
from wordperiods.services.fw import g_count


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "count",
        parents=parents,
        help="count words by period set or maximum border",
    )
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--periods", help="comma separated periods; the least is the least period")
    target.add_argument("--max-border", type=int, help="maximum border length r")
    parser.add_argument("--alphabet", type=int, required=True)
    parser.add_argument("--length", type=int, required=True)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, cfg: Settings) -> OutputRecord:
    if args.alphabet < 1:
        raise ValidationError("alphabet size must be >= 1")
    n = args.length
    if args.periods is not None:
        periods = parse_periods(args.periods, n)
    else:
        if not 0 <= args.max_border < n:
            raise ValidationError(f"--max-border must lie in [0, {n})")
        periods = PeriodSet.of([n - args.max_border], n)

    return OutputRecord(
        query=Query(
            command="count",
            alphabet=args.alphabet,
            length=n,
            periods=list(periods),
            r=args.max_border,
        ),
        result=CountResult(
            f_count=str(f_count(args.alphabet, periods)),
            g_count=str(g_count(args.alphabet, periods)),
        ),
        method=counting_method(periods),
    )
