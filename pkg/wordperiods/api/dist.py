"""dist subcommand: distribution of maximum border lengths for (ℓ, n)."""
from __future__ import annotations

import argparse
import logging
from pathlib import Path

from wordperiods.api.output import write_svg
from wordperiods.core.exceptions import ValidationError
from wordperiods.core.settings import Settings
from wordperiods.domain.distribution import DistributionTable
from wordperiods.domain.errdecimal import fraction_to_decimal
from wordperiods.schemas.records import (
    DistributionResult,
    DistributionRow,
    OutputRecord,
    Query,
    RationalOut,
)
from wordperiods.services.counting import exact_distribution
from wordperiods.services.oracle import enumerate_distribution

logger = logging.getLogger(__name__)


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "dist",
        parents=parents,
        help="counts and probabilities of each maximum border length",
    )
    parser.add_argument("--alphabet", type=int, required=True)
    parser.add_argument("--length", type=int, required=True)
    parser.add_argument("--oracle", action="store_true", help="enumerate all words and compare")
    parser.add_argument("--by-period", action="store_true", help="key rows by least period n - r")
    parser.add_argument("--svg", type=Path, help="also write a bar chart to this path")
    parser.set_defaults(handler=handle)


def table_to_result(table: DistributionTable, digits: int) -> DistributionResult:
    rows = []
    for r, count in table.rows():
        probability = table.probability(r)
        rows.append(DistributionRow(
            r=r,
            period=table.n - r,
            count=str(count),
            probability=RationalOut(
                numerator=str(count),
                denominator=str(table.total),
            ),
            probability_dec=f"{fraction_to_decimal(probability, digits):f}",
        ))
    return DistributionResult(
        total=str(table.total),
        rows=rows,
        expected_border=RationalOut.of(table.expected_border()),
    )


def handle(args: argparse.Namespace, cfg: Settings) -> OutputRecord:
    if args.alphabet < 1 or args.length < 1:
        raise ValidationError("alphabet size and length must be >= 1")
    digits = args.digits if args.digits is not None else cfg.default_digits

    table = exact_distribution(args.alphabet, args.length, jobs=cfg.jobs)
    agrees = None
    if args.oracle:
        oracle = enumerate_distribution(
            args.alphabet, args.length, budget=cfg.budget_enum, jobs=cfg.jobs
        )
        agrees = oracle == table
        if not agrees:
            logger.error("oracle and recurrence disagree for alphabet=%d n=%d", args.alphabet, args.length)
        table = oracle

    result = table_to_result(table, digits)
    result.agrees_with_recurrence = agrees

    if args.svg is not None:
        view = "least period" if args.by_period else "maximum border"
        write_svg(
            result,
            args.svg,
            title=f"{view} distribution, alphabet {args.alphabet}, length {args.length}",
            by_period=args.by_period,
        )

    return OutputRecord(
        query=Query(command="dist", alphabet=args.alphabet, length=args.length, digits=digits),
        result=result,
        method=table.method,
    )
