"""fw subcommand: c(P, n) and the FW-word for a period list."""
from __future__ import annotations

import argparse

from wordperiods.core.settings import Settings
from wordperiods.domain.word import parse_periods
from wordperiods.schemas.records import FWResult, OutputRecord, Query
from wordperiods.services.fw import c_recursive, fw_word, g_count


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "fw",
        parents=parents,
        help="alphabet size c(P, n) and the FW-word",
        description="Compute c(P, n) by recursion and by union-find, and print the FW-word.",
    )
    parser.add_argument("--periods", required=True, help="comma separated periods, e.g. 4,6")
    parser.add_argument("--length", type=int, required=True)
    parser.add_argument("--alphabet", type=int, help="also report G = alphabet^c")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, cfg: Settings) -> OutputRecord:
    periods = parse_periods(args.periods, args.length)
    word = fw_word(periods)
    g = g_count(args.alphabet, periods) if args.alphabet is not None else None

    return OutputRecord(
        query=Query(
            command="fw",
            alphabet=args.alphabet,
            length=args.length,
            periods=list(periods),
        ),
        result=FWResult(
            c=c_recursive(periods),
            word=word.to_text(),
            c_union_find=word.c,
            g_count=None if g is None else str(g),
        ),
        method="recurrence",
    )
