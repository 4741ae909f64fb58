"""check subcommand: random (P, n) samples, c(P, n) by recursion vs union-find."""
from __future__ import annotations

import argparse
import random

from wordperiods.core.exceptions import ValidationError
from wordperiods.core.settings import Settings
from wordperiods.domain.word import PeriodSet, period_lengths
from wordperiods.schemas.records import CheckResult, OutputRecord, Query
from wordperiods.services.fw import c_recursive, fw_word


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "check",
        parents=parents,
        help="property check of the c(P, n) recursion on random period sets",
    )
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--max-length", type=int, default=60)
    parser.add_argument("--seed", type=int, default=0)
    parser.set_defaults(handler=handle)


def sample_period_set(rng: random.Random, max_length: int) -> PeriodSet:
    n = rng.randint(1, max_length)
    k = rng.randint(0, min(4, n))
    return PeriodSet.of(rng.sample(range(1, n + 1), k), n)


def check_period_set(periods: PeriodSet) -> str | None:
    """Describe the disagreement for this period set, if any"""
    word = fw_word(periods)
    c = c_recursive(periods)
    if c != word.c:
        return f"P={periods}: recursion gives {c}, union-find gives {word.c}"
    missing = set(periods) - set(period_lengths(word.classes))
    if missing:
        return f"P={periods}: FW-word lacks periods {sorted(missing)}"
    return None


def handle(args: argparse.Namespace, cfg: Settings) -> OutputRecord:
    if args.samples < 1 or args.max_length < 1:
        raise ValidationError("--samples and --max-length must be >= 1")
    rng = random.Random(args.seed)
    mismatches = []
    for _ in range(args.samples):
        problem = check_period_set(sample_period_set(rng, args.max_length))
        if problem is not None:
            mismatches.append(problem)

    return OutputRecord(
        query=Query(command="check", length=args.max_length),
        result=CheckResult(samples=args.samples, seed=args.seed, mismatches=mismatches),
        method="recurrence",
    )
