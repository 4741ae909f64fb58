"""const subcommand: α_ℓ or λ_ℓ(r) to a requested number of digits."""
from __future__ import annotations

import argparse

from wordperiods.core.exceptions import ValidationError
from wordperiods.core.settings import Settings
from wordperiods.schemas.records import ConstResult, DecimalOut, OutputRecord, Query
from wordperiods.services.asymptotics import (
    alpha_limit,
    lambda0_limit,
    lambda1_limit,
    lambda_r_limit,
)


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "const",
        parents=parents,
        help="limit constants α_ℓ and λ_ℓ(r)",
    )
    parser.add_argument("--alphabet", type=int, required=True)
    parser.add_argument("--which", choices=["alpha", "lambda"], required=True)
    parser.add_argument("--r", type=int, help="border length for --which lambda")
    parser.add_argument(
        "--finite-n",
        action="store_true",
        help="use the finite-n recurrences even for r = 0, 1",
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, cfg: Settings) -> OutputRecord:
    digits = args.digits if args.digits is not None else cfg.default_digits
    budgets = dict(guard=cfg.guard_digits, budget_n=cfg.budget_n)

    if args.which == "alpha":
        value = alpha_limit(args.alphabet, digits, budget_r=cfg.budget_r, jobs=cfg.jobs, **budgets)
        method = "recurrence"
    else:
        if args.r is None:
            raise ValidationError("--which lambda needs --r")
        if args.r == 0 and not args.finite_n:
            value, method = lambda0_limit(args.alphabet, digits, guard=cfg.guard_digits), "series"
        elif args.r == 1 and not args.finite_n:
            value, method = lambda1_limit(args.alphabet, digits, guard=cfg.guard_digits), "series"
        else:
            value, method = lambda_r_limit(args.alphabet, args.r, digits, **budgets), "recurrence"

    return OutputRecord(
        query=Query(
            command="const",
            alphabet=args.alphabet,
            which=args.which,
            r=args.r,
            digits=digits,
        ),
        result=ConstResult(value=DecimalOut.of(value, digits)),
        method=method,
    )
