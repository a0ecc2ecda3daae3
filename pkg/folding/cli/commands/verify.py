# folding/cli/commands/verify.py

import argparse
import asyncio
import sys
from pathlib import Path
from typing import TextIO

from pydantic import ValidationError

from folding.cli.arguments import (add_format_arguments, parse_algebras,
                                   parse_methods)
from folding.core.config import settings
from folding.core.logging import log_command
from folding.core.utils.exceptions import (EXIT_FAILURE, EXIT_OK,
                                           InvalidArgument)
from folding.core.utils.helpers import prime_powers_between
from folding.modules.shared.enums import OutputFormat
from folding.modules.verification.schemas import SweepConfig
from folding.modules.verification.service import run_sweep, write_summary


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "verify", help="Cross-check formula, exhaustive and oracle counts on a grid."
    )
    parser.add_argument("--algebra", default="all")
    parser.add_argument("--q", type=int, default=None, help="Single prime power.")
    parser.add_argument("--qmin", type=int, default=2)
    parser.add_argument("--qmax", type=int, default=None)
    parser.add_argument("-k", "--k", dest="k", type=int, default=None)
    parser.add_argument("--kmin", type=int, default=1)
    parser.add_argument("--kmax", type=int, default=None)
    parser.add_argument("--methods", default=None)
    parser.add_argument("--workers", type=int, default=settings.SWEEP_WORKERS)
    parser.add_argument(
        "--distinct-k",
        action="store_true",
        help="Keep only the first k of each gcd signature per (algebra, q).",
    )
    add_format_arguments(parser, default=OutputFormat.CSV.value, text=False)
    parser.set_defaults(handler=run)


def build_config(args: argparse.Namespace) -> SweepConfig:
    if args.q is not None:
        qs = [args.q]
    elif args.qmax is not None:
        qs = prime_powers_between(args.qmin, args.qmax)
    else:
        raise InvalidArgument(detail="Give --q or --qmax.")

    if args.k is not None:
        ks = [args.k]
    elif args.kmax is not None:
        ks = list(range(args.kmin, args.kmax + 1))
    else:
        raise InvalidArgument(detail="Give -k or --kmax.")

    try:
        return SweepConfig(
            algebras=parse_algebras(args.algebra),
            qs=qs,
            ks=ks,
            methods=parse_methods(args.methods),
            output_format=OutputFormat(args.output_format),
            out=Path(args.out) if args.out else None,
            workers=args.workers,
            distinct_k=args.distinct_k,
        )
    except ValidationError as exc:
        messages = "; ".join(error["msg"] for error in exc.errors())
        raise InvalidArgument(detail=f"Invalid sweep: {messages}")


@log_command("verify")
def run(args: argparse.Namespace, stdout: TextIO) -> int:
    config = build_config(args)
    summary = asyncio.run(run_sweep(config))
    write_summary(summary, config.output_format, config.out, stdout)
    # the summary line never mixes into a table written to stdout
    report_stream = stdout if config.out is not None else sys.stderr
    report_stream.write(summary.line() + "\n")
    return EXIT_OK if summary.ok else EXIT_FAILURE
