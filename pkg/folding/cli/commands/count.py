# folding/cli/commands/count.py

import argparse
from typing import TextIO

from folding.cli.arguments import (TEXT, add_cell_arguments,
                                   add_format_arguments, parse_methods,
                                   resolve_cell, write_output)
from folding.core.logging import log_command
from folding.core.utils.exceptions import EXIT_FAILURE, EXIT_OK
from folding.core.utils.response import render_json, standard_response
from folding.modules.verification.service import count_cell


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "count", help="Count the value set of P_k over F_q by several methods."
    )
    add_cell_arguments(parser)
    parser.add_argument("methods_pos", nargs="?", metavar="METHODS")
    parser.add_argument("--methods", default=None)
    add_format_arguments(parser, default=TEXT)
    parser.set_defaults(handler=run)


@log_command("count")
def run(args: argparse.Namespace, stdout: TextIO) -> int:
    algebra, q, k = resolve_cell(args)
    methods = parse_methods(args.methods or args.methods_pos)
    report = count_cell(algebra, q, k, methods)

    if args.output_format == TEXT:
        text = "".join(line.line() + "\n" for line in report.reports)
    else:
        text = render_json(
            standard_response(
                message="Methods agree." if report.agree else "Methods disagree.",
                status="success" if report.agree else "failure",
                data={
                    "agree": report.agree,
                    "reports": [r.model_dump(mode="json") for r in report.reports],
                },
            )
        )
    write_output(text, args.out, stdout)
    return EXIT_OK if report.agree else EXIT_FAILURE
