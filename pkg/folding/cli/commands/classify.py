# folding/cli/commands/classify.py

import argparse
from typing import TextIO

from folding.cli.arguments import TEXT, add_format_arguments, write_output
from folding.core.logging import log_command
from folding.core.utils.exceptions import EXIT_OK
from folding.core.utils.helpers import parse_fraction
from folding.core.utils.response import render_json, standard_response
from folding.modules.shared.enums import AlgebraId
from folding.modules.torus.service import classify_report
from folding.modules.weyl.models import TorusPoint


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "classify", help="Canonical form and class of a torus point."
    )
    parser.add_argument("algebra", type=AlgebraId.parse)
    parser.add_argument("sigma", help="Rational such as 1/3.")
    parser.add_argument("tau", nargs="?", default="0")
    add_format_arguments(parser, default=TEXT)
    parser.set_defaults(handler=run)


@log_command("classify")
def run(args: argparse.Namespace, stdout: TextIO) -> int:
    point = TorusPoint.of(parse_fraction(args.sigma), parse_fraction(args.tau))
    report = classify_report(point, args.algebra)
    if args.output_format == TEXT:
        text = (
            f"{report.algebra.value} {report.point} -> {report.canonical} "
            f"{report.point_class.value} stabilizer={report.stabilizer}\n"
        )
    else:
        text = render_json(standard_response(message="Point classified.", data=report))
    write_output(text, args.out, stdout)
    return EXIT_OK
