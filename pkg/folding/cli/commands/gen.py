# folding/cli/commands/gen.py

import argparse
import csv
import io
import logging
from typing import TextIO

from folding.cli.arguments import add_format_arguments, write_output
from folding.core.config import settings
from folding.core.logging import log_command
from folding.core.utils.exceptions import EXIT_FAILURE, EXIT_OK
from folding.core.utils.response import render_json
from folding.modules.generator.schemas import PolyMapExport
from folding.modules.generator.service import folding_poly, numeric_check
from folding.modules.shared.enums import AlgebraId, OutputFormat

logger = logging.getLogger("folding")


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="Write the coefficients of P_k.")
    parser.add_argument("algebra", type=AlgebraId.parse)
    parser.add_argument("k", type=int)
    add_format_arguments(parser, default=OutputFormat.JSON.value, text=False)
    parser.add_argument(
        "--numeric-check",
        type=int,
        default=0,
        metavar="SAMPLES",
        help="Also check the functional equation at SAMPLES random points.",
    )
    parser.set_defaults(handler=run)


def render_csv(export: PolyMapExport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("component", "i", "j", "coefficient"))
    for index, component in enumerate(export.components, start=1):
        for i, j, c in component:
            writer.writerow((index, i, j, c))
    return buffer.getvalue()


@log_command("gen")
def run(args: argparse.Namespace, stdout: TextIO) -> int:
    poly_map = folding_poly(args.algebra, args.k)
    export = PolyMapExport.from_map(poly_map)
    if args.output_format == OutputFormat.CSV.value:
        text = render_csv(export)
    else:
        text = render_json(export.model_dump(mode="json"))
    write_output(text, args.out, stdout)

    if args.numeric_check > 0:
        error = numeric_check(poly_map, args.numeric_check)
        logger.info(
            f"Numeric check: max error {error:.3e}",
            extra={"algebra": poly_map.algebra.value, "k": poly_map.k},
        )
        if error >= settings.NUMERIC_TOLERANCE:
            return EXIT_FAILURE
    return EXIT_OK
