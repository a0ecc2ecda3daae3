# folding/cli/commands/oracle.py

import argparse
from typing import TextIO

from folding.cli.arguments import (TEXT, add_cell_arguments,
                                   add_format_arguments, resolve_cell,
                                   write_output)
from folding.core.logging import log_command
from folding.core.utils.exceptions import EXIT_FAILURE, EXIT_OK
from folding.core.utils.response import render_json, standard_response
from folding.modules.shared.enums import Method
from folding.modules.torus.schemas import AuditReport
from folding.modules.torus.service import audit, oracle_count
from folding.modules.valueset.schemas import ValueSetReport


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "oracle", help="Count the value set on the torus, without polynomials."
    )
    add_cell_arguments(parser)
    parser.add_argument(
        "--audit",
        action="store_true",
        help="Also recount every image P_k(S_i) by class against the closed forms.",
    )
    add_format_arguments(parser, default=TEXT)
    parser.set_defaults(handler=run)


def render_audit_text(report: AuditReport) -> str:
    lines = [f"{report.algebra.value} {report.q} {report.k} oracle {report.oracle_count}"]
    for entry in report.sets:
        o, e = entry.observed, entry.expected
        lines.append(
            f"S{entry.index} {entry.kind.value} {entry.moduli} "
            f"interior={o.interior}/{e.interior} "
            f"edge={o.edge}/{e.edge} corner={o.corner}/{e.corner}"
        )
    o, e = report.observed_union, report.expected.union
    lines.append(
        f"union interior={o.interior}/{e.interior} "
        f"edge={o.edge}/{e.edge} corner={o.corner}/{e.corner}"
    )
    if report.observed_epsilon is not None:
        lines.append(f"epsilon={report.observed_epsilon}/{report.expected.epsilon}")
    lines.extend(f"MISMATCH {message}" for message in report.mismatches)
    return "\n".join(lines) + "\n"


@log_command("oracle")
def run(args: argparse.Namespace, stdout: TextIO) -> int:
    algebra, q, k = resolve_cell(args)

    if not args.audit:
        report = ValueSetReport(
            algebra=algebra,
            q=q,
            k=k,
            cardinality=oracle_count(algebra, q, k),
            method=Method.ORACLE,
        )
        if args.output_format == TEXT:
            text = report.line() + "\n"
        else:
            text = render_json(
                standard_response(message="Oracle count computed.", data=report)
            )
        write_output(text, args.out, stdout)
        return EXIT_OK

    audit_report = audit(algebra, q, k)
    if args.output_format == TEXT:
        text = render_audit_text(audit_report)
    else:
        text = render_json(
            standard_response(
                message="Audit passed." if audit_report.ok else "Audit failed.",
                status="success" if audit_report.ok else "failure",
                data=audit_report,
            )
        )
    write_output(text, args.out, stdout)
    return EXIT_OK if audit_report.ok else EXIT_FAILURE
