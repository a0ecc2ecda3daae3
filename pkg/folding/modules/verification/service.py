# folding/modules/verification/service.py

import asyncio
import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, Optional, TextIO

from pydantic import ValidationError

from folding.core.utils.exceptions import FoldingException
from folding.core.utils.helpers import prime_power_parts
from folding.core.utils.response import render_json, standard_response
from folding.modules.field.service import make_field
from folding.modules.formulas import service as formulas
from folding.modules.shared.enums import AlgebraId, Method, OutputFormat
from folding.modules.torus import service as torus
from folding.modules.valueset.schemas import CountReport, ValueSetReport
from folding.modules.valueset.service import exhaustive_count
from folding.modules.verification.schemas import (CSV_COLUMNS, SweepConfig,
                                                  SweepRow, SweepSummary)

logger = logging.getLogger("folding")


def count_with(method: Method, algebra: AlgebraId, q: int, k: int) -> int:
    if method == Method.FORMULA:
        return formulas.cardinality(algebra, q, k)
    if method == Method.ORACLE:
        return torus.oracle_count(algebra, q, k)
    p, n = prime_power_parts(q)
    return exhaustive_count(algebra, make_field(p, n), k)


def count_report(method: Method, algebra: AlgebraId, q: int, k: int) -> ValueSetReport:
    """Count with one method and bound-check the result.

    Raises:
        FoldingException: If the count falls outside [1, q^rank].
    """
    value = count_with(method, algebra, q, k)
    try:
        return ValueSetReport(
            algebra=algebra, q=q, k=k, cardinality=value, method=method
        )
    except ValidationError as exc:
        raise FoldingException(
            detail=f"{method.value} count rejected: {exc.errors()[0]['msg']}"
        )


def count_cell(
    algebra: AlgebraId,
    q: int,
    k: int,
    methods: Iterable[Method],
    raise_errors: bool = True,
) -> CountReport:
    """Run every requested method on one cell.

    With raise_errors=False a failing method is recorded in `failures`
    and the remaining methods still run.
    """
    algebra = AlgebraId(algebra)
    reports, failures = [], {}
    for method in methods:
        try:
            reports.append(count_report(method, algebra, q, k))
        except FoldingException as exc:
            if raise_errors:
                raise
            failures[method] = str(exc.detail)
            logger.warning(
                f"CELL FAILED: {exc.detail}",
                extra={"algebra": algebra.value, "q": q, "k": k, "method": method.value},
            )
    return CountReport(algebra=algebra, q=q, k=k, reports=reports, failures=failures)


def run_cell(algebra: AlgebraId, q: int, k: int, methods: tuple[Method, ...]) -> SweepRow:
    """One sweep row; module-level so process pools can pickle it."""
    report = count_cell(algebra, q, k, methods, raise_errors=False)
    return SweepRow(
        q=q,
        k=k,
        algebra=report.algebra,
        formula=report.value(Method.FORMULA),
        exhaustive=report.value(Method.EXHAUSTIVE),
        oracle=report.value(Method.ORACLE),
        failed=list(report.failures),
        agree=report.agree,
    )


def sweep_cells(config: SweepConfig) -> list[tuple]:
    """All (algebra, q, k, methods) cells, keeping one k per gcd signature if asked."""
    methods = tuple(config.methods)
    cells = []
    for algebra in config.algebras:
        for q in config.qs:
            seen = set()
            for k in config.ks:
                if config.distinct_k:
                    signature = formulas.gcd_signature(algebra, q, k)
                    if signature in seen:
                        continue
                    seen.add(signature)
                cells.append((algebra, q, k, methods))
    return cells


async def run_sweep(config: SweepConfig) -> SweepSummary:
    """Run the cross-check grid.

    Cells run in a process pool when config.workers > 1; rows are sorted
    by (q, k, algebra) before being returned.
    """
    cells = sweep_cells(config)
    logger.info(f"SWEEP START: {len(cells)} cells, workers={config.workers}")
    if config.workers > 1:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            rows = await asyncio.gather(
                *(loop.run_in_executor(pool, run_cell, *cell) for cell in cells)
            )
    else:
        rows = []
        for cell in cells:
            rows.append(run_cell(*cell))
            await asyncio.sleep(0)

    rows = sorted(rows, key=SweepRow.sort_key)
    mismatched = sum(1 for row in rows if not row.agree)
    summary = SweepSummary(
        checked=len(rows),
        mismatched=mismatched,
        failed=sum(1 for row in rows if row.failed),
        rows=rows,
    )
    logger.info(f"SWEEP DONE: {summary.line()}")
    return summary


# ---------------------------
# Writers
# ---------------------------
def write_csv(rows: Iterable[SweepRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in sorted(rows, key=SweepRow.sort_key):
        writer.writerow(row.csv_cells())


def write_json(summary: SweepSummary, stream: TextIO) -> None:
    stream.write(
        render_json(
            standard_response(
                message=summary.line(),
                status="success" if summary.ok else "failure",
                data=summary,
            )
        )
    )


def write_summary(
    summary: SweepSummary,
    output_format: OutputFormat,
    out: Optional[Path],
    stdout: TextIO,
) -> None:
    """Write the sweep table to `out`, or to stdout when no path is given."""

    def emit(stream: TextIO) -> None:
        if output_format == OutputFormat.JSON:
            write_json(summary, stream)
        else:
            write_csv(summary.rows, stream)

    if out is None:
        emit(stdout)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="") as handle:
        emit(handle)
