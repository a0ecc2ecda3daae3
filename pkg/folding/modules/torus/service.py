# folding/modules/torus/service.py

import logging
from typing import Optional

import numpy as np

from folding.core.config import settings
from folding.core.utils.exceptions import SizeExceeded
from folding.core.utils.helpers import (lcm_all, prime_power_parts,
                                        require_positive)
from folding.modules.formulas import service as formulas
from folding.modules.formulas.schemas import CountTriple
from folding.modules.shared.enums import AlgebraId, FixSetKind, PointClass
from folding.modules.torus.helpers import (CODE_CLASSES, CORNERS,
                                           classify_many, set_numerators)
from folding.modules.torus.schemas import (AuditReport, ClassifyReport,
                                           FixSetSpec, SetAudit)
from folding.modules.weyl.models import OrbitGroup, TorusPoint
from folding.modules.weyl.service import (canonicalize, canonicalize_many,
                                          orbit_group, stabilizer_size)

logger = logging.getLogger("folding")

# Numerators over the shared denominator must stay inside int64.
MAX_SHARED_DENOMINATOR = 1 << 61


def fix_sets(algebra: AlgebraId, q: int) -> list[FixSetSpec]:
    """Parameter families whose union is the fixed-point set of P_q."""
    algebra = AlgebraId(algebra)
    grid, line, origin = FixSetKind.GRID, FixSetKind.LINE, FixSetKind.ORIGIN
    q2 = q * q
    if algebra == AlgebraId.POWER:
        shapes = [(line, (q - 1,), 0), (origin, (), 0)]
    elif algebra == AlgebraId.A1:
        shapes = [(line, (q - 1,), 0), (line, (q + 1,), 0)]
    elif algebra == AlgebraId.A2:
        shapes = [
            (grid, (q - 1, q - 1), 0),
            (line, (q2 - 1,), q),
            (line, (q2 + q + 1,), q),
        ]
    elif algebra == AlgebraId.B2:
        shapes = [
            (grid, (q - 1, q + 1), 0),
            (grid, (q - 1, q - 1), 0),
            (grid, (q + 1, q + 1), 0),
            (line, (q2 - 1,), q),
            (line, (q2 + 1,), q),
        ]
    else:
        shapes = [
            (grid, (q - 1, q - 1), 0),
            (line, (q2 - 1,), q),
            (line, (q2 + q + 1,), q),
            (grid, (q + 1, q + 1), 0),
            (line, (q2 - 1,), -q),
            (line, (q2 - q + 1,), -q),
        ]
    return [
        FixSetSpec(algebra=algebra, index=i, kind=kind, moduli=moduli, u=u)
        for i, (kind, moduli, u) in enumerate(shapes, start=1)
    ]


def _check_cell(algebra: AlgebraId, q: int, k: int) -> None:
    prime_power_parts(q)
    require_positive("k", k)
    if q > settings.MAX_ORACLE_Q:
        raise SizeExceeded(
            detail=f"q={q} exceeds MAX_ORACLE_Q={settings.MAX_ORACLE_Q}."
        )


def canonical_image(
    spec: FixSetSpec, k: int, group: OrbitGroup
) -> tuple[np.ndarray, np.ndarray, int]:
    """Distinct canonical points of k*S_i as numerators over one denominator."""
    reduced = spec.scaled(k)
    s, t, L = set_numerators(reduced)
    s, t = canonicalize_many(s, t, L, group)
    keys = np.unique(s * L + t)
    return keys // L, keys % L, L


def _images(algebra: AlgebraId, q: int, k: int):
    group = orbit_group(algebra)
    specs = fix_sets(algebra, q)
    images = {
        spec.index: canonical_image(spec, k, group)
        for spec in specs
        if spec.kind != FixSetKind.ORIGIN
    }
    shared = lcm_all(L for _, _, L in images.values())
    if shared > MAX_SHARED_DENOMINATOR:
        raise SizeExceeded(detail=f"Shared denominator {shared} exceeds int64 range.")
    origins = sum(1 for spec in specs if spec.kind == FixSetKind.ORIGIN)
    return group, specs, images, shared, origins


def _lift(s: np.ndarray, t: np.ndarray, L: int, shared: int) -> np.ndarray:
    factor = np.int64(shared // L)
    return np.column_stack([s * factor, t * factor])


def oracle_count(algebra: AlgebraId, q: int, k: int) -> int:
    """Size of the value set counted on the torus, without any polynomial.

    Every family S_i is scaled by k, canonicalized under the substitution
    group and merged into one deduplicated collection.

    Raises:
        NotPrimePower: If q is not a prime power.
        SizeExceeded: If q exceeds settings.MAX_ORACLE_Q.
    """
    algebra = AlgebraId(algebra)
    _check_cell(algebra, q, k)
    _, _, images, shared, origins = _images(algebra, q, k)
    stacked = np.concatenate(
        [_lift(s, t, L, shared) for s, t, L in images.values()], axis=0
    )
    count = len(np.unique(stacked, axis=0)) + origins
    logger.debug(
        f"ORACLE: {algebra.value} q={q} k={k} -> {count}",
        extra={"algebra": algebra.value, "q": q, "k": k, "method": "oracle"},
    )
    return count


# ---------------------------
# Point classification
# ---------------------------
def classify_point(point: TorusPoint, algebra: AlgebraId) -> PointClass:
    """Interior, edge or corner, from the stabilizer and the corner list."""
    algebra = AlgebraId(algebra)
    if algebra == AlgebraId.POWER:
        return PointClass.INTERIOR
    group = orbit_group(algebra)
    canonical = canonicalize(TorusPoint.of(*point), group)
    if canonical in CORNERS[algebra]:
        return PointClass.CORNER
    if stabilizer_size(canonical, group) > 1:
        return PointClass.EDGE
    return PointClass.INTERIOR


def classify_report(point: TorusPoint, algebra: AlgebraId) -> ClassifyReport:
    algebra = AlgebraId(algebra)
    point = TorusPoint.of(*point)
    group = orbit_group(algebra)
    return ClassifyReport(
        algebra=algebra,
        point=str(point),
        canonical=str(canonicalize(point, group)),
        stabilizer=stabilizer_size(point, group),
        point_class=classify_point(point, algebra),
    )


# ---------------------------
# Audit of the counting tables
# ---------------------------
def _triple(codes: np.ndarray, extra_interior: int = 0) -> CountTriple:
    counts = {cls: 0 for cls in PointClass}
    values, totals = np.unique(codes, return_counts=True)
    for code, total in zip(values, totals):
        counts[CODE_CLASSES[int(code)]] = int(total)
    return CountTriple(
        interior=counts[PointClass.INTERIOR] + extra_interior,
        edge=counts[PointClass.EDGE],
        corner=counts[PointClass.CORNER],
    )


def _compare(label: str, observed: CountTriple, expected: CountTriple) -> list[str]:
    mismatches = []
    for field in ("interior", "edge", "corner"):
        want = getattr(expected, field)
        got = getattr(observed, field)
        if want is not None and want != got:
            mismatches.append(f"{label} {field}: observed {got}, expected {want}")
    return mismatches


def _edge_keys(
    rows: list[tuple[np.ndarray, np.ndarray]]
) -> set[tuple[int, int]]:
    keys = set()
    for lifted, codes in rows:
        for (s, t), code in zip(lifted.tolist(), codes.tolist()):
            if CODE_CLASSES[code] == PointClass.EDGE:
                keys.add((s, t))
    return keys


def audit(algebra: AlgebraId, q: int, k: int) -> AuditReport:
    """Recount the images P_k(S_i) by class and compare with the closed forms.

    Returns:
        AuditReport: Observed and expected counts, with one message per mismatch.
    """
    algebra = AlgebraId(algebra)
    _check_cell(algebra, q, k)
    expected = formulas.audit_table(algebra, q, k)
    group, specs, images, shared, origins = _images(algebra, q, k)

    sets: list[SetAudit] = []
    lifted_rows: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    mismatches: list[str] = []
    for spec in specs:
        if spec.kind == FixSetKind.ORIGIN:
            continue
        s, t, L = images[spec.index]
        codes = classify_many(s, t, L, group)
        lifted_rows[spec.index] = (_lift(s, t, L, shared), codes)
        observed = _triple(codes)
        want = expected.per_set.get(spec.index, CountTriple())
        mismatches += _compare(f"S{spec.index}", observed, want)
        sets.append(
            SetAudit(
                index=spec.index,
                kind=spec.kind,
                moduli=list(spec.scaled(k).moduli),
                observed=observed,
                expected=want,
            )
        )

    stacked = np.concatenate(
        [np.column_stack([lifted, codes]) for lifted, codes in lifted_rows.values()],
        axis=0,
    )
    union_rows = np.unique(stacked, axis=0)
    observed_union = _triple(union_rows[:, 2], extra_interior=origins)
    mismatches += _compare("union", observed_union, expected.union)

    if algebra != AlgebraId.POWER:
        per_set_interior = sum(entry.observed.interior for entry in sets)
        if per_set_interior != observed_union.interior:
            mismatches.append(
                f"union interior {observed_union.interior} differs from the "
                f"per-set sum {per_set_interior}"
            )

    observed_epsilon: Optional[int] = None
    if algebra == AlgebraId.B2:
        inner = _edge_keys([lifted_rows[2], lifted_rows[3]])
        outer = _edge_keys([lifted_rows[1], lifted_rows[4]])
        observed_epsilon = len(inner - outer)
        if observed_epsilon != expected.epsilon:
            mismatches.append(
                f"epsilon: observed {observed_epsilon}, expected {expected.epsilon}"
            )

    count = int(len(union_rows)) + origins
    cardinality = formulas.cardinality(algebra, q, k)
    if count != cardinality:
        mismatches.append(f"oracle count {count} differs from formula {cardinality}")

    for message in mismatches:
        logger.warning(
            f"AUDIT MISMATCH: {message}",
            extra={"algebra": algebra.value, "q": q, "k": k},
        )
    return AuditReport(
        algebra=algebra,
        q=q,
        k=k,
        oracle_count=count,
        sets=sets,
        observed_union=observed_union,
        expected=expected,
        observed_epsilon=observed_epsilon,
        mismatches=mismatches,
    )
