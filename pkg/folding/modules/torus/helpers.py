# folding/modules/torus/helpers.py

from fractions import Fraction

import numpy as np

from folding.modules.shared.enums import AlgebraId, FixSetKind, PointClass
from folding.modules.torus.schemas import FixSetSpec
from folding.modules.weyl.models import OrbitGroup, TorusPoint

F = Fraction

# Canonical representatives of the corner orbits.
CORNERS: dict[AlgebraId, tuple[TorusPoint, ...]] = {
    AlgebraId.POWER: (),
    AlgebraId.A1: (TorusPoint.of(0), TorusPoint.of(F(1, 2))),
    AlgebraId.A2: (
        TorusPoint.of(0, 0),
        TorusPoint.of(F(1, 3), F(1, 3)),
        TorusPoint.of(F(2, 3), F(2, 3)),
    ),
    AlgebraId.B2: (
        TorusPoint.of(0, 0),
        TorusPoint.of(F(1, 2), F(1, 2)),
        TorusPoint.of(0, F(1, 2)),
    ),
    AlgebraId.G2: (
        TorusPoint.of(0, 0),
        TorusPoint.of(F(1, 3), F(1, 3)),
        TorusPoint.of(0, F(1, 2)),
    ),
}

CLASS_CODES = {PointClass.INTERIOR: 0, PointClass.EDGE: 1, PointClass.CORNER: 2}
CODE_CLASSES = {code: cls for cls, code in CLASS_CODES.items()}


def set_numerators(spec: FixSetSpec) -> tuple[np.ndarray, np.ndarray, int]:
    """All points of a GRID or LINE family as numerators over one denominator."""
    if spec.kind == FixSetKind.GRID:
        m1, m2 = spec.moduli
        L = int(np.lcm(m1, m2))
        s = np.repeat(np.arange(m1, dtype=np.int64) * (L // m1), m2)
        t = np.tile(np.arange(m2, dtype=np.int64) * (L // m2), m1)
        return s, t, L
    if spec.kind == FixSetKind.LINE:
        (m,) = spec.moduli
        s = np.arange(m, dtype=np.int64)
        return s, (s * (spec.u % m)) % m, m
    raise ValueError("The origin marker has no torus points.")


def corner_keys(algebra: AlgebraId, denominator: int) -> set[tuple[int, int]]:
    """Numerator pairs of the corners representable over the given denominator."""
    keys = set()
    for corner in CORNERS[algebra]:
        s, t = corner.sigma * denominator, corner.tau * denominator
        if s.denominator == 1 and t.denominator == 1:
            keys.add((int(s), int(t)))
    return keys


def stabilizer_sizes(
    s: np.ndarray, t: np.ndarray, denominator: int, group: OrbitGroup
) -> np.ndarray:
    L = np.int64(denominator)
    sizes = np.zeros(s.shape, dtype=np.int64)
    for (a, b), (c, d) in group.elements:
        fixed = ((a * s + b * t) % L == s) & ((c * s + d * t) % L == t)
        sizes += fixed
    return sizes


def classify_many(
    s: np.ndarray, t: np.ndarray, denominator: int, group: OrbitGroup
) -> np.ndarray:
    """Class codes of canonical points (s/L, t/L); see CLASS_CODES."""
    codes = np.zeros(s.shape, dtype=np.int64)
    if group.algebra == AlgebraId.POWER:
        return codes
    special = stabilizer_sizes(s, t, denominator, group) > 1
    codes[special] = CLASS_CODES[PointClass.EDGE]
    corners = corner_keys(group.algebra, denominator)
    for position in np.flatnonzero(special):
        if (int(s[position]), int(t[position])) in corners:
            codes[position] = CLASS_CODES[PointClass.CORNER]
    return codes
