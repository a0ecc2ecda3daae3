# folding/modules/invariants/helpers.py

from typing import Optional

from folding.modules.invariants.models import BiPoly
from folding.modules.shared.enums import AlgebraId
from folding.modules.weyl.models import ExponentVector

# Leading (highest) weights of the fundamental orbit sums phi_1, phi_2.
LEADING_WEIGHTS: dict[AlgebraId, tuple[ExponentVector, ...]] = {
    AlgebraId.POWER: (ExponentVector(1, 0),),
    AlgebraId.A1: (ExponentVector(1, 0),),
    AlgebraId.A2: (ExponentVector(1, 0), ExponentVector(1, 1)),
    AlgebraId.B2: (ExponentVector(1, 0), ExponentVector(1, 1)),
    AlgebraId.G2: (ExponentVector(1, 1), ExponentVector(2, 1)),
}

# Coefficients (h_m, h_n) of the height functional h(m, n) = h_m*m + h_n*n.
HEIGHT_FUNCTIONALS: dict[AlgebraId, tuple[int, int]] = {
    AlgebraId.POWER: (1, 0),
    AlgebraId.A1: (1, 0),
    AlgebraId.A2: (2, 1),
    AlgebraId.B2: (2, 1),
    AlgebraId.G2: (3, 2),
}


def rank(algebra: AlgebraId) -> int:
    return len(LEADING_WEIGHTS[algebra])


def order_key(algebra: AlgebraId, w: ExponentVector) -> tuple[int, int, int]:
    """Term order: height first, ties broken lexicographically."""
    hm, hn = HEIGHT_FUNCTIONALS[algebra]
    return (hm * w[0] + hn * w[1], w[0], w[1])


def dominant_coordinates(
    algebra: AlgebraId, w: ExponentVector
) -> Optional[tuple[int, ...]]:
    """Express w as a nonnegative combination of the leading weights.

    Returns:
        Optional[tuple[int, ...]]: The coefficients, or None when w is not dominant.
    """
    m, n = w
    if rank(algebra) == 1:
        coords = (m,) if n == 0 else (-1,)
    elif algebra == AlgebraId.G2:
        coords = (2 * n - m, m - n)
    else:
        coords = (m - n, n)
    if any(c < 0 for c in coords):
        return None
    return coords


def weight_from_coordinates(
    algebra: AlgebraId, coords: tuple[int, ...]
) -> ExponentVector:
    m = sum(c * lam.m for c, lam in zip(coords, LEADING_WEIGHTS[algebra]))
    n = sum(c * lam.n for c, lam in zip(coords, LEADING_WEIGHTS[algebra]))
    return ExponentVector(m, n)


def generator(algebra: AlgebraId, index: int) -> BiPoly:
    """The variable standing for the index-th fundamental invariant."""
    return BiPoly.x() if index == 0 else BiPoly.y()
