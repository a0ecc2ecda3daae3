# folding/modules/weyl/service.py

import logging
from functools import lru_cache

import numpy as np

from folding.modules.shared.enums import AlgebraId
from folding.modules.weyl.models import (IDENTITY, ExponentVector, Matrix,
                                         OrbitGroup, TorusPoint)

logger = logging.getLogger("folding")

# Rows give the images of (sigma, tau): ((a, b), (c, d)) sends
# (sigma, tau) to (a*sigma + b*tau, c*sigma + d*tau).
SUBSTITUTIONS: dict[AlgebraId, tuple[Matrix, ...]] = {
    AlgebraId.POWER: (IDENTITY,),
    AlgebraId.A1: (
        IDENTITY,
        ((-1, 0), (0, 1)),  # sigma -> -sigma
    ),
    AlgebraId.A2: (
        IDENTITY,  # I     (sigma, tau)
        ((1, 0), (-1, -1)),  # II    (sigma, -sigma-tau)
        ((0, 1), (-1, -1)),  # III   (tau, -sigma-tau)
        ((0, 1), (1, 0)),  # IV    (tau, sigma)
        ((-1, -1), (1, 0)),  # V     (-sigma-tau, sigma)
        ((-1, -1), (0, 1)),  # VI    (-sigma-tau, tau)
    ),
    AlgebraId.B2: (
        IDENTITY,  # I     (sigma, tau)
        ((1, 0), (0, -1)),  # II    (sigma, -tau)
        ((-1, 0), (0, 1)),  # III   (-sigma, tau)
        ((-1, 0), (0, -1)),  # IV    (-sigma, -tau)
        ((0, 1), (1, 0)),  # V     (tau, sigma)
        ((0, -1), (1, 0)),  # VI    (-tau, sigma)
        ((0, 1), (-1, 0)),  # VII   (tau, -sigma)
        ((0, -1), (-1, 0)),  # VIII  (-tau, -sigma)
    ),
    AlgebraId.G2: (
        IDENTITY,  # I     (sigma, tau)
        ((0, 1), (1, 0)),  # II    (tau, sigma)
        ((-1, 0), (0, -1)),  # III   (-sigma, -tau)
        ((0, -1), (-1, 0)),  # IV    (-tau, -sigma)
        ((1, 0), (-1, -1)),  # V     (sigma, -sigma-tau)
        ((-1, -1), (1, 0)),  # VI    (-sigma-tau, sigma)
        ((-1, 0), (1, 1)),  # VII   (-sigma, sigma+tau)
        ((1, 1), (-1, 0)),  # VIII  (sigma+tau, -sigma)
        ((0, 1), (-1, -1)),  # IX    (tau, -sigma-tau)
        ((-1, -1), (0, 1)),  # X     (-sigma-tau, tau)
        ((0, -1), (1, 1)),  # XI    (-tau, sigma+tau)
        ((1, 1), (0, -1)),  # XII   (sigma+tau, -tau)
    ),
}


@lru_cache(maxsize=None)
def orbit_group(algebra: AlgebraId) -> OrbitGroup:
    """Return the substitution group of an algebra.

    Power maps carry the trivial group.
    """
    return OrbitGroup(algebra=algebra, elements=SUBSTITUTIONS[AlgebraId(algebra)])


def matmul(left: Matrix, right: Matrix) -> Matrix:
    (a, b), (c, d) = left
    (e, f), (g, h) = right
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def act_on_point(matrix: Matrix, point: TorusPoint) -> TorusPoint:
    (a, b), (c, d) = matrix
    return TorusPoint.of(
        a * point.sigma + b * point.tau, c * point.sigma + d * point.tau
    )


def act_on_exponent(matrix: Matrix, w: ExponentVector) -> ExponentVector:
    """Dual action w -> M^t w, under which orbit sums are invariant."""
    (a, b), (c, d) = matrix
    return ExponentVector(a * w.m + c * w.n, b * w.m + d * w.n)


def point_orbit(point: TorusPoint, group: OrbitGroup) -> set[TorusPoint]:
    return {act_on_point(matrix, point) for matrix in group.elements}


def canonicalize(point: TorusPoint, group: OrbitGroup) -> TorusPoint:
    """Lexicographically least member of the orbit of a torus point."""
    return min(point_orbit(point, group))


def stabilizer_size(point: TorusPoint, group: OrbitGroup) -> int:
    return len(group) // len(point_orbit(point, group))


def orbit(w: ExponentVector, group: OrbitGroup) -> frozenset[ExponentVector]:
    """Orbit of an exponent vector under the dual action."""
    w = ExponentVector(*w)
    return frozenset(act_on_exponent(matrix, w) for matrix in group.elements)


# ---------------------------
# Vectorized canonicalization
# ---------------------------
def canonicalize_many(
    sigma: np.ndarray, tau: np.ndarray, denominator: int, group: OrbitGroup
) -> tuple[np.ndarray, np.ndarray]:
    """Canonicalize the points (sigma/L, tau/L) with a shared denominator L.

    Args:
        sigma: Integer numerators of the first coordinates.
        tau: Integer numerators of the second coordinates.
        denominator: The common denominator L.
        group: Substitution group.

    Returns:
        tuple[np.ndarray, np.ndarray]: Canonical numerators in [0, L).
    """
    L = np.int64(denominator)
    sigma = np.asarray(sigma, dtype=np.int64) % L
    tau = np.asarray(tau, dtype=np.int64) % L
    best_key = None
    for (a, b), (c, d) in group.elements:
        s = (a * sigma + b * tau) % L
        t = (c * sigma + d * tau) % L
        key = s * L + t
        best_key = key if best_key is None else np.minimum(best_key, key)
    return best_key // L, best_key % L
