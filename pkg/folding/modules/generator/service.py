# folding/modules/generator/service.py

import logging
import math
from functools import lru_cache

import mpmath
import numpy as np
from sympy import factorint

from folding.core.config import settings
from folding.core.utils.exceptions import InvalidArgument
from folding.core.utils.helpers import require_positive
from folding.modules.generator.schemas import PolyMap
from folding.modules.invariants.helpers import LEADING_WEIGHTS
from folding.modules.invariants.models import BiPoly
from folding.modules.invariants.service import (evaluate_fundamentals,
                                                orbit_sum,
                                                reduce_to_fundamentals)
from folding.modules.shared.enums import AlgebraId
from folding.modules.weyl.models import ExponentVector
from folding.modules.weyl.service import orbit_group

logger = logging.getLogger("folding")


def folding_poly(algebra: AlgebraId, k: int) -> PolyMap:
    """Build the folding map P_k of an algebra.

    Args:
        algebra: Folding family.
        k: Positive integer multiplier.

    Returns:
        PolyMap: Components satisfying Phi(k*sigma, k*tau) = P_k(Phi(sigma, tau)).

    Raises:
        InvalidArgument: If k < 1.
        ReductionStall: Propagated from the invariant reduction.
    """
    require_positive("k", k)
    return _folding_poly(AlgebraId(algebra), int(k))


@lru_cache(maxsize=None)
def _folding_poly(algebra: AlgebraId, k: int) -> PolyMap:
    logger.debug(
        f"GENERATOR CACHE MISS: {algebra.value} k={k}",
        extra={"algebra": algebra.value, "k": k},
    )
    if algebra == AlgebraId.POWER:
        return PolyMap(algebra=algebra, k=k, components=(BiPoly.monomial(k),))

    group = orbit_group(algebra)
    components = tuple(
        reduce_to_fundamentals(
            orbit_sum(ExponentVector(k * lam.m, k * lam.n), group), algebra
        )
        for lam in LEADING_WEIGHTS[algebra]
    )
    return PolyMap(algebra=algebra, k=k, components=components)


def compose(outer: PolyMap, inner: PolyMap) -> PolyMap:
    """Exact composition outer(inner(x, y)); the multipliers multiply."""
    if outer.algebra != inner.algebra:
        raise InvalidArgument(
            detail=f"Cannot compose {outer.algebra.value} with {inner.algebra.value}."
        )
    px = inner.components[0]
    py = inner.components[1] if len(inner.components) > 1 else BiPoly.y()
    return PolyMap(
        algebra=outer.algebra,
        k=outer.k * inner.k,
        components=tuple(c.substitute(px, py) for c in outer.components),
    )


def prime_factor_maps(algebra: AlgebraId, k: int) -> list[PolyMap]:
    """Maps P_p for the prime factors p of k, with multiplicity, largest first.

    Their composition in any order equals P_k.
    """
    if k == 1:
        return [folding_poly(algebra, 1)]
    primes = sorted(
        (p for p, e in factorint(k).items() for _ in range(e)), reverse=True
    )
    return [folding_poly(algebra, int(p)) for p in primes]


def _working_digits(poly_map: PolyMap) -> int:
    """Decimal digits lost to cancellation when evaluating the components."""
    group = orbit_group(poly_map.algebra)
    bound = max(len(orbit_sum(lam, group)) for lam in LEADING_WEIGHTS[poly_map.algebra])
    digits = 0.0
    for component in poly_map.components:
        total = sum(abs(c) for _, c in component.items()) + 1
        digits = max(
            digits,
            math.log10(total) + component.total_degree * math.log10(max(bound, 2)),
        )
    return int(math.ceil(digits)) + 5


def numeric_check(poly_map: PolyMap, samples: int) -> float:
    """Max deviation of P_k(Phi(s, t)) from Phi(k*s, k*t) over random real points.

    Args:
        poly_map: Map to check.
        samples: Number of pseudo-random points in [0, 1)^2.

    Returns:
        float: Largest componentwise absolute error.
    """
    rng = np.random.default_rng(settings.NUMERIC_SEED)
    points = rng.random((samples, 2))
    algebra, k = poly_map.algebra, poly_map.k
    worst = mpmath.mpf(0)
    with mpmath.workdps(settings.NUMERIC_DPS + _working_digits(poly_map)):
        for sigma, tau in points:
            sigma = mpmath.mpf(float(sigma))
            tau = mpmath.mpf(float(tau)) if not poly_map.is_univariate else mpmath.mpf(0)
            phis = evaluate_fundamentals(algebra, sigma, tau)
            targets = evaluate_fundamentals(algebra, k * sigma, k * tau)
            args = phis if len(phis) == 2 else (phis[0], 0)
            for component, target in zip(poly_map.components, targets):
                worst = max(worst, abs(component.evaluate(*args) - target))
    return float(worst)
