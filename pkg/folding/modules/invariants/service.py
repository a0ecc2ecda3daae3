# folding/modules/invariants/service.py

import logging
import threading
from functools import lru_cache

import mpmath

from folding.core.utils.exceptions import NonInvariantInput, ReductionStall
from folding.modules.invariants.helpers import (LEADING_WEIGHTS,
                                                dominant_coordinates,
                                                generator, order_key)
from folding.modules.invariants.models import BiPoly, LaurentPoly
from folding.modules.shared.enums import AlgebraId
from folding.modules.weyl.models import ExponentVector, OrbitGroup
from folding.modules.weyl.service import (act_on_exponent, orbit,
                                          orbit_group)

logger = logging.getLogger("folding")

# algebra -> {dominant weight: reduced orbit sum}
_REDUCED: dict[AlgebraId, dict[ExponentVector, BiPoly]] = {}
_REDUCED_LOCK = threading.Lock()


def laurent_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Exact product of two Laurent polynomials."""
    return f * g


def orbit_sum(w: ExponentVector, group: OrbitGroup) -> LaurentPoly:
    """Sum of the monomials over the orbit of w, each with coefficient 1."""
    return _orbit_sum(ExponentVector(*w), group)


@lru_cache(maxsize=65536)
def _orbit_sum(w: ExponentVector, group: OrbitGroup) -> LaurentPoly:
    return LaurentPoly({v: 1 for v in orbit(w, group)})


def fundamental_invariants(algebra: AlgebraId) -> tuple[LaurentPoly, ...]:
    """The orbit sums phi_1 (and phi_2) of the leading fundamental weights."""
    group = orbit_group(algebra)
    return tuple(orbit_sum(lam, group) for lam in LEADING_WEIGHTS[algebra])


def is_invariant(f: LaurentPoly, group: OrbitGroup) -> bool:
    """True iff f is fixed by the dual action of every group element."""
    for matrix in group.elements:
        for w, coeff in f.items():
            if f[act_on_exponent(matrix, w)] != coeff:
                return False
    return True


# ---------------------------
# Reduced orbit sums
# ---------------------------
def _expansion_plan(
    kappa: ExponentVector, algebra: AlgebraId
) -> tuple[int, ExponentVector, list[tuple[ExponentVector, int]]]:
    """Split O(kappa) = x_i * O(nu) - sum c_rho * O(rho) with lower rho.

    Returns:
        tuple: (i, nu, [(rho, c_rho), ...]) for the chosen fundamental index i.
    """
    group = orbit_group(algebra)
    coords = dominant_coordinates(algebra, kappa)
    index = next(i for i, c in enumerate(coords) if c > 0)
    lam = LEADING_WEIGHTS[algebra][index]
    nu = ExponentVector(kappa.m - lam.m, kappa.n - lam.n)

    product = orbit_sum(nu, group) * orbit_sum(lam, group)
    if product[kappa] != 1:
        raise ReductionStall(
            detail=f"Leading coefficient of O({nu})*O({lam}) at {kappa} is "
            f"{product[kappa]}, expected 1."
        )
    residual = product - orbit_sum(kappa, group)
    ceiling = order_key(algebra, kappa)
    corrections = []
    while residual:
        rho = max(residual.terms, key=lambda w: order_key(algebra, w))
        if order_key(algebra, rho) >= ceiling:
            raise ReductionStall(
                detail=f"Expansion of O({kappa}) produced {rho} which is not lower."
            )
        if dominant_coordinates(algebra, rho) is None:
            raise ReductionStall(
                detail=f"Leading residual weight {rho} of O({kappa}) is not dominant."
            )
        coeff = residual[rho]
        corrections.append((rho, coeff))
        residual = residual - orbit_sum(rho, group).scale(coeff)
    return index, nu, corrections


def reduced_orbit_sum(kappa: ExponentVector, algebra: AlgebraId) -> BiPoly:
    """Polynomial Q in the fundamental invariants with Q(phi) = O(kappa).

    kappa must be dominant. Results are memoized per algebra; the fill is
    iterative so deep chains do not hit the recursion limit.
    """
    kappa = ExponentVector(*kappa)
    if dominant_coordinates(algebra, kappa) is None:
        raise NonInvariantInput(detail=f"{kappa} is not a dominant weight.")

    with _REDUCED_LOCK:
        memo = _REDUCED.setdefault(algebra, {ExponentVector(0, 0): BiPoly.constant(1)})
        if kappa in memo:
            return memo[kappa]

        plans: dict[ExponentVector, tuple] = {}
        stack = [kappa]
        while stack:
            top = stack[-1]
            if top in memo:
                stack.pop()
                continue
            if top not in plans:
                plans[top] = _expansion_plan(top, algebra)
            index, nu, corrections = plans[top]
            missing = [w for w in [nu, *(rho for rho, _ in corrections)] if w not in memo]
            if missing:
                stack.extend(missing)
                continue
            value = memo[nu] * generator(algebra, index)
            for rho, coeff in corrections:
                value = value - memo[rho].scale(coeff)
            memo[top] = value
            plans.pop(top)
            stack.pop()
        logger.debug(
            f"REDUCTION CACHE FILL: {algebra.value} up to {kappa}",
            extra={"algebra": algebra.value},
        )
        return memo[kappa]


def reduce_to_fundamentals(f: LaurentPoly, algebra: AlgebraId) -> BiPoly:
    """Rewrite an invariant Laurent polynomial as a polynomial in x = phi_1, y = phi_2.

    Args:
        f: Invariant Laurent polynomial with integer coefficients.
        algebra: Algebra whose substitution group f is invariant under.

    Returns:
        BiPoly: Q with Q(phi_1, phi_2) = f.

    Raises:
        NonInvariantInput: If f is not invariant or a leading term is not dominant.
        ReductionStall: If the leading term fails to strictly decrease.
    """
    group = orbit_group(algebra)
    if not is_invariant(f, group):
        raise NonInvariantInput(
            detail=f"Input is not invariant under the {algebra.value} substitutions."
        )

    result = BiPoly()
    residual = f
    previous = None
    while residual:
        mu = max(residual.terms, key=lambda w: order_key(algebra, w))
        key = order_key(algebra, mu)
        if previous is not None and key >= previous:
            raise ReductionStall(
                detail=f"Leading term {mu} did not decrease below {previous}."
            )
        if dominant_coordinates(algebra, mu) is None:
            raise NonInvariantInput(
                detail=f"Leading term {mu} is not a dominant weight of {algebra.value}."
            )
        coeff = residual[mu]
        result = result + reduced_orbit_sum(mu, algebra).scale(coeff)
        residual = residual - orbit_sum(mu, group).scale(coeff)
        previous = key
    return result


def substitute_fundamentals(poly: BiPoly, algebra: AlgebraId) -> LaurentPoly:
    """Expand poly(phi_1, phi_2) back into a Laurent polynomial."""
    phis = fundamental_invariants(algebra)
    phi_1 = phis[0]
    phi_2 = phis[1] if len(phis) > 1 else LaurentPoly.constant(1)
    result = LaurentPoly()
    powers_1: dict[int, LaurentPoly] = {0: LaurentPoly.constant(1)}
    powers_2: dict[int, LaurentPoly] = {0: LaurentPoly.constant(1)}
    for i in range(1, poly.degree_x + 1):
        powers_1[i] = powers_1[i - 1] * phi_1
    for j in range(1, poly.degree_y + 1):
        powers_2[j] = powers_2[j - 1] * phi_2
    for (i, j), coeff in poly.items():
        result = result + (powers_1[i] * powers_2[j]).scale(coeff)
    return result


# ---------------------------
# Numeric evaluation
# ---------------------------
def evaluate_laurent(f: LaurentPoly, sigma, tau):
    """Value of f at the real point (sigma, tau), in the current mpmath precision."""
    total = mpmath.mpc(0)
    for (m, n), coeff in f.items():
        total += coeff * mpmath.expjpi(2 * (m * sigma + n * tau))
    return total


def evaluate_fundamentals(algebra: AlgebraId, sigma, tau) -> tuple:
    return tuple(
        evaluate_laurent(phi, sigma, tau) for phi in fundamental_invariants(algebra)
    )
