# folding/modules/field/service.py

import logging
from functools import lru_cache
from typing import Sequence

import numpy as np
from sympy import ZZ, isprime
from sympy.polys.galoistools import gf_irreducible_p

from folding.core.config import settings
from folding.core.utils.exceptions import (InvalidArgument, NotPrime,
                                           SizeExceeded)
from folding.modules.field.helpers import index_to_digits
from folding.modules.field.models import FqElem, FqField
from folding.modules.generator.schemas import PolyMap
from folding.modules.invariants.models import BiPoly

logger = logging.getLogger("folding")


def make_field(p: int, n: int) -> FqField:
    """Construct F_{p^n} with the least monic irreducible modulus.

    Candidates x^n + c_{n-1} x^{n-1} + ... + c_0 are scanned in increasing
    order of sum c_i p^i.

    Raises:
        NotPrime: If p is not prime.
        InvalidArgument: If n < 1.
        SizeExceeded: If p^n exceeds settings.MAX_FIELD_ORDER.
    """
    if n < 1:
        raise InvalidArgument(detail=f"Extension degree must be positive, got {n}.")
    if not isprime(p):
        raise NotPrime(detail=f"p={p} is not a prime.")
    if p**n > settings.MAX_FIELD_ORDER:
        raise SizeExceeded(
            detail=f"q={p}^{n} exceeds MAX_FIELD_ORDER={settings.MAX_FIELD_ORDER}."
        )
    return _make_field(int(p), int(n))


@lru_cache(maxsize=64)
def _make_field(p: int, n: int) -> FqField:
    if n == 1:
        return FqField(p, 1, (0, 1))
    for code in range(p**n):
        low = index_to_digits(code, p, n)
        if gf_irreducible_p([1, *reversed(low)], p, ZZ):
            field = FqField(p, n, (*low, 1))
            logger.debug(f"Constructed field {field!r}")
            return field
    raise ArithmeticError(f"No irreducible polynomial of degree {n} over F_{p}.")


def elements(field: FqField) -> list[FqElem]:
    """All q elements in coordinate-lexicographic order."""
    return [FqElem(field, index) for index in range(field.q)]


# ---------------------------
# Polynomial evaluation
# ---------------------------
def evaluate_component(
    field: FqField, poly: BiPoly, xs: np.ndarray, ys: np.ndarray
) -> np.ndarray:
    """Evaluate a polynomial with coefficients already reduced mod p.

    Nested Horner: outer in y, inner in x.
    """
    xs = np.asarray(xs, dtype=np.int64)
    by_row: dict[int, dict[int, int]] = {}
    for (i, j), c in poly.items():
        by_row.setdefault(j, {})[i] = c

    result = np.zeros(xs.shape, dtype=np.int64)
    for j in range(poly.degree_y, -1, -1):
        if j != poly.degree_y:
            result = field.mul(result, ys)
        row = by_row.get(j)
        if not row:
            continue
        inner = np.zeros(xs.shape, dtype=np.int64)
        for i in range(max(row), -1, -1):
            if i != max(row):
                inner = field.mul(inner, xs)
            c = row.get(i, 0)
            if c:
                inner = field.add(inner, field.constant(c))
        result = field.add(result, inner)
    return result


def evaluate_components(
    field: FqField,
    components: Sequence[BiPoly],
    xs: np.ndarray,
    ys: np.ndarray = None,
) -> tuple[np.ndarray, ...]:
    if ys is None:
        ys = np.zeros_like(np.asarray(xs, dtype=np.int64))
    return tuple(evaluate_component(field, poly, xs, ys) for poly in components)


def eval_poly_map(
    poly_map: PolyMap, point: Sequence[FqElem]
) -> tuple[FqElem, ...]:
    """Evaluate the induced map of P over F_q at one point.

    Args:
        poly_map: Folding map with integer coefficients.
        point: (x, y) for bivariate maps, (x,) for univariate ones.

    Returns:
        tuple[FqElem, ...]: One element per component.
    """
    field = point[0].field
    xs = np.array([point[0].value], dtype=np.int64)
    ys = np.array([point[1].value if len(point) > 1 else 0], dtype=np.int64)
    values = evaluate_components(field, poly_map.reduce_mod(field.p), xs, ys)
    return tuple(FqElem(field, int(v[0])) for v in values)
