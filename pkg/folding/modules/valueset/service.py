# folding/modules/valueset/service.py

import logging
from typing import Optional

import numpy as np

from folding.core.config import settings
from folding.core.utils.exceptions import InvalidArgument, SizeExceeded
from folding.core.utils.helpers import require_positive
from folding.modules.field.models import FqField
from folding.modules.field.service import evaluate_components
from folding.modules.generator.service import prime_factor_maps
from folding.modules.invariants.models import BiPoly
from folding.modules.shared.enums import AlgebraId

logger = logging.getLogger("folding")

# Points evaluated per partition.
CHUNK_POINTS = 1 << 16


def _reduced_chain(
    algebra: AlgebraId, field: FqField, k: int
) -> list[tuple[BiPoly, ...]]:
    """Components of P_k as a chain of prime-index maps, reduced mod p once."""
    return [m.reduce_mod(field.p) for m in prime_factor_maps(algebra, k)]


def _apply_chain(field: FqField, chain, xs: np.ndarray, ys: np.ndarray):
    for components in chain:
        values = evaluate_components(field, components, xs, ys)
        xs, ys = values if len(values) == 2 else (values[0], ys)
    return xs, ys


def mark_partition(
    field: FqField, chain, first: np.ndarray, bivariate: bool = True
) -> np.ndarray:
    """Private bit array of the images of the points whose first coordinate is in `first`."""
    q = field.q
    first = np.asarray(first, dtype=np.int64)
    if bivariate:
        xs = np.repeat(first, q)
        ys = np.tile(np.arange(q, dtype=np.int64), len(first))
        u, v = _apply_chain(field, chain, xs, ys)
        bits = np.zeros(q * q, dtype=bool)
        bits[u * q + v] = True
    else:
        u, _ = _apply_chain(field, chain, first, np.zeros_like(first))
        bits = np.zeros(q, dtype=bool)
        bits[u] = True
    return bits


def partitions(q: int, rows: int) -> list[np.ndarray]:
    starts = range(0, q, rows)
    return [np.arange(s, min(s + rows, q), dtype=np.int64) for s in starts]


def image_size(
    algebra: AlgebraId, field: FqField, k: int, rows: Optional[int] = None
) -> int:
    """|P_k(F_q^2)| by exhaustive evaluation.

    Args:
        algebra: A2, B2 or G2.
        field: The field F_q.
        k: Positive integer multiplier.
        rows: First-coordinate values per partition; defaults to a fixed point budget.

    Raises:
        InvalidArgument: For univariate families or k < 1.
        SizeExceeded: If q exceeds settings.MAX_BIVARIATE_Q.
    """
    algebra = AlgebraId(algebra)
    if algebra.is_univariate:
        raise InvalidArgument(
            detail=f"{algebra.value} is univariate; use image_size_univariate."
        )
    require_positive("k", k)
    if field.q > settings.MAX_BIVARIATE_Q:
        raise SizeExceeded(
            detail=f"q={field.q} exceeds MAX_BIVARIATE_Q={settings.MAX_BIVARIATE_Q}."
        )
    chain = _reduced_chain(algebra, field, k)
    rows = rows or max(1, CHUNK_POINTS // field.q)
    bits = np.zeros(field.q * field.q, dtype=bool)
    for first in partitions(field.q, rows):
        bits |= mark_partition(field, chain, first)
    return int(bits.sum())


def image_size_univariate(
    algebra: AlgebraId, field: FqField, k: int, rows: Optional[int] = None
) -> int:
    """|P_k(F_q)| for power maps and Dickson polynomials by exhaustive evaluation.

    Raises:
        InvalidArgument: For bivariate families or k < 1.
        SizeExceeded: If q exceeds settings.MAX_UNIVARIATE_Q.
    """
    algebra = AlgebraId(algebra)
    if not algebra.is_univariate:
        raise InvalidArgument(detail=f"{algebra.value} is bivariate; use image_size.")
    require_positive("k", k)
    if field.q > settings.MAX_UNIVARIATE_Q:
        raise SizeExceeded(
            detail=f"q={field.q} exceeds MAX_UNIVARIATE_Q={settings.MAX_UNIVARIATE_Q}."
        )
    chain = _reduced_chain(algebra, field, k)
    rows = rows or CHUNK_POINTS
    bits = np.zeros(field.q, dtype=bool)
    for first in partitions(field.q, rows):
        bits |= mark_partition(field, chain, first, bivariate=False)
    return int(bits.sum())


def exhaustive_count(algebra: AlgebraId, field: FqField, k: int) -> int:
    algebra = AlgebraId(algebra)
    if algebra.is_univariate:
        return image_size_univariate(algebra, field, k)
    return image_size(algebra, field, k)
