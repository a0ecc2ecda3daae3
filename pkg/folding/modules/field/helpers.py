# folding/modules/field/helpers.py

import numpy as np
from sympy import ZZ
from sympy.polys.galoistools import gf_mul, gf_pow_mod, gf_rem


def index_to_digits(index: int, p: int, n: int) -> list[int]:
    """Coordinates (c_0, ..., c_{n-1}) of the element with index sum c_i p^i."""
    digits = []
    for _ in range(n):
        index, digit = divmod(index, p)
        digits.append(digit)
    return digits


def digits_to_index(digits, p: int) -> int:
    index = 0
    for digit in reversed(list(digits)):
        index = index * p + int(digit)
    return index


def index_to_gf(index: int, p: int, n: int) -> list[int]:
    """Dense coefficient list, highest degree first, as galoistools expects."""
    coeffs = index_to_digits(index, p, n)[::-1]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    return coeffs


def gf_to_index(coeffs: list[int], p: int) -> int:
    index = 0
    for c in coeffs:
        index = index * p + int(c) % p
    return index


def mulmod_index(a: int, b: int, modulus: list[int], p: int, n: int) -> int:
    """Product of two field elements given by index, reduced by the modulus."""
    product = gf_mul(index_to_gf(a, p, n), index_to_gf(b, p, n), p, ZZ)
    return gf_to_index(gf_rem(product, modulus, p, ZZ), p)


def powmod_index(a: int, e: int, modulus: list[int], p: int, n: int) -> int:
    return gf_to_index(gf_pow_mod(index_to_gf(a, p, n), e, modulus, p, ZZ), p)


# ---------------------------
# Vectorized digit helpers
# ---------------------------
def split_digits(values: np.ndarray, p: int, n: int) -> np.ndarray:
    """Digit matrix of shape (len(values), n), least significant first."""
    values = np.asarray(values, dtype=np.int64)
    digits = np.empty(values.shape + (n,), dtype=np.int64)
    for i in range(n):
        values, digits[..., i] = np.divmod(values, p)
    return digits


def join_digits(digits: np.ndarray, p: int) -> np.ndarray:
    n = digits.shape[-1]
    weights = p ** np.arange(n, dtype=np.int64)
    return (digits * weights).sum(axis=-1)
