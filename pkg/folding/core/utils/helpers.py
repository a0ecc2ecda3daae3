# folding/core/utils/helpers.py

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable

from sympy import factorint

from folding.core.utils.exceptions import InvalidArgument, NotPrimePower


def prime_mark(m: int) -> int:
    """gcd(m, 2), written m' in the cardinality tables."""
    return gcd(m, 2)


def dprime_mark(m: int) -> int:
    """gcd(m, 3), written m'' in the cardinality tables."""
    return gcd(m, 3)


def reduced_modulus(modulus: int, k: int) -> int:
    """Return modulus / gcd(modulus, k)."""
    return modulus // gcd(modulus, k)


def lcm_all(values: Iterable[int]) -> int:
    return reduce(lcm, values, 1)


def prime_power_parts(q: int) -> tuple[int, int]:
    """Split a prime power q into (p, n).

    Raises:
        NotPrimePower: If q is not p**n for a prime p and n >= 1.
    """
    if q < 2:
        raise NotPrimePower(detail=f"q={q} is not a prime power.")
    factors = factorint(q)
    if len(factors) != 1:
        raise NotPrimePower(detail=f"q={q} is not a prime power.")
    ((p, n),) = factors.items()
    return int(p), int(n)


def is_prime_power(q: int) -> bool:
    try:
        prime_power_parts(q)
    except NotPrimePower:
        return False
    return True


def prime_powers_between(qmin: int, qmax: int) -> list[int]:
    """All prime powers q with qmin <= q <= qmax, ascending."""
    return [q for q in range(max(qmin, 2), qmax + 1) if is_prime_power(q)]


def parse_fraction(text: str) -> Fraction:
    """Parse "s/t" or an integer into an exact rational.

    Raises:
        InvalidArgument: If the text is not a rational with nonzero denominator.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidArgument(detail=f"'{text}' is not a rational number.")


def require_positive(name: str, value: int) -> int:
    if value < 1:
        raise InvalidArgument(detail=f"{name} must be a positive integer, got {value}.")
    return value
