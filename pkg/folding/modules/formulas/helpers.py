# folding/modules/formulas/helpers.py

from fractions import Fraction

from folding.core.utils.exceptions import NonIntegralFormula
from folding.modules.shared.enums import AlgebraId


def unreduced_moduli(algebra: AlgebraId, q: int) -> dict[str, int]:
    """The moduli M whose reductions M / gcd(M, k) enter the cardinality formula."""
    if algebra == AlgebraId.POWER:
        return {"a": q - 1}
    if algebra == AlgebraId.A1:
        return {"a": q - 1, "b": q + 1}
    if algebra == AlgebraId.A2:
        return {"a": q - 1, "b": q * q - 1, "c": q * q + q + 1}
    if algebra == AlgebraId.B2:
        return {"a": q - 1, "b": q + 1, "c": q * q - 1, "d": q * q + 1}
    return {
        "a": q - 1,
        "a_tilde": q + 1,
        "b": q * q - 1,
        "c": q * q + q + 1,
        "c_tilde": q * q - q + 1,
    }


def divides(d: int, m: int) -> bool:
    return m % d == 0


def as_integer(value: Fraction, what: str) -> int:
    """Return an exact integer or raise NonIntegralFormula."""
    if value.denominator != 1:
        raise NonIntegralFormula(detail=f"{what} evaluated to {value}.")
    return int(value)
