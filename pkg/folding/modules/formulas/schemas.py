# folding/modules/formulas/schemas.py

from typing import Dict, Optional

from pydantic import BaseModel, Field

from folding.modules.shared.enums import AlgebraId


class FormulaParams(BaseModel):
    """Reduced moduli m = M / gcd(M, k) of one (algebra, q, k) cell."""

    algebra: AlgebraId
    q: int = Field(..., ge=2)
    k: int = Field(..., ge=1)
    moduli: Dict[str, int]
    a: int
    b: Optional[int] = None
    c: Optional[int] = None
    d: Optional[int] = None
    a_tilde: Optional[int] = None
    c_tilde: Optional[int] = None

    def reduced(self) -> Dict[str, int]:
        names = ("a", "b", "c", "d", "a_tilde", "c_tilde")
        return {n: getattr(self, n) for n in names if getattr(self, n) is not None}


class CountTriple(BaseModel):
    """Interior / edge / corner counts; None where a table has no entry."""

    interior: Optional[int] = None
    edge: Optional[int] = None
    corner: Optional[int] = None


class AuditTable(BaseModel):
    """Closed-form counting tables for the images P_k(S_i) and their union."""

    algebra: AlgebraId
    q: int
    k: int
    per_set: Dict[int, CountTriple]
    union: CountTriple
    epsilon: Optional[int] = None
