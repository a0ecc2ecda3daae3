# folding/modules/torus/schemas.py

from math import gcd
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from folding.modules.formulas.schemas import AuditTable, CountTriple
from folding.modules.shared.enums import AlgebraId, FixSetKind, PointClass


class FixSetSpec(BaseModel):
    """One fixed-point parameter family S_i.

    GRID:   {(s/M1, t/M2) : 0 <= s < M1, 0 <= t < M2}
    LINE:   {(s/M, s*u/M) : 0 <= s < M}
    ORIGIN: the element 0 of F_q, present only for power maps.
    """

    model_config = ConfigDict(frozen=True)

    algebra: AlgebraId
    index: int = Field(..., ge=1)
    kind: FixSetKind
    moduli: Tuple[int, ...] = ()
    u: int = 0

    @model_validator(mode="after")
    def check_shape(self):
        expected = {FixSetKind.GRID: 2, FixSetKind.LINE: 1, FixSetKind.ORIGIN: 0}
        if len(self.moduli) != expected[self.kind]:
            raise ValueError(
                f"{self.kind.value} set needs {expected[self.kind]} moduli, "
                f"got {len(self.moduli)}"
            )
        if any(m < 1 for m in self.moduli):
            raise ValueError("Moduli must be positive.")
        return self

    @property
    def size(self) -> int:
        """Number of parameter points."""
        if self.kind == FixSetKind.ORIGIN:
            return 1
        if self.kind == FixSetKind.GRID:
            return self.moduli[0] * self.moduli[1]
        return self.moduli[0]

    def scaled(self, k: int) -> "FixSetSpec":
        """The family {k*x : x in S_i} written with reduced moduli."""
        reduced = tuple(m // gcd(m, k) for m in self.moduli)
        u = self.u % reduced[0] if self.kind == FixSetKind.LINE else self.u
        return self.model_copy(update={"moduli": reduced, "u": u})


class ClassifyReport(BaseModel):
    algebra: AlgebraId
    point: str
    canonical: str
    stabilizer: int
    point_class: PointClass


class SetAudit(BaseModel):
    """Observed and closed-form counts for one image P_k(S_i)."""

    index: int
    kind: FixSetKind
    moduli: List[int]
    observed: CountTriple
    expected: CountTriple


class AuditReport(BaseModel):
    algebra: AlgebraId
    q: int
    k: int
    oracle_count: int
    sets: List[SetAudit]
    observed_union: CountTriple
    expected: AuditTable
    observed_epsilon: Optional[int] = None
    mismatches: List[str] = []

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def per_set_observed(self) -> Dict[int, CountTriple]:
        return {entry.index: entry.observed for entry in self.sets}
