# folding/modules/valueset/schemas.py

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from folding.modules.shared.enums import AlgebraId, Method


class ValueSetReport(BaseModel):
    """One value-set cardinality, tagged with the method that produced it."""

    algebra: AlgebraId
    q: int = Field(..., ge=2)
    k: int = Field(..., ge=1)
    cardinality: int
    method: Method

    @model_validator(mode="after")
    def check_bounds(self) -> "ValueSetReport":
        ceiling = self.q if self.algebra.is_univariate else self.q**2
        if not 1 <= self.cardinality <= ceiling:
            raise ValueError(
                f"cardinality {self.cardinality} outside [1, {ceiling}] "
                f"for {self.algebra.value} over F_{self.q}"
            )
        return self

    def line(self) -> str:
        return (
            f"{self.algebra.value} {self.q} {self.k} "
            f"{self.method.value} {self.cardinality}"
        )


class CountReport(BaseModel):
    """All methods run on one (algebra, q, k) cell."""

    algebra: AlgebraId
    q: int
    k: int
    reports: List[ValueSetReport]
    failures: Dict[Method, str] = {}

    @property
    def agree(self) -> bool:
        values = {report.cardinality for report in self.reports}
        return not self.failures and len(values) <= 1

    def value(self, method: Method) -> Optional[int]:
        for report in self.reports:
            if report.method == method:
                return report.cardinality
        return None
