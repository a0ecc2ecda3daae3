# folding/modules/verification/schemas.py

from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from folding.core.config import settings
from folding.core.utils.helpers import is_prime_power
from folding.modules.shared.enums import AlgebraId, Method, OutputFormat

CSV_COLUMNS = ("q", "k", "algebra", "formula", "exhaustive", "oracle", "agree")


class SweepConfig(BaseModel):
    algebras: List[AlgebraId] = Field(..., min_length=1)
    qs: List[int] = Field(..., min_length=1)
    ks: List[int] = Field(..., min_length=1)
    methods: List[Method] = Field(..., min_length=1)
    output_format: OutputFormat = OutputFormat.CSV
    out: Optional[Path] = None
    workers: int = Field(default=1, ge=1)
    distinct_k: bool = False

    @field_validator("qs")
    @classmethod
    def validate_qs(cls, qs: List[int]) -> List[int]:
        bad = [q for q in qs if not is_prime_power(q)]
        if bad:
            raise ValueError(f"not prime powers: {bad}")
        return sorted(set(qs))

    @field_validator("ks")
    @classmethod
    def validate_ks(cls, ks: List[int]) -> List[int]:
        if any(k < 1 for k in ks):
            raise ValueError("k values must be positive")
        return sorted(set(ks))

    @field_validator("methods")
    @classmethod
    def validate_methods(cls, methods: List[Method]) -> List[Method]:
        return [m for m in Method if m in methods]

    @model_validator(mode="after")
    def check_guards(self) -> "SweepConfig":
        qmax = max(self.qs)
        if Method.ORACLE in self.methods and qmax > settings.MAX_ORACLE_Q:
            raise ValueError(
                f"oracle sweep needs q <= MAX_ORACLE_Q={settings.MAX_ORACLE_Q}"
            )
        if Method.EXHAUSTIVE in self.methods:
            for algebra in self.algebras:
                limit = (
                    settings.MAX_UNIVARIATE_Q
                    if algebra.is_univariate
                    else settings.MAX_BIVARIATE_Q
                )
                if qmax > limit:
                    raise ValueError(
                        f"exhaustive sweep of {algebra.value} needs q <= {limit}"
                    )
        return self


class SweepRow(BaseModel):
    q: int
    k: int
    algebra: AlgebraId
    formula: Optional[int] = None
    exhaustive: Optional[int] = None
    oracle: Optional[int] = None
    failed: List[Method] = []
    agree: bool

    def sort_key(self) -> tuple:
        return (self.q, self.k, self.algebra.value)

    def csv_cells(self) -> list[str]:
        def cell(method: Method) -> str:
            if method in self.failed:
                return "error"
            value = getattr(self, method.value)
            return "" if value is None else str(value)

        return [
            str(self.q),
            str(self.k),
            self.algebra.value,
            cell(Method.FORMULA),
            cell(Method.EXHAUSTIVE),
            cell(Method.ORACLE),
            "true" if self.agree else "false",
        ]


class SweepSummary(BaseModel):
    checked: int
    mismatched: int
    failed: int
    rows: List[SweepRow]

    @property
    def ok(self) -> bool:
        return self.mismatched == 0

    def line(self) -> str:
        return f"checked={self.checked} mismatched={self.mismatched}"
