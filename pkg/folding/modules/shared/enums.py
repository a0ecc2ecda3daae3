# folding/modules/shared/enums.py

from enum import Enum


class AlgebraId(str, Enum):
    """Enumeration of the supported folding families."""

    POWER = "power"
    A1 = "a1"
    A2 = "a2"
    B2 = "b2"
    G2 = "g2"

    @property
    def is_univariate(self) -> bool:
        return self in (AlgebraId.POWER, AlgebraId.A1)

    @classmethod
    def parse(cls, value: str) -> "AlgebraId":
        from folding.core.utils.exceptions import InvalidArgument

        try:
            return cls(value.strip().lower())
        except ValueError:
            choices = ", ".join(a.value for a in cls)
            raise InvalidArgument(
                detail=f"Unknown algebra '{value}'. Choose one of: {choices}."
            )


class Method(str, Enum):
    """Enumeration of the value-set counting methods."""

    FORMULA = "formula"
    EXHAUSTIVE = "exhaustive"
    ORACLE = "oracle"


class OutputFormat(str, Enum):
    """Enumeration of machine-readable output formats."""

    JSON = "json"
    CSV = "csv"


class PointClass(str, Enum):
    """Position of a torus point relative to the fundamental region."""

    INTERIOR = "interior"
    EDGE = "edge"
    CORNER = "corner"


class FixSetKind(str, Enum):
    """Shape of a fixed-point parameter family."""

    GRID = "grid"  # {(s/M1, t/M2)}
    LINE = "line"  # {(s/M, s*u/M)}
    ORIGIN = "origin"  # the element 0 of F_q for power maps
