# folding/modules/weyl/models.py

from fractions import Fraction
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict

from folding.modules.shared.enums import AlgebraId

Matrix = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix = ((1, 0), (0, 1))


class ExponentVector(NamedTuple):
    """Weight m*sigma + n*tau, i.e. the exponent of e^{2 pi i (m sigma + n tau)}."""

    m: int
    n: int


class TorusPoint(NamedTuple):
    """Exact rational point (sigma, tau) of the torus R^2 / Z^2.

    Build through `TorusPoint.of` so both components land in [0, 1).
    """

    sigma: Fraction
    tau: Fraction

    @classmethod
    def of(cls, sigma, tau=0) -> "TorusPoint":
        return cls(Fraction(sigma) % 1, Fraction(tau) % 1)

    def scaled(self, k: int) -> "TorusPoint":
        return TorusPoint.of(self.sigma * k, self.tau * k)

    def __str__(self) -> str:
        return f"({self.sigma}, {self.tau})"


class OrbitGroup(BaseModel):
    """Finite group of integer substitutions acting on the column (sigma, tau)."""

    model_config = ConfigDict(frozen=True)

    algebra: AlgebraId
    elements: tuple[Matrix, ...]

    def __len__(self) -> int:
        return len(self.elements)
