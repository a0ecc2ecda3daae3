# folding/modules/generator/schemas.py

from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from folding.modules.invariants.helpers import rank
from folding.modules.invariants.models import BiPoly
from folding.modules.shared.enums import AlgebraId

Term = Tuple[int, int, str]


class PolyMap(BaseModel):
    """Folding map P_k: one component for Power/A1, two for A2/B2/G2."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    algebra: AlgebraId
    k: int = Field(..., ge=1)
    components: Tuple[BiPoly, ...]

    @model_validator(mode="after")
    def check_component_count(self) -> "PolyMap":
        expected = rank(self.algebra)
        if len(self.components) != expected:
            raise ValueError(
                f"{self.algebra.value} maps have {expected} component(s), "
                f"got {len(self.components)}."
            )
        return self

    @property
    def is_univariate(self) -> bool:
        return len(self.components) == 1

    def reduce_mod(self, p: int) -> Tuple[BiPoly, ...]:
        return tuple(component.reduce_mod(p) for component in self.components)


class PolyMapExport(BaseModel):
    """Coefficient table written by `gen`; coefficients are decimal strings."""

    algebra: AlgebraId
    k: int
    components: List[List[Term]]

    @classmethod
    def from_map(cls, poly_map: PolyMap) -> "PolyMapExport":
        return cls(
            algebra=poly_map.algebra,
            k=poly_map.k,
            components=[
                [(i, j, str(c)) for i, j, c in component.sorted_terms()]
                for component in poly_map.components
            ],
        )
