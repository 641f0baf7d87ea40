"""迭代降界的请求、行与结论"""

from fractions import Fraction
from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from src.core.errors.exceptions import ConfigurationError, ValidationError
from src.core.exact import Decimal3
from src.models.sieve import DegreeConstraints
from src.models.table import DiscriminantTable


def max_p_length(d: int) -> int:
    """⌈log₂ d⌉: p-length bound for a finite subgroup of GL_d."""
    if d < 1:
        raise ValidationError(f"dimension must be >= 1, got {d}", field="max_dimension")
    return (d - 1).bit_length()


class ProofRequest(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    p: int
    p_length: int
    grh: bool
    totally_real: bool
    constraints: DegreeConstraints
    table: DiscriminantTable
    max_dimension: int = 2

    @model_validator(mode="after")
    def _check(self) -> "ProofRequest":
        if self.p_length < 0:
            raise ValidationError("p-length must be >= 0", field="p_length")
        if (self.table.grh, self.table.totally_real) != (self.grh, self.totally_real):
            raise ConfigurationError(
                f"table {self.table.name} does not match grh={self.grh} totally_real={self.totally_real}",
                config_key="TABLES_DIR"
            )
        if self.constraints.p != self.p:
            raise ValidationError(
                f"constraints {self.constraints.name} are for p={self.constraints.p}", field="preset"
            )
        if self.p_length > max_p_length(self.max_dimension):
            raise ValidationError(
                f"p-length {self.p_length} exceeds ceil(log2 {self.max_dimension})",
                field="max_dimension"
            )
        return self

    def summary(self) -> dict:
        return {
            "p": self.p,
            "p_length": self.p_length,
            "grh": self.grh,
            "totally_real": self.totally_real,
            "preset": self.constraints.name,
            "table": self.table.name,
            "max_dimension": self.max_dimension,
        }


class IterationRow(BaseModel):
    """
    One step of the bound-lowering loop.

    ``nmax_in`` is None for the unbounded first row, which also carries no
    minimum.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nmax_in: Optional[int]
    min_value: Optional[Fraction] = None
    argmin_degree: Optional[int] = None
    c_upper: Decimal3
    rd_upper: Decimal3
    nmax_out: int


class ProofOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["empty", "residual"]
    residual: Tuple[int, ...] = ()

    @classmethod
    def empty(cls) -> "ProofOutcome":
        return cls(kind="empty")

    @classmethod
    def residual_set(cls, degrees) -> "ProofOutcome":
        return cls(kind="residual", residual=tuple(degrees))

    @property
    def exit_code(self) -> int:
        return 0 if self.kind == "empty" else 2
