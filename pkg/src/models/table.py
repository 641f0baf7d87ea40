from typing import Tuple

from pydantic import BaseModel, ConfigDict

from src.core.exact import Decimal3


class TableRow(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree_threshold: int
    rd_lower: Decimal3


class DiscriminantTable(BaseModel):
    """Root-discriminant lower bounds by degree; rows are validated by the loader."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    grh: bool
    totally_real: bool
    rows: Tuple[TableRow, ...]
