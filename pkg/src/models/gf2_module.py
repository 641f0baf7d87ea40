"""GF(2) 上的矩阵表示"""

from dataclasses import dataclass
from typing import Optional, Tuple

from src.core.errors.exceptions import ValidationError
from src.core.gf2.matrix import GF2Matrix
from src.models.perm_group import PermGroup


@dataclass(frozen=True)
class GF2Module:
    """
    Right GF(2)G-module: ``action[i]`` is the matrix of the i-th generator of
    ``group``. A module of a group without generators carries no matrices.
    """

    dimension: int
    action: Tuple[GF2Matrix, ...]
    group: Optional[PermGroup] = None

    def __post_init__(self):
        for matrix in self.action:
            if (matrix.nrows, matrix.ncols) != (self.dimension, self.dimension):
                raise ValidationError(
                    f"action matrix is {matrix.nrows}x{matrix.ncols}, expected {self.dimension}", field="action"
                )
        if self.group is not None and len(self.group.generators) != len(self.action):
            raise ValidationError("one action matrix per group generator is required", field="action")

    def generators_or_identity(self) -> Tuple[GF2Matrix, ...]:
        return self.action or (GF2Matrix.identity(self.dimension),)


@dataclass(frozen=True)
class CompositionFactor:
    """GF(2)-irreducible factor with endomorphism field GF(2^e)."""

    module: GF2Module
    endo_degree: int
    multiplicity: int

    @property
    def dimension(self) -> int:
        return self.module.dimension

    @property
    def absolutely_irreducible(self) -> bool:
        return self.endo_degree == 1

    def split_dims(self) -> Tuple[Tuple[int, int], ...]:
        """e Galois-conjugate absolutely irreducible pieces of dimension D/e over GF(2^e)."""
        return tuple((self.dimension // self.endo_degree, self.endo_degree) for _ in range(self.endo_degree))
