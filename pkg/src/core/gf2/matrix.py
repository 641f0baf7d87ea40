"""
Bit-packed linear algebra over GF(2).

Row vectors are Python ints (bit j is coordinate j); a matrix is a tuple of
row ints and acts on row vectors from the right, v -> v·A.
"""

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from src.config import get_meataxe_max_dimension
from src.core.errors.exceptions import ValidationError


def iter_bits(v: int):
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


def vec_mul(v: int, rows: Sequence[int]) -> int:
    """v·A for a row vector v."""
    acc = 0
    while v:
        low = v & -v
        acc ^= rows[low.bit_length() - 1]
        v ^= low
    return acc


@dataclass(frozen=True)
class GF2Matrix:
    nrows: int
    ncols: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        limit = get_meataxe_max_dimension()
        if self.nrows > limit or self.ncols > limit:
            raise ValidationError(f"matrix dimensions exceed {limit}", field="dimension")
        if len(self.rows) != self.nrows:
            raise ValidationError("row count does not match nrows", field="rows")

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "GF2Matrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def from_permutation(cls, images: Sequence[int]) -> "GF2Matrix":
        """Permutation matrix: e_i -> e_{g(i)}."""
        n = len(images)
        return cls(n, n, tuple(1 << images[i] for i in range(n)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "GF2Matrix":
        ncols = len(entries[0]) if entries else 0
        rows = tuple(sum((bit & 1) << j for j, bit in enumerate(row)) for row in entries)
        return cls(len(entries), ncols, rows)

    def to_lists(self) -> List[List[int]]:
        return [[(row >> j) & 1 for j in range(self.ncols)] for row in self.rows]

    def __mul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.ncols != other.nrows:
            raise ValidationError("dimension mismatch in product", field="matrix")
        return GF2Matrix(self.nrows, other.ncols, tuple(vec_mul(r, other.rows) for r in self.rows))

    def __add__(self, other: "GF2Matrix") -> "GF2Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValidationError("dimension mismatch in sum", field="matrix")
        return GF2Matrix(self.nrows, self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def apply(self, v: int) -> int:
        return vec_mul(v, self.rows)

    def transpose(self) -> "GF2Matrix":
        out = [0] * self.ncols
        for i, row in enumerate(self.rows):
            for j in iter_bits(row):
                out[j] |= 1 << i
        return GF2Matrix(self.ncols, self.nrows, tuple(out))

    def power(self, k: int) -> "GF2Matrix":
        result = GF2Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(row == 1 << i for i, row in enumerate(self.rows))

    def rank(self) -> int:
        return len(EchelonBasis.from_vectors(self.rows))

    def left_nullspace(self) -> List[int]:
        """Basis of {v : v·A = 0}."""
        shift = self.ncols
        low_mask = (1 << shift) - 1
        pivots: List[Tuple[int, int]] = []
        kernel: List[int] = []
        for i, row in enumerate(self.rows):
            aug = row | (1 << (shift + i))
            for pivot, vec in pivots:
                if aug >> pivot & 1:
                    aug ^= vec
            if aug & low_mask:
                pivots.append(((aug & low_mask).bit_length() - 1, aug))
            else:
                kernel.append(aug >> shift)
        return kernel

    def nullity(self) -> int:
        return self.nrows - self.rank()


def poly_eval(coefficients: int, matrix: GF2Matrix) -> GF2Matrix:
    """f(A) by Horner's rule; f is an int with bit i the coefficient of x^i."""
    n = matrix.nrows
    result = GF2Matrix.zero(n, n)
    ident = GF2Matrix.identity(n)
    for i in range(coefficients.bit_length() - 1, -1, -1):
        result = result * matrix
        if coefficients >> i & 1:
            result = result + ident
    return result


def poly_apply(coefficients: int, v: int, matrix: GF2Matrix) -> int:
    """v·f(A) without forming f(A)."""
    acc = 0
    for i in range(coefficients.bit_length() - 1, -1, -1):
        acc = matrix.apply(acc)
        if coefficients >> i & 1:
            acc ^= v
    return acc


class EchelonBasis:
    """
    Subspace basis kept in leading-bit echelon form.

    Every stored vector has a distinct pivot (its highest set bit) and no bits
    at the pivots of earlier vectors. Reducing against the vectors in
    descending pivot order clears every pivot bit.
    """

    def __init__(self):
        self.vectors: List[int] = []
        self._order: List[int] = []      # 按主元降序排列的下标
        self._keys: List[int] = []       # 对应的 -pivot，供 bisect 使用

    @classmethod
    def from_vectors(cls, vectors: Iterable[int]) -> "EchelonBasis":
        basis = cls()
        for v in vectors:
            basis.add(v)
        return basis

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def pivots(self) -> List[int]:
        return [self.vectors[i].bit_length() - 1 for i in self._order]

    def reduce(self, v: int) -> int:
        for i in self._order:
            vec = self.vectors[i]
            if v >> (vec.bit_length() - 1) & 1:
                v ^= vec
        return v

    def add(self, v: int) -> Optional[int]:
        """Add v; returns the new basis vector, or None if v is already in the span."""
        r = self.reduce(v)
        if not r:
            return None
        # 新向量的主元不与已有主元冲突，但旧向量可能在该位置有位
        pivot = r.bit_length() - 1
        key = -pivot
        position = bisect_left(self._keys, key)
        self._keys.insert(position, key)
        self._order.insert(position, len(self.vectors))
        self.vectors.append(r)
        return r

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def coordinates(self, v: int) -> int:
        """Bitmask over insertion indices of the vectors summing to v."""
        coords = 0
        for i in self._order:
            vec = self.vectors[i]
            if v >> (vec.bit_length() - 1) & 1:
                v ^= vec
                coords |= 1 << i
        if v:
            raise ValidationError("vector is not in the subspace", field="vector")
        return coords


def krylov_minimal_polynomial(v: int, matrix: GF2Matrix) -> int:
    """
    Minimal polynomial of v under A: the least monic f with v·f(A) = 0.

    Each reduced Krylov vector carries the polynomial that produced it, so the
    first dependency yields the answer directly.
    """
    if not v:
        return 1
    keys: List[int] = []
    entries: List[Tuple[int, int, int]] = []   # (pivot, vector, polynomial)
    current = v
    k = 0
    while True:
        r, combination = current, 1 << k
        for pivot, vec, poly in entries:
            if r >> pivot & 1:
                r ^= vec
                combination ^= poly
        if not r:
            return combination
        pivot = r.bit_length() - 1
        position = bisect_left(keys, -pivot)
        keys.insert(position, -pivot)
        entries.insert(position, (pivot, r, combination))
        current = matrix.apply(current)
        k += 1
