"""置换群数据模型（sympy PermutationGroup 的不可变包装）"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Set, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from src.config import get_max_perm_degree
from src.core.errors.exceptions import GroupTooLargeError, ValidationError
from src.utils.perm_codec import format_generators, identity, parse_cycles


@dataclass(frozen=True)
class PermGroup:
    """
    Permutation group on points 0..degree-1 given by generators (image tuples).

    The stabilizer chain lives in the wrapped sympy group and is built on
    first use.
    """

    degree: int
    generators: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        limit = get_max_perm_degree()
        if self.degree < 1:
            raise ValidationError(f"degree must be >= 1, got {self.degree}", field="degree")
        if self.degree > limit:
            raise GroupTooLargeError(f"degree {self.degree} exceeds {limit}", limit=limit, actual=self.degree)
        for g in self.generators:
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise ValidationError(f"{g} is not a permutation of {self.degree} points", field="generators")

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[str]) -> "PermGroup":
        return cls(degree, tuple(parse_cycles(text, degree) for text in cycles))

    @classmethod
    def from_sympy(cls, group: PermutationGroup, degree: int = None) -> "PermGroup":
        degree = degree or group.degree
        gens = tuple(tuple(g.array_form) for g in group.generators)
        gens = tuple(g + tuple(range(len(g), degree)) for g in gens)
        return cls(degree, tuple(g for g in gens if g != identity(degree)))

    @cached_property
    def sympy_group(self) -> PermutationGroup:
        perms = [Permutation(list(g)) for g in self.generators] or [Permutation(list(identity(self.degree)))]
        return PermutationGroup(perms)

    def order(self) -> int:
        return int(self.sympy_group.order())

    def contains(self, images: Sequence[int]) -> bool:
        return self.sympy_group.contains(Permutation(list(images)))

    def orbits(self) -> List[Set[int]]:
        """Orbits on all points, fixed points included, sorted by smallest point."""
        seen: Set[int] = set()
        result: List[Set[int]] = []
        for point in range(self.degree):
            if point in seen:
                continue
            orbit = {point}
            frontier = [point]
            while frontier:
                x = frontier.pop()
                for g in self.generators:
                    if g[x] not in orbit:
                        orbit.add(g[x])
                        frontier.append(g[x])
            seen |= orbit
            result.append(orbit)
        return result

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def cycle_strings(self) -> List[str]:
        return format_generators(self.generators)

    def __str__(self) -> str:
        return f"<{', '.join(self.cycle_strings()) or '()'}> on {self.degree} points"
