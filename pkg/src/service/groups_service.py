"""
置换群引擎：阶、Sylow 子群、Frattini 滤链与 p-长度、p-正则共轭类计数、
子群共轭类枚举，以及 18 阶非交换群的排除。
"""

import operator
import threading
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel
from sympy import primefactors
from sympy.combinatorics.named_groups import AlternatingGroup, DihedralGroup

from src.config import get_max_subgroup_order
from src.core.errors.exceptions import GroupTooLargeError, NotAPGroupError, ValidationError
from src.models.perm_group import PermGroup
from src.utils.logging import get_logger, log_computation
from src.utils.perm_codec import identity

logger = get_logger(__name__)

REASON_P_LENGTH = "3-length 1: the 3-Sylow subgroup is elementary abelian"
REASON_BRAUER = "Brauer count 2: both irreducible mod-3 modules are 1-dimensional"


# ---------------------------------------------------------------------------
# 常用群
# ---------------------------------------------------------------------------

def _cycle(degree: int, points: Sequence[int]) -> Tuple[int, ...]:
    images = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        images[a] = b
    return tuple(images)


def symmetric_group(n: int) -> PermGroup:
    """S_n generated by the transposition (1,2) and the n-cycle."""
    if n < 2:
        return PermGroup(max(n, 1))
    if n == 2:
        return PermGroup(2, (_cycle(2, [0, 1]),))
    return PermGroup(n, (_cycle(n, [0, 1]), _cycle(n, list(range(n)))))


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup(max(n, 1))
    return PermGroup.from_sympy(AlternatingGroup(n), n)


def cyclic_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(1)
    return PermGroup(n, (_cycle(n, list(range(n))),))


def dihedral_group(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on n >= 3 points."""
    if n < 3:
        raise ValidationError("dihedral groups are realized on n >= 3 points", field="n")
    return PermGroup.from_sympy(DihedralGroup(n), n)


def generalized_dihedral(p: int, m: int) -> PermGroup:
    """(Z/p)^m ⋊ Z/2 with inversion, on m blocks of p points."""
    degree = m * p
    gens = [_cycle(degree, [block * p + k for k in range(p)]) for block in range(m)]
    inversion = tuple(block * p + (-k) % p for block in range(m) for k in range(p))
    return PermGroup(degree, tuple(gens) + (inversion,))


def direct_product(first: PermGroup, second: PermGroup) -> PermGroup:
    """Disjoint union of supports."""
    degree = first.degree + second.degree
    shift = first.degree
    left = tuple(g + tuple(range(shift, degree)) for g in first.generators)
    right = tuple(tuple(range(shift)) + tuple(x + shift for x in g) for g in second.generators)
    return PermGroup(degree, left + right)


# ---------------------------------------------------------------------------
# 元素表与子群枚举
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupClass:
    representative: PermGroup
    order: int
    size: int
    orbit_count: int


class _ElementTable:
    """
    Elements of G sorted as image tuples (identity has index 0) with a full
    multiplication table; mul[a][b] is "a then b".
    """

    def __init__(self, group: PermGroup):
        self.degree = group.degree
        self.elements: List[Tuple[int, ...]] = sorted(
            tuple(p.array_form) + tuple(range(len(p.array_form), group.degree))
            for p in group.sympy_group.generate()
        )
        self.index: Dict[Tuple[int, ...], int] = {e: i for i, e in enumerate(self.elements)}
        self.mul: List[List[int]] = [self._row(a) for a in self.elements]
        self.inv: List[int] = [row.index(0) for row in self.mul]
        self.generator_indices = [self.index[g] for g in group.generators if g in self.index]
        self._conj_maps = [
            [self.mul[self.mul[self.inv[s]][k]][s] for k in range(len(self.elements))]
            for s in self.generator_indices
        ]

    def _row(self, a: Tuple[int, ...]) -> List[int]:
        if self.degree == 1:
            return [0 for _ in self.elements]
        pick = operator.itemgetter(*a)
        return [self.index[pick(b)] for b in self.elements]

    @staticmethod
    def mask_of(indices: Sequence[int]) -> int:
        mask = 0
        for k in indices:
            mask |= 1 << k
        return mask

    def cyclic_prime_power_subgroups(self) -> List[Tuple[int, int]]:
        """(generator index, mask) of every nontrivial cyclic subgroup of prime-power order."""
        found: Dict[int, int] = {}
        for a in range(1, len(self.elements)):
            powers = [0]
            x = a
            while x != 0:
                powers.append(x)
                x = self.mul[x][a]
            if len(primefactors(len(powers))) != 1:
                continue
            mask = self.mask_of(powers)
            found.setdefault(mask, a)
        return sorted((g, mask) for mask, g in found.items())

    def extend(self, elements: List[int], mask: int, gens: List[int], g: int) -> Tuple[List[int], int, List[int]]:
        """Dimino step: closure of <H, g> as a union of right cosets of H."""
        if mask >> g & 1:
            return elements, mask, gens
        mul = self.mul
        base = list(elements)
        result = list(elements)
        new_gens = gens + [g]
        reps = [0]

        def add_coset(e: int) -> None:
            nonlocal mask
            coset = [mul[h][e] for h in base]
            result.extend(coset)
            for x in coset:
                mask |= 1 << x
            reps.append(e)

        add_coset(g)
        position = 1
        while position < len(reps):
            r = reps[position]
            for s in new_gens:
                e = mul[r][s]
                if not mask >> e & 1:
                    add_coset(e)
            position += 1
        return result, mask, new_gens

    def closure(self, gens: Sequence[int]) -> Tuple[List[int], int, List[int]]:
        elements, mask, used = [0], 1, []
        for g in gens:
            elements, mask, used = self.extend(elements, mask, used, g)
        return elements, mask, used

    def conjugates(self, elements: List[int], mask: int) -> Dict[int, List[int]]:
        orbit = {mask: elements}
        frontier = [elements]
        while frontier:
            current = frontier.pop()
            for conj in self._conj_maps:
                image = [conj[k] for k in current]
                image_mask = self.mask_of(image)
                if image_mask not in orbit:
                    orbit[image_mask] = image
                    frontier.append(image)
        return orbit

    def orbit_count(self, elements: Sequence[int]) -> int:
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k in elements:
            for point, image in enumerate(self.elements[k]):
                a, b = find(point), find(image)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return len({find(x) for x in range(self.degree)})

    @staticmethod
    def bits(mask: int) -> Tuple[int, ...]:
        out = []
        position = 0
        while mask:
            if mask & 1:
                out.append(position)
            mask >>= 1
            position += 1
        return tuple(out)


def _enumerate_subgroup_classes(group: PermGroup) -> List[SubgroupClass]:
    table = _ElementTable(group)
    cyclics = table.cyclic_prime_power_subgroups()

    seen: Dict[int, int] = {}
    classes: List[dict] = []

    def register(elements: List[int], mask: int, gens: List[int]) -> None:
        orbit = table.conjugates(elements, mask)
        class_id = len(classes)
        for conjugate in orbit:
            seen[conjugate] = class_id
        classes.append({"elements": elements, "mask": mask, "gens": gens, "conjugates": list(orbit)})

    register([0], 1, [])
    position = 0
    # 每个子群都由素数幂阶循环子群生成；只需从各类代表出发逐个添加
    while position < len(classes):
        current = classes[position]
        for g, cyclic_mask in cyclics:
            if cyclic_mask & ~current["mask"] == 0:
                continue
            elements, mask, gens = table.extend(current["elements"], current["mask"], current["gens"], g)
            if mask not in seen:
                register(elements, mask, gens)
        position += 1

    result: List[Tuple[tuple, SubgroupClass]] = []
    for entry in classes:
        canonical = min(table.bits(m) for m in entry["conjugates"])
        order = len(canonical)
        orbit_count = table.orbit_count(entry["elements"])

        # 代表元取字典序最小的共轭，生成元贪心选取
        gens: List[int] = []
        closure_mask = 1
        closure_elements, used = [0], []
        for k in canonical[1:]:
            if not closure_mask >> k & 1:
                closure_elements, closure_mask, used = table.extend(closure_elements, closure_mask, used, k)
                gens.append(k)
        representative = PermGroup(group.degree, tuple(table.elements[k] for k in gens))
        # 同阶时轨道多（非传递）的排前面，再按规范编码；S6 搜索结果的列表顺序依赖这一点
        result.append((
            (order, -orbit_count, canonical),
            SubgroupClass(representative=representative, order=order,
                          size=len(entry["conjugates"]), orbit_count=orbit_count),
        ))

    result.sort(key=lambda item: item[0])
    return [item[1] for item in result]


@lru_cache(maxsize=1)
def _s6_classes() -> Tuple[SubgroupClass, ...]:
    start = time.perf_counter()
    classes = tuple(_enumerate_subgroup_classes(symmetric_group(6)))
    log_computation("groups.s6_subgroup_classes", {"degree": 6},
                    result={"classes": len(classes), "subgroups": sum(c.size for c in classes)},
                    elapsed=time.perf_counter() - start)
    return classes


class EliminationResult(BaseModel):
    description: str
    order: int
    generators: List[str]
    sylow_p_length: int
    brauer_count: int
    reason: Optional[str] = None

    @property
    def eliminated(self) -> bool:
        return self.reason is not None


class GroupsService:
    """置换群计算服务"""

    def __init__(self):
        self._subgroup_cache: Dict[PermGroup, List[SubgroupClass]] = {}
        self._lock = threading.Lock()

    def order(self, group: PermGroup) -> int:
        return group.order()

    def is_transitive(self, group: PermGroup) -> bool:
        return group.is_transitive()

    def orbits(self, group: PermGroup):
        return group.orbits()

    def elements(self, group: PermGroup) -> Tuple[Tuple[int, ...], ...]:
        return tuple(sorted(
            tuple(p.array_form) + tuple(range(len(p.array_form), group.degree))
            for p in group.sympy_group.generate()
        ))

    def sylow(self, group: PermGroup, p: int) -> PermGroup:
        if group.order() % p != 0:
            return PermGroup(group.degree)
        return PermGroup.from_sympy(group.sympy_group.sylow_subgroup(p), group.degree)

    def _check_p_group(self, group: PermGroup, p: int) -> None:
        order = group.order()
        if order != 1 and primefactors(order) != [p]:
            raise NotAPGroupError(order, p)

    def frattini(self, group: PermGroup, p: int) -> PermGroup:
        """Φ(P) = ⟨[P,P], g^p for generators g⟩ for a p-group P."""
        self._check_p_group(group, p)
        derived = group.sympy_group.derived_subgroup()
        gens = [tuple(g.array_form) for g in derived.generators]
        gens += [tuple((g ** p).array_form) for g in group.sympy_group.generators]
        ident = identity(group.degree)
        gens = [g + tuple(range(len(g), group.degree)) for g in gens]
        return PermGroup(group.degree, tuple(dict.fromkeys(g for g in gens if g != ident)))

    def p_length(self, group: PermGroup, p: int) -> int:
        """Depth of the Frattini filtration of a p-group."""
        self._check_p_group(group, p)
        length = 0
        current = group
        while current.order() > 1:
            current = self.frattini(current, p)
            length += 1
        return length

    def conjugacy_class_count(self, group: PermGroup) -> int:
        return len(group.sympy_group.conjugacy_classes())

    def p_regular_class_count(self, group: PermGroup, p: int) -> int:
        """Classes of elements of order prime to p (= number of irreducible mod-p modules)."""
        return sum(
            1 for cls in group.sympy_group.conjugacy_classes()
            if next(iter(cls)).order() % p != 0
        )

    def subgroup_class_data(self, group: PermGroup) -> List[SubgroupClass]:
        limit = get_max_subgroup_order()
        order = group.order()
        if order > limit:
            raise GroupTooLargeError(f"subgroup enumeration is limited to order {limit}", limit=limit, actual=order)
        with self._lock:
            if group in self._subgroup_cache:
                return self._subgroup_cache[group]
            start = time.perf_counter()
            classes = _enumerate_subgroup_classes(group)
            logger.info(f"order {order}: {len(classes)} subgroup classes in {time.perf_counter() - start:.2f}s")
            self._subgroup_cache[group] = classes
            return classes

    def subgroup_classes(self, group: PermGroup) -> List[PermGroup]:
        """One representative per conjugacy class, by (order, orbits descending, canonical encoding)."""
        return [c.representative for c in self.subgroup_class_data(group)]

    def s6_subgroup_classes(self) -> List[SubgroupClass]:
        return list(_s6_classes())

    def order_18_groups(self) -> List[Tuple[str, PermGroup]]:
        return [
            ("S3 x C3", PermGroup.from_cycles(6, ["(1,2,3)", "(1,2)", "(4,5,6)"])),
            ("(Z/3)^2 x| C2 (generalized dihedral)", PermGroup.from_cycles(6, ["(1,2,3)", "(4,5,6)", "(2,3)(5,6)"])),
            ("D9", dihedral_group(9)),
        ]

    def eliminate_order_18(self) -> List[EliminationResult]:
        results = []
        for description, group in self.order_18_groups():
            sylow_length = self.p_length(self.sylow(group, 3), 3)
            brauer = self.p_regular_class_count(group, 3)
            if sylow_length == 1:
                reason = REASON_P_LENGTH
            elif brauer == 2:
                reason = REASON_BRAUER
            else:
                reason = None
            results.append(EliminationResult(
                description=description,
                order=group.order(),
                generators=group.cycle_strings(),
                sylow_p_length=sylow_length,
                brauer_count=brauer,
                reason=reason,
            ))
        return results
