"""
度数筛：整除条件、禁止的素于 p 部分以及 p-赋值下界。
"""

from typing import Dict, List, Optional

from sympy import multiplicity

from src.core.errors.exceptions import ValidationError
from src.models.sieve import DegreeConstraints

# p=2: 16 | n，且素于 2 的部分不能是 1, 3, 5, 7（2-分歧的低次数域分类）
# p=3: 18 或 27 | n；长度 1 时 Sylow 初等交换，另外排除部分 2
# 长度 0: 像是非交换群，n 至少为 6
PRESETS: Dict[str, DegreeConstraints] = {
    "p2len0": DegreeConstraints(p=2, any_of_divisors=(2, 3), min_p_valuation=0, min_degree=6, name="p2len0"),
    "p2len1": DegreeConstraints(p=2, any_of_divisors=(16,), forbidden_prime_to_p_parts=frozenset({1, 3, 5, 7}),
                                min_p_valuation=1, name="p2len1"),
    "p2len2": DegreeConstraints(p=2, any_of_divisors=(16,), forbidden_prime_to_p_parts=frozenset({1, 3, 5, 7}),
                                min_p_valuation=2, name="p2len2"),
    "p2len3": DegreeConstraints(p=2, any_of_divisors=(16,), forbidden_prime_to_p_parts=frozenset({1, 3, 5, 7}),
                                min_p_valuation=3, name="p2len3"),
    "p3len0": DegreeConstraints(p=3, any_of_divisors=(2, 3), min_p_valuation=0, min_degree=6, name="p3len0"),
    "p3len1": DegreeConstraints(p=3, any_of_divisors=(18, 27), forbidden_prime_to_p_parts=frozenset({1, 2, 4, 5, 7}),
                                min_p_valuation=1, name="p3len1"),
    "p3len2": DegreeConstraints(p=3, any_of_divisors=(18, 27), forbidden_prime_to_p_parts=frozenset({1, 4, 5, 7}),
                                min_p_valuation=2, name="p3len2"),
}


def prime_to_p_part(n: int, p: int) -> int:
    """n / p^(v_p(n))"""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}", field="n")
    return n // p ** multiplicity(p, n)


def _admissible(n: int, constraints: DegreeConstraints) -> bool:
    if n < constraints.min_degree:
        return False
    if multiplicity(constraints.p, n) < constraints.min_p_valuation:
        return False
    return prime_to_p_part(n, constraints.p) not in constraints.forbidden_prime_to_p_parts


class SieveService:
    """候选度数生成"""

    def preset(self, name: str) -> DegreeConstraints:
        try:
            return PRESETS[name]
        except KeyError:
            raise ValidationError(
                f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}", field="preset"
            ) from None

    def preset_names(self) -> List[str]:
        return sorted(PRESETS)

    def default_preset(self, p: int, length: int) -> Optional[DegreeConstraints]:
        return PRESETS.get(f"p{p}len{length}")

    def candidate_degrees(self, constraints: DegreeConstraints, nmax: int) -> List[int]:
        """All n <= nmax meeting the constraints, ascending."""
        if nmax < 1:
            raise ValidationError(f"nmax must be >= 1, got {nmax}", field="nmax")
        multiples = set()
        for d in constraints.any_of_divisors:
            multiples.update(range(d, nmax + 1, d))
        return sorted(n for n in multiples if _admissible(n, constraints))

    def naive_candidate_degrees(self, constraints: DegreeConstraints, nmax: int) -> List[int]:
        """Per-integer filter; reference for candidate_degrees."""
        return [
            n for n in range(1, nmax + 1)
            if any(n % d == 0 for d in constraints.any_of_divisors) and _admissible(n, constraints)
        ]
