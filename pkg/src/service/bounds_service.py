"""
差分/判别式上界公式，以及在 v_p(n) 的有序分拆上取最小值。
"""

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import isprime, multiplicity

from src.core.errors.exceptions import (
    CandidateSetExhaustedError,
    NoAdmissibleProfileError,
    ValidationError,
)
from src.core.exact import Decimal3, ensure_width
from src.models.profile import RamificationProfile
from src.models.table import DiscriminantTable
from src.utils.logging import get_logger

logger = get_logger(__name__)


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered compositions of ``total`` into ``parts`` positive parts, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _wild_sum(p: int, partition: Sequence[int]) -> Fraction:
    return sum((Fraction(1, (p - 1) * p ** (m - 1)) for m in partition), Fraction(0))


@lru_cache(maxsize=1024)
def _min_wild_sum(p: int, valuation: int, length: int) -> Tuple[Fraction, Tuple[int, ...]]:
    # 长度 0：没有野分歧项，与 v_p(n) 无关
    if length == 0:
        return Fraction(0), ()
    best: Optional[Fraction] = None
    best_parts: Tuple[int, ...] = ()
    for parts in compositions(valuation, length):
        value = _wild_sum(p, parts)
        if best is None or value < best:
            best, best_parts = value, parts
    return best, best_parts


class BoundsService:
    """差分上界公式与分拆最小化"""

    def __init__(self, odlyzko_service=None):
        self._odlyzko_service = odlyzko_service

    @property
    def odlyzko_service(self):
        if self._odlyzko_service is None:
            from src.service.odlyzko_service import OdlyzkoService
            self._odlyzko_service = OdlyzkoService()
        return self._odlyzko_service

    @staticmethod
    def _check_prime(p: int) -> None:
        if not isprime(p):
            raise ValidationError(f"p = {p} is not prime", field="p")

    def exact_C(self, profile: RamificationProfile, include_tame_term: bool = True) -> Fraction:
        """
        Exact different exponent C of a totally ramified extension.

        ``include_tame_term=False`` drops the r/(p-1)·(1/e_0 - 1/e_N) term,
        which is the weaker bound used for global fields.
        """
        p, length = profile.p, profile.p_length
        r = profile.e0 % (p - 1) if p > 2 else 0
        subtracted = Fraction(1, profile.e_inertia) + _wild_sum(p, profile.partition)
        if include_tame_term:
            subtracted += Fraction(r, p - 1) * (Fraction(1, profile.e0) - Fraction(1, profile.e_inertia))
        return ensure_width(length + 1 + Fraction(length, p - 1) - subtracted)

    def moon_C(self, profile: RamificationProfile) -> Fraction:
        """Unsimplified form with α_i = ⌊e_{i-1}/(p-1)⌋ + 1 and e_i = e_0·p^(m_1+…+m_i)."""
        p, parts = profile.p, profile.partition
        if not parts:
            return ensure_width(1 - Fraction(1, profile.e0))

        e = [profile.e0]
        for m in parts:
            e.append(e[-1] * p ** m)
        alpha = [e[i] // (p - 1) + 1 for i in range(len(parts))]
        length = len(parts)

        gained = sum((Fraction(alpha[i] - 1, e[i]) for i in range(length)), Fraction(0))
        lost = sum((Fraction(1, p ** m) for m in parts), Fraction(0))
        lost += sum((Fraction(alpha[i] - 1, e[i + 1]) for i in range(length - 1)), Fraction(0))
        lost += Fraction(alpha[-1], e[-1])
        return ensure_width(length + 1 + gained - lost)

    def upper_C(self, p: int, length: int, n: int, partition: Sequence[int]) -> Fraction:
        self._check_prime(p)
        partition = tuple(partition)
        if n < 1:
            raise ValidationError(f"degree must be >= 1, got {n}", field="n")
        if len(partition) != length or any(m < 1 for m in partition):
            raise ValidationError(f"invalid partition {list(partition)} for p-length {length}", field="partition")
        # 长度 0 时和式为空，不校验赋值
        if length > 0 and sum(partition) != multiplicity(p, n):
            raise ValidationError(
                f"partition sum {sum(partition)} differs from v_{p}({n}) = {multiplicity(p, n)}",
                field="partition"
            )
        return ensure_width(length + 1 + Fraction(length, p - 1) - Fraction(1, n) - _wild_sum(p, partition))

    def min_profile(self, n: int, p: int, length: int) -> Tuple[Fraction, List[int]]:
        """
        Minimum of 1/n + Σ 1/((p-1)·p^(m_i-1)) over compositions of v_p(n) into ``length`` parts.

        Ties go to the lexicographically smallest composition. For p-length 0
        the partition is empty and the minimand is 1/n whatever v_p(n) is.
        """
        self._check_prime(p)
        valuation = multiplicity(p, n)
        if valuation < length:
            raise NoAdmissibleProfileError(n, p, length, valuation)
        wild, parts = _min_wild_sum(p, valuation, length)
        return ensure_width(Fraction(1, n) + wild), list(parts)

    def min_over_degrees(self, degrees: Sequence[int], p: int, length: int) -> Tuple[Fraction, int]:
        """Minimum of min_profile over ``degrees``; the smallest degree wins ties."""
        if not degrees:
            raise CandidateSetExhaustedError()
        best: Optional[Fraction] = None
        best_degree = 0
        for n in sorted(degrees):
            value, _ = self.min_profile(n, p, length)
            if best is None or value < best:
                best, best_degree = value, n
        return best, best_degree

    def min_valuation_from_rd(self, p: int, rd_lower: Decimal3) -> int:
        """Least v with p^(1+v) > rd_lower."""
        if rd_lower < 1:
            raise ValidationError(f"root discriminant must be >= 1, got {rd_lower}", field="rd_lower")
        v = 0
        while p ** (1 + v) <= rd_lower:
            v += 1
        return v

    def nonsolvable_valuation(self, table: DiscriminantTable, p: int, min_degree: int = 660) -> int:
        """Forced v_p(n) for fields of degree >= ``min_degree``."""
        rd_lower = self.odlyzko_service.min_root_disc(table, min_degree)
        valuation = self.min_valuation_from_rd(p, rd_lower)
        logger.debug(f"min root disc {rd_lower} at degree {min_degree} forces v_{p}(n) >= {valuation}")
        return valuation
