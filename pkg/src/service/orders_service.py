"""
Sp4(F_{2^r}) 及其子群族（SO±、Suzuki）的阶公式，以及"大像"阶的下界。
"""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, model_validator
from sympy import divisors

from src.core.errors.exceptions import ValidationError
from src.utils.logging import get_logger

logger = get_logger(__name__)

Family = Literal["Sp4", "SOplus", "SOminus", "Sz"]


class GroupFamily(BaseModel):
    """A member of one of the families over F_{2^r}."""

    model_config = {"frozen": True}

    family: Family
    r: int

    @model_validator(mode="after")
    def _check(self):
        if self.r < 1:
            raise ValidationError(f"field exponent must be >= 1, got {self.r}", field="r")
        if self.family == "Sz" and self.r % 2 == 0:
            raise ValidationError(f"Suzuki groups need odd r, got {self.r}", field="r")
        return self

    def label(self) -> str:
        return f"{self.family}(F_{2 ** self.r})"


class MaximalSubgroupOrder(BaseModel):
    label: str
    description: str
    orders: List[int] = []
    symbolic: Optional[str] = None


class Discrepancy(BaseModel):
    quantity: str
    printed: int
    computed: int


# 文献中印刷的数值与公式计算结果不一致之处
PRINTED_VALUES: List[Tuple[GroupFamily, int]] = [
    (GroupFamily(family="Sp4", r=2), 979000),
]


class OrdersService:
    """阶公式服务，均为精确整数运算"""

    def family_order(self, member: GroupFamily) -> int:
        q = 2 ** member.r
        if member.family == "Sp4":
            return q ** 4 * (q - 1) ** 2 * (q + 1) ** 2 * (q * q + 1)
        if member.family == "SOplus":
            return 2 * q * q * (q - 1) ** 2
        if member.family == "SOminus":
            return 2 * q * q * (q - 1) * (q + 1)
        return q * q * (q - 1) * (q * q + 1)

    def order_of(self, family: str, r: int) -> int:
        return self.family_order(GroupFamily(family=family, r=r))

    def suzuki_maximal_orders(self, r: int) -> List[MaximalSubgroupOrder]:
        """Orders of the maximal subgroups of Sz(F_{2^r}) for odd r > 1."""
        if r <= 1 or r % 2 == 0:
            raise ValidationError(f"need odd r > 1, got {r}", field="r")
        q = 2 ** r
        s = (r - 1) // 2
        subfields = [d for d in divisors(r) if d < r]
        return [
            MaximalSubgroupOrder(label="Sz-1", description="cyclic, normalizer of a split torus", orders=[q - 1]),
            MaximalSubgroupOrder(
                label="Sz-2",
                description="intersection with the Borel subgroup",
                symbolic=f"|Sz(F_{q}) ∩ B|",
            ),
            MaximalSubgroupOrder(label="Sz-3", description="dihedral", orders=[2 * (q - 1)]),
            MaximalSubgroupOrder(
                label="Sz-4",
                description="normalizers of the two non-split tori",
                orders=[4 * (q + 2 ** (s + 1) + 1), 4 * (q - 2 ** (s + 1) + 1)],
            ),
            MaximalSubgroupOrder(
                label="Sz-5",
                description="Suzuki groups over proper subfields",
                orders=[self.order_of("Sz", d) for d in subfields],
            ),
        ]

    def min_large_image(self, r_max: int) -> int:
        """Least order among Sz(F_{2^r}) with odd 1 < r <= r_max and Sp4(F_{2^s}) with 1 < s <= r_max."""
        if r_max < 3:
            raise ValidationError(f"r_max must be >= 3, got {r_max}", field="r_max")
        candidates = [self.order_of("Sz", r) for r in range(3, r_max + 1, 2)]
        candidates += [self.order_of("Sp4", s) for s in range(2, r_max + 1)]
        return min(candidates)

    def printed_discrepancies(self) -> List[Discrepancy]:
        result = []
        for member, printed in PRINTED_VALUES:
            computed = self.family_order(member)
            if computed != printed:
                result.append(Discrepancy(quantity=f"|{member.label()}|", printed=printed, computed=computed))
        return result

    def corollary_degree_check(self, cap: int = 4800, r_max: int = 20) -> bool:
        """True when every allowed large image is at least ``cap``."""
        bound = self.min_large_image(r_max)
        ok = bound >= cap
        logger.info(f"min large image for r <= {r_max}: {bound}; cap {cap}: {'ok' if ok else 'violated'}")
        return ok
