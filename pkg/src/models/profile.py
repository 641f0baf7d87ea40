"""分歧轮廓（p, p-长度, 分拆, 驯顺部分）数据模型"""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import isprime, multiplicity

from src.core.errors.exceptions import ValidationError


class RamificationProfile(BaseModel):
    """
    A wild ramification profile of p-length ``p_length``.

    ``e_inertia`` is the order of inertia, e_0 · p^(m_1 + ... + m_N). When a
    global degree ``n`` is given, the partition must also account for the
    whole of v_p(n) and ``e_inertia`` must divide ``n``.
    """

    model_config = ConfigDict(frozen=True)

    p: int
    p_length: int
    partition: Tuple[int, ...] = ()
    e0: int = 1
    e_inertia: int = 1
    n: Optional[int] = None

    @model_validator(mode="after")
    def _check_profile(self) -> "RamificationProfile":
        if not isprime(self.p):
            raise ValidationError(f"p = {self.p} is not prime", field="p")
        if self.p_length < 0 or len(self.partition) != self.p_length:
            raise ValidationError(
                f"partition {list(self.partition)} does not have length {self.p_length}",
                field="partition"
            )
        if any(m < 1 for m in self.partition):
            raise ValidationError("partition parts must be >= 1", field="partition")
        if self.e0 < 1 or self.e0 % self.p == 0:
            raise ValidationError(f"e0 = {self.e0} must be positive and prime to {self.p}", field="e0")
        if self.e_inertia != self.e0 * self.p ** sum(self.partition):
            raise ValidationError(
                f"e_inertia = {self.e_inertia} is not e0 * p^{sum(self.partition)}",
                field="e_inertia"
            )
        if self.n is not None:
            if self.n < 1 or multiplicity(self.p, self.n) != sum(self.partition):
                raise ValidationError(
                    f"partition sum {sum(self.partition)} differs from v_{self.p}({self.n})",
                    field="n"
                )
            if self.n % self.e_inertia != 0:
                raise ValidationError(f"e_inertia = {self.e_inertia} does not divide n = {self.n}", field="n")
        return self

    @classmethod
    def build(cls, p: int, partition, e0: int = 1, n: Optional[int] = None) -> "RamificationProfile":
        """按分拆与驯顺部分推出 p_length 与 e_inertia"""
        parts = tuple(partition)
        return cls(p=p, p_length=len(parts), partition=parts, e0=e0,
                   e_inertia=e0 * p ** sum(parts), n=n)
