from typing import FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import isprime

from src.core.errors.exceptions import ValidationError


class DegreeConstraints(BaseModel):
    """
    度数筛选条件：n 至少被一个给定除数整除，n 的素于 p 部分不在禁止集合中，
    且 v_p(n) >= min_p_valuation，n >= min_degree。
    """

    model_config = ConfigDict(frozen=True)

    p: int
    any_of_divisors: Tuple[int, ...]
    forbidden_prime_to_p_parts: FrozenSet[int] = frozenset()
    min_p_valuation: int = 0
    min_degree: int = 1
    name: str = "custom"

    @model_validator(mode="after")
    def _check(self) -> "DegreeConstraints":
        if not isprime(self.p):
            raise ValidationError(f"p = {self.p} is not prime", field="p")
        if not self.any_of_divisors:
            raise ValidationError("at least one divisor is required", field="any_of_divisors")
        if any(d <= 1 for d in self.any_of_divisors):
            raise ValidationError("every divisor must be > 1", field="any_of_divisors")
        if any(part < 1 or part % self.p == 0 for part in self.forbidden_prime_to_p_parts):
            raise ValidationError(
                f"forbidden parts must be positive and prime to {self.p}",
                field="forbidden_prime_to_p_parts"
            )
        if self.min_p_valuation < 0:
            raise ValidationError("min_p_valuation must be >= 0", field="min_p_valuation")
        return self
