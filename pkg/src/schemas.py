from pydantic import BaseModel, Field, field_validator
from typing import Dict, List, Literal, Optional, Tuple, Union

from sympy import isprime

# 命令行参数相关的Schema（在任何计算开始前校验）
class ProveCommand(BaseModel):
    prime: int = Field(..., description="素数 p")
    p_length: int = Field(..., ge=0, description="p-长度 N")
    grh: bool = Field(False, description="使用 GRH 条件下的表")
    totally_real: bool = Field(False, description="全实域的表")
    preset: Optional[str] = Field(None, description="度数筛预设，默认 p{p}len{N}")
    dimension: Optional[int] = Field(None, ge=1, description="表示维数 d")
    format: Literal["text", "json"] = Field("text", description="输出格式")

    @field_validator("prime")
    @classmethod
    def _prime(cls, value: int) -> int:
        if not isprime(value):
            raise ValueError(f"{value} is not prime")
        return value

class ReproduceCommand(BaseModel):
    target: Literal["table1", "table2", "table3", "appendixA2"] = Field(..., description="复现目标")
    seed: Optional[int] = Field(None, description="MeatAxe 随机种子")

class MinimizeCommand(BaseModel):
    prime: int = Field(..., description="素数 p")
    p_length: int = Field(..., ge=0, description="p-长度 N")
    degrees: List[int] = Field(default_factory=list, description="候选度数")
    preset: Optional[str] = Field(None, description="度数筛预设")
    nmax: Optional[int] = Field(None, ge=1, description="度数上界")

    @field_validator("degrees")
    @classmethod
    def _positive(cls, value: List[int]) -> List[int]:
        if any(n < 1 for n in value):
            raise ValueError("degrees must be positive")
        return sorted(set(value))

# 迭代降界 JSON 轨迹
class TraceRowSchema(BaseModel):
    nmax_in: Optional[int] = Field(None, description="上一轮的度数上界，首行为 null（无界）")
    min_num: Optional[int] = None
    min_den: Optional[int] = None
    argmin: Optional[int] = None
    c_upper: str
    rd_upper: str
    nmax_out: int

class TraceDocument(BaseModel):
    request: Dict[str, Union[int, bool, str]]
    rows: List[TraceRowSchema]
    outcome: Union[Literal["empty"], Dict[Literal["residual"], List[int]]]

# S6 子群搜索报告
class S6ReportEntry(BaseModel):
    order: int
    transitive: bool
    generators: List[str]
    abs_irred_dims: List[Tuple[int, int]]
    heart_abs_irreducible: Optional[bool] = None

class S6Report(BaseModel):
    seed: int
    classes: List[S6ReportEntry]
    heart_disagreements: List[int] = Field(default_factory=list, description="两种判据不一致的类在结果中的下标")

# 附录输出的转录
class AppendixGolden(BaseModel):
    orders: List[int]
    transitive: List[bool]
    abs_irred_dims_by_order: Dict[str, List[List[Tuple[int, int]]]]
