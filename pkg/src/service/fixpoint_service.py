"""
迭代降界：上界公式 → Odlyzko 表 → 度数筛，直到候选集为空或上界不再下降。
"""

import time
from fractions import Fraction
from typing import List, Optional, Tuple

from src.config import get_fixpoint_max_iterations
from src.core.errors.exceptions import GalrepError, ValidationError
from src.core.exact import Decimal3, dec_ceil, format_compact, pow_upper
from src.models.trace import IterationRow, ProofOutcome, ProofRequest
from src.schemas import TraceDocument, TraceRowSchema
from src.service.bounds_service import BoundsService
from src.service.odlyzko_service import OdlyzkoService
from src.service.sieve_service import SieveService
from src.utils.logging import get_logger, log_computation

logger = get_logger(__name__)

TEXT_HEADER = "n<  min  C<  rd<"


class FixpointService:
    """Bound-lowering driver and its text/JSON renderings."""

    def __init__(
        self,
        bounds_service: Optional[BoundsService] = None,
        odlyzko_service: Optional[OdlyzkoService] = None,
        sieve_service: Optional[SieveService] = None,
        max_iterations: Optional[int] = None,
    ):
        self.odlyzko_service = odlyzko_service or OdlyzkoService()
        self.bounds_service = bounds_service or BoundsService(self.odlyzko_service)
        self.sieve_service = sieve_service or SieveService()
        self.max_iterations = max_iterations or get_fixpoint_max_iterations()

    def build_request(
        self,
        p: int,
        length: int,
        grh: bool = False,
        totally_real: bool = False,
        preset: Optional[str] = None,
        max_dimension: Optional[int] = None,
    ) -> ProofRequest:
        """按标志选择内置表与预设；维数默认 max(2, 2^N)"""
        table = self.odlyzko_service.table_for_flags(grh, totally_real)
        if preset is None:
            constraints = self.sieve_service.default_preset(p, length)
            if constraints is None:
                raise ValidationError(f"no preset for p={p}, p-length {length}; pass one explicitly", field="preset")
        else:
            constraints = self.sieve_service.preset(preset)
        # 长度 N 的 Sylow 需要 v_p(n) >= N
        if constraints.min_p_valuation < length:
            constraints = constraints.model_copy(update={"min_p_valuation": length})
        return ProofRequest(
            p=p,
            p_length=length,
            grh=grh,
            totally_real=totally_real,
            constraints=constraints,
            table=table,
            max_dimension=max_dimension if max_dimension is not None else max(2, 2 ** length),
        )

    def _bound_step(self, request: ProofRequest, base: Fraction, minimum: Fraction) -> Tuple[Decimal3, Decimal3, int]:
        c_upper = dec_ceil(base - minimum)
        rd_upper = pow_upper(request.p, c_upper)
        return c_upper, rd_upper, self.odlyzko_service.max_degree(request.table, rd_upper)

    def run(self, request: ProofRequest) -> Tuple[List[IterationRow], ProofOutcome]:
        start = time.perf_counter()
        p, length = request.p, request.p_length
        base = length + 1 + Fraction(length, p - 1)

        c_upper, rd_upper, nmax = self._bound_step(request, base, Fraction(0))
        rows = [IterationRow(nmax_in=None, c_upper=c_upper, rd_upper=rd_upper, nmax_out=nmax)]
        outcome: Optional[ProofOutcome] = None

        for _ in range(self.max_iterations):
            candidates = self.sieve_service.candidate_degrees(request.constraints, nmax)
            if not candidates:
                outcome = ProofOutcome.empty()
                break
            minimum, argmin = self.bounds_service.min_over_degrees(candidates, p, length)
            c_upper, rd_upper, next_nmax = self._bound_step(request, base, minimum)
            logger.debug(f"nmax {nmax}: {len(candidates)} candidates, min {minimum} at {argmin}, C<{c_upper}")
            if next_nmax >= nmax:
                outcome = ProofOutcome.residual_set(candidates)
                break
            rows.append(IterationRow(
                nmax_in=nmax,
                min_value=minimum,
                argmin_degree=argmin,
                c_upper=c_upper,
                rd_upper=rd_upper,
                nmax_out=next_nmax,
            ))
            nmax = next_nmax

        if outcome is None:
            raise GalrepError(
                f"no fixpoint after {self.max_iterations} iterations",
                error_code="iteration_cap",
                details=request.summary(),
            )

        log_computation(
            "fixpoint.run",
            request.summary(),
            result={"rows": len(rows), "outcome": outcome.kind, "residual": list(outcome.residual)},
            elapsed=time.perf_counter() - start,
        )
        return rows, outcome

    def render_text(self, rows: List[IterationRow]) -> str:
        if not rows:
            raise ValidationError("nothing to render", field="rows")
        lines = [TEXT_HEADER]
        for row in rows:
            bound = "inf" if row.nmax_in is None else str(row.nmax_in + 1)
            minimum = "?" if row.min_value is None else f"{row.min_value.numerator}/{row.min_value.denominator}"
            lines.append(f"{bound}  {minimum}  {format_compact(row.c_upper)}  {format_compact(row.rd_upper)}")
        lines.append(str(rows[-1].nmax_out + 1))
        return "\n".join(lines) + "\n"

    def to_document(self, request: ProofRequest, rows: List[IterationRow], outcome: ProofOutcome) -> TraceDocument:
        return TraceDocument(
            request=request.summary(),
            rows=[
                TraceRowSchema(
                    nmax_in=row.nmax_in,
                    min_num=None if row.min_value is None else row.min_value.numerator,
                    min_den=None if row.min_value is None else row.min_value.denominator,
                    argmin=row.argmin_degree,
                    c_upper=str(row.c_upper),
                    rd_upper=str(row.rd_upper),
                    nmax_out=row.nmax_out,
                )
                for row in rows
            ],
            outcome="empty" if outcome.kind == "empty" else {"residual": list(outcome.residual)},
        )

    def render(self, request: ProofRequest, rows: List[IterationRow], outcome: ProofOutcome,
               fmt: str = "text") -> str:
        if fmt == "text":
            text = self.render_text(rows)
            if outcome.kind == "residual":
                text += f"residual: {', '.join(map(str, outcome.residual))}\n"
            return text
        if fmt == "json":
            return self.to_document(request, rows, outcome).model_dump_json(indent=2) + "\n"
        raise ValidationError(f"unknown format {fmt!r}", field="format")

    def load_trace(self, text: str) -> Tuple[dict, List[IterationRow], ProofOutcome]:
        """Inverse of the JSON rendering."""
        document = TraceDocument.model_validate_json(text)
        rows = [
            IterationRow(
                nmax_in=row.nmax_in,
                min_value=None if row.min_num is None else Fraction(row.min_num, row.min_den),
                argmin_degree=row.argmin,
                c_upper=Decimal3.parse(row.c_upper),
                rd_upper=Decimal3.parse(row.rd_upper),
                nmax_out=row.nmax_out,
            )
            for row in document.rows
        ]
        if document.outcome == "empty":
            outcome = ProofOutcome.empty()
        else:
            outcome = ProofOutcome.residual_set(document.outcome["residual"])
        return dict(document.request), rows, outcome
