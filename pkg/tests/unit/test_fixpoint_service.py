#!/usr/bin/env python3
"""
FixpointService 单元测试：迭代降界轨迹
"""
from fractions import Fraction

import pytest

from src.core.errors.exceptions import ConfigurationError, ValidationError
from src.core.exact import Decimal3, pow_upper
from src.models.trace import ProofRequest, max_p_length


def chain(rows):
    return [row.nmax_out + 1 for row in rows]


class TestRun:
    """各 (p, N) 情形的完整轨迹"""

    def test_p2_length2_grh(self, fixpoint_service):
        request = fixpoint_service.build_request(2, 2, grh=True)
        rows, outcome = fixpoint_service.run(request)
        assert chain(rows) == [4800, 840, 200, 56]
        assert [row.min_value for row in rows[1:]] == [Fraction(865, 4608), Fraction(417, 832), Fraction(177, 176)]
        assert [str(row.c_upper) for row in rows] == ["5.000", "4.813", "4.499", "3.995"]
        assert [str(row.rd_upper) for row in rows] == ["32.000", "28.110", "22.612", "15.945"]
        assert rows[1].argmin_degree == 4608
        assert outcome.kind == "empty"
        assert outcome.exit_code == 0

    def test_p3_length2_totally_real_leaves_18(self, fixpoint_service):
        request = fixpoint_service.build_request(3, 2, grh=True, totally_real=True)
        rows, outcome = fixpoint_service.run(request)
        assert chain(rows) == [280, 88, 40, 21]
        assert [row.min_value for row in rows[1:]] == [Fraction(55, 162), Fraction(37, 54), Fraction(19, 18)]
        assert outcome.kind == "residual"
        assert outcome.residual == (18,)
        assert outcome.exit_code == 2

    def test_p2_length3_totally_real(self, fixpoint_service):
        request = fixpoint_service.build_request(2, 3, grh=True, totally_real=True)
        rows, outcome = fixpoint_service.run(request)
        assert chain(rows) == [4800, 220, 18]
        assert [row.min_value for row in rows[1:]] == [Fraction(3457, 4608), Fraction(521, 208)]
        assert outcome.kind == "empty"

    def test_p2_length1_single_lookup(self, fixpoint_service):
        rows, outcome = fixpoint_service.run(fixpoint_service.build_request(2, 1))
        assert len(rows) == 1
        assert rows[0].c_upper == 3
        assert rows[0].rd_upper == 8
        assert rows[0].nmax_out == 13
        assert outcome.kind == "empty"

    def test_p3_length1(self, fixpoint_service):
        rows, outcome = fixpoint_service.run(fixpoint_service.build_request(3, 1))
        assert [str(row.c_upper) for row in rows] == ["2.500", "2.320"]
        assert [str(row.rd_upper) for row in rows] == ["15.589", "12.792"]
        assert [row.nmax_out for row in rows] == [79, 39]
        assert rows[1].min_value == Fraction(13, 72)
        assert rows[1].argmin_degree == 72
        assert outcome.kind == "empty"

    @pytest.mark.parametrize("p,nmax", [(2, 2), (3, 3)])
    def test_length0(self, fixpoint_service, p, nmax):
        rows, outcome = fixpoint_service.run(fixpoint_service.build_request(p, 0))
        assert [row.nmax_out for row in rows] == [nmax]
        assert outcome.kind == "empty"

    def test_length0_grh_stops_on_weak_table(self, fixpoint_service):
        # GRH 一般表最小的锚点在 56，长度 0 的上界 2^1 推不动它
        rows, outcome = fixpoint_service.run(fixpoint_service.build_request(2, 0, grh=True))
        assert [row.nmax_out for row in rows] == [55]
        assert outcome.kind == "residual"
        assert len(outcome.residual) == 33
        assert outcome.residual[:3] == (6, 8, 9)
        assert outcome.residual[-1] == 54

    def test_strict_progress_and_soundness(self, fixpoint_service, sieve_service):
        for args in ((2, 2, True, False), (3, 2, True, True), (2, 3, True, True), (3, 1, False, False)):
            request = fixpoint_service.build_request(args[0], args[1], grh=args[2], totally_real=args[3])
            rows, outcome = fixpoint_service.run(request)
            for row in rows[1:]:
                assert row.nmax_out < row.nmax_in
            for row in rows:
                assert row.rd_upper == pow_upper(request.p, row.c_upper)
            last = rows[-1].nmax_out
            survivors = sieve_service.naive_candidate_degrees(request.constraints, last)
            if outcome.kind == "empty":
                assert survivors == []
            else:
                assert list(outcome.residual) == survivors


class TestRequest:
    def test_table_flags_must_match(self, fixpoint_service, odlyzko_service, sieve_service):
        with pytest.raises(ConfigurationError):
            ProofRequest(p=2, p_length=2, grh=False, totally_real=False,
                         constraints=sieve_service.preset("p2len2"),
                         table=odlyzko_service.load_table("grh_general"))

    def test_p_length_bounded_by_dimension(self, fixpoint_service):
        with pytest.raises(ValidationError):
            fixpoint_service.build_request(2, 3, grh=True, totally_real=True, max_dimension=4)

    def test_missing_preset(self, fixpoint_service):
        with pytest.raises(ValidationError):
            fixpoint_service.build_request(5, 1)

    def test_min_valuation_follows_p_length(self, fixpoint_service):
        request = fixpoint_service.build_request(2, 2, grh=True, preset="p2len0")
        assert request.constraints.min_p_valuation == 2
        assert fixpoint_service.sieve_service.preset("p2len0").min_p_valuation == 0
        rows, outcome = fixpoint_service.run(request)
        assert all(row.argmin_degree % 4 == 0 for row in rows[1:])
        assert all(n % 4 == 0 for n in outcome.residual)

    def test_preset_valuation_kept_when_larger(self, fixpoint_service):
        request = fixpoint_service.build_request(2, 1, preset="p2len3")
        assert request.constraints.min_p_valuation == 3

    def test_max_p_length(self):
        assert [max_p_length(d) for d in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]


class TestRender:
    def test_text_matches_layout(self, fixpoint_service):
        request = fixpoint_service.build_request(2, 3, grh=True, totally_real=True)
        rows, outcome = fixpoint_service.run(request)
        text = fixpoint_service.render(request, rows, outcome)
        assert text.splitlines() == [
            "n<  min  C<  rd<",
            "inf  ?  7  128",
            "4800  3457/4608  6.250  76.110",
            "220  521/208  4.496  22.565",
            "18",
        ]

    def test_residual_line(self, fixpoint_service):
        request = fixpoint_service.build_request(3, 2, grh=True, totally_real=True)
        rows, outcome = fixpoint_service.run(request)
        assert fixpoint_service.render(request, rows, outcome).endswith("21\nresidual: 18\n")

    def test_json_round_trip(self, fixpoint_service):
        request = fixpoint_service.build_request(3, 2, grh=True, totally_real=True)
        rows, outcome = fixpoint_service.run(request)
        text = fixpoint_service.render(request, rows, outcome, "json")
        summary, loaded_rows, loaded_outcome = fixpoint_service.load_trace(text)
        assert summary == request.summary()
        assert loaded_rows == rows
        assert loaded_outcome == outcome

    def test_unknown_format(self, fixpoint_service):
        request = fixpoint_service.build_request(2, 1)
        rows, outcome = fixpoint_service.run(request)
        with pytest.raises(ValidationError):
            fixpoint_service.render(request, rows, outcome, "xml")

    def test_nothing_to_render(self, fixpoint_service):
        with pytest.raises(ValidationError):
            fixpoint_service.render_text([])

    def test_decimal_cells(self, fixpoint_service):
        request = fixpoint_service.build_request(2, 2, grh=True)
        rows, _ = fixpoint_service.run(request)
        assert rows[0].rd_upper == Decimal3.parse("32")
