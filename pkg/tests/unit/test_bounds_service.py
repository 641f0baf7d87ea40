#!/usr/bin/env python3
"""
BoundsService 单元测试
"""
import random
from fractions import Fraction
from math import gcd

import pytest
from sympy import multiplicity

from src.core.errors.exceptions import (
    CandidateSetExhaustedError,
    NoAdmissibleProfileError,
    ValidationError,
)
from src.core.exact import Decimal3
from src.models.profile import RamificationProfile
from src.service.bounds_service import compositions


class TestCompositions:
    def test_lexicographic(self):
        assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]

    def test_edge_cases(self):
        assert list(compositions(0, 0)) == [()]
        assert list(compositions(3, 0)) == []
        assert list(compositions(2, 3)) == []


class TestExactC:
    """化简公式与未化简形式的一致性"""

    def test_unramified(self, bounds_service):
        assert bounds_service.exact_C(RamificationProfile.build(2, [])) == 0

    def test_quadratic_at_two(self, bounds_service):
        assert bounds_service.exact_C(RamificationProfile.build(2, [1])) == Fraction(3, 2)

    def test_tame_part_at_three(self, bounds_service):
        assert bounds_service.exact_C(RamificationProfile.build(3, [1], e0=2)) == Fraction(11, 6)

    def test_dropping_tame_term_weakens(self, bounds_service):
        profile = RamificationProfile.build(5, [1, 2], e0=3)
        assert bounds_service.exact_C(profile, include_tame_term=False) >= bounds_service.exact_C(profile)

    def test_random_profiles_match_unsimplified_form(self, bounds_service):
        rng = random.Random(11)
        for _ in range(1000):
            p = rng.choice([2, 3, 5, 7])
            parts = [rng.randint(1, 3) for _ in range(rng.randint(0, 3))]
            e0 = rng.choice([e for e in range(1, 31) if gcd(e, p) == 1])
            profile = RamificationProfile.build(p, parts, e0=e0)
            assert bounds_service.exact_C(profile) == bounds_service.moon_C(profile), profile

    def test_invalid_profile(self):
        with pytest.raises(ValidationError):
            RamificationProfile(p=2, p_length=1, partition=(1,), e0=2, e_inertia=4)
        with pytest.raises(ValidationError):
            RamificationProfile.build(2, [2], n=24)


class TestUpperC:
    def test_examples(self, bounds_service):
        assert bounds_service.upper_C(2, 2, 4608, [4, 5]) == Fraction(22175, 4608)
        assert bounds_service.upper_C(2, 0, 2, []) == Fraction(1, 2)
        assert bounds_service.upper_C(3, 1, 72, [2]) == Fraction(167, 72)

    def test_valuation_mismatch(self, bounds_service):
        with pytest.raises(ValidationError):
            bounds_service.upper_C(2, 2, 4608, [4, 4])

    def test_strictly_below_leading_term(self, bounds_service):
        for n in (48, 144, 4608):
            v = multiplicity(2, n)
            for parts in compositions(v, 2):
                assert bounds_service.upper_C(2, 2, n, parts) < 3 + 2


class TestMinProfile:
    def test_examples(self, bounds_service):
        assert bounds_service.min_profile(4608, 2, 2) == (Fraction(865, 4608), [4, 5])
        assert bounds_service.min_profile(54, 3, 2) == (Fraction(37, 54), [1, 2])
        assert bounds_service.min_profile(72, 3, 1) == (Fraction(13, 72), [2])

    def test_no_admissible_profile(self, bounds_service):
        with pytest.raises(NoAdmissibleProfileError):
            bounds_service.min_profile(6, 3, 2)

    def test_length_zero_ignores_valuation(self, bounds_service):
        assert bounds_service.min_profile(6, 2, 0) == (Fraction(1, 6), [])
        assert bounds_service.min_profile(7, 2, 0) == (Fraction(1, 7), [])
        assert bounds_service.min_over_degrees([6, 8, 9, 54], 2, 0) == (Fraction(1, 54), 54)

    def test_reversal_does_not_change_value(self, bounds_service):
        value, parts = bounds_service.min_profile(4608, 2, 2)
        assert bounds_service.upper_C(2, 2, 4608, list(reversed(parts))) == 5 - value

    def test_decreasing_when_scaled_by_p(self, bounds_service):
        for p, length in ((2, 1), (2, 2), (3, 1), (3, 2)):
            for n in range(1, 10 ** 4 + 1):
                if multiplicity(p, n) < length:
                    continue
                assert bounds_service.min_profile(n * p, p, length)[0] < bounds_service.min_profile(n, p, length)[0]


class TestMinOverDegrees:
    def test_examples(self, bounds_service, sieve_service):
        degrees = sieve_service.candidate_degrees(sieve_service.preset("p2len2"), 4799)
        assert bounds_service.min_over_degrees(degrees, 2, 2) == (Fraction(865, 4608), 4608)
        assert bounds_service.min_over_degrees([18, 54, 72], 3, 2) == (Fraction(37, 54), 54)
        assert bounds_service.min_over_degrees([144, 176, 208], 2, 3) == (Fraction(521, 208), 208)

    def test_empty(self, bounds_service):
        with pytest.raises(CandidateSetExhaustedError):
            bounds_service.min_over_degrees([], 2, 2)


class TestValuations:
    def test_min_valuation_from_rd(self, bounds_service):
        assert bounds_service.min_valuation_from_rd(3, Decimal3.parse("27.328")) == 3
        assert bounds_service.min_valuation_from_rd(3, Decimal3.parse("3")) == 1
        assert bounds_service.min_valuation_from_rd(2, Decimal3.parse("1")) == 0

    def test_nonsolvable_valuation(self, bounds_service, grh_general):
        assert bounds_service.nonsolvable_valuation(grh_general, 3) == 3
