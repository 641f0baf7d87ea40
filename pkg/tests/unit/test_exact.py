#!/usr/bin/env python3
"""
精确算术单元测试
"""
import random
from fractions import Fraction

import gmpy2
import pytest

from src.core.errors.exceptions import ArithmeticOverflowError, ValidationError
from src.core.exact import Decimal3, dec_ceil, ensure_width, format_compact, pow_upper


class TestDecimal3:
    """Decimal3 解析、比较与格式化"""

    def test_parse_pads_fraction(self):
        assert Decimal3.parse("28.11").scaled == 28110
        assert Decimal3.parse("32").scaled == 32000
        assert str(Decimal3.parse("32")) == "32.000"

    def test_parse_rejects_extra_digits(self):
        with pytest.raises(ValidationError):
            Decimal3.parse("1.2345")

    def test_negative_values(self):
        assert str(Decimal3(-1667)) == "-1.667"
        assert str(Decimal3(-333)) == "-0.333"
        assert Decimal3.parse("-0.333") == Fraction(-333, 1000)
        assert Decimal3.parse("+2.5") == Fraction(5, 2)
        assert format_compact(Decimal3.parse("-4")) == "-4"

    def test_parse_rejects_garbage(self):
        for text in ("", "--1", "1e3", "abc", "1.", "+-2"):
            with pytest.raises(ValidationError):
                Decimal3.parse(text)

    def test_comparisons_are_exact(self):
        d = Decimal3.parse("2.500")
        assert d == Fraction(5, 2)
        assert d < 3
        assert d > Fraction(2499, 1000)
        assert Decimal3.parse("2.5") == d
        assert hash(Decimal3.parse("2.5")) == hash(d)

    def test_immutable(self):
        d = Decimal3(1000)
        with pytest.raises(AttributeError):
            d._scaled = 5

    def test_format_compact(self):
        assert format_compact(Decimal3.parse("5")) == "5"
        assert format_compact(Decimal3.parse("28.110")) == "28.110"
        assert format_compact(Decimal3.parse("3.661")) == "3.661"


class TestDecCeil:
    """向上取整到三位小数"""

    def test_exact_values_unchanged(self):
        assert dec_ceil(Fraction(5, 2)) == Fraction(5, 2)
        assert dec_ceil(Fraction(3)) == 3

    def test_rounds_toward_infinity(self):
        assert str(dec_ceil(Fraction(1, 3))) == "0.334"
        assert str(dec_ceil(Fraction(2, 3))) == "0.667"
        assert str(dec_ceil(Fraction(1, 1000))) == "0.001"
        assert str(dec_ceil(Fraction(1, 1001))) == "0.001"

    def test_negative_fractions(self):
        assert str(dec_ceil(Fraction(-1, 3))) == "-0.333"
        assert str(dec_ceil(Fraction(-5, 3))) == "-1.666"
        assert dec_ceil(Fraction(-2)) == -2
        rng = random.Random(7)
        for _ in range(500):
            x = Fraction(-rng.randint(0, 10 ** 9), rng.randint(1, 10 ** 6))
            d = dec_ceil(x)
            assert d.to_fraction() >= x
            assert d.to_fraction() - Fraction(1, 1000) < x
            assert Decimal3.parse(str(d)) == d

    def test_random_fractions(self):
        rng = random.Random(2024)
        for _ in range(2000):
            x = Fraction(rng.randint(0, 10 ** 9), rng.randint(1, 10 ** 6))
            d = dec_ceil(x)
            assert d.to_fraction() >= x
            assert d.to_fraction() - Fraction(1, 1000) < x


class TestPowUpper:
    """p^C 向上取整"""

    def test_integer_exponents(self):
        assert pow_upper(2, Decimal3.parse("5")) == 32
        assert pow_upper(3, Decimal3.parse("4")) == 81
        assert pow_upper(2, Decimal3.parse("3")) == 8

    def test_zero_exponent(self):
        assert pow_upper(7, Decimal3(0)) == 1

    def test_irrational_result_rounds_up(self):
        # sqrt(2) = 1.41421...
        assert str(pow_upper(2, Decimal3.parse("0.5"))) == "1.415"

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValidationError):
            pow_upper(1, Decimal3.parse("2"))

    def test_overflow_guard(self):
        with pytest.raises(ArithmeticOverflowError):
            pow_upper(2, Decimal3(10 ** 12))

    def test_random_against_high_precision_reference(self):
        """10^4 个随机指数与 200 位 mpfr 参考值比较"""
        rng = random.Random(7)
        ctx = gmpy2.get_context().copy()
        ctx.precision = 200
        slack = gmpy2.mpfr(2) ** -150
        with gmpy2.local_context(ctx):
            for _ in range(10 ** 4):
                base = rng.choice([2, 3, 5, 7])
                exponent = Decimal3(rng.randint(0, 6000))
                result = pow_upper(base, exponent)
                reference = gmpy2.mpfr(base) ** (gmpy2.mpfr(exponent.scaled) / 1000)
                upper = gmpy2.mpfr(result.scaled) / 1000
                lower = gmpy2.mpfr(result.scaled - 1) / 1000
                assert upper >= reference * (1 - slack)
                assert lower < reference * (1 + slack)


class TestEnsureWidth:
    def test_within_width(self):
        assert ensure_width(Fraction(1, 3)) == Fraction(1, 3)

    def test_overflow(self):
        with pytest.raises(ArithmeticOverflowError):
            ensure_width(Fraction(2 ** 200, 3))
        with pytest.raises(ArithmeticOverflowError):
            ensure_width(Fraction(1, 2 ** 40), max_bits=32)
