"""
精确有理数运算与向上取整的三位小数表示。

所有界都以 ``fractions.Fraction`` 精确计算；只有在展示时才转换为
``Decimal3``，并且转换总是朝 +∞ 方向取整。p^C 的求值通过 gmpy2 的整数开方
完成，不经过任何二进制浮点中间量。
"""

import functools
import re
from fractions import Fraction
from typing import Union

import gmpy2

from src.config import get_decimal_places, get_exact_max_bits, get_exact_max_pow_bits
from src.core.errors.exceptions import ArithmeticOverflowError, ValidationError

Rational = Fraction

_DECIMAL_RE = re.compile(r"^([+-]?)(\d+)(?:\.(\d+))?$")


def ensure_width(x: Fraction, max_bits: int = None) -> Fraction:
    """Fail loudly when numerator or denominator exceeds the signed width."""
    limit = max_bits if max_bits is not None else get_exact_max_bits()
    if abs(x.numerator).bit_length() > limit or x.denominator.bit_length() > limit:
        raise ArithmeticOverflowError(
            f"rational {x} exceeds {limit}-bit width",
            details={"numerator_bits": abs(x.numerator).bit_length(),
                     "denominator_bits": x.denominator.bit_length()}
        )
    return x


@functools.total_ordering
class Decimal3:
    """
    Signed decimal with a fixed number of fractional digits.

    Stored as an integer ``scaled`` = value · 10^places. Instances are immutable
    and compare exactly against each other, ints and Fractions.
    """

    __slots__ = ("_scaled", "_places")

    def __init__(self, scaled: int, places: int = 3):
        if places < 1:
            raise ValidationError("places must be >= 1", field="places")
        object.__setattr__(self, "_scaled", int(scaled))
        object.__setattr__(self, "_places", places)

    def __setattr__(self, name, value):
        raise AttributeError("Decimal3 is immutable")

    @property
    def scaled(self) -> int:
        return self._scaled

    @property
    def places(self) -> int:
        return self._places

    @classmethod
    def parse(cls, text: str, places: int = 3) -> "Decimal3":
        """Exact parse of an ASCII decimal such as ``28.110``, ``32`` or ``-0.5``."""
        match = _DECIMAL_RE.match(text.strip())
        if not match:
            raise ValidationError(f"not a decimal: {text!r}", field="decimal")
        sign, whole, frac = match.group(1), match.group(2), match.group(3) or ""
        if len(frac) > places:
            raise ValidationError(f"{text!r} has more than {places} fractional digits", field="decimal")
        magnitude = int(whole) * 10 ** places + int(frac.ljust(places, "0"))
        return cls(-magnitude if sign == "-" else magnitude, places)

    def to_fraction(self) -> Fraction:
        return Fraction(self._scaled, 10 ** self._places)

    def is_integral(self) -> bool:
        return self._scaled % 10 ** self._places == 0

    @staticmethod
    def _coerce(other) -> Union[Fraction, None]:
        if isinstance(other, Decimal3):
            return other.to_fraction()
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return None

    def __eq__(self, other) -> bool:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self.to_fraction() == value

    def __lt__(self, other) -> bool:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self.to_fraction() < value

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __str__(self) -> str:
        unit = 10 ** self._places
        sign = "-" if self._scaled < 0 else ""
        whole, frac = divmod(abs(self._scaled), unit)
        return f"{sign}{whole}.{frac:0{self._places}d}"

    def __repr__(self) -> str:
        return f"Decimal3('{self}')"


def format_compact(d: Decimal3) -> str:
    """Integral values without fractional digits ("5", "32"), others in full ("28.110")."""
    if d.is_integral():
        return str(d.scaled // 10 ** d.places)
    return str(d)


def dec_ceil(x: Fraction, places: int = None) -> Decimal3:
    """Smallest decimal with ``places`` fractional digits that is >= x."""
    places = places if places is not None else get_decimal_places()
    if places < 1:
        raise ValidationError("places must be >= 1", field="places")
    x = Fraction(x)
    scaled = -((-x.numerator * 10 ** places) // x.denominator)
    return Decimal3(scaled, places)


def pow_upper(base: int, exponent: Decimal3, places: int = None) -> Decimal3:
    """
    Smallest ``places``-digit decimal that is >= base ** exponent.

    With exponent = k / 10^q the answer is D / 10^places for the least integer
    D satisfying D^(10^q) >= base^k · 10^(places · 10^q); D comes from an exact
    integer root.
    """
    places = places if places is not None else get_decimal_places()
    if base < 2:
        raise ValidationError(f"base must be >= 2, got {base}", field="base")
    if exponent < 0:
        raise ValidationError(f"exponent must be >= 0, got {exponent}", field="exponent")

    k, q = exponent.scaled, exponent.places
    root_degree = 10 ** q
    estimated_bits = k * base.bit_length() + places * root_degree * 4
    if estimated_bits > get_exact_max_pow_bits():
        raise ArithmeticOverflowError(
            f"{base}^{exponent} is outside the representable range",
            details={"estimated_bits": estimated_bits}
        )

    target = gmpy2.mpz(base) ** k * gmpy2.mpz(10) ** (places * root_degree)
    root, exact = gmpy2.iroot(target, root_degree)
    scaled = int(root) if exact else int(root) + 1
    return Decimal3(scaled, places)
