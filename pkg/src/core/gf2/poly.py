"""
GF(2)[x] 多项式，以 int 的位向量表示（第 i 位为 x^i 的系数）。

乘除与 gcd 直接在位向量上做（MeatAxe 的极小多项式可达数百次）；
等次分解交给 sympy 的 galoistools。
"""

from typing import List, Optional, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_edf_zassenhaus


def degree(f: int) -> int:
    return f.bit_length() - 1


def mul(a: int, b: int) -> int:
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def divmod_poly(a: int, m: int) -> Tuple[int, int]:
    if m == 0:
        raise ZeroDivisionError("polynomial division by zero")
    dm = degree(m)
    q = 0
    while a and degree(a) >= dm:
        shift = degree(a) - dm
        q |= 1 << shift
        a ^= m << shift
    return q, a


def mod(a: int, m: int) -> int:
    return divmod_poly(a, m)[1]


def mulmod(a: int, b: int, m: int) -> int:
    return mod(mul(a, b), m)


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def to_dense(f: int) -> List[int]:
    """galoistools 的稠密表示：系数从高次到低次"""
    return [ZZ((f >> i) & 1) for i in range(degree(f), -1, -1)]


def from_dense(coefficients) -> int:
    f = 0
    for c in coefficients:
        f = (f << 1) | (int(c) & 1)
    return f


def smallest_irreducible_factor(f: int, max_degree: int) -> Optional[int]:
    """
    An irreducible factor of f of least degree, provided that degree is at
    most ``max_degree``; None otherwise. Among several factors of that degree
    the numerically smallest is returned.
    """
    if degree(f) < 1:
        return None
    x = mod(0b10, f)
    h = x
    for d in range(1, min(max_degree, degree(f)) + 1):
        h = mulmod(h, h, f)   # x^(2^d) mod f
        g = gcd(f, h ^ x)
        if degree(g) < 1:
            continue
        if degree(g) == d:
            return g
        factors = gf_edf_zassenhaus(to_dense(g), d, 2, ZZ)
        return min(from_dense(factor) for factor in factors)
    return None
