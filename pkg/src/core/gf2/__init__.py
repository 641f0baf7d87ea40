"""GF(2) 线性代数与多项式"""

from src.core.gf2.matrix import EchelonBasis, GF2Matrix, krylov_minimal_polynomial

__all__ = ["EchelonBasis", "GF2Matrix", "krylov_minimal_polynomial"]
