"""Definite composition algebras of dimension 1, 2, 4, 8 over Q.

Multiplication tables are generated by Cayley-Dickson doubling with the
convention (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)), starting from the
ground field.  The distinguished basis is orthonormal for the norm form,
e0 = 1, and conj negates e1..e_{dim-1}.  Coordinates are numpy arrays of any
scalar dtype (python int / Fraction / CayleyScalar as objects, or floats).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


def _double(table: np.ndarray) -> np.ndarray:
    """Cayley-Dickson double of a multiplication tensor.

    table[i, j, k] is the e_k coefficient of e_i * e_j.  Doubling represents
    (a, b) with a on coordinates 0..n-1 and b on n..2n-1.
    """
    n = table.shape[0]
    out = np.zeros((2 * n, 2 * n, 2 * n), dtype=np.int64)
    conj_sign = np.array([1] + [-1] * (n - 1), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            # (a,0)(c,0) = (ac, 0)
            out[i, j, :n] = table[i, j]
            # (a,0)(0,d) = (0, da)
            out[i, n + j, n:] = table[j, i]
            # (0,b)(c,0) = (0, b conj(c)) = conj-sign on c
            out[n + i, j, n:] = conj_sign[j] * table[i, j]
            # (0,b)(0,d) = (-conj(d) b, 0)
            out[n + i, n + j, :n] = -conj_sign[j] * table[j, i]
    return out


@lru_cache(maxsize=None)
def _mul_table(dim: int) -> np.ndarray:
    if dim == 1:
        return np.ones((1, 1, 1), dtype=np.int64)
    if dim in (2, 4, 8):
        return _double(_mul_table(dim // 2))
    raise ValueError(f"composition algebras have dimension 1, 2, 4 or 8, not {dim}")


@dataclass(frozen=True)
class CompositionAlgebra:
    """One of R, C, the Hamilton quaternions, or the nonsplit octonions."""

    dim: int

    def __post_init__(self):
        if self.dim not in (1, 2, 4, 8):
            raise ValueError(f"bad composition algebra dimension {self.dim}")

    @property
    def table(self) -> np.ndarray:
        return _mul_table(self.dim)

    def zero(self, dtype=object) -> np.ndarray:
        v = np.zeros(self.dim, dtype=dtype)
        if dtype == object:
            v[:] = 0
        return v

    def one(self, dtype=object) -> np.ndarray:
        v = self.zero(dtype)
        v[0] = 1
        return v

    def basis(self, k: int, dtype=object) -> np.ndarray:
        v = self.zero(dtype)
        v[k] = 1
        return v

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product in the algebra; bilinear with two-sided identity e0."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("element does not belong to this algebra")
        t = self.table
        # (x*y)_k = sum_{ij} t[i,j,k] x_i y_j
        tmp = np.tensordot(x, t, axes=(0, 0))  # (j, k)
        return np.dot(y, tmp)

    def conj(self, x: np.ndarray) -> np.ndarray:
        out = -x
        out[0] = x[0]
        return out

    def norm(self, x: np.ndarray):
        """Multiplicative quadratic norm: sum of squared coordinates."""
        return np.dot(x, x)

    def norm_bilinear(self, x: np.ndarray, y: np.ndarray):
        """n(x+y) - n(x) - n(y) = 2 <x, y>."""
        return 2 * np.dot(x, y)

    def trace(self, x: np.ndarray):
        """x + conj(x) = trace(x) * 1."""
        return 2 * x[0]


REALS = CompositionAlgebra(1)
COMPLEXES = CompositionAlgebra(2)
QUATERNIONS = CompositionAlgebra(4)
OCTONIONS = CompositionAlgebra(8)


def c_mul(alg: CompositionAlgebra, x, y):
    return alg.mul(x, y)


def c_conj_norm_trace(alg: CompositionAlgebra, x):
    return alg.conj(x), alg.norm(x), alg.trace(x)
