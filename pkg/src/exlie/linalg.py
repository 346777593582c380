"""Exact linear algebra over Fraction / CayleyScalar object arrays.

Nothing here is clever: Gaussian elimination with exact division, a
fraction-free Bareiss pass for leading principal minors, and an incremental
integer echelon used to carve bases out of spanning sets.  Dimensions stay
small (<= a few hundred), so clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np


def exact_inv(mat: np.ndarray) -> np.ndarray:
    """Inverse of a square matrix over an exact scalar ring (object dtype)."""
    n = mat.shape[0]
    a = np.empty((n, 2 * n), dtype=object)
    a[:, :n] = mat
    a[:, n:] = 0
    for i in range(n):
        a[i, n + i] = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            v = a[r, col]
            if v != 0:
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
        pv = a[col, col]
        if pv != 1:
            inv = Fraction(1, pv) if isinstance(pv, int) else 1 / pv
            a[col] = a[col] * inv
        for r in range(n):
            if r != col and a[r, col] != 0:
                a[r] = a[r] - a[r, col] * a[col]
    return a[:, n:]


def bareiss_leading_minors(mat: np.ndarray) -> list:
    """All leading principal minors of an integer matrix, exactly."""
    n = mat.shape[0]
    a = [[int(mat[i, j]) for j in range(n)] for i in range(n)]
    minors = []
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            # Sylvester's test needs nonzero pivots; fall back to an exact
            # determinant of the leading block.
            minors.append(exact_det_int([row[:k + 1] for row in a[:k + 1]]))
            if minors[-1] == 0:
                return minors + [0] * (n - k - 1)
            continue
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
        minors.append(a[k][k] if k == 0 else prev)
    # Bareiss leaves minor_k in a[k][k] after step k.
    return [a[k][k] for k in range(n)]


def exact_det_int(rows: list[list[int]]) -> int:
    """Determinant of a small integer matrix via fraction-free elimination."""
    n = len(rows)
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_positive_definite_exact(mat: np.ndarray) -> bool:
    """Sylvester test with exact integer minors (matrix must be integral)."""
    return all(m > 0 for m in bareiss_leading_minors(mat))


def _content(vec) -> int:
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
        if g == 1:
            return 1
    return g or 1


class IntegerEchelon:
    """Incremental echelon over Z for carving a basis out of integer vectors.

    Each accepted row is stored together with a tag payload (anything the
    caller wants to remember, e.g. which generator produced it).  solve()
    expresses a new vector in the row space with exact rational (or other
    exact scalar) coefficients.
    """

    def __init__(self, length: int):
        self.length = length
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []
        self.tags: list = []
        self.combs: list[dict] = []   # row = sum_tag comb[tag] * original vector

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce_int(self, vec: np.ndarray, comb: dict):
        for row, piv, rcomb in zip(self.rows, self.pivots, self.combs):
            v = vec[piv]
            if v != 0:
                p = row[piv]
                vec = vec * p - row * v
                comb = {t: p * c for t, c in comb.items()}
                for t, c in rcomb.items():
                    comb[t] = comb.get(t, 0) - v * c
                g = _content(vec)
                if g > 1:
                    vec = vec // g
                    comb = {t: Fraction(c, g) for t, c in comb.items()}
        return vec, comb

    def add(self, vec_ints, tag=None) -> bool:
        """Returns True if the vector enlarged the span."""
        vec = np.array([int(v) for v in vec_ints], dtype=object)
        vec, comb = self._reduce_int(vec, {tag: 1})
        for piv in range(self.length):
            if vec[piv] != 0:
                g = _content(vec)
                if g > 1:
                    vec = vec // g
                    comb = {t: Fraction(c, g) for t, c in comb.items()}
                self.rows.append(vec)
                self.pivots.append(piv)
                self.tags.append(tag)
                self.combs.append({t: c for t, c in comb.items() if c != 0})
                return True
        return False

    def solve(self, vec) -> list:
        """Coefficients c_i with vec = sum c_i row_i; raises if not in span."""
        work = np.array(list(vec), dtype=object)
        coeffs = []
        for row, piv in zip(self.rows, self.pivots):
            v = work[piv]
            p = int(row[piv])
            if isinstance(v, int):
                c = Fraction(v, p)
            else:
                c = v / p
            if c != 0:
                work = work - c * row
            coeffs.append(c)
        if any(v != 0 for v in work):
            raise ValueError("vector not in the span of the echelon rows")
        return coeffs

    def solve_in_tags(self, vec) -> dict:
        """Express vec in terms of the originally added (accepted) vectors."""
        coeffs = self.solve(vec)
        out: dict = {}
        for c, comb in zip(coeffs, self.combs):
            if c == 0:
                continue
            for t, cc in comb.items():
                out[t] = out.get(t, 0) + c * cc
        return {t: c for t, c in out.items() if c != 0}

    def contains(self, vec) -> bool:
        try:
            self.solve(vec)
            return True
        except ValueError:
            return False
