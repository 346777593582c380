"""Cubic norm structures J: norm, adjoint, cross, trace pairing, U-operator.

Three kinds are supported:

* ``unit``        J = F with N(x) = x^3, x# = x^2, (x,y) = 3xy.  The axioms
                  force these formulas.
* ``quadratic``   J = F x S for a quadratic space S of signature (1, r) with
                  distinguished 1_S:  N((b,t)) = b q_S(t), (b,t)# =
                  (q_S(t), b iota_S(t)).  S carries the diagonal Gram
                  diag(1,-1,...,-1) and iota_S = diag(1,-1,...,-1).
* ``hermitian3``  J = H_3(C), Hermitian 3x3 matrices over a composition
                  algebra C of dimension 1, 2, 4 or 8, with the determinant
                  norm N = c1 c2 c3 - sum_i c_i n(a_i) + tr((a1 a2) a3),
                  a_i sitting in the (i+1, i+2) slot.

Elements are coordinate vectors over a scalar ring; every operation below is
polynomial with integer structure constants, so the same code runs on python
ints / Fraction / CayleyScalar object arrays, on int64 arrays, and on
float/complex arrays.  Coordinate order: unit [x]; quadratic [beta, s0..sr];
hermitian3 [c1, c2, c3, a1..., a2..., a3...].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .composition import CompositionAlgebra


def _half(v):
    """Exact halving that keeps integers integral."""
    if isinstance(v, int):
        if v % 2 == 0:
            return v // 2
        return Fraction(v, 2)
    if isinstance(v, Fraction):
        return v / 2
    return v / 2


def half_arr(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object:
        out = np.empty(arr.shape, dtype=object)
        flat_in = arr.ravel()
        flat_out = out.ravel()
        for k in range(flat_in.size):
            flat_out[k] = _half(flat_in[k])
        return out
    if arr.dtype.kind in "iu":
        if np.any(arr & 1):
            raise ValueError("integer array not divisible by 2; use object dtype")
        return arr >> 1
    return arr / 2


@dataclass(frozen=True)
class CubicDescriptor:
    """Identifies a cubic norm structure; hashable so caches key off it."""

    kind: str            # "unit" | "quadratic" | "hermitian3"
    r: int = 0           # quadratic: S has signature (1, r)
    cdim: int = 0        # hermitian3: dim of the composition algebra

    def __post_init__(self):
        if self.kind == "unit":
            pass
        elif self.kind == "quadratic":
            if self.r < 0:
                raise ValueError("signature (1, r) needs r >= 0")
        elif self.kind == "hermitian3":
            if self.cdim not in (1, 2, 4, 8):
                raise ValueError("hermitian3 needs a composition algebra of dim 1/2/4/8")
        else:
            raise ValueError(f"unknown cubic norm structure kind {self.kind!r}")

    @property
    def dim(self) -> int:
        if self.kind == "unit":
            return 1
        if self.kind == "quadratic":
            return 2 + self.r
        return 3 + 3 * self.cdim

    @property
    def calg(self) -> CompositionAlgebra:
        if self.kind != "hermitian3":
            raise ValueError("no composition algebra for this kind")
        return CompositionAlgebra(self.cdim)

    # -- distinguished data ----------------------------------------------------

    def gram_diag(self) -> np.ndarray:
        """Diagonal of the trace-pairing Gram matrix (always diagonal here)."""
        return _gram_diag(self)

    def unit(self, dtype=object) -> np.ndarray:
        v = zeros(self, dtype)
        if self.kind == "unit":
            v[0] = 1
        elif self.kind == "quadratic":
            v[0] = 1
            v[1] = 1
        else:
            v[0] = v[1] = v[2] = 1
        return v

    def basis(self, k: int, dtype=object) -> np.ndarray:
        v = zeros(self, dtype)
        v[k] = 1
        return v

    def basis_list(self, dtype=object) -> list[np.ndarray]:
        return [self.basis(k, dtype) for k in range(self.dim)]


UNIT = CubicDescriptor("unit")


def quadratic_descriptor(r: int) -> CubicDescriptor:
    return CubicDescriptor("quadratic", r=r)


def hermitian3_descriptor(cdim: int) -> CubicDescriptor:
    return CubicDescriptor("hermitian3", cdim=cdim)


# canonical descriptors for the five exceptional rows
DESCRIPTORS = {
    "g2": UNIT,
    "f4": hermitian3_descriptor(1),
    "e6": hermitian3_descriptor(2),
    "e7": hermitian3_descriptor(4),
    "e8": hermitian3_descriptor(8),
}


def descriptor_from_token(token: str) -> CubicDescriptor:
    """Parse 'g2'/'f4'/'e6'/'e7'/'e8' or 'so:<r>'."""
    token = token.lower()
    if token in DESCRIPTORS:
        return DESCRIPTORS[token]
    if token.startswith("so:"):
        return quadratic_descriptor(int(token[3:]))
    raise ValueError(f"unknown algebra token {token!r}")


@lru_cache(maxsize=None)
def _gram_diag(desc: CubicDescriptor) -> np.ndarray:
    if desc.kind == "unit":
        return np.array([3], dtype=np.int64)
    if desc.kind == "quadratic":
        return np.array([1] + [2] * (1 + desc.r), dtype=np.int64)
    return np.array([1, 1, 1] + [2] * (3 * desc.cdim), dtype=np.int64)


def zeros(desc: CubicDescriptor, dtype=object) -> np.ndarray:
    return np.zeros(desc.dim, dtype=dtype)


def _slots(desc: CubicDescriptor):
    """Hermitian3 slot views: (c, a1, a2, a3) index ranges."""
    dc = desc.cdim
    return (slice(0, 3), slice(3, 3 + dc), slice(3 + dc, 3 + 2 * dc),
            slice(3 + 2 * dc, 3 + 3 * dc))


# -- the cubic data ----------------------------------------------------------------


def j_trace(desc: CubicDescriptor, x: np.ndarray):
    if desc.kind == "unit":
        return 3 * x[0]
    if desc.kind == "quadratic":
        return x[0] + 2 * x[1]
    return x[0] + x[1] + x[2]


def j_pair(desc: CubicDescriptor, x: np.ndarray, y: np.ndarray):
    """Trace pairing (x, y); symmetric positive definite on rational points."""
    return np.dot(x * _gram_diag(desc), y)


def j_norm(desc: CubicDescriptor, x: np.ndarray):
    if desc.kind == "unit":
        return x[0] * x[0] * x[0]
    if desc.kind == "quadratic":
        t = x[1:]
        return x[0] * (t[0] * t[0] - np.dot(t[1:], t[1:]))
    c, s1, s2, s3 = _slots(desc)
    alg = desc.calg
    a1, a2, a3 = x[s1], x[s2], x[s3]
    return (x[0] * x[1] * x[2]
            - x[0] * alg.norm(a1) - x[1] * alg.norm(a2) - x[2] * alg.norm(a3)
            + alg.trace(alg.mul(alg.mul(a1, a2), a3)))


def j_adjoint(desc: CubicDescriptor, x: np.ndarray) -> np.ndarray:
    if desc.kind == "unit":
        return x * x[0]
    if desc.kind == "quadratic":
        t = x[1:]
        out = np.empty_like(x)
        out[0] = t[0] * t[0] - np.dot(t[1:], t[1:])
        out[1] = x[0] * t[0]
        out[2:] = -x[0] * t[1:]
        return out
    c, s1, s2, s3 = _slots(desc)
    alg = desc.calg
    a1, a2, a3 = x[s1], x[s2], x[s3]
    out = np.empty_like(x)
    out[0] = x[1] * x[2] - alg.norm(a1)
    out[1] = x[2] * x[0] - alg.norm(a2)
    out[2] = x[0] * x[1] - alg.norm(a3)
    out[s1] = alg.conj(alg.mul(a2, a3)) - x[0] * a1
    out[s2] = alg.conj(alg.mul(a3, a1)) - x[1] * a2
    out[s3] = alg.conj(alg.mul(a1, a2)) - x[2] * a3
    return out


def j_cross(desc: CubicDescriptor, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """x cross y = (x+y)# - x# - y#, symmetric bilinear; x cross x = 2 x#."""
    if desc.kind == "unit":
        return 2 * x[0] * y
    if desc.kind == "quadratic":
        t, u = x[1:], y[1:]
        out = np.empty_like(x)
        out[0] = 2 * (t[0] * u[0] - np.dot(t[1:], u[1:]))
        out[1] = x[0] * u[0] + y[0] * t[0]
        out[2:] = -x[0] * u[1:] - y[0] * t[1:]
        return out
    c, s1, s2, s3 = _slots(desc)
    alg = desc.calg
    a1, a2, a3 = x[s1], x[s2], x[s3]
    b1, b2, b3 = y[s1], y[s2], y[s3]
    out = np.empty_like(x)
    out[0] = x[1] * y[2] + y[1] * x[2] - alg.norm_bilinear(a1, b1)
    out[1] = x[2] * y[0] + y[2] * x[0] - alg.norm_bilinear(a2, b2)
    out[2] = x[0] * y[1] + y[0] * x[1] - alg.norm_bilinear(a3, b3)
    out[s1] = alg.conj(alg.mul(a2, b3) + alg.mul(b2, a3)) - x[0] * b1 - y[0] * a1
    out[s2] = alg.conj(alg.mul(a3, b1) + alg.mul(b3, a1)) - x[1] * b2 - y[1] * a2
    out[s3] = alg.conj(alg.mul(a1, b2) + alg.mul(b1, a2)) - x[2] * b3 - y[2] * a3
    return out


def j_trilinear(desc: CubicDescriptor, x, y, z):
    """Symmetric trilinear form normalized by (x,x,x) = 6 N(x)."""
    return j_pair(desc, j_cross(desc, x, y), z)


def j_u(desc: CubicDescriptor, x, y) -> np.ndarray:
    """U_x(y) = -x# cross y + (x,y) x;  N(U_x y) = N(x)^2 N(y)."""
    return -j_cross(desc, j_adjoint(desc, x), y) + j_pair(desc, x, y) * x


def jordan_product(desc: CubicDescriptor, x, y) -> np.ndarray:
    """{x,y} = x cross y + tr(x) y + tr(y) x - tr(x cross y) 1_J.

    Equals Phi_{iota(1), x}(y); for special J embedded with U_a b = aba this
    is xy + yx.
    """
    cr = j_cross(desc, x, y)
    out = cr + j_trace(desc, x) * y + j_trace(desc, y) * x
    return out - j_trace(desc, cr) * desc.unit(dtype=out.dtype if out.dtype != object else object)


def j_square(desc: CubicDescriptor, x) -> np.ndarray:
    """Jordan square x^2 = {x,x}/2 = x# + tr(x) x - tr(x#) 1_J."""
    adj = j_adjoint(desc, x)
    out = adj + j_trace(desc, x) * x
    return out - j_trace(desc, adj) * desc.unit(dtype=object if out.dtype == object else out.dtype)


def _is_zero_arr(arr, tol=0):
    if tol:
        return bool(np.all(np.abs(arr.astype(complex)) <= tol))
    return all(v == 0 for v in arr.ravel())


def j_rank(desc: CubicDescriptor, x: np.ndarray, tol=0) -> int:
    """0 iff x = 0; <=1 iff x# = 0; <=2 iff N(x) = 0; else 3."""
    if _is_zero_arr(x, tol):
        return 0
    if _is_zero_arr(j_adjoint(desc, x), tol):
        return 1
    n = j_norm(desc, x)
    if (abs(complex(n)) <= tol) if tol else n == 0:
        return 2
    return 3


def is_positive_definite(desc: CubicDescriptor, y: np.ndarray) -> bool:
    """Y > 0 in the sense tr(Y) > 0, tr(Y#) > 0, N(Y) > 0 (all real scalars)."""
    return (j_trace(desc, y) > 0 and j_trace(desc, j_adjoint(desc, y)) > 0
            and j_norm(desc, y) > 0)


# -- operators built from the cubic data -------------------------------------------


@lru_cache(maxsize=None)
def cross_tensor(desc: CubicDescriptor) -> np.ndarray:
    """Integer tensor C with (x cross y)_k = sum_{ij} C[i,j,k] x_i y_j."""
    d = desc.dim
    C = np.zeros((d, d, d), dtype=np.int64)
    basis = [desc.basis(i, dtype=np.int64) for i in range(d)]
    for i in range(d):
        for j in range(i, d):
            v = j_cross(desc, basis[i], basis[j])
            C[i, j] = v
            C[j, i] = v
    return C


def cross_matrix(desc: CubicDescriptor, u: np.ndarray) -> np.ndarray:
    """Matrix of z -> u cross z."""
    C = cross_tensor(desc)
    if u.dtype == object:
        d = desc.dim
        out = np.zeros((d, d), dtype=object)
        for i in range(d):
            ui = u[i]
            if ui == 0:
                continue
            out = out + ui * C[i].T
        return out
    return np.tensordot(u, C, axes=(0, 0)).T.astype(u.dtype, copy=False)


def phi_matrix(desc: CubicDescriptor, gamma: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Matrix of Phi_{gamma,x}: z -> -gamma cross (x cross z) + (gamma,z) x + (gamma,x) z.

    gamma lives in the dual J^vee, represented by its trace-pairing partner.
    """
    d = desc.dim
    g = _gram_diag(desc)
    mg = cross_matrix(desc, gamma)
    mx = cross_matrix(desc, x)
    out = -np.dot(mg, mx) + np.outer(x, gamma * g)
    diag = j_pair(desc, gamma, x)
    if out.dtype == object:
        for k in range(d):
            out[k, k] = out[k, k] + diag
    else:
        out[np.diag_indices(d)] += diag
    return out


def dual_matrix(desc: CubicDescriptor, phi: np.ndarray) -> np.ndarray:
    """Action induced on J^vee: gamma -> -phi-adjoint(gamma) in J coordinates."""
    g = _gram_diag(desc)
    # -G^{-1} phi^T G with G diagonal: entry (i,j) -> -phi[j,i] g_j / g_i.
    out = -(phi.T * g[None, :])
    if out.dtype == object:
        d = desc.dim
        res = np.empty_like(out)
        for i in range(d):
            gi = int(g[i])
            for j in range(d):
                res[i, j] = _exact_div(out[i, j], gi)
        return res
    return out / g[:, None]


def _exact_div(v, k: int):
    if k == 1:
        return v
    if isinstance(v, int):
        if v % k == 0:
            return v // k
        return Fraction(v, k)
    if isinstance(v, Fraction):
        return v / k
    return v / k


# -- random elements (seeded; small integer coordinates keep exact arithmetic fast)


def random_element(desc: CubicDescriptor, rng, lo: int = -3, hi: int = 3,
                   dtype=object) -> np.ndarray:
    v = zeros(desc, dtype)
    for k in range(desc.dim):
        v[k] = rng.randint(lo, hi)
    return v


# -- thin wrapper type ---------------------------------------------------------------


@dataclass
class JordanElement:
    """Coordinate vector in a cubic norm structure."""

    desc: CubicDescriptor
    coords: np.ndarray

    def norm(self):
        return j_norm(self.desc, self.coords)

    def adjoint(self) -> "JordanElement":
        return JordanElement(self.desc, j_adjoint(self.desc, self.coords))

    def cross(self, other: "JordanElement") -> "JordanElement":
        return JordanElement(self.desc, j_cross(self.desc, self.coords, other.coords))

    def pair(self, other: "JordanElement"):
        return j_pair(self.desc, self.coords, other.coords)

    def trace(self):
        return j_trace(self.desc, self.coords)

    def u_apply(self, other: "JordanElement") -> "JordanElement":
        return JordanElement(self.desc, j_u(self.desc, self.coords, other.coords))

    def product(self, other: "JordanElement") -> "JordanElement":
        return JordanElement(self.desc, jordan_product(self.desc, self.coords, other.coords))

    def rank(self, tol=0) -> int:
        return j_rank(self.desc, self.coords, tol)
