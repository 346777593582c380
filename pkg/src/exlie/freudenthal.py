"""Freudenthal's space W_J = F + J + J^vee + F with its symplectic and quartic
forms, the trilinear map t and flat, element rank, the similitude-group
generators, and the action on the Hermitian symmetric space with its factor
of automorphy.

A vector is (a, b, c, d) with scalars a, d and Jordan coordinates b, c; the
J^vee slot c is identified with J through the trace pairing.  The symplectic
form is <v, w> = a d' - (b, c') + (c, b') - d a', the quartic form

    q(v) = (ad - (b,c))^2 + 4 a N(c) + 4 d N(b) - 4 (b#, c#),

and the four-linear form is normalized by (v,v,v,v) = 2 q(v).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import jordan as jd
from .jordan import CubicDescriptor
from .linalg import exact_inv


@dataclass
class FreudenthalVector:
    desc: CubicDescriptor
    a: object
    b: np.ndarray
    c: np.ndarray
    d: object

    def __add__(self, o: "FreudenthalVector") -> "FreudenthalVector":
        return FreudenthalVector(self.desc, self.a + o.a, self.b + o.b,
                                 self.c + o.c, self.d + o.d)

    def __sub__(self, o: "FreudenthalVector") -> "FreudenthalVector":
        return FreudenthalVector(self.desc, self.a - o.a, self.b - o.b,
                                 self.c - o.c, self.d - o.d)

    def __rmul__(self, s) -> "FreudenthalVector":
        return FreudenthalVector(self.desc, s * self.a, s * self.b,
                                 s * self.c, s * self.d)

    def __neg__(self) -> "FreudenthalVector":
        return FreudenthalVector(self.desc, -self.a, -self.b, -self.c, -self.d)

    def __eq__(self, o) -> bool:
        return (isinstance(o, FreudenthalVector) and self.a == o.a
                and self.d == o.d and all(self.b == o.b) and all(self.c == o.c))

    def is_zero(self) -> bool:
        return (self.a == 0 and self.d == 0 and all(v == 0 for v in self.b)
                and all(v == 0 for v in self.c))

    def flat_coords(self) -> np.ndarray:
        """Coordinates in the order [a, b..., c..., d]."""
        out = np.empty(2 + 2 * self.desc.dim, dtype=object)
        out[0] = self.a
        out[1:1 + self.desc.dim] = self.b
        out[1 + self.desc.dim:1 + 2 * self.desc.dim] = self.c
        out[-1] = self.d
        return out

    def conj(self) -> "FreudenthalVector":
        from .scalars import scalar_conj
        return FreudenthalVector(self.desc, scalar_conj(self.a),
                                 np.array([scalar_conj(v) for v in self.b], dtype=self.b.dtype),
                                 np.array([scalar_conj(v) for v in self.c], dtype=self.c.dtype),
                                 scalar_conj(self.d))


def w_dim(desc: CubicDescriptor) -> int:
    return 2 + 2 * desc.dim


def w_zero(desc: CubicDescriptor, dtype=object) -> FreudenthalVector:
    return FreudenthalVector(desc, 0, jd.zeros(desc, dtype), jd.zeros(desc, dtype), 0)


def w_make(desc: CubicDescriptor, a, b, c, d) -> FreudenthalVector:
    b = np.asarray(b)
    c = np.asarray(c)
    return FreudenthalVector(desc, a, b, c, d)


def w_from_flat(desc: CubicDescriptor, coords) -> FreudenthalVector:
    d = desc.dim
    coords = np.asarray(coords)
    return FreudenthalVector(desc, coords[0], coords[1:1 + d],
                             coords[1 + d:1 + 2 * d], coords[-1])


def w_basis(desc: CubicDescriptor, k: int, dtype=object, scale=1) -> FreudenthalVector:
    v = w_zero(desc, dtype)
    dj = desc.dim
    if k == 0:
        v.a = scale
    elif k < 1 + dj:
        v.b[k - 1] = scale
    elif k < 1 + 2 * dj:
        v.c[k - 1 - dj] = scale
    else:
        v.d = scale
    return v


def w_basis_list(desc: CubicDescriptor, dtype=object, scale=1) -> list[FreudenthalVector]:
    return [w_basis(desc, k, dtype, scale) for k in range(w_dim(desc))]


# -- forms -------------------------------------------------------------------------


def w_symplectic(v: FreudenthalVector, w: FreudenthalVector):
    d = v.desc
    return (v.a * w.d - jd.j_pair(d, v.b, w.c) + jd.j_pair(d, v.c, w.b)
            - v.d * w.a)


def w_j2(v: FreudenthalVector) -> FreudenthalVector:
    return FreudenthalVector(v.desc, v.d, -v.c, v.b, -v.a)


def w_sym_pair(v: FreudenthalVector, w: FreudenthalVector):
    """(v, w) = <J_2 v, w>; symmetric, positive definite over the rationals."""
    return w_symplectic(w_j2(v), w)


def w_quartic(v: FreudenthalVector):
    d = v.desc
    s = v.a * v.d - jd.j_pair(d, v.b, v.c)
    return (s * s + 4 * v.a * jd.j_norm(d, v.c) + 4 * v.d * jd.j_norm(d, v.b)
            - 4 * jd.j_pair(d, jd.j_adjoint(d, v.b), jd.j_adjoint(d, v.c)))


def w_flat(v: FreudenthalVector) -> FreudenthalVector:
    """v^flat = t(v, v, v), by the closed component formulas."""
    d = v.desc
    a, b, c, dd = v.a, v.b, v.c, v.d
    bc = jd.j_pair(d, b, c)
    badj = jd.j_adjoint(d, b)
    cadj = jd.j_adjoint(d, c)
    s = a * dd - bc
    return FreudenthalVector(
        d,
        -a * a * dd + a * bc - 2 * jd.j_norm(d, b),
        -2 * jd.j_cross(d, c, badj) + 2 * a * cadj - s * b,
        2 * jd.j_cross(d, b, cadj) - 2 * dd * badj + s * c,
        a * dd * dd - dd * bc + 2 * jd.j_norm(d, c),
    )


def w_3t_vvx(v: FreudenthalVector, x: FreudenthalVector) -> FreudenthalVector:
    """3 t(v, v, x), by the closed component formulas."""
    d = v.desc
    a, b, c, dd = v.a, v.b, v.c, v.d
    al, be, ga, de = x.a, x.b, x.c, x.d
    bc = jd.j_pair(d, b, c)
    badj = jd.j_adjoint(d, b)
    cadj = jd.j_adjoint(d, c)
    ac_b2 = a * c - badj          # ac - b#
    c2_db = cadj - dd * b         # c# - db
    a_out = (al * (bc - 2 * a * dd) + jd.j_pair(d, be, a * c - 2 * badj)
             + jd.j_pair(d, ga, a * b) - de * a * a)
    b_out = (al * (2 * cadj - dd * b) + (bc - a * dd) * be
             - 2 * jd.j_cross(d, c, jd.j_cross(d, b, be))
             + jd.j_pair(d, be, c) * b
             + 2 * jd.j_cross(d, ac_b2, ga) + jd.j_pair(d, b, ga) * b
             - de * a * b)
    c_out = (al * (dd * c) + 2 * jd.j_cross(d, c2_db, be)
             + (a * dd - bc) * ga + 2 * jd.j_cross(d, b, jd.j_cross(d, c, ga))
             - jd.j_pair(d, be, c) * c
             - jd.j_pair(d, b, ga) * c + de * (a * c - 2 * badj))
    d_out = (al * dd * dd - jd.j_pair(d, be, dd * c)
             + jd.j_pair(d, 2 * cadj - dd * b, ga)
             + (2 * a * dd - bc) * de)
    return FreudenthalVector(d, a_out, b_out, c_out, d_out)


def w_trilinear(x: FreudenthalVector, y: FreudenthalVector,
                z: FreudenthalVector) -> FreudenthalVector:
    """t(x, y, z), symmetric, with <w, t(x,y,z)> = (w,x,y,z)."""
    six_t = (w_3t_vvx(y + z, x) - w_3t_vvx(y, x) - w_3t_vvx(z, x))
    return Fraction(1, 6) * six_t if six_t.b.dtype == object else (1 / 6) * six_t


def w_fourlinear(w, x, y, z):
    """(w, x, y, z), normalized by (v,v,v,v) = 2 q(v)."""
    return w_symplectic(w, w_trilinear(x, y, z))


# -- Phi_{v,v} pieces (used for rank here and for h(J)^0 in lie_h) -------------------


def quarter_phi_parts(v: FreudenthalVector, w: FreudenthalVector):
    """(gamma, phi_matrix, mu, x) pieces of (1/4) Phi_{v,w}.

    Phi_{v,v} decomposes as 4 [ n_L(c#-db) + n_L^vee(ac-b#) +
    M(Phi_{c,b} + (ad-(b,c)) Id) ]; this returns the polarized quarter in the
    graded coordinates (gamma = deg -1, phi = deg 0 with multiplier mu,
    x = deg +1, where x maps to the endomorphism n_L(-x)).
    """
    d = v.desc
    if v is w:
        gamma = v.a * v.c - jd.j_adjoint(d, v.b)
        x = v.d * v.b - jd.j_adjoint(d, v.c)
        s = v.a * v.d - jd.j_pair(d, v.b, v.c)
        phi = jd.phi_matrix(d, v.c, v.b)
        mu = 2 * jd.j_pair(d, v.c, v.b) + 3 * s
        if phi.dtype == object:
            for k in range(d.dim):
                phi[k, k] = phi[k, k] + s
        else:
            phi[np.diag_indices(d.dim)] += s
        return gamma, phi, mu, x
    gamma = jd.half_arr(v.a * w.c + w.a * v.c - jd.j_cross(d, v.b, w.b))
    x = jd.half_arr(v.d * w.b + w.d * v.b - jd.j_cross(d, v.c, w.c))
    s2 = v.a * w.d + w.a * v.d - jd.j_pair(d, v.b, w.c) - jd.j_pair(d, w.b, v.c)
    phi = jd.half_arr(jd.phi_matrix(d, v.c, w.b) + jd.phi_matrix(d, w.c, v.b))
    mu = jd.j_pair(d, v.c, w.b) + jd.j_pair(d, w.c, v.b)
    s = jd._half(s2)
    mu = mu + 3 * s
    if phi.dtype == object:
        for k in range(d.dim):
            phi[k, k] = phi[k, k] + s
    else:
        phi[np.diag_indices(d.dim)] += s
    return gamma, phi, mu, x


def w_rank(v: FreudenthalVector, tol=0) -> int:
    """0 iff v=0; <=1 iff Phi_{v,v}=0; <=2 iff v^flat=0; <=3 iff q(v)=0; else 4."""
    def zero_arr(arr):
        if tol:
            return bool(np.all(np.abs(np.asarray(arr, dtype=complex)) <= tol))
        return all(u == 0 for u in np.asarray(arr).ravel())

    def zero_sc(s):
        return abs(complex(s)) <= tol if tol else s == 0

    if v.is_zero():
        return 0
    gamma, phi, mu, x = quarter_phi_parts(v, v)
    if zero_arr(gamma) and zero_arr(x) and zero_arr(phi) and zero_sc(mu):
        return 1
    fl = w_flat(v)
    if fl.is_zero() if not tol else (zero_sc(fl.a) and zero_sc(fl.d)
                                     and zero_arr(fl.b) and zero_arr(fl.c)):
        return 2
    if zero_sc(w_quartic(v)):
        return 3
    return 4


# -- group generators ----------------------------------------------------------------


def _apply_gen(gen: tuple, v: FreudenthalVector) -> FreudenthalVector:
    d = v.desc
    kind = gen[0]
    if kind == "n":
        x = gen[1]
        xadj = jd.j_adjoint(d, x)
        return FreudenthalVector(
            d, v.a, v.b + v.a * x,
            v.c + jd.j_cross(d, v.b, x) + v.a * xadj,
            v.d + jd.j_pair(d, v.c, x) + jd.j_pair(d, v.b, xadj)
            + v.a * jd.j_norm(d, x))
    if kind == "nv":
        y = gen[1]
        yadj = jd.j_adjoint(d, y)
        return FreudenthalVector(
            d,
            v.a + jd.j_pair(d, v.b, y) + jd.j_pair(d, v.c, yadj)
            + v.d * jd.j_norm(d, y),
            v.b + jd.j_cross(d, v.c, y) + v.d * yadj,
            v.c + v.d * y, v.d)
    if kind == "M":
        _, delta, m, mdual = gen
        dinv = (Fraction(1, delta) if isinstance(delta, int) else 1 / delta)
        return FreudenthalVector(d, dinv * v.a, dinv * np.dot(m, v.b),
                                 delta * np.dot(mdual, v.c), delta * v.d)
    if kind == "eta":
        z = gen[1]
        zi = Fraction(1, z) if isinstance(z, int) else 1 / z
        return FreudenthalVector(d, z * z * z * v.a, z * v.b, zi * v.c,
                                 zi * zi * zi * v.d)
    if kind == "J2":
        return w_j2(v)
    if kind == "w0":
        return FreudenthalVector(d, v.a, -v.b, v.c, -v.d)
    if kind == "scalar":
        w = gen[1]
        return FreudenthalVector(d, w * v.a, w * v.b, w * v.c, w * v.d)
    raise ValueError(f"unknown generator {kind!r}")


def _gen_nu(gen: tuple):
    if gen[0] == "w0":
        return -1
    if gen[0] == "scalar":
        return gen[1] * gen[1]
    return 1


@dataclass
class HSimilitude:
    """Element of the similitude group of (W_J, <,>, q), as a generator word.

    The word is applied left factor first acting last: word (g1, g2) means
    the map g1 o g2.  The dense matrix is materialized lazily.
    """

    desc: CubicDescriptor
    word: tuple
    nu: object = 1
    _mat: np.ndarray = field(default=None, repr=False, compare=False)

    def apply(self, v: FreudenthalVector) -> FreudenthalVector:
        for gen in reversed(self.word):
            v = _apply_gen(gen, v)
        return v

    def matrix(self, dtype=object) -> np.ndarray:
        if self._mat is None or self._mat.dtype != np.dtype(dtype):
            n = w_dim(self.desc)
            mat = np.empty((n, n), dtype=dtype)
            for k in range(n):
                mat[:, k] = self.apply(w_basis(self.desc, k, dtype)).flat_coords()
            self._mat = mat
        return self._mat

    def compose(self, other: "HSimilitude") -> "HSimilitude":
        return HSimilitude(self.desc, self.word + other.word,
                           self.nu * other.nu)

    def __matmul__(self, other: "HSimilitude") -> "HSimilitude":
        return self.compose(other)

    def inverse(self) -> "HSimilitude":
        inv_word = []
        for gen in reversed(self.word):
            kind = gen[0]
            if kind == "n":
                inv_word.append(("n", -gen[1]))
            elif kind == "nv":
                inv_word.append(("nv", -gen[1]))
            elif kind == "M":
                _, delta, m, mdual = gen
                dinv = Fraction(1, delta) if isinstance(delta, int) else 1 / delta
                minv = (exact_inv(m) if m.dtype == object else np.linalg.inv(m))
                mdinv = (exact_inv(mdual) if mdual.dtype == object
                         else np.linalg.inv(mdual))
                inv_word.append(("M", dinv, minv, mdinv))
            elif kind == "eta":
                z = gen[1]
                inv_word.append(("eta", Fraction(1, z) if isinstance(z, int) else 1 / z))
            elif kind == "J2":
                inv_word.extend([("J2",), ("J2",), ("J2",)])  # J2^4 = 1
            elif kind == "w0":
                inv_word.append(("w0",))
            elif kind == "scalar":
                w = gen[1]
                inv_word.append(("scalar", Fraction(1, w) if isinstance(w, int) else 1 / w))
            else:
                raise ValueError(f"unknown generator {kind!r}")
        nu_inv = (Fraction(1, self.nu) if isinstance(self.nu, int) else 1 / self.nu)
        return HSimilitude(self.desc, tuple(inv_word), nu_inv)

    def check_similitude(self, dtype=object, samples: int = 4, rng=None) -> bool:
        """Symplectic similitude on all basis pairs; quartic on sample vectors."""
        import random as _random
        n = w_dim(self.desc)
        basis = w_basis_list(self.desc, dtype)
        images = [self.apply(b) for b in basis]
        for i in range(n):
            for j in range(n):
                lhs = w_symplectic(images[i], images[j])
                rhs = self.nu * w_symplectic(basis[i], basis[j])
                if not _close(lhs, rhs, dtype):
                    return False
        rng = rng or _random.Random(11)
        for _ in range(samples):
            v = w_from_flat(self.desc, np.array(
                [rng.randint(-3, 3) for _ in range(n)], dtype=dtype))
            if not _close(w_quartic(self.apply(v)),
                          self.nu * self.nu * w_quartic(v), dtype):
                return False
        return True


def _close(x, y, dtype):
    if dtype == object:
        return x == y
    return abs(complex(x) - complex(y)) <= 1e-9 * (1 + abs(complex(x)) + abs(complex(y)))


def gen_n(desc: CubicDescriptor, x) -> HSimilitude:
    return HSimilitude(desc, (("n", np.asarray(x)),))


def gen_nv(desc: CubicDescriptor, y) -> HSimilitude:
    return HSimilitude(desc, (("nv", np.asarray(y)),))


def gen_m(desc: CubicDescriptor, delta, m: np.ndarray, tol=0) -> HSimilitude:
    """M(delta, m) for a norm similitude m; requires delta^2 = lambda(m)."""
    m = np.asarray(m)
    lam = jd.j_norm(desc, np.dot(m, desc.unit(dtype=m.dtype)))
    if tol:
        if abs(complex(delta * delta - lam)) > tol * (1 + abs(complex(lam))):
            raise ValueError("delta^2 != lambda(m)")
    elif delta * delta != lam:
        raise ValueError("delta^2 != lambda(m)")
    g = jd._gram_diag(desc)
    if m.dtype == object:
        minv = exact_inv(m)
        mdual = (minv.T * g[:, None])
        for i in range(desc.dim):
            for j in range(desc.dim):
                mdual[i, j] = jd._exact_div(mdual[i, j], int(g[i]))
    else:
        minv = np.linalg.inv(m)
        mdual = (minv.T * g[None, :]).T / g[:, None]
        mdual = (minv.T * g[None, :])
        mdual = mdual / g[:, None]
    return HSimilitude(desc, (("M", delta, m, mdual),))


def gen_eta(desc: CubicDescriptor, z) -> HSimilitude:
    return HSimilitude(desc, (("eta", z),))


def gen_j2(desc: CubicDescriptor) -> HSimilitude:
    return HSimilitude(desc, (("J2",),))


def gen_w0(desc: CubicDescriptor) -> HSimilitude:
    """The similitude (a,b,c,d) -> (a,-b,c,-d): nu = -1, order two, in K."""
    return HSimilitude(desc, (("w0",),), nu=-1)


def gen_scalar(desc: CubicDescriptor, w) -> HSimilitude:
    return HSimilitude(desc, (("scalar", w),), nu=w * w)


def gen_identity(desc: CubicDescriptor) -> HSimilitude:
    return HSimilitude(desc, ())


def h_generator(desc: CubicDescriptor, kind: str, *data) -> HSimilitude:
    builder = {"n": gen_n, "nv": gen_nv, "M": gen_m, "eta": gen_eta}.get(kind)
    if builder is not None:
        return builder(desc, *data)
    if kind == "J2":
        return gen_j2(desc)
    if kind == "w0":
        return gen_w0(desc)
    if kind == "scalar":
        return gen_scalar(desc, *data)
    raise ValueError(f"unknown generator kind {kind!r}")


# -- the symmetric space -------------------------------------------------------------


def r0(desc: CubicDescriptor, z: np.ndarray) -> FreudenthalVector:
    """r_0(Z) = (1, -Z, Z#, -N(Z)) = n(-Z)(1,0,0,0)."""
    return FreudenthalVector(desc, _one_like(z), -z, jd.j_adjoint(desc, z),
                             -jd.j_norm(desc, z))


def _one_like(z: np.ndarray):
    if z.dtype == object:
        return 1
    return z.dtype.type(1)


def r0_and_action(g: HSimilitude, z: np.ndarray):
    """(j(g, Z), g.Z) defined by g r_0(Z) = j(g,Z) r_0(g.Z).

    Z must have positive definite imaginary part and g must have nu > 0 and
    lie in the identity component.
    """
    u = g.apply(r0(g.desc, z))
    j = u.a
    if j == 0:
        raise ZeroDivisionError("degenerate leading coefficient in g r_0(Z)")
    jinv = (Fraction(1, j) if isinstance(j, int) else 1 / j)
    gz = -jinv * u.b
    return j, gz
