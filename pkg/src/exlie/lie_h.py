"""h(J)^0 in the 3-step grading J^vee + m(J) + J, with the bridge to its
action on W_J, the operators Phi_{w,w'}, the invariant pairing B_h and the
Cartan involution.

An HElement stores (gamma, phi, x): gamma in degree -1 (J^vee through the
trace pairing), phi in m(J) (degree 0, possibly None for zero), x in degree
+1.  The homomorphism onto End(W_J) is

    gamma + phi + x  |->  n_L^vee(gamma) + M(phi) + n_L(-x)

with n_L(x)(a,b,c,d) = (0, ax, b x x, (c,x)),
n_L^vee(g)(a,b,c,d) = ((b,g), g x c, d g, 0), and
M(phi)(a,b,c,d) = (-t/2 a, -t/2 b + phi b, t/2 c + phi~ c, t/2 d), t = mu(phi).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import jordan as jd
from . import lie_m as lm
from .freudenthal import FreudenthalVector, quarter_phi_parts, w_basis, w_dim
from .jordan import CubicDescriptor
from .lie_m import MElement
from .scalars import scalar_conj


@dataclass
class HElement:
    desc: CubicDescriptor
    gamma: np.ndarray
    phi: MElement | None
    x: np.ndarray

    def __add__(self, o: "HElement") -> "HElement":
        if self.phi is None:
            phi = o.phi
        elif o.phi is None:
            phi = self.phi
        else:
            phi = self.phi + o.phi
        return HElement(self.desc, self.gamma + o.gamma, phi, self.x + o.x)

    def __sub__(self, o: "HElement") -> "HElement":
        return self + (-1) * o

    def __rmul__(self, s) -> "HElement":
        return HElement(self.desc, s * self.gamma,
                        None if self.phi is None else s * self.phi, s * self.x)

    def __neg__(self) -> "HElement":
        return (-1) * self

    def __eq__(self, o) -> bool:
        if not isinstance(o, HElement):
            return NotImplemented
        if not (all(self.gamma == o.gamma) and all(self.x == o.x)):
            return False
        p, q = self.phi, o.phi
        if p is None and q is None:
            return True
        if p is None:
            return q.is_zero()
        if q is None:
            return p.is_zero()
        return p == q

    def is_zero(self) -> bool:
        return (all(v == 0 for v in self.gamma) and all(v == 0 for v in self.x)
                and (self.phi is None or self.phi.is_zero()))

    def conj(self) -> "HElement":
        phi = self.phi
        if phi is not None:
            mat = np.array([[scalar_conj(v) for v in row] for row in phi.phi],
                           dtype=object)
            phi = MElement(self.desc, mat, scalar_conj(phi.mu))
        return HElement(self.desc,
                        np.array([scalar_conj(v) for v in self.gamma], dtype=object),
                        phi,
                        np.array([scalar_conj(v) for v in self.x], dtype=object))


def h_zero(desc: CubicDescriptor, dtype=object) -> HElement:
    return HElement(desc, jd.zeros(desc, dtype), None, jd.zeros(desc, dtype))


def h_from_gamma(desc: CubicDescriptor, gamma) -> HElement:
    gamma = np.asarray(gamma)
    return HElement(desc, gamma, None, jd.zeros(desc, gamma.dtype))


def h_from_x(desc: CubicDescriptor, x) -> HElement:
    x = np.asarray(x)
    return HElement(desc, jd.zeros(desc, x.dtype), None, x)


def h_from_m(desc: CubicDescriptor, phi: MElement) -> HElement:
    dt = phi.phi.dtype
    return HElement(desc, jd.zeros(desc, dt), phi, jd.zeros(desc, dt))


# -- the action on W_J ---------------------------------------------------------------


def endo_apply(h: HElement, v: FreudenthalVector) -> FreudenthalVector:
    d = h.desc
    # n_L^vee(gamma)
    a = jd.j_pair(d, v.b, h.gamma)
    b = jd.j_cross(d, h.gamma, v.c)
    c = v.d * h.gamma
    dd = 0
    # n_L(-x)
    b = b - v.a * h.x
    c = c - jd.j_cross(d, v.b, h.x)
    dd = dd - jd.j_pair(d, v.c, h.x)
    # M(phi)
    if h.phi is not None:
        t = h.phi.mu
        th = jd._half(t) if isinstance(t, (int,)) else t / 2
        a = a - th * v.a
        b = b - th * v.b + h.phi.apply(v.b)
        c = c + th * v.c + h.phi.dual_apply(v.c)
        dd = dd + th * v.d
    return FreudenthalVector(d, a, b, c, dd)


def h_to_endo(h: HElement, dtype=object) -> np.ndarray:
    n = w_dim(h.desc)
    mat = np.empty((n, n), dtype=dtype)
    for k in range(n):
        mat[:, k] = endo_apply(h, w_basis(h.desc, k, dtype)).flat_coords()
    return mat


def endo_to_h(desc: CubicDescriptor, apply_fn) -> HElement:
    """Extract the graded components of an endomorphism of W_J known to lie in
    h(J)^0; apply_fn maps FreudenthalVector to FreudenthalVector."""
    dim = desc.dim
    e_a = w_basis(desc, 0)                      # (1,0,0,0)
    e_d = w_basis(desc, 1 + 2 * dim)            # (0,0,0,1)
    img_a = apply_fn(e_a)
    img_d = apply_fn(e_d)
    # psi(1,0,0,0) = (-t/2, -x, 0, 0); psi(0,0,0,1) = (0, 0, gamma, t/2)
    t = -2 * img_a.a
    x = -img_a.b
    gamma = img_d.c
    phi_mat = np.empty((dim, dim), dtype=object)
    th = jd._half(t) if isinstance(t, int) else t / 2
    for beta in range(dim):
        vb = w_basis(desc, 1 + beta)
        img = apply_fn(vb)
        phi_mat[:, beta] = img.b + th * vb.b
    phi = MElement(desc, phi_mat, t)
    return HElement(desc, gamma, phi, x)


# -- bracket, pairing, involution -----------------------------------------------------


def h_bracket(h1: HElement, h2: HElement) -> HElement:
    d = h1.desc
    gamma = jd.zeros(d, object)
    x = jd.zeros(d, object)
    if h1.phi is not None:
        gamma = gamma + h1.phi.dual_apply(h2.gamma)
        x = x + h1.phi.apply(h2.x)
    if h2.phi is not None:
        gamma = gamma - h2.phi.dual_apply(h1.gamma)
        x = x - h2.phi.apply(h1.x)
    phi = None
    pieces = []
    if h1.phi is not None and h2.phi is not None:
        pieces.append(lm.m_bracket(h1.phi, h2.phi))
    if any(v != 0 for v in h1.gamma) and any(v != 0 for v in h2.x):
        pieces.append(lm.phi_plain(d, h1.gamma, h2.x))
    if any(v != 0 for v in h2.gamma) and any(v != 0 for v in h1.x):
        pieces.append((-1) * lm.phi_plain(d, h2.gamma, h1.x))
    for p in pieces:
        phi = p if phi is None else phi + p
    return HElement(d, gamma, phi, x)


def phi_ww(v: FreudenthalVector, w: FreudenthalVector) -> HElement:
    """Phi_{v,w}(x) = 6 t(v,w,x) + <w,x> v + <v,x> w, as a graded element."""
    gamma, phimat, mu, x = quarter_phi_parts(v, w)
    return HElement(v.desc, 4 * gamma, MElement(v.desc, 4 * phimat, 4 * mu),
                    4 * x)


def h_killing(h1: HElement, h2: HElement):
    """B_h((phi,a,gamma),(phi',a',gamma')) = B_m(phi,phi') - (a,gamma') - (a',gamma)."""
    d = h1.desc
    total = -jd.j_pair(d, h1.x, h2.gamma) - jd.j_pair(d, h2.x, h1.gamma)
    if h1.phi is not None and h2.phi is not None:
        total = total + lm.m_killing(h1.phi, h2.phi)
    return total


def h_cartan(h: HElement) -> HElement:
    """Theta_h: (gamma, phi, x) -> (x, Theta_m phi, gamma); equals conjugation
    by J_2 on the W_J action."""
    return HElement(h.desc, h.x,
                    None if h.phi is None else lm.m_cartan(h.phi), h.gamma)


# -- adjoint action of similitude-generator words -------------------------------------


def _ad_nilpotent(u: HElement, h: HElement, degree: int) -> HElement:
    """exp(ad_u) h for u of pure degree +-1 (three-step grading: the series
    stops after ad^2)."""
    t1 = h_bracket(u, h)
    t2 = h_bracket(u, t1)
    half_t2 = jd._half(1) * t2 if t2.gamma.dtype == object else 0.5 * t2
    return h + t1 + half_t2


def ad_generator(gen: tuple, h: HElement) -> HElement:
    """Adjoint action on h(J)^0 of a similitude generator (see freudenthal)."""
    d = h.desc
    kind = gen[0]
    if kind == "n":
        # n_G(x) = exp(n_L(x)); n_L(x) is the graded element with x-part -x.
        u = h_from_x(d, -np.asarray(gen[1]))
        return _ad_nilpotent(u, h, +1)
    if kind == "nv":
        u = h_from_gamma(d, np.asarray(gen[1]))
        return _ad_nilpotent(u, h, -1)
    if kind == "eta":
        z = gen[1]
        z2 = z * z
        from fractions import Fraction
        zi2 = Fraction(1, z2) if isinstance(z2, int) else 1 / z2
        return HElement(d, z2 * h.gamma, h.phi, zi2 * h.x)
    if kind == "J2":
        return h_cartan(h)
    if kind == "M":
        _, delta, m, mdual = gen
        gamma = np.dot(mdual, h.gamma)
        x = np.dot(m, h.x)
        phi = h.phi
        if phi is not None:
            from .linalg import exact_inv
            minv = exact_inv(m) if m.dtype == object else np.linalg.inv(m)
            phi = MElement(d, np.dot(np.dot(m, phi.phi), minv), phi.mu)
        return HElement(d, gamma, phi, x)
    if kind == "w0":
        # w0 (a,b,c,d) -> (a,-b,c,-d): conjugation negates gamma and x slots.
        return HElement(d, -h.gamma, h.phi, -h.x)
    if kind == "scalar":
        return h
    raise ValueError(f"unknown generator {kind!r}")


def ad_word(word: tuple, h: HElement) -> HElement:
    for gen in reversed(word):
        h = ad_generator(gen, h)
    return h
