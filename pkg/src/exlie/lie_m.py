"""The Lie algebra m(J) of the norm-similitude group, with a(J) and the
Phi-operators.

An element is a pair (phi, mu): an endomorphism of J together with its
multiplier, (phi z1, z2, z3) + (z1, phi z2, z3) + (z1, z2, phi z3) =
mu (z1, z2, z3).  The operators

    Phi_{gamma,x}(z) = -gamma x (x x z) + (gamma,z) x + (gamma,x) z

span m(J) (mu = 2 (gamma,x)); Phi'_{gamma,x} = Phi_{gamma,x} - (2/3)(gamma,x)
lands in m(J)^0 and Phi_{X^Y} = Phi_{iota X, Y} - Phi_{iota Y, X} in a(J).
m(J) = a(J) + J with X in J acting as {X, .}.

Elements remember, when cheaply available, a Phi-pair decomposition
(gamma_i, x_i, c_i); the invariant pairing B_m is evaluated through it via
B_m(phi, Phi_{gamma,x}) = (phi(x), gamma), falling back to an exact echelon
decomposition otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import jordan as jd
from .jordan import CubicDescriptor
from .linalg import IntegerEchelon


@dataclass
class MElement:
    desc: CubicDescriptor
    phi: np.ndarray
    mu: object
    pairs: tuple | None = None   # ((gamma, x, coeff), ...) witnessing phi

    def apply(self, z: np.ndarray) -> np.ndarray:
        return np.dot(self.phi, z)

    def dual_apply(self, gamma: np.ndarray) -> np.ndarray:
        """Induced action on J^vee in trace-pairing coordinates."""
        g = jd._gram_diag(self.desc)
        out = -np.dot(g * gamma, self.phi)
        if out.dtype == object:
            return np.array([jd._exact_div(out[i], int(g[i]))
                             for i in range(len(out))], dtype=object)
        return out / g

    def __add__(self, o: "MElement") -> "MElement":
        pairs = None
        if self.pairs is not None and o.pairs is not None:
            pairs = self.pairs + o.pairs
        return MElement(self.desc, self.phi + o.phi, self.mu + o.mu, pairs)

    def __sub__(self, o: "MElement") -> "MElement":
        return self + (-1) * o

    def __rmul__(self, s) -> "MElement":
        pairs = None
        if self.pairs is not None:
            pairs = tuple((g, x, s * c) for (g, x, c) in self.pairs)
        return MElement(self.desc, s * self.phi, s * self.mu, pairs)

    def __neg__(self) -> "MElement":
        return (-1) * self

    def __eq__(self, o) -> bool:
        return (isinstance(o, MElement) and self.mu == o.mu
                and bool(np.all(self.phi == o.phi)))

    def is_zero(self) -> bool:
        return self.mu == 0 and all(v == 0 for v in self.phi.ravel())


def zero_m(desc: CubicDescriptor, dtype=object) -> MElement:
    return MElement(desc, np.zeros((desc.dim, desc.dim), dtype=dtype), 0, ())


def identity_m(desc: CubicDescriptor, dtype=object) -> MElement:
    """Id_J as an element of m(J); multiplier 3, equal to (1/2){1_J, .}."""
    phi = np.zeros((desc.dim, desc.dim), dtype=dtype)
    if dtype == object:
        for k in range(desc.dim):
            phi[k, k] = 1
    else:
        np.fill_diagonal(phi, 1)
    one = desc.unit(dtype)
    return MElement(desc, phi, 3, ((one, one, jd._half(1)),))


def phi_plain(desc: CubicDescriptor, gamma, x) -> MElement:
    gamma = np.asarray(gamma)
    x = np.asarray(x)
    return MElement(desc, jd.phi_matrix(desc, gamma, x),
                    2 * jd.j_pair(desc, gamma, x), ((gamma, x, 1),))


def phi_primed(desc: CubicDescriptor, gamma, x) -> MElement:
    """Phi_{gamma,x} - (2/3)(gamma,x) Id, multiplier 0."""
    p = phi_plain(desc, gamma, x)
    c = jd.j_pair(desc, gamma, x)
    third = Fraction(c, 3) if isinstance(c, int) else c / 3
    return p + (-2 * third) * identity_m(desc, dtype=p.phi.dtype) \
        if p.phi.dtype == object else p + (-2 * c / 3) * identity_m(desc, p.phi.dtype)


def phi_wedge(desc: CubicDescriptor, x, y) -> MElement:
    """Phi_{x^y} = Phi_{iota x, y} - Phi_{iota y, x}, in a(J)."""
    return phi_plain(desc, x, y) + (-1) * phi_plain(desc, y, x)


def from_jordan(desc: CubicDescriptor, x) -> MElement:
    """X in J embedded as {X, .} = Phi_{iota(1), X}."""
    return phi_plain(desc, desc.unit(dtype=np.asarray(x).dtype), np.asarray(x))


def m_bracket(p: MElement, q: MElement) -> MElement:
    return MElement(p.desc, np.dot(p.phi, q.phi) - np.dot(q.phi, p.phi), 0)


def m_cartan(p: MElement) -> MElement:
    """Theta_m: +1 on a(J), -1 on J; sends Phi_{gamma,x} to -Phi_{iota x, iota gamma}."""
    pairs = None
    if p.pairs is not None:
        pairs = tuple((x, g, -c) for (g, x, c) in p.pairs)
    g = jd._gram_diag(p.desc)
    mat = -(p.phi.T * g[None, :])
    if mat.dtype == object:
        d = p.desc.dim
        out = np.empty_like(mat)
        for i in range(d):
            gi = int(g[i])
            for j in range(d):
                out[i, j] = jd._exact_div(mat[i, j], gi)
        mat = out
    else:
        mat = mat / g[:, None]
    return MElement(p.desc, mat, -p.mu, pairs)


def m_killing(p: MElement, q: MElement):
    """Invariant pairing with B_m(Phi_{g,x}, Phi_{g',x'}) = (g,x)(g',x') +
    (g,x')(g',x) - (g x g', x x x')."""
    if q.pairs is None and p.pairs is not None:
        p, q = q, p
    if q.pairs is None:
        q = MElement(q.desc, q.phi, q.mu, _context(q.desc).pair_decomposition(q))
    total = 0
    d = p.desc
    for (gamma, x, c) in q.pairs:
        total = total + c * jd.j_pair(d, np.dot(p.phi, x), gamma)
    return total


def multiplier_residual(p: MElement, exhaustive: bool = True, rng=None, samples: int = 40):
    """Max residual of the defining multiplier identity over basis triples."""
    desc = p.desc
    dim = desc.dim
    basis = desc.basis_list(dtype=p.phi.dtype if p.phi.dtype != object else object)
    worst = 0
    triples = None
    if not exhaustive:
        triples = [(rng.randrange(dim), rng.randrange(dim), rng.randrange(dim))
                   for _ in range(samples)]
    else:
        triples = [(i, j, k) for i in range(dim) for j in range(dim)
                   for k in range(dim)]
    for (i, j, k) in triples:
        z1, z2, z3 = basis[i], basis[j], basis[k]
        lhs = (jd.j_trilinear(desc, p.apply(z1), z2, z3)
               + jd.j_trilinear(desc, z1, p.apply(z2), z3)
               + jd.j_trilinear(desc, z1, z2, p.apply(z3)))
        res = lhs - p.mu * jd.j_trilinear(desc, z1, z2, z3)
        if res != 0:
            try:
                worst = max(worst, abs(res))
            except TypeError:
                return res
    return worst


# -- basis machinery ---------------------------------------------------------------


class MContext:
    """Per-descriptor exact basis of m(J) = a(J) + J and decomposition maps."""

    def __init__(self, desc: CubicDescriptor):
        self.desc = desc
        d = desc.dim
        self._pairs_idx = [(i, j) for i in range(d) for j in range(i + 1, d)]
        self._echelon = IntegerEchelon(len(self._pairs_idx))
        self.wedge_pivots: list[tuple[int, int]] = []
        basis = desc.basis_list()
        for (i, j) in self._pairs_idx:
            w = phi_wedge(desc, basis[i], basis[j])
            if self._echelon.add(self._avec(w.phi), tag=(i, j)):
                self.wedge_pivots.append((i, j))
        self.a_dim = self._echelon.rank
        self.m_dim = self.a_dim + d

    def _avec(self, phi: np.ndarray) -> np.ndarray:
        """Antisymmetric coordinates of G phi (doubled; scale is irrelevant)."""
        g = jd._gram_diag(self.desc)
        b = (phi * g[:, None])
        b = b - b.T
        return np.array([b[i, j] for (i, j) in self._pairs_idx], dtype=object)

    def m_basis(self, dtype=object, scale=1) -> list[MElement]:
        desc = self.desc
        basis = desc.basis_list(dtype)
        out = []
        for (i, j) in self.wedge_pivots:
            w = phi_wedge(desc, basis[i], basis[j])
            out.append(scale * w if scale != 1 else w)
        for alpha in range(desc.dim):
            e = from_jordan(desc, basis[alpha])
            out.append(scale * e if scale != 1 else e)
        return out

    def split(self, p: MElement):
        """(a-part MElement, S) with p = a-part + {S, .}."""
        theta = m_cartan(p)
        sym = p.phi - theta.phi            # 2 * J-part matrix
        s2 = jd.half_arr(np.dot(sym, self.desc.unit(
            dtype=object if sym.dtype == object else sym.dtype)))
        s = jd.half_arr(s2) if sym.dtype != object else np.array(
            [jd._exact_div(v, 2) for v in s2], dtype=object)
        apart = MElement(self.desc, jd.half_arr(p.phi + theta.phi), 0)
        return apart, s

    def decompose(self, p: MElement) -> list:
        """Coordinates of p in the m_basis order (wedge pivots then J)."""
        apart, s = self.split(p)
        by_tag = self._echelon.solve_in_tags(self._avec(apart.phi))
        return [by_tag.get(t, 0) for t in self.wedge_pivots] + list(s)

    def pair_decomposition(self, p: MElement) -> tuple:
        """A Phi-pair witness for an arbitrary m(J) element."""
        coords = self.decompose(p)
        desc = self.desc
        basis = desc.basis_list()
        one = desc.unit()
        pairs = []
        for c, (i, j) in zip(coords[:self.a_dim], self.wedge_pivots):
            if c != 0:
                pairs.append((basis[i], basis[j], c))
                pairs.append((basis[j], basis[i], -c))
        for alpha, c in enumerate(coords[self.a_dim:]):
            if c != 0:
                pairs.append((one, basis[alpha], c))
        return tuple(pairs)


@lru_cache(maxsize=None)
def _context(desc: CubicDescriptor) -> MContext:
    return MContext(desc)


def m_context(desc: CubicDescriptor) -> MContext:
    return _context(desc)


def m_dim(desc: CubicDescriptor) -> int:
    return _context(desc).m_dim


def a_dim(desc: CubicDescriptor) -> int:
    return _context(desc).a_dim
