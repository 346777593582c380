"""Exact scalar tower Q < Q(i) < Q(i, sqrt2), plus conversion to machine complex.

CayleyScalar is the coefficient field for every complexified Lie computation:
the only irrationalities the constructions need are i and sqrt(2).  A value is
stored as four integer numerators over one positive denominator,

    (n0 + n1*i + n2*sqrt2 + n3*i*sqrt2) / den,

kept reduced (gcd of all five numbers is 1, den > 0).  Integer numerators over
a shared denominator are roughly an order of magnitude faster than four
Fraction fields, which matters in the exact Cayley-transform sweeps.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rational = Fraction

_SQRT2_FLOAT = 1.4142135623730951  # correctly rounded


def _as_int_pair(x) -> tuple[int, int]:
    """(numerator, denominator) of an int or Fraction."""
    if isinstance(x, int):
        return x, 1
    if isinstance(x, Fraction):
        return x.numerator, x.denominator
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


class CayleyScalar:
    """Element of Q(i, sqrt2)."""

    __slots__ = ("n0", "n1", "n2", "n3", "den")

    def __init__(self, n0=0, n1=0, n2=0, n3=0, den=1, _normal=False):
        if not _normal:
            if den == 0:
                raise ZeroDivisionError("CayleyScalar with zero denominator")
            if den < 0:
                n0, n1, n2, n3, den = -n0, -n1, -n2, -n3, -den
            g = gcd(gcd(gcd(n0, n1), gcd(n2, n3)), den)
            if g > 1:
                n0 //= g
                n1 //= g
                n2 //= g
                n3 //= g
                den //= g
        self.n0 = n0
        self.n1 = n1
        self.n2 = n2
        self.n3 = n3
        self.den = den

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def from_rational(x) -> "CayleyScalar":
        n, d = _as_int_pair(x)
        return CayleyScalar(n, 0, 0, 0, d, _normal=(d > 0 and True))

    @staticmethod
    def coerce(x) -> "CayleyScalar":
        if isinstance(x, CayleyScalar):
            return x
        n, d = _as_int_pair(x)
        return CayleyScalar(n, 0, 0, 0, d)

    @staticmethod
    def of(r0=0, ri=0, rs=0, ris=0) -> "CayleyScalar":
        """Build from four rationals: r0 + ri*i + rs*sqrt2 + ris*i*sqrt2."""
        a, b = _as_int_pair(Fraction(r0))
        c, d = _as_int_pair(Fraction(ri))
        e, f = _as_int_pair(Fraction(rs))
        g_, h = _as_int_pair(Fraction(ris))
        den = b * d * f * h
        return CayleyScalar(a * d * f * h, c * b * f * h, e * b * d * h,
                            g_ * b * d * f, den)

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.n0 == 0 and self.n1 == 0 and self.n2 == 0 and self.n3 == 0

    def is_rational(self) -> bool:
        return self.n1 == 0 and self.n2 == 0 and self.n3 == 0

    def rational_part(self) -> Fraction:
        return Fraction(self.n0, self.den)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.n0, self.den)

    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        d = self.den
        return (Fraction(self.n0, d), Fraction(self.n1, d),
                Fraction(self.n2, d), Fraction(self.n3, d))

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, CayleyScalar):
            if self.den == other.den:
                return CayleyScalar(self.n0 + other.n0, self.n1 + other.n1,
                                    self.n2 + other.n2, self.n3 + other.n3,
                                    self.den)
            da, db = self.den, other.den
            return CayleyScalar(self.n0 * db + other.n0 * da,
                                self.n1 * db + other.n1 * da,
                                self.n2 * db + other.n2 * da,
                                self.n3 * db + other.n3 * da, da * db)
        if isinstance(other, (int, Fraction)):
            n, d = _as_int_pair(other)
            return CayleyScalar(self.n0 * d + n * self.den, self.n1 * d,
                                self.n2 * d, self.n3 * d, self.den * d)
        if isinstance(other, (float, complex)):
            return self.to_machine() + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CayleyScalar(-self.n0, -self.n1, -self.n2, -self.n3, self.den,
                            _normal=True)

    def __sub__(self, other):
        o = other if isinstance(other, CayleyScalar) else None
        if o is None:
            if isinstance(other, (int, Fraction)):
                return self + (-other)
            if isinstance(other, (float, complex)):
                return self.to_machine() - other
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CayleyScalar):
            a0, a1, a2, a3 = self.n0, self.n1, self.n2, self.n3
            b0, b1, b2, b3 = other.n0, other.n1, other.n2, other.n3
            return CayleyScalar(
                a0 * b0 - a1 * b1 + 2 * (a2 * b2 - a3 * b3),
                a0 * b1 + a1 * b0 + 2 * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
                self.den * other.den)
        if isinstance(other, (int, Fraction)):
            n, d = _as_int_pair(other)
            return CayleyScalar(self.n0 * n, self.n1 * n, self.n2 * n,
                                self.n3 * n, self.den * d)
        if isinstance(other, (float, complex)):
            return self.to_machine() * other
        return NotImplemented

    __rmul__ = __mul__

    def inv(self) -> "CayleyScalar":
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero CayleyScalar")
        # x * conj_i(x) lies in Q(sqrt2): u + v*sqrt2 over den^2.
        a0, a1, a2, a3 = self.n0, self.n1, self.n2, self.n3
        u = a0 * a0 + a1 * a1 + 2 * (a2 * a2 + a3 * a3)
        v = 2 * (a0 * a2 + a1 * a3)
        # (u + v sqrt2)(u - v sqrt2) = u^2 - 2 v^2 is a nonzero integer.
        nrm = u * u - 2 * v * v
        # inv = conj_i(x) * (u - v sqrt2) * den / nrm
        c = CayleyScalar(a0, -a1, a2, -a3, 1, _normal=True) \
            * CayleyScalar(u, 0, -v, 0, 1)
        return CayleyScalar(c.n0 * self.den, c.n1 * self.den,
                            c.n2 * self.den, c.n3 * self.den, c.den * nrm)

    def __truediv__(self, other):
        if isinstance(other, CayleyScalar):
            return self * other.inv()
        if isinstance(other, (int, Fraction)):
            n, d = _as_int_pair(other)
            if n == 0:
                raise ZeroDivisionError("division by zero")
            return CayleyScalar(self.n0 * d, self.n1 * d, self.n2 * d,
                                self.n3 * d, self.den * n)
        if isinstance(other, (float, complex)):
            return self.to_machine() / other
        return NotImplemented

    def __rtruediv__(self, other):
        return CayleyScalar.coerce(other) * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "CayleyScalar":
        """Ring automorphism fixing sqrt2 and sending i to -i."""
        return CayleyScalar(self.n0, -self.n1, self.n2, -self.n3, self.den,
                            _normal=True)

    # -- comparisons / hashing ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CayleyScalar):
            return (self.n0 == other.n0 and self.n1 == other.n1 and
                    self.n2 == other.n2 and self.n3 == other.n3 and
                    self.den == other.den)
        if isinstance(other, (int, Fraction)):
            n, d = _as_int_pair(other)
            return (self.n1 == 0 and self.n2 == 0 and self.n3 == 0 and
                    self.n0 * d == n * self.den)
        if isinstance(other, complex):
            return self.to_machine() == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.n0, self.den))
        return hash((self.n0, self.n1, self.n2, self.n3, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        parts = []
        for n, sym in ((self.n0, ""), (self.n1, "i"), (self.n2, "r2"),
                       (self.n3, "i*r2")):
            if n:
                parts.append(f"{n}{'*' + sym if sym else ''}")
        body = " + ".join(parts) if parts else "0"
        if self.den != 1:
            body = f"({body})/{self.den}"
        return f"CS({body})"

    # -- numeric embedding -------------------------------------------------------

    def to_machine(self) -> complex:
        d = self.den
        re = self.n0 / d + (self.n2 / d) * _SQRT2_FLOAT
        im = self.n1 / d + (self.n3 / d) * _SQRT2_FLOAT
        return complex(re, im)


ZERO = CayleyScalar(0)
ONE = CayleyScalar(1)
I = CayleyScalar(0, 1)
SQRT2 = CayleyScalar(0, 0, 1)
INV_SQRT2 = CayleyScalar(0, 0, 1, 0, 2)  # sqrt2 / 2


def cs(r0=0, ri=0, rs=0, ris=0) -> CayleyScalar:
    return CayleyScalar.of(r0, ri, rs, ris)


def scalar_conj(x):
    """Complex-conjugation on any supported scalar (fixes sqrt2)."""
    if isinstance(x, CayleyScalar):
        return x.conj()
    if isinstance(x, (int, Fraction, float)):
        return x
    if isinstance(x, complex):
        return x.conjugate()
    raise TypeError(f"cannot conjugate {type(x).__name__}")


def to_machine(x) -> complex:
    """Embed an exact scalar into machine complex numbers."""
    if isinstance(x, CayleyScalar):
        return x.to_machine()
    if isinstance(x, (int, Fraction, float)):
        return complex(x)
    if isinstance(x, complex):
        return x
    raise TypeError(f"cannot embed {type(x).__name__}")
