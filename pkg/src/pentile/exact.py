"""Exact arithmetic for the 16th-root-of-unity lattice.

Plane points and tile isometries live in Z[zeta] with zeta = exp(i*pi/8),
reduced by zeta**8 == -1.  Every sign decision lands in the real subfield
Q(sqrt(2+sqrt(2))), carried in the basis {1, sqrt(2), sqrt(2+sqrt(2)),
sqrt(2-sqrt(2))}.  All values are immutable and hashable; operations are
pure functions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import isqrt

_SQRT2 = math.sqrt(2.0)
_SQRT2P = math.sqrt(2.0 + _SQRT2)  # sqrt(2+sqrt2) ~ 1.8478
_SQRT2M = math.sqrt(2.0 - _SQRT2)  # sqrt(2-sqrt2) ~ 0.7654

_ZETA_F = tuple(
    complex(math.cos(k * math.pi / 8.0), math.sin(k * math.pi / 8.0)) for k in range(16)
)


def sign_quad_int(q0: int, q1: int, q2: int, q3: int) -> int:
    """Exact sign of q0 + q1*sqrt2 + q2*sqrt(2+sqrt2) + q3*sqrt(2-sqrt2).

    The coefficient vector is zero iff the value is zero (the four basis
    elements are linearly independent over Q), so a nonzero vector admits a
    terminating interval refinement.  A certified double-precision fast path
    handles the overwhelming majority of calls.
    """
    if q0 == 0 and q1 == 0 and q2 == 0 and q3 == 0:
        return 0
    try:
        v = q0 + q1 * _SQRT2 + q2 * _SQRT2P + q3 * _SQRT2M
        # one rounding per multiply/add on values <= 2*|qi|; 2**-48 is generous
        bound = (abs(q0) + 2.0 * abs(q1) + 2.0 * abs(q2) + abs(q3) + 1.0) * 3.6e-15
        if v > bound:
            return 1
        if v < -bound:
            return -1
    except OverflowError:
        pass
    p = 64
    while True:
        s2l = isqrt(2 << (2 * p))
        s2h = s2l + 1
        two = 2 << p
        s2pl = isqrt((two + s2l) << p)
        s2ph = isqrt((two + s2h) << p) + 1
        s2ml = isqrt((two - s2h) << p)
        s2mh = isqrt((two - s2l) << p) + 1
        lo = hi = q0 << p
        for q, l, h in ((q1, s2l, s2h), (q2, s2pl, s2ph), (q3, s2ml, s2mh)):
            if q >= 0:
                lo += q * l
                hi += q * h
            else:
                lo += q * h
                hi += q * l
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        p *= 2


class RealQuad:
    """Element of Q(sqrt(2+sqrt2)) in the basis {1, sqrt2, sqrt(2+sqrt2), sqrt(2-sqrt2)}."""

    __slots__ = ("q",)

    def __init__(self, q0=0, q1=0, q2=0, q3=0):
        self.q: tuple[Fraction, ...] = (
            Fraction(q0),
            Fraction(q1),
            Fraction(q2),
            Fraction(q3),
        )

    @classmethod
    def _raw(cls, q: tuple[Fraction, ...]) -> RealQuad:
        v = object.__new__(cls)
        v.q = q
        return v

    def __repr__(self) -> str:
        return f"RealQuad({self.q[0]}, {self.q[1]}, {self.q[2]}, {self.q[3]})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RealQuad):
            return self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == (Fraction(other), Fraction(0), Fraction(0), Fraction(0))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.q)

    def __add__(self, other: RealQuad | int) -> RealQuad:
        o = other if isinstance(other, RealQuad) else RealQuad(other)
        a, b = self.q, o.q
        return RealQuad._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self) -> RealQuad:
        a = self.q
        return RealQuad._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other: RealQuad | int) -> RealQuad:
        o = other if isinstance(other, RealQuad) else RealQuad(other)
        return self + (-o)

    def __rsub__(self, other: int) -> RealQuad:
        return (-self) + other

    def __mul__(self, other: RealQuad | int | Fraction) -> RealQuad:
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            a = self.q
            return RealQuad._raw((a[0] * f, a[1] * f, a[2] * f, a[3] * f))
        a, b = self.q, other.q
        # sqrt2*sqrt2 = 2
        # sqrt2*sqrt(2+sqrt2) = sqrt(2+sqrt2) + sqrt(2-sqrt2)
        # sqrt2*sqrt(2-sqrt2) = sqrt(2+sqrt2) - sqrt(2-sqrt2)
        # sqrt(2+sqrt2)**2 = 2 + sqrt2 ; sqrt(2-sqrt2)**2 = 2 - sqrt2
        # sqrt(2+sqrt2)*sqrt(2-sqrt2) = sqrt2
        z0 = a[0] * b[0] + 2 * (a[1] * b[1] + a[2] * b[2] + a[3] * b[3])
        z1 = (
            a[0] * b[1]
            + a[1] * b[0]
            + a[2] * b[2]
            - a[3] * b[3]
            + a[2] * b[3]
            + a[3] * b[2]
        )
        s = a[1] * b[2] + a[2] * b[1]
        t = a[1] * b[3] + a[3] * b[1]
        z2 = a[0] * b[2] + a[2] * b[0] + s + t
        z3 = a[0] * b[3] + a[3] * b[0] + s - t
        return RealQuad._raw((z0, z1, z2, z3))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        z = Fraction(0)
        return self.q == (z, z, z, z)

    def sign(self) -> int:
        q = self.q
        d = 1
        for f in q:
            d = d * f.denominator // math.gcd(d, f.denominator)
        return sign_quad_int(*(int(f * d) for f in q))

    def __lt__(self, other: RealQuad | int) -> bool:
        o = other if isinstance(other, RealQuad) else RealQuad(other)
        return (self - o).sign() < 0

    def __le__(self, other: RealQuad | int) -> bool:
        o = other if isinstance(other, RealQuad) else RealQuad(other)
        return (self - o).sign() <= 0

    def __gt__(self, other: RealQuad | int) -> bool:
        return not self <= other

    def __ge__(self, other: RealQuad | int) -> bool:
        return not self < other

    def __float__(self) -> float:
        q = self.q
        return float(q[0]) + float(q[1]) * _SQRT2 + float(q[2]) * _SQRT2P + float(q[3]) * _SQRT2M


def rq_sign(v: RealQuad) -> int:
    return v.sign()


class CycInt:
    """Element of Z[zeta16] in the power basis 1, zeta, ..., zeta**7.

    Doubles as an exact plane point via the complex embedding.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=(0, 0, 0, 0, 0, 0, 0, 0)):
        c = tuple(coeffs)
        if len(c) != 8:
            raise ValueError("CycInt needs exactly 8 coefficients")
        self.c: tuple[int, ...] = c

    def __repr__(self) -> str:
        return f"CycInt({list(self.c)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CycInt) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __add__(self, other: CycInt) -> CycInt:
        a, b = self.c, other.c
        return CycInt(tuple(a[i] + b[i] for i in range(8)))

    def __sub__(self, other: CycInt) -> CycInt:
        a, b = self.c, other.c
        return CycInt(tuple(a[i] - b[i] for i in range(8)))

    def __neg__(self) -> CycInt:
        return CycInt(tuple(-x for x in self.c))

    def __mul__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int):
            return CycInt(tuple(x * other for x in self.c))
        a, b = self.c, other.c
        out = [0] * 8
        for i in range(8):
            ai = a[i]
            if ai:
                for j in range(8):
                    bj = b[j]
                    if bj:
                        k = i + j
                        if k < 8:
                            out[k] += ai * bj
                        else:
                            out[k - 8] -= ai * bj
        return CycInt(tuple(out))

    __rmul__ = __mul__

    def mul_zeta(self, k: int) -> CycInt:
        """Multiply by zeta**k (a coefficient rotation; cheap)."""
        k &= 15
        if k == 0:
            return self
        a = self.c
        out = [0] * 8
        for i in range(8):
            j = i + k
            if j < 8:
                out[j] = a[i]
            elif j < 16:
                out[j - 8] = -a[i]
            else:
                out[j - 16] = a[i]
        return CycInt(tuple(out))

    def conj(self) -> CycInt:
        a = self.c
        return CycInt((a[0], -a[7], -a[6], -a[5], -a[4], -a[3], -a[2], -a[1]))

    def is_zero(self) -> bool:
        return self.c == (0, 0, 0, 0, 0, 0, 0, 0)

    def double_re_im(self) -> tuple[tuple[int, int, int, int], tuple[int, int, int, int]]:
        """Integer coefficient vectors of 2*Re and 2*Im in the RealQuad basis."""
        c = self.c
        re = (2 * c[0], c[2] - c[6], c[1] - c[7], c[3] - c[5])
        im = (2 * c[4], c[2] + c[6], c[3] + c[5], c[1] + c[7])
        return re, im

    def re_part(self) -> RealQuad:
        r, _ = self.double_re_im()
        return RealQuad(Fraction(r[0], 2), Fraction(r[1], 2), Fraction(r[2], 2), Fraction(r[3], 2))

    def im_part(self) -> RealQuad:
        _, i = self.double_re_im()
        return RealQuad(Fraction(i[0], 2), Fraction(i[1], 2), Fraction(i[2], 2), Fraction(i[3], 2))

    def __complex__(self) -> complex:
        z = 0j
        for i, ci in enumerate(self.c):
            if ci:
                z += ci * _ZETA_F[i]
        return z

    def norm2(self) -> RealQuad:
        """Squared modulus |z|**2, exact."""
        return (self * self.conj()).re_part()


CYC_ZERO = CycInt()
CYC_ONE = CycInt((1, 0, 0, 0, 0, 0, 0, 0))
ZETA = tuple(CYC_ONE.mul_zeta(k) for k in range(16))


def cyc_mul(x: CycInt, y: CycInt) -> CycInt:
    return x * y


def cyc_conj(x: CycInt) -> CycInt:
    return x.conj()


def re_part(x: CycInt) -> RealQuad:
    return x.re_part()


def im_part(x: CycInt) -> RealQuad:
    return x.im_part()


def _sign_with_float_filter(exact_q: tuple[int, int, int, int], approx: float, scale: float) -> int:
    # scale bounds the accumulated float error; callers pass a generous one
    if approx > scale:
        return 1
    if approx < -scale:
        return -1
    return sign_quad_int(*exact_q)


def orient(o: CycInt, a: CycInt, b: CycInt) -> int:
    """Sign of the cross product (a-o) x (b-o): +1 left turn, -1 right, 0 collinear."""
    u = a - o
    v = b - o
    w = u.conj() * v
    _, im2 = w.double_re_im()
    return sign_quad_int(*im2)


def orient_f(
    of: complex, af: complex, bf: complex, o: CycInt, a: CycInt, b: CycInt, tol: float
) -> int:
    """orient() with a float prefilter; tol must exceed the float error bound."""
    det = (af.real - of.real) * (bf.imag - of.imag) - (af.imag - of.imag) * (bf.real - of.real)
    if det > tol:
        return 1
    if det < -tol:
        return -1
    return orient(o, a, b)


def dot_sign(o: CycInt, a: CycInt, b: CycInt) -> int:
    """Sign of the dot product (a-o).(b-o)."""
    u = a - o
    v = b - o
    w = u.conj() * v
    re2, _ = w.double_re_im()
    return sign_quad_int(*re2)


def direction_index(v: CycInt) -> int | None:
    """Direction of a nonzero lattice vector as a multiple of 22.5 degrees.

    Fast paths recognize unit vectors zeta**d and long-edge vectors
    zeta**(d+1) + zeta**(d-1); any other vector is resolved by a float guess
    confirmed exactly (zero imaginary part, positive real part after
    unrotation).  Returns None when the direction is not on the 22.5-degree
    grid.
    """
    c = v.c
    nz = [(i, x) for i, x in enumerate(c) if x]
    if not nz:
        return None
    if len(nz) == 1:
        i, x = nz[0]
        if x == 1:
            return i
        if x == -1:
            return i + 8
        return _direction_general(v)
    if len(nz) == 2:
        (i, x), (j, y) = nz
        # long-edge vectors: (zeta**-1 + zeta**1) * zeta**d = zeta**(d-1) + zeta**(d+1),
        # reduced by zeta**8 = -1
        if j - i == 2 and x == y and abs(x) == 1:
            d = i + 1
            return d if x == 1 else d + 8
        if i == 0 and j == 6 and x == -y and abs(x) == 1:
            # d = 15 (or 7): zeta**14 + zeta**16 = 1 - zeta**6
            return 15 if x == 1 else 7
        if i == 1 and j == 7 and x == -y and abs(x) == 1:
            # d = 0 (or 8): zeta**-1 + zeta**1 = zeta**1 - zeta**7
            return 0 if x == 1 else 8
    return _direction_general(v)


def _direction_general(v: CycInt) -> int | None:
    zf = complex(v)
    guess = round(math.atan2(zf.imag, zf.real) * 8.0 / math.pi)
    for d in (guess, guess + 1, guess - 1):
        d %= 16
        w = v.mul_zeta((-d) % 16)
        re2, im2 = w.double_re_im()
        if sign_quad_int(*im2) == 0 and sign_quad_int(*re2) > 0:
            return d
    for d in range(16):
        w = v.mul_zeta((-d) % 16)
        re2, im2 = w.double_re_im()
        if sign_quad_int(*im2) == 0 and sign_quad_int(*re2) > 0:
            return d
    return None
