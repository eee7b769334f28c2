import math
import random

from fractions import Fraction

from pentile.exact import (
    CYC_ONE,
    CYC_ZERO,
    CycInt,
    RealQuad,
    ZETA,
    direction_index,
    orient,
    rq_sign,
    sign_quad_int,
)


def rnd_cyc(rnd, bound=50):
    return CycInt(tuple(rnd.randint(-bound, bound) for _ in range(8)))


def test_zeta_powers_match_complex():
    for k in range(16):
        want = complex(math.cos(k * math.pi / 8), math.sin(k * math.pi / 8))
        assert abs(complex(ZETA[k]) - want) < 1e-12


def test_multiplicative_identity():
    rnd = random.Random(1)
    for _ in range(20):
        x = rnd_cyc(rnd)
        assert ZETA[0] * x == x


def test_exponent_reduction():
    # zeta**7 * zeta**3 = zeta**10 = -zeta**2
    prod = ZETA[7] * ZETA[3]
    assert prod == -ZETA[2]
    assert prod.c == (0, 0, -1, 0, 0, 0, 0, 0)


def test_difference_of_squares():
    # (1+zeta**4)(1-zeta**4) = 1 - zeta**8 = 2
    x = CYC_ONE + ZETA[4]
    y = CYC_ONE - ZETA[4]
    assert (x * y).c == (2, 0, 0, 0, 0, 0, 0, 0)
    assert abs(complex(x) * complex(y) - 2.0) < 1e-12


def test_ring_axioms_randomized():
    rnd = random.Random(2)
    for _ in range(200):
        x, y, z = rnd_cyc(rnd), rnd_cyc(rnd), rnd_cyc(rnd)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_float_shadow():
    rnd = random.Random(3)
    for _ in range(200):
        x, y = rnd_cyc(rnd, 1000), rnd_cyc(rnd, 1000)
        assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-9 * (
            1 + abs(complex(x)) * abs(complex(y))
        )
        assert abs(complex(x + y) - (complex(x) + complex(y))) < 1e-9


def test_conjugation():
    rnd = random.Random(4)
    assert ZETA[4].conj() == -ZETA[4]  # conj(i) = -i
    real = CycInt((7, 0, 0, 0, 0, 0, 0, 0))
    assert real.conj() == real
    for _ in range(100):
        x, y = rnd_cyc(rnd), rnd_cyc(rnd)
        assert x.conj().conj() == x
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x + y).conj() == x.conj() + y.conj()


def test_re_im_parts():
    assert ZETA[4].re_part().is_zero()
    assert ZETA[4].im_part() == RealQuad(1)
    assert ZETA[1].re_part() == RealQuad(0, 0, Fraction(1, 2), 0)
    rnd = random.Random(5)
    for _ in range(100):
        x = rnd_cyc(rnd)
        doubled = (x + x.conj()).re_part()
        assert doubled == x.re_part() * 2
        zf = complex(x)
        assert abs(float(x.re_part()) - zf.real) < 1e-9
        assert abs(float(x.im_part()) - zf.imag) < 1e-9


def test_norm2_positive_definite():
    rnd = random.Random(6)
    assert CYC_ZERO.norm2().is_zero()
    for _ in range(100):
        x = rnd_cyc(rnd)
        n2 = x.norm2()
        if x.is_zero():
            assert n2.sign() == 0
        else:
            assert n2.sign() == 1


def test_sign_examples():
    assert rq_sign(RealQuad(0, 0, 0, 0)) == 0
    assert rq_sign(RealQuad(-1, 0, 1, 0)) == 1  # sqrt(2+sqrt2) - 1
    assert rq_sign(RealQuad(2, -1, 0, 0)) == 1  # 2 - sqrt2
    assert sign_quad_int(577, -408, 0, 0) == 1  # continued-fraction near-miss
    assert sign_quad_int(-665857, 470832, 0, 0) == -1
    # huge coefficients exercise the interval fallback
    big = 10**40
    assert sign_quad_int(big, 0, -big // 2, 0) == 1
    assert sign_quad_int(0, big, -big, 0) == -1


def test_sign_antisymmetry_and_shadow():
    rnd = random.Random(7)
    for _ in range(300):
        q = [rnd.randint(-30, 30) for _ in range(4)]
        s = sign_quad_int(*q)
        assert s == -sign_quad_int(*(-x for x in q))
        v = q[0] + q[1] * math.sqrt(2) + q[2] * math.sqrt(2 + math.sqrt(2)) + q[
            3
        ] * math.sqrt(2 - math.sqrt(2))
        if abs(v) > 1e-6:
            assert s == (1 if v > 0 else -1)


def test_realquad_multiplication_table():
    rnd = random.Random(8)
    basis = [RealQuad(1), RealQuad(0, 1), RealQuad(0, 0, 1), RealQuad(0, 0, 0, 1)]
    for a in basis:
        for b in basis:
            assert abs(float(a * b) - float(a) * float(b)) < 1e-12
    for _ in range(200):
        a = RealQuad(*(rnd.randint(-9, 9) for _ in range(4)))
        b = RealQuad(*(rnd.randint(-9, 9) for _ in range(4)))
        c = RealQuad(*(rnd.randint(-9, 9) for _ in range(4)))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert abs(float(a * b) - float(a) * float(b)) < 1e-9


def test_orientation():
    o = CYC_ZERO
    a = ZETA[0]
    b = ZETA[4]
    assert orient(o, a, b) == 1
    assert orient(o, b, a) == -1
    assert orient(o, a, a + a) == 0


def test_direction_index_units_and_long():
    for d in range(16):
        assert direction_index(ZETA[d]) == d
        long_edge = ZETA[(d + 1) % 16] + ZETA[(d + 15) % 16]
        assert direction_index(long_edge) == d
        # scalar multiples resolve through the general fallback
        assert direction_index(ZETA[d] * 3) == d
    assert direction_index(CYC_ZERO) is None
    assert direction_index(ZETA[0] + ZETA[4] + ZETA[1]) is None
