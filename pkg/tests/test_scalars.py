"""Exact scalar arithmetic: Laurent polynomials, the field Q(q), series."""

import random
from fractions import Fraction

from qklr.scalars import (LaurentPoly, RationalQ, GradedSeries, quantum_int,
                          quantum_factorial, quantum_binomial)

ONE = RationalQ.one()
ZERO = RationalQ.zero()


def rand_laurent(rng):
    return LaurentPoly({rng.randrange(-4, 5): rng.randrange(-5, 6)
                        for _ in range(rng.randrange(4))})


def rand_rq(rng):
    num = rand_laurent(rng)
    den = rand_laurent(rng)
    while den.is_zero():
        den = rand_laurent(rng)
    return RationalQ.from_laurent(num) * RationalQ.from_laurent(den).inverse()


def test_laurent_basic():
    q = LaurentPoly({1: 1})
    qi = LaurentPoly({-1: 1})
    assert q * qi == LaurentPoly({0: 1})
    assert (q + qi) * (q - qi) == LaurentPoly({2: 1, -2: -1})
    assert LaurentPoly({}).is_zero()


def test_laurent_ring_laws():
    rng = random.Random(1)
    for _ in range(300):
        a, b, c = (rand_laurent(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)


def test_rationalq_field_laws():
    rng = random.Random(2)
    for _ in range(1000):
        a, b, c = (rand_rq(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == ONE
        assert a + ZERO == a
        assert a * ONE == a


def test_rationalq_cancellation():
    # (q^2 - 1)/(q - 1) = q + 1
    num = RationalQ.from_laurent(LaurentPoly({2: 1, 0: -1}))
    den = RationalQ.from_laurent(LaurentPoly({1: 1, 0: -1}))
    assert num * den.inverse() == RationalQ.from_laurent(
        LaurentPoly({1: 1, 0: 1}))


def test_series_coeffs():
    # 1/(1 - q^2) = 1 + q^2 + q^4 + ...
    f = (ONE - RationalQ.q_power(2)).inverse()
    assert f.series_coeffs(0, 8) == [Fraction(v) for v in
                                     (1, 0, 1, 0, 1, 0, 1, 0, 1)]
    # q^{-1}/(1 - q) starts at q^{-1}
    g = RationalQ.q_power(-1) * (ONE - RationalQ.q_power(1)).inverse()
    assert g.order() == -1
    assert g.series_coeffs(-1, 2) == [Fraction(1)] * 4


def test_quantum_integers():
    # [2] = q + q^{-1}, [3] = q^2 + 1 + q^{-2}
    assert quantum_int(2) == LaurentPoly({1: 1, -1: 1})
    assert quantum_int(3) == LaurentPoly({2: 1, 0: 1, -2: 1})
    assert quantum_factorial(3) == quantum_int(3) * quantum_int(2)
    # [4 choose 2] = [4]![2]!^{-2} is a Laurent polynomial
    assert quantum_binomial(4, 2) == LaurentPoly(
        {4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
    # q_i-versions scale the exponents
    assert quantum_int(2, d=2) == LaurentPoly({2: 1, -2: 1})


def test_graded_series_roundtrip():
    s = GradedSeries(6, {0: 1, 2: 2, 4: 1})
    data = s.to_json()
    assert data["truncation_degree"] == 6
    assert [0, 1] in data["coefficients"]
