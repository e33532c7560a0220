"""Graded characters, Hilbert series, and the pairing inverse."""

import pytest

from qklr.rootdata import CartanDatum, RootVec
from qklr.scalars import RationalQ
from qklr.uqminus import FWordElem, canonical_form, ir_op, gram
from qklr.klr import ScalarsChoice, min_tau_degree, words_of
from qklr.klrchar import (CharVector, hilbert_full, hilbert_check,
                          chi_solve, mj_char, mj_check, cyclotomic_nilhecke)

ONE = RationalQ.one()


def qp(k):
    return RationalQ.q_power(k)


def test_hilbert_single_letter():
    for typ in ("A2", "B2", "G2"):
        d = CartanDatum.from_type(typ)
        for i in d.I:
            want = (ONE - qp(2 * d.d[i])).inverse()
            assert hilbert_full(d, (i,), (i,)) == want


def test_hilbert_crossing_a2():
    d = CartanDatum.from_type("A2")
    den = (ONE - qp(2)) * (ONE - qp(2))
    assert hilbert_full(d, (1, 2), (2, 1)) == qp(1) * den.inverse()
    assert hilbert_full(d, (1, 2), (1, 2)) == den.inverse()


def test_hilbert_equal_letters():
    d = CartanDatum.from_type("B2")
    for i in d.I:
        den = (ONE - qp(2 * d.d[i])) * (ONE - qp(2 * d.d[i]))
        want = (ONE + qp(-2 * d.d[i])) * den.inverse()
        assert hilbert_full(d, (i, i), (i, i)) == want


def test_hilbert_mismatched_weight():
    d = CartanDatum.from_type("A2")
    assert hilbert_full(d, (1, 2), (1, 1)) == RationalQ.zero()


def test_hilbert_against_basis_counts():
    for typ in ("A2", "B2"):
        d = CartanDatum.from_type(typ)
        r = hilbert_check(d, RootVec(d, {1: 1, 2: 1}), max_degree=10)
        assert r["failures"] == []
        assert r["checks"] > 0


def _char_from_closed(d, beta, closed, D=16):
    dmin = min_tau_degree(d, beta)
    table = {}
    for nu, f in closed.items():
        coeffs = f.series_coeffs(dmin, D)
        table[nu] = {dmin + k: int(v) for k, v in enumerate(coeffs) if v}
    return CharVector(d, beta, D, table, closed)


def test_chi_solve_anchor():
    # the regular character of R(alpha_i) inverts to f_i
    d = CartanDatum.from_type("B2")
    for i in d.I:
        beta = RootVec(d, {i: 1})
        closed = {(i,): (ONE - qp(2 * d.d[i])).inverse()}
        c = _char_from_closed(d, beta, closed)
        assert chi_solve(c) == FWordElem.gen(d, i)


def test_chi_solve_zero():
    d = CartanDatum.from_type("A2")
    beta = RootVec(d, {1: 1, 2: 1})
    c = CharVector(d, beta, 16, {nu: {} for nu in words_of(d, beta)}, {})
    assert chi_solve(c) == FWordElem(d, {})


def test_chi_solve_regular_a2():
    # column of the regular representation: c[nu] = sum_nu2 qdim e(nu2)Re(nu)
    d = CartanDatum.from_type("A2")
    beta = RootVec(d, {1: 1, 2: 1})
    words = words_of(d, beta)
    closed = {nu: sum((hilbert_full(d, nu2, nu) for nu2 in words),
                      RationalQ.zero()) for nu in words}
    u = chi_solve(_char_from_closed(d, beta, closed))
    # its pairings reproduce the character
    for nu in words:
        assert gram(FWordElem.word(d, nu), u) == closed[nu]


def test_chi_solve_restriction_compatible():
    # stripping the first letter i of the regular character corresponds,
    # through the pairing, to the skew derivation _ir scaled by 1/(1-q_i^2)
    d = CartanDatum.from_type("A2")
    i = 1
    beta = RootVec(d, {1: 1, 2: 1})
    words = words_of(d, beta)
    closed = {nu: sum((hilbert_full(d, nu2, nu) for nu2 in words),
                      RationalQ.zero()) for nu in words}
    u = chi_solve(_char_from_closed(d, beta, closed))
    beta2 = beta - d.alpha(i)
    closed2 = {mu: sum((hilbert_full(d, nu2, (i,) + mu) for nu2 in words),
                       RationalQ.zero()) for mu in words_of(d, beta2)}
    u2 = chi_solve(_char_from_closed(d, beta2, closed2))
    want = ir_op(i, u).scale((ONE - qp(2 * d.d[i])).inverse())
    assert canonical_form(u2) == canonical_form(want)


def test_mj_a2():
    d = CartanDatum.from_type("A2")
    sc = ScalarsChoice.default(d)
    r = mj_check(d, sc, 1, 2, max_degree=16)
    assert r["coeffwise"]
    assert r["exact"]
    assert r["chi_matches"]
    assert r["shift"] == 0  # n = 1


def test_mj_b2_both_orders():
    d = CartanDatum.from_type("B2")
    sc = ScalarsChoice.default(d)
    for i, j in ((1, 2), (2, 1)):
        n = -d.a[(i, j)]
        r = mj_check(d, sc, i, j, max_degree=16)
        assert r["coeffwise"]
        assert r["chi_matches"]
        assert r["shift"] == -d.d[i] * n * (n - 1) // 2


def test_nilhecke_one_strand():
    r = cyclotomic_nilhecke(3, 1)
    assert r["result"] == "NONZERO"
    assert r["dims"] == {0: 1, 2: 1, 4: 1}
    assert r["total_dim"] == 3


def test_nilhecke_vanishing():
    r = cyclotomic_nilhecke(1, 2)
    assert r["result"] == "ZERO"
    w = r["certificate"]["witness"]
    assert w["constant"] not in ("0", "")


def test_nilhecke_small_dims():
    assert cyclotomic_nilhecke(2, 2)["dims"] == {0: 1, 2: 1}
    r = cyclotomic_nilhecke(3, 2)
    assert r["dims"] == {0: 1, 2: 2, 4: 2, 6: 1}
    assert r["total_dim"] == 6  # l!/(l-n)!
    assert cyclotomic_nilhecke(3, 3)["total_dim"] == 6


def test_nilhecke_bounds():
    with pytest.raises(ValueError):
        cyclotomic_nilhecke(6, 1)


def test_char_vector_formats():
    d = CartanDatum.from_type("A2")
    beta = RootVec(d, {1: 1})
    c = CharVector(d, beta, 4, {(1,): {0: 1, 2: 1, 4: 1}})
    csv = c.to_csv()
    assert csv.splitlines()[0] == "word,q^0,q^2,q^4"
    assert csv.splitlines()[1] == "1,1,1,1"
    data = c.to_json()
    assert data["table"][0]["coefficients"] == [[0, 1], [2, 1], [4, 1]]
    shifted = c.shifted(2)
    assert shifted.table[(1,)] == {2: 1, 4: 1, 6: 1}
