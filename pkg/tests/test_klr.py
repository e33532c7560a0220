"""Quiver Hecke algebra normal forms, special elements, truncations."""

import random
from fractions import Fraction

import pytest

from qklr.rootdata import CartanDatum, RootVec
from qklr.klr import (Poly, ScalarsChoice, KLRElem, klr_mul,
                      relations_check, oracle_check,
                      demazure, demazure_w, special_idempotent,
                      projisom_maps, intertwiner, a_element,
                      truncated_quotient, r_composite_check, words_of,
                      basis_terms, term_degree, phi_anti, sigma_inv,
                      fixed_word, avoids_321)

F1 = Fraction(1)


def make(typ):
    d = CartanDatum.from_type(typ)
    return d, ScalarsChoice.default(d)


def test_poly_and_demazure():
    f = Poly.x(2, 1, 2)  # x_1^2
    g = demazure(1, f)
    assert g == -(Poly.x(2, 1) + Poly.x(2, 2))
    assert demazure(1, g).is_zero()
    # braid relation of divided differences in three variables
    h = Poly.x(3, 1, 2) * Poly.x(3, 2)
    lhs = demazure_w((1, 2, 1), h)
    rhs = demazure_w((2, 1, 2), h)
    assert lhs == rhs


def test_quadratic_relation():
    d, sc = make("A2")
    beta = RootVec(d, {1: 1, 2: 1})
    tau = KLRElem.tau_gen(d, sc, beta, 1)
    sq = klr_mul(tau, tau)
    # on e(1,2) the square is Q_{1,2}(x_1,x_2) e(1,2)
    e12 = KLRElem.idem(d, sc, (1, 2))
    got = klr_mul(sq, e12)
    want = KLRElem.poly_elem(d, sc, (1, 2), sc.q_poly(1, 2, 1, 2, 2))
    assert got == want
    # equal colors: nilpotent
    beta2 = RootVec(d, {1: 2})
    tau2 = KLRElem.tau_gen(d, sc, beta2, 1)
    assert klr_mul(tau2, tau2).is_zero()


def test_dot_slide():
    d, sc = make("B2")
    beta = RootVec(d, {1: 2})
    tau = KLRElem.tau_gen(d, sc, beta, 1)
    x1 = KLRElem.x_gen(d, sc, beta, 1)
    x2 = KLRElem.x_gen(d, sc, beta, 2)
    e = KLRElem.idem(d, sc, (1, 1))
    assert klr_mul(klr_mul(tau, x2) - klr_mul(x1, tau), e) == e


def test_relations_check_clean():
    for typ in ("A2", "B2"):
        d, sc = make(typ)
        r = relations_check(d, sc, RootVec(d, {1: 2, 2: 1}), samples=10,
                            seed=3)
        assert r["failures"] == []


def test_oracle_check_clean():
    d, sc = make("B2")
    r = oracle_check(d, sc, RootVec(d, {1: 1, 2: 2}), products=10, seed=3)
    assert r["failures"] == []


def test_special_idempotents():
    d, sc = make("A2")
    for n in (1, 2, 3):
        for kind in ("b+", "b-", "b'+", "b'-"):
            b = special_idempotent(d, sc, kind, n, 1)
            assert klr_mul(b, b) == b
        bp = special_idempotent(d, sc, "b+", n, 1)
        assert phi_anti(bp) == special_idempotent(d, sc, "b-", n, 1)
        assert sigma_inv(bp) == special_idempotent(d, sc, "b'+", n, 1)
    # b_{+,1} = e(i); b_{+,2} = x_2 tau_1
    assert special_idempotent(d, sc, "b+", 1, 1) == KLRElem.idem(d, sc, (1,))
    beta = RootVec(d, {1: 2})
    want = klr_mul(KLRElem.x_gen(d, sc, beta, 2),
                   KLRElem.tau_gen(d, sc, beta, 1))
    assert special_idempotent(d, sc, "b+", 2, 1) == want


def test_projisom():
    d, sc = make("B2")
    for n in (1, 2):
        r = projisom_maps(d, sc, n, 2)
        assert r["element_identities"]
        assert r["failures"] == []
        assert r["checks"] > 0


def test_phi_antiautomorphism():
    d, sc = make("B2")
    beta = RootVec(d, {1: 1, 2: 1})
    rng = random.Random(11)
    for _ in range(5):
        terms = {}
        for t in basis_terms(d, beta, rng.choice([0, 2, 4])):
            terms[t] = Fraction(rng.randrange(-3, 4))
        a = KLRElem(d, sc, beta, terms)
        b = KLRElem(d, sc, beta,
                    {t: Fraction(rng.randrange(-3, 4))
                     for t in basis_terms(d, beta, 2)})
        assert phi_anti(klr_mul(a, b)) == klr_mul(phi_anti(b), phi_anti(a))
        assert phi_anti(phi_anti(a)) == a


def test_intertwiner_phi():
    d, sc = make("A2")
    beta = RootVec(d, {1: 1, 2: 1})
    phi = intertwiner(d, sc, "phi", 1, beta)
    # on mismatched colors phi_1 e(nu) = tau_1 e(nu)
    e = KLRElem.idem(d, sc, (1, 2))
    tau = KLRElem.tau_gen(d, sc, beta, 1)
    assert klr_mul(phi, e) == klr_mul(tau, e)
    # phi_1 x_1 = x_2 phi_1
    x1 = KLRElem.x_gen(d, sc, beta, 1)
    x2 = KLRElem.x_gen(d, sc, beta, 2)
    assert klr_mul(phi, x1) == klr_mul(x2, phi)


def test_intertwiner_braid():
    d, sc = make("A2")
    beta = RootVec(d, {1: 2, 2: 1})
    p1 = intertwiner(d, sc, "phi", 1, beta)
    p2 = intertwiner(d, sc, "phi", 2, beta)
    lhs = klr_mul(p1, klr_mul(p2, p1))
    rhs = klr_mul(p2, klr_mul(p1, p2))
    assert lhs == rhs


def test_a_element():
    d, sc = make("A2")
    a = a_element(d, sc, 1, RootVec(d, {2: 1}), 0)
    want = KLRElem.poly_elem(d, sc, (1, 2), sc.q_poly(1, 2, 1, 2, 2))
    assert a == want
    # level shifts multiply by x_1^level
    a1 = a_element(d, sc, 1, RootVec(d, {2: 1}), 2)
    x1sq = KLRElem.poly_elem(d, sc, (1, 2), Poly.x(2, 1, 2))
    assert a1 == klr_mul(x1sq, want)


def test_truncated_quotient_simple():
    d, sc = make("A2")
    beta = RootVec(d, {1: 1, 2: 1})
    table = truncated_quotient(d, sc, beta, [("suffix", (1,))], 6)
    # only the block with both idempotents e(1,2) survives, one dot algebra
    for deg, blocks in table.items():
        for (nu, nup), dim in blocks.items():
            if dim:
                assert nu == (1, 2) and nup == (1, 2)
    assert table[0][((1, 2), (1, 2))] == 1


def test_truncated_quotient_vanishes():
    d, sc = make("A2")
    beta = RootVec(d, {1: 2, 2: 1})
    table = truncated_quotient(d, sc, beta, [("suffix", (1,))], 12)
    assert all(dim == 0 for blocks in table.values()
               for dim in blocks.values())


def test_r_composite():
    d, sc = make("A2")
    for j in d.I:
        for beta in (RootVec(d, {1: 1}), RootVec(d, {1: 1, 2: 1})):
            r = r_composite_check(d, sc, j, beta, D=12)
            assert r["failures"] == []


def test_word_utilities():
    assert avoids_321((0, 1, 2))
    assert avoids_321((1, 0, 2))
    assert not avoids_321((2, 1, 0))
    w = (2, 0, 1)
    assert fixed_word(w)
    d, sc = make("A2")
    assert words_of(d, RootVec(d, {1: 1, 2: 1})) == [(1, 2), (2, 1)]


def test_term_degree():
    d, sc = make("B2")
    # deg x_1 e(1,1) = (a1,a1) = 4; deg tau_1 e(1,1) = -(a1,a1) = -4
    assert term_degree(d, (1, 1), (0, 1), (1, 0)) == 4
    assert term_degree(d, (1, 1), (1, 0), (0, 0)) == -4
    # mismatched crossing: deg tau_1 e(1,2) = -(a1,a2) = 2
    assert term_degree(d, (2, 1), (1, 0), (0, 0)) == 2


def test_scalars_choice_validation():
    d = CartanDatum.from_type("A2")
    with pytest.raises(ValueError):
        ScalarsChoice(d, t={(1, 2): 0})
    with pytest.raises(ValueError):
        ScalarsChoice(d, s={(1, 2, 1, 2): 1})
