"""Cartan data, root and weight arithmetic, Weyl words."""

import random

import pytest

from qklr.rootdata import (CartanDatum, RootVec, Weight, bilin, pair_root,
                           weyl_act, is_reduced, reduced_words, word_length,
                           positive_roots)


def test_builtin_data():
    b2 = CartanDatum.from_type("B2")
    assert b2.a[(1, 2)] == -1 and b2.a[(2, 1)] == -2
    assert b2.d == {1: 2, 2: 1}
    g2 = CartanDatum.from_type("G2")
    assert g2.a[(1, 2)] == -1 and g2.a[(2, 1)] == -3
    assert g2.d == {1: 3, 2: 1}
    with pytest.raises(ValueError):
        CartanDatum.from_type("E8")


def test_symmetrizer_validation():
    with pytest.raises(ValueError):
        CartanDatum([1, 2], {(1, 1): 2, (2, 2): 2, (1, 2): -1, (2, 1): -2},
                    {1: 1, 2: 1})


def test_bilinear_form():
    for typ in ("A2", "B2", "G2"):
        d = CartanDatum.from_type(typ)
        for i in d.I:
            for j in d.I:
                ai, aj = d.alpha(i), d.alpha(j)
                assert bilin(ai, aj) == bilin(aj, ai)
                assert bilin(ai, aj) == d.d[i] * d.a[(i, j)]
        # (alpha_i, alpha_i) = 2 d_i
        assert all(bilin(d.alpha(i), d.alpha(i)) == 2 * d.d[i]
                   for i in d.I)


def test_weyl_action_involution():
    rng = random.Random(3)
    for typ in ("A2", "B2", "G2", "A3"):
        d = CartanDatum.from_type(typ)
        for _ in range(20):
            w = [d.I[rng.randrange(len(d.I))] for _ in range(rng.randrange(5))]
            beta = RootVec(d, {i: rng.randrange(-2, 3) for i in d.I})
            assert weyl_act(w + list(reversed(w)), beta) == beta
            lam = Weight(d, {i: rng.randrange(-2, 3) for i in d.I})
            assert weyl_act(w + list(reversed(w)), lam) == lam


def test_weyl_action_invariance():
    # the form is W-invariant
    d = CartanDatum.from_type("B2")
    beta = RootVec(d, {1: 1, 2: 1})
    gamma = RootVec(d, {1: 2})
    for w in ([1], [2], [1, 2], [2, 1, 2]):
        assert bilin(weyl_act(w, beta), weyl_act(w, gamma)) == \
            bilin(beta, gamma)


def test_reduced_words():
    a2 = CartanDatum.from_type("A2")
    assert is_reduced(a2, (1, 2, 1))
    assert not is_reduced(a2, (1, 1))
    assert not is_reduced(a2, (1, 2, 1, 2))
    assert set(reduced_words(a2, (1, 2, 1))) == {(1, 2, 1), (2, 1, 2)}
    b2 = CartanDatum.from_type("B2")
    assert is_reduced(b2, (1, 2, 1, 2))
    assert set(reduced_words(b2, (1, 2, 1, 2))) == {(1, 2, 1, 2),
                                                    (2, 1, 2, 1)}


def test_word_length():
    a2 = CartanDatum.from_type("A2")
    assert word_length(a2, (1, 2, 1, 2)) == 2
    assert word_length(a2, ()) == 0
    assert word_length(a2, (1, 1)) == 0


def test_positive_roots():
    counts = {"A1xA1": 2, "A2": 3, "B2": 4, "G2": 6, "A3": 6}
    for typ, n in counts.items():
        d = CartanDatum.from_type(typ)
        roots = positive_roots(d)
        assert len(roots) == n
        assert all(r.is_positive() or len(r.co) == 1 for r in roots)
        assert all(r.in_Qplus() for r in roots)


def test_coxeter_h():
    for typ, h in (("A1xA1", 2), ("A2", 3), ("B2", 4), ("G2", 6)):
        d = CartanDatum.from_type(typ)
        assert d.coxeter_h(1, 2) == h


def test_weight_minus_root():
    a2 = CartanDatum.from_type("A2")
    lam = a2.fundamental_weight(1)
    mu = lam.minus_root(a2.alpha(1))
    assert mu.pair == {1: -1, 2: 1}
    assert pair_root(lam, a2.alpha(1)) == 1
