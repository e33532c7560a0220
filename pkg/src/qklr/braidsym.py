"""Adjoint operators ad_{f_i}, ad_{e_i} and their * variants, the subalgebras
U_i = Ker r_i and _iU = Ker _ir, the braid-twisted generators u_j, u'_j, the
characters of the modules Delta(w alpha_i), and mechanical verification of
the bimodule characterization of T_i.
"""

import random
from .scalars import RationalQ, quantum_factorial
from .rootdata import weyl_act, is_reduced, positive_roots, bilin
from . import uqminus
from .uqminus import FWordElem, HEIGHT_BOUND_DEFAULT
from .uqfull import (TriangularElem, apply_ti, apply_braid, sigma_auto,
                     equals, compress, fpart_as_fword)

__all__ = [
    "ad",
    "ad_divided",
    "uj_elem",
    "in_Ui",
    "in_iU",
    "delta_char",
    "verify_bimodule",
]

_ONE = RationalQ.one()


def ad(datum, i, variant, u):
    """The adjoint operators:

    ad_{f_i}(u)  = f_i u - t_i u t_i^{-1} f_i
    ad_{e_i}(u)  = e_i u t_i - u e_i t_i
    ad*_{f_i}(u) = u f_i - f_i t_i u t_i^{-1}
    ad*_{e_i}(u) = u e_i t_i^{-1} - e_i u t_i^{-1}

    (the * variants are sigma . ad . sigma).
    """
    fi = TriangularElem.f_gen(datum, i)
    ei = TriangularElem.e_gen(datum, i)
    t = TriangularElem.t_mono(datum, {i: 1})
    ti = TriangularElem.t_mono(datum, {i: -1})
    if variant == "f":
        return fi * u - t * u * ti * fi
    if variant == "e":
        return ei * u * t - u * ei * t
    if variant == "f*":
        return u * fi - fi * t * u * ti
    if variant == "e*":
        return u * ei * ti - ei * u * ti
    raise ValueError(f"unknown ad variant {variant!r}")


def ad_divided(datum, i, variant, n, u):
    """ad^{(n)} = ad^n / [n]_i!."""
    for _ in range(n):
        u = ad(datum, i, variant, u)
    fact = RationalQ.from_laurent(quantum_factorial(n, datum.d[i]))
    return u.scale(fact.inverse())


def uj_elem(datum, i, j, primed=False, height_bound=HEIGHT_BOUND_DEFAULT):
    """u'_j = T_i(f_j) (primed) or u_j = T_i^{-1}(f_j), certified in U^-."""
    if i == j:
        raise ValueError("uj_elem requires i != j")
    u = apply_ti(i, TriangularElem.f_gen(datum, j), inverse=not primed,
                 height_bound=height_bound)
    return fpart_as_fword(u)


def in_Ui(i, u, height_bound=HEIGHT_BOUND_DEFAULT):
    """u in U_i = Ker r_i (modulo the Serre radical)."""
    return uqminus.is_zero_elem(uqminus.ri_op(i, u), height_bound)


def in_iU(i, u, height_bound=HEIGHT_BOUND_DEFAULT):
    """u in _iU = Ker _ir (modulo the Serre radical)."""
    return uqminus.is_zero_elem(uqminus.ir_op(i, u), height_bound)


def delta_char(datum, wword, i, simple_normalized=False,
               height_bound=HEIGHT_BOUND_DEFAULT):
    """T_{i_1} ... T_{i_l}(f_i), optionally times (1 - q_i^2); requires
    w alpha_i to be a positive root."""
    wword = tuple(wword)
    if not is_reduced(datum, wword):
        raise ValueError(f"word {wword} is not reduced")
    beta = weyl_act(list(wword), datum.alpha(i))
    if not (beta.in_Qplus() and beta in positive_roots(datum)):
        raise ValueError(f"w(alpha_{i}) = {beta} is not a positive root")
    u = TriangularElem.f_gen(datum, i)
    u = apply_braid(list(wword), u, height_bound=height_bound)
    res = fpart_as_fword(u)
    if simple_normalized:
        qi2 = RationalQ.q_power(2 * datum.d[i])
        res = res.scale(_ONE - qi2)
    return uqminus.canonical_form(res, height_bound)


# ---------------------------------------------------------------------------


def _random_iU_elem(datum, i, rng, height_bound, hb, max_ops=4):
    """A random element of _iU, built constructively by the right
    action on 1: u.f_i = ad*_{f_i}(u), u.e_i = ad*_{e_i}(u),
    u.f_j = u f_j (j != i).

    Heights are capped so that u, u.x and their T_i-images all stay
    reducible within hb (T_i sends weight -mu to -s_i(mu), which can be
    much taller than mu).
    """
    u = TriangularElem.unit(datum)
    mu = datum.zero_root()  # -(weight of u)
    others = [j for j in datum.I if j != i]
    nops = rng.randint(1, max_ops)
    for _ in range(nops):
        choice = rng.choice(["fi", "fj"] + (["ei"] if rng.random() < 0.3
                                            else []))
        if choice == "ei":
            cand = mu - datum.alpha(i)
        elif choice == "fi":
            cand = mu + datum.alpha(i)
        else:
            j = rng.choice(others)
            cand = mu + datum.alpha(j)
        if not cand.in_Qplus():
            continue
        img = weyl_act([i], cand)
        if cand.height() >= height_bound or img.height() + 4 > hb:
            break
        if choice == "fi":
            u = ad(datum, i, "f*", u)
        elif choice == "ei":
            u = ad(datum, i, "e*", u)
        else:
            u = u * TriangularElem.f_gen(datum, j)
        mu = cand
        u = compress(u, hb)
    return u


def verify_bimodule(datum, i, height_bound=4, samples=20, seed=0):
    """Check the right-module identities transported by T_i from _iU to U_i:

    T_i(u . f_i) = ad_{e_i}(T_i(u)),
    T_i(u . e_i) = ad_{f_i}(T_i(u)),
    T_i(u . f_j) = T_i(u) * u'_j    with u'_j = T_i(f_j),

    for random weight-homogeneous u in _iU, with the right action
    u.f_i = ad*_{f_i}(u), u.f_j = u f_j, and the normalized e-action
    u.e_i = q^{-(alpha_i, wt u + alpha_i)} ad*_{e_i}(u) (the q-power makes
    the intertwining exact; ad*_{e_i} alone twists it by that factor).
    Also spot-checks ad_{f_i} = q^{-(alpha_i, wt v) + 2d_i}
    T_i . ad*_{e_i} . T_i^{-1} on f-monomial samples v.

    Returns a report dict; report["failures"] is empty iff all pass.
    """
    rng = random.Random(seed)
    hb = max(height_bound + 4, HEIGHT_BOUND_DEFAULT)
    alpha_i = datum.alpha(i)
    failures = []
    checks = 0
    others = [j for j in datum.I if j != i]
    for s in range(samples):
        u = _random_iU_elem(datum, i, rng, height_bound, hb)
        # membership sanity: u must lie in _iU
        try:
            uw = fpart_as_fword(u)
        except ValueError:
            failures.append({"sample": s, "identity": "u in U^-",
                             "elem": u.to_json()})
            continue
        if not in_iU(i, uw, hb):
            failures.append({"sample": s, "identity": "u in _iU",
                             "elem": u.to_json()})
            continue
        mu = uqminus.word_weight(
            datum, next(iter(uw.terms), ()))  # u has weight -mu
        tu = apply_ti(i, u, height_bound=hb)
        # u . f_i = ad*_{f_i}(u)
        lhs = apply_ti(i, ad(datum, i, "f*", u), height_bound=hb)
        rhs = ad(datum, i, "e", tu)
        checks += 1
        if not equals(lhs, rhs, hb):
            failures.append({"sample": s, "identity": "T(u.f_i)=ad_e(Tu)",
                             "elem": u.to_json()})
        # u . e_i, with the normalizing q-power
        norm = RationalQ.q_power(bilin(alpha_i, -mu + alpha_i))
        lhs = apply_ti(i, ad(datum, i, "e*", u), height_bound=hb)
        rhs = ad(datum, i, "f", tu).scale(norm)
        checks += 1
        if not equals(lhs, rhs, hb):
            failures.append({"sample": s, "identity": "T(u.e_i)=ad_f(Tu)",
                             "elem": u.to_json()})
        # u . f_j = u f_j maps to right multiplication by u'_j
        for j in others:
            img = weyl_act([i], mu + datum.alpha(j))
            if img.height() + 1 > hb:
                continue
            lhs = apply_ti(i, u * TriangularElem.f_gen(datum, j),
                           height_bound=hb)
            ujp = TriangularElem.from_fword(
                uj_elem(datum, i, j, primed=True, height_bound=hb))
            rhs = tu * ujp
            checks += 1
            if not equals(lhs, rhs, hb):
                failures.append({"sample": s,
                                 "identity": f"T(u.f_{j})=T(u)*u'_{j}",
                                 "elem": u.to_json()})
    # spot checks: ad_{f_i} = (q-power) T_i ad*_{e_i} T_i^{-1}
    for s in range(min(samples, 5)):
        jj = [rng.choice(others)] if others else []
        if rng.random() < 0.5 and others:
            jj.append(rng.choice(others))
        v = TriangularElem.unit(datum)
        nu = datum.zero_root()
        for j in jj:
            v = v * TriangularElem.f_gen(datum, j)
            nu = nu + datum.alpha(j)
        lhs = ad(datum, i, "f", v)
        rhs = apply_ti(i, ad(datum, i, "e*",
                             apply_ti(i, v, inverse=True, height_bound=hb)),
                       height_bound=hb)
        norm = RationalQ.q_power(bilin(alpha_i, nu) + 2 * datum.d[i])
        checks += 1
        if not equals(lhs.scale(norm), rhs, hb):
            failures.append({"sample": s, "identity": "ad_f = T ad*_e T^-1",
                             "elem": v.to_json()})
    return {"datum": datum.name, "i": i, "samples": samples,
            "checks": checks, "failures": failures}
