"""The full quantum group U_q(g) via triangular straightening.

Elements are finite sums of terms (f-word, t-monomial exponents, e-word)
with Q(q) coefficients.  Multiplication concatenates and then straightens
using

    [e_i, f_j] = delta_ij (t_i - t_i^{-1})/(q_i - q_i^{-1}),
    q^h e_i q^{-h} = q^{<h, alpha_i>} e_i,

with t_i = q^{d_i h_i}.  The Cartan part is restricted to the lattice of
t-monomials; nothing in scope needs more.

Equality is decided through the triangular decomposition: terms are grouped
by t-exponent and the f-/e-words are reduced to pivot coordinates in the
uqminus quotient (the e side reuses the same machinery through the
letterwise identification e <-> f, which preserves the Serre ideal).
"""

from .scalars import RationalQ, quantum_factorial
from .rootdata import RootVec, bilin
from . import uqminus
from .uqminus import FWordElem, HEIGHT_BOUND_DEFAULT

__all__ = [
    "TriangularElem",
    "ti_gen",
    "apply_ti",
    "apply_braid",
    "sigma_auto",
    "eval_highest_weight",
    "equals",
    "compress",
]

_ZERO = RationalQ.zero()
_ONE = RationalQ.one()


def _kappa_add(k1, k2):
    out = dict(k1)
    for i, v in k2:
        n = out.get(i, 0) + v
        if n:
            out[i] = n
        else:
            out.pop(i, None)
    return tuple(sorted(out.items()))


class TriangularElem:
    """terms: dict (fword, kappa, eword) -> RationalQ.

    kappa is a sorted tuple of (index, exponent) pairs meaning prod t_i^k_i.
    """

    __slots__ = ("datum", "terms")

    def __init__(self, datum, terms=None):
        self.datum = datum
        tt = {}
        if terms:
            for key, c in terms.items():
                if c:
                    tt[key] = c
        self.terms = tt

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, datum):
        return cls(datum)

    @classmethod
    def unit(cls, datum, coeff=_ONE):
        return cls(datum, {((), (), ()): coeff})

    @classmethod
    def f_gen(cls, datum, i):
        return cls(datum, {((i,), (), ()): _ONE})

    @classmethod
    def e_gen(cls, datum, i):
        return cls(datum, {((), (), (i,)): _ONE})

    @classmethod
    def t_mono(cls, datum, kappa):
        kk = tuple(sorted((i, v) for i, v in dict(kappa).items() if v))
        return cls(datum, {((), kk, ()): _ONE})

    @classmethod
    def from_fword(cls, u):
        return cls(u.datum, {(w, (), ()): c for w, c in u.terms.items()})

    @classmethod
    def from_eword(cls, u):
        """Interpret an FWordElem as a plus-side element via e <-> f."""
        return cls(u.datum, {((), (), w): c for w, c in u.terms.items()})

    # -- linear structure --------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, _ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        r = TriangularElem(self.datum)
        r.terms = out
        return r

    def __neg__(self):
        r = TriangularElem(self.datum)
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return TriangularElem(self.datum)
        r = TriangularElem(self.datum)
        r.terms = {k: c * v for k, v in self.terms.items()}
        return r

    def is_zero_raw(self):
        return not self.terms

    # -- multiplication ----------------------------------------------------

    def __mul__(self, other):
        out = {}
        d = self.datum
        for (f1, k1, e1), c1 in self.terms.items():
            for (f2, k2, e2), c2 in other.terms.items():
                seq = ([("f", i) for i in f2] + ([("t", k2)] if k2 else [])
                       + [("e", i) for i in e2])
                for key, c in _straighten(d, f1, k1, list(e1), seq,
                                          c1 * c2).items():
                    s = out.get(key, _ZERO) + c
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        r = TriangularElem(d)
        r.terms = out
        return r

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (f, k, e) in sorted(self.terms,
                                key=lambda t: (len(t[0]), len(t[2]), t)):
            mono = "".join(f"f{i}" for i in f)
            mono += "".join(f"t{i}^{v}" for i, v in k)
            mono += "".join(f"e{i}" for i in e)
            parts.append(f"({self.terms[(f, k, e)]})*{mono or '1'}")
        return " + ".join(parts)

    def to_json(self):
        return [{"f": list(f), "t": {str(i): v for i, v in k},
                 "e": list(e), "coeff": c.to_json()}
                for (f, k, e), c in sorted(self.terms.items())]


def _straighten(datum, fword, kappa, eword, seq, coeff):
    """Multiply the normal term (fword, kappa, eword) by the raw symbol
    sequence seq on the right; return normal-form terms.

    State during processing: fword and kappa are settled; `mid` holds the
    pending e-letters that still have to be commuted into place.
    """
    out = {}
    stack = [(coeff, fword, kappa, list(eword), list(seq))]
    qexp = RationalQ.q_power
    while stack:
        c, fw, ka, ew, rest = stack.pop()
        ew = list(ew)
        rest = list(rest)  # each entry must own its lists (branches share tails)
        progressed = True
        while progressed and rest:
            progressed = False
            sym = rest[0]
            if sym[0] == "f":
                j = sym[1]
                if not ew:
                    # commute past kappa only
                    if ka:
                        exp = -sum(v * datum.d[i] * datum.a[(i, j)]
                                   for i, v in ka)
                        c = c * qexp(exp)
                    fw = fw + (j,)
                    rest.pop(0)
                    progressed = True
                else:
                    # swap the last pending e past this f
                    i = ew[-1]
                    rest.pop(0)  # the f is re-emitted inside each branch
                    ew2 = ew[:-1]
                    # e_i f_j = f_j e_i + delta_ij (t_i - t_i^-1)/(q_i-q_i^-1)
                    stack.append((c, fw, ka, ew2,
                                  [("f", j), ("e", i)] + rest))
                    if i == j:
                        di = datum.d[i]
                        denom = (qexp(di) - qexp(-di)).inverse()
                        stack.append((c * denom, fw, ka, ew2,
                                      [("t", ((i, 1),))] + rest))
                        stack.append((-(c * denom), fw, ka, ew2,
                                      [("t", ((i, -1),))] + rest))
                    c = None
                    break
            elif sym[0] == "t":
                k2 = sym[1]
                # commute kappa' = k2 left past pending e-letters:
                # e_i q^h = q^{-<h, alpha_i>} q^h e_i
                for i in ew:
                    exp = -sum(v * datum.d[l] * datum.a[(l, i)] for l, v in k2)
                    c = c * qexp(exp)
                ka = _kappa_add(dict(ka), k2)
                rest.pop(0)
                progressed = True
            else:  # e-letter: joins the pending mid-block
                ew.append(sym[1])
                rest.pop(0)
                progressed = True
        if c is None:
            continue
        key = (fw, ka, tuple(ew))
        s = out.get(key, _ZERO) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# compression (canonical form through the triangular decomposition)


def compress(u, height_bound=HEIGHT_BOUND_DEFAULT):
    """Rewrite f- and e-parts on pivot words modulo the Serre radical."""
    d = u.datum
    groups = {}
    for (f, k, e), c in u.terms.items():
        fwt = uqminus.word_weight(d, f).key()
        ewt = uqminus.word_weight(d, e).key()
        groups.setdefault((k, fwt, ewt), {})[(f, e)] = c
    out = {}
    for (k, fwt, ewt), pairs in groups.items():
        fb = uqminus.weight_basis(d, RootVec(d, dict(zip(d.I, fwt))),
                                  height_bound)
        eb = uqminus.weight_basis(d, RootVec(d, dict(zip(d.I, ewt))),
                                  height_bound)
        acc = {}
        for (f, e), c in pairs.items():
            fc = fb.coords[f]
            ec = eb.coords[e]
            for a, fw in zip(fc, fb.pivot_words):
                if not a:
                    continue
                ca = c * a
                for b, ew in zip(ec, eb.pivot_words):
                    if b:
                        key = (fw, ew)
                        s = acc.get(key, _ZERO) + ca * b
                        if s:
                            acc[key] = s
                        else:
                            acc.pop(key, None)
        for (fw, ew), c in acc.items():
            key = (fw, k, ew)
            s = out.get(key, _ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    r = TriangularElem(d)
    r.terms = out
    return r


def equals(a, b, height_bound=HEIGHT_BOUND_DEFAULT):
    return compress(a - b, height_bound).is_zero_raw()


# ---------------------------------------------------------------------------
# braid operators


def _divided_f(datum, i, n):
    fact = RationalQ.from_laurent(quantum_factorial(n, datum.d[i]))
    return TriangularElem(datum, {((i,) * n, (), ()): fact.inverse()})


def _divided_e(datum, i, n):
    fact = RationalQ.from_laurent(quantum_factorial(n, datum.d[i]))
    return TriangularElem(datum, {((), (), (i,) * n): fact.inverse()})


def ti_gen(datum, i, kind, j, inverse=False):
    """T_i^{+-1} of a generator: kind in {'e','f','t'}, target index j.

    T_i(e_i) = -t_i^{-1} f_i                    T_i(f_i) = -e_i t_i
    T_i(e_j) = sum_{r+s=-a_ij} (-1)^r q_i^{-r} e_i^{(r)} e_j e_i^{(s)}
    T_i(f_j) = sum_{r+s=-a_ij} (-1)^r q_i^{r}  f_i^{(s)} f_j f_i^{(r)}
    T_i(t_j) = t_j t_i^{-a_ij}

    and T_i^{-1} = sigma T_i sigma:
    T_i^{-1}(e_i) = -f_i t_i                    T_i^{-1}(f_i) = -t_i^{-1} e_i
    T_i^{-1}(e_j) = sum (-1)^r q_i^{-r} e_i^{(s)} e_j e_i^{(r)}
    T_i^{-1}(f_j) = sum (-1)^r q_i^{r}  f_i^{(r)} f_j f_i^{(s)}
    """
    d = datum
    qi = RationalQ.q_power(d.d[i])
    if kind == "t":
        if i == j:
            return TriangularElem.t_mono(d, {i: -1})
        return TriangularElem.t_mono(d, {j: 1, i: -d.a[(i, j)]})
    if kind == "e":
        if i == j:
            if not inverse:
                # -t_i^{-1} f_i, normal ordered
                prod = TriangularElem.t_mono(d, {i: -1}) \
                    * TriangularElem.f_gen(d, i)
            else:
                # -f_i t_i
                prod = TriangularElem.f_gen(d, i) \
                    * TriangularElem.t_mono(d, {i: 1})
            return prod.scale(-_ONE)
        n = -d.a[(i, j)]
        total = TriangularElem.zero(d)
        ej = TriangularElem.e_gen(d, j)
        for r in range(n + 1):
            s = n - r
            coeff = RationalQ.from_int((-1) ** r) * qi ** (-r)
            if not inverse:
                term = _divided_e(d, i, r) * ej * _divided_e(d, i, s)
            else:
                term = _divided_e(d, i, s) * ej * _divided_e(d, i, r)
            total = total + term.scale(coeff)
        return total
    if kind == "f":
        if i == j:
            if not inverse:
                # -e_i t_i
                prod = TriangularElem.e_gen(d, i) \
                    * TriangularElem.t_mono(d, {i: 1})
            else:
                # -t_i^{-1} e_i
                prod = TriangularElem.t_mono(d, {i: -1}) \
                    * TriangularElem.e_gen(d, i)
            return prod.scale(-_ONE)
        n = -d.a[(i, j)]
        total = TriangularElem.zero(d)
        fj = TriangularElem.f_gen(d, j)
        for r in range(n + 1):
            s = n - r
            coeff = RationalQ.from_int((-1) ** r) * qi ** r
            if not inverse:
                term = _divided_f(d, i, s) * fj * _divided_f(d, i, r)
            else:
                term = _divided_f(d, i, r) * fj * _divided_f(d, i, s)
            total = total + term.scale(coeff)
        return total
    raise ValueError(f"unknown generator kind {kind!r}")


def apply_ti(i, u, inverse=False, height_bound=HEIGHT_BOUND_DEFAULT,
             do_compress=True):
    """Apply T_i (or its inverse) to a TriangularElem by substitution."""
    d = u.datum
    total = TriangularElem.zero(d)
    for (f, k, e), c in u.terms.items():
        acc = TriangularElem.unit(d, c)
        for j in f:
            acc = acc * ti_gen(d, i, "f", j, inverse)
        for j, v in k:
            tij = ti_gen(d, i, "t", j)
            if v < 0:
                tij = _t_inverse(tij)
                v = -v
            for _ in range(v):
                acc = acc * tij
        for j in e:
            acc = acc * ti_gen(d, i, "e", j, inverse)
        total = total + acc
    if do_compress:
        total = compress(total, height_bound)
    return total


def _t_inverse(t_elem):
    ((f, k, e),) = t_elem.terms
    assert not f and not e
    return TriangularElem.t_mono(t_elem.datum, {i: -v for i, v in k})


def apply_braid(word, u, inverse_flags=None,
                height_bound=HEIGHT_BOUND_DEFAULT):
    """T_w(u) for w = (i_1 .. i_l): operator composition T_{i_1} ... T_{i_l},
    letters applied right to left.  inverse_flags marks per-letter inverses."""
    if inverse_flags is None:
        inverse_flags = [False] * len(word)
    for i, inv in zip(reversed(word), reversed(list(inverse_flags))):
        u = apply_ti(i, u, inverse=inv, height_bound=height_bound)
    return u


# ---------------------------------------------------------------------------


def sigma_auto(u):
    """sigma: e_i -> e_i, f_i -> f_i, q^h -> q^{-h}; an anti-automorphism
    (reverses words, negates t-exponents)."""
    out = {}
    for (f, k, e), c in u.terms.items():
        key = (tuple(reversed(f)), tuple((i, -v) for i, v in k),
               tuple(reversed(e)))
        s = out.get(key, _ZERO) + c
        if s:
            out[key] = s
    r = TriangularElem(u.datum)
    r.terms = {k: c for k, c in out.items() if c}
    return r


def eval_highest_weight(u, lam):
    """u . v_Lambda: drop terms with e-letters, evaluate t at Lambda."""
    d = u.datum
    out = {}
    for (f, k, e), c in u.terms.items():
        if e:
            continue
        exp = sum(v * d.d[i] * lam[i] for i, v in k)
        coeff = c * RationalQ.q_power(exp)
        s = out.get(f, _ZERO) + coeff
        if s:
            out[f] = s
        else:
            out.pop(f, None)
    return FWordElem(d, out)


def fpart_as_fword(u):
    """Extract u in U^- (requires every term to be a pure f-term)."""
    out = {}
    for (f, k, e), c in u.terms.items():
        if e or k:
            raise ValueError(f"element is not in U^-: term {(f, k, e)}")
        out[f] = c
    return FWordElem(u.datum, out)
