"""The negative half U_q^-(g) as free words over I modulo the radical of the
bilinear form.

Elements are finite linear combinations of words with Q(q) coefficients.
The form is defined recursively by (1,1) = 1 and
(f_i x, y) = 1/(1 - q_i^2) (x, _ir(y)); its radical on each weight space is
the defining (Serre) ideal, so canonical forms are coordinates on a chosen
set of pivot words modulo the Gram kernel.
"""

import itertools
import threading
from .scalars import RationalQ, quantum_factorial
from .rootdata import RootVec, bilin
from . import linalg

__all__ = [
    "FWordElem",
    "WeightBasis",
    "ir_op",
    "ri_op",
    "gram",
    "weight_basis",
    "reduce_elem",
    "is_zero_elem",
    "serre_element",
    "divided_power",
    "word_weight",
    "HEIGHT_BOUND_DEFAULT",
]

HEIGHT_BOUND_DEFAULT = 8

_ZERO = RationalQ.zero()
_ONE = RationalQ.one()


class FWordElem:
    """Linear combination of words over I; terms: word tuple -> RationalQ."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum, terms=None):
        self.datum = datum
        tt = {}
        if terms:
            for w, c in terms.items():
                if c:
                    tt[tuple(w)] = c
        self.terms = tt

    @classmethod
    def unit(cls, datum):
        return cls(datum, {(): _ONE})

    @classmethod
    def gen(cls, datum, i):
        return cls(datum, {(i,): _ONE})

    @classmethod
    def word(cls, datum, w, coeff=_ONE):
        return cls(datum, {tuple(w): coeff})

    def is_zero_raw(self):
        """True iff no stored terms (free-algebra zero, not quotient zero)."""
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, _ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        r = FWordElem(self.datum)
        r.terms = out
        return r

    def __neg__(self):
        r = FWordElem(self.datum)
        r.terms = {w: -c for w, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return FWordElem(self.datum)
        r = FWordElem(self.datum)
        r.terms = {w: c * v for w, v in self.terms.items()}
        return r

    def __mul__(self, other):
        """Concatenation product in the free algebra."""
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, _ZERO) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        r = FWordElem(self.datum)
        r.terms = out
        return r

    def weights(self):
        return {word_weight(self.datum, w) for w in self.terms}

    def weight_components(self):
        """Split into weight-homogeneous pieces: dict key() -> FWordElem."""
        comps = {}
        for w, c in self.terms.items():
            k = word_weight(self.datum, w).key()
            comps.setdefault(k, {})[w] = c
        return {k: FWordElem(self.datum, t) for k, t in comps.items()}

    def __eq__(self, other):
        """Structural (free-algebra) equality; use reduce_elem for U_q^-."""
        return (isinstance(other, FWordElem) and self.datum == other.datum
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_json(self):
        return {"terms": [{"word": list(w), "coeff": c.to_json()}
                          for w, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, datum, data):
        return cls(datum, {tuple(t["word"]): RationalQ.from_json(t["coeff"])
                           for t in data["terms"]})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            mono = "".join(f"f{i}" for i in w) or "1"
            parts.append(f"({self.terms[w]})*{mono}")
        return " + ".join(parts)


def word_weight(datum, w):
    co = {}
    for i in w:
        co[i] = co.get(i, 0) + 1
    return RootVec(datum, co)


def ir_op(i, u):
    """The skew derivation _ir: _ir(f_j) = delta_ij,
    _ir(xy) = _ir(x) y + q^{-(alpha_i, wt x)} x _ir(y)."""
    d = u.datum
    alpha_i = d.alpha(i)
    out = {}
    for w, c in u.terms.items():
        # running exponent -(alpha_i, alpha_{w_1}+...+alpha_{w_{k-1}})
        exp = 0
        for k, letter in enumerate(w):
            if letter == i:
                nw = w[:k] + w[k + 1:]
                coeff = c * RationalQ.q_power(exp)
                s = out.get(nw, _ZERO) + coeff
                if s:
                    out[nw] = s
                else:
                    out.pop(nw, None)
            exp -= bilin(alpha_i, d.alpha(letter))
    return FWordElem(d, out)


def ri_op(i, u):
    """The skew derivation r_i: r_i(f_j) = delta_ij,
    r_i(xy) = q^{-(alpha_i, wt y)} r_i(x) y + x r_i(y)."""
    d = u.datum
    alpha_i = d.alpha(i)
    out = {}
    for w, c in u.terms.items():
        exp = 0
        for k in range(len(w) - 1, -1, -1):
            letter = w[k]
            if letter == i:
                nw = w[:k] + w[k + 1:]
                coeff = c * RationalQ.q_power(exp)
                s = out.get(nw, _ZERO) + coeff
                if s:
                    out[nw] = s
                else:
                    out.pop(nw, None)
            exp -= bilin(alpha_i, d.alpha(letter))
    return FWordElem(d, out)


# ---------------------------------------------------------------------------
# the bilinear form

_gram_cache = {}
_gram_lock = threading.Lock()


def _gram_words(datum, w1, w2):
    """(f_{w1}, f_{w2}) by the recursion (f_i x, y) = (x, _ir y)/(1-q_i^2)."""
    if not w1:
        return _ONE if not w2 else _ZERO
    if len(w1) != len(w2):
        return _ZERO
    key = (datum, w1, w2)
    with _gram_lock:
        hit = _gram_cache.get(key)
    if hit is not None:
        return hit
    i = w1[0]
    rest = FWordElem.word(datum, w1[1:])
    dy = ir_op(i, FWordElem.word(datum, w2))
    total = _ZERO
    for w, c in dy.terms.items():
        g = _gram_words(datum, w1[1:], w)
        if g:
            total = total + c * g
    qi2 = RationalQ.q_power(2 * datum.d[i])
    total = total * (_ONE - qi2).inverse()
    with _gram_lock:
        _gram_cache[key] = total
    return total


def gram(a, b):
    """Bilinear form on FWordElem; zero across distinct weights."""
    total = _ZERO
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            if len(w1) == len(w2) and sorted(w1) == sorted(w2):
                g = _gram_words(a.datum, w1, w2)
                if g:
                    total = total + c1 * c2 * g
    return total


# ---------------------------------------------------------------------------
# weight bases / canonical forms

class WeightBasis:
    """Canonical-form data for the weight space U_q^-(g)_{-beta}.

    all_words are ordered length-lex (all the same length here, so lex);
    pivot_words are the Gram-rank many chosen pivots; every word carries
    coordinates on pivot_words modulo the kernel (radical).
    """

    __slots__ = ("datum", "beta", "all_words", "pivot_words", "kernel_basis",
                 "coords")

    def __init__(self, datum, beta):
        self.datum = datum
        self.beta = beta
        letters = []
        for i in datum.I:
            letters.extend([i] * beta[i])
        words = sorted(set(itertools.permutations(letters)))
        self.all_words = words
        n = len(words)
        mat = [[_gram_words(datum, w1, w2) for w2 in words] for w1 in words]
        rows, pivots = linalg.rref(mat, n)
        self.pivot_words = [words[c] for c in pivots]
        # column c of the Gram matrix = sum_r rows[r][c] * column(pivots[r]);
        # hence word_c = sum coords * pivot words modulo the radical
        self.coords = {}
        pivset = set(pivots)
        for c, w in enumerate(words):
            if c in pivset:
                vec = [_ONE if pivots[r] == c else _ZERO
                       for r in range(len(pivots))]
            else:
                vec = [rows[r][c] for r in range(len(pivots))]
            self.coords[w] = vec
        # kernel of the Gram matrix = the radical
        self.kernel_basis = []
        for v in linalg.nullspace(mat, n):
            self.kernel_basis.append(
                FWordElem(datum, {words[k]: v[k] for k in range(n) if v[k]}))

    @property
    def dim(self):
        return len(self.pivot_words)


_wb_cache = {}
_wb_lock = threading.Lock()


def weight_basis(datum, beta, height_bound=HEIGHT_BOUND_DEFAULT):
    if not beta.in_Qplus():
        raise ValueError(f"{beta} is not in Q+")
    if beta.height() > height_bound:
        raise ValueError(f"height {beta.height()} exceeds bound {height_bound}")
    key = (datum, beta.key())
    with _wb_lock:
        hit = _wb_cache.get(key)
    if hit is not None:
        return hit
    wb = WeightBasis(datum, beta)
    with _wb_lock:
        return _wb_cache.setdefault(key, wb)


def reduce_elem(u, height_bound=HEIGHT_BOUND_DEFAULT):
    """Canonical coordinates per weight: dict weight-key -> (basis, coeff list)."""
    out = {}
    for key, comp in u.weight_components().items():
        beta = RootVec(u.datum, dict(zip(u.datum.I, key)))
        wb = weight_basis(u.datum, beta, height_bound)
        vec = [_ZERO] * wb.dim
        for w, c in comp.terms.items():
            wcoords = wb.coords[w]
            for k in range(wb.dim):
                if wcoords[k]:
                    vec[k] = vec[k] + c * wcoords[k]
        if any(vec):
            out[key] = (wb, vec)
    return out


def canonical_form(u, height_bound=HEIGHT_BOUND_DEFAULT):
    """Rewrite u as a combination of pivot words (the canonical representative)."""
    terms = {}
    for _, (wb, vec) in reduce_elem(u, height_bound).items():
        for w, c in zip(wb.pivot_words, vec):
            if c:
                terms[w] = terms.get(w, _ZERO) + c
    return FWordElem(u.datum, terms)


def is_zero_elem(u, height_bound=HEIGHT_BOUND_DEFAULT):
    return not reduce_elem(u, height_bound)


def divided_power(datum, i, n):
    """f_i^{(n)} = f_i^n / [n]_i!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    fact = RationalQ.from_laurent(quantum_factorial(n, datum.d[i]))
    return FWordElem(datum, {(i,) * n: fact.inverse()})


def serre_element(datum, i, j):
    """sum_{s=0}^{1-a_ij} (-1)^s f_i^{(s)} f_j f_i^{(1-a_ij-s)}."""
    if i == j:
        raise ValueError("serre_element requires i != j")
    m = 1 - datum.a[(i, j)]
    total = FWordElem(datum)
    fj = FWordElem.gen(datum, j)
    for s in range(m + 1):
        term = divided_power(datum, i, s) * fj * divided_power(datum, i, m - s)
        total = total + term.scale(RationalQ.from_int((-1) ** s))
    return total
