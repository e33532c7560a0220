"""Parabolic highest-weight modules as explicit weight-space quotients.

A slice holds the weight space of weight Lambda - beta of the module
generated by a highest vector v with e_j v = 0 (j in J), t^h v = q^{<h,L>} v,
and f_j^{<h_j,L>+1} v = 0.  Concretely this is the span of f-words of weight
beta modulo the radical of the bilinear form together with every word ending
in f_j^{<h_j,L>+1}.  The generators f_i act for all i; e_j acts for j in J by
straightening; for i outside J the skew derivation _ir acts in place of e_i.
"""

import itertools
import threading
from fractions import Fraction
from .scalars import RationalQ
from .rootdata import RootVec, Weight, bilin, pair_root, positive_roots
from . import linalg
from . import uqminus
from .uqminus import FWordElem, HEIGHT_BOUND_DEFAULT
from .uqfull import TriangularElem, eval_highest_weight

__all__ = [
    "VJSlice",
    "VJVector",
    "vj_slice",
    "vj_act",
    "vj_form",
    "weyl_dim_oracle",
    "dims_csv",
]

_ZERO = RationalQ.zero()
_ONE = RationalQ.one()


class VJSlice:
    """The weight space of weight Lambda - beta, with reduction data.

    pivot_words is the chosen basis of the quotient; coords maps every word
    of weight beta to its coordinates on pivot_words modulo the relation
    span (Gram radical + words ending in f_j^{<h_j,Lambda>+1}).
    """

    __slots__ = ("datum", "J", "lam", "beta", "all_words", "pivot_words",
                 "rel_basis", "coords")

    def __init__(self, datum, J, lam, beta, height_bound):
        self.datum = datum
        self.J = J
        self.lam = lam
        self.beta = beta
        if not beta.in_Qplus():
            self.all_words = []
            self.pivot_words = []
            self.rel_basis = []
            self.coords = {}
            return
        letters = []
        for i in datum.I:
            letters.extend([i] * beta[i])
        words = sorted(set(itertools.permutations(letters)))
        self.all_words = words
        col = {w: c for c, w in enumerate(words)}
        n = len(words)
        rel_rows = []
        self.rel_basis = []
        wb = uqminus.weight_basis(datum, beta, height_bound)
        for ker in wb.kernel_basis:
            row = [_ZERO] * n
            for w, c in ker.terms.items():
                row[col[w]] = c
            rel_rows.append(row)
            self.rel_basis.append(ker)
        for j in J:
            m = lam[j]
            tail = (j,) * (m + 1)
            for w in words:
                if w[len(w) - m - 1:] == tail:
                    row = [_ZERO] * n
                    row[col[w]] = _ONE
                    rel_rows.append(row)
                    self.rel_basis.append(FWordElem.word(datum, w))
        rows, pivots = linalg.rref(rel_rows, n)
        pivset = set(pivots)
        basis_cols = [c for c in range(n) if c not in pivset]
        self.pivot_words = [words[c] for c in basis_cols]
        pos = {c: k for k, c in enumerate(basis_cols)}
        self.coords = {}
        for c, w in enumerate(words):
            if c in pivset:
                r = pivots.index(c)
                vec = [_ZERO] * len(basis_cols)
                for c2 in basis_cols:
                    if rows[r][c2]:
                        vec[pos[c2]] = -rows[r][c2]
                self.coords[w] = vec
            else:
                vec = [_ZERO] * len(basis_cols)
                vec[pos[c]] = _ONE
                self.coords[w] = vec

    @property
    def dim(self):
        return len(self.pivot_words)

    def reduce(self, u):
        """Class of an FWordElem of weight beta, as a VJVector."""
        vec = [_ZERO] * self.dim
        for w, c in u.terms.items():
            wc = self.coords[w]
            for k in range(self.dim):
                if wc[k]:
                    vec[k] = vec[k] + c * wc[k]
        return VJVector(self, vec)

    def zero(self):
        return VJVector(self, [_ZERO] * self.dim)

    def highest_vector(self):
        if self.beta.height() != 0:
            raise ValueError("highest vector lives in the height-0 slice")
        return self.reduce(FWordElem.unit(self.datum))

    def __repr__(self):
        return (f"VJSlice(J={sorted(self.J)}, beta={self.beta!r}, "
                f"dim={self.dim})")


class VJVector:
    """Element of a slice: coordinates over its pivot_words."""

    __slots__ = ("slice", "coeffs")

    def __init__(self, slc, coeffs):
        if len(coeffs) != slc.dim:
            raise ValueError("coordinate length must equal slice dimension")
        self.slice = slc
        self.coeffs = list(coeffs)

    def __add__(self, other):
        if other.slice is not self.slice:
            raise ValueError("vectors live in different slices")
        return VJVector(self.slice,
                        [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return VJVector(self.slice, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return VJVector(self.slice, [c * a for a in self.coeffs])

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, VJVector) and other.slice is self.slice
                and self.coeffs == other.coeffs)

    def as_fword(self):
        """The canonical word representative."""
        return FWordElem(self.slice.datum,
                         {w: c for w, c in zip(self.slice.pivot_words,
                                               self.coeffs) if c})

    def __repr__(self):
        return f"VJVector({self.as_fword()!r})"


_slice_cache = {}
_slice_lock = threading.Lock()


def vj_slice(datum, J, lam, beta, height_bound=HEIGHT_BOUND_DEFAULT):
    """The weight space of weight lam - beta; deterministic pivot basis."""
    J = frozenset(J)
    for j in J:
        if j not in datum.I:
            raise ValueError(f"{j} is not in the index set")
        if lam[j] < 0:
            raise ValueError(f"<h_{j}, Lambda> = {lam[j]} < 0")
    if beta.height() > height_bound:
        raise ValueError(f"height {beta.height()} exceeds bound {height_bound}")
    key = (datum, J, tuple(sorted(lam.pair.items())), beta.key())
    with _slice_lock:
        hit = _slice_cache.get(key)
    if hit is not None:
        return hit
    slc = VJSlice(datum, J, lam, beta, height_bound)
    with _slice_lock:
        return _slice_cache.setdefault(key, slc)


def vj_act(tag, i, v, height_bound=HEIGHT_BOUND_DEFAULT):
    """Apply a generator to a slice vector.

    tag "f": left multiplication by f_i (any i).
    tag "e": the module action of e_i, i in J (straighten, then evaluate
             t-monomials at the highest weight).
    tag "eq": the skew derivation _ir for i outside J.
    """
    slc = v.slice
    datum = slc.datum
    rep = v.as_fword()
    if tag == "f":
        tgt = vj_slice(datum, slc.J, slc.lam, slc.beta + datum.alpha(i),
                       height_bound)
        return tgt.reduce(FWordElem.gen(datum, i) * rep)
    tgt = vj_slice(datum, slc.J, slc.lam, slc.beta - datum.alpha(i),
                   height_bound)
    if tag == "e":
        if i not in slc.J:
            raise ValueError(f"e_{i} requires {i} in J")
        u = TriangularElem.e_gen(datum, i) * TriangularElem.from_fword(rep)
        return tgt.reduce(eval_highest_weight(u, slc.lam))
    if tag == "eq":
        if i in slc.J:
            raise ValueError(f"eq_{i} requires {i} outside J")
        return tgt.reduce(uqminus.ir_op(i, rep))
    raise ValueError(f"unknown generator tag {tag!r}")


def _e_any(i, v, height_bound):
    slc = v.slice
    return vj_act("e" if i in slc.J else "eq", i, v, height_bound)


def vj_form(x, y, height_bound=HEIGHT_BOUND_DEFAULT):
    """The contravariant form: (v,v) = 1 on the highest vector and
    (f_i x, y) = (x, e_i y), where e_i is the module e_i for i in J and
    the skew derivation for i outside J."""
    if x.slice is not y.slice:
        raise ValueError("vectors live in different slices")
    slc = x.slice
    if slc.beta.height() == 0:
        total = _ZERO
        for a, b in zip(x.coeffs, y.coeffs):
            total = total + a * b
        return total
    total = _ZERO
    datum = slc.datum
    # peel the first letter of each representative word of x
    by_letter = {}
    for w, c in x.as_fword().terms.items():
        by_letter.setdefault(w[0], {})[w[1:]] = c
    for i, rest in by_letter.items():
        sub = vj_slice(datum, slc.J, slc.lam, slc.beta - datum.alpha(i),
                       height_bound)
        xi = sub.reduce(FWordElem(datum, rest))
        total = total + vj_form(xi, _e_any(i, y, height_bound), height_bound)
    return total


# ---------------------------------------------------------------------------
# independent dimension oracle

_freud_cache = {}
_freud_lock = threading.Lock()


def weyl_dim_oracle(datum, lam, beta):
    """Multiplicity of the weight lam - beta in the irreducible
    highest-weight module of highest weight lam (finite type, lam dominant),
    by Freudenthal's recursion; an independent code path from vj_slice."""
    for i in datum.I:
        if lam[i] < 0:
            raise ValueError(f"<h_{i}, Lambda> = {lam[i]} < 0")
    if not beta.in_Qplus():
        return 0
    key = (datum, tuple(sorted(lam.pair.items())), beta.key())
    with _freud_lock:
        hit = _freud_cache.get(key)
    if hit is not None:
        return hit
    if beta.height() == 0:
        m = 1
    else:
        # 2(L+rho, beta) - (beta, beta), with (rho, alpha_i) = d_i
        den = (2 * (pair_root(lam, beta)
                    + sum(datum.d[i] * beta[i] for i in datum.I))
               - bilin(beta, beta))
        if den == 0:
            m = 0
        else:
            num = 0
            for alpha in positive_roots(datum):
                k = 1
                while (beta - k * alpha).in_Qplus():
                    mk = weyl_dim_oracle(datum, lam, beta - k * alpha)
                    if mk:
                        num += mk * (pair_root(lam, alpha)
                                     - bilin(beta, alpha)
                                     + k * bilin(alpha, alpha))
                    k += 1
            m = Fraction(2 * num, den)
            if m.denominator != 1:
                raise ArithmeticError("non-integer weight multiplicity")
            m = int(m)
    with _freud_lock:
        return _freud_cache.setdefault(key, m)


def dims_csv(datum, J, lam, max_height, height_bound=HEIGHT_BOUND_DEFAULT):
    """Dimension table of all slices of height <= max_height, as CSV text
    with columns beta_<i> per index and dim."""
    lines = [",".join([f"beta_{i}" for i in datum.I] + ["dim"])]
    for beta in _qplus_elems(datum, max_height):
        slc = vj_slice(datum, J, lam, beta, height_bound)
        lines.append(",".join([str(beta[i]) for i in datum.I]
                              + [str(slc.dim)]))
    return "\n".join(lines) + "\n"


def _qplus_elems(datum, max_height):
    idx = list(datum.I)

    def rec(pos, rem, co):
        if pos == len(idx):
            yield RootVec(datum, dict(co))
            return
        for v in range(rem + 1):
            co[idx[pos]] = v
            yield from rec(pos + 1, rem - v, co)
        co.pop(idx[pos], None)

    for h in range(max_height + 1):
        out = []
        for beta in rec(0, h, {}):
            if beta.height() == h:
                out.append(beta)
        yield from sorted(out, key=lambda b: b.key())
