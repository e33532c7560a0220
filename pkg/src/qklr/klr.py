"""Quiver Hecke algebras R(beta) over Q with exact normal forms.

Elements are linear combinations of e(nu) x^a tau_w with a fixed reduced
word per permutation (lexicographically smallest).  Multiplication pushes
polynomials through crossings with the dot-slide relations, contracts
repeated crossings with the quadratic relation, and re-expresses tau-words
along the fixed reduced words using the braid relation with its polynomial
correction term.  The polynomial representation on sum_nu Q[x_1..x_n]e(nu)
serves as an independent oracle; its defining-relation identities are an
acceptance gate, not an assumption.
"""

import itertools
import random
from fractions import Fraction
from .rootdata import RootVec, bilin

__all__ = [
    "Poly",
    "ScalarsChoice",
    "KLRElem",
    "PolyVector",
    "klr_mul",
    "poly_rep_apply",
    "relations_check",
    "oracle_check",
    "demazure",
    "demazure_w",
    "special_idempotent",
    "projisom_maps",
    "intertwiner",
    "a_element",
    "truncated_quotient",
    "r_composite_check",
    "words_of",
    "basis_terms",
    "term_degree",
    "phi_anti",
    "sigma_inv",
    "fixed_word",
    "avoids_321",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


# ---------------------------------------------------------------------------
# multivariate polynomials over Q

class Poly:
    """Polynomial in x_1..x_n; terms: exponent tuple -> Fraction."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        tt = {}
        if terms:
            for e, c in terms.items():
                if c:
                    tt[tuple(e)] = Fraction(c)
        self.terms = tt

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: Fraction(c)})

    @classmethod
    def x(cls, n, k, power=1):
        """x_k^power, k 1-based."""
        e = [0] * n
        e[k - 1] = power
        return cls(n, {tuple(e): _F1})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _F0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = Poly(self.n)
        r.terms = out
        return r

    def __neg__(self):
        r = Poly(self.n)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, _F0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = Poly(self.n)
        r.terms = out
        return r

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Poly(self.n)
        r = Poly(self.n)
        r.terms = {e: c * v for e, v in self.terms.items()}
        return r

    def apply_perm(self, p):
        """Substitute x_k -> x_{p(k)} (p a 0-based image tuple)."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for k, v in enumerate(e):
                ne[p[k]] = v
            ne = tuple(ne)
            s = out.get(ne, _F0) + c
            if s:
                out[ne] = s
            else:
                out.pop(ne, None)
        r = Poly(self.n)
        r.terms = out
        return r

    def swap(self, k):
        """Apply the transposition s_k (1-based)."""
        p = list(range(self.n))
        p[k - 1], p[k] = p[k], p[k - 1]
        return self.apply_perm(tuple(p))

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            mono = "".join(f"x{k + 1}^{v}" if v > 1 else f"x{k + 1}"
                           for k, v in enumerate(e) if v) or "1"
            parts.append(f"({self.terms[e]})*{mono}")
        return " + ".join(parts)


def demazure(k, f):
    """(s_k(f) - f)/(x_k - x_{k+1}); always an exact division."""
    num = f.swap(k) - f
    # divide by x_k - x_{k+1}: peel leading terms in x_k
    out = {}
    n = f.n
    rem = dict(num.terms)
    while rem:
        e = max(rem, key=lambda e: (e[k - 1], e))
        c = rem.pop(e)
        if e[k - 1] == 0:
            raise ArithmeticError("division by x_k - x_{k+1} is not exact")
        q = list(e)
        q[k - 1] -= 1
        q = tuple(q)
        out[q] = out.get(q, _F0) + c
        # subtract c * x^q * (x_k - x_{k+1}) minus its leading part
        e2 = list(q)
        e2[k] += 1
        e2 = tuple(e2)
        s = rem.get(e2, _F0) + c
        if s:
            rem[e2] = s
        else:
            rem.pop(e2, None)
    return Poly(n, out)


def demazure_w(word, f):
    """Composite of Demazure operators along a word, rightmost first."""
    for k in reversed(word):
        f = demazure(k, f)
    return f


# ---------------------------------------------------------------------------
# permutations (0-based image tuples)

def perm_id(n):
    return tuple(range(n))


def perm_mul(p, q):
    """(p q)(k) = p(q(k))."""
    return tuple(p[q[k]] for k in range(len(p)))


def perm_inv(p):
    out = [0] * len(p)
    for k, v in enumerate(p):
        out[v] = k
    return tuple(out)


def perm_from_word(n, word):
    p = perm_id(n)
    for k in word:
        s = list(range(n))
        s[k - 1], s[k] = s[k], s[k - 1]
        p = perm_mul(p, tuple(s))
    return p


def perm_len(p):
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def perm_act(p, nu):
    """(p nu)_k = nu_{p^{-1}(k)}."""
    pi = perm_inv(p)
    return tuple(nu[pi[k]] for k in range(len(nu)))


_fixed_word_cache = {}


def fixed_word(p):
    """The lexicographically smallest reduced word of p (1-based letters)."""
    hit = _fixed_word_cache.get(p)
    if hit is not None:
        return hit
    n = len(p)
    word = []
    q = p
    while perm_len(q):
        # the smallest k with a left descent: q^{-1}(k-1) > q^{-1}(k)
        qi = perm_inv(q)
        for k in range(n - 1):
            if qi[k] > qi[k + 1]:
                word.append(k + 1)
                s = list(range(n))
                s[k], s[k + 1] = s[k + 1], s[k]
                q = perm_mul(tuple(s), q)
                break
    word = tuple(word)
    _fixed_word_cache[p] = word
    return word


def avoids_321(p):
    """True iff there is no a < b < c with p(a) > p(b) > p(c); for such
    permutations the crossing word is independent of the reduced word."""
    n = len(p)
    for a in range(n):
        for b in range(a + 1, n):
            if p[a] > p[b]:
                for c in range(b + 1, n):
                    if p[b] > p[c]:
                        return False
    return True


def _word_reduced(n, word):
    return perm_len(perm_from_word(n, word)) == len(word)


def _word_moves(word):
    """Length-preserving rewrites: commutations and braid moves.
    Yields (new_word, braid_pos) with braid_pos the position of a braid
    move (None for commutations)."""
    w = word
    for p in range(len(w) - 1):
        a, b = w[p], w[p + 1]
        if abs(a - b) >= 2:
            yield w[:p] + (b, a) + w[p + 2:], None
    for p in range(len(w) - 2):
        a, b, c = w[p], w[p + 1], w[p + 2]
        if a == c and abs(a - b) == 1:
            yield w[:p] + (b, a, b) + w[p + 3:], p


def _find_path(word, target_pred):
    """BFS over word moves to the first word satisfying target_pred;
    returns the list of (word, move) steps from word."""
    if target_pred(word):
        return [(word, None)]
    seen = {word}
    queue = [[(word, None)]]
    while queue:
        path = queue.pop(0)
        cur = path[-1][0]
        for nxt, braid_pos in _word_moves(cur):
            if nxt in seen:
                continue
            npath = path + [(nxt, braid_pos)]
            if target_pred(nxt):
                return npath
            seen.add(nxt)
            queue.append(npath)
    raise AssertionError("word rewriting path not found")


# ---------------------------------------------------------------------------
# scalars

class ScalarsChoice:
    """The parameters t_{i,j} (nonzero) and s_{i,j}^{p,q} defining the
    polynomials Q_{i,j}(u,v) of the quadratic crossing relation."""

    def __init__(self, datum, t=None, s=None):
        self.datum = datum
        self.t = {}
        for i in datum.I:
            for j in datum.I:
                self.t[(i, j)] = Fraction((t or {}).get((i, j), 1))
        self.s = {k: Fraction(v) for k, v in (s or {}).items() if v}
        self._validate()

    def _validate(self):
        d = self.datum
        for i in d.I:
            if self.t[(i, i)] != 1:
                raise ValueError(f"t[{i},{i}] must be 1")
            for j in d.I:
                if not self.t[(i, j)]:
                    raise ValueError(f"t[{i},{j}] must be nonzero")
                if d.a[(i, j)] == 0 and i != j \
                        and self.t[(i, j)] != self.t[(j, i)]:
                    raise ValueError(f"t[{i},{j}] must equal t[{j},{i}] "
                                     "when a_ij = 0")
        for (i, j, p, q), v in self.s.items():
            ai = bilin(d.alpha(i), d.alpha(i))
            aj = bilin(d.alpha(j), d.alpha(j))
            aij = bilin(d.alpha(i), d.alpha(j))
            if p <= 0 or q <= 0 or p * ai + q * aj != 2 * aij:
                raise ValueError(f"invalid s index {(i, j, p, q)}")
            if self.s.get((j, i, q, p), _F0) != v:
                raise ValueError("s symmetry fails at "
                                 f"{(i, j, p, q)}")

    @classmethod
    def default(cls, datum):
        return cls(datum)

    def q_poly(self, i, j, a, b, n):
        """Q_{i,j}(x_a, x_b) as a Poly in n variables (a, b 1-based)."""
        d = self.datum
        if i == j:
            return Poly(n)
        if d.a[(i, j)] == 0:
            return Poly.const(n, self.t[(i, j)])
        out = Poly.x(n, a, -d.a[(i, j)]).scale(self.t[(i, j)]) \
            + Poly.x(n, b, -d.a[(j, i)]).scale(self.t[(j, i)])
        for (ii, jj, p, q), v in self.s.items():
            if ii == i and jj == j:
                out = out + (Poly.x(n, a, p) * Poly.x(n, b, q)).scale(v)
        return out

    def qbar_poly(self, i, ip, ipp, k, n):
        """(Q_{i,i'}(x_k, x_{k+1}) - Q_{i,i'}(x_{k+2}, x_{k+1}))
        / (x_k - x_{k+2}) when i = i'' != i', else 0."""
        if i != ipp or i == ip:
            return Poly(n)
        num = self.q_poly(i, ip, k, k + 1, n) \
            - self.q_poly(i, ip, k + 2, k + 1, n)
        # exact division by x_k - x_{k+2}
        out = {}
        rem = dict(num.terms)
        while rem:
            e = max(rem, key=lambda e: (e[k - 1], e))
            c = rem.pop(e)
            if e[k - 1] == 0:
                raise ArithmeticError("inexact division in qbar")
            q = list(e)
            q[k - 1] -= 1
            q = tuple(q)
            out[q] = out.get(q, _F0) + c
            e2 = list(q)
            e2[k + 1] += 1
            e2 = tuple(e2)
            s = rem.get(e2, _F0) + c
            if s:
                rem[e2] = s
            else:
                rem.pop(e2, None)
        return Poly(n, out)

    def __eq__(self, other):
        return (isinstance(other, ScalarsChoice)
                and self.datum == other.datum and self.t == other.t
                and self.s == other.s)

    def __hash__(self):
        return hash((self.datum, tuple(sorted(self.t.items())),
                     tuple(sorted(self.s.items()))))


# ---------------------------------------------------------------------------
# words of a weight

def words_of(datum, beta):
    """I^beta: all arrangements of the letter multiset of beta."""
    letters = []
    for i in datum.I:
        letters.extend([i] * beta[i])
    return sorted(set(itertools.permutations(letters)))


def word_root(datum, nu):
    co = {}
    for i in nu:
        co[i] = co.get(i, 0) + 1
    return RootVec(datum, co)


def term_degree(datum, nu, w, a):
    """Degree of e(nu) x^a tau_w (nu the left idempotent)."""
    deg = 0
    for k, e in enumerate(a):
        deg += e * bilin(datum.alpha(nu[k]), datum.alpha(nu[k]))
    # right idempotent mu = w^{-1} nu; crossings count inversions of w
    mu = perm_act(perm_inv(w), nu)
    n = len(nu)
    for x in range(n):
        for y in range(x + 1, n):
            if w[x] > w[y]:
                deg -= bilin(datum.alpha(mu[x]), datum.alpha(mu[y]))
    return deg


# ---------------------------------------------------------------------------
# elements and the rewriting engine

class KLRElem:
    """Linear combination of e(nu) x^a tau_w; terms: (nu, w, a) -> Fraction.

    nu is the left idempotent word, w a permutation (0-based image tuple)
    carried with its fixed reduced word, a the dot exponents."""

    __slots__ = ("datum", "scal", "beta", "n", "terms")

    def __init__(self, datum, scal, beta, terms=None):
        self.datum = datum
        self.scal = scal
        self.beta = beta
        self.n = beta.height()
        tt = {}
        if terms:
            for (nu, w, a), c in terms.items():
                c = Fraction(c)
                if c:
                    tt[(tuple(nu), tuple(w), tuple(a))] = c
        self.terms = tt

    @classmethod
    def zero(cls, datum, scal, beta):
        return cls(datum, scal, beta)

    @classmethod
    def idem(cls, datum, scal, nu):
        nu = tuple(nu)
        beta = word_root(datum, nu)
        n = len(nu)
        return cls(datum, scal, beta,
                   {(nu, perm_id(n), (0,) * n): _F1})

    @classmethod
    def one(cls, datum, scal, beta):
        terms = {}
        n = beta.height()
        for nu in words_of(datum, beta):
            terms[(nu, perm_id(n), (0,) * n)] = _F1
        return cls(datum, scal, beta, terms)

    @classmethod
    def x_gen(cls, datum, scal, beta, k, power=1):
        terms = {}
        n = beta.height()
        a = [0] * n
        a[k - 1] = power
        a = tuple(a)
        for nu in words_of(datum, beta):
            terms[(nu, perm_id(n), a)] = _F1
        return cls(datum, scal, beta, terms)

    @classmethod
    def tau_gen(cls, datum, scal, beta, k):
        terms = {}
        n = beta.height()
        s = list(range(n))
        s[k - 1], s[k] = s[k], s[k - 1]
        s = tuple(s)
        for nu in words_of(datum, beta):
            terms[(perm_act(s, nu), s, (0,) * n)] = _F1
        return cls(datum, scal, beta, terms)

    @classmethod
    def poly_elem(cls, datum, scal, nu, poly):
        nu = tuple(nu)
        beta = word_root(datum, nu)
        n = len(nu)
        return cls(datum, scal, beta,
                   {(nu, perm_id(n), e): c for e, c in poly.terms.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t, _F0) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        r = KLRElem(self.datum, self.scal, self.beta)
        r.terms = out
        return r

    def __neg__(self):
        r = KLRElem(self.datum, self.scal, self.beta)
        r.terms = {t: -c for t, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        r = KLRElem(self.datum, self.scal, self.beta)
        if c:
            r.terms = {t: c * v for t, v in self.terms.items()}
        return r

    def __mul__(self, other):
        return klr_mul(self, other)

    def _check(self, other):
        if self.datum != other.datum or self.beta != other.beta \
                or self.scal != other.scal:
            raise ValueError("mismatched weight or scalars")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, KLRElem) and self.datum == other.datum
                and self.beta == other.beta and self.terms == other.terms)

    def left_project(self, nu):
        nu = tuple(nu)
        r = KLRElem(self.datum, self.scal, self.beta)
        r.terms = {t: c for t, c in self.terms.items() if t[0] == nu}
        return r

    def right_project(self, nu):
        nu = tuple(nu)
        r = KLRElem(self.datum, self.scal, self.beta)
        r.terms = {t: c for t, c in self.terms.items()
                   if perm_act(perm_inv(t[1]), t[0]) == nu}
        return r

    def degrees(self):
        return sorted({term_degree(self.datum, nu, w, a)
                       for (nu, w, a) in self.terms})

    def to_json(self):
        return {"beta": list(self.beta.key()),
                "terms": [{"nu": list(nu), "w": list(fixed_word(w)),
                           "a": list(a), "coeff": str(c)}
                          for (nu, w, a), c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, datum, scal, data):
        beta = RootVec(datum, dict(zip(datum.I, data["beta"])))
        n = beta.height()
        terms = {}
        for t in data["terms"]:
            w = perm_from_word(n, t["w"])
            terms[(tuple(t["nu"]), w, tuple(t["a"]))] = Fraction(t["coeff"])
        return cls(datum, scal, beta, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (nu, w, a) in sorted(self.terms):
            bits = ["e" + "".join(map(str, nu))]
            bits += [f"x{k + 1}^{v}" if v > 1 else f"x{k + 1}"
                     for k, v in enumerate(a) if v]
            word = fixed_word(w)
            if word:
                bits.append("t" + "".join(map(str, word)))
            parts.append(f"({self.terms[(nu, w, a)]})*" + "".join(bits))
        return " + ".join(parts)


# The engine works on dictionaries (nu, w, a) -> Fraction with a fixed
# right idempotent per term (recoverable as w^{-1} nu).

def _nf_add(out, key, c):
    s = out.get(key, _F0) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def _lmul_poly(scal, nf, poly):
    out = {}
    for (nu, w, a), c in nf.items():
        for e, pc in poly.terms.items():
            na = tuple(x + y for x, y in zip(a, e))
            _nf_add(out, (nu, w, na), c * pc)
    return out


def _lmul_x(scal, nf, k, power=1):
    out = {}
    for (nu, w, a), c in nf.items():
        na = list(a)
        na[k - 1] += power
        _nf_add(out, (nu, w, tuple(na)), c)
    return out


_tau_compose_cache = {}


def _lmul_tau(datum, scal, nf, k):
    """Left multiplication by tau_k of a normal-form dict."""
    out = {}
    n = None
    for (nu, w, a), c in nf.items():
        n = len(nu)
        f = Poly(n, {a: _F1})
        sf = f.swap(k)
        # tau_k f e(nu-side): s_k(f) tau_k + delta ∂_k(f)
        if nu[k - 1] == nu[k]:
            df = demazure(k, f)
            for e, pc in df.terms.items():
                _nf_add(out, (nu, w, e), c * pc)
        comp = _tau_compose(datum, scal, k, w,
                            perm_act(perm_inv(w), nu))
        for (w2, a2), c2 in comp.items():
            nu2 = perm_act(w2, perm_act(perm_inv(w), nu))
            g = Poly(n, {a2: _F1}) * sf
            for e, pc in g.terms.items():
                _nf_add(out, (nu2, w2, e), c * c2 * pc)
    return out


def _tau_compose(datum, scal, k, w, nu_right):
    """Normal form of tau_k tau_w e(nu_right) as dict (w', a') -> coeff."""
    key = (datum, scal, k, w, nu_right)
    hit = _tau_compose_cache.get(key)
    if hit is None:
        word = (k,) + fixed_word(w)
        hit = _nf_tau_word(datum, scal, word, nu_right)
        _tau_compose_cache[key] = hit
    return hit


_tau_word_cache = {}


def _nf_tau_word(datum, scal, word, nu_right):
    """Normal form of tau_{word} e(nu_right): dict (w, a) -> coeff."""
    key = (datum, scal, word, nu_right)
    hit = _tau_word_cache.get(key)
    if hit is not None:
        return hit
    n = len(nu_right)
    p = perm_from_word(n, word)
    if perm_len(p) == len(word):
        fixed = fixed_word(p)
        if word == fixed:
            out = {(p, (0,) * n): _F1}
        else:
            out = _rewrite_along_path(
                datum, scal, word, nu_right,
                _find_path(word, lambda v: v == fixed))
    else:
        # bring an equal adjacent pair together, then contract it
        path = _find_path(
            word, lambda v: any(v[q] == v[q + 1] for q in range(len(v) - 1)))
        out = _rewrite_along_path(datum, scal, word, nu_right, path)
    _tau_word_cache[key] = out
    return out


def _rewrite_along_path(datum, scal, word, nu_right, path):
    """Accumulate braid-move corrections along a rewrite path, then
    dispatch the final word (contracting an equal adjacent pair if the
    path was searched for one)."""
    n = len(nu_right)
    total = {}
    cur = word
    for step, braid_pos in path[1:]:
        if braid_pos is not None:
            # cur = pre + (b,a,b) + suf -> step = pre + (a,b,a) + suf
            # with correction tau_pre Qbar tau_suf, sign depending on
            # the direction: (t_{k+1}t_k t_{k+1} - t_k t_{k+1} t_k) e = Qbar e
            b = cur[braid_pos]
            a = cur[braid_pos + 1]
            pre = cur[:braid_pos]
            suf = cur[braid_pos + 3:]
            k = min(a, b)
            sign = 1 if b == k + 1 else -1
            rho = perm_act(perm_from_word(n, suf), nu_right)
            qbar = scal.qbar_poly(rho[k - 1], rho[k], rho[k + 1], k, n)
            if not qbar.is_zero():
                corr = _nf_tau_word(datum, scal, suf, nu_right)
                corr = _lmul_poly(scal, _as_full(corr, suf, nu_right, n),
                                  qbar.scale(sign))
                for letter in reversed(pre):
                    corr = _lmul_tau(datum, scal, corr, letter)
                for (nu, w2, a2), c in corr.items():
                    _nf_add(total, (w2, a2), c)
        cur = step
    # dispatch the final word
    p = perm_from_word(n, cur)
    if perm_len(p) == len(cur):
        out = {(p, (0,) * n): _F1} if cur == fixed_word(p) \
            else _nf_tau_word(datum, scal, cur, nu_right)
    else:
        q = next(q for q in range(len(cur) - 1) if cur[q] == cur[q + 1])
        k = cur[q]
        pre, suf = cur[:q], cur[q + 2:]
        rho = perm_act(perm_from_word(n, suf), nu_right)
        out = {}
        if rho[k - 1] != rho[k]:
            qq = scal.q_poly(rho[k - 1], rho[k], k, k + 1, n)
            if not qq.is_zero():
                body = _nf_tau_word(datum, scal, suf, nu_right)
                body = _lmul_poly(scal, _as_full(body, suf, nu_right, n), qq)
                for letter in reversed(pre):
                    body = _lmul_tau(datum, scal, body, letter)
                for (nu, w2, a2), c in body.items():
                    _nf_add(out, (w2, a2), c)
        # rho_k = rho_{k+1}: tau_k^2 e = Q_{ii} e = 0
    for kk, c in out.items():
        _nf_add(total, kk, c)
    return total


def _as_full(nf_wa, word, nu_right, n):
    """Lift a (w, a) -> c dict over a fixed right idempotent to the full
    (nu, w, a) -> c form."""
    out = {}
    for (w, a), c in nf_wa.items():
        out[(perm_act(w, nu_right), w, a)] = c
    return out


def klr_mul(x, y):
    """Product in normal form."""
    x._check(y)
    datum, scal = x.datum, x.scal
    out = {}
    for (mu, v, b), cy in y.terms.items():
        # collect the terms of x whose right idempotent matches mu
        nf = {}
        for (nu, w, a), cx in x.terms.items():
            if perm_act(perm_inv(w), nu) == mu:
                nf[(nu, w, a)] = cx * cy
        if not nf:
            continue
        # left-multiply the y-term by each matching x-term's symbols
        base = {(mu, v, b): _F1}
        for (nu, w, a), c in nf.items():
            cur = dict(base)
            for letter in reversed(fixed_word(w)):
                cur = _lmul_tau(datum, scal, cur, letter)
            for k, e in enumerate(a):
                if e:
                    cur = _lmul_x(scal, cur, k + 1, e)
            for t, c2 in cur.items():
                _nf_add(out, t, c * c2)
    r = KLRElem(datum, scal, x.beta)
    r.terms = out
    return r


# ---------------------------------------------------------------------------
# the polynomial representation

class PolyVector:
    """Element of sum_nu Q[x_1..x_n] e(nu): dict nu -> Poly."""

    __slots__ = ("datum", "beta", "n", "comps")

    def __init__(self, datum, beta, comps=None):
        self.datum = datum
        self.beta = beta
        self.n = beta.height()
        self.comps = {}
        if comps:
            for nu, f in comps.items():
                if not f.is_zero():
                    self.comps[tuple(nu)] = f

    @classmethod
    def basis(cls, datum, nu, poly=None):
        nu = tuple(nu)
        beta = word_root(datum, nu)
        f = poly if poly is not None else Poly.const(len(nu), 1)
        return cls(datum, beta, {nu: f})

    def __add__(self, other):
        out = dict(self.comps)
        for nu, f in other.comps.items():
            g = out.get(nu)
            s = f if g is None else g + f
            if s.is_zero():
                out.pop(nu, None)
            else:
                out[nu] = s
        return PolyVector(self.datum, self.beta, out)

    def __sub__(self, other):
        return self + PolyVector(other.datum, other.beta,
                                 {nu: -f for nu, f in other.comps.items()})

    def is_zero(self):
        return not self.comps

    def __eq__(self, other):
        return (isinstance(other, PolyVector) and self.beta == other.beta
                and self.comps == other.comps)

    def __repr__(self):
        return "PolyVector(" + ", ".join(
            f"{''.join(map(str, nu))}: {f!r}"
            for nu, f in sorted(self.comps.items())) + ")"


def _tau_act(datum, scal, k, nu, f):
    """Action of tau_k on f e(nu): returns (target nu, polynomial)."""
    if nu[k - 1] == nu[k]:
        return nu, demazure(k, f)
    tgt = nu[:k - 1] + (nu[k], nu[k - 1]) + nu[k + 1:]
    g = f.swap(k)
    if nu[k - 1] > nu[k]:
        g = g * scal.q_poly(nu[k - 1], nu[k], k + 1, k, f.n)
    return tgt, g


def poly_rep_apply(a, v):
    """Apply a KLRElem to a PolyVector."""
    if a.beta != v.beta:
        raise ValueError("mismatched weight")
    out = {}
    for (nu, w, xa), c in a.terms.items():
        mu = perm_act(perm_inv(w), nu)
        f = v.comps.get(mu)
        if f is None:
            continue
        cur_nu, cur = mu, f
        for k in reversed(fixed_word(w)):
            cur_nu, cur = _tau_act(a.datum, a.scal, k, cur_nu, cur)
            if cur.is_zero():
                break
        if cur.is_zero():
            continue
        if cur_nu != nu:
            raise AssertionError("crossing routing mismatch")
        cur = cur * Poly(a.n, {xa: _F1})
        g = out.get(nu)
        s = cur.scale(c) if g is None else g + cur.scale(c)
        if s.is_zero():
            out.pop(nu, None)
        else:
            out[nu] = s
    return PolyVector(a.datum, a.beta, out)


def relations_check(datum, scal, beta, samples=50, seed=0):
    """All defining-relation families as operator identities in the
    polynomial representation, each on `samples` random vectors.

    Generators act one normal-form atom at a time, so no rewriting is
    involved; this certifies the representation formulas independently
    of the straightening engine.  Returns a report dict; passes iff
    report["failures"] is empty.
    """
    rng = random.Random(seed)
    n = beta.height()
    words = words_of(datum, beta)

    def rand_vec():
        return _random_vector(datum, beta, rng)

    def E(nu):
        return KLRElem.idem(datum, scal, nu)

    def X(k):
        return KLRElem.x_gen(datum, scal, beta, k)

    def T(k):
        return KLRElem.tau_gen(datum, scal, beta, k)

    def chain(ops, v):
        for a in reversed(ops):
            v = poly_rep_apply(a, v)
        return v

    checks = 0
    failures = []

    def expect(name, got, want):
        nonlocal checks
        checks += 1
        if got != want:
            failures.append((name, got, want))

    one = KLRElem.one(datum, scal, beta)
    for _ in range(samples):
        v = rand_vec()
        nu = words[rng.randrange(len(words))]
        mu = words[rng.randrange(len(words))]
        pnu = chain([E(nu)], v)
        expect("idempotent", chain([E(nu), E(mu)], v),
               pnu if nu == mu else PolyVector(datum, beta))
        expect("resolution of identity", chain([one], v), v)
        k = rng.randrange(1, n + 1)
        l = rng.randrange(1, n + 1)
        expect("x commute", chain([X(k), X(l)], v), chain([X(l), X(k)], v))
        expect("x through e", chain([X(k), E(nu)], v),
               chain([E(nu), X(k)], v))
        if n < 2:
            continue
        k = rng.randrange(1, n)
        snu = nu[:k - 1] + (nu[k], nu[k - 1]) + nu[k + 1:]
        expect("tau through e", chain([T(k), E(nu)], v),
               chain([E(snu), T(k)], v))
        delta = nu[k - 1] == nu[k]
        expect("dot slide right",
               chain([T(k), X(k + 1)], pnu) - chain([X(k)], chain([T(k)],
                                                                  pnu)),
               pnu if delta else PolyVector(datum, beta))
        expect("dot slide left",
               chain([X(k + 1), T(k)], pnu) - chain([T(k)], chain([X(k)],
                                                                  pnu)),
               pnu if delta else PolyVector(datum, beta))
        if n > 2:
            l = rng.choice([m for m in range(1, n + 1) if m not in (k,
                                                                    k + 1)])
            expect("dot slide distant", chain([T(k), X(l)], v),
                   chain([X(l), T(k)], v))
        qq = KLRElem.poly_elem(datum, scal, nu,
                               scal.q_poly(nu[k - 1], nu[k], k, k + 1, n))
        expect("quadratic", chain([T(k), T(k)], pnu), chain([qq], v))
        if n < 3:
            continue
        k = rng.randrange(1, n - 1)
        lhs = chain([T(k + 1), T(k), T(k + 1)], pnu) \
            - chain([T(k), T(k + 1), T(k)], pnu)
        bar = KLRElem.poly_elem(
            datum, scal, nu,
            scal.qbar_poly(nu[k - 1], nu[k], nu[k + 1], k, n))
        expect("cubic", lhs, chain([bar], v))
        if n > 3:
            expect("tau commute distant", chain([T(1), T(3)], v),
                   chain([T(3), T(1)], v))
    return {"beta": beta.key(), "samples": samples, "checks": checks,
            "failures": failures}


def _random_vector(datum, beta, rng):
    n = beta.height()
    comps = {}
    for nu in words_of(datum, beta):
        f = Poly(n)
        for _ in range(3):
            e = tuple(rng.randrange(3) for _ in range(n))
            f = f + Poly(n, {e: Fraction(rng.randrange(-4, 5))})
        if not f.is_zero():
            comps[nu] = f
    return PolyVector(datum, beta, comps)


def oracle_check(datum, scal, beta, products=50, seed=0, vectors=3):
    """Normal forms against the polynomial representation: random words in
    the generators, multiplied out by the straightening engine, must act
    exactly as the generator-by-generator composition."""
    rng = random.Random(seed)
    n = beta.height()
    words = words_of(datum, beta)
    gens = [KLRElem.idem(datum, scal, nu) for nu in words]
    gens += [KLRElem.x_gen(datum, scal, beta, k) for k in range(1, n + 1)]
    gens += [KLRElem.tau_gen(datum, scal, beta, k) for k in range(1, n)]
    checks = 0
    failures = []
    for case in range(products):
        seq = [gens[rng.randrange(len(gens))]
               for _ in range(rng.randrange(2, 6))]
        prod = seq[0]
        for g in seq[1:]:
            prod = klr_mul(prod, g)
        for _ in range(vectors):
            v = _random_vector(datum, beta, rng)
            direct = v
            for g in reversed(seq):
                direct = poly_rep_apply(g, direct)
            checks += 1
            if poly_rep_apply(prod, v) != direct:
                failures.append(("product vs composition", case))
    return {"beta": beta.key(), "products": products, "checks": checks,
            "failures": failures}


# ---------------------------------------------------------------------------
# special elements

def _bold_x(datum, scal, i, n, primed=False):
    beta = RootVec(datum, {i: n})
    terms = {}
    if primed:
        a = tuple(n - 1 - k for k in range(n))
    else:
        a = tuple(range(n))
    nu = (i,) * n
    terms[(nu, perm_id(n), a)] = _F1
    return KLRElem(datum, scal, beta, terms)


def tau_longest(datum, scal, i, n):
    beta = RootVec(datum, {i: n})
    w0 = tuple(reversed(range(n)))
    return KLRElem(datum, scal, beta, {((i,) * n, w0, (0,) * n): _F1})


def special_idempotent(datum, scal, kind, n, i):
    """b_{+,n}, b_{-,n}, b'_{+,n}, b'_{-,n} in R(n alpha_i)."""
    xx = _bold_x(datum, scal, i, n, primed="'" in kind)
    tw = tau_longest(datum, scal, i, n)
    sign = Fraction((-1) ** (n * (n - 1) // 2)) if "'" in kind else _F1
    if kind in ("b+", "b'+"):
        return klr_mul(xx, tw).scale(sign)
    if kind in ("b-", "b'-"):
        return klr_mul(tw, xx).scale(sign)
    raise ValueError(f"unknown idempotent kind {kind!r}")


def phi_anti(a):
    """The anti-involution fixing e(nu), x_k, tau_k."""
    out = {}
    datum, scal = a.datum, a.scal
    for (nu, w, xa), c in a.terms.items():
        # phi(e(nu) x^a tau_{i_1..i_l}) = tau_{i_l..i_1} x^a e(nu)
        cur = {(nu, perm_id(a.n), xa): _F1}
        for letter in fixed_word(w):
            cur = _lmul_tau(datum, scal, cur, letter)
        for t, c2 in cur.items():
            _nf_add(out, t, c * c2)
    r = KLRElem(datum, scal, a.beta)
    r.terms = out
    return r


def sigma_inv(a):
    """The involution nu -> reversed nu, x_k -> x_{n+1-k},
    tau_k e(nu) -> (-1)^{delta} tau_{n-k} e(reversed nu)."""
    datum, scal, n = a.datum, a.scal, a.n
    out = {}
    for (nu, w, xa), c in a.terms.items():
        mu = perm_act(perm_inv(w), nu)
        rmu = tuple(reversed(mu))
        cur = {(rmu, perm_id(n), (0,) * n): _F1}
        sign = 1
        rho = mu
        for k in reversed(fixed_word(w)):
            if rho[k - 1] == rho[k]:
                sign = -sign
            cur = _lmul_tau(datum, scal, cur, n - k)
            rho = rho[:k - 1] + (rho[k], rho[k - 1]) + rho[k + 1:]
        cur = _lmul_poly(scal, cur,
                         Poly(n, {tuple(reversed(xa)): _F1}))
        for t, c2 in cur.items():
            _nf_add(out, t, c * c2 * sign)
    r = KLRElem(datum, scal, a.beta)
    r.terms = out
    return r


def intertwiner(datum, scal, kind, k, beta):
    """The intertwiners: phi_k = tau_k e(nu) on mismatched colors and
    ((x_{k+1}-x_k) tau_k - 1) e(nu) on matched ones; g_k replaces the
    matched-color part by (x_{k+1}-x_k-(x_{k+1}-x_k)^2 tau_k) e(nu)."""
    n = beta.height()
    if not 1 <= k <= n - 1:
        raise ValueError(f"k = {k} out of range for height {n}")
    tau = KLRElem.tau_gen(datum, scal, beta, k)
    total = KLRElem.zero(datum, scal, beta)
    for nu in words_of(datum, beta):
        e = KLRElem.idem(datum, scal, nu)
        if nu[k - 1] != nu[k]:
            total = total + klr_mul(tau, e)
            continue
        d = KLRElem.x_gen(datum, scal, beta, k + 1) \
            - KLRElem.x_gen(datum, scal, beta, k)
        if kind == "phi":
            total = total + klr_mul(klr_mul(d, tau) - KLRElem.one(
                datum, scal, beta), e)
        elif kind == "g":
            total = total + klr_mul(d - klr_mul(klr_mul(d, d), tau), e)
        else:
            raise ValueError(f"unknown intertwiner kind {kind!r}")
    return total


def a_element(datum, scal, j, beta, level=0):
    """x_1^level * sum_nu e(j, nu) prod_{nu_k != j} Q_{j,nu_k}(x_1, x_{k+1})
    in R(alpha_j + beta)."""
    total_beta = beta + datum.alpha(j)
    n = total_beta.height()
    out = KLRElem.zero(datum, scal, total_beta)
    for nu in words_of(datum, beta):
        poly = Poly.x(n, 1, level) if level else Poly.const(n, 1)
        for k, col in enumerate(nu):
            if col != j:
                poly = poly * scal.q_poly(j, col, 1, k + 2, n)
        out = out + KLRElem.poly_elem(datum, scal, (j,) + nu, poly)
    return out


def projisom_maps(datum, scal, n, i, D=None):
    """Left multiplication by x_2 x_3^2 ... x_n^{n-1} maps tau_{w_n}-image
    elements to b_{+,n}-image elements, and left multiplication by
    tau_{w_n} maps back; the two composites are identities.  Verified on a
    spanning set of each right module per degree up to D.

    Returns a report dict; report["failures"] is empty iff all pass.
    """
    if n > 4:
        raise ValueError("n must be <= 4")
    beta = RootVec(datum, {i: n})
    di = datum.d[i]
    dmin = min_tau_degree(datum, beta)
    if D is None:
        D = 2 * di * n + 2 if n <= 3 else dmin + 4 * di
    xx = _bold_x(datum, scal, i, n)
    tw = tau_longest(datum, scal, i, n)
    bp = klr_mul(xx, tw)
    bpm = special_idempotent(datum, scal, "b'-", n, i)
    # element certificates: the composites are left multiplications, so
    # identity on the whole right module is equivalent to fixing the
    # generating idempotent, and the image lands in the target module iff
    # its generator is fixed by the target idempotent
    xb = klr_mul(xx, bpm)
    tb = klr_mul(tw, bp)
    element_ok = (klr_mul(tw, xb) == bpm and klr_mul(bp, xb) == xb
                  and klr_mul(xx, tb) == bp and klr_mul(bpm, tb) == tb)
    cmax = D // (2 * di) - dmin // (2 * di)
    perms = list(itertools.permutations(range(n)))
    checks = 0
    failures = []
    for b, name, back in (
            (bpm, "tau.x on b'- module",
             lambda v: klr_mul(tw, klr_mul(xx, v))),
            (bp, "x.tau on b+ module",
             lambda v: klr_mul(xx, klr_mul(tw, v)))):
        # the right module bR is spanned by b x^c tau_w; close under
        # right x-multiplication first, then hit each monomial with the
        # tau-words, keeping one verification per independent vector
        rows = {}
        layer = {(0,) * n: b}
        for size in range(cmax + 1):
            for c, bx in layer.items():
                for w in perms:
                    d = 2 * di * (size - _inv_count(w))
                    if d < dmin or d > D:
                        continue
                    v = bx if w == perms[0] else klr_mul(
                        bx, KLRElem(datum, scal, beta,
                                    {((i,) * n, w, (0,) * n): _F1}))
                    if v.is_zero():
                        continue
                    if not _gauss_insert(rows.setdefault(d, {}),
                                         dict(v.terms)):
                        continue
                    checks += 1
                    if back(v) != v:
                        failures.append((name, d, c, w))
            if size == cmax:
                break
            nxt = {}
            for c, bx in layer.items():
                for k in range(1, n + 1):
                    c2 = c[:k - 1] + (c[k - 1] + 1,) + c[k:]
                    if c2 not in nxt:
                        nxt[c2] = klr_mul(
                            bx, KLRElem.x_gen(datum, scal, beta, k))
            layer = nxt
    return {"n": n, "i": i, "max_degree": D, "checks": checks,
            "element_identities": element_ok, "failures": failures}


def _inv_count(w):
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n)
               if w[a] > w[b])


def r_composite_check(datum, scal, j, beta, D=12):
    """The two-sided R-matrix composite acts as multiplication by the
    central-form element: verify, for every word nu of weight beta,

        tau_1 .. tau_n g_n .. g_1 e(j,nu) = a_element(j,beta,0) e(j,nu)

    modulo the span of b1 e(j,j,*) b2 with b2 in the subalgebra fixing the
    first strand (the defining kernel of the level-0 truncation at j),
    degree by degree up to D.  Returns a report dict.
    """
    if beta.height() > 2:
        raise ValueError("height must be <= 2")
    if D > 24:
        raise ValueError("degree bound must be <= 24")
    n = beta.height()
    total = beta + datum.alpha(j)
    N = n + 1
    lhs = KLRElem.one(datum, scal, total)
    for k in range(1, n + 1):
        lhs = klr_mul(lhs, intertwiner(datum, scal, "g", n + 1 - k, total))
    for k in range(n, 0, -1):
        lhs = klr_mul(KLRElem.tau_gen(datum, scal, total, k), lhs)
    diff = lhs - a_element(datum, scal, j, beta, 0)
    dmin = min_tau_degree(datum, total)
    checks = 0
    failures = []
    for nu in words_of(datum, beta):
        col = klr_mul(diff, KLRElem.idem(datum, scal, (j,) + nu))
        bydeg = {}
        for (nu1, w1, a1), c in col.terms.items():
            bydeg.setdefault(term_degree(datum, nu1, w1, a1),
                             {})[(nu1, w1, a1)] = c
        for d, comp in sorted(bydeg.items()):
            checks += 1
            if d > D:
                failures.append((nu, d, "component above degree bound"))
                continue
            rows = {}
            for w2 in itertools.permutations(range(n)):
                mid = perm_act(w2, nu)
                if not mid or mid[0] != j:
                    continue
                lam = (j,) + mid
                w2e = (0,) + tuple(v + 1 for v in w2)
                wts = [bilin(datum.alpha(c2), datum.alpha(c2))
                       for c2 in lam[1:]]
                base = term_degree(datum, lam, w2e, (0,) * N)
                for need in range(0, D - base - dmin + 1, 2):
                    for a2 in _weighted_exps(wts, need):
                        d2 = base + need
                        b2 = KLRElem(datum, scal, total,
                                     {(lam, w2e, (0,) + a2): _F1})
                        for t1 in basis_terms(datum, total, d - d2,
                                              right_nu=lam):
                            b1 = KLRElem(datum, scal, total, {t1: _F1})
                            prod = klr_mul(b1, b2)
                            if prod.terms:
                                _gauss_insert(rows, dict(prod.terms))
            if _gauss_insert(rows, dict(comp)):
                failures.append((nu, d, "residual outside the kernel span"))
    return {"j": j, "beta": beta.key(), "max_degree": D,
            "checks": checks, "failures": failures}


def _gauss_insert(rows, terms):
    """Insert a term-dict row into an echelon family keyed by leading term;
    returns the reduced row (empty if dependent)."""
    while terms:
        lead = max(terms)
        piv = rows.get(lead)
        if piv is None:
            c = terms[lead]
            terms = {t: v / c for t, v in terms.items()}
            rows[lead] = terms
            return terms
        c = terms[lead]
        for t, v in piv.items():
            s = terms.get(t, _F0) - c * v
            if s:
                terms[t] = s
            else:
                terms.pop(t, None)
    return {}


# ---------------------------------------------------------------------------
# graded pieces and truncations

def basis_terms(datum, beta, degree, left_nu=None, right_nu=None):
    """All normal-form triples (nu, w, a) of the given degree."""
    n = beta.height()
    out = []
    words = words_of(datum, beta) if left_nu is None else [tuple(left_nu)]
    for nu in words:
        for w in itertools.permutations(range(n)):
            mu = perm_act(perm_inv(w), nu)
            if right_nu is not None and mu != tuple(right_nu):
                continue
            base = term_degree(datum, nu, w, (0,) * n)
            need = degree - base
            if need < 0 or need % 2:
                continue
            weights = [bilin(datum.alpha(nu[k]), datum.alpha(nu[k]))
                       for k in range(n)]
            for a in _weighted_exps(weights, need):
                out.append((nu, w, a))
    return out


def _weighted_exps(weights, total):
    if not weights:
        if total == 0:
            yield ()
        return
    w0 = weights[0]
    for v in range(total // w0 + 1):
        for rest in _weighted_exps(weights[1:], total - v * w0):
            yield (v,) + rest


def min_tau_degree(datum, beta):
    """The smallest crossing degree over all (nu, w)."""
    n = beta.height()
    best = 0
    for nu in words_of(datum, beta):
        for w in itertools.permutations(range(n)):
            d = term_degree(datum, nu, w, (0,) * n)
            if d < best:
                best = d
    return best


def truncated_quotient(datum, scal, beta, killed, D):
    """Graded dimensions of R(beta) modulo the two-sided ideal generated
    by degree-0 idempotent sums, per degree up to D.

    killed: list of ("prefix", word) / ("suffix", word) patterns; the
    generator is the sum of e(nu) over nu matching the pattern.  Exact:
    the ideal component in each degree is spanned by b1 * e * b2 over
    normal-form basis elements b1, b2, enumerated completely.

    Returns dict degree -> dict (nu, nu') -> dim.
    """
    if beta.height() > 4:
        raise ValueError("height must be <= 4")
    if D > 24:
        raise ValueError("degree bound must be <= 24")
    matched = set()
    for kind, pat in killed:
        pat = tuple(pat)
        for nu in words_of(datum, beta):
            if kind == "prefix" and nu[:len(pat)] == pat:
                matched.add(nu)
            if kind == "suffix" and nu[len(nu) - len(pat):] == pat:
                matched.add(nu)
    dmin = min_tau_degree(datum, beta)
    from . import linalg
    table = {}
    for d in range(dmin, D + 1):
        # the normal form is block-diagonal across (left, right) idempotents
        blocks = {}
        for t in basis_terms(datum, beta, d):
            nu, w, a = t
            mu = perm_act(perm_inv(w), nu)
            blocks.setdefault((nu, mu), []).append(t)
        rows = {}
        for d1 in range(dmin, d - dmin + 1):
            for (nu1, w1, a1) in basis_terms(datum, beta, d1):
                if perm_act(perm_inv(w1), nu1) not in matched:
                    continue
                b1 = KLRElem(datum, scal, beta, {(nu1, w1, a1): _F1})
                for (nu2, w2, a2) in basis_terms(datum, beta, d - d1,
                                                 left_nu=None):
                    if nu2 not in matched:
                        continue
                    b2 = KLRElem(datum, scal, beta, {(nu2, w2, a2): _F1})
                    prod = klr_mul(b1, b2)
                    if prod.terms:
                        mu2 = perm_act(perm_inv(w2), nu2)
                        rows.setdefault((nu1, mu2), []).append(prod.terms)
        dims = {}
        for (nu, mu), ts in blocks.items():
            bindex = {t: k for k, t in enumerate(ts)}
            brows = []
            for terms in rows.get((nu, mu), []):
                brow = [_F0] * len(ts)
                for t, c in terms.items():
                    brow[bindex[t]] = c
                brows.append(brow)
            brk = linalg.rank(brows, len(ts)) if brows else 0
            dims[(nu, mu)] = len(ts) - brk
        table[d] = dims
    return table
