"""Symmetrizable Cartan data, root/weight coordinates, and Weyl words.

Weights are stored only through their coroot pairings <h_i, .>; every
formula needed downstream (q^{<h,alpha_i>}, (alpha_i, lambda), s_i action)
factors through these, so no ambient weight lattice is ever chosen.
"""

from collections import deque

__all__ = [
    "CartanDatum",
    "RootVec",
    "Weight",
    "bilin",
    "weyl_act",
    "is_reduced",
    "word_length",
    "reduced_words",
    "positive_roots",
]


class CartanDatum:
    """Index set, generalized Cartan matrix and symmetrizers."""

    def __init__(self, index_set, gcm, symmetrizers, name=None):
        self.I = tuple(index_set)
        self.a = {}
        for i in self.I:
            for j in self.I:
                self.a[(i, j)] = int(gcm[(i, j)])
        self.d = {i: int(symmetrizers[i]) for i in self.I}
        self.name = name
        self._validate()
        self._posroots = None

    def _validate(self):
        for i in self.I:
            if self.a[(i, i)] != 2:
                raise ValueError(f"a[{i},{i}] must be 2")
            if self.d[i] < 1:
                raise ValueError(f"d[{i}] must be positive")
            for j in self.I:
                if i != j:
                    if self.a[(i, j)] > 0:
                        raise ValueError(f"a[{i},{j}] must be <= 0")
                    if (self.a[(i, j)] == 0) != (self.a[(j, i)] == 0):
                        raise ValueError(f"a[{i},{j}]=0 iff a[{j},{i}]=0 fails")
                if self.d[i] * self.a[(i, j)] != self.d[j] * self.a[(j, i)]:
                    raise ValueError("symmetrizer condition fails "
                                     f"at ({i},{j})")

    @classmethod
    def from_type(cls, name):
        """Built-in test data; labels are 1..rank."""
        name = name.upper().replace("X", "x")
        table = {
            "A1": ([1], {}, {1: 1}),
            "A1xA1": ([1, 2], {(1, 2): 0, (2, 1): 0}, {1: 1, 2: 1}),
            "A2": ([1, 2], {(1, 2): -1, (2, 1): -1}, {1: 1, 2: 1}),
            "B2": ([1, 2], {(1, 2): -1, (2, 1): -2}, {1: 2, 2: 1}),
            "G2": ([1, 2], {(1, 2): -1, (2, 1): -3}, {1: 3, 2: 1}),
            "A3": ([1, 2, 3],
                   {(1, 2): -1, (2, 1): -1, (2, 3): -1, (3, 2): -1,
                    (1, 3): 0, (3, 1): 0},
                   {1: 1, 2: 1, 3: 1}),
        }
        if name not in table:
            raise ValueError(f"unknown type {name!r}; "
                             f"choose from {sorted(table)}")
        labels, off, d = table[name]
        gcm = {}
        for i in labels:
            for j in labels:
                gcm[(i, j)] = 2 if i == j else off.get((i, j), 0)
        return cls(labels, gcm, d, name=name)

    def alpha(self, i):
        return RootVec(self, {i: 1})

    def zero_root(self):
        return RootVec(self, {})

    def fundamental_weight(self, i):
        return Weight(self, {j: 1 if j == i else 0 for j in self.I})

    def qi_exp(self, i):
        """q_i = q^{d_i}; returns d_i."""
        return self.d[i]

    def coxeter_h(self, i, j):
        """Order of s_i s_j, from a_{ij} a_{ji} in {0,1,2,3}."""
        m = self.a[(i, j)] * self.a[(j, i)]
        return {0: 2, 1: 3, 2: 4, 3: 6}[m]

    def __eq__(self, other):
        return (isinstance(other, CartanDatum) and self.I == other.I
                and self.a == other.a and self.d == other.d)

    def __hash__(self):
        return hash((self.I, tuple(sorted(self.a.items())),
                     tuple(sorted(self.d.items()))))

    def __repr__(self):
        return f"CartanDatum({self.name or self.I})"


class RootVec:
    """Element of the root lattice in simple-root coordinates."""

    __slots__ = ("datum", "co")

    def __init__(self, datum, coords):
        self.datum = datum
        self.co = {i: int(v) for i, v in coords.items() if v}

    def __getitem__(self, i):
        return self.co.get(i, 0)

    def height(self):
        return sum(self.co.values())

    def is_positive(self):
        return bool(self.co) and all(v > 0 for v in self.co.values())

    def in_Qplus(self):
        return all(v >= 0 for v in self.co.values())

    def key(self):
        return tuple(self.co.get(i, 0) for i in self.datum.I)

    def __add__(self, other):
        out = dict(self.co)
        for i, v in other.co.items():
            out[i] = out.get(i, 0) + v
        return RootVec(self.datum, out)

    def __sub__(self, other):
        out = dict(self.co)
        for i, v in other.co.items():
            out[i] = out.get(i, 0) - v
        return RootVec(self.datum, out)

    def __neg__(self):
        return RootVec(self.datum, {i: -v for i, v in self.co.items()})

    def __rmul__(self, n):
        return RootVec(self.datum, {i: n * v for i, v in self.co.items()})

    def __eq__(self, other):
        return (isinstance(other, RootVec) and self.datum == other.datum
                and self.co == other.co)

    def __hash__(self):
        return hash(frozenset(self.co.items()))

    def __repr__(self):
        if not self.co:
            return "0"
        return " + ".join(f"{v}a{i}" if v != 1 else f"a{i}"
                          for i, v in sorted(self.co.items()))


class Weight:
    """A weight known through its coroot pairings <h_i, lambda>."""

    __slots__ = ("datum", "pair")

    def __init__(self, datum, pairings):
        self.datum = datum
        self.pair = {i: int(pairings.get(i, 0)) for i in datum.I}

    def __getitem__(self, i):
        return self.pair[i]

    def minus_root(self, beta):
        """lambda - beta as a Weight (beta a RootVec)."""
        d = self.datum
        return Weight(d, {i: self.pair[i]
                          - sum(d.a[(i, j)] * beta[j] for j in d.I)
                          for i in d.I})

    def __eq__(self, other):
        return (isinstance(other, Weight) and self.datum == other.datum
                and self.pair == other.pair)

    def __hash__(self):
        return hash(tuple(sorted(self.pair.items())))

    def __repr__(self):
        return "Weight(" + ", ".join(f"<h{i}>={v}"
                                     for i, v in sorted(self.pair.items())) + ")"


def bilin(beta, gamma):
    """The symmetric form (beta, gamma) = sum beta_i gamma_j d_i a_ij."""
    if beta.datum != gamma.datum:
        raise ValueError("mismatched Cartan data")
    d = beta.datum
    total = 0
    for i, bi in beta.co.items():
        for j, gj in gamma.co.items():
            total += bi * gj * d.d[i] * d.a[(i, j)]
    return total


def pair_root(lam, beta):
    """(lambda, beta) for a Weight and a RootVec: sum beta_i d_i <h_i, lam>."""
    d = lam.datum
    return sum(beta[i] * d.d[i] * lam.pair[i] for i in d.I)


def _s_root(i, beta):
    d = beta.datum
    coeff = sum(d.a[(i, j)] * beta[j] for j in d.I)  # <h_i, beta>
    out = dict(beta.co)
    out[i] = out.get(i, 0) - coeff
    return RootVec(d, out)


def _s_weight(i, lam):
    d = lam.datum
    # <h_j, s_i lam> = <h_j, lam> - a_{j,i} <h_i, lam>
    pi = lam.pair[i]
    return Weight(d, {j: lam.pair[j] - d.a[(j, i)] * pi for j in d.I})


def weyl_act(word, x):
    """Apply s_{i_1} ... s_{i_l} (left to right as written) to x."""
    for i in reversed(word):
        x = _s_root(i, x) if isinstance(x, RootVec) else _s_weight(i, x)
    return x


def word_length(datum, word):
    """Coxeter length of the element represented by word."""
    # grow a reduced word by the exchange condition
    red = []
    for i in word:
        test = red + [i]
        if is_reduced(datum, test):
            red = test
        else:
            # delete the letter given by the exchange condition
            for k in range(len(red)):
                cand = red[:k] + red[k + 1:]
                if weyl_matrix(datum, cand + [i]) == weyl_matrix(datum, red):
                    red = cand
                    break
            else:
                raise AssertionError("exchange condition failed")
    return len(red)


def weyl_matrix(datum, word):
    """The action of the word on the root lattice, as a column map i -> RootVec."""
    return tuple(weyl_act(word, datum.alpha(i)).key() for i in datum.I)


def is_reduced(datum, word):
    """Word (i_1..i_l) is reduced iff s_{i_l}..s_{i_{k+1}}(alpha_{i_k}) > 0
    for every k (the inversion-root criterion)."""
    for k in range(len(word)):
        beta = weyl_act(list(reversed(word[k + 1:])), datum.alpha(word[k]))
        if not (beta.in_Qplus() and bool(beta.co)):
            return False
    return True


def reduced_words(datum, word, len_bound=8):
    """All reduced words of the same element, by BFS over braid moves."""
    word = tuple(word)
    if len(word) > len_bound:
        raise ValueError(f"word length {len(word)} exceeds bound {len_bound}")
    if not is_reduced(datum, word):
        raise ValueError("input word is not reduced")
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for pos in range(len(w)):
            for rep in _braid_moves(datum, w, pos):
                if rep not in seen:
                    seen.add(rep)
                    queue.append(rep)
    return seen


def _braid_moves(datum, w, pos):
    """Braid-move replacements starting at position pos."""
    out = []
    if pos + 1 >= len(w):
        return out
    i, j = w[pos], w[pos + 1]
    if i == j:
        return out
    m = datum.coxeter_h(i, j)
    # need an alternating run i,j,i,... of length m starting at pos
    if pos + m <= len(w):
        run = w[pos:pos + m]
        expect = tuple(i if k % 2 == 0 else j for k in range(m))
        if run == expect:
            swapped = tuple(j if k % 2 == 0 else i for k in range(m))
            out.append(w[:pos] + swapped + w[pos + m:])
    return out


def positive_roots(datum, height_cap=64):
    """Positive roots of a finite-type datum by orbit generation."""
    if datum._posroots is not None:
        return datum._posroots
    roots = {datum.alpha(i) for i in datum.I}
    frontier = set(roots)
    while frontier:
        new = set()
        for beta in frontier:
            for i in datum.I:
                g = _s_root(i, beta)
                if g.is_positive() and g not in roots:
                    if g.height() > height_cap:
                        raise ValueError("root system not finite "
                                         "within height cap")
                    new.add(g)
        roots |= new
        frontier = new
    datum._posroots = roots
    return roots
