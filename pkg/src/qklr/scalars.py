"""Exact arithmetic over Z[q, q^-1] and Q(q).

Three value types:

* LaurentPoly -- sparse Laurent polynomial in q with rational coefficients.
* RationalQ -- a normalized fraction of integer polynomials in q; the
  coefficient field used everywhere else in the package.
* GradedSeries -- a truncated power series in q (integer coefficients,
  bounded below) with an optional exact closed form.

All values are immutable once constructed and safe to share.
"""

from fractions import Fraction
from math import gcd

__all__ = [
    "LaurentPoly",
    "RationalQ",
    "GradedSeries",
    "quantum_int",
    "quantum_factorial",
    "quantum_binomial",
    "series_truncate",
]


# ---------------------------------------------------------------------------
# dense integer/rational polynomial helpers (exponents >= 0, index = exponent)

def _ptrim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                   for i in range(n)])


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ptrim(out)


def _pdivmod(a, b):
    """Division with remainder over Q; a, b have Fraction or int coeffs."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    lb = Fraction(b[-1])
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i]:
            c = rem[i] / lb
            quo[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    return _ptrim(quo), _ptrim(rem)


def _pcontent(a):
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g


def _pprimitive(a):
    """Scale a Fraction-coefficient poly to primitive integer coeffs, lc > 0."""
    if not a:
        return ()
    den = 1
    for c in a:
        f = Fraction(c)
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(Fraction(c) * den) for c in a]
    g = _pcontent(ints)
    if g:
        ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomials: rem(lc(b)^k * a, b)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            if lb != 1:
                for j in range(len(rem)):
                    rem[j] *= lb
                c = rem[i]
            q = c // lb
            for j in range(db + 1):
                rem[i - db + j] -= q * b[j]
    return _ptrim(rem)


def _pgcd(a, b):
    """Primitive gcd of two integer polynomials (lc > 0), via primitive PRS."""
    a, b = _pprimitive(_ptrim(a)), _pprimitive(_ptrim(b))
    if not a:
        return b
    if not b:
        return a
    # monomial fast path: gcd is a power of q times a constant
    if len([c for c in a if c]) == 1 or len([c for c in b if c]) == 1:
        k = min(_pord(a), _pord(b))
        return _pshift((1,), k)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pprimitive(_pseudo_rem(a, b))
        a, b = b, r
    return a


def _pshift(a, k):
    """Multiply by q^k (k >= 0)."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def _ppow(a, n):
    out = (1,)
    base = a
    while n:
        if n & 1:
            out = _pmul(out, base)
        base = _pmul(base, base)
        n >>= 1
    return out


def _pord(a):
    """Order of vanishing at q = 0."""
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("zero polynomial has no order")


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Sparse Laurent polynomial: dict exponent -> Fraction, zeros dropped."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        cc = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    cc[int(e)] = v
        self.c = cc

    @classmethod
    def const(cls, v):
        return cls({0: v})

    @classmethod
    def q_power(cls, k):
        return cls({k: 1})

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        out = dict(self.c)
        for e, v in other.c.items():
            s = out.get(e, 0) + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = LaurentPoly()
        r.c = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly()
        r.c = {e: -v for e, v in self.c.items()}
        return r

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                s = out.get(e, 0) + v1 * v2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = LaurentPoly()
        r.c = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a LaurentPoly; use RationalQ")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def min_exp(self):
        return min(self.c) if self.c else None

    def max_exp(self):
        return max(self.c) if self.c else None

    def bar(self):
        """q -> q^-1."""
        r = LaurentPoly()
        r.c = {-e: v for e, v in self.c.items()}
        return r

    def to_json(self):
        return [[e, str(self.c[e])] for e in sorted(self.c)]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): Fraction(s) for e, s in data})

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            if e == 0:
                parts.append(str(v))
            elif e == 1:
                parts.append(f"{v}*q" if v != 1 else "q")
            else:
                parts.append(f"{v}*q^{e}" if v != 1 else f"q^{e}")
        return " + ".join(parts).replace("+ -", "- ")


class RationalQ:
    """Element of Q(q) as num/den, both integer polynomials in q.

    Normal form: den nonzero with positive leading coefficient,
    gcd(num, den) = 1, integer contents coprime, and num, den not both
    divisible by q.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,), _normalized=False):
        if isinstance(num, int):
            num = (num,) if num else ()
        if isinstance(den, int):
            den = (den,)
        num = _ptrim(num)
        den = _ptrim(den)
        if not den:
            raise ZeroDivisionError("RationalQ with zero denominator")
        if not _normalized:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num, den):
        if not num:
            return (), (1,)
        # strip common q powers
        on, od = _pord(num), _pord(den)
        k = min(on, od)
        if k:
            num, den = num[k:], den[k:]
        nnum = sum(1 for c in num if c)
        nden = sum(1 for c in den if c)
        if nnum > 1 and nden > 1:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _ptrim(_pdivmod(num, g)[0])
                den = _ptrim(_pdivmod(den, g)[0])
                num = tuple(int(c) for c in num)
                den = tuple(int(c) for c in den)
        cn, cd = _pcontent(num), _pcontent(den)
        cg = gcd(cn, cd)
        if cg > 1:
            num = tuple(c // cg for c in num)
            den = tuple(c // cg for c in den)
        if den[-1] < 0:
            num = tuple(-c for c in num)
            den = tuple(-c for c in den)
        return num, den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n):
        return cls((n,) if n else (), (1,), _normalized=True)

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls((f.numerator,) if f.numerator else (), (f.denominator,),
                   _normalized=True)

    @classmethod
    def q_power(cls, k):
        if k >= 0:
            return cls(_pshift((1,), k), (1,), _normalized=True)
        return cls((1,), _pshift((1,), -k), _normalized=True)

    @classmethod
    def from_laurent(cls, lp):
        if isinstance(lp, LaurentPoly):
            if not lp.c:
                return cls.zero()
            m = min(lp.c)
            shift = -m if m < 0 else 0
            den = 1
            for v in lp.c.values():
                den = den * v.denominator // gcd(den, v.denominator)
            coeffs = [0] * (max(lp.c) + shift + 1)
            for e, v in lp.c.items():
                coeffs[e + shift] = int(v * den)
            return cls(tuple(coeffs), _pshift((den,), shift))
        raise TypeError(f"cannot convert {type(lp)} to RationalQ")

    @classmethod
    def zero(cls):
        return cls((), (1,), _normalized=True)

    @classmethod
    def one(cls):
        return cls((1,), (1,), _normalized=True)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RationalQ.from_int(other)
        if not isinstance(other, RationalQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalQ):
            return other
        if isinstance(other, int):
            return RationalQ.from_int(other)
        if isinstance(other, Fraction):
            return RationalQ.from_fraction(other)
        if isinstance(other, LaurentPoly):
            return RationalQ.from_laurent(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalQ(_padd(self.num, other.num), self.den)
        g = _pgcd(self.den, other.den)
        if len(g) > 1:
            d1 = tuple(int(c) for c in _pdivmod(self.den, g)[0])
            d2 = tuple(int(c) for c in _pdivmod(other.den, g)[0])
            num = _padd(_pmul(self.num, d2), _pmul(other.num, d1))
            return RationalQ(num, _pmul(self.den, d2))
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return RationalQ(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalQ(_pneg(self.num), self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return RationalQ.zero()
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        # cross-cancel so the product needs no further polynomial gcd
        g1 = _pgcd(n1, d2)
        if len(g1) > 1:
            n1 = tuple(int(c) for c in _pdivmod(n1, g1)[0])
            d2 = tuple(int(c) for c in _pdivmod(d2, g1)[0])
        g2 = _pgcd(n2, d1)
        if len(g2) > 1:
            n2 = tuple(int(c) for c in _pdivmod(n2, g2)[0])
            d1 = tuple(int(c) for c in _pdivmod(d1, g2)[0])
        num = _pmul(n1, n2)
        den = _pmul(d1, d2)
        # only q-power, content and sign normalization remain
        on, od = _pord(num), _pord(den)
        k = min(on, od)
        if k:
            num, den = num[k:], den[k:]
        cn, cd = _pcontent(num), _pcontent(den)
        cg = gcd(cn, cd)
        if cg > 1:
            num = tuple(c // cg for c in num)
            den = tuple(c // cg for c in den)
        if den[-1] < 0:
            num = tuple(-c for c in num)
            den = tuple(-c for c in den)
        return RationalQ(num, den, _normalized=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return RationalQ(num, den, _normalized=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalQ.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- conversions -------------------------------------------------------

    def to_laurent(self):
        """Convert to LaurentPoly; requires denominator c*q^k."""
        if not self.num:
            return LaurentPoly()
        nz = [i for i, c in enumerate(self.den) if c]
        if len(nz) != 1:
            raise ValueError(f"not a Laurent polynomial: den={self.den}")
        k = nz[0]
        c = self.den[k]
        return LaurentPoly({e - k: Fraction(v, c)
                            for e, v in enumerate(self.num) if v})

    def is_laurent(self):
        return sum(1 for c in self.den if c) == 1

    def bar(self):
        """The involution q -> q^-1."""
        n = _ptrim(tuple(reversed(self.num)))
        d = _ptrim(tuple(reversed(self.den)))
        # reversal implicitly multiplies num and den by q^deg each;
        # rebalance with explicit q powers
        dn = len(self.num) - 1
        dd = len(self.den) - 1
        r = RationalQ(n, d)
        return r * RationalQ.q_power(dd - dn)

    def series_coeffs(self, lower, upper):
        """Laurent expansion coefficients (Fractions) for q^lower..q^upper."""
        if not self.num:
            return [Fraction(0)] * (upper - lower + 1)
        on = _pord(self.num)
        od = _pord(self.den)
        # f = q^(on-od) * (num/q^on) / (den/q^od), both units at q=0
        shift = on - od
        nn = self.num[on:]
        dd = self.den[od:]
        need = upper - shift + 1
        if need <= 0:
            return [Fraction(0)] * (upper - lower + 1)
        inv0 = Fraction(1, dd[0])
        out = []
        acc = []  # coefficients of the expansion of nn/dd
        for k in range(need):
            s = Fraction(nn[k]) if k < len(nn) else Fraction(0)
            for j in range(1, min(k, len(dd) - 1) + 1):
                s -= dd[j] * acc[k - j]
            acc.append(s * inv0)
        for e in range(lower, upper + 1):
            k = e - shift
            out.append(acc[k] if 0 <= k < len(acc) else Fraction(0))
        return out

    def order(self):
        """Order of vanishing at q = 0 (lowest exponent of the expansion)."""
        if not self.num:
            raise ValueError("order of zero")
        return _pord(self.num) - _pord(self.den)

    def to_json(self):
        return {"num": [[e, str(c)] for e, c in enumerate(self.num) if c],
                "den": [[e, str(c)] for e, c in enumerate(self.den) if c]}

    @classmethod
    def from_json(cls, data):
        def build(pairs):
            if not pairs:
                return ()
            out = [0] * (max(int(e) for e, _ in pairs) + 1)
            for e, s in pairs:
                out[int(e)] = int(s)
            return tuple(out)
        return cls(build(data["num"]), build(data["den"]))

    def __repr__(self):
        def fmt(p):
            terms = []
            for e, c in enumerate(p):
                if c:
                    if e == 0:
                        terms.append(str(c))
                    elif e == 1:
                        terms.append(f"{c}*q" if c != 1 else "q")
                    else:
                        terms.append(f"{c}*q^{e}" if c != 1 else f"q^{e}")
            return " + ".join(terms).replace("+ -", "- ") or "0"
        if self.den == (1,):
            return fmt(self.num)
        return f"({fmt(self.num)})/({fmt(self.den)})"


class GradedSeries:
    """Truncated series sum c_e q^e, e bounded below, with optional closed form."""

    __slots__ = ("truncation_degree", "coefficients", "lower", "closed_form")

    def __init__(self, truncation_degree, coefficients, lower=None,
                 closed_form=None):
        self.truncation_degree = truncation_degree
        self.coefficients = {int(e): int(v) for e, v in coefficients.items()
                             if v and e <= truncation_degree}
        if lower is None:
            lower = min(self.coefficients) if self.coefficients else 0
        self.lower = lower
        self.closed_form = closed_form

    def coeff(self, e):
        return self.coefficients.get(e, 0)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        d = min(self.truncation_degree, other.truncation_degree)
        es = set(self.coefficients) | set(other.coefficients)
        return all(self.coeff(e) == other.coeff(e) for e in es if e <= d)

    def cauchy_mul(self, other):
        d = min(self.truncation_degree, other.truncation_degree)
        out = {}
        for e1, v1 in self.coefficients.items():
            for e2, v2 in other.coefficients.items():
                if e1 + e2 <= d:
                    out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        cf = None
        if self.closed_form is not None and other.closed_form is not None:
            cf = self.closed_form * other.closed_form
        return GradedSeries(d, out, lower=self.lower + other.lower,
                            closed_form=cf)

    def to_json(self):
        data = {"truncation_degree": self.truncation_degree,
                "coefficients": [[e, self.coefficients[e]]
                                 for e in sorted(self.coefficients)]}
        if self.closed_form is not None:
            data["closed_form"] = self.closed_form.to_json()
        return data

    def __repr__(self):
        terms = [f"{v}*q^{e}" for e, v in sorted(self.coefficients.items())]
        return (" + ".join(terms) or "0") + f" + O(q^{self.truncation_degree + 1})"


# ---------------------------------------------------------------------------


def quantum_int(n, d=1):
    """[n]_{q^d} = (q^{dn} - q^{-dn})/(q^d - q^{-d}) as a Laurent polynomial."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if n < 0:
        return -quantum_int(-n, d)
    return LaurentPoly({d * (n - 1 - 2 * k): 1 for k in range(n)})


def quantum_factorial(n, d=1):
    out = LaurentPoly.const(1)
    for s in range(1, n + 1):
        out = out * quantum_int(s, d)
    return out


def quantum_binomial(m, k, d=1):
    """[m choose k]_{q^d}; always a Laurent polynomial."""
    if k < 0:
        raise ValueError("k must be >= 0")
    num = RationalQ.one()
    for s in range(1, k + 1):
        num = num * RationalQ.from_laurent(quantum_int(m - s + 1, d))
        num = num / RationalQ.from_laurent(quantum_int(s, d))
    return num.to_laurent()


def series_truncate(f, lower, upper):
    """Expand f in Q(q) as a Laurent series on q^lower..q^upper."""
    coeffs = f.series_coeffs(lower, upper)
    out = {}
    for e, c in zip(range(lower, upper + 1), coeffs):
        if c:
            if c.denominator != 1:
                raise ValueError(f"non-integer series coefficient {c} at q^{e}")
            out[e] = int(c)
    lo = f.order() if f.num else lower
    return GradedSeries(upper, out, lower=lo, closed_form=f)
