"""Bigraded polynomial rings K[x0..xm, y0..yn] and sparse bihomogeneous polynomials.

Every x-variable has bidegree (1, 0) and every y-variable (0, 1).  A monomial
is an exponent tuple over the x-block followed by the y-block.  The term order
is degree-reverse-lex on total degree with x0 > x1 > ... > xm > y0 > ... > yn.
"""

import math

from .errors import EmptyRing, NotBihomogeneous, ZeroPolynomial
from .fields import field_from_spec


def mono_mul(a, b):
    return tuple(i + j for i, j in zip(a, b))


def mono_divides(a, b):
    """True iff monomial a divides monomial b."""
    return all(i <= j for i, j in zip(a, b))


def mono_div(b, a):
    """b / a, assuming a divides b."""
    return tuple(j - i for i, j in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(i, j) for i, j in zip(a, b))


def mono_key(e):
    # grevlex: higher total degree wins; ties broken by the last variable
    # in which the exponents differ, smaller exponent there being larger.
    return (sum(e), tuple(-c for c in reversed(e)))


def _compositions(total, parts):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class Ring:
    """Context object: variable counts, coefficient field, monomial helpers."""

    def __init__(self, m, n, field, allow_trivial=False):
        if m < -1 or n < -1:
            raise ValueError("m and n must be integers >= -1")
        if m == -1 and n == -1 and not allow_trivial:
            raise EmptyRing("both variable blocks empty; pass allow_trivial=True "
                            "to build the constants-only ring")
        self.m = m
        self.n = n
        self.field = field
        self.nx = m + 1
        self.ny = n + 1
        self.nvars = self.nx + self.ny
        self.names = tuple("x%d" % i for i in range(self.nx)) + \
                     tuple("y%d" % j for j in range(self.ny))
        self._name_to_index = {s: v for v, s in enumerate(self.names)}
        self.zero_mono = (0,) * self.nvars
        self._cache = {}

    def __repr__(self):
        return "Ring(m=%d, n=%d, field=%r)" % (self.m, self.n, self.field)

    def var_bidegree(self, v):
        return (1, 0) if v < self.nx else (0, 1)

    def mono_bidegree(self, e):
        return (sum(e[:self.nx]), sum(e[self.nx:]))

    # ---- element constructors ----

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {self.zero_mono: self.field.one})

    def var(self, v):
        e = [0] * self.nvars
        e[v] = 1
        return Poly(self, {tuple(e): self.field.one})

    def monomial(self, e, coeff=None):
        c = self.field.one if coeff is None else coeff
        if c == 0:
            return Poly(self, {})
        return Poly(self, {tuple(e): c})

    def from_terms(self, items):
        """Build a polynomial from (monomial, coefficient) pairs, merging dupes."""
        terms = {}
        f = self.field
        for e, c in items:
            e = tuple(e)
            acc = f.add(terms.get(e, f.zero), c)
            if acc == 0:
                terms.pop(e, None)
            else:
                terms[e] = acc
        return Poly(self, terms)

    # ---- graded pieces of R ----

    def piece_dim(self, a, b):
        """dim R_{a,b}; C(a+m,m)*C(b+n,n) with empty blocks counting 1 at 0."""
        if self.nx == 0:
            xs = 1 if a == 0 else 0
        else:
            xs = math.comb(a + self.m, self.m) if a >= 0 else 0
        if self.ny == 0:
            ys = 1 if b == 0 else 0
        else:
            ys = math.comb(b + self.n, self.n) if b >= 0 else 0
        return xs * ys

    def monomials(self, d):
        """Exponent tuples of bidegree d, sorted decreasing in the term order."""
        a, b = d
        if (self.nx == 0 and a != 0) or (self.ny == 0 and b != 0) or a < 0 or b < 0:
            return []
        out = [xe + ye
               for xe in _compositions(a, self.nx)
               for ye in _compositions(b, self.ny)]
        out.sort(key=mono_key, reverse=True)
        return out


def make_ring(m, n, field=32003, allow_trivial=False):
    """Ring context with m+1 x-variables and n+1 y-variables over the given field."""
    return Ring(m, n, field_from_spec(field), allow_trivial=allow_trivial)


class Poly:
    """Sparse polynomial: dict monomial -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms \
            and self.ring is other.ring

    def __add__(self, other):
        f = self.ring.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = f.add(terms.get(e, f.zero), c)
            if acc == 0:
                terms.pop(e, None)
            else:
                terms[e] = acc
        return Poly(self.ring, terms)

    def __neg__(self):
        f = self.ring.field
        return Poly(self.ring, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.ring.field
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                acc = f.add(terms.get(e, f.zero), f.mul(c1, c2))
                if acc == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = acc
        return Poly(self.ring, terms)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        f = self.ring.field
        if c == 0:
            return Poly(self.ring, {})
        return Poly(self.ring, {e: f.mul(c, v) for e, v in self.terms.items()})

    def mono_shift(self, mono, coeff=None):
        """self * coeff * x^mono."""
        f = self.ring.field
        c = f.one if coeff is None else coeff
        if c == 0:
            return Poly(self.ring, {})
        return Poly(self.ring, {mono_mul(e, mono): f.mul(c, v)
                                for e, v in self.terms.items()})

    def bidegree(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no bidegree")
        degs = {self.ring.mono_bidegree(e) for e in self.terms}
        if len(degs) > 1:
            raise NotBihomogeneous("mixed bidegrees %s" % sorted(degs))
        return next(iter(degs))

    def is_bihomogeneous(self):
        if not self.terms:
            return True
        return len({self.ring.mono_bidegree(e) for e in self.terms}) == 1

    def lead(self):
        e = max(self.terms, key=mono_key)
        return e, self.terms[e]

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for e in sorted(self.terms, key=mono_key, reverse=True):
            c = self.terms[e]
            factors = ["%s^%d" % (names[v], e[v]) if e[v] > 1 else names[v]
                       for v in range(len(e)) if e[v] > 0]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (c, body))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


def bidegree_of(p):
    """Bidegree of a bihomogeneous polynomial (errors on zero or mixed input)."""
    return p.bidegree()
