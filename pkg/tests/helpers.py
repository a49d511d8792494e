"""Independent oracles for the test suite.

Everything here recomputes mathematical facts from first principles --
explicit Cech cochain complexes, dense row reduction, direct monomial
spans -- sharing no linear algebra or Groebner machinery with the
package, so package outputs can be checked against a second
implementation.
"""

import itertools
import math
from fractions import Fraction


def binom(n, k):
    """Binomial coefficient, zero outside Pascal's triangle."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


# ------------------------------------------------------- dense exact ranks


def rank_fraction(rows):
    """Rank over Q by fraction-free-ish Gaussian elimination."""
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    if not rows:
        return 0
    ncols = len(rows[0])
    pr = 0
    for c in range(ncols):
        piv = next((i for i in range(pr, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        inv = 1 / rows[pr][c]
        rows[pr] = [v * inv for v in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pr += 1
        rank += 1
    return rank


def rank_modp(rows, p):
    """Rank over F_p by Gaussian elimination on integer rows."""
    rows = [[x % p for x in r] for r in rows]
    rank = 0
    if not rows:
        return 0
    ncols = len(rows[0])
    pr = 0
    for c in range(ncols):
        piv = next((i for i in range(pr, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        inv = pow(rows[pr][c], p - 2, p)
        rows[pr] = [v * inv % p for v in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[pr])]
        pr += 1
        rank += 1
    return rank


def rank_over(rows, field):
    """Dispatch on the coefficient field's characteristic."""
    if field.char == 0:
        return rank_fraction(rows)
    return rank_modp([[int(x) for x in r] for r in rows], field.char)


# ------------------------------------------------ Cech cohomology oracle


def _cochain_ranks(nverts, neg):
    """Cohomology dims of the Cech cochain complex restricted to one
    Laurent monomial: cochains live on the overlaps U_S with
    neg <= S <= {0..nverts-1}, graded by |S| - 1, with the alternating
    restriction differential."""
    verts = range(nverts)
    levels = []
    for p in range(nverts):
        levels.append([frozenset(S)
                       for S in itertools.combinations(verts, p + 1)
                       if neg <= set(S)])
    dims = [len(level) for level in levels]
    ranks = []
    for p in range(nverts - 1):
        src, tgt = levels[p], levels[p + 1]
        tindex = {S: i for i, S in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for j, S in enumerate(src):
            for v in verts:
                if v in S:
                    continue
                T = S | {v}
                if T not in tindex:
                    continue
                sign = (-1) ** sorted(T).index(v)
                rows[tindex[T]][j] = sign
        ranks.append(rank_fraction(rows) if src and tgt else 0)
    out = []
    for p in range(nverts):
        below = ranks[p - 1] if p >= 1 else 0
        above = ranks[p] if p < len(ranks) else 0
        out.append(dims[p] - below - above)
    return out


def cech_line_bundle_dim(m, k, a):
    """dim H^a(P^m, O(k)) from explicit Cech cochain ranks.

    The Cech complex on the standard cover splits over Laurent monomials
    of total degree k; the monomial with exponent vector e appears on
    exactly the overlaps U_S with {i : e_i < 0} contained in S.  Degrees
    are bounded: a contributing exponent vector has every entry in
    [k - m... no entry below k - m when all entries are negative, nor
    above k when all are nonnegative], so the sweep over the box below
    is exhaustive.
    """
    if a < 0 or a > m:
        return 0
    nverts = m + 1
    bound = abs(k) + m + 1
    total = 0
    for e in itertools.product(range(-bound, bound + 1), repeat=nverts):
        if sum(e) != k:
            continue
        neg = {i for i, ei in enumerate(e) if ei < 0}
        # mixed-sign vectors give exact (cone) complexes; skipping them
        # is an optimization only, correctness is re-checked by the
        # all-vectors slow path in the oracle self-test
        if neg and len(neg) != nverts:
            continue
        total += _cochain_ranks(nverts, neg)[a]
    return total


def cech_line_bundle_dim_slow(m, k, a):
    """Same as cech_line_bundle_dim but ranks every exponent vector in
    the box, including the mixed-sign ones (oracle self-check)."""
    if a < 0 or a > m:
        return 0
    nverts = m + 1
    bound = abs(k) + m + 1
    total = 0
    for e in itertools.product(range(-bound, bound + 1), repeat=nverts):
        if sum(e) != k:
            continue
        neg = {i for i, ei in enumerate(e) if ei < 0}
        total += _cochain_ranks(nverts, neg)[a]
    return total


# ---------------------------------------------------- direct graded pieces


def span_piece_dim(ring, polys, d):
    """dim of the bidegree-d piece of the ideal generated by polys:
    the rank of the coefficient matrix of every monomial multiple that
    lands in degree d.  No Groebner bases, no package linear algebra."""
    a, b = d
    monos = ring.monomials(d)
    if not monos:
        return 0
    idx = {e: i for i, e in enumerate(monos)}
    rows = []
    for f in polys:
        if f.is_zero():
            continue
        fa, fb = f.bidegree()
        for e in ring.monomials((a - fa, b - fb)):
            row = [0] * len(monos)
            for em, c in f.terms.items():
                me = tuple(u + v for u, v in zip(em, e))
                row[idx[me]] = c
            rows.append(row)
    return rank_over(rows, ring.field)


def quotient_piece_dim(ring, polys, d):
    """dim (R/(polys))_d via the complement of the span above."""
    return ring.piece_dim(*d) - span_piece_dim(ring, polys, d)


# --------------------------------------------------------- random elements


def random_form(ring, rng, d, coeff_bound=100):
    """Dense random bihomogeneous form of bidegree d with coefficients
    drawn from 1..coeff_bound."""
    items = [(e, ring.field.of(rng.randrange(1, coeff_bound + 1)))
             for e in ring.monomials(d)]
    return ring.from_terms(items)


def random_sparse_poly(ring, rng, d, nterms=4, coeff_bound=50):
    """Sparse random form: nterms monomials of bidegree d (with
    replacement) and signed coefficients."""
    monos = ring.monomials(d)
    items = []
    for _ in range(nterms):
        c = rng.randrange(1, coeff_bound + 1) * rng.choice((1, -1))
        items.append((rng.choice(monos), ring.field.of(c)))
    return ring.from_terms(items)
