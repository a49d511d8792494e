"""Free bigraded modules, degree-compatible maps, and cokernel presentations.

An element of a free module with generators e_0..e_{r-1} is a sparse dict
{(generator index, monomial): coefficient}.  The module term order is
term-over-position: monomials compare grevlex first, and equal monomials
break ties toward the lower generator index.
"""

from .errors import NotBihomogeneous, ZeroPolynomial
from .ring import Poly, mono_key, mono_mul

# ---------------------------------------------------------------- vectors


def term_key(t):
    gi, mono = t
    return (mono_key(mono), -gi)


def vec_add(field, u, v):
    out = dict(u)
    for t, c in v.items():
        acc = field.add(out.get(t, field.zero), c)
        if acc == 0:
            out.pop(t, None)
        else:
            out[t] = acc
    return out


def vec_sub(field, u, v):
    out = dict(u)
    for t, c in v.items():
        acc = field.sub(out.get(t, field.zero), c)
        if acc == 0:
            out.pop(t, None)
        else:
            out[t] = acc
    return out


def vec_scale(field, c, u):
    if c == 0:
        return {}
    return {t: field.mul(c, v) for t, v in u.items()}


def vec_mono_shift(field, u, mono, coeff):
    """coeff * x^mono * u."""
    if coeff == 0:
        return {}
    return {(gi, mono_mul(e, mono)): field.mul(coeff, c)
            for (gi, e), c in u.items()}


def vec_lead(u):
    t = max(u, key=term_key)
    return t, u[t]


def vec_bidegree(ring, gens, u):
    """Bidegree of a bihomogeneous module element."""
    if not u:
        raise ZeroPolynomial("zero module element has no bidegree")
    degs = set()
    for (gi, e), _ in u.items():
        a, b = ring.mono_bidegree(e)
        ga, gb = gens[gi]
        degs.add((a + ga, b + gb))
    if len(degs) > 1:
        raise NotBihomogeneous("mixed bidegrees %s" % sorted(degs))
    return next(iter(degs))


def vec_from_poly(p, gi=0):
    return {(gi, e): c for e, c in p.terms.items()}

# ------------------------------------------------------------ free modules


class FreeModule:
    """Free bigraded module, described by the bidegrees of its generators."""

    def __init__(self, gens):
        self.gens = tuple((int(a), int(b)) for a, b in gens)

    @property
    def rank(self):
        return len(self.gens)

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.gens == other.gens

    def __repr__(self):
        return "FreeModule(%r)" % (list(self.gens),)

    def piece_dim(self, ring, d):
        a, b = d
        return sum(ring.piece_dim(a - ga, b - gb) for ga, gb in self.gens)

    def piece_basis(self, ring, d):
        """Module monomials of bidegree d: (gen index, monomial) pairs."""
        a, b = d
        out = []
        for gi, (ga, gb) in enumerate(self.gens):
            out.extend((gi, e) for e in ring.monomials((a - ga, b - gb)))
        return out

# ------------------------------------------------------------- module maps


class ModuleMap:
    """Map between free modules; column j is the image of source generator j."""

    def __init__(self, ring, source, target, cols):
        self.ring = ring
        self.source = source
        self.target = target
        self.cols = list(cols)
        assert len(self.cols) == source.rank

    def __repr__(self):
        return "ModuleMap(%d -> %d gens)" % (self.source.rank, self.target.rank)

    def is_zero(self):
        return all(not col for col in self.cols)

    def entry(self, i, j):
        terms = {e: c for (gi, e), c in self.cols[j].items() if gi == i}
        return Poly(self.ring, terms)

    def apply(self, vec):
        """Image of an element given in source coordinates."""
        field = self.ring.field
        out = {}
        for (gi, e), c in vec.items():
            out = vec_add(field, out, vec_mono_shift(field, self.cols[gi], e, c))
        return out

    def compose(self, other):
        """self o other (other.target must be self.source)."""
        return ModuleMap(self.ring, other.source, self.target,
                         [self.apply(col) for col in other.cols])

    def check(self):
        """Validate bihomogeneity and the degree convention of every entry."""
        for j, col in enumerate(self.cols):
            if not col:
                continue
            deg = vec_bidegree(self.ring, self.target.gens, col)
            if deg != self.source.gens[j]:
                raise NotBihomogeneous(
                    "column %d has bidegree %s but source generator %s"
                    % (j, deg, self.source.gens[j]))
            for (gi, e), _ in col.items():
                ea, eb = self.ring.mono_bidegree(e)
                if ea < 0 or eb < 0:
                    raise NotBihomogeneous("negative entry degree")
        return self

    def piece_matrix(self, d):
        """Matrix of the map on graded pieces at bidegree d.

        Returns (entries, row basis, col basis) where entries are
        (row, col, coeff) triples over the free-module monomial bases.
        """
        rows = self.target.piece_basis(self.ring, d)
        cols = []
        a, b = d
        for j, (ga, gb) in enumerate(self.source.gens):
            cols.extend((j, e) for e in self.ring.monomials((a - ga, b - gb)))
        rindex = {t: i for i, t in enumerate(rows)}
        entries = []
        field = self.ring.field
        for ci, (j, e) in enumerate(cols):
            img = vec_mono_shift(field, self.cols[j], e, field.one)
            for t, c in img.items():
                entries.append((rindex[t], ci, c))
        return entries, rows, cols

# ------------------------------------------------------------ presentations


class Presentation:
    """Finitely presented bigraded module M = coker(relations: F1 -> f0)."""

    def __init__(self, ring, f0, relations=None):
        self.ring = ring
        self.f0 = f0
        if relations is None:
            relations = ModuleMap(ring, FreeModule([]), f0, [])
        self.relations = relations
        self._cache = {}

    def __repr__(self):
        return "Presentation(%d gens, %d relations)" % (
            self.f0.rank, self.relations.source.rank)

    def twist(self, a, b):
        """M(a,b): every graded piece shifts so M(a,b)_{d,e} = M_{d+a,e+b}."""
        shift = lambda g: (g[0] - a, g[1] - b)
        f0 = FreeModule([shift(g) for g in self.f0.gens])
        src = FreeModule([shift(g) for g in self.relations.source.gens])
        rels = ModuleMap(self.ring, src, f0, [dict(c) for c in self.relations.cols])
        return Presentation(self.ring, f0, rels)


def twist(M, a, b):
    return M.twist(a, b)


def free_presentation(ring, gen_degrees):
    """Free module as a presentation with no relations."""
    return Presentation(ring, FreeModule(gen_degrees))


def quotient_presentation(ring, polys):
    """R / (f_1, ..., f_k) as a presentation on one generator."""
    f0 = FreeModule([(0, 0)])
    degs, cols = [], []
    for f in polys:
        if f.is_zero():
            continue
        degs.append(f.bidegree())
        cols.append(vec_from_poly(f))
    rels = ModuleMap(ring, FreeModule(degs), f0, cols)
    return Presentation(ring, f0, rels)
