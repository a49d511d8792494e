"""Free complexes, minimal free resolutions, and Betti tables.

Minimality means no differential entry has a nonzero constant term.  For
degree-compatible bihomogeneous maps an entry with a constant term IS a
constant, so minimization is plain unit-pivot Gaussian cancellation:
cancelling the pivot at (row i, col j) of d corrects d's other columns,
zeroes row j of the next differential and column i of the previous one
(both exactly, no correction terms), and preserves exactness.
"""

import itertools

from .errors import ResolutionTooLong
from .linalg import rank_entries
from .modules import FreeModule, ModuleMap, vec_mono_shift, vec_sub
from .groebner import column_syzygies, presentation_gb

# ---------------------------------------------------------------- complexes


class FreeComplex:
    """Chain complex of free modules; diffs[i] maps terms[i+1] -> terms[i]."""

    def __init__(self, ring, terms, diffs, augmentation=None, minimal=False,
                 module=None):
        self.ring = ring
        self.terms = list(terms)
        self.diffs = list(diffs)
        self.augmentation = augmentation
        self.module = module
        self.minimal = minimal
        for i, d in enumerate(self.diffs):
            assert d.target is self.terms[i] or d.target == self.terms[i]
            assert d.source is self.terms[i + 1] or d.source == self.terms[i + 1]

    @property
    def length(self):
        return len(self.terms) - 1

    def __repr__(self):
        return "%s(ranks %s)" % (type(self).__name__,
                                 [t.rank for t in self.terms])

    def composites_vanish(self):
        for i in range(len(self.diffs) - 1):
            if not self.diffs[i].compose(self.diffs[i + 1]).is_zero():
                return False
        if self.augmentation is not None and self.diffs:
            comp = self.augmentation.compose(self.diffs[0])
            if self.module is not None:
                # the composite lands in the presented module, where it is
                # zero exactly when every column is a relation
                gb = presentation_gb(self.module)
                return all(gb.contains(col) for col in comp.cols)
            if not comp.is_zero():
                return False
        return True


class Resolution(FreeComplex):
    pass


def betti_table(C):
    """Homological degree -> sorted bidegree list; empty levels omitted."""
    out = {}
    for d, term in enumerate(C.terms):
        if term.rank:
            out[d] = sorted(term.gens)
    return out


def map_rank_at(phi, d):
    entries, rows, cols = phi.piece_matrix(d)
    return rank_entries(entries, len(rows), len(cols), phi.ring.field)


def homology_dims(C, d):
    """Dimensions of the homology of the complex at bidegree d, level by
    level; level 0 reports dim F_0 - rank d_1 (the cokernel piece)."""
    ranks = [map_rank_at(phi, d) for phi in C.diffs]
    out = []
    for i, term in enumerate(C.terms):
        dim = term.piece_dim(C.ring, d)
        below = ranks[i - 1] if i >= 1 else 0
        above = ranks[i] if i < len(ranks) else 0
        out.append(dim - below - above)
    return out

# ----------------------------------------------------- minimal presentations


def _minimize_presentation(M):
    """Cancel constant pivots out of the relation matrix.

    Returns (survivors, f0, relations, augmentation): surviving original
    generator indices, the free module on them, a constant-free relation
    map into it, and the inclusion of the survivors into M.f0.
    """
    if "min_pres" in M._cache:
        return M._cache["min_pres"]
    ring = M.ring
    field = ring.field
    zm = ring.zero_mono
    row_deg = dict(enumerate(M.f0.gens))
    cols, col_deg = {}, {}
    for j, c in enumerate(M.relations.cols):
        if c:
            cols[j] = dict(c)
            col_deg[j] = M.relations.source.gens[j]

    while True:
        pivot = None
        for j in sorted(cols):
            hits = sorted(ri for (ri, mono) in cols[j] if mono == zm)
            if hits:
                pivot = (j, hits[0], cols[j][(hits[0], zm)])
                break
        if pivot is None:
            break
        j, ri, c = pivot
        cinv = field.inv(c)
        pcol = cols.pop(j)
        col_deg.pop(j)
        del row_deg[ri]
        for l in list(cols):
            v = cols[l]
            gam = {mono: cc for (r2, mono), cc in v.items() if r2 == ri}
            if not gam:
                continue
            for mono, cc in gam.items():
                v = vec_sub(field, v,
                            vec_mono_shift(field, pcol, mono,
                                           field.mul(cc, cinv)))
            if v:
                cols[l] = v
            else:
                del cols[l]
                del col_deg[l]

    survivors = sorted(row_deg)
    newrow = {r: i for i, r in enumerate(survivors)}
    f0 = FreeModule([row_deg[r] for r in survivors])
    rel_cols = [{(newrow[r], mono): c for (r, mono), c in cols[j].items()}
                for j in sorted(cols)]
    rels = ModuleMap(ring, FreeModule([col_deg[j] for j in sorted(cols)]),
                     f0, rel_cols)
    aug = ModuleMap(ring, f0, M.f0,
                    [{(r, zm): field.one} for r in survivors])
    M._cache["min_pres"] = (survivors, f0, rels, aug)
    return M._cache["min_pres"]


def minimal_generators(M):
    """Minimal bihomogeneous generating set as (element of f0, bidegree)."""
    survivors, f0, _rels, _aug = _minimize_presentation(M)
    zm = M.ring.zero_mono
    one = M.ring.field.one
    return [({(r, zm): one}, deg) for r, deg in zip(survivors, f0.gens)]

# ------------------------------------------------------- resolution builder


def _cancel_pair(phi, psi):
    """Cancel constant pivots of psi; phi loses the matching columns.

    phi: F_d -> F_{d-1} (assumed already constant-free), psi: F_{d+1} -> F_d
    with image = ker(phi).  Exactness and coker(phi) are preserved.
    """
    ring = phi.ring
    field = ring.field
    zm = ring.zero_mono
    row_deg = dict(enumerate(phi.source.gens))
    cols, col_deg = {}, {}
    for k, c in enumerate(psi.cols):
        if c:
            cols[k] = dict(c)
            col_deg[k] = psi.source.gens[k]

    while True:
        pivot = None
        for k in sorted(cols):
            hits = sorted(ri for (ri, mono) in cols[k] if mono == zm)
            if hits:
                pivot = (k, hits[0], cols[k][(hits[0], zm)])
                break
        if pivot is None:
            break
        k, rj, c = pivot
        cinv = field.inv(c)
        pcol = cols.pop(k)
        col_deg.pop(k)
        del row_deg[rj]
        for l in list(cols):
            v = cols[l]
            gam = {mono: cc for (r2, mono), cc in v.items() if r2 == rj}
            if gam:
                for mono, cc in gam.items():
                    v = vec_sub(field, v,
                                vec_mono_shift(field, pcol, mono,
                                               field.mul(cc, cinv)))
            else:
                v = dict(v)
            # the cancelled generator of F_d is gone from the complex
            v = {t: cc for t, cc in v.items() if t[0] != rj}
            if v:
                cols[l] = v
            else:
                del cols[l]
                del col_deg[l]

    alive = sorted(row_deg)
    newrow = {r: i for i, r in enumerate(alive)}
    new_src = FreeModule([row_deg[r] for r in alive])
    new_phi = ModuleMap(ring, new_src, phi.target,
                        [dict(phi.cols[r]) for r in alive])
    psi_cols = [{(newrow[r], mono): c for (r, mono), c in cols[k].items()}
                for k in sorted(cols)]
    new_psi = ModuleMap(ring, FreeModule([col_deg[k] for k in sorted(cols)]),
                        new_src, psi_cols)
    return new_phi, new_psi


def minimal_free_resolution(M, max_length=None):
    """Minimal free resolution of the cokernel presentation M.

    Differentials are built one homological degree at a time: kernel
    generators of the current map, then constant-pivot cancellation before
    the next step, so no differential ever carries a unit entry.
    """
    ring = M.ring
    if max_length is None:
        max_length = (ring.m + 1) + (ring.n + 1)
    _survivors, f0, rels, aug = _minimize_presentation(M)
    terms = [f0]
    diffs = []
    pending = rels
    while pending.source.rank:
        if len(diffs) + 1 > max_length:
            raise ResolutionTooLong(
                "resolution exceeds length %d" % max_length)
        psi = column_syzygies(ring, pending.target, pending.cols,
                              list(pending.source.gens))
        pending, psi = _cancel_pair(pending, psi)
        if not pending.source.rank:
            break
        diffs.append(pending)
        terms.append(pending.source)
        pending = psi
    return Resolution(ring, terms, diffs, augmentation=aug, minimal=True,
                      module=M)


def minimize(C):
    """Quasi-isomorphic complex with every constant pivot cancelled.

    Sweeps the homological degrees in ascending order, repeating until no
    differential has a constant entry; the Betti data of the result does
    not depend on the pivot order.
    """
    ring = C.ring
    field = ring.field
    zm = ring.zero_mono
    gens = [dict(enumerate(t.gens)) for t in C.terms]
    maps = []
    for d, phi in enumerate(C.diffs):
        maps.append({k: dict(c) for k, c in enumerate(phi.cols) if c})
    aug_cols = None
    if C.augmentation is not None:
        aug_cols = {k: dict(c) for k, c in enumerate(C.augmentation.cols)}

    def eliminate(lvl, k, ri, c):
        # pivot in d_{lvl+1}: column k (gen of terms[lvl+1]), row ri
        cinv = field.inv(c)
        pcol = maps[lvl].pop(k)
        del gens[lvl + 1][k]
        del gens[lvl][ri]
        for l in list(maps[lvl]):
            v = maps[lvl][l]
            gam = {mono: cc for (r2, mono), cc in v.items() if r2 == ri}
            for mono, cc in gam.items():
                v = vec_sub(field, v,
                            vec_mono_shift(field, pcol, mono,
                                           field.mul(cc, cinv)))
            if v:
                maps[lvl][l] = v
            else:
                del maps[lvl][l]
        # row k of the next differential vanishes after the basis change
        if lvl + 1 < len(maps):
            for l in list(maps[lvl + 1]):
                v = {t: cc for t, cc in maps[lvl + 1][l].items() if t[0] != k}
                if v:
                    maps[lvl + 1][l] = v
                else:
                    del maps[lvl + 1][l]
        # column ri of the previous differential (or augmentation) vanishes
        if lvl >= 1:
            maps[lvl - 1].pop(ri, None)
        elif aug_cols is not None:
            aug_cols.pop(ri, None)

    progress = True
    while progress:
        progress = False
        for lvl in range(len(maps)):
            while True:
                pivot = None
                for k in sorted(maps[lvl]):
                    hits = sorted(ri for (ri, mono) in maps[lvl][k]
                                  if mono == zm)
                    if hits:
                        pivot = (k, hits[0], maps[lvl][k][(hits[0], zm)])
                        break
                if pivot is None:
                    break
                eliminate(lvl, *pivot)
                progress = True

    # rebuild, reindexing survivors level by level
    order = [sorted(g) for g in gens]
    newidx = [{r: i for i, r in enumerate(o)} for o in order]
    terms = [FreeModule([gens[lvl][r] for r in order[lvl]])
             for lvl in range(len(gens))]
    diffs = []
    for lvl in range(len(maps)):
        cols = []
        for k in order[lvl + 1]:
            c = maps[lvl].get(k, {})
            cols.append({(newidx[lvl][r], mono): cc
                         for (r, mono), cc in c.items()})
        diffs.append(ModuleMap(ring, terms[lvl + 1], terms[lvl], cols))
    aug = None
    if aug_cols is not None:
        aug = ModuleMap(ring, terms[0], C.augmentation.target,
                        [dict(aug_cols[r]) for r in order[0]])
    # drop trailing zero terms
    while len(terms) > 1 and terms[-1].rank == 0:
        terms.pop()
        diffs.pop()
    return Resolution(ring, terms, diffs, augmentation=aug, minimal=True,
                      module=getattr(C, "module", None))

# ------------------------------------------------------------------- koszul


def _power_mono(ring, v, nu):
    e = [0] * ring.nvars
    e[v] = nu
    return tuple(e)


def koszul_complex(ring, var_indices, nu, truncated=False):
    """Exterior-algebra complex on the nu-th powers of the given variables.

    d(e_S) = sum over positions of (-1)^pos z^nu e_{S minus that variable};
    the truncated variant drops the exterior degree 0 term.
    """
    vs = sorted(set(var_indices))
    field = ring.field
    levels = []  # levels[p] = sorted list of p-subsets
    for p in range(len(vs) + 1):
        levels.append([tuple(s) for s in itertools.combinations(vs, p)])

    def subset_deg(S):
        a = b = 0
        for v in S:
            da, db = ring.var_bidegree(v)
            a += nu * da
            b += nu * db
        return (a, b)

    terms = [FreeModule([subset_deg(S) for S in lev]) for lev in levels]
    diffs = []
    for p in range(1, len(vs) + 1):
        index = {S: i for i, S in enumerate(levels[p - 1])}
        cols = []
        for S in levels[p]:
            col = {}
            for pos, v in enumerate(S):
                rest = S[:pos] + S[pos + 1:]
                coeff = field.one if pos % 2 == 0 else field.neg(field.one)
                col[(index[rest], _power_mono(ring, v, nu))] = coeff
            cols.append(col)
        diffs.append(ModuleMap(ring, terms[p], terms[p - 1], cols))
    if truncated:
        terms = terms[1:]
        diffs = diffs[1:]
        levels = levels[1:]
    C = FreeComplex(ring, terms, diffs)
    C.gen_labels = levels
    return C


def irrelevant_resolution(ring, nu):
    """Free complex resolving R modulo the nu-th powers x_i^nu y_j^nu of the
    products of one variable from each block.

    F_0 = R; for r >= 1, F_r collects pairs (S, T) of nonempty index sets
    with |S| + |T| = r + 1, one exterior factor per block, with the tensor
    sign rule d(a (x) b) = da (x) b + (-1)^|a| a (x) db.
    """
    if ring.m < 0 or ring.n < 0:
        raise ValueError("both variable blocks must be nonempty")
    field = ring.field
    xs = list(range(ring.nx))
    ys = list(range(ring.nx, ring.nvars))
    levels = [[((), ())]]  # F_0 = R, a single formal pair
    top = ring.m + ring.n + 1
    for r in range(1, top + 1):
        lev = []
        for p in range(1, r + 1):
            q = r + 1 - p
            if q < 1 or p > len(xs) or q > len(ys):
                continue
            for S in itertools.combinations(xs, p):
                for T in itertools.combinations(ys, q):
                    lev.append((S, T))
        lev.sort(key=lambda st: (len(st[0]), st[0], st[1]))
        levels.append(lev)
    while len(levels) > 1 and not levels[-1]:
        levels.pop()

    def pair_deg(ST):
        S, T = ST
        return (nu * len(S), nu * len(T))

    terms = [FreeModule([(0, 0)])] + [FreeModule([pair_deg(st) for st in lev])
                                      for lev in levels[1:]]
    diffs = []
    for r in range(1, len(levels)):
        index = {st: i for i, st in enumerate(levels[r - 1])}
        cols = []
        for S, T in levels[r]:
            col = {}
            if r == 1:
                mono = list(_power_mono(ring, S[0], nu))
                mono[T[0]] = nu
                col[(0, tuple(mono))] = field.one
            else:
                if len(S) >= 2:
                    for pos, v in enumerate(S):
                        rest = (S[:pos] + S[pos + 1:], T)
                        coeff = (field.one if pos % 2 == 0
                                 else field.neg(field.one))
                        col[(index[rest], _power_mono(ring, v, nu))] = coeff
                if len(T) >= 2:
                    sign = field.one if len(S) % 2 == 0 else field.neg(field.one)
                    for pos, w in enumerate(T):
                        rest = (S, T[:pos] + T[pos + 1:])
                        coeff = sign if pos % 2 == 0 else field.neg(sign)
                        col[(index[rest], _power_mono(ring, w, nu))] = coeff
            cols.append(col)
        diffs.append(ModuleMap(ring, terms[r], terms[r - 1], cols))
    C = FreeComplex(ring, terms, diffs)
    C.gen_labels = levels
    return C
