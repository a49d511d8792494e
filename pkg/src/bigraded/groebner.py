"""Groebner bases for submodules of free bigraded modules.

Module elements are the sparse dicts of modules.py.  The term order is
degree-reverse-lexicographic on monomials (x-block before y-block),
extended term-over-position with ties broken toward the lower generator
index.  Everything here is deterministic: S-pairs are processed in
(lcm degree, lcm, i, j) heap order, and bases come back inter-reduced,
monic, and sorted by decreasing lead term.
"""

import heapq
import itertools
from collections import namedtuple

from .modules import (FreeModule, ModuleMap, Presentation, term_key,
                      vec_bidegree, vec_from_poly, vec_mono_shift, vec_scale,
                      vec_sub)
from .regions import upset_bounds
from .ring import mono_div, mono_divides, mono_lcm, mono_mul

# ------------------------------------------------------------- reduction


def _lead(vec):
    return max(vec, key=term_key)


def _reduce_full(field, f, elements, leads, on_step=None):
    """Full normal form against monic elements with the given lead terms.

    No monomial of the result is divisible by any lead.  on_step((k, q, c))
    reports each reduction step: c * x^q * elements[k] was subtracted.
    """
    work = dict(f)
    rem = {}
    while work:
        t = max(work, key=term_key)
        gi, e = t
        c = work[t]
        hit = -1
        for k, (lgi, lu) in enumerate(leads):
            if lgi == gi and mono_divides(lu, e):
                hit = k
                break
        if hit < 0:
            rem[t] = work.pop(t)
            continue
        q = mono_div(e, leads[hit][1])
        work = vec_sub(field, work, vec_mono_shift(field, elements[hit], q, c))
        if on_step is not None:
            on_step((hit, q, c))
    return rem

# ------------------------------------------------------------- buchberger


def _buchberger_core(ring, module, items, use_chain_criterion):
    """items: list of (vec, expr) with expr a vector over input columns
    (or None when not tracking).  Returns (elements, exprs) for the reduced
    basis; each element still satisfies element = sum expr * input-columns.
    """
    field = ring.field
    G, E = [], []

    def add(vec, expr):
        c = vec[_lead(vec)]
        if c != field.one:
            ci = field.inv(c)
            vec = vec_scale(field, ci, vec)
            if expr is not None:
                expr = vec_scale(field, ci, expr)
        G.append(vec)
        E.append(expr)

    for vec, expr in items:
        vec_bidegree(ring, module.gens, vec)
        for gi, _e in vec:
            if not 0 <= gi < module.rank:
                raise ValueError("generator index %d out of range" % gi)
        add(dict(vec), expr)

    heap, done = [], set()

    def push_pairs(j):
        gj, uj = _lead(G[j])
        for i in range(j):
            gi, ui = _lead(G[i])
            if gi == gj:
                l = mono_lcm(ui, uj)
                heapq.heappush(heap, (sum(l), l, i, j))

    for j in range(len(G)):
        push_pairs(j)

    while heap:
        _deg, l, i, j = heapq.heappop(heap)
        if (i, j) in done:
            continue
        done.add((i, j))
        gcur = _lead(G[i])[0]
        if use_chain_criterion:
            # safe to drop the pair when a third lead divides the lcm and
            # both companion pairs were already treated (treatment times
            # are strictly earlier, so the justifications cannot cycle)
            skip = False
            for k in range(len(G)):
                if k == i or k == j:
                    continue
                gk, uk = _lead(G[k])
                if gk != gcur or not mono_divides(uk, l):
                    continue
                if ((min(i, k), max(i, k)) in done and
                        (min(j, k), max(j, k)) in done):
                    skip = True
                    break
            if skip:
                continue
        qi = mono_div(l, _lead(G[i])[1])
        qj = mono_div(l, _lead(G[j])[1])
        s = vec_sub(field, vec_mono_shift(field, G[i], qi, field.one),
                    vec_mono_shift(field, G[j], qj, field.one))
        track = E[i] is not None
        sexpr = None
        if track:
            sexpr = vec_sub(field, vec_mono_shift(field, E[i], qi, field.one),
                            vec_mono_shift(field, E[j], qj, field.one))

        steps = []
        leads = [_lead(g) for g in G]
        rem = _reduce_full(field, s, G, leads, on_step=steps.append)
        if track:
            for k, q, c in steps:
                sexpr = vec_sub(field, sexpr,
                                vec_mono_shift(field, E[k], q, c))
        if rem:
            add(rem, sexpr)
            push_pairs(len(G) - 1)

    # inter-reduce: minimal lead set, then tail reduction
    alive = set(range(len(G)))
    for k in sorted(alive, key=lambda k: term_key(_lead(G[k])), reverse=True):
        gk, uk = _lead(G[k])
        for m in alive:
            if m != k:
                gm, um = _lead(G[m])
                if gm == gk and mono_divides(um, uk):
                    alive.discard(k)
                    break

    order = sorted(alive, key=lambda k: term_key(_lead(G[k])), reverse=True)
    els = [G[k] for k in order]
    exs = [E[k] for k in order]
    leads = [_lead(g) for g in els]
    out_els, out_exs = [], []
    for g, ex in zip(els, exs):
        t = _lead(g)
        tail = dict(g)
        tail.pop(t)
        steps = []
        rtail = _reduce_full(field, tail, els, leads, on_step=steps.append)
        if ex is not None:
            for k, q, c in steps:
                ex = vec_sub(field, ex, vec_mono_shift(field, exs[k], q, c))
        rtail[t] = field.one
        out_els.append(rtail)
        out_exs.append(ex)
    return out_els, out_exs


class GroebnerBasis:
    def __init__(self, ring, module, elements, reduced=True):
        self.ring = ring
        self.module = module
        self.elements = list(elements)
        self.reduced = reduced

    def __repr__(self):
        return "GroebnerBasis(%d elements)" % len(self.elements)

    @property
    def leads(self):
        return [_lead(g) for g in self.elements]

    def contains(self, vec):
        return not normal_form(vec, self)


def buchberger(ring, module, gens, use_chain_criterion=True):
    """Reduced Groebner basis of the submodule generated by gens."""
    items = [(g, None) for g in gens if g]
    els, _ = _buchberger_core(ring, module, items, use_chain_criterion)
    return GroebnerBasis(ring, module, els)


def normal_form(f, G):
    """Remainder of f on division by G; no monomial divisible by a lead."""
    return _reduce_full(G.ring.field, f, G.elements, G.leads)

# --------------------------------------------------------------- syzygies


def _same_gi_pairs(leads):
    pairs = []
    for j in range(len(leads)):
        gj, uj = leads[j]
        for i in range(j):
            gi, ui = leads[i]
            if gi == gj:
                l = mono_lcm(ui, uj)
                pairs.append((sum(l), l, i, j))
    pairs.sort()
    return pairs


def _pruned_pairs(leads):
    """Same-position pairs minus chain-criterion-redundant ones.

    A pair whose lcm is divisible by a third lead term, with both companion
    pairs treated earlier, is dropped: its trace column is a combination of
    the companions' (treatment times strictly decrease along justifications,
    so unfolding them terminates), and the kept columns still generate.
    """
    done = set()
    for _deg, l, i, j in _same_gi_pairs(leads):
        done.add((i, j))
        gcur = leads[i][0]
        skip = False
        for k in range(len(leads)):
            if k == i or k == j:
                continue
            gk, uk = leads[k]
            if gk != gcur or not mono_divides(uk, l):
                continue
            if ((min(i, k), max(i, k)) in done and
                    (min(j, k), max(j, k)) in done):
                skip = True
                break
        if not skip:
            yield l, i, j


def syzygies(G):
    """Kernel of the evaluation map (free module on G's elements -> ambient).

    Columns come from S-pair reduction traces: for each same-position pair,
    the two lcm multipliers minus the division quotients, after chain-
    criterion pruning of redundant pairs.
    """
    ring, field = G.ring, G.ring.field
    els = G.elements
    leads = G.leads
    target = FreeModule([vec_bidegree(ring, G.module.gens, g) for g in els])
    cols, degs = [], []
    for l, i, j in _pruned_pairs(leads):
        qi = mono_div(l, leads[i][1])
        qj = mono_div(l, leads[j][1])
        s = vec_sub(field, vec_mono_shift(field, els[i], qi, field.one),
                    vec_mono_shift(field, els[j], qj, field.one))
        col = {(i, qi): field.one, (j, qj): field.neg(field.one)}
        steps = []
        rem = _reduce_full(field, s, els, leads, on_step=steps.append)
        assert not rem, "S-pair of a Groebner basis must reduce to zero"
        for k, q, c in steps:
            acc = field.sub(col.get((k, q), field.zero), c)
            if acc == 0:
                col.pop((k, q), None)
            else:
                col[(k, q)] = acc
        cols.append(col)
        la, lb = ring.mono_bidegree(l)
        ga, gb = G.module.gens[leads[i][0]]
        degs.append((la + ga, lb + gb))
    return ModuleMap(ring, FreeModule(degs), target, cols)


def column_syzygies(ring, module, cols, col_degs=None):
    """Kernel generators for the map (free on cols) -> module.

    Combines Schreyer syzygies of a tracked Groebner basis of the columns
    with the membership relations expressing each column through that basis.
    """
    field = ring.field
    if col_degs is None:
        col_degs = [vec_bidegree(ring, module.gens, c) for c in cols]
    syz_cols, syz_degs = [], []
    items = []
    for j, c in enumerate(cols):
        if c:
            items.append((dict(c), {(j, ring.zero_mono): field.one}))
        else:
            syz_cols.append({(j, ring.zero_mono): field.one})
            syz_degs.append(col_degs[j])
    els, exprs = _buchberger_core(ring, module, items, True)
    leads = [_lead(g) for g in els]

    for l, i, j in _pruned_pairs(leads):
        qi = mono_div(l, leads[i][1])
        qj = mono_div(l, leads[j][1])
        s = vec_sub(field, vec_mono_shift(field, els[i], qi, field.one),
                    vec_mono_shift(field, els[j], qj, field.one))
        sx = vec_sub(field, vec_mono_shift(field, exprs[i], qi, field.one),
                     vec_mono_shift(field, exprs[j], qj, field.one))
        steps = []
        rem = _reduce_full(field, s, els, leads, on_step=steps.append)
        assert not rem, "S-pair of a Groebner basis must reduce to zero"
        for k, q, c in steps:
            sx = vec_sub(field, sx, vec_mono_shift(field, exprs[k], q, c))
        if sx:
            la, lb = ring.mono_bidegree(l)
            ga, gb = module.gens[leads[i][0]]
            syz_cols.append(sx)
            syz_degs.append((la + ga, lb + gb))

    for j, c in enumerate(cols):
        if not c:
            continue
        rx = {(j, ring.zero_mono): field.one}
        steps = []
        rem = _reduce_full(field, c, els, leads, on_step=steps.append)
        assert not rem, "a generating column must reduce to zero"
        for k, q, cc in steps:
            rx = vec_sub(field, rx, vec_mono_shift(field, exprs[k], q, cc))
        if rx:
            syz_cols.append(rx)
            syz_degs.append(col_degs[j])

    return ModuleMap(ring, FreeModule(syz_degs), FreeModule(col_degs),
                     syz_cols)

# -------------------------------------------------- presentation utilities


def ideal_presentation(ring, polys):
    """Present the submodule of R generated by the given polynomials:
    one generator per (nonzero, bihomogeneous) input, relations their
    syzygies."""
    items = [p for p in polys if p.terms]
    if not items:
        raise ValueError("need at least one nonzero generator")
    degs = [p.bidegree() for p in items]
    cols = [vec_from_poly(p) for p in items]
    rels = column_syzygies(ring, FreeModule([(0, 0)]), cols, col_degs=degs)
    return Presentation(ring, rels.target, rels)


def presentation_gb(M):
    if "gb" not in M._cache:
        M._cache["gb"] = buchberger(M.ring, M.f0, M.relations.cols)
    return M._cache["gb"]


def graded_piece(M, d):
    """Standard-monomial basis of M at bidegree d, and its dimension."""
    d = (int(d[0]), int(d[1]))
    key = ("piece", d)
    if key not in M._cache:
        leads = presentation_gb(M).leads
        basis = [(gi, e) for gi, e in M.f0.piece_basis(M.ring, d)
                 if not any(lgi == gi and mono_divides(lu, e)
                            for lgi, lu in leads)]
        M._cache[key] = basis
    basis = M._cache[key]
    return basis, len(basis)


def presentation_dim(M, d):
    return graded_piece(M, d)[1]


def multiplication_matrix(M, mono, d):
    """Matrix of multiplication by x^mono from M_d, over standard bases.

    Returns (entries, target basis, source basis) with entries as
    (row, col, coeff) triples.
    """
    d = (int(d[0]), int(d[1]))
    key = ("mult", mono, d)
    if key not in M._cache:
        ring = M.ring
        field = ring.field
        gb = presentation_gb(M)
        src, _ = graded_piece(M, d)
        ma, mb = ring.mono_bidegree(mono)
        tgt, _ = graded_piece(M, (d[0] + ma, d[1] + mb))
        tindex = {t: i for i, t in enumerate(tgt)}
        entries = []
        for ci, (gi, e) in enumerate(src):
            w = _reduce_full(field, {(gi, mono_mul(e, mono)): field.one},
                             gb.elements, gb.leads)
            entries.extend((tindex[t], ci, c) for t, c in w.items())
        M._cache[key] = (entries, tgt, src)
    return M._cache[key]

# --------------------------------------------------------------- saturation


def ideal_quotient(ring, module, ngens, ideal_polys):
    """Generators of (N : I) = {v : f*v in N for every f in I} in the
    ambient free module, N generated by ngens, I by ideal_polys.

    Computed from one syzygy call on a stacked module: one block per ideal
    generator, columns (f_1 v, ..., f_L v) for each ambient generator v
    plus each N-generator placed in each block; kernel elements project to
    the colon module on the first block of columns.
    """
    rank = module.rank
    big_gens, cols, degs = [], [], []
    for g in ideal_polys:
        da, db = g.bidegree()
        big_gens.extend((a - da, b - db) for a, b in module.gens)

    def idx(l, j):
        return l * rank + j

    bigF = FreeModule(big_gens)
    for j in range(rank):
        col = {}
        for l, g in enumerate(ideal_polys):
            for mono, c in g.terms.items():
                col[(idx(l, j), mono)] = c
        cols.append(col)
        degs.append(module.gens[j])
    for l, g in enumerate(ideal_polys):
        da, db = g.bidegree()
        for n in ngens:
            na, nb = vec_bidegree(ring, module.gens, n)
            cols.append({(idx(l, j), u): c for (j, u), c in n.items()})
            degs.append((na - da, nb - db))
    syz = column_syzygies(ring, bigF, cols, degs)
    out = []
    for col in syz.cols:
        v = {t: c for t, c in col.items() if t[0] < rank}
        if v:
            out.append(v)
    return out


def saturate(M, ideal_gens):
    """Presentation of the torsion submodule {v in M : I^N v = 0 for some N}."""
    ring = M.ring
    field = ring.field
    F = M.f0
    polys = [p for p in ideal_gens if p is not None and not p.is_zero()]
    ngens0 = [dict(c) for c in M.relations.cols if c]
    if not polys:
        # the zero ideal kills everything, so the torsion module is all of M
        src = FreeModule(M.relations.source.gens)
        rels = ModuleMap(ring, src, F, [dict(c) for c in M.relations.cols])
        return Presentation(ring, F, rels)
    for p in polys:
        p.bidegree()

    cur = ngens0
    while True:
        nxt = ideal_quotient(ring, F, cur, polys)
        gb_cur = buchberger(ring, F, cur)
        fresh = [v for v in nxt
                 if _reduce_full(field, v, gb_cur.elements, gb_cur.leads)]
        if not fresh:
            break
        cur = nxt

    gb0 = buchberger(ring, F, ngens0)
    kept = [v for v in cur
            if _reduce_full(field, v, gb0.elements, gb0.leads)]
    if not kept:
        return Presentation(ring, FreeModule([]))
    kept_degs = [vec_bidegree(ring, F.gens, v) for v in kept]
    all_cols = kept + ngens0
    all_degs = kept_degs + [vec_bidegree(ring, F.gens, n) for n in ngens0]
    syz = column_syzygies(ring, F, all_cols, all_degs)
    r = len(kept)
    rel_cols, rel_degs = [], []
    for col, dg in zip(syz.cols, syz.source.gens):
        v = {t: c for t, c in col.items() if t[0] < r}
        if v:
            rel_cols.append(v)
            rel_degs.append(dg)
    f0 = FreeModule(kept_degs)
    pres = Presentation(ring, f0,
                        ModuleMap(ring, FreeModule(rel_degs), f0, rel_cols))
    pres._cache["inclusion"] = kept
    return pres

# ------------------------------------------------------------ standard pairs

StandardPair = namedtuple("StandardPair", ["gen", "mono", "free"])


def standard_pairs(ring, rank, leads):
    """Cone cover of the standard monomials of a monomial submodule.

    Each pair (gen, mono, free) marks the cone mono * (free variables)^N
    over that generator; every monomial outside the lead-term submodule
    lies in at least one cone and every cone avoids the submodule.
    """
    nv = ring.nvars
    out = []
    for gi in range(rank):
        gens_gi = [e for g, e in leads if g == gi]
        cands = []
        for mask in range(1 << nv):
            F = frozenset(v for v in range(nv) if mask >> v & 1)
            proj = []
            unit = False
            for e in gens_gi:
                pe = tuple(0 if v in F else e[v] for v in range(nv))
                if not any(pe):
                    unit = True
                    break
                proj.append(pe)
            if unit:
                continue
            proj.sort(key=lambda q: (sum(q), q))
            jmin = []
            for pe in proj:
                if not any(all(q[v] <= pe[v] for v in range(nv)) for q in jmin):
                    jmin.append(pe)
            # apex exponents are bounded by the largest exponent a
            # generator shows in each non-free direction
            ranges = []
            for v in range(nv):
                if v in F:
                    ranges.append(range(1))
                else:
                    ranges.append(range(max((q[v] for q in jmin), default=0)
                                        or 1))
            for u in itertools.product(*ranges):
                if any(all(q[v] <= u[v] for v in range(nv)) for q in jmin):
                    continue
                cands.append((u, F))
        for u, F in cands:
            contained = any(
                (u2, F2) != (u, F) and F <= F2 and
                all(u[v] == u2[v] for v in range(nv) if v not in F2)
                for u2, F2 in cands)
            if not contained:
                out.append(StandardPair(gi, u, F))
    return out


def module_standard_pairs(M):
    if "std_pairs" not in M._cache:
        gb = presentation_gb(M)
        M._cache["std_pairs"] = standard_pairs(M.ring, M.f0.rank, gb.leads)
    return M._cache["std_pairs"]

# ---------------------------------------------------- vanishing on up-sets


def _upset_cone_point(a0, b0, fx, fy, A, B, C):
    """A point of the cone shadow inside {k>=A, k'>=B, k+k'>=C}, or None."""
    if fx and fy:
        k = max(a0, A)
        kp = max(b0, B) if C is None else max(b0, B, C - k)
        return (k, kp)
    if fx:
        if b0 < B:
            return None
        k = max(a0, A) if C is None else max(a0, A, C - b0)
        return (k, b0)
    if fy:
        if a0 < A:
            return None
        kp = max(b0, B) if C is None else max(b0, B, C - a0)
        return (a0, kp)
    if a0 >= A and b0 >= B and (C is None or a0 + b0 >= C):
        return (a0, b0)
    return None


def upset_nonvanishing_witness(M, region):
    """A bidegree in the up-set where M is nonzero, or None if M vanishes
    on the whole region.  Exact: the cones of the standard-pair cover have
    bidegree shadows apex + N(1,0) + N(0,1) (per available free block),
    and a nonzero graded piece is exactly a cone point in the region."""
    A, B, C = upset_bounds(region)
    ring = M.ring
    nx = ring.nx
    for sp in module_standard_pairs(M):
        ga, gb = M.f0.gens[sp.gen]
        ua, ub = ring.mono_bidegree(sp.mono)
        fx = any(v < nx for v in sp.free)
        fy = any(v >= nx for v in sp.free)
        pt = _upset_cone_point(ga + ua, gb + ub, fx, fy, A, B, C)
        if pt is not None:
            return pt
    return None


def vanishes_on_upset(M, region):
    """True iff every graded piece of M over the up-set region is zero."""
    return upset_nonvanishing_witness(M, region) is None
