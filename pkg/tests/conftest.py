"""Shared rings and the standard module corpus used across the suite."""

import random

import pytest

from bigraded.groebner import ideal_presentation
from bigraded.modules import free_presentation, quotient_presentation
from bigraded.ring import make_ring


def irrelevant_gens(ring):
    """The products x_i * y_j generating the irrelevant ideal."""
    return [ring.var(i) * ring.var(ring.nx + j)
            for i in range(ring.nx) for j in range(ring.ny)]


def seeded_minors_polys(ring):
    """The three 2x2 minors of a seeded random 2x3 matrix of
    bidegree-(1,1) forms; the seed pins the polynomials exactly."""
    rng = random.Random(20260816)
    monos = ring.monomials((1, 1))
    mat = [[ring.from_terms([(e, ring.field.of(rng.randrange(1, 32003)))
                             for e in monos]) for _ in range(3)]
           for _ in range(2)]
    return [mat[0][i] * mat[1][j] - mat[0][j] * mat[1][i]
            for i, j in ((0, 1), (0, 2), (1, 2))]


def seeded_minors(ring):
    return ideal_presentation(ring, seeded_minors_polys(ring))


def monomial_ideal(ring, exponent_lists):
    """Ideal presentation from explicit exponent tuples."""
    return ideal_presentation(ring, [ring.monomial(e) for e in exponent_lists])


@pytest.fixture(scope="session")
def P11():
    return make_ring(1, 1)


@pytest.fixture(scope="session")
def P12():
    return make_ring(1, 2)


@pytest.fixture(scope="session")
def P01():
    """K[x0, y0, y1]: one x variable, two y variables."""
    return make_ring(0, 1)


@pytest.fixture(scope="session")
def P11q():
    return make_ring(1, 1, field="q")


def _x_power_times_y_power(ring, t, s):
    """The ideal x0^t * (y0, y1)^s in K[x0, y0, y1]."""
    polys = []
    for j in range(s + 1):
        e = (t, s - j, j)
        polys.append(ring.monomial(e))
    return ideal_presentation(ring, polys)


TWIST_RANGE = [(a, b) for a in range(-2, 3) for b in range(-2, 3)]

CORPUS_NAMES = (
    ["R"]
    + ["R(%d,%d)" % ab for ab in TWIST_RANGE if ab != (0, 0)]
    + ["m[P1xP1]", "m[P1xP2]", "(x0y0)", "(x0^2y0y1)", "R/m", "R/(x0y0)"]
    + ["x0^%d(y0,y1)^%d" % (t, s)
       for t in (1, 2, 3) for s in (1, 2, 3)]
    + ["minors2x3"]
)


@pytest.fixture(scope="session")
def corpus(P11, P12, P01):
    """name -> Presentation for the standard corpus, all over F_32003."""
    x0, x1, y0, y1 = (P11.var(i) for i in range(4))
    mods = {"R": free_presentation(P11, [(0, 0)])}
    for a, b in TWIST_RANGE:
        if (a, b) != (0, 0):
            # R(a,b): the rank-one free module generated in bidegree (-a,-b)
            mods["R(%d,%d)" % (a, b)] = free_presentation(P11, [(-a, -b)])
    mods["m[P1xP1]"] = ideal_presentation(P11, irrelevant_gens(P11))
    mods["m[P1xP2]"] = ideal_presentation(P12, irrelevant_gens(P12))
    mods["(x0y0)"] = ideal_presentation(P11, [x0 * y0])
    mods["(x0^2y0y1)"] = ideal_presentation(P11, [x0 * x0 * y0 * y1])
    mods["R/m"] = quotient_presentation(P11, irrelevant_gens(P11))
    mods["R/(x0y0)"] = quotient_presentation(P11, [x0 * y0])
    for t in (1, 2, 3):
        for s in (1, 2, 3):
            mods["x0^%d(y0,y1)^%d" % (t, s)] = _x_power_times_y_power(P01, t, s)
    mods["minors2x3"] = seeded_minors(P11)
    assert sorted(mods) == sorted(CORPUS_NAMES)
    return mods
