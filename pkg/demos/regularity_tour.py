"""Tour of the regularity machinery: strong checks from Betti tables,
the frontier of minimal regular pairs, weak checks from cohomology
vanishing, and the multiplication maps they make surjective.
"""

from bigraded.groebner import ideal_presentation
from bigraded.modules import free_presentation, quotient_presentation
from bigraded.regularity import (classical_reduction_check,
                                 multiplication_surjectivity,
                                 strong_regularity_check,
                                 strong_regularity_frontier,
                                 vc_window_verify, weak_regularity_check)
from bigraded.ring import make_ring


def main():
    R11 = make_ring(1, 1)
    x0, x1, y0, y1 = (R11.var(v) for v in range(4))
    products = [x0 * y0, x0 * y1, x1 * y0, x1 * y1]
    m = ideal_presentation(R11, products)

    print("frontiers (the minimal strongly regular pairs):")
    for title, M in [("R", free_presentation(R11, [(0, 0)])),
                     ("R(-1,-2)", free_presentation(R11, [(1, 2)])),
                     ("products ideal", m),
                     ("quotient by all products",
                      quotient_presentation(R11, products))]:
        print("  %-26s %s" % (title, strong_regularity_frontier(M)))
    print()

    v = strong_regularity_check(m, 0, 1)
    print("products ideal at (0,1): strong=%s, witnesses=%s"
          % (v.value, v.witnesses))
    v = strong_regularity_check(m, 1, 1)
    print("products ideal at (1,1): strong=%s" % v.value)
    print()

    v = weak_regularity_check(m, 1, 1)
    print("weak check at (1,1): value=%s method=%s certified=%s"
          % (v.value, v.method, v.certified))
    v = weak_regularity_check(m, 1, 1, require_edge_vanishing=True)
    print("with edge-quadrant hypotheses too:", v.value)
    print()

    print("surjective multiplication out of regular degrees:")
    for step in [(1, 0), (0, 1), (1, 1), (2, 1)]:
        ok = multiplication_surjectivity(m, (1, 1), step)
        print("  (1,1) -> (%d,%d): %s" % (1 + step[0], 1 + step[1], ok))
    print()

    rep = vc_window_verify(m, 0, 1, 1, (-2, 2, -2, 2))
    print("vanishing-window verification at (1,1):", rep)
    print()

    # the x-power times y-power family reduces to one projective factor
    P01 = make_ring(0, 1)
    M = ideal_presentation(
        P01, [P01.monomial((2, 1 - j, j)) for j in range(2)])
    print("x0^2*(y0,y1) on P^0 x P^1:")
    print("  frontier:", strong_regularity_frontier(M))
    print("  classical comparison:", classical_reduction_check(M))


if __name__ == "__main__":
    main()
