"""Minimal free resolutions and Betti tables for a few standard modules
over the bigraded coordinate ring of P^1 x P^1.
"""

from bigraded.groebner import ideal_presentation
from bigraded.modules import quotient_presentation
from bigraded.regularity import module_betti
from bigraded.ring import make_ring


def show(title, betti):
    print(title)
    for level in sorted(betti):
        counts = {}
        for deg in betti[level]:
            counts[deg] = counts.get(deg, 0) + 1
        row = "  ".join("(%d,%d)x%d" % (d[0], d[1], c)
                        for d, c in sorted(counts.items()))
        print("  level %d: %s" % (level, row))
    print()


def main():
    R = make_ring(1, 1)  # K[x0,x1,y0,y1] over F_32003
    x0, x1, y0, y1 = (R.var(v) for v in range(4))
    products = [x0 * y0, x0 * y1, x1 * y0, x1 * y1]

    show("ideal of all products x_i*y_j",
         module_betti(ideal_presentation(R, products)))
    show("quotient by the products ideal (supported on the two axes)",
         module_betti(quotient_presentation(R, products)))
    show("principal ideal (x0*y0)",
         module_betti(ideal_presentation(R, [x0 * y0])))
    show("quotient by a (1,1)-form",
         module_betti(quotient_presentation(R, [x0 * y1 - x1 * y0])))

    # a complete intersection of two general (1,1)-forms
    f = x0 * y0 + (x1 * y1).scale(R.field.of(2))
    g = x0 * y1 + (x1 * y0).scale(R.field.of(3))
    show("quotient by two general (1,1)-forms",
         module_betti(quotient_presentation(R, [f, g])))


if __name__ == "__main__":
    main()
