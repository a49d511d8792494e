"""ASCII pictures of the degree regions that control regularity.

Three families appear throughout the package: the staircase St_i (the
finite anti-diagonal of points whose sheaf cohomology must vanish in
homological degree i), the up-set Reg_i it generates, and the down-set
DReg_i that bounds the twists allowed in a resolution.  The gallery
prints each over a small window and then runs the library's own
shift-identity check.
"""

from bigraded.regions import (dreg, reg, region_ascii,
                              region_shift_properties_check, st)

WINDOW = (-6, 6, -6, 6)


def show(title, R):
    print(title)
    for line in region_ascii(R, WINDOW).splitlines():
        print("  " + line)
    print()


def main():
    for i in (-1, 0, 2):
        show("staircase St_%d at the origin" % i, st(i))
    show("up-set Reg_0 at the origin", reg(0))
    show("up-set Reg_2 based at (-1,-2)", reg(2, -1, -2))
    show("down-set DReg_0 at the origin", dreg(0))
    show("down-set DReg_2 at the origin", dreg(2))

    print("shift identities over %s:" % (WINDOW,))
    for i, p, pp in [(-1, 0, 0), (0, 1, -1), (2, -2, 3)]:
        rep = region_shift_properties_check(i, p, pp, WINDOW)
        print("  i=%2d base=(%d,%d): ok=%s  %s"
              % (i, p, pp, rep["ok"],
                 " ".join("%s=%s" % kv for kv in sorted(rep["items"].items()))))


if __name__ == "__main__":
    main()
