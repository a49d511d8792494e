"""A scripted run through the command-line interface.

Every subcommand reads a plain-text presentation (see inputs/) and
prints either a human-readable report or, with --json, a stable
machine-readable one.  Exit codes: 0 = property holds, 1 = it fails,
2 = undecided at the chosen cutoff, 3 = bad input.
"""

import os

from bigraded.cli import main

HERE = os.path.dirname(os.path.abspath(__file__))


def run(*argv):
    print("$ bigraded " + " ".join(argv))
    rc = main(list(argv))
    print("(exit %d)" % rc)
    print()
    return rc


def doc(name):
    return os.path.join(HERE, "inputs", name)


if __name__ == "__main__":
    run("betti", doc("products_ideal.txt"))
    run("frontier", doc("products_ideal.txt"), "--json")
    run("reg-strong", doc("products_ideal.txt"), "--p", "0", "--pp", "1")
    run("reg-weak", doc("twisted_free.txt"), "--p", "1", "--pp", "2")
    run("lc", doc("axes_quotient.txt"), "--ideal", "irr", "--i", "0",
        "--window", "-2:2,-2:2")
    run("sheaf", "--m", "1", "--n", "1", "--a", "0", "--b", "-2", "--i", "1",
        "--window", "-1:1,-1:1")
    run("region", "--kind", "St", "--i", "2", "--window", "-4:1,-4:1")
    run("mult", doc("products_ideal.txt"), "--from", "1,1", "--step", "1,1")
    run("verify", doc("products_ideal.txt"))
    run("frontier", doc("power_ideal.txt"))
