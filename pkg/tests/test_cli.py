import io
import json

import pytest

from bigraded.cli import _merge_negative_values, main, parse_input
from bigraded.errors import InputError, NotBihomogeneous
from bigraded.regularity import module_betti

M_DOC = "ring field=32003 m=1 n=1\nideal: x0*y0; x0*y1; x1*y0; x1*y1\n"
R_DOC = "ring field=32003 m=1 n=1\nmodule: gens=(0,0)\n"
Q_DOC = ("ring field=32003 m=1 n=1\n"
         "module: gens=(0,0) rels: x0*y0*e1; x0*y1*e1; x1*y0*e1; x1*y1*e1\n")


@pytest.fixture
def doc(tmp_path):
    def write(text, name="in.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, argv):
    rc = main(argv)
    return rc, capsys.readouterr().out


# ------------------------------------------------------------------ parsing


def test_parse_ideal_document():
    ring, M, meta = parse_input(M_DOC)
    assert meta == {"field": 32003, "m": 1, "n": 1}
    assert M.f0.gens == ((1, 1),) * 4


def test_parse_rational_field_and_powers():
    ring, M, meta = parse_input("ring field=q m=0 n=1\n"
                                "ideal: x0^2*y0; x0^2*y1")
    assert meta["field"] == "q"
    assert M.f0.gens == ((2, 1), (2, 1))


def test_parse_module_document_with_comments_and_continuation():
    text = ("ring field=32003 m=1 n=1\n"
            "# the presentation may continue over lines\n"
            "module: gens=(0,0)\n"
            "  rels: x0*y0*e1;\n"
            "   x0*y1*e1\n")
    ring, M, meta = parse_input(text)
    assert M.f0.gens == ((0, 0),)
    assert M.relations.source.gens == ((1, 1), (1, 1))


def test_parse_signed_generator_degrees():
    ring, M, _ = parse_input("ring field=32003 m=1 n=1\n"
                             "module: gens=(-1,2),(0,0)")
    assert M.f0.gens == ((-1, 2), (0, 0))


def test_parse_errors_carry_positions():
    cases = [
        ("ring field=32003 m=1 n=1\nideal: x0*y9",
         InputError, "line 2, col 11: unknown variable 'y9'"),
        ("ring field=32003 m=1 n=1\nideal: x0+y0",
         NotBihomogeneous,
         "line 2, col 8: ideal generator is not bihomogeneous"),
        ("ring field=32003 m=1 n=1\nideal: x0*y0 - x0*y0",
         InputError, "line 2, col 8: ideal generator is zero after reduction"),
        ("ring field=32003 m=1 n=1\n"
         "module: gens=(0,0),(1,0) rels: x0*e1 + y0*e2",
         NotBihomogeneous,
         "line 2, col 32: relation terms do not share a bidegree"),
        ("ring field=32003 m=1 n=1\nmodule: gens=(0,0) rels: x0*y0*e2",
         InputError, "line 2, col 32: generator index e2 out of range 1..1"),
        ("ideal: x0", InputError, "line 1: expected a ring declaration first"),
        ("ring field=32003 m=1 n=1", InputError,
         "no 'ideal:' or 'module:' declaration"),
        ("ring field=32003 m=1\nideal: x0", InputError,
         "line 1: ring declaration is missing n"),
    ]
    for text, exc, message in cases:
        with pytest.raises(exc) as info:
            parse_input(text)
        assert str(info.value) == message


# -------------------------------------------------------------- subcommands


def test_betti_ascii_and_exit(doc, capsys):
    rc, out = run(capsys, ["betti", doc(M_DOC)])
    assert rc == 0
    assert out == ("level 0: (1,1)x4\n"
                   "level 1: (1,2)x2 (2,1)x2\n"
                   "level 2: (2,2)x1\n")


def test_betti_json_round_trip(doc, capsys):
    rc, out = run(capsys, ["betti", doc(M_DOC), "--json"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["ring"] == {"field": 32003, "m": 1, "n": 1}
    ring, M, _ = parse_input(M_DOC)
    betti = module_betti(M)
    rebuilt = {int(d): sorted(sum([[(a, b)] * mult for a, b, mult in rows], []))
               for d, rows in payload["betti"].items()}
    assert rebuilt == {d: sorted(betti[d]) for d in betti}


def test_quotient_betti(doc, capsys):
    rc, out = run(capsys, ["betti", doc("ring field=32003 m=1 n=1\n"
                                        "module: gens=(0,0) rels: x0*y0*e1")])
    assert rc == 0
    assert out == "level 0: (0,0)x1\nlevel 1: (1,1)x1\n"


def test_frontier_output(doc, capsys):
    path = doc(M_DOC)
    rc, out = run(capsys, ["frontier", path])
    assert (rc, out) == (0, "[(1,1)]\n")
    rc, out = run(capsys, ["frontier", path, "--json"])
    assert json.loads(out)["frontier"] == [[1, 1]]


def test_reg_strong_verdicts_and_witnesses(doc, capsys):
    path = doc(M_DOC)
    rc, out = run(capsys, ["reg-strong", path, "--p", "1", "--pp", "1"])
    assert rc == 0 and out.startswith("strong regularity at (1,1): true")
    rc, out = run(capsys, ["reg-strong", path, "--p", "0", "--pp", "1"])
    assert rc == 1
    assert out == ("strong regularity at (0,1): false\n"
                   "witness: level 0 bidegree (1,1) multiplicity 4\n"
                   "witness: level 1 bidegree (1,2) multiplicity 2\n"
                   "witness: level 1 bidegree (2,1) multiplicity 2\n"
                   "witness: level 2 bidegree (2,2) multiplicity 1\n")


def test_reg_weak_verdicts(doc, capsys):
    rc, out = run(capsys, ["reg-weak", doc(R_DOC), "--p", "0", "--pp", "0"])
    assert rc == 0 and "weak regularity at (0,0): true" in out

    rc, out = run(capsys, ["reg-weak", doc(R_DOC, "u.txt"), "--p", "0",
                           "--pp", "0", "--nu-max", "2"])
    assert rc == 2
    assert "weak regularity at (0,0): undecided" in out
    assert "undecided: H^1 at (0,0)" in out

    shifted = "ring field=32003 m=1 n=1\nmodule: gens=(1,0)\n"
    rc, out = run(capsys, ["reg-weak", doc(shifted, "s.txt"),
                           "--p", "0", "--pp", "0"])
    assert rc == 1 and "witness: H^3 at (-1,-2) dim 1" in out


def test_reg_weak_edges_flag(doc, capsys):
    rc, _ = run(capsys, ["reg-weak", doc(Q_DOC), "--p", "0", "--pp", "1",
                         "--edges"])
    assert rc == 1
    rc, _ = run(capsys, ["reg-weak", doc(Q_DOC, "p.txt"),
                         "--p", "0", "--pp", "1"])
    assert rc == 0


def test_lc_grid_matches_kunneth_dictionary(doc, capsys):
    rc, out = run(capsys, ["lc", doc(R_DOC), "--ideal", "irr", "--i", "2",
                           "--window", "-2:0,-2:0", "--json"])
    assert rc == 0
    grid = json.loads(out)["grid"]
    assert grid == {"i": 2, "window": [-2, 0, -2, 0], "uncertified": [],
                    "dims": [[0, 0, 1], [0, 0, 0], [1, 0, 0]]}


def test_lc_uncertified_exit(doc, capsys):
    rc, out = run(capsys, ["lc", doc(R_DOC), "--ideal", "irr", "--i", "2",
                           "--window", "0:0,-2:-2", "--nu-max", "2"])
    assert rc == 2 and "?" in out


def test_sheaf_grid(capsys):
    rc, out = run(capsys, ["sheaf", "--m", "1", "--n", "1", "--a", "0",
                           "--b", "-2", "--i", "1", "--window", "-1:1,-1:1"])
    assert rc == 0
    assert out == ("H^1 of O(0,-2) twists over the window\n"
                   " 1 |  .  .  .\n"
                   " 0 |  .  1  2\n"
                   "-1 |  .  2  4\n"
                   "   +---------\n"
                   "     -1  0  1\n")


def test_region_picture_and_json(capsys):
    rc, out = run(capsys, ["region", "--kind", "St", "--i", "2",
                           "--p", "0", "--pp", "0", "--window", "-4:1,-4:1"])
    assert rc == 0
    assert out == "......\n......\n..#...\n...#..\n......\n......\n"
    rc, out = run(capsys, ["region", "--kind", "St", "--i", "2",
                           "--p", "0", "--pp", "0", "--window", "-4:1,-4:1",
                           "--json"])
    dims = json.loads(out)["grid"]["dims"]
    assert dims[2][3] == 1 and dims[3][2] == 1
    assert sum(sum(row) for row in dims) == 2


def test_region_requires_level_for_staircase(capsys):
    rc = main(["region", "--kind", "St", "--window", "-1:1,-1:1"])
    assert rc == 3


def test_mult_exit_codes(doc, capsys):
    path = doc(M_DOC)
    rc, out = run(capsys, ["mult", path, "--from", "1,1", "--step", "1,0"])
    assert (rc, out) == (0, "surjective: true\n")
    free2 = "ring field=32003 m=1 n=1\nmodule: gens=(0,0),(2,0)\n"
    rc, out = run(capsys, ["mult", doc(free2, "f.txt"),
                           "--from", "1,0", "--step", "1,0"])
    assert (rc, out) == (1, "surjective: false\n")
    rc = main(["mult", path, "--from", "1,1", "--step", "-1,0"])
    assert rc == 3


def test_verify_suite(doc, capsys):
    rc, out = run(capsys, ["verify", doc(M_DOC)])
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines == ["resolution-composites-vanish: ok",
                     "resolution-euler-characteristic: ok",
                     "strong-at-frontier: ok",
                     "frontier-minimality: ok",
                     "weak-at-frontier: ok",
                     "mult-surjectivity: ok"]

    rc, out = run(capsys, ["verify", doc(Q_DOC, "q.txt")])
    assert rc == 0
    assert "mult-surjectivity: skipped" in out

    rc, out = run(capsys, ["verify", doc(R_DOC, "r.txt"), "--nu-max", "2"])
    assert rc == 2 and "weak-at-frontier: undecided" in out


# -------------------------------------------------------------- plumbing


def test_default_output_is_deterministic(doc, capsys):
    path = doc(M_DOC)
    outs = set()
    for _ in range(2):
        rc, out = run(capsys, ["betti", path])
        outs.add(out)
        rc, out = run(capsys, ["betti", path, "--json"])
        outs.add(out)
    assert len(outs) == 2


def test_merge_negative_values_unit():
    argv = ["region", "--kind", "St", "--window", "-4:1,-4:1",
            "--seed", "-3"]
    assert _merge_negative_values(argv) == [
        "region", "--kind", "St", "--window=-4:1,-4:1", "--seed", "-3"]


def test_seed_flag_accepted(doc, capsys):
    rc, _ = run(capsys, ["betti", doc(M_DOC), "--seed", "7"])
    assert rc == 0


def test_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(M_DOC))
    rc, out = run(capsys, ["frontier", "-"])
    assert (rc, out) == (0, "[(1,1)]\n")


def test_missing_file_is_input_error(capsys):
    assert main(["betti", "/no/such/file.txt"]) == 3


def test_bad_window_is_input_error(doc, capsys):
    assert main(["lc", doc(R_DOC), "--ideal", "irr", "--i", "2",
                 "--window", "3:1,0:0"]) == 3


def test_unknown_subcommand_exits_three(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 3
