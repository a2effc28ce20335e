import json
import subprocess
import sys

import pytest

from gentlesurf.cli import run


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def js(capsys, *argv):
    code, out, _ = call(capsys, *argv)
    return code, json.loads(out)


def test_invariants(capsys, fixtures_dir):
    code, d = js(capsys, "surface", "invariants", fixtures_dir / "sphere3.tri")
    assert code == 0
    assert (d["g"], d["b"], d["c"]) == (0, 3, 3)


def test_flip_writes_file(capsys, fixtures_dir, tmp_path):
    out = tmp_path / "flipped.tri"
    code, d = js(capsys, "surface", "flip", fixtures_dir / "octagon.tri", "--arc", "d74", "-o", out)
    assert code == 0 and d["written"] == str(out) and d["old_arc"] == "d74"
    code, inv = js(capsys, "surface", "invariants", out)
    assert code == 0 and inv["n"] == 5


def test_flip_boundary_arc_is_domain_error(capsys, fixtures_dir):
    code, out, err = call(capsys, "surface", "flip", fixtures_dir / "square.tri", "--arc", "987")
    assert code == 1
    assert json.loads(out)["error"] == "NotInternalArc" and "NotInternalArc" in err


def test_gen_and_mutate(capsys, fixtures_dir, tmp_path):
    disc = tmp_path / "disc.tri"
    assert call(capsys, "surface", "gen", "disc", "--points", 6, "-o", disc)[0] == 0
    code, d = js(capsys, "quiver", "build", disc)
    assert code == 0 and len(d["document"]["arrows"]) == 2
    code, d = js(capsys, "quiver", "mutate", fixtures_dir / "a3_linear.json", "--vertex", 2)
    assert code == 0
    assert sorted(map(tuple, ([s, t] for _, s, t in d["document"]["arrows"]))) == [(1, 3), (2, 1), (3, 2)]
    code, d = js(capsys, "quiver", "mutate", fixtures_dir / "a3_linear.json", "--vertex", 99)
    assert code == 1 and d["error"] == "UnknownVertex"


def test_gen_annulus_requires_parameters(capsys):
    assert call(capsys, "surface", "gen", "annulus", "--p", 2)[0] == 2


def test_matrix(capsys, fixtures_dir):
    code, d = js(capsys, "quiver", "matrix", fixtures_dir / "a3_linear.json")
    assert code == 0
    m = d["matrix"]
    assert all(m[i][j] == -m[j][i] for i in range(3) for j in range(3))


@pytest.mark.parametrize("name,ok", [("a3_linear", True), ("g1_three_in", False), ("g4_two_free", False)])
def test_check_gentle(capsys, fixtures_dir, name, ok):
    code, d = js(capsys, "algebra", "check-gentle", fixtures_dir / f"{name}.json")
    assert code == 0 and d["gentle"] is ok


def test_classify_and_relext(capsys, fixtures_dir, tmp_path):
    code, d = js(capsys, "algebra", "classify", fixtures_dir / "tilted_atilde.json")
    assert code == 0 and d["tilted"]["tag"] == "TypeAtilde"
    out = tmp_path / "ext.json"
    assert call(capsys, "algebra", "relext", fixtures_dir / "tilted_atilde.json", "-o", out)[0] == 0
    code, d = js(capsys, "algebra", "classify", out)
    assert d["cluster_tilted"]["tag"] == "TypeAtilde"
    code, d = js(capsys, "algebra", "relext", fixtures_dir / "double_zero_example.json")
    assert code == 1 and d["error"] == "NotTiltedAOrAtilde"


def test_reconstruct(capsys, fixtures_dir, tmp_path):
    out = tmp_path / "r.tri"
    assert call(capsys, "algebra", "reconstruct", fixtures_dir / "sphere3_quiver.json", "-o", out)[0] == 0
    code, inv = js(capsys, "surface", "invariants", out)
    assert (inv["g"], inv["b"], inv["c"]) == (0, 3, 3)


def test_modules(capsys, fixtures_dir):
    code, d = js(capsys, "modules", "bands", fixtures_dir / "sphere3_quiver.json", "--max-len", 4)
    assert code == 0 and len(d["bands"]) == 3
    code, d = js(capsys, "modules", "growth", fixtures_dir / "sphere3.tri", "--max-len", 8)
    assert d["class"] == "NonPolynomial"
    code, d = js(capsys, "modules", "strings", fixtures_dir / "a3_linear.json", "--max-len", 3)
    assert len(d["strings"]) == 6
    code, d = js(capsys, "modules", "gorenstein", fixtures_dir / "elevengon_quiver.json")
    assert code == 0 and d["ok"]


def test_curves(capsys, fixtures_dir):
    tri = fixtures_dir / "sphere3.tri"
    code, d = js(capsys, "curves", "from-string", tri, "--word", "ea1")
    assert code == 0
    c = d["curve"]
    code, d = js(capsys, "curves", "to-string", tri, "--crossings", ",".join(map(str, c["crossings"])),
                 "--from", c["from"], "--to", c["to"])
    assert code == 0 and d["word"] == "ea1"
    code, d = js(capsys, "curves", "to-string", tri, "--crossings", "a1,a1", "--from", c["from"], "--to", c["to"])
    assert code == 1 and d["error"] == "NotReduced"
    code, out, _ = call(capsys, "curves", "to-string", tri, "--crossings", "a1", "--from", "x", "--to", 1)
    assert code == 2


def test_plain_format(capsys, fixtures_dir):
    code, out, _ = call(capsys, "surface", "invariants", fixtures_dir / "square.tri", "--format", "plain")
    assert code == 0 and "g: 0" in out


def test_usage_errors(capsys, tmp_path):
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "surface", "invariants", tmp_path / "missing.tri")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert call(capsys, "surface", "invariants", bad)[0] == 1


def test_selftest_is_deterministic():
    cmd = [sys.executable, "-m", "gentlesurf", "selftest", "--seed", "3", "--cases", "4"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == 0 and a.stdout == b.stdout
    assert json.loads(a.stdout)["ok"]
