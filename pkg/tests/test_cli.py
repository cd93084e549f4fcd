import io
import json
import subprocess
import sys

import pytest

from strathom import catalog
from strathom.cli import run
from strathom.complex import StratifiedComplex
from strathom.io import emit_cocycle, emit_complex


def ranks(report):
    return [report[k]["rank"] for k in sorted(report, key=int)]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def emitted(tmp_path_factory):
    root = tmp_path_factory.mktemp("catalog")
    for name, params in [("pinched_torus", []), ("genus_g", ["--param", "g=2"]), ("nodal_genus1", []),
                         ("torus", []), ("circle", [])]:
        code, _, err = call("catalog", "emit", name, *params, "--out", root)
        assert code == 0, err
    return root


def test_ih_json_on_pinched_torus(emitted):
    code, out, _ = call("ih", "--in", emitted / "pinched_torus.v1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "strathom-report v1" and doc["verb"] == "ih"
    assert ranks(doc["ih"]) == [1, 0, 1]
    assert len(doc["input_sha256"]) == 64


def test_genus_two_witness(emitted):
    code, out, _ = call("witness", "--in", emitted / "genus_g.v1",
                        "--cocycle", emitted / "genus_g.meridian_1.cocycle.v1", "--n", 1)
    assert code == 0
    assert "Euler = -2 = (-1)^1 * 2" in out


def test_witness_json(emitted):
    code, out, _ = call("witness", "--in", emitted / "genus_g.v1",
                        "--cocycle", emitted / "genus_g.meridian_2.cocycle.v1", "--n", 1, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["witness"]["ih"]["euler"] == -2
    assert "cocycle_sha256" in doc


def test_witness_inapplicable_exit_code(emitted):
    code, out, _ = call("witness", "--in", emitted / "pinched_torus.v1",
                        "--cocycle", emitted / "pinched_torus.node_loop.cocycle.v1", "--n", 1)
    assert code == 3 and "inapplicable" in out


def test_witness_needs_n(emitted):
    code, _, _ = call("witness", "--in", emitted / "genus_g.v1",
                      "--cocycle", emitted / "genus_g.meridian_1.cocycle.v1")
    assert code == 2


def test_witness_rejects_trivial_cocycle(emitted):
    code, _, err = call("witness", "--in", emitted / "pinched_torus.v1",
                        "--cocycle", emitted / "pinched_torus.zero.cocycle.v1", "--n", 1)
    assert code == 1 and err


def test_validate_broken_file(tmp_path):
    X = catalog.torus()
    text = emit_complex(StratifiedComplex(1, 7, sorted(X.maximal)[1:]))
    path = tmp_path / "broken.v1"
    path.write_text(text)
    code, out, _ = call("validate", "--in", path)
    assert code == 1
    assert "first failing flag: pseudomanifold" in out
    code, out, _ = call("validate", "--in", path, "--json")
    assert code == 1 and json.loads(out)["first_failure"] == "pseudomanifold"


def test_validate_ok(emitted):
    code, out, _ = call("validate", "--in", emitted / "torus.v1")
    assert code == 0 and "FAIL" not in out


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "junk.v1"
    path.write_text("not a complex\n")
    assert call("homology", "--in", path)[0] == 2


def test_missing_file_and_unknown_flag(tmp_path):
    assert call("homology", "--in", tmp_path / "nope.v1")[0] == 2
    assert call("homology", "--in", tmp_path / "nope.v1", "--frobnicate")[0] == 2
    assert call("transmogrify")[0] == 2


def test_json_is_byte_identical(emitted):
    argv = ("twisted", "--in", emitted / "nodal_genus1.v1",
            "--cocycle", emitted / "nodal_genus1.meridian.cocycle.v1", "--json")
    first, second = call(*argv), call(*argv)
    assert first[0] == 0 and first[1] == second[1]


@pytest.mark.parametrize("name", ["pinched_torus", "genus_g", "nodal_genus1", "torus", "circle"])
def test_emit_round_trip_reproduces_fixtures(emitted, name):
    fix = json.loads((emitted / f"{name}.fixtures.json").read_text())
    exp = fix["expected"]
    code, out, _ = call("ih", "--in", emitted / f"{name}.v1", "--json")
    doc = json.loads(out)
    assert ranks(doc["ih"]) == exp["ih_ranks"][0]
    if "ichi" in exp:
        assert doc["euler"]["ichi"] == exp["ichi"][0]
    code, out, _ = call("homology", "--in", emitted / f"{name}.v1", "--json")
    assert ranks(json.loads(out)["homology"]) == exp["h_ranks"][0]
    for cname, fixture in exp.get("twisted", {}).items():
        code, out, _ = call("twisted", "--in", emitted / f"{name}.v1",
                            "--cocycle", emitted / f"{name}.{cname}.cocycle.v1", "--json")
        assert code == 0 and ranks(json.loads(out)["twisted_ih"]) == fixture[0]


def test_crosscheck_verb(emitted):
    code, out, _ = call("crosscheck", "--in", emitted / "torus.v1",
                        "--cocycle", emitted / "torus.slope.cocycle.v1")
    assert code == 0 and out.startswith("crosscheck ok")


def test_subdivide_flag_keeps_reports(emitted):
    base = json.loads(call("ih", "--in", emitted / "pinched_torus.v1", "--json")[1])
    sub = json.loads(call("ih", "--in", emitted / "pinched_torus.v1", "--json", "--subdivide", 1)[1])
    assert sub["ih"] == base["ih"] and sub["subdivisions"] == 1
    code, out, _ = call("twisted", "--in", emitted / "circle.v1", "--cocycle",
                        emitted / "circle.winding.cocycle.v1", "--subdivide", 1, "--json")
    assert code == 0 and ranks(json.loads(out)["twisted_ih"]) == [0, 0]
    assert call("ih", "--in", emitted / "torus.v1", "--subdivide", -1)[0] == 2


def test_tree_choice_does_not_change_report(emitted):
    argv = ("twisted", "--in", emitted / "nodal_genus1.v1",
            "--cocycle", emitted / "nodal_genus1.longitude.cocycle.v1", "--json")
    a = json.loads(call(*argv)[1])
    b = json.loads(call(*argv, "--tree", "dfs", "--root", 4)[1])
    assert a["twisted_ih"] == b["twisted_ih"]


def test_relative_ih(emitted):
    code, out, _ = call("ih", "--in", emitted / "circle.v1", "--rel", "0", "--json")
    assert code == 0 and ranks(json.loads(out)["relative_ih"]) == [0, 1]
    assert call("ih", "--in", emitted / "circle.v1", "--rel", "a,b")[0] == 2


def test_broken_cocycle_exit_code(tmp_path):
    path = tmp_path / "t.v1"
    path.write_text(emit_complex(catalog.torus()))
    cpath = tmp_path / "bad.cocycle.v1"
    cpath.write_text(emit_cocycle({(0, 1): 1}))
    assert call("twisted", "--in", path, "--cocycle", cpath)[0] == 1


def test_catalog_list():
    code, out, _ = call("catalog", "list", "--json")
    names = [e["name"] for e in json.loads(out)["entries"]]
    assert code == 0 and names == list(catalog.NAMES)
    code, out, _ = call("catalog", "list")
    assert code == 0 and "pinched_torus" in out


def test_catalog_emit_bad_param(tmp_path):
    assert call("catalog", "emit", "circle", "--param", "k", "--out", tmp_path)[0] == 2
    assert call("catalog", "emit", "circle", "--param", "q=1", "--out", tmp_path)[0] == 2
    assert call("catalog", "emit", "circle", "--param", "k=2", "--out", tmp_path)[0] == 2


def test_module_entry_point(emitted):
    res = subprocess.run([sys.executable, "-m", "strathom", "ih", "--in", str(emitted / "pinched_torus.v1")],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout
