import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from engeltori import catalog, formats
from engeltori.cli import run
from engeltori.errors import ValidationError
from engeltori.homology import GradedGroup
from engeltori.knots import BraidWord, FrontWord
from engeltori.render import front_paths, front_svg


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def cli_json(*argv):
    code, out, err = cli("--json", *argv)
    return code, (json.loads(out) if out.strip() else None), err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return p


UNKNOT_FRONT = {"events": [{"kind": "L", "pos": 0}, {"kind": "R", "pos": 0}]}
TREFOIL_BRAID = {"strands": 2, "word": [1, 1, 1]}


def transverse_manifest(n=0, **kw):
    return {"kind": "transverse", "profile": {"strands": 1, "word": []},
            "stabilizations": n, **kw}


def legendrian_manifest(n=0, **kw):
    return {"kind": "legendrian", "profile": UNKNOT_FRONT, "stabilizations": n,
            "ambient": {"N": "catalog:sphere3"}, **kw}


# ---------------------------------------------------------------- knot

def test_knot_invariants_front(tmp_path):
    code, obj, _ = cli_json("knot", "invariants", write(tmp_path, "u.json", UNKNOT_FRONT))
    assert code == 0 and obj["tb"] == -1 and obj["rot"] == 0 and obj["sl_plus"] == -1


def test_knot_invariants_braid_text(tmp_path):
    code, out, _ = cli("knot", "invariants", write(tmp_path, "t.json", TREFOIL_BRAID))
    assert code == 0 and "sl: 1" in out


def test_knot_invariants_link_reports_components(tmp_path):
    code, obj, _ = cli_json("knot", "invariants",
                            write(tmp_path, "l.json", {"strands": 2, "word": [1, 1]}))
    assert code == 0 and obj["components"] == 2 and "sl" not in obj


def test_knot_stabilize_roundtrip(tmp_path):
    code, obj, _ = cli_json("knot", "stabilize", write(tmp_path, "u.json", UNKNOT_FRONT),
                            "--sign", "+", "--count", 2)
    assert code == 0 and obj["invariants"]["tb"] == -3 and obj["invariants"]["rot"] == 2
    # the emitted object is itself a front file
    code, again, _ = cli_json("knot", "invariants", write(tmp_path, "s.json", obj))
    assert code == 0 and (again["tb"], again["rot"]) == (-3, 2)


def test_knot_stabilize_braid(tmp_path):
    code, obj, _ = cli_json("knot", "stabilize",
                            write(tmp_path, "b.json", {"strands": 1, "word": []}),
                            "--count", 3)
    assert code == 0 and obj["strands"] == 4 and obj["invariants"]["sl"] == -7


@pytest.mark.parametrize("obj", [
    {"strands": 2, "word": [3]},
    {"events": [{"kind": "L", "pos": 0}]},
    {"events": [{"kind": "Q", "pos": 0}, {"kind": "R", "pos": 0}]},
    {"colour": "blue"},
])
def test_knot_invalid_input_exits_1(tmp_path, obj):
    code, out, err = cli("knot", "invariants", write(tmp_path, "bad.json", obj))
    assert code == 1 and out == "" and err.startswith("error:")


def test_missing_and_malformed_files(tmp_path):
    assert cli("knot", "invariants", tmp_path / "missing.json")[0] == 1
    p = tmp_path / "junk.json"
    p.write_text("{not json")
    code, _, err = cli("knot", "invariants", p)
    assert code == 1 and "not valid JSON" in err


# ---------------------------------------------------------------- homology

def test_homology_catalog_torus():
    code, obj, _ = cli_json("homology", "catalog:torus2")
    assert code == 0
    assert GradedGroup.from_json(obj) == GradedGroup.of(1, 2, 1)
    code, out, _ = cli("homology", "catalog:torus2")
    assert out.split() == ["H_0", "=", "Z", "H_1", "=", "Z^2", "H_2", "=", "Z"]


def test_homology_complex_file(tmp_path):
    p = write(tmp_path, "m.json", {"dims": [1, 1, 1], "boundaries": [[[0]], [[4]]]})
    code, obj, _ = cli_json("homology", p)
    assert code == 0 and obj["groups"][1] == {"free_rank": 0, "torsion": [4]}


def test_homology_not_a_complex(tmp_path):
    p = write(tmp_path, "bad.json", {"dims": [1, 1, 1], "boundaries": [[[1]], [[1]]]})
    code, _, err = cli("homology", p)
    assert code == 1 and "NotAComplex" in err


def test_homology_unknown_catalog_id():
    code, _, err = cli("homology", "catalog:nowhere")
    assert code == 1 and "UnknownId" in err


def test_kunneth_torsion_pair():
    code, obj, _ = cli_json("homology", "kunneth", "catalog:moore_z2", "catalog:moore_z2")
    assert code == 0 and obj["agree"] is True
    assert obj["groups"][3] == {"free_rank": 0, "torsion": [2]}


def test_alexander_roundtrip(tmp_path):
    code, obj, _ = cli_json("homology", "catalog:torus2")
    p = write(tmp_path, "t2.json", obj)
    code, dual, _ = cli_json("homology", "alexander", "--sphere-dim", 4, p)
    assert code == 0 and dual["reduced"]
    assert dual["groups"][2] == {"free_rank": 2, "torsion": []}
    assert cli("homology", "alexander", p)[0] == 1


def test_tensor_output_feeds_homology(tmp_path):
    code, obj, _ = cli_json("homology", "tensor", "catalog:circle", "catalog:circle")
    assert code == 0
    code, H, _ = cli_json("homology", write(tmp_path, "t.json", obj))
    assert GradedGroup.from_json(H) == GradedGroup.of(1, 2, 1)


# ---------------------------------------------------------------- torus

def test_sl_class(tmp_path):
    code, obj, _ = cli_json("torus", "sl-class", write(tmp_path, "m.json", transverse_manifest(2)))
    assert code == 0 and obj["coords"] == [-5, 0] and obj["divisibility"] == 5
    assert obj["basis"] == ["alpha", "beta"]


def test_tb_class_with_outputs(tmp_path):
    out_json, out_txt = tmp_path / "o.json", tmp_path / "o.txt"
    m = legendrian_manifest(1, output={"json": str(out_json), "text": str(out_txt)})
    code, obj, _ = cli_json("torus", "tb-class", write(tmp_path, "m.json", m))
    assert code == 0 and obj["coords"] == [-2]
    assert json.loads(out_json.read_text()) == obj
    assert "tb(L)" in out_txt.read_text()


def test_tb_class_in_s1xs2(tmp_path):
    m = legendrian_manifest(ambient={"N": "catalog:s1xs2"})
    code, obj, _ = cli_json("torus", "tb-class", write(tmp_path, "m.json", m))
    assert code == 0 and obj["complement_h2"] == {"free_rank": 3, "torsion": []}


@pytest.mark.parametrize("manifest", [
    transverse_manifest(ambient={"H3_is_zero": False}),
    transverse_manifest(ambient={"torus_nullhomologous": False}),
])
def test_hypothesis_violations_exit_2(tmp_path, manifest):
    code, _, err = cli("torus", "sl-class", write(tmp_path, "m.json", manifest))
    assert code == 2 and "hypothesis violated" in err


def test_tb_class_hypotheses_exit_2(tmp_path):
    m = legendrian_manifest(ambient={"N": "catalog:torus2"})
    assert cli("torus", "tb-class", write(tmp_path, "a.json", m))[0] == 2
    m = legendrian_manifest(ambient={"N": "catalog:sphere3", "nullhomologous": False})
    assert cli("torus", "tb-class", write(tmp_path, "b.json", m))[0] == 2


@pytest.mark.parametrize("manifest", [
    {"kind": "transverse"},
    {"kind": "spherical", "profile": TREFOIL_BRAID},
    {"kind": "transverse", "profile": UNKNOT_FRONT},
    transverse_manifest(-1),
    {"kind": "transverse", "profile": {"strands": 2, "word": [1, 1]}},
])
def test_bad_manifests_exit_1(tmp_path, manifest):
    assert cli("torus", "sl-class", write(tmp_path, "m.json", manifest))[0] == 1


def test_wrong_manifest_kind(tmp_path):
    code, _, err = cli("torus", "tb-class", write(tmp_path, "m.json", transverse_manifest()))
    assert code == 1 and "legendrian" in err


def test_distinguish(tmp_path):
    a = write(tmp_path, "a.json", transverse_manifest(0))
    b = write(tmp_path, "b.json", transverse_manifest(1))
    code, obj, _ = cli_json("torus", "distinguish", a, b)
    assert code == 0 and obj["outcome"] == "Distinct" and obj["certificate"] == [1, 3]
    code, obj, _ = cli_json("torus", "distinguish", a, a)
    assert obj["outcome"] == "Inconclusive"
    c = write(tmp_path, "c.json", legendrian_manifest())
    assert cli("torus", "distinguish", a, c)[0] == 1


def test_manifest_roundtrip():
    m = formats.manifest_from_json(legendrian_manifest(3, sign="-"))
    again = formats.manifest_from_json(formats.manifest_to_json(m))
    assert again == m


# ---------------------------------------------------------------- verify, catalog

def test_verify_thm11_count5():
    code, out, _ = cli("verify", "thm11", "--count", 5)
    assert code == 0 and "[PASS] 15 pairwise Distinct verdicts" in out
    assert "FAIL" not in out


@pytest.mark.parametrize("name", ["thm12", "lemma41", "lemma42", "lemma51", "laws"])
def test_verify_runners_pass(name):
    code, obj, _ = cli_json("verify", name)
    assert code == 0 and obj["passed"] and all(c["ok"] for c in obj["checks"])


def test_verify_seed_reproducible():
    a = cli_json("verify", "lemma51", "--seed", 7, "--samples", 5)[1]
    b = cli_json("verify", "lemma51", "--seed", 7, "--samples", 5)[1]
    assert a == b


def test_json_flag_after_subcommand():
    code, out, _ = cli("verify", "thm11", "--count", 2, "--json")
    assert code == 0 and json.loads(out)["name"] == "thm11"


def test_catalog_listing():
    code, obj, _ = cli_json("catalog")
    assert code == 0 and set(obj) == set(catalog.ids())


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "engeltori.cli", "homology", "catalog:circle"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "H_1 = Z" in r.stdout


# ---------------------------------------------------------------- render

def test_render_front(tmp_path):
    src = write(tmp_path, "trefoil.json", formats.front_to_json(catalog.front_fixtures()["trefoil"]))
    svg = tmp_path / "t.svg"
    code, obj, _ = cli_json("render", "front", src, "--svg", svg)
    assert code == 0 and obj["events"] == 7
    root = ET.fromstring(svg.read_text())
    assert root.tag.endswith("svg")
    texts = [t.text for t in root.iter() if t.tag.endswith("text")]
    assert texts == ["+", "+", "+"]


def test_render_rejects_braids(tmp_path):
    assert cli("render", "front", write(tmp_path, "b.json", TREFOIL_BRAID), "--svg",
               tmp_path / "x.svg")[0] == 1


def test_front_paths_count():
    f = FrontWord((("L", 0), ("L", 0), ("X", 1), ("R", 0), ("R", 0)))
    # two branches per cusp plus one piece per strand crossing each column
    assert len(front_paths(f)) == 4 * 2 + (0 + 2 + 4 + 2 + 0)
    assert "<title>" in front_svg(f)


def test_front_paths_invalid():
    with pytest.raises(ValidationError):
        front_paths(FrontWord((("L", 0),)))


def test_knot_json_roundtrip():
    for k in (BraidWord(3, (1, -2)), catalog.front_fixtures()["trefoil"]):
        assert formats.knot_from_json(formats.knot_to_json(k)) == k
