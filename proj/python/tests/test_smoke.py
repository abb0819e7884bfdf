import json
import pathlib
import subprocess

import jsonschema
import pytest

import rotlab

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())


def cli():
    for cand in sorted(ROOT.glob("build/**/rotlab")):
        if cand.is_file():
            return cand
    pytest.skip("rotlab binary not built")


def test_classify_free_product():
    r = rotlab.classify(rotlab.gnm(3, 5, 1, 7))
    assert r["case_id"] == "Thm3.free"
    assert r["structure"] == "Z3 * Z5"
    assert r["presentation"]["relators"] == ["alpha^3", "beta^5"]


def test_express_words_are_reported():
    r = rotlab.classify(rotlab.gnm(4, 4, 1, 8), express=True)
    assert r["case_id"] == "Thm5.2"
    words = {e["target"]: e["word"] for e in r["expressions"]}
    assert words["U^2"] == "B^2 A^2"


def test_identity_and_normal_form():
    assert rotlab.is_identity(rotlab.hatg(4), "S^1 T^1 S^1 T^1 S^1 T^1")
    assert not rotlab.is_identity(rotlab.gnm(3, 5, 1, 7), "A^1 B^1")
    assert rotlab.normalize(rotlab.hatg(5), "T^1 S^2 T^1")["normal_form"] == "S^2"


def test_certificates():
    w = rotlab.certify(3, "S^1 T^1 S^1 T^1")
    assert len(w["non_integral"]) >= 4
    assert rotlab.ext2("A^1 C^1", 3, 3)["variant"] == "ext2"
    assert rotlab.free_batch(5, 3)["ok"]


def test_finite_ball():
    b = rotlab.enumerate_ball(rotlab.hatg(4), 10)
    assert b["closed"] and b["order"] == 24


def test_errors_map_to_exceptions():
    with pytest.raises(rotlab.UsageError, match="relatively prime"):
        rotlab.gnm(3, 5, 2, 6)
    with pytest.raises(rotlab.HypothesisError):
        rotlab.certify(5, "S^2 T^1")
    with pytest.raises(rotlab.UsageError, match="column"):
        rotlab.parse_word("A^1 B")
    with pytest.raises(rotlab.UnsupportedCase):
        rotlab.growth(rotlab.gnm(4, 4, 1, 8), 2)
    assert issubclass(rotlab.HypothesisError, rotlab.Error)


def test_documents_validate_against_schema():
    spec = rotlab.gnm(2, 2, 1, 12)
    payloads = {
        "classify": rotlab.classify(spec, express=False),
        "verify": rotlab.verify(spec),
        "is-identity": {"identity": True, "method": "x"},
        "growth": rotlab.growth(spec, 3),
        "enumerate": rotlab.enumerate_ball(spec, 3),
        "certify": rotlab.certify(6, "S^1 T^1"),
        "foundation": rotlab.foundation_batch(5, 1, 1),
        "amalgam": rotlab.amalgam(rotlab.hatg(5), "S^1 T^1"),
    }
    for command, result in payloads.items():
        doc = rotlab.document(command, {}, result)
        assert doc["schema_version"] == rotlab.SCHEMA_VERSION
        jsonschema.validate(doc, SCHEMA)


CLI_RUNS = [
    ["classify", "--gnm", "4", "4", "1", "8", "--presentation", "--express"],
    ["classify", "--gpq", "4", "4"],
    ["is-identity", "--hatg", "4", "S^1 T^1 S^1 T^1 S^1 T^1"],
    ["normalize", "--hatg", "5", "T^1 S^2 T^1", "--trace"],
    ["verify", "--gnm", "2", "2", "1", "8"],
    ["amalgam", "--gnm", "4", "4", "1", "8", "A^1 B^1"],
    ["foundation", "--m", "5", "--max-n", "1", "--max-exp", "1"],
    ["certify", "--m", "8", "--variant", "ext1", "--reduce", "T^1 S^1 T^2 S^1 T^1"],
    ["ext2", "--p", "4", "--q", "6", "A^1 C^1 A^1"],
    ["free-cert", "--m", "3", "--max-length", "2"],
    ["free-cert", "--m", "3", "--word", "A^1 B^-1"],
    ["enumerate", "--gpq", "4", "4", "--radius", "6"],
    ["growth", "--gpq", "3", "3", "--radius", "3"],
]


@pytest.mark.parametrize("args", CLI_RUNS, ids=[a[0] + "-" + str(i) for i, a in enumerate(CLI_RUNS)])
def test_cli_documents_validate_and_words_round_trip(args):
    out = subprocess.run([str(cli()), *args], capture_output=True, text=True, check=True).stdout
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)

    def walk(x):
        if isinstance(x, dict):
            for k, v in x.items():
                if k in ("word", "normal_form", "canonical_word", "h", "substituted", "input", "reduced_from") and isinstance(v, str):
                    assert rotlab.parse_word(v) == v
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(doc["result"])
    text = subprocess.run([str(cli()), "--format", "text", *args], capture_output=True, text=True, check=True).stdout
    assert f"command: {args[0]}" in text
