import json

import pytest

from ellsurf import conformance as cf
from ellsurf.cli import run


@pytest.fixture(scope="module")
def report():
    return cf.build_report(H=30, sweep=40, sweep_bound=20, mode_bound=2000, seed=0)


def test_report_is_json(report):
    assert json.loads(json.dumps(report)) == report


def test_counts_and_overlaps(report):
    for k, v in report["clause_counts"].items():
        assert v["encoded"] == v["expected"]
    assert len(report["clause_overlaps"]["j0_w3"]) == 7
    assert len(report["clause_overlaps"]["j1728_w2"]) == 4


def test_worked_examples_flagged(report):
    by_family = {e["family"]: e for e in report["worked_examples"]}
    e = by_family["j0:a=1053,b=39"]
    assert e["literal"]["verdict"] == "constant" and e["flagged_clauses"]
    assert all(w["sign"] == -1 for w in e["claim_contradicted"])
    assert "claim_contradicted" not in by_family["j0:a=27,b=16"]
    for fam in ("j1728:A=3,B=5,C=7", "j1728:A=3,B=5,C=11"):
        assert by_family[fam]["scan"]["wplus"] and by_family[fam]["scan"]["wminus"]


def test_mode_disagreements(report):
    md = report["mode_disagreements"]
    assert md["j1728"]["disagreements"] == 0
    assert md["j0"]["in_domain"] == 0
    assert md["j0"]["outside_domain"] > 0


def test_sweep_flags_carry_witnesses(report):
    st = report["literal_sweep"]["stats"]
    assert st["families"] == sum(v for k, v in st.items() if k != "families")
    for entries in report["literal_sweep"]["flagged_clauses"].values():
        for e in entries:
            if e["witnesses"]:
                assert {w["sign"] for w in e["witnesses"]} <= {1, -1}


def test_summary_text(report):
    text = cf.summarize(report)
    assert "j0_w2: 13 clauses" in text and "mode disagreements" in text


def test_cli_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    argv = ["conformance", "--height", "10", "--sweep", "4", "--mode-bound", "100", "--format", "text", "--output", str(out)]
    assert run(argv) == 0
    assert "theorem/lemma coherence" in capsys.readouterr().out
    assert json.loads(out.read_text())["clause_counts"]["j0_w3"]["encoded"] == 76
