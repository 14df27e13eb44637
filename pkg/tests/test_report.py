import json

import pytest

from dend.catalog import default_catalog
from dend.operators import COLUMN, PAPER, ROW, STANDARD
from dend.report import VerificationReport, emit_report, run_sweep

CATALOG = default_catalog()
SUBSET = ["Dend2_1", "Dend2_2"]


@pytest.fixture(scope="module")
def report():
    return run_sweep(CATALOG, (ROW, COLUMN), (STANDARD, PAPER), seed=42, algebras=SUBSET)


def test_emit_is_deterministic(report):
    again = run_sweep(CATALOG, (ROW, COLUMN), (STANDARD, PAPER), seed=42, algebras=SUBSET)
    assert emit_report(report, "JSON") == emit_report(again, "JSON")
    assert emit_report(report, "MARKDOWN") == emit_report(again, "MARKDOWN")


def test_json_contract(report):
    doc = json.loads(emit_report(report, "JSON"))
    assert set(doc["meta"]) == {"catalog_sha256", "seed", "tool_version"}
    assert doc["meta"]["catalog_sha256"] == CATALOG.sha256 and doc["meta"]["seed"] == 42
    for v in doc["verdicts"]:
        assert {"claim", "convention", "rb_tail", "verdict"} <= set(v)
        assert ("conditions" in v) == (v["verdict"] == "CONDITIONAL")
        if v["verdict"] != "CONFIRMED":
            assert v["residuals"] and {"label", "poly"} == set(v["residuals"][0])
    for c in doc["completeness"]:
        assert {"algebra", "kind", "components", "missed_points"} <= set(c)


def test_one_verdict_per_claim_convention_and_tail(report):
    claims = [c for c in CATALOG.claims if c.algebra in SUBSET]
    expected = sum(2 * (2 if c.kind.uses_tail else 1) for c in claims)
    assert len(report.verdicts) == expected
    keys = [(v["claim"], v["convention"], v["rb_tail"]) for v in report.verdicts]
    assert len(set(keys)) == len(keys)


def test_ordering(report):
    algebras = [v["algebra"] for v in report.verdicts]
    assert algebras == sorted(algebras, key=SUBSET.index)
    first = [v for v in report.verdicts if v["claim"] == report.verdicts[0]["claim"]]
    assert [(v["convention"], v["rb_tail"]) for v in first] == [("row", "n/a"), ("col", "n/a")]


def test_weight_shift_finding_recorded(report):
    rows = [w for w in report.weight_shift if w["claim"] == "rb0-Dend2_1-P1"
            and w["convention"] == ROW and w["rb_tail"] == STANDARD]
    assert len(rows) == 1
    assert rows[0]["verdict"] == "CONDITIONAL" and rows[0]["conditions"] == ["a12"]
    assert "## Weight shift" in emit_report(report, "MARKDOWN").decode()


def test_markdown_regenerates_from_json(report):
    doc = json.loads(emit_report(report, "JSON"))
    assert emit_report(VerificationReport.from_json(doc), "MARKDOWN") == emit_report(report, "MARKDOWN")
    md = emit_report(report, "MARKDOWN").decode()
    assert "## Rota-Baxter operators of weight 0" in md
    assert "| Dend2_1 | rb0-Dend2_1-P1 |" in md


def test_empty_report():
    empty = VerificationReport.empty("abc", 7)
    doc = json.loads(emit_report(empty, "JSON"))
    assert doc["verdicts"] == [] and doc["completeness"] == []
    md = emit_report(empty, "MARKDOWN").decode()
    assert md.startswith("# ") and "verdicts: 0" in md
    with pytest.raises(ValueError):
        emit_report(empty, "XML")
