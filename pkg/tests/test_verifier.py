import csv
import json

import pytest

from qgrass.config import Config
from qgrass.errors import BudgetExceeded, HypothesisViolated, UnknownKind, UnknownSuite
from qgrass.families import Family, build_example_pair, build_h1
from qgrass.qcalc import ParamPoint, failed_hypotheses
from qgrass.subspace import Ambient, unit_span
from qgrass.verifier import (
    NOTE_H2,
    certify_pair,
    count_vs_formula,
    grid_report,
    timed,
    verify_construction,
)


def test_count_examples():
    c = count_vs_formula("grassmannian", {"q": 2, "n": 4, "k": 2})
    assert (c.enumerated, c.formula, c.verdict) == (35, 35, "pass")
    c = count_vs_formula("h2-size", {"q": 2, "n": 5, "k": 2, "t": 1})
    assert (c.enumerated, c.formula, c.verdict) == (12, 12, "pass")
    c = count_vs_formula("x-complement", {"q": 2, "n": 5, "k": 2, "t": 1})
    assert (c.enumerated, c.formula, c.verdict) == (4, 4, "pass")
    c = count_vs_formula("m-size", {"q": 2, "n": 5, "k": 2, "t": 1})
    assert (c.enumerated, c.formula) == (43, 43)
    c = count_vs_formula("h1-size", {"q": 3, "n": 4, "k": 2, "t": 1})
    assert c.enumerated == c.formula == 13


def test_count_type_above_fixed_subspace():
    c = count_vs_formula("type-count", {"q": 2, "e": 3, "l": 2, "m": 3, "h": 1, "m1": 2, "h1": 1})
    assert c.passed and c.predicates["u1_type"]
    with pytest.raises(HypothesisViolated):
        count_vs_formula("type-count", {"q": 2, "e": 1, "l": 2, "m": 3, "h": 0})


def test_eq_counts():
    c = count_vs_formula("eq1", {"q": 2, "n": 6, "k": 2, "t": 1})
    assert c.enumerated == c.formula == 3 and c.predicates["alternating_sum_equals_lhs"]
    c = count_vs_formula("eq66-upper", {"q": 2, "n": 7, "k": 3, "t": 1})
    assert c.passed and c.enumerated <= c.formula
    assert any("(k+1)-space" in n for n in c.notes)


def test_count_errors():
    with pytest.raises(UnknownKind):
        count_vs_formula("nope", {})
    with pytest.raises(BudgetExceeded):
        count_vs_formula("grassmannian", {"q": 2, "n": 6, "k": 3}, budget=10)


def test_certify_pair_examples():
    amb = Ambient(2, 5)
    h1 = build_h1(amb.full(), unit_span(amb, [0]), 2)
    c = certify_pair(h1, h1, 1, 0)
    assert c.enumerated == 225 == c.formula
    assert c.predicates["equality_configuration"] and c.passed
    f, g = build_example_pair("almost", 2, 6, 2, 1, 1)
    c = certify_pair(f, g, 1, 1)
    assert c.enumerated == 128 and c.predicates["product_eq_g1"]
    assert c.predicates["s_almost"] and not c.predicates["cross_t"]
    assert not c.predicates["equality_configuration"]
    c = certify_pair(Family(amb, 2), h1, 1, 0)
    assert c.enumerated == 0 and c.passed and c.predicates["tau_f"] is None


def test_certify_pair_symmetric():
    f, g = build_example_pair("almost", 2, 6, 2, 1, 1)
    a, b = certify_pair(f, g, 1, 1), certify_pair(g, f, 1, 1)
    assert a.enumerated == b.enumerated and a.predicates["s_almost"] == b.predicates["s_almost"]


def test_certify_pair_fails_when_not_almost():
    f, g = build_example_pair("almost", 2, 6, 2, 1, 1)
    assert certify_pair(f, g, 1, 0).verdict == "fail"


def test_verify_construction_examples():
    c = verify_construction("almost", {"q": 2, "n": 6, "k": 2, "t": 1, "s": 1})
    assert c.passed and c.enumerated == 128
    assert NOTE_H2 in c.notes
    c = verify_construction("cover", {"q": 2, "n": 5, "k": 2, "t": 1})
    assert c.passed and c.enumerated == 43
    assert c.predicates["common_meet_dim"] == 0
    c = verify_construction("theorem-extremal", {"q": 2, "n": 5, "k": 2, "t": 1})
    assert c.passed and c.enumerated == 225 and c.predicates["common_meet_dim"] == 1
    with pytest.raises(HypothesisViolated):
        verify_construction("almost", {"q": 2, "n": 3, "k": 2, "t": 1, "s": 1})


def test_verify_almost_desk_grid():
    for n in range(3, 8):
        for k in range(1, min(3, n - 1) + 1):
            for t in range(1, k + 1):
                for s in (1, 2, 3):
                    if failed_hypotheses("example-almost", ParamPoint(n=n, k=k, t=t, s=s, q=2)):
                        continue
                    c = verify_construction("almost", {"q": 2, "n": n, "k": k, "t": t, "s": s})
                    assert c.passed, (n, k, t, s, c.predicates)


def test_certificate_bytes_stable():
    a = verify_construction("almost", {"q": 2, "n": 6, "k": 2, "t": 1, "s": 1}).to_json()
    b = verify_construction("almost", {"q": 2, "n": 6, "k": 2, "t": 1, "s": 1}).to_json()
    assert a == b
    d = json.loads(a)
    assert list(d) == ["kind", "params", "enumerated", "formula", "predicates", "verdict", "notes", "runtime_ms"]
    assert d["enumerated"] == "128" and d["runtime_ms"] is None


def test_timed_fills_runtime():
    c = timed(count_vs_formula, "grassmannian", {"q": 2, "n": 3, "k": 1})
    assert c.runtime_ms is not None and c.runtime_ms >= 0


def test_grid_report_suites(tmp_path):
    r = grid_report("empty")
    assert (r.passed, r.failed, r.skipped) == (0, 0, 0)
    out = tmp_path / "q.csv"
    r = grid_report("qbinom-identities", out)
    assert r.failed == 0 and r.passed > 0
    rows = list(csv.reader(out.open()))
    assert rows[0][:3] == ["lemma_id", "n", "k"]
    assert len(rows) == r.passed + 1
    r = grid_report("counting-lemma")
    assert r.ok and r.passed > 0
    with pytest.raises(UnknownSuite):
        grid_report("missing")


def test_grid_report_json_and_config_grid(tmp_path):
    cfg = Config(grids={"mine": [
        {"op": "count", "kind": "grassmannian", "q": 2, "n": 4, "k": 2},
        {"op": "lemma", "lemma_id": "g1-lt-g2", "n": 8, "k": 5, "t": 3, "s": 1, "q": 2},
        {"op": "construct", "which": "cover", "q": 2, "n": 5, "k": 2, "t": 1},
    ]})
    out = tmp_path / "r.json"
    r = grid_report("mine", out, cfg)
    assert (r.passed, r.failed, r.skipped) == (2, 0, 1)
    doc = json.loads(out.read_text())
    assert len(doc["results"]) == 3 and doc["notes"]


def test_grid_report_parallel_same_output(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    grid_report("eq66", a, jobs=1)
    grid_report("eq66", b, jobs=2)
    assert a.read_bytes() == b.read_bytes()
