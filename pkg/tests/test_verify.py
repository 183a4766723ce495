import json
from math import comb

import pytest

from cecpoly.engine import spanning_tree_count
from cecpoly.graphs import generate, spec
from cecpoly.oracle import OracleConfig
from cecpoly.poly import Poly
from cecpoly.verify import (
    EXPECTED_REFUTED,
    ClaimReport,
    Verdict,
    claim_ids,
    counting_bound_violation,
    emit_report,
    registry,
    run_claims,
    scan_unimodality,
    summarize,
)

WHEEL_TOTAL_CLAIMS = {"thm-wheel-recurrence", "thm-wheel-closed-form"}


def by_id(reports):
    return {r.claim_id: r for r in reports}


def test_registry_ids_unique_and_sorted():
    ids = claim_ids()
    assert ids == sorted(ids) and len(ids) == len(set(ids))
    assert all(c.params for c in registry())


def test_expected_refutations_are_the_known_ones():
    assert EXPECTED_REFUTED == {
        "thm-fan",
        "thm-cocktail-n3-coefficients",
        "thm-cocktail-n3-consistency",
        "thm-cocktail-n4",
        "table-hypercube-d4-leading",
    }


def test_unknown_claim_id():
    with pytest.raises(KeyError):
        run_claims(["no-such-id"])


def test_cycle_confirmed():
    (r,) = run_claims(["thm-cycle"])
    assert r.verdict is Verdict.CONFIRMED
    assert [p[0] for p in r.tested_params] == list(range(3, 13))


def test_fan_witness():
    (r,) = run_claims(["thm-fan"])
    assert r.verdict is Verdict.REFUTED and r.witness_params == (4,)
    assert Poly.from_json(r.ground_truth["poly"]) == Poly.from_dict({3: 8, 4: 5, 5: 1})
    assert Poly.from_json(r.asserted["poly"]) == Poly.from_dict({3: 1, 4: 4, 5: 4})


def test_cocktail_split(full_reports):
    reports = by_id(full_reports)
    assert reports["thm-cocktail-n2"].verdict is Verdict.CONFIRMED
    assert reports["thm-cocktail-n3-total"].verdict is Verdict.CONFIRMED
    coeffs = reports["thm-cocktail-n3-coefficients"]
    assert coeffs.verdict is Verdict.REFUTED
    (note,) = coeffs.notes
    for term in ("240 at x^9 exceeds C(12,9) = 220", "90 at x^10 exceeds C(12,10) = 66", "24 at x^11 exceeds C(12,11) = 12"):
        assert term in note
    cons = reports["thm-cocktail-n3-consistency"]
    assert cons.verdict is Verdict.REFUTED
    assert (cons.asserted["total"], cons.ground_truth["total"]) == ("2656", "2712")


def test_cocktail_zero_claim(full_reports):
    r = by_id(full_reports)["thm-cocktail-n4"]
    assert r.verdict is Verdict.REFUTED and r.witness_params == (4,)
    assert spanning_tree_count(generate(spec("cocktail_party", 4))) > 0
    assert not Poly.from_json(r.ground_truth["poly"]).is_zero()


def test_hypercube_leading(full_reports):
    r = by_id(full_reports)["table-hypercube-d4-leading"]
    assert r.verdict is Verdict.REFUTED
    assert r.asserted == {"total": "42568192"} and r.ground_truth == {"total": "42467328"}


def test_everything_else_confirmed(full_reports):
    # the stated wheel recurrence is checked separately in test_acceptance
    for r in full_reports:
        if r.claim_id in EXPECTED_REFUTED or r.claim_id in WHEEL_TOTAL_CLAIMS:
            continue
        assert r.verdict is Verdict.CONFIRMED, r.claim_id


def test_refuted_reports_carry_witnesses(full_reports):
    for r in full_reports:
        if r.verdict is Verdict.REFUTED:
            assert r.witness_params is not None
            assert r.asserted != r.ground_truth


def test_wheel_total_claims_are_refuted_at_seven(full_reports):
    reports = by_id(full_reports)
    assert reports["thm-wheel-initial"].verdict is Verdict.CONFIRMED
    assert reports["thm-wheel-algebra"].verdict is Verdict.CONFIRMED
    for cid in WHEEL_TOTAL_CLAIMS:
        r = reports[cid]
        assert r.verdict is Verdict.REFUTED and r.witness_params == (7,)
        assert (r.asserted["total"], r.ground_truth["total"]) == ("1526", "1582")


def test_turan_ie_records_the_edge_cover_reading(full_reports):
    r = by_id(full_reports)["remark-turan-ie"]
    assert r.verdict is Verdict.CONFIRMED
    assert any("counts edge covers" in n for n in r.notes)


METHOD_CLAIMS = ["thm-cycle", "thm-fan", "table-Kn-row-5", "table-hypercube-d3", "table-turan-5-3", "thm-cocktail-n3-coefficients", "thm-lollipop"]


def test_verdicts_do_not_depend_on_method():
    oracle = by_id(run_claims(METHOD_CLAIMS))
    engine = by_id(run_claims(METHOD_CLAIMS, prefer_engine=True))
    for cid in METHOD_CLAIMS:
        assert "engine" in engine[cid].method and "oracle" in oracle[cid].method
        assert engine[cid].verdict is oracle[cid].verdict
        assert engine[cid].witness_params == oracle[cid].witness_params
        assert engine[cid].ground_truth == oracle[cid].ground_truth


def test_engine_extends_beyond_budget():
    reports = by_id(run_claims(["table-hypercube-d3", "thm-cycle"], budget=OracleConfig(max_edges=8)))
    assert reports["table-hypercube-d3"].method == "engine"
    assert reports["table-hypercube-d3"].verdict is Verdict.CONFIRMED


def test_counting_bound():
    assert counting_bound_violation(Poly.from_dict({10: 90}), 12) == "coefficient 90 at x^10 exceeds C(12,10) = 66"
    assert counting_bound_violation(Poly.from_dict({2: comb(12, 2)}), 12) is None


def _report(cid, verdict, expected=Verdict.CONFIRMED):
    return ClaimReport(cid, verdict, expected, "src", [(1,)], None, None, None, "oracle")


def test_emit_empty():
    text = emit_report([])
    assert text.splitlines()[0].startswith("claim")
    assert "status empty" in text
    assert json.loads(emit_report([], "json")) == {
        "claims": [],
        "summary": {"confirmed": 0, "refuted": 0, "untested": 0, "unexpected": [], "status": "empty"},
    }


def test_emit_single_confirmed():
    text = emit_report([_report("a", Verdict.CONFIRMED)])
    assert len(text.splitlines()) == 3
    assert summarize([_report("a", Verdict.CONFIRMED)])["status"] == "all-confirmed"


def test_emit_mixed():
    reports = [
        _report("b", Verdict.REFUTED, Verdict.REFUTED),
        _report("a", Verdict.CONFIRMED),
        _report("c", Verdict.UNTESTED),
    ]
    doc = json.loads(emit_report(reports, "json"))
    assert [c["id"] for c in doc["claims"]] == ["a", "b", "c"]
    assert (doc["summary"]["confirmed"], doc["summary"]["refuted"], doc["summary"]["untested"]) == (1, 1, 1)
    assert doc["summary"]["unexpected"] == ["c"]


def test_json_schema_fields(full_reports):
    doc = json.loads(emit_report(full_reports, "json"))
    for c in doc["claims"]:
        assert {"id", "verdict", "witness_params", "asserted", "ground_truth", "method", "runtime_ms"} <= set(c)
        assert c["runtime_ms"] is None
        for value in (c["asserted"], c["ground_truth"]):
            if value and "poly" in value:
                assert all(isinstance(x, str) for x in value["poly"]["coefficients"])


def test_timings_opt_in():
    (r,) = run_claims(["thm-cycle"])
    assert r.to_json(timings=True)["runtime_ms"] >= 0


def test_untested_when_no_method_fits():
    from cecpoly.engine import EngineConfig

    (r,) = run_claims(["table-Kn-row-6"], budget=OracleConfig(max_edges=5), engine=EngineConfig(max_steps=1))
    assert r.verdict is Verdict.UNTESTED


def test_unimodality_examples():
    rep = scan_unimodality([spec("complete", n) for n in range(2, 7)] + [spec("cycle", n) for n in range(3, 13)] + [spec("hypercube", 3)])
    assert not rep.counterexamples and not rep.untested
    assert rep.summary() == "no counterexample at desk scale"
