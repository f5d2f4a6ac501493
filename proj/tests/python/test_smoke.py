import pytest

import fading


def test_cycle_values():
    c7 = fading.family("cycle:7")
    summary = fading.analyze(c7)
    assert summary["f_minus"] == 2
    assert summary["f_plus"] == 0
    assert summary["r_min"] == 3
    assert fading.analyze(c7, jobs=4) == summary


def test_graph_round_trip():
    g = fading.from_graph6("Dhc")
    assert g.order == 5 and g.size == 5
    assert g.graph6() == "Dhc"
    assert fading.from_edge_list(g.edge_list()) == g
    assert g.closed_neighbourhood(0) == [0, 1, 4]
    with pytest.raises(ValueError):
        fading.from_graph6("D!!")


def test_colouring_level():
    c5 = fading.family("cycle:5")
    assert fading.rainbow_vertices(c5, [1, 2, 1, 2, 3]) == [0, 3, 4]
    assert fading.rainbow_vertices(c5, [1, 2, 1, 2, 3], faded=[2]) == [0, 4]
    result = fading.fading_for_coloring(fading.family("cycle:7"), [1, 2, 1, 2, 1, 2, 3], 3)
    assert result["value"] == 2
    assert result["fadeset"] == [2, 3]
    assert len(fading.chromatic_colorings(c5)) == 5
    with pytest.raises(fading.ContractError):
        fading.rainbow_vertices(c5, [1, 1, 2, 1, 2])


def test_constructions_and_oracle():
    mu = fading.mycielskian(fading.family("complete:2"))
    assert fading.chromatic_number(mu) == 3
    assert fading.oracle_invariants(mu)["f_minus_threshold"] == 0
    with pytest.raises(fading.OracleRefusal):
        fading.oracle_invariants(fading.family("cycle:10"))
    thorned = fading.thorn(fading.family("cycle:3"), [1, 1, 1])
    assert fading.analyze(thorned)["f_plus"] == 3
    assert fading.windmill(fading.family("complete:2"), 3).order == 7


def test_claims_and_scan():
    assert "JOIN-ADD" in fading.claim_ids()
    report = fading.run_claim("MYCIELSKI", max_base_n=2)
    assert report["notes"]["inconsistency"]["isomorphic_to_cycle5"] is True
    assert all(cx["reverified"] for cx in report["counterexamples"])
    result = fading.scan(["Dhc", "C~", "", "DkK"])
    s = result["summary"]
    assert s["scanned"] == s["skipped"] + s["hypothesis_failing"] + s["hypothesis_satisfying"]
