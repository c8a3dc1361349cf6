import json

import pytest

import hyperpd


def test_open_string_pd_and_reg():
    r = hyperpd.pd("ab, bc, cd")
    assert r["pd"] == 2
    assert r["reg"] == 1
    assert r["method"] == "formula:open-string"


def test_hypergraph_of_open_string():
    h = hyperpd.hypergraph("ab, bc, cd")
    assert h["mu"] == 3
    assert h["edges"]["b"] == [1, 2]


def test_string_with_edge_formula_and_oracle_agree():
    edges = {chr(ord("a") + i): [i + 1, i + 2] for i in range(8)}
    edges.update({"s": [1], "t": [9], "F": [3, 5, 8]})
    src = json.dumps({"mu": 9, "edges": edges})
    assert hyperpd.pd(src)["pd"] == 7
    assert hyperpd.pd(src, oracle=True)["pd"] == 7
    shape = hyperpd.classify(src)
    assert shape["gaps"] == [2, 1, 2, 1]


def test_union_edges_removed():
    _, removed = hyperpd.remove_union_edges("abk, bcl, cdklm, dekn, efgn, ghmn, hikl, ijk")
    assert sorted(removed) == ["k", "n"]


def test_betti_cross_oracle():
    a = hyperpd.betti("ab, bc, cd")
    b = hyperpd.betti("ab, bc, cd", cross=True)
    assert a == b
    assert a["totals"] == [1, 3, 2]
    assert a["entries"][(2, "a,b,c")] == 1


def test_formulas():
    assert hyperpd.pd_open_string(11) == 8
    assert hyperpd.pd_open_cycle(6) == 4
    assert hyperpd.pd_string_with_edge([2, 1, 2, 1]) == (7, "jump")
    assert hyperpd.pd_cycle_with_edge([1, 1]) == 3


def test_split_report():
    r = hyperpd.split("ab, bc, cd", [1], [2, 3])
    assert r["hypotheses_hold"] is False
    assert r["predicted_pd"] is None


def test_verify_strings():
    out = hyperpd.verify("strings", max_mu=6)
    assert out["instances"] == 6
    assert out["mismatches"] == []


def test_errors():
    with pytest.raises(hyperpd.ParseError):
        hyperpd.pd("aab")
    with pytest.raises(hyperpd.BudgetExceeded):
        hyperpd.pd("ab, bc, cd, de, ef", oracle=True, budget=3)
    with pytest.raises(hyperpd.Error):
        hyperpd.verify("nope")
