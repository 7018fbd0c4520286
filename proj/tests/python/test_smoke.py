import pytest

import gwop

CY2 = {
    "n": 2,
    "P": [
        {"kind": "terminal"},
        {"kind": "chaotic", "base": {"kind": "cyclic", "r": 2}, "max_arity": 6},
    ],
}
TERMINAL2 = {"n": 2, "P": [{"kind": "terminal"}, {"kind": "terminal"}]}
MAGMA2 = {
    "n": 2,
    "P": [
        {"kind": "terminal"},
        {"kind": "chaotic", "base": {"kind": "magma", "max_arity": 6}},
    ],
}


def test_pasting_diagrams():
    assert gwop.pd_dim("dim=2:[[oo][o][][oooo]]") == 2
    assert gwop.pd_boundary("dim=2:[[oo][o][][oooo]]") == "dim=1:[oooo]"
    assert gwop.pd_vertices("dim=2:[[oo][o][][oooo]]") == 12
    assert gwop.pd_nodes("dim=1:[oo]") == [(0, 2)]
    assert gwop.pd_nodes("dim=2:[[oo][o][][oooo]]") == [
        (0, 4),
        (1, 2),
        (1, 1),
        (1, 0),
        (1, 4),
    ]
    assert gwop.enumerate_pds(1, 4) == [
        "dim=1:[]",
        "dim=1:[o]",
        "dim=1:[oo]",
        "dim=1:[ooo]",
    ]
    assert gwop.substitute("dim=1:[oo]", [["dim=0:o"] * 3, ["dim=1:[o]", "dim=1:[]"]]) == (
        "dim=1:[o]"
    )
    with pytest.raises(gwop.GwopError):
        gwop.pd_boundary("dim=0:o")


def test_q_operad():
    assert gwop.q_count(CY2, "dim=2:[[oo][o][][oooo]]") == 4
    cells = gwop.q_cells(CY2, "dim=2:[[oo][o][][oooo]]")
    assert len(cells) == 4
    assert cells[0]["shape"] == "dim=2:[[oo][o][][oooo]]"
    assert gwop.qcell_key(CY2, cells[0]) == (
        "dim=2:[[oo][o][][oooo]]{h0a4:(0>0);h1a2:*;h1a1:*;h1a0:*;h1a4:*}"
    )
    src = gwop.q_boundary(CY2, cells[1], "source")
    assert gwop.qcell_key(CY2, src) == "dim=1:[oooo]{h0a4:0}"
    assert gwop.qcell_key(CY2, gwop.q_unit(CY2, 1)) == "dim=1:[o]{h0a1:0}"

    assert gwop.q_contractible(CY2)
    assert not gwop.q_contractible(MAGMA2)
    ok, _ = gwop.q_contractible_lifting(CY2, 4)
    assert ok
    ok, witness = gwop.q_contractible_lifting(MAGMA2, 4)
    assert not ok
    assert "no 1-filler" in witness

    ok, witness = gwop.interchange(CY2, 0, 1)
    assert ok
    assert "both sides equal" in witness


def test_free_algebra():
    arrow = {
        "n": 2,
        "cells": [["x", "y"], ["u"], []],
        "src": [["x"], []],
        "tgt": [["y"], []],
    }
    free = gwop.q_apply(TERMINAL2, arrow, 4)
    assert [len(level) for level in free["cells"]] == [2, 3, 3]
    chaotic = gwop.chaotic_gset(["a", "b"], 1)
    assert [len(level) for level in chaotic["cells"]] == [2, 4]
    assert gwop.terminal_gset(2)["cells"] == [["*"], ["*"], ["*"]]


def test_distributive_law():
    graph = {"objects": ["x"], "hom": [[gwop.chaotic_gset(["0", "1"], 1)]]}
    ok, witness = gwop.distributive_law(graph, {"kind": "terminal", "n": 1})
    assert ok, witness


def test_interval():
    f = {"k": 2, "pts": [["0", "0"], ["1", "2"]]}
    g1 = {"k": 3, "pts": [["0", "0"], ["1", "3"]]}
    g2 = {"k": 0, "pts": [["0", "0"], ["1", "0"]]}
    h = gwop.pl_compose(f, [g1, g2])
    assert h == {"k": 3, "pts": [["0", "0"], ["1/2", "3"], ["1", "3"]]}
    assert gwop.pl_eval(h, "1/4") == "3/2"
    ok, witness = gwop.pl_check(25, 1)
    assert ok, witness
