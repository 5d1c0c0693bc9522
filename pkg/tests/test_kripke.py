import logging

import pytest
from hypothesis import given

import oracles
from conftest import models
from paratopo import topology as tp
from paratopo.errors import ValuationNotClosed
from paratopo.formula import Mode, enumerate_formulas, parse
from paratopo.kripke import (
    KripkeModel, check_translation, eval_kripke, kripke_extension, kripke_to_topo, topo_to_kripke,
)
from paratopo.semantics import new_model


def test_kripke_negation():
    k = KripkeModel.build(1, [(0, 0)], {"p": [0]})
    assert not eval_kripke(k, 0, parse("~p"))
    k = KripkeModel.build(2, [(0, 1)], {"p": []})
    assert eval_kripke(k, 0, parse("~p"))
    dead = KripkeModel.build(1, [], {"p": []})
    assert eval_kripke(dead, 0, parse("[]p")) and not eval_kripke(dead, 0, parse("<>p"))


def test_topo_to_kripke_examples():
    assert topo_to_kripke(new_model(tp.c3(), "paraconsistent", {})).relation == {
        (0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)}
    assert topo_to_kripke(new_model(tp.discrete(3), "paraconsistent", {})).relation == {(i, i) for i in range(3)}
    assert len(topo_to_kripke(new_model(tp.indiscrete(3), "paraconsistent", {})).relation) == 9


def test_kripke_to_topo_examples(caplog):
    assert kripke_to_topo(KripkeModel.build(2, [(0, 0), (1, 1)], {})).space == tp.discrete(2)
    chain = [(0, 0), (1, 0), (1, 1)]
    m = kripke_to_topo(KripkeModel.build(2, chain, {"p": [0, 1]}))
    assert {frozenset(tp.members(c)) for c in m.space.closeds} == {frozenset(), frozenset({1}), frozenset({0, 1})}
    with pytest.raises(ValuationNotClosed):
        kripke_to_topo(KripkeModel.build(2, chain, {"p": [0]}))
    kripke_to_topo(KripkeModel.build(2, chain, {"p": [1]}))
    with caplog.at_level(logging.WARNING):
        kripke_to_topo(KripkeModel.build(2, [(1, 0)], {}))
    assert "not a preorder" in caplog.text


def test_translation_on_c3():
    m = new_model(tp.c3(), "paraconsistent", {"p": [1, 2]})
    rep = check_translation(m, [parse("~p"), parse("[]p"), parse("p")])
    assert rep.biconditional_ok
    assert rep.rows[1].kripke == 0


@given(models(mode="paraconsistent", max_n=4))
def test_translation_matches_pointwise_kripke_oracle(data):
    n, opens, m = data
    k = topo_to_kripke(m)
    val = {p: set(tp.members(v)) for p, v in m.valuation.items()}
    for f in enumerate_formulas(m.props, 2, 80, Mode.PARACONSISTENT):
        ext = kripke_extension(k, f)
        assert all(bool(ext >> w & 1) == oracles.kripke_holds(n, k.relation, val, w, f) for w in range(n))
    assert check_translation(m, enumerate_formulas(m.props, 3, 150, Mode.PARACONSISTENT)).biconditional_ok


@given(models(mode="paraconsistent", max_n=4))
def test_round_trip_keeps_closed_sets(data):
    m = data[2]
    back = kripke_to_topo(topo_to_kripke(m))
    assert set(back.space.closeds) == set(m.space.closeds)


@given(models(mode="paraconsistent", max_n=4))
def test_negation_is_not_box(data):
    m = data[2]
    k = topo_to_kripke(m)
    for f in enumerate_formulas(m.props, 1, 30, Mode.PARACONSISTENT):
        assert kripke_extension(k, parse(f"~({f})")) == tp.full_set(m.n) & ~kripke_extension(k, parse(f"[]({f})"))
