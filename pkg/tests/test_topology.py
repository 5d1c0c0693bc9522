import itertools

import pytest
from hypothesis import given

import oracles
from conftest import c3_opens, spaces, to_topology
from paratopo import topology as tp
from paratopo.errors import EmptyCarrier, MissingExtremes, NotClosedUnderOps


def fs(mask):
    return frozenset(tp.members(mask))


def test_c3_is_valid():
    assert oracles.is_topology(3, [frozenset(o) for o in c3_opens()])
    t = tp.from_opens(3, c3_opens())
    assert t == tp.c3()
    assert len(t.opens) == 4


def test_one_point_space():
    t = tp.from_opens(1, [[], [0]])
    assert t == tp.discrete(1) == tp.indiscrete(1)


def test_missing_union_is_named():
    with pytest.raises(NotClosedUnderOps) as exc:
        tp.from_opens(2, [[], [0], [1]])
    assert exc.value.op == "∪"
    assert (exc.value.left, exc.value.right) == (1, 2)


def test_missing_extremes():
    with pytest.raises(MissingExtremes):
        tp.from_opens(2, [[0], [0, 1]])


def test_from_preorder_chain():
    t = tp.from_preorder(tp.Preorder.closure_of(2, [(0, 1)]))
    assert {fs(o) for o in t.opens} == {frozenset(), frozenset({1}), frozenset({0, 1})}


def test_from_preorder_discrete_and_total():
    assert len(tp.from_preorder(tp.Preorder.closure_of(2, [])).opens) == 4
    chain = tp.from_preorder(tp.Preorder.closure_of(3, [(0, 1), (1, 2)]))
    expected = oracles.upsets(3, {(0, 1), (1, 2), (0, 2)})
    assert {fs(o) for o in chain.opens} == set(expected)
    assert len(chain.opens) == 4


@given(spaces(max_n=5))
def test_preorder_round_trip(sp):
    n, opens = sp
    t = to_topology(n, opens)
    pre = tp.specialization_preorder(t)
    assert {fs(o) for o in t.opens} == set(oracles.upsets(n, pre.leq))
    assert tp.from_preorder(pre) == t


@pytest.mark.parametrize("x, interior, closure, boundary", [
    ({1, 2}, set(), {1, 2}, {1, 2}),
    ({0, 1}, {0, 1}, {0, 1, 2}, {2}),
    ({0}, {0}, {0, 1, 2}, {1, 2}),
    ({1}, set(), {1, 2}, {1, 2}),
    (set(), set(), set(), set()),
    ({0, 1, 2}, {0, 1, 2}, {0, 1, 2}, set()),
])
def test_c3_operators(x, interior, closure, boundary):
    t = tp.c3()
    m = tp.pset(x)
    assert fs(tp.interior(t, m)) == interior
    assert fs(tp.closure(t, m)) == closure
    assert fs(tp.boundary(t, m)) == boundary


@given(spaces(max_n=5))
def test_operators_match_oracle(sp):
    n, opens = sp
    t = to_topology(n, opens)
    for x in oracles.subsets(n):
        m = tp.pset(x)
        assert fs(tp.interior(t, m)) == oracles.interior(opens, x)
        assert fs(tp.closure(t, m)) == oracles.closure(n, opens, x)
        assert fs(tp.boundary(t, m)) == oracles.boundary(n, opens, x)


@given(spaces(max_n=5))
def test_kuratowski_laws(sp):
    t = to_topology(*sp)
    for x in tp.all_subsets(t.n):
        c = tp.closure(t, x)
        assert x & ~c == 0 and tp.closure(t, c) == c
        assert tp.interior(t, x) == t.full & ~tp.closure(t, t.full & ~x)
        for y in (0, t.full, x >> 1):
            assert tp.closure(t, x | y) == c | tp.closure(t, y)


def test_minimal_neighbourhoods():
    t = tp.c3()
    assert fs(tp.minimal_neighborhood(t, 2)) == {0, 1, 2}
    assert fs(tp.minimal_neighborhood(t, 0)) == {0}
    assert all(tp.minimal_neighborhood(tp.discrete(4), s) == 1 << s for s in range(4))


def test_components_examples():
    assert tp.is_connected(tp.c3())
    two = tp.from_opens(6, [sorted(set(a) | {b + 3 for b in c}) for a in c3_opens() for c in c3_opens()])
    assert [fs(c) for c in tp.connected_components(two)] == [{0, 1, 2}, {3, 4, 5}]
    assert tp.is_connected(tp.discrete(1))


@given(spaces(max_n=5))
def test_components_match_oracle(sp):
    n, opens = sp
    t = to_topology(n, opens)
    comps = tp.connected_components(t)
    assert [fs(c) for c in comps] == oracles.components(n, opens)
    assert tp.is_connected(t) == (len(comps) == 1)


def test_subspace_and_dual():
    sub = tp.subspace(tp.c3(), tp.pset({1, 2}))
    assert sub.points == (1, 2)
    assert {fs(o) for o in sub.topology.opens} == {frozenset(), frozenset({0}), frozenset({0, 1})}
    assert tp.subspace(tp.c3(), tp.c3().full).topology == tp.c3()
    assert tp.subspace(tp.c3(), 1 << 2).topology == tp.discrete(1)
    with pytest.raises(EmptyCarrier):
        tp.subspace(tp.c3(), 0)
    assert {fs(o) for o in tp.dual(tp.c3()).opens} == {frozenset(), frozenset({2}), frozenset({1, 2}), frozenset({0, 1, 2})}
    assert tp.dual(tp.discrete(3)) == tp.discrete(3)
    assert tp.dual(tp.indiscrete(3)) == tp.indiscrete(3)


@given(spaces(max_n=4))
def test_subspace_opens_are_traces(sp):
    n, opens = sp
    t = to_topology(n, opens)
    for x in oracles.subsets(n):
        if not x:
            continue
        sub = tp.subspace(t, tp.pset(x))
        traces = {o & x for o in opens}
        assert {frozenset(sub.points[i] for i in tp.members(o)) for o in sub.topology.opens} == traces


def test_extreme_points():
    assert tp.minimum_point(tp.c3()) == 0
    assert tp.maximum_point(tp.c3()) == 2
    assert tp.minimum_point(tp.discrete(2)) is None


@given(spaces(max_n=4))
def test_specialization_agrees_with_closure(sp):
    t = to_topology(*sp)
    for x, y in itertools.product(range(t.n), repeat=2):
        assert tp.specializes(t, x, y) == bool(tp.closure(t, 1 << y) >> x & 1)


@given(spaces(max_n=5))
def test_complement_has_the_same_boundary(sp):
    t = to_topology(*sp)
    for x in tp.all_subsets(t.n):
        assert tp.boundary(t, x) == tp.boundary(t, t.full & ~x)
