from __future__ import annotations

import pytest

from kended.errors import InvalidExchangeError, PreconditionError
from kended.graph import FamilySpec, Graph, build_family, enumerate_labeled_connected
from kended.solver import t_values
from kended.transforms import (
    Outcome,
    ReplayReport,
    _check_swaps,
    exchange,
    leaf_edge_reduction,
    proof_replay,
    prune_shortest_tailing,
    tailing_swap,
)
from kended.trees import SubTree, leaves, tailings

SPIDER = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]


def spider_with(extra, more=()):
    edges = SPIDER + list(more)
    n = 1 + max(max(e) for e in edges + list(extra))
    g = Graph.from_edges(n, edges + list(extra))
    return g, SubTree.from_edges(g, edges)


def test_leaf_edge_reduction_became_cycle():
    g = build_family(FamilySpec("cycle", (4,)))
    t = SubTree.from_path(g, [0, 1, 2, 3])
    res = leaf_edge_reduction(t, (3, 0))
    assert res.outcome is Outcome.BECAME_CYCLE
    assert res.classification == "became-cycle"
    assert res.tree is None and res.cycle == (0, 1, 2, 3)


def test_leaf_edge_reduction_fewer_leaves():
    g, t = spider_with([(2, 4)])
    res = leaf_edge_reduction(t, (2, 4))
    assert res.outcome is Outcome.FEWER_LEAVES
    assert res.classification == "fewer-leaves-same-order"
    # pivot 0, cycle neighbours 1 and 3 tie on degree, smaller index loses its edge
    assert (0, 1) not in res.tree.edges and (2, 4) in res.tree.edges
    assert leaves(res.tree) == {1, 6}
    assert res.tree.vertices == t.vertices


def test_leaf_edge_reduction_preconditions():
    g, t = spider_with([(2, 4), (1, 4)])
    with pytest.raises(PreconditionError):
        leaf_edge_reduction(t, (1, 4))  # 1 is not a leaf
    with pytest.raises(PreconditionError):
        leaf_edge_reduction(t, (2, 6))  # not a host edge
    path = SubTree.from_path(g, [1, 2])
    with pytest.raises(PreconditionError):
        leaf_edge_reduction(path, (1, 2))  # already a tree edge


def test_exchange_preconditions():
    g = build_family(FamilySpec("complete", (5,)))
    t = SubTree.from_path(g, [0, 1, 2, 3])
    with pytest.raises(PreconditionError):
        exchange(t, [(0, 2)], [])
    with pytest.raises(PreconditionError):
        exchange(t, [(0, 2), (0, 3), (1, 3)], [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(PreconditionError):
        exchange(t, [(0, 1)], [(1, 2)])  # adds a tree edge
    with pytest.raises(PreconditionError):
        exchange(t, [(0, 2)], [(0, 3)])  # removes a non-tree edge
    with pytest.raises(PreconditionError):
        exchange(t, [(0, 4)], [(0, 1)])  # 4 is outside the tree
    sparse = build_family(FamilySpec("path", (4,)))
    with pytest.raises(PreconditionError):
        exchange(SubTree.from_path(sparse, [0, 1, 2, 3]), [(0, 2)], [(0, 1)])


def test_exchange_invalid_result():
    g = build_family(FamilySpec("complete", (4,)))
    t = SubTree.from_path(g, [0, 1, 2, 3])
    with pytest.raises(InvalidExchangeError):
        exchange(t, [(0, 2)], [(2, 3)])


def test_exchange_outcomes():
    g = build_family(FamilySpec("complete", (4,)))
    path = SubTree.from_path(g, [0, 1, 2, 3])
    res = exchange(path, [(1, 3)], [(2, 3)])
    assert res.outcome is Outcome.MORE_LEAVES
    res = exchange(path, [(0, 2)], [(1, 2)])
    assert res.outcome is Outcome.RETAILED and leaves(res.tree) == {1, 3}
    star = SubTree.from_edges(g, [(0, 1), (0, 2), (0, 3)])
    res = exchange(star, [(1, 2)], [(0, 2)])
    assert res.outcome is Outcome.FEWER_LEAVES
    res = exchange(star, [(1, 2), (2, 3)], [(0, 2), (0, 3)])
    assert res.outcome is Outcome.FEWER_LEAVES and leaves(res.tree) == {0, 3}


def test_tailing_swap_at_anchor_loses_a_leaf():
    g, t = spider_with([(2, 3)])
    res = tailing_swap(t, 2, 3)
    assert res.outcome is Outcome.FEWER_LEAVES
    assert res.new_tailings is None
    assert leaves(res.tree) == {4, 6}


def test_tailing_swap_inside_tailing_retails():
    g, t = spider_with([(2, 4)], more=[(4, 7)])
    dec = tailings(t)
    assert dec.tailings[dec.leaves.index(7)] == (7, 4, 3)
    res = tailing_swap(t, 2, 4, dec)
    assert res.outcome is Outcome.RETAILED
    assert res.new_tailings == ((7,), (3,))
    assert leaves(res.tree) == {3, 6, 7}


def test_tailing_swap_preconditions():
    g, t = spider_with([(2, 4), (2, 0)], more=[(4, 7)])
    with pytest.raises(PreconditionError):
        tailing_swap(t, 1, 4)  # 1 is not a leaf
    with pytest.raises(PreconditionError):
        tailing_swap(t, 2, 0)  # 0 is the branch vertex
    with pytest.raises(PreconditionError):
        tailing_swap(t, 2, 1)  # own tailing
    with pytest.raises(PreconditionError):
        tailing_swap(t, 6, 7)  # 7 is a leaf


def test_prune_shortest_tailing():
    g, t = spider_with([], more=[(4, 7)])
    out = prune_shortest_tailing(t)
    # tailings (2,1), (7,4,3), (6,5): the first of the two shortest goes
    assert out.vertices == t.vertices - {1, 2}
    assert leaves(out) == {6, 7}


def test_claim6_detector_flags_short_segments():
    g, t = spider_with([(2, 4)], more=[(4, 7)])
    rep = ReplayReport(2, 2, True, 0, 0)
    _check_swaps(rep, t, tailings(t), 2)
    assert not rep.claim6_ok and not rep.ok
    assert rep.failures[0][1] == "claim6"


def test_proof_replay_g1(g1_22):
    rep = proof_replay(g1_22, 2, 2)
    assert rep.precondition_held and rep.ok
    assert (rep.t_k, rep.t_k1, rep.trees_checked) == (5, 7, 8)
    rep = proof_replay(g1_22, 2, 3)
    assert not rep.precondition_held and rep.trees_checked == 0
    with pytest.raises(PreconditionError):
        proof_replay(g1_22, 0, 1)


def test_proof_replay_exhaustive_upto5():
    runs = 0
    for n in range(1, 6):
        for g in enumerate_labeled_connected(n):
            tv = t_values(g, 4)
            for k in range(1, 4):
                for lam in range(1, 4):
                    if tv[k - 1] <= tv[k] - lam:
                        rep = proof_replay(g, k, lam)
                        assert rep.ok, rep.failures
                        runs += 1
    assert runs == 972
