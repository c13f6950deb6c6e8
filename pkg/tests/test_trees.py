from __future__ import annotations

import pytest

from kended.errors import NoBranchVertexError, TreeError
from kended.graph import FamilySpec, Graph, build_family
from kended.trees import (
    SubTree,
    branch_vertices,
    dominates,
    is_dominating,
    is_independence_tree,
    leaves,
    spanning_trees,
    tailings,
)

K5 = build_family(FamilySpec("complete", (5,)))


def spider(g1):
    # centre 6 with legs 6-0-1, 6-2-3, 6-4-5 in g1(2,2)
    return SubTree.from_edges(g1, [(6, 0), (0, 1), (6, 2), (2, 3), (6, 4), (4, 5)])


def test_subtree_validation():
    g = build_family(FamilySpec("cycle", (4,)))
    with pytest.raises(TreeError):
        SubTree(g, frozenset(), frozenset())
    with pytest.raises(TreeError):
        SubTree.build(g, [0, 1, 2], [(0, 1)])
    with pytest.raises(TreeError):
        SubTree.build(g, [0, 2], [(0, 2)])  # not a host edge
    with pytest.raises(TreeError):
        SubTree(g, frozenset({0, 1, 2, 3}), frozenset({(0, 1), (1, 2), (0, 3)} | {(2, 3)}))
    with pytest.raises(TreeError):
        SubTree(g, frozenset({0, 1}), frozenset({(1, 0)}))
    with pytest.raises(TreeError):
        SubTree(g, frozenset({0, 1, 2}), frozenset({(0, 1), (0, 3)}))
    t = SubTree.from_path(g, [3, 0, 1, 2])
    assert t.order == 4 and t.mask == 0b1111
    assert t.path_between(3, 2) == [3, 0, 1, 2]
    assert t.neighbors(0) == [1, 3] and t.degree(0) == 2


def test_leaves_of_small_trees():
    g = Graph.from_edges(2, [(0, 1)])
    assert leaves(SubTree.single(g, 1)) == {1}
    assert leaves(SubTree.from_path(g, [0, 1])) == {0, 1}


def test_spider_tailings(g1_22):
    t = spider(g1_22)
    assert leaves(t) == {1, 3, 5}
    assert branch_vertices(t) == {6}
    dec = tailings(t)
    assert dec.leaves == (1, 3, 5)
    assert dec.tailings == ((1, 0), (3, 2), (5, 4))
    assert dec.anchors == ((0, 6), (2, 6), (4, 6))
    assert dec.orders() == (2, 2, 2)
    assert dec.index_of(2) == 1 and dec.index_of(6) is None


def test_tailings_need_a_branch_vertex():
    g = build_family(FamilySpec("path", (4,)))
    with pytest.raises(NoBranchVertexError):
        tailings(SubTree.from_path(g, [0, 1, 2, 3]))


def test_tailings_with_two_branch_vertices():
    # double broom: 0-1, 1-2, 1-3, 3-4, 4-5, 4-6, 6-7
    edges = [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6), (6, 7)]
    g = Graph.from_edges(8, edges)
    dec = tailings(SubTree.from_edges(g, edges))
    assert dec.leaves == (0, 2, 5, 7)
    assert dec.tailings == ((0,), (2,), (5,), (7, 6))
    assert dec.anchors == ((0, 1), (2, 1), (5, 4), (6, 4))


def test_domination_and_independence(g1_22):
    t = spider(g1_22)
    assert is_dominating(g1_22, t)
    assert is_independence_tree(g1_22, t)
    path = SubTree.from_path(g1_22, [0, 1])
    assert not dominates(g1_22, path.mask)  # 2-3 stays outside
    leafy = SubTree.from_edges(g1_22, [(6, 0), (6, 1)])
    assert not is_independence_tree(g1_22, leafy)  # 0 and 1 adjacent
    assert is_independence_tree(g1_22, SubTree.single(g1_22, 0))


@pytest.mark.parametrize("q, count", [(2, 1), (3, 3), (4, 16), (5, 125)])
def test_spanning_tree_counts_complete(q, count):
    g = build_family(FamilySpec("complete", (q,)))
    trees = list(spanning_trees(g))
    assert len(trees) == count == len(set(trees))
    for edges in trees:
        SubTree(g, frozenset(range(q)), frozenset(edges))


def test_spanning_tree_counts_misc():
    assert len(list(spanning_trees(build_family(FamilySpec("cycle", (6,)))))) == 6
    assert len(list(spanning_trees(build_family(FamilySpec("complete-bipartite", (2, 3)))))) == 12
    assert list(spanning_trees(K5, 0b1)) == [()]
    assert len(list(spanning_trees(K5, 0b111))) == 3
    disconnected = Graph.from_edges(3, [(0, 1)])
    assert list(spanning_trees(disconnected)) == []
