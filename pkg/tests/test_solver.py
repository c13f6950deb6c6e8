from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kended.errors import ConnectivityError, ParameterError, SizeError
from kended.graph import FamilySpec, Graph, build_family, random_connected
from kended.solver import (
    ENV_MAX_N,
    bruteforce_profile,
    enumerate_max_cycles,
    enumerate_max_trees,
    heuristic_k_ended,
    longest_cycle_length,
    min_leaf_count_spanning,
    solver_limit,
    t_k_bruteforce,
    t_k_exact,
    t_profile,
    t_values,
)
from kended.trees import SubTree, leaves


def fam(kind, *params):
    return build_family(FamilySpec(kind, params))


def naive_max_trees(g: Graph, k: int) -> set:
    """Every subtree with at most k leaves and maximum order, by edge subsets."""
    best, found = 0, set()
    for size in range(1, g.n + 1):
        for S in combinations(range(g.n), size):
            induced = [e for e in g.edges if e[0] in S and e[1] in S]
            for cand in combinations(induced, size - 1):
                try:
                    t = SubTree(g, frozenset(S), frozenset(cand))
                except Exception:
                    continue
                if len(leaves(t)) > k:
                    continue
                if size > best:
                    best, found = size, set()
                found.add(t.key())
    return found


def check_cycle(g: Graph, cyc) -> None:
    assert len(set(cyc)) == len(cyc)
    if len(cyc) == 2:
        assert g.has_edge(*cyc)
    elif len(cyc) > 2:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert g.has_edge(a, b)


def test_profiles_of_named_graphs(g1_22):
    assert t_values(g1_22, 3) == [3, 5, 7]
    assert t_values(fam("complete", 3), 2) == [3, 3]
    assert t_values(fam("star", 3), 4) == [2, 3, 4, 4]
    assert t_values(fam("cycle", 6), 2) == [6, 6]
    assert t_values(fam("krr", 3), 2) == [6, 6]
    assert t_values(fam("path", 5), 3) == [2, 5, 5]
    assert t_values(Graph(1, (0,)), 3) == [1, 1, 1]
    assert t_values(fam("g3", 3), 4, max_n=12) == [6, 8, 10, 12]


def test_exact_matches_bruteforce_small(corpus_upto5):
    for g in corpus_upto5:
        assert t_values(g, 5) == bruteforce_profile(g, 5)


def test_witnesses_are_valid(corpus_upto5):
    for g in corpus_upto5[::7]:
        for res in t_profile(g, 4):
            if res.k == 1:
                assert len(res.witness) == res.order
                check_cycle(g, res.witness)
            else:
                assert isinstance(res.witness, SubTree)
                assert res.witness.order == res.order
                assert len(leaves(res.witness)) <= res.k


def test_profile_is_monotone_and_bounded(corpus_upto5):
    for g in corpus_upto5:
        tv = t_values(g, 6)
        assert all(a <= b for a, b in zip(tv, tv[1:]))
        assert tv[-1] == g.n


def test_t_k_bruteforce_single():
    assert t_k_bruteforce(fam("star", 3), 3) == 4
    with pytest.raises(ParameterError):
        t_k_bruteforce(fam("star", 3), 0)


def test_enumerate_max_trees_matches_naive(corpus_upto5):
    for g in corpus_upto5[::5]:
        for k in (2, 3):
            got = [t.key() for t in enumerate_max_trees(g, k)]
            assert len(got) == len(set(got))
            assert set(got) == naive_max_trees(g, k)


def test_enumerate_max_trees_g1(g1_22):
    trees = list(enumerate_max_trees(g1_22, 3))
    assert len(trees) == 8
    with pytest.raises(ParameterError):
        list(enumerate_max_trees(g1_22, 1))


def test_enumerate_max_cycles():
    cycles = list(enumerate_max_cycles(fam("complete", 4)))
    assert len(cycles) == 3
    for c in cycles:
        check_cycle(fam("complete", 4), c)
    assert list(enumerate_max_cycles(fam("path", 3))) == [(0, 1), (1, 2)]


def test_longest_cycle_conventions():
    assert longest_cycle_length(Graph(1, (0,))) == 1
    assert longest_cycle_length(fam("path", 4)) == 2
    assert longest_cycle_length(fam("cycle", 7)) == 7


def test_min_leaf_spanning():
    count, tree = min_leaf_count_spanning(fam("star", 4))
    assert count == 4 and tree.order == 5
    count, tree = min_leaf_count_spanning(fam("cycle", 5))
    assert count == 2 and len(leaves(tree)) == 2
    with pytest.raises(ParameterError):
        min_leaf_count_spanning(Graph(1, (0,)))


def test_input_guards(monkeypatch):
    with pytest.raises(ConnectivityError):
        t_k_exact(Graph.from_edges(3, [(0, 1)]), 2)
    with pytest.raises(ConnectivityError):
        t_k_exact(Graph(0, ()), 2)
    with pytest.raises(ParameterError):
        t_k_exact(fam("path", 3), 0)
    big = fam("path", 11)
    with pytest.raises(SizeError):
        t_k_exact(big, 2)
    assert t_k_exact(big, 2, max_n=11).order == 11
    monkeypatch.setenv(ENV_MAX_N, "11")
    assert solver_limit() == 11
    assert t_k_exact(big, 2).order == 11
    monkeypatch.setenv(ENV_MAX_N, "many")
    with pytest.raises(ParameterError):
        solver_limit()


def test_heuristic_lower_bound_and_determinism():
    for seed in range(40):
        g = random_connected(5 + seed % 5, 0.35, seed)
        tv = t_values(g, 4)
        for k in range(1, 5):
            t = heuristic_k_ended(g, k, seed)
            assert len(leaves(t)) <= k
            assert t.order <= tv[k - 1]
            assert heuristic_k_ended(g, k, seed) == t
    with pytest.raises(ParameterError):
        heuristic_k_ended(fam("path", 3), 0, 1)


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(2, 7))
    seed = draw(st.integers(0, 10**6))
    p = draw(st.sampled_from([0.3, 0.5, 0.8]))
    return random_connected(n, p, seed)


@settings(max_examples=40, deadline=None)
@given(connected_graphs())
def test_exact_matches_bruteforce_property(g):
    assert t_values(g, 4) == bruteforce_profile(g, 4)


def spider_orders(g: Graph) -> set[int]:
    """Orders of all subtrees with at most 3 leaves, found without the subset tables.

    Such a tree is a spider: a centre c plus up to three vertex-disjoint
    paths leaving c.  ``reach[mask]`` holds the possible end vertices of
    a path starting at c that covers exactly ``mask``.
    """
    n = g.n
    orders = set()
    for c in range(n):
        reach = [0] * (1 << n)
        reach[1 << c] = 1 << c
        for mask in range(1 << n):
            ends = reach[mask]
            e = ends
            while e:
                low = e & -e
                e ^= low
                nxt = g.adj[low.bit_length() - 1] & ~mask
                while nxt:
                    lw = nxt & -nxt
                    nxt ^= lw
                    reach[mask | lw] |= lw
        leg = [bool(reach[m | 1 << c]) for m in range(1 << n)]
        rest = g.full_mask & ~(1 << c)
        legs = [m for m in range(1 << n) if leg[m] and not m >> c & 1]
        two = set()
        for a in legs:
            for b in legs:
                if not a & b:
                    two.add(a | b)
        for x in two:
            for a in legs:
                if not a & x:
                    orders.add((a | x).bit_count() + 1)
    return orders


def test_two_hub_family_values_by_spider_search():
    # 5K_2 + K_2: blocks (0,1) .. (8,9), hubs 10 and 11
    g = fam("g3", 3)
    assert max(spider_orders(g)) == 10
    four_leaves = SubTree.from_edges(g, [
        (10, 0), (0, 1), (1, 11),
        (10, 2), (2, 3), (10, 4), (4, 5),
        (11, 6), (6, 7), (11, 8), (8, 9),
    ])
    assert four_leaves.order == 12 and len(leaves(four_leaves)) == 4
    assert t_values(g, 4, max_n=12) == [6, 8, 10, 12]


def test_spider_search_agrees_with_t3(corpus_upto5):
    for g in corpus_upto5[::3]:
        assert max(spider_orders(g)) == t_values(g, 3)[2]
