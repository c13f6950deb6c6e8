"""Exact largest k-ended trees, witnesses, and a brute-force oracle.

For k >= 2 the solver works over vertex subsets: a k-ended tree of order s
exists iff some connected s-subset S has a spanning tree with at most k
leaves.  The minimum leaf count of every subset is filled in by one pass
over the subsets in increasing bitmask order (see :class:`SubsetTables`).

For k = 1 the value is the circumference, with the conventions that a
single vertex is a cycle of order 1 and an edge a cycle of order 2.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import ConnectivityError, ParameterError, SizeError
from .graph import Graph, bits
from .trees import SubTree, leaves, spanning_trees

DEFAULT_MAX_N = 10
ENV_MAX_N = "KENDED_MAX_N"


def solver_limit(max_n: int | None = None) -> int:
    if max_n is not None:
        return max_n
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ParameterError(f"{ENV_MAX_N} must be positive")
    return value


def _check_input(g: Graph, k: int | None = None, max_n: int | None = None) -> None:
    if k is not None and k < 1:
        raise ParameterError("k must be a positive integer")
    if g.n < 1:
        raise ConnectivityError("graph has no vertices")
    if not g.is_connected():
        raise ConnectivityError("graph is disconnected")
    limit = solver_limit(max_n)
    if g.n > limit:
        raise SizeError(f"exact solver limited to n <= {limit} (got {g.n}); set {ENV_MAX_N} to override")


def _vertex_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


class SubsetTables:
    """Per-subset facts about a graph, computed once.

    ``min_leaves[S]``
        minimum number of leaves of a spanning tree of ``g[S]``
        (1 for a single vertex, ``NO_TREE`` when ``g[S]`` is disconnected);
    ``cyclic[S]``
        whether ``g[S]`` has a spanning cycle, counting one vertex and one
        edge as degenerate cycles.

    Leaf counts use the recurrence "remove a leaf w": if ``x`` is the
    neighbour ``w`` hangs from, the remaining tree spans ``S - w`` and
    either had ``x`` as a leaf (same count) or not (one more).
    """

    def __init__(self, g: Graph):
        self.g = g
        n = g.n
        adj = g.adj
        size = 1 << n
        no_tree = n + 1
        self.NO_TREE = no_tree
        best = [no_tree] * size
        with_leaf = [no_tree] * (size * n)
        choice = [-1] * (size * n)
        for S in range(1, size):
            c = S.bit_count()
            if c == 1:
                v = S.bit_length() - 1
                best[S] = 1
                with_leaf[S * n + v] = 1
                continue
            if c == 2:
                u = (S & -S).bit_length() - 1
                v = S.bit_length() - 1
                if adj[u] >> v & 1:
                    best[S] = 2
                    with_leaf[S * n + u] = 2
                    with_leaf[S * n + v] = 2
                    choice[S * n + u] = v << 1
                    choice[S * n + v] = u << 1
                continue
            b = no_tree
            rest = S
            while rest:
                low = rest & -rest
                rest ^= low
                w = low.bit_length() - 1
                R = S ^ low
                bR = best[R]
                if bR == no_tree:
                    continue
                nb = adj[w] & R
                if not nb:
                    continue
                cand = bR + 1
                ch = ((nb & -nb).bit_length() - 1) << 1
                base = R * n
                while nb:
                    lx = nb & -nb
                    nb ^= lx
                    x = lx.bit_length() - 1
                    if with_leaf[base + x] == bR:
                        cand = bR
                        ch = (x << 1) | 1
                        break
                with_leaf[S * n + w] = cand
                choice[S * n + w] = ch
                if cand < b:
                    b = cand
            best[S] = b
        self.min_leaves = best
        self._with_leaf = with_leaf
        self._choice = choice

        # Held-Karp over paths that start at the lowest vertex of their set
        ends = [0] * size
        for v in range(n):
            ends[1 << v] = 1 << v
        full = size - 1
        for S in range(1, size):
            e = ends[S]
            if not e:
                continue
            low = S & -S
            ext = full & ~S & ~((low << 1) - 1)
            if not ext:
                continue
            while e:
                lv = e & -e
                e ^= lv
                nb = adj[lv.bit_length() - 1] & ext
                while nb:
                    lw = nb & -nb
                    nb ^= lw
                    ends[S | lw] |= lw
        cyclic = [False] * size
        for S in range(1, size):
            c = S.bit_count()
            if c <= 2:
                cyclic[S] = best[S] <= 2
            else:
                cyclic[S] = bool(ends[S] & adj[(S & -S).bit_length() - 1])
        self.cyclic = cyclic

    # -- values --------------------------------------------------------------

    def t_values(self, k_max: int) -> list[int]:
        """``[t_1, ..., t_kmax]`` for the whole graph."""
        n = self.g.n
        by_leaves = [0] * (n + 2)
        t1 = 0
        for S in range(1, 1 << n):
            c = S.bit_count()
            ml = self.min_leaves[S]
            if ml <= n and c > by_leaves[ml]:
                by_leaves[ml] = c
            if self.cyclic[S] and c > t1:
                t1 = c
        out = [t1]
        running = max(by_leaves[1], by_leaves[2])
        for k in range(2, k_max + 1):
            if k <= n + 1:
                running = max(running, by_leaves[k])
            out.append(running)
        return out

    def max_sets(self, k: int, order: int) -> list[int]:
        """Vertex masks of size ``order`` carrying a k-ended tree (cycle if k = 1)."""
        n = self.g.n
        if k == 1:
            masks = [S for S in range(1, 1 << n) if self.cyclic[S] and S.bit_count() == order]
        else:
            masks = [S for S in range(1, 1 << n) if self.min_leaves[S] <= k and S.bit_count() == order]
        return sorted(masks, key=_vertex_key)

    # -- witnesses -----------------------------------------------------------

    def tree_edges(self, S: int) -> list[tuple[int, int]]:
        """Edges of a spanning tree of ``g[S]`` with ``min_leaves[S]`` leaves."""
        if self.min_leaves[S] == self.NO_TREE:
            raise ConnectivityError("subset does not induce a connected subgraph")
        if S.bit_count() == 1:
            return []
        n = self.g.n
        target = self.min_leaves[S]
        w = next(v for v in bits(S) if self._with_leaf[S * n + v] == target)
        return self._edges_with_leaf(S, w)

    def _edges_with_leaf(self, S: int, w: int) -> list[tuple[int, int]]:
        n = self.g.n
        out = []
        while S.bit_count() > 1:
            ch = self._choice[S * n + w]
            x, keep_leaf = ch >> 1, ch & 1
            out.append((min(w, x), max(w, x)))
            S ^= 1 << w
            if keep_leaf:
                w = x
            else:
                if S.bit_count() == 1:
                    break
                target = self.min_leaves[S]
                w = next(v for v in bits(S) if self._with_leaf[S * n + v] == target)
        return out

    def tree(self, S: int) -> SubTree:
        return SubTree.build(self.g, bits(S), self.tree_edges(S))


@lru_cache(maxsize=256)
def subset_tables(g: Graph) -> SubsetTables:
    return SubsetTables(g)


# ---------------------------------------------------------------------------
# cycles


def longest_cycle_length(g: Graph) -> int:
    """Circumference by depth-first search over paths rooted at their minimum vertex.

    Degenerate cycles count: returns 1 for an edgeless graph and at least 2
    once an edge exists.  A branch is abandoned when even visiting every
    remaining eligible vertex could not beat the incumbent.
    """
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    best = 2 if g.num_edges else 1
    for s in range(n):
        eligible = g.full_mask & ~((1 << (s + 1)) - 1)
        if 1 + eligible.bit_count() <= best:
            break
        stack = [(s, 1 << s, 1)]
        while stack:
            v, used, length = stack.pop()
            if length >= 3 and adj[v] >> s & 1 and length > best:
                best = length
            free = adj[v] & eligible & ~used
            if length + (eligible & ~used).bit_count() <= best:
                continue
            while free:
                lw = free & -free
                free ^= lw
                stack.append((lw.bit_length() - 1, used | lw, length + 1))
    return best


def hamiltonian_cycles(g: Graph, mask: int) -> Iterator[tuple[int, ...]]:
    """Every spanning cycle of ``g[mask]`` once, as a vertex sequence.

    Sequences start at the minimum vertex and the second vertex is smaller
    than the last, which fixes one orientation.  Degenerate cycles: a single
    vertex yields ``(v,)`` and an edge yields ``(u, v)``.
    """
    vs = bits(mask)
    if len(vs) == 1:
        yield (vs[0],)
        return
    if len(vs) == 2:
        if g.has_edge(*vs):
            yield tuple(vs)
        return
    s = vs[0]
    adj = g.adj
    target = len(vs)
    path = [s]

    def rec(used):
        v = path[-1]
        if len(path) == target:
            if adj[v] >> s & 1 and path[1] < path[-1]:
                yield tuple(path)
            return
        free = adj[v] & mask & ~used
        for w in bits(free):
            path.append(w)
            yield from rec(used | 1 << w)
            path.pop()

    yield from rec(1 << s)


# ---------------------------------------------------------------------------
# public operations


@dataclass(frozen=True)
class TkResult:
    """The value t_k with a witness.

    ``witness`` is a :class:`SubTree` for k >= 2 and a cycle vertex
    sequence for k = 1.
    """

    k: int
    order: int
    witness: SubTree | tuple[int, ...]


def t_k_exact(g: Graph, k: int, max_n: int | None = None) -> TkResult:
    _check_input(g, k, max_n)
    tables = subset_tables(g)
    if k == 1:
        order = longest_cycle_length(g)
        masks = tables.max_sets(1, order)
        if not masks:
            raise AssertionError("cycle search and subset table disagree")
        cycle = next(hamiltonian_cycles(g, masks[0]))
        return TkResult(1, order, cycle)
    order = tables.t_values(k)[k - 1]
    # vertex sets in lexicographic order; first hit is the witness
    mask = tables.max_sets(k, order)[0]
    return TkResult(k, order, tables.tree(mask))


def t_profile(g: Graph, k_max: int, max_n: int | None = None) -> list[TkResult]:
    if k_max < 1:
        raise ParameterError("k_max must be a positive integer")
    return [t_k_exact(g, k, max_n) for k in range(1, k_max + 1)]


def t_values(g: Graph, k_max: int, max_n: int | None = None) -> list[int]:
    """``[t_1, ..., t_kmax]`` without building witnesses."""
    _check_input(g, k_max, max_n)
    return subset_tables(g).t_values(k_max)


def min_leaf_count_spanning(g: Graph, max_n: int | None = None) -> tuple[int, SubTree]:
    _check_input(g, None, max_n)
    if g.n < 2:
        raise ParameterError("minimum leaf spanning tree needs n >= 2")
    tables = subset_tables(g)
    full = g.full_mask
    return tables.min_leaves[full], tables.tree(full)


def enumerate_max_trees(g: Graph, k: int, max_n: int | None = None) -> Iterator[SubTree]:
    """Every k-ended subtree of order t_k, each once.

    Needs k >= 2; for k = 1 the maximum objects are cycles, see
    :func:`enumerate_max_cycles`.
    """
    _check_input(g, k, max_n)
    if k == 1:
        raise ParameterError("k = 1 maxima are cycles; use enumerate_max_cycles")
    tables = subset_tables(g)
    order = tables.t_values(k)[k - 1]
    for mask in tables.max_sets(k, order):
        verts = bits(mask)
        for edges in spanning_trees(g, mask):
            if len(verts) > 1:
                deg = dict.fromkeys(verts, 0)
                for u, v in edges:
                    deg[u] += 1
                    deg[v] += 1
                if sum(1 for d in deg.values() if d == 1) > k:
                    continue
            yield SubTree(g, frozenset(verts), frozenset(edges))


def enumerate_max_cycles(g: Graph, max_n: int | None = None) -> Iterator[tuple[int, ...]]:
    _check_input(g, 1, max_n)
    tables = subset_tables(g)
    order = tables.t_values(1)[0]
    for mask in tables.max_sets(1, order):
        yield from hamiltonian_cycles(g, mask)


# ---------------------------------------------------------------------------
# heuristic

HEURISTIC_RESTARTS = 3


def _bfs_tree(g: Graph, root: int, rng: random.Random) -> SubTree:
    seen = {root}
    queue = [root]
    edges = []
    for v in queue:
        nbrs = g.neighbors(v)
        rng.shuffle(nbrs)
        for w in nbrs:
            if w not in seen:
                seen.add(w)
                queue.append(w)
                edges.append((v, w))
    return SubTree.build(g, seen, edges)


def _improve(t: SubTree) -> SubTree:
    # local import: transforms depends on this module for proof replay
    from .transforms import Outcome, leaf_edge_reduction, tailing_swap
    from .trees import tailings as tailing_decomposition

    g = t.host
    improved = True
    while improved:
        improved = False
        ends = sorted(leaves(t))
        for u, v in combinations(ends, 2):
            if g.has_edge(u, v) and (u, v) not in t.edges:
                res = leaf_edge_reduction(t, (u, v))
                if res.outcome is Outcome.FEWER_LEAVES:
                    t = res.tree
                    improved = True
                    break
        if improved or len(ends) < 3:
            continue
        dec = tailing_decomposition(t)
        for j, leaf in enumerate(dec.leaves):
            for i, (w, _) in enumerate(dec.anchors):
                if i != j and w != dec.leaves[i] and g.has_edge(leaf, w) and (min(leaf, w), max(leaf, w)) not in t.edges:
                    t = tailing_swap(t, leaf, w).tree
                    improved = True
                    break
            if improved:
                break
    return t


def _trim(t: SubTree, k: int) -> SubTree:
    from .transforms import prune_shortest_tailing

    while len(leaves(t)) > k:
        if len(leaves(t)) >= 3:
            t = prune_shortest_tailing(t)
        else:
            # k = 1 and t is a path: only the one-vertex tree is 1-ended
            return SubTree.single(t.host, min(t.vertices))
    return t


def heuristic_k_ended(g: Graph, k: int, seed: int) -> SubTree:
    """A k-ended tree found by local search; never larger than t_k.

    Each of three restarts grows a randomised BFS spanning tree, removes
    leaves with leaf-to-leaf edge reductions and tailing swaps until
    neither applies, then prunes shortest tailings down to k leaves.
    """
    if k < 1:
        raise ParameterError("k must be a positive integer")
    if g.n < 1 or not g.is_connected():
        raise ConnectivityError("graph is disconnected")
    rng = random.Random(seed)
    best = None
    for _ in range(HEURISTIC_RESTARTS):
        tree = _trim(_improve(_bfs_tree(g, rng.randrange(g.n), rng)), k)
        if best is None or tree.order > best.order or (tree.order == best.order and tree.key() < best.key()):
            best = tree
    return best


# ---------------------------------------------------------------------------
# brute force


def bruteforce_profile(g: Graph, k_max: int) -> list[int]:
    """``[t_1, ..., t_kmax]`` by exhaustive filtering, sharing nothing with the tables.

    For every vertex subset S, every (|S|-1)-subset of the induced edges is
    tested for being a spanning tree and every |S|-subset for being a
    spanning cycle.
    """
    if g.n < 1 or not g.is_connected():
        raise ConnectivityError("graph is disconnected")
    n = g.n
    edges = g.edges
    min_leaves: dict[frozenset, int] = {}
    has_cycle: dict[frozenset, bool] = {}
    for size in range(1, n + 1):
        for S in combinations(range(n), size):
            sset = frozenset(S)
            if size == 1:
                min_leaves[sset] = 1
                has_cycle[sset] = True
                continue
            induced = [e for e in edges if e[0] in sset and e[1] in sset]
            best = None
            for cand in combinations(induced, size - 1):
                if _is_spanning_tree(S, cand):
                    deg = _degree_count(S, cand)
                    nl = sum(1 for d in deg.values() if d == 1)
                    if best is None or nl < best:
                        best = nl
                    if best == 2:
                        break
            if best is not None:
                min_leaves[sset] = best
            if size == 2:
                has_cycle[sset] = len(induced) == 1
            else:
                has_cycle[sset] = any(_is_spanning_cycle(S, cand) for cand in combinations(induced, size))
    out = [max(len(s) for s, ok in has_cycle.items() if ok)]
    for k in range(2, k_max + 1):
        out.append(max(len(s) for s, ml in min_leaves.items() if ml <= k))
    return out


def t_k_bruteforce(g: Graph, k: int) -> int:
    if k < 1:
        raise ParameterError("k must be a positive integer")
    return bruteforce_profile(g, k)[k - 1]


def _degree_count(S, cand) -> dict[int, int]:
    deg = dict.fromkeys(S, 0)
    for u, v in cand:
        deg[u] += 1
        deg[v] += 1
    return deg


def _reaches_all(S, cand) -> bool:
    nbrs = {v: [] for v in S}
    for u, v in cand:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = {S[0]}
    stack = [S[0]]
    while stack:
        for y in nbrs[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(S)


def _is_spanning_tree(S, cand) -> bool:
    # |S| - 1 edges that connect S form a tree
    return _reaches_all(S, cand)


def _is_spanning_cycle(S, cand) -> bool:
    return all(d == 2 for d in _degree_count(S, cand).values()) and _reaches_all(S, cand)


__all__ = [
    "DEFAULT_MAX_N",
    "ENV_MAX_N",
    "SubsetTables",
    "TkResult",
    "bruteforce_profile",
    "enumerate_max_cycles",
    "enumerate_max_trees",
    "hamiltonian_cycles",
    "heuristic_k_ended",
    "longest_cycle_length",
    "min_leaf_count_spanning",
    "solver_limit",
    "subset_tables",
    "t_k_bruteforce",
    "t_k_exact",
    "t_profile",
    "t_values",
]
