"""Subtrees of a host graph and their structural predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NoBranchVertexError, TreeError
from .graph import Graph, bits

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SubTree:
    """A tree subgraph of ``host`` given by explicit vertex and edge sets.

    Construction validates the tree invariants and raises
    :class:`~kended.errors.TreeError` on violation, so every live instance
    is a genuine subtree.
    """

    host: Graph
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self):
        if not self.vertices:
            raise TreeError("a subtree needs at least one vertex")
        if len(self.edges) != len(self.vertices) - 1:
            raise TreeError(f"{len(self.vertices)} vertices need {len(self.vertices) - 1} edges, got {len(self.edges)}")
        for u, v in self.edges:
            if u >= v:
                raise TreeError(f"edge {(u, v)} is not normalised as (min, max)")
            if u not in self.vertices or v not in self.vertices:
                raise TreeError(f"edge {(u, v)} leaves the vertex set")
            if not self.host.has_edge(u, v):
                raise TreeError(f"edge {(u, v)} is not in the host graph")
        # |E| = |V| - 1 plus connectivity implies acyclic
        root = min(self.vertices)
        seen = {root}
        stack = [root]
        nbrs = self._neighbor_map()
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(self.vertices):
            raise TreeError("edge set does not connect the vertex set")

    @classmethod
    def build(cls, host: Graph, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "SubTree":
        return cls(host, frozenset(vertices), frozenset(norm_edge(u, v) for u, v in edges))

    @classmethod
    def from_edges(cls, host: Graph, edges: Iterable[tuple[int, int]]) -> "SubTree":
        edges = [norm_edge(u, v) for u, v in edges]
        verts = {x for e in edges for x in e}
        return cls(host, frozenset(verts), frozenset(edges))

    @classmethod
    def from_path(cls, host: Graph, path: Iterable[int]) -> "SubTree":
        path = list(path)
        return cls.build(host, path, zip(path, path[1:]))

    @classmethod
    def single(cls, host: Graph, v: int) -> "SubTree":
        return cls(host, frozenset((v,)), frozenset())

    def _neighbor_map(self) -> dict[int, list[int]]:
        nbrs: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        for lst in nbrs.values():
            lst.sort()
        return nbrs

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def neighbors(self, v: int) -> list[int]:
        return self._neighbor_map()[v]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def path_between(self, a: int, b: int) -> list[int]:
        """The unique tree path from ``a`` to ``b`` (both inclusive)."""
        nbrs = self._neighbor_map()
        parent = {a: None}
        stack = [a]
        while stack:
            x = stack.pop()
            if x == b:
                break
            for y in nbrs[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        out = [b]
        while out[-1] != a:
            out.append(parent[out[-1]])
        return out[::-1]

    def key(self) -> tuple:
        """Deterministic sort key: vertex list, then edge list."""
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)))


def leaves(t: SubTree) -> frozenset[int]:
    """End-vertices of ``t``; a single-vertex tree is its own leaf."""
    if t.order == 1:
        return t.vertices
    return frozenset(v for v, d in t.degrees().items() if d == 1)


def branch_vertices(t: SubTree) -> frozenset[int]:
    return frozenset(v for v, d in t.degrees().items() if d >= 3)


@dataclass(frozen=True)
class TailingDecomposition:
    """Leaf-to-branch tails of a tree with at least three leaves.

    ``tailings[i]`` starts at ``leaves[i]`` and runs toward the interior,
    stopping just before the first branch vertex; ``anchors[i]`` is
    ``(w_i, w_i*)``, the last tailing vertex and the branch vertex it
    hangs from.
    """

    leaves: tuple[int, ...]
    tailings: tuple[tuple[int, ...], ...]
    anchors: tuple[tuple[int, int], ...]

    def index_of(self, v: int) -> int | None:
        for i, path in enumerate(self.tailings):
            if v in path:
                return i
        return None

    def orders(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.tailings)


def tailings(t: SubTree) -> TailingDecomposition:
    ends = sorted(leaves(t))
    if len(ends) < 3:
        raise NoBranchVertexError(f"tree has {len(ends)} leaves; tailings need at least 3")
    nbrs = t._neighbor_map()
    paths = []
    anchors = []
    for leaf in ends:
        path = [leaf]
        prev, cur = None, leaf
        while True:
            (nxt,) = [y for y in nbrs[cur] if y != prev]
            if len(nbrs[nxt]) >= 3:
                anchors.append((cur, nxt))
                break
            path.append(nxt)
            prev, cur = cur, nxt
        paths.append(tuple(path))
    return TailingDecomposition(tuple(ends), tuple(paths), tuple(anchors))


def dominates(g: Graph, mask: int) -> bool:
    """True iff the vertices outside ``mask`` form an independent set."""
    return g.is_independent(g.full_mask & ~mask)


def is_dominating(g: Graph, t: SubTree) -> bool:
    return dominates(g, t.mask)


def is_independence_tree(g: Graph, t: SubTree) -> bool:
    """True iff the leaves of ``t`` are pairwise nonadjacent in ``g``.

    A single-vertex tree counts as independent.
    """
    m = 0
    for v in leaves(t):
        m |= 1 << v
    return g.is_independent(m)


def spanning_trees(g: Graph, mask: int | None = None):
    """Yield every spanning tree of ``g[mask]`` as a sorted edge tuple.

    Plain include/exclude recursion over the induced edges in sorted
    order, tracking components with a label array.  Each tree appears once.
    """
    if mask is None:
        mask = g.full_mask
    verts = bits(mask)
    if len(verts) == 1:
        yield ()
        return
    edges = [(u, v) for u, v in g.edges if mask >> u & 1 and mask >> v & 1]
    need = len(verts) - 1
    label = {v: v for v in verts}
    chosen: list[Edge] = []

    def find(x):
        while label[x] != x:
            x = label[x]
        return x

    def rec(i):
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if len(edges) - i < need - len(chosen):
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            label[rv] = ru
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            label[rv] = rv
        yield from rec(i + 1)

    yield from rec(0)


__all__ = [
    "SubTree",
    "TailingDecomposition",
    "branch_vertices",
    "dominates",
    "is_dominating",
    "is_independence_tree",
    "leaves",
    "norm_edge",
    "spanning_trees",
    "tailings",
]
