"""Simple undirected graphs stored as per-vertex adjacency bitsets.

Vertex sets are passed around as ``int`` bitmasks throughout the package;
``bits(mask)`` turns one back into a sorted vertex list.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import ParameterError, SamplingError, SizeError

__all__ = [
    "Graph",
    "FamilySpec",
    "INFINITY",
    "Infinity",
    "bits",
    "build_family",
    "sigma",
    "sigma_profile",
    "independence_number",
    "enumerate_labeled_connected",
    "random_connected",
]


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Infinity:
    """The value +inf of an extended count.

    Compares greater than every integer and equal only to itself.  Addition
    absorbs, so ``INFINITY + 3`` is still ``INFINITY``.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("kended.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("INFINITY - INFINITY is undefined")
        return self

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Instances are
    immutable and hashable; build them with :meth:`from_edges`.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ParameterError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ParameterError(f"loop at vertex {v}")
            if nb & ~full:
                raise ParameterError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ParameterError(f"adjacency not symmetric at {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1)))

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def is_independent(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def is_connected_set(self, mask: int) -> bool:
        """True iff ``mask`` is nonempty and induces a connected subgraph."""
        if not mask:
            return False
        seen = mask & -mask
        frontier = seen
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = self.adj[low.bit_length() - 1] & mask & ~seen
            seen |= nb
            frontier |= nb
        return seen == mask

    def is_connected(self) -> bool:
        return self.n > 0 and self.is_connected_set(self.full_mask)

    def relabel_disjoint(self, other: "Graph") -> "Graph":
        """Disjoint union with ``other`` shifted to follow this graph's vertices."""
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(nb << shift for nb in other.adj))


# ---------------------------------------------------------------------------
# families


FAMILY_KINDS = {
    "complete": 1,
    "complete-bipartite": 2,
    "path": 1,
    "cycle": 1,
    "star": 1,
    "join": 0,
    "union": 0,
    "g1": 2,
    "g2": 2,
    "g3": 1,
    "krr": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """Recipe for one of the named graph families.

    ``params`` holds the positive integers of the kind (``g1``/``g2``:
    ``(k, lam)``; ``g3``: ``(k,)``; ``complete-bipartite``: ``(r, s)``;
    ``star``: number of leaves); ``parts`` holds the two operands of
    ``join``/``union``.
    """

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = field(default=())

    def validate(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ParameterError(f"unknown family kind {self.kind!r}")
        arity = FAMILY_KINDS[self.kind]
        if len(self.params) != arity:
            raise ParameterError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        if any(not isinstance(p, int) or p < 1 for p in self.params):
            raise ParameterError(f"{self.kind} parameters must be positive integers: {self.params}")
        if self.kind in ("join", "union"):
            if len(self.parts) != 2:
                raise ParameterError(f"{self.kind} needs exactly two operands")
            for part in self.parts:
                part.validate()
        elif self.parts:
            raise ParameterError(f"{self.kind} takes no operands")
        if self.kind == "g2" and self.params[1] < 2:
            raise ParameterError("g2 requires lambda >= 2 (K_{lambda-1} would be empty)")
        if self.kind == "g3" and self.params[0] < 2:
            raise ParameterError("g3 requires k >= 2 (K_{k-1} would be empty)")


def _complete(q: int) -> Graph:
    return Graph.from_edges(q, combinations(range(q), 2))


def _copies(count: int, g: Graph) -> Graph:
    out = Graph(0, ())
    for _ in range(count):
        out = out.relabel_disjoint(g)
    return out


def _join(a: Graph, b: Graph) -> Graph:
    u = a.relabel_disjoint(b)
    amask = a.full_mask
    bmask = b.full_mask << a.n
    adj = [nb | bmask if v < a.n else nb | amask for v, nb in enumerate(u.adj)]
    return Graph(u.n, tuple(adj))


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph described by ``spec``.

    ``g1(k, lam)`` is (k+1) disjoint copies of K_lam joined to a single
    vertex, ``g2(k, lam)`` the same with K_(lam-1), ``g3(k)`` is (k+2)
    copies of K_(k-1) joined to K_2, and ``krr(r)`` is K_{r,r}.  In joins
    the left operand's vertices come first, so the hub vertices of g1, g2
    and g3 carry the highest indices.
    """
    spec.validate()
    kind, p = spec.kind, spec.params
    if kind == "complete":
        return _complete(p[0])
    if kind == "complete-bipartite":
        return _join(Graph(p[0], (0,) * p[0]), Graph(p[1], (0,) * p[1]))
    if kind == "krr":
        return _join(Graph(p[0], (0,) * p[0]), Graph(p[0], (0,) * p[0]))
    if kind == "path":
        return Graph.from_edges(p[0], ((i, i + 1) for i in range(p[0] - 1)))
    if kind == "cycle":
        q = p[0]
        if q < 3:
            raise ParameterError("cycle needs at least 3 vertices")
        return Graph.from_edges(q, ((i, (i + 1) % q) for i in range(q)))
    if kind == "star":
        return Graph.from_edges(p[0] + 1, ((0, i) for i in range(1, p[0] + 1)))
    if kind == "join":
        return _join(build_family(spec.parts[0]), build_family(spec.parts[1]))
    if kind == "union":
        return build_family(spec.parts[0]).relabel_disjoint(build_family(spec.parts[1]))
    if kind == "g1":
        k, lam = p
        return _join(_copies(k + 1, _complete(lam)), _complete(1))
    if kind == "g2":
        k, lam = p
        return _join(_copies(k + 1, _complete(lam - 1)), _complete(1))
    if kind == "g3":
        (k,) = p
        return _join(_copies(k + 2, _complete(k - 1)), _complete(2))
    raise AssertionError(kind)


# ---------------------------------------------------------------------------
# independent sets


def sigma(g: Graph, m: int) -> int | Infinity:
    """Minimum degree sum over independent sets of exactly ``m`` vertices.

    Returns ``INFINITY`` when the independence number is below ``m``.
    Vertices are tried in increasing degree order and a branch is cut as
    soon as its partial sum plus the cheapest possible completion cannot
    beat the incumbent.
    """
    if m < 1:
        raise ParameterError("m must be a positive integer")
    if m > g.n:
        return INFINITY
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (deg[v], v))
    best = [None]

    def search(start: int, chosen: int, allowed: int, total: int):
        if chosen == m:
            if best[0] is None or total < best[0]:
                best[0] = total
            return
        need = m - chosen
        for i in range(start, g.n - need + 1):
            v = order[i]
            if not allowed >> v & 1:
                continue
            # degrees along `order` are sorted, so this is a valid lower bound
            bound = total + sum(deg[order[j]] for j in range(i, i + need))
            if best[0] is not None and bound >= best[0]:
                return
            search(i + 1, chosen + 1, allowed & ~g.adj[v] & ~(1 << v), total + deg[v])

    search(0, 0, g.full_mask, 0)
    return INFINITY if best[0] is None else best[0]


def sigma_profile(g: Graph) -> list[int | Infinity]:
    """``[sigma_1, ..., sigma_n]`` from one pass over all independent sets."""
    best: list[int | Infinity] = [INFINITY] * (g.n + 1)
    deg = g.degrees()

    def walk(allowed: int, size: int, total: int):
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            v = low.bit_length() - 1
            s = size + 1
            t = total + deg[v]
            if t < best[s]:
                best[s] = t
            walk(allowed & ~g.adj[v], s, t)

    walk(g.full_mask, 0, 0)
    return best[1:]


def independence_number(g: Graph) -> int:
    def mis(mask: int) -> int:
        if not mask:
            return 0
        # a vertex of minimum degree inside mask is in some maximum set or one
        # of its neighbours is; branching on all of N[v] is exhaustive
        v = min(bits(mask), key=lambda u: ((g.adj[u] & mask).bit_count(), u))
        best = 0
        for u in bits((g.adj[v] & mask) | (1 << v)):
            best = max(best, 1 + mis(mask & ~g.adj[u] & ~(1 << u)))
        return best

    return mis(g.full_mask)


# ---------------------------------------------------------------------------
# corpora

DEFAULT_ENUMERATION_LIMIT = 7


def enumerate_labeled_connected(n: int, max_n: int = DEFAULT_ENUMERATION_LIMIT) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices, once each.

    Graphs are produced in increasing order of their edge bitmask over the
    vertex pairs (0,1), (0,2), ..., (n-2,n-1).
    """
    if n < 1:
        raise ParameterError("n must be positive")
    if n > max_n:
        raise SizeError(f"labeled enumeration limited to n <= {max_n} (got {n})")
    pairs = list(combinations(range(n), 2))
    pair_bits = [(1 << u, 1 << v) for u, v in pairs]
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        i = 0
        while m:
            if m & 1:
                u, v = pairs[i]
                bu, bv = pair_bits[i]
                adj[u] |= bv
                adj[v] |= bu
            m >>= 1
            i += 1
        # inline connectivity test; building Graph objects for rejects is wasteful
        seen = 1
        frontier = 1
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[low.bit_length() - 1] & ~seen
            seen |= nb
            frontier |= nb
        if seen == full:
            yield Graph(n, tuple(adj))


def random_connected(n: int, p: float, seed: int, budget: int = 10_000) -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectivity by rejection."""
    if n < 1:
        raise ParameterError("n must be positive")
    if not 0 < p <= 1:
        raise ParameterError("p must lie in (0, 1]")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(budget):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if g.is_connected():
            return g
    raise SamplingError(f"no connected G({n}, {p}) in {budget} draws; try a larger p")
