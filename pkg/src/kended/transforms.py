"""Edge exchanges on k-ended trees and replay of the maximum-tree claims.

Every exchange has the shape ``T' = T + added - removed`` with one or two
edges on each side and keeps the vertex set.  :func:`proof_replay` runs the
exchanges on every maximum (k+1)-ended tree of a graph and checks the
structural facts that must hold whenever ``t_k <= t_{k+1} - lam``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidExchangeError, NoBranchVertexError, PreconditionError, TreeError
from .graph import Graph
from .trees import SubTree, TailingDecomposition, leaves, norm_edge, tailings


class Outcome(enum.Enum):
    FEWER_LEAVES = "fewer-leaves-same-order"
    RETAILED = "same-leaves-retailed"
    MORE_LEAVES = "more-leaves-same-order"
    BECAME_CYCLE = "became-cycle"


@dataclass(frozen=True)
class ExchangeResult:
    """Result of an exchange.

    ``tree`` is ``None`` only for ``BECAME_CYCLE``, in which case ``cycle``
    holds the spanning cycle.  ``new_tailings`` lists the path segments a
    tailing swap splits off, each oriented leaf-first.
    """

    outcome: Outcome
    tree: SubTree | None
    new_tailings: tuple[tuple[int, ...], ...] | None = None
    cycle: tuple[int, ...] | None = None

    @property
    def classification(self) -> str:
        return self.outcome.value


def _classify(before: SubTree, after: SubTree) -> Outcome:
    a, b = len(leaves(before)), len(leaves(after))
    if b < a:
        return Outcome.FEWER_LEAVES
    if b == a:
        return Outcome.RETAILED
    return Outcome.MORE_LEAVES


def exchange(t: SubTree, add: Iterable[tuple[int, int]], remove: Iterable[tuple[int, int]]) -> ExchangeResult:
    add = {norm_edge(*e) for e in add}
    remove = {norm_edge(*e) for e in remove}
    if len(add) != len(remove) or len(add) not in (1, 2):
        raise PreconditionError(f"exchange needs |add| = |remove| in {{1, 2}}, got {len(add)} and {len(remove)}")
    for u, v in add:
        if not t.host.has_edge(u, v):
            raise PreconditionError(f"added edge {(u, v)} is not in the host graph")
        if (u, v) in t.edges:
            raise PreconditionError(f"added edge {(u, v)} is already a tree edge")
        if u not in t.vertices or v not in t.vertices:
            raise PreconditionError(f"added edge {(u, v)} leaves the tree's vertex set")
    for e in remove:
        if e not in t.edges:
            raise PreconditionError(f"removed edge {e} is not a tree edge")
    try:
        out = SubTree(t.host, t.vertices, (t.edges - remove) | add)
    except TreeError as exc:
        raise InvalidExchangeError(f"+{sorted(add)} -{sorted(remove)}: {exc}") from None
    return ExchangeResult(_classify(t, out), out)


def leaf_edge_reduction(t: SubTree, e: tuple[int, int]) -> ExchangeResult:
    """Close a leaf-to-leaf host edge into a cycle and cut it elsewhere.

    If the cycle covers the whole tree the result is ``BECAME_CYCLE``.
    Otherwise the first vertex along the cycle (walked from the smaller
    endpoint of ``e``) whose degree in ``T + e`` is at least three loses a
    cycle edge: the one towards the cycle neighbour of larger ``T + e``
    degree, ties to the smaller index.
    """
    u, v = norm_edge(*e)
    ends = leaves(t)
    if t.order < 2 or u not in ends or v not in ends:
        raise PreconditionError(f"both endpoints of {(u, v)} must be leaves of the tree")
    if not t.host.has_edge(u, v):
        raise PreconditionError(f"{(u, v)} is not a host edge")
    if (u, v) in t.edges:
        raise PreconditionError(f"{(u, v)} is already a tree edge")
    cycle = t.path_between(u, v)
    if len(cycle) == t.order:
        return ExchangeResult(Outcome.BECAME_CYCLE, None, cycle=tuple(cycle))
    deg = t.degrees()
    deg[u] += 1
    deg[v] += 1
    pivot_at = next(i for i, x in enumerate(cycle) if deg[x] >= 3)
    pivot = cycle[pivot_at]
    L = len(cycle)
    a, b = cycle[(pivot_at - 1) % L], cycle[(pivot_at + 1) % L]
    other = min((a, b), key=lambda x: (-deg[x], x))
    res = exchange(t, [(u, v)], [(pivot, other)])
    if res.outcome is not Outcome.FEWER_LEAVES:
        raise AssertionError(f"leaf-edge reduction did not reduce leaves: {res.outcome}")
    return res


def prune_shortest_tailing(t: SubTree) -> SubTree:
    """Delete a tailing of minimum order (ties to the smallest leaf)."""
    dec = tailings(t)
    i = min(range(len(dec.leaves)), key=lambda j: (len(dec.tailings[j]), dec.leaves[j]))
    drop = set(dec.tailings[i])
    verts = t.vertices - drop
    edges = {e for e in t.edges if e[0] not in drop and e[1] not in drop}
    return SubTree(t.host, frozenset(verts), frozenset(edges))


def tailing_swap(t: SubTree, leaf_j: int, mu: int, dec: TailingDecomposition | None = None) -> ExchangeResult:
    """``T + leaf_j mu - w_i w_i*`` for ``mu`` on a foreign tailing ``A_i``.

    With ``mu = w_i`` the tree loses a leaf.  Otherwise the tailing is cut
    at ``mu``, which becomes a branch vertex, leaving the two segments
    ``xi_i .. mu^-`` and ``mu^+ .. w_i`` as tailings (reported leaf-first).
    """
    if dec is None:
        dec = tailings(t)
    if leaf_j not in dec.leaves:
        raise PreconditionError(f"{leaf_j} is not a leaf")
    j = dec.leaves.index(leaf_j)
    i = dec.index_of(mu)
    if i is None:
        raise PreconditionError(f"{mu} does not lie on any tailing")
    if i == j:
        raise PreconditionError(f"{mu} lies on the tailing of {leaf_j} itself")
    path = dec.tailings[i]
    if mu == path[0]:
        raise PreconditionError(f"{mu} is the leaf of its tailing; use leaf_edge_reduction")
    w, w_star = dec.anchors[i]
    res = exchange(t, [(leaf_j, mu)], [(w, w_star)])
    if mu == w:
        return res
    pos = path.index(mu)
    # second segment re-oriented so its new leaf w_i comes first
    segments = (path[:pos], tuple(reversed(path[pos + 1 :])))
    return ExchangeResult(res.outcome, res.tree, new_tailings=segments)


# ---------------------------------------------------------------------------
# proof replay


@dataclass
class ReplayReport:
    """Outcome of replaying the maximum-tree claims on one graph.

    Claims 1-3 are the leaf count, leaf independence and tailing-length
    facts; claims 6-8 are the segment lengths forced by single and double
    tailing swaps.  Flags are ``True`` when nothing was checked.
    """

    k: int
    lam: int
    precondition_held: bool
    t_k: int
    t_k1: int
    trees_checked: int = 0
    claim1_ok: bool = True
    claim2_ok: bool = True
    claim3_ok: bool = True
    claim6_ok: bool = True
    claim7_ok: bool = True
    claim8_ok: bool = True
    failures: list[tuple[SubTree, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, tree: SubTree, claim: str, detail: str) -> None:
        setattr(self, f"{claim}_ok", False)
        self.failures.append((tree, claim, detail))


def _check_swaps(report: ReplayReport, t: SubTree, dec: TailingDecomposition, lam: int) -> None:
    g = t.host
    s = len(dec.leaves)
    where = {}
    for i, path in enumerate(dec.tailings):
        for pos, x in enumerate(path):
            where[x] = (i, pos)

    # claim 6: one leaf hooked onto a foreign tailing
    for j, xi_j in enumerate(dec.leaves):
        for mu in g.neighbors(xi_j):
            if mu not in where or norm_edge(xi_j, mu) in t.edges:
                continue
            i, pos = where[mu]
            if i == j or pos == 0:
                continue
            res = tailing_swap(t, xi_j, mu, dec)
            if res.outcome is not Outcome.RETAILED:
                report.fail(t, "claim6", f"swap {xi_j}-{mu} gave {res.classification}")
                continue
            short = [seg for seg in res.new_tailings if len(seg) < lam]
            if short:
                report.fail(t, "claim6", f"swap {xi_j}-{mu} leaves segment {short[0]} shorter than {lam}")

    # claims 7 and 8: two hooks onto one tailing, cutting between them
    for i, path in enumerate(dec.tailings):
        w, w_star = dec.anchors[i]
        hooks = []  # (pos, leaf index) with leaf adjacent to path[pos] by a non-tree edge
        for pos, mu in enumerate(path):
            for j, xi in enumerate(dec.leaves):
                if xi != mu and g.has_edge(xi, mu) and norm_edge(xi, mu) not in t.edges:
                    hooks.append((pos, j))
        for p1, j in hooks:
            if j == i:
                continue
            for p2, other in hooks:
                if p2 <= p1 or other == j:
                    continue
                claim = "claim7" if other == i else "claim8"
                mu1, mu2 = path[p1], path[p2]
                add = [(dec.leaves[other], mu2), (dec.leaves[j], mu1)]
                remove = [(mu1, path[p1 + 1]), (w, w_star)]
                res = exchange(t, add, remove)
                if len(leaves(res.tree)) != s:
                    report.fail(t, claim, f"exchange +{add} -{remove} gave {len(leaves(res.tree))} leaves")
                elif p2 - p1 - 1 < lam:
                    report.fail(t, claim, f"segment between {mu1} and {mu2} has order {p2 - p1 - 1} < {lam}")


def proof_replay(g: Graph, k: int, lam: int, max_n: int | None = None) -> ReplayReport:
    """Check every maximum (k+1)-ended tree against the claims.

    Applies only when ``t_k <= t_{k+1} - lam``; otherwise the report has
    ``precondition_held = False`` and nothing is checked.
    """
    from .solver import enumerate_max_trees, t_values

    if k < 1 or lam < 1:
        raise PreconditionError("k and lambda must be positive integers")
    tv = t_values(g, k + 1, max_n)
    t_k, t_k1 = tv[k - 1], tv[k]
    report = ReplayReport(k, lam, t_k <= t_k1 - lam, t_k, t_k1)
    if not report.precondition_held:
        return report
    for t in enumerate_max_trees(g, k + 1, max_n):
        report.trees_checked += 1
        ends = leaves(t)
        if len(ends) != k + 1:
            report.fail(t, "claim1", f"{len(ends)} leaves, expected {k + 1}")
        m = 0
        for v in ends:
            m |= 1 << v
        if not g.is_independent(m):
            report.fail(t, "claim2", f"leaves {sorted(ends)} are not independent")
        if len(ends) >= 3:
            dec = tailings(t)
            for leaf, path in zip(dec.leaves, dec.tailings):
                if len(path) < lam:
                    report.fail(t, "claim3", f"tailing of {leaf} has order {len(path)} < {lam}")
            _check_swaps(report, t, dec, lam)
    return report


__all__ = [
    "ExchangeResult",
    "Outcome",
    "ReplayReport",
    "exchange",
    "leaf_edge_reduction",
    "proof_replay",
    "prune_shortest_tailing",
    "tailing_swap",
]
