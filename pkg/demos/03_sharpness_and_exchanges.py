"""
Extremal graphs and tree exchanges
==================================

The extremal families show the bounds are tight.  The exchange
operations are the moves used to reason about maximum trees.
"""

from __future__ import annotations

from kended import FamilySpec, Graph, SubTree, build_family, leaf_edge_reduction, proof_replay, sharpness_suite, tailing_swap
from kended.trees import leaves

report = sharpness_suite(range(1, 3), range(1, 4))
for row in report.sharpness:
    print(row["family"], row["k"], row["lambda"], row["m"], row["holds"], row["values"])

# a spider with legs 0-1-2, 0-3-4, 0-5-6 and an extra host edge between leaves 2 and 4
edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
host = Graph.from_edges(7, edges + [(2, 4)])
t = SubTree.from_edges(host, edges)
res = leaf_edge_reduction(t, (2, 4))
print(res.classification, "leaves", sorted(leaves(t)), "->", sorted(leaves(res.tree)))

# hooking leaf 2 onto the far end of another leg merges two legs into one
host = Graph.from_edges(7, edges + [(2, 3)])
t = SubTree.from_edges(host, edges)
print(tailing_swap(t, 2, 3).classification)

# the structural claims on every maximum 3-ended tree of a small extremal graph
rep = proof_replay(build_family(FamilySpec("g1", (2, 2))), 2, 2)
print("trees checked:", rep.trees_checked, "all claims hold:", rep.ok)
