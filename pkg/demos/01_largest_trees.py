"""
Largest k-ended trees in a small graph
======================================

t_k is the order of a largest tree with at most k leaves.  t_1 is the
circumference (a single vertex or edge counts as a short cycle).
"""

from __future__ import annotations

from kended import FamilySpec, build_family, enumerate_max_trees, sigma, t_k_exact, t_values
from kended.trees import leaves, tailings

# three disjoint edges, each joined to one hub vertex
g = build_family(FamilySpec("g1", (2, 2)))
print("degrees:", g.degrees())

# the whole profile comes from one pass over vertex subsets
print("t_1..t_3:", t_values(g, 3))

# each value comes with a witness
res = t_k_exact(g, 2)
print("a largest path:", sorted(res.witness.edges), "order", res.order)

# every maximum 3-ended tree is a spider with three legs of two vertices
for t in enumerate_max_trees(g, 3):
    print(sorted(leaves(t)), tailings(t).orders())

# degree sums of independent sets
print("sigma_2 =", sigma(g, 2), " sigma_3 =", sigma(g, 3), " sigma_4 =", sigma(g, 4))
