"""
Checking the degree-sum theorems on every small graph
=====================================================

Each statement becomes a predicate: its hypothesis and conclusion are
evaluated exactly on a graph, and a violation is a graph where the
hypothesis holds and the conclusion fails.
"""

from __future__ import annotations

from kended import TheoremInstance, build_family, check_instance, FamilySpec, verify_corpus
from kended.graph import enumerate_labeled_connected

g = build_family(FamilySpec("g1", (2, 2)))

# with lambda = 2 the degree-sum hypothesis misses by one, so nothing is claimed
print(check_instance(g, TheoremInstance("thm3", 2, 2, 2)))

# with lambda = 3 the hypothesis holds and the conclusion is met with no slack
print(check_instance(g, TheoremInstance("thm3", 2, 3, 2)))

# all connected labeled graphs on five vertices, k and lambda up to 3
corpus = (h for n in range(1, 6) for h in enumerate_labeled_connected(n))
report = verify_corpus(corpus, range(1, 4), range(1, 4), description="n <= 5")
print(report.graphs, "graphs,", report.instances, "instances,", report.violation_count, "violations")

# how often each hypothesis actually fired
for name, count in report.nonvacuous.items():
    print(f"  {name:6} {count}")
