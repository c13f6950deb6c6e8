"""Theorem predicates, corpus verification and sharpness checks.

Every statement is evaluated extensionally: the quantities it mentions
(t_k, t_{k+1}, sigma_m, n, existence of spanning or dominating k-ended
trees) are computed exactly and the implication is tested with integer
arithmetic.  ``sigma_m`` may be :data:`~kended.graph.INFINITY`; it takes
part in comparisons only.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import InstanceError, ParameterError, SizeError
from .graph import INFINITY, FamilySpec, Graph, Infinity, build_family, sigma_profile
from .graph6 import to_graph6_str
from .solver import solver_limit, subset_tables
from .trees import dominates, is_dominating

MAX_RECORDED_VIOLATIONS = 100


# ---------------------------------------------------------------------------
# per-graph quantities


class GraphProfile:
    """Exact quantities of one connected graph, shared by all instances."""

    def __init__(self, g: Graph, k_max: int, max_n: int | None = None):
        if g.n < 1 or not g.is_connected():
            raise ParameterError("theorem predicates need a connected graph")
        limit = solver_limit(max_n)
        if g.n > limit:
            raise SizeError(f"graph has {g.n} vertices, above the solver limit {limit}")
        self.g = g
        self.n = g.n
        self.tables = subset_tables(g)
        self._t = self.tables.t_values(k_max + 1)
        self._sigma = sigma_profile(g)
        self._dominating: dict[int, bool] = {}
        self._prop2: dict[int, bool] = {}

    def t(self, k: int) -> int:
        if k > len(self._t):
            self._t = self.tables.t_values(k)
        return self._t[k - 1]

    def sigma(self, m: int) -> int | Infinity:
        return self._sigma[m - 1] if m <= self.n else INFINITY

    def _carries(self, mask: int, k: int) -> bool:
        if k == 1:
            return self.tables.cyclic[mask]
        return self.tables.min_leaves[mask] <= k

    def spanning(self, k: int) -> bool:
        """Whether a spanning k-ended tree (Hamilton cycle when k = 1) exists."""
        return self._carries(self.g.full_mask, k)

    def dominating(self, k: int) -> bool:
        """Whether some k-ended tree (cycle when k = 1) is dominating."""
        if k not in self._dominating:
            g = self.g
            self._dominating[k] = any(
                self._carries(S, k) and dominates(g, S) for S in range(1, 1 << g.n)
            )
        return self._dominating[k]

    def largest_all_dominating(self, k: int) -> bool:
        """Whether every largest k-ended tree (longest cycle when k = 1) dominates.

        Dominance depends only on the vertex set, so one witness per
        maximum vertex set decides it.
        """
        if k not in self._prop2:
            g = self.g
            sets = self.tables.max_sets(k, self.t(k))
            if k == 1:
                ok = all(dominates(g, S) for S in sets)
            else:
                ok = all(is_dominating(g, self.tables.tree(S)) for S in sets)
            self._prop2[k] = ok
        return self._prop2[k]


# ---------------------------------------------------------------------------
# statements


@dataclass(frozen=True)
class Statement:
    name: str
    params: str  # which of k, lam, m the statement uses: subset of "klm"
    fixed: Callable[[int, int, int], dict]
    valid: Callable[[int, int, int], bool]
    condition: Callable[[GraphProfile, int, int, int], bool]
    conclusion: Callable[[GraphProfile, int, int, int], bool]
    parent: Callable[[int, int, int], tuple | None] = lambda k, lam, m: None


def _none(k, lam, m):
    return {}


def _thm3_ok(k, lam, m):
    return 1 <= m <= min(k, lam) + 1


def _gap(P, k, lam):
    return P.t(k) >= P.t(k + 1) - lam + 1


_S: list[Statement] = [
    Statement(
        "prop1", "k", _none, lambda k, lam, m: k >= 1,
        lambda P, k, lam, m: True,
        lambda P, k, lam, m: P.spanning(k) == (P.t(k) == P.t(k + 1)),
    ),
    Statement(
        "prop2", "k", _none, lambda k, lam, m: k >= 1,
        lambda P, k, lam, m: P.t(k) >= P.t(k + 1) - 1,
        lambda P, k, lam, m: P.largest_all_dominating(k),
    ),
    Statement(
        "thm1", "kl", _none, lambda k, lam, m: k >= 2,
        lambda P, k, lam, m: lam * (k + 1) >= P.t(k + 1),
        lambda P, k, lam, m: _gap(P, k, lam),
    ),
    Statement(
        "thm2", "klm", _none, lambda k, lam, m: 2 <= m <= min(k, lam) + 1,
        lambda P, k, lam, m: True,
        lambda P, k, lam, m: P.t(k + 1) >= P.sigma(m) + lam * (k - m + 1) + 1 or _gap(P, k, lam),
    ),
    Statement(
        "thm3", "klm", _none, _thm3_ok,
        lambda P, k, lam, m: P.sigma(m) >= P.t(k + 1) - lam * (k - m + 1),
        lambda P, k, lam, m: _gap(P, k, lam),
    ),
    Statement(
        "cor1", "kl", _none, lambda k, lam, m: k >= 2,
        lambda P, k, lam, m: lam * (k + 1) >= P.n,
        lambda P, k, lam, m: _gap(P, k, lam),
        lambda k, lam, m: ("thm1", k, lam, None),
    ),
    Statement(
        "cor2", "k", _none, lambda k, lam, m: k >= 2,
        lambda P, k, lam, m: True,
        lambda P, k, lam, m: (k + 1) * P.t(k) >= k * P.t(k + 1) + 1,
    ),
    Statement(
        "cor3", "klm", _none, _thm3_ok,
        lambda P, k, lam, m: P.sigma(m) >= P.n - lam * (k - m + 1),
        lambda P, k, lam, m: _gap(P, k, lam),
        lambda k, lam, m: ("thm3", k, lam, m),
    ),
    Statement(
        "cor4", "k", lambda k, lam, m: {"lam": k, "m": k + 1}, lambda k, lam, m: k >= 1,
        lambda P, k, lam, m: P.sigma(k + 1) >= P.t(k + 1),
        lambda P, k, lam, m: P.t(k) >= P.t(k + 1) - k + 1,
        lambda k, lam, m: ("thm3", k, k, k + 1),
    ),
    Statement(
        "cor5", "kl", lambda k, lam, m: {"m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.t(k + 1) - lam * (k - 1),
        lambda P, k, lam, m: _gap(P, k, lam),
        lambda k, lam, m: ("thm3", k, lam, 2),
    ),
    Statement(
        "cor6", "k", lambda k, lam, m: {"lam": 1, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.t(k + 1) - k + 1,
        lambda P, k, lam, m: P.t(k) >= P.t(k + 1),
        lambda k, lam, m: ("thm3", k, 1, 2),
    ),
    Statement(
        "cor7", "k", lambda k, lam, m: {"lam": 1, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.n - k + 1,
        lambda P, k, lam, m: P.spanning(k),
        lambda k, lam, m: ("thm3", k, 1, 2),
    ),
    Statement(
        "cor8", "k", lambda k, lam, m: {"lam": 2, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.t(k + 1) - 2 * k + 2,
        lambda P, k, lam, m: P.t(k) >= P.t(k + 1) - 1,
        lambda k, lam, m: ("thm3", k, 2, 2),
    ),
    Statement(
        "cor9", "k", lambda k, lam, m: {"lam": 2, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.n - 2 * k + 2,
        lambda P, k, lam, m: P.dominating(k),
        lambda k, lam, m: ("thm3", k, 2, 2),
    ),
    Statement(
        "cor10", "", lambda k, lam, m: {"k": 1, "lam": 1, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.t(2),
        lambda P, k, lam, m: P.t(1) >= P.t(2),
        lambda k, lam, m: ("thm3", 1, 1, 2),
    ),
    Statement(
        "cor11", "", lambda k, lam, m: {"k": 1, "lam": 1, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.n,
        lambda P, k, lam, m: P.spanning(1),
        lambda k, lam, m: ("thm3", 1, 1, 2),
    ),
    Statement(
        "cor12", "", lambda k, lam, m: {"k": 2, "lam": 1, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.t(3) - 1,
        lambda P, k, lam, m: P.t(2) >= P.t(3),
        lambda k, lam, m: ("thm3", 2, 1, 2),
    ),
    Statement(
        "cor13", "", lambda k, lam, m: {"k": 2, "lam": 1, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.n - 1,
        lambda P, k, lam, m: P.spanning(2),
        lambda k, lam, m: ("thm3", 2, 1, 2),
    ),
    Statement(
        "cor14", "", lambda k, lam, m: {"k": 2, "lam": 2, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.t(3) - 2,
        lambda P, k, lam, m: P.t(2) >= P.t(3) - 1,
        lambda k, lam, m: ("thm3", 2, 2, 2),
    ),
    Statement(
        "cor15", "", lambda k, lam, m: {"k": 2, "lam": 2, "m": 2}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(2) >= P.n - 2,
        lambda P, k, lam, m: P.dominating(2),
        lambda k, lam, m: ("thm3", 2, 2, 2),
    ),
    Statement(
        "cor16", "kl", lambda k, lam, m: {"m": 3}, lambda k, lam, m: k >= 2 and lam >= 2,
        lambda P, k, lam, m: P.sigma(3) >= P.t(k + 1) - lam * (k - 2),
        lambda P, k, lam, m: _gap(P, k, lam),
        lambda k, lam, m: ("thm3", k, lam, 3),
    ),
    Statement(
        "cor17", "k", lambda k, lam, m: {"lam": 2, "m": 3}, lambda k, lam, m: k >= 2,
        lambda P, k, lam, m: P.sigma(3) >= P.t(k + 1) - 2 * k + 4,
        lambda P, k, lam, m: P.t(k) >= P.t(k + 1) - 1,
        lambda k, lam, m: ("thm3", k, 2, 3),
    ),
    Statement(
        "cor18", "k", lambda k, lam, m: {"lam": 2, "m": 3}, lambda k, lam, m: k >= 2,
        lambda P, k, lam, m: P.sigma(3) >= P.n - 2 * k + 4,
        lambda P, k, lam, m: P.dominating(k),
        lambda k, lam, m: ("thm3", k, 2, 3),
    ),
    Statement(
        "cor19", "", lambda k, lam, m: {"k": 2, "lam": 2, "m": 3}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(3) >= P.t(3),
        lambda P, k, lam, m: P.t(2) >= P.t(3) - 1,
        lambda k, lam, m: ("thm3", 2, 2, 3),
    ),
    Statement(
        "cor20", "", lambda k, lam, m: {"k": 2, "lam": 2, "m": 3}, lambda k, lam, m: True,
        lambda P, k, lam, m: P.sigma(3) >= P.n,
        lambda P, k, lam, m: P.dominating(2),
        lambda k, lam, m: ("thm3", 2, 2, 3),
    ),
]

STATEMENTS: dict[str, Statement] = {s.name: s for s in _S}
ALL_THEOREMS: tuple[str, ...] = tuple(STATEMENTS)


@dataclass(frozen=True)
class TheoremInstance:
    """A statement bound to concrete parameters.

    Parameters a statement fixes (``cor11`` is always k = lam = 1, m = 2)
    are filled in by :func:`make_instance`; supplying a conflicting value
    is an :class:`~kended.errors.InstanceError`.  ``lam`` is the
    lambda of the statements.
    """

    theorem: str
    k: int | None = None
    lam: int | None = None
    m: int | None = None

    def __post_init__(self):
        st = STATEMENTS.get(self.theorem)
        if st is None:
            raise InstanceError(f"unknown theorem {self.theorem!r}")
        k, lam, m = self.k, self.lam, self.m
        for name, value in (("k", k), ("lam", lam), ("m", m)):
            if value is not None and (not isinstance(value, int) or value < 1):
                raise InstanceError(f"{self.theorem}: {name} must be a positive integer, got {value!r}")
        if k is None:
            raise InstanceError(f"{self.theorem}: k is required")
        if "l" in st.params and lam is None:
            raise InstanceError(f"{self.theorem}: lambda is required")
        if "m" in st.params and m is None:
            raise InstanceError(f"{self.theorem}: m is required")
        for name, value in st.fixed(k, lam, m).items():
            if getattr(self, name) != value:
                raise InstanceError(f"{self.theorem} fixes {name} = {value}, got {getattr(self, name)!r}")
        if not st.valid(k, lam or 0, m or 0):
            raise InstanceError(f"{self.theorem}: parameters k={k}, lambda={lam}, m={m} out of range")

    @property
    def statement(self) -> Statement:
        return STATEMENTS[self.theorem]

    def label(self) -> str:
        return f"{self.theorem}(k={self.k}, lambda={self.lam}, m={self.m})"


def make_instance(theorem: str, k: int | None = None, lam: int | None = None, m: int | None = None) -> TheoremInstance:
    st = STATEMENTS.get(theorem)
    if st is None:
        raise InstanceError(f"unknown theorem {theorem!r}")
    probe = st.fixed(k or 0, lam or 0, m or 0)
    if "k" in probe:
        k = probe["k"] if k is None else k
        probe = st.fixed(k, lam or 0, m or 0)
    elif k is not None:
        probe = st.fixed(k, lam or 0, m or 0)
    fixed_lam, fixed_m = probe.get("lam"), probe.get("m")
    lam = fixed_lam if lam is None else lam
    m = fixed_m if m is None else m
    if "l" not in st.params and fixed_lam is None:
        lam = None
    if "m" not in st.params and fixed_m is None:
        m = None
    return TheoremInstance(theorem, k, lam, m)


def parent_instance(inst: TheoremInstance) -> TheoremInstance | None:
    """The theorem instance a corollary weakens, if any."""
    p = inst.statement.parent(inst.k, inst.lam, inst.m)
    return None if p is None else make_instance(*p)


def generate_instances(
    theorems: Iterable[str] | None = None,
    k_values: Iterable[int] = range(1, 5),
    lam_values: Iterable[int] = range(1, 5),
) -> list[TheoremInstance]:
    """All valid instances with k and lambda drawn from the given values.

    m ranges over every value the statement admits.  Statements that fix k
    or lambda are included only when the fixed values lie in the ranges.
    """
    ks = sorted(set(k_values))
    lams = sorted(set(lam_values))
    names = ALL_THEOREMS if theorems is None else tuple(theorems)
    out: list[TheoremInstance] = []
    seen = set()
    for name in names:
        st = STATEMENTS.get(name)
        if st is None:
            raise InstanceError(f"unknown theorem {name!r}")
        for k in ks:
            for lam in lams:
                for m in range(1, min(k, lam) + 2):
                    fixed = st.fixed(k, lam, m)
                    kk = fixed.get("k", k)
                    fixed = st.fixed(kk, lam, m)
                    ll = fixed.get("lam", lam) if ("l" in st.params or "lam" in fixed) else None
                    mm = fixed.get("m", m) if ("m" in st.params or "m" in fixed) else None
                    if kk not in ks or (ll is not None and ll not in lams):
                        continue
                    if not st.valid(kk, ll or 0, mm or 0):
                        continue
                    key = (name, kk, ll, mm)
                    if key not in seen:
                        seen.add(key)
                        out.append(TheoremInstance(name, kk, ll, mm))
    return out


# ---------------------------------------------------------------------------
# evaluation


@dataclass(frozen=True)
class CheckOutcome:
    condition_holds: bool
    conclusion_holds: bool
    values: dict

    @property
    def vacuous(self) -> bool:
        return not self.condition_holds

    @property
    def violation(self) -> bool:
        return self.condition_holds and not self.conclusion_holds


def _snapshot(P: GraphProfile, inst: TheoremInstance) -> dict:
    k = inst.k
    return {
        "t_k": P.t(k),
        "t_k1": P.t(k + 1),
        "sigma_m": None if inst.m is None else P.sigma(inst.m),
        "n": P.n,
    }


def check_instance(g: Graph, inst: TheoremInstance, profile: GraphProfile | None = None) -> CheckOutcome:
    st = inst.statement
    P = profile if profile is not None else GraphProfile(g, inst.k + 1)
    k, lam, m = inst.k, inst.lam, inst.m
    cond = bool(st.condition(P, k, lam, m))
    concl = bool(st.conclusion(P, k, lam, m)) if cond else True
    return CheckOutcome(cond, concl, _snapshot(P, inst))


def _json_value(x):
    return "inf" if isinstance(x, Infinity) else x


@dataclass
class VerificationReport:
    """Aggregate result of a verification run.

    Only the first :data:`MAX_RECORDED_VIOLATIONS` violations are kept
    verbatim; ``violation_count`` counts all of them.
    """

    corpus: str = ""
    graphs: int = 0
    skipped_disconnected: int = 0
    instances: int = 0
    violations: list[dict] = field(default_factory=list)
    violation_count: int = 0
    nonvacuous: dict[str, int] = field(default_factory=dict)
    sharpness: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return self.violation_count == 0 and all(s["holds"] for s in self.sharpness)

    def add_violation(self, entry: dict) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_RECORDED_VIOLATIONS:
            self.violations.append(entry)


def _evaluate_graph(g: Graph, instances: Sequence[TheoremInstance], k_max: int, max_n: int | None):
    P = GraphProfile(g, k_max, max_n)
    nonvacuous: dict[str, int] = {}
    violations = []
    for inst in instances:
        out = check_instance(g, inst, P)
        if out.condition_holds:
            nonvacuous[inst.theorem] = nonvacuous.get(inst.theorem, 0) + 1
        if out.violation:
            violations.append(
                {
                    "graph6": to_graph6_str(g),
                    "theorem": inst.theorem,
                    "k": inst.k,
                    "lambda": inst.lam,
                    "m": inst.m,
                    **{key: _json_value(v) for key, v in out.values.items()},
                }
            )
    return nonvacuous, violations


def _worker(args):
    g, instances, k_max, max_n = args
    if g.n < 1 or not g.is_connected():
        return None
    return _evaluate_graph(g, instances, k_max, max_n)


def verify_corpus(
    corpus: Iterable[Graph],
    k_values: Iterable[int] = range(1, 5),
    lam_values: Iterable[int] = range(1, 5),
    theorems: Iterable[str] | None = None,
    description: str = "",
    jobs: int = 1,
    max_n: int | None = None,
) -> VerificationReport:
    """Evaluate every valid instance on every connected graph of ``corpus``.

    Disconnected graphs are skipped and counted.  With ``jobs > 1`` graphs
    are farmed out to a process pool; the merged report does not depend on
    the job count.
    """
    start = time.perf_counter()
    instances = generate_instances(theorems, k_values, lam_values)
    k_max = max((i.k for i in instances), default=1)
    report = VerificationReport(corpus=description)
    all_violations: list[dict] = []

    def absorb(result):
        if result is None:
            report.skipped_disconnected += 1
            return
        nonvac, viol = result
        report.graphs += 1
        report.instances += len(instances)
        for name, c in nonvac.items():
            report.nonvacuous[name] = report.nonvacuous.get(name, 0) + c
        all_violations.extend(viol)

    tasks = ((g, instances, k_max, max_n) for g in corpus)
    if jobs > 1:
        import multiprocessing as mp

        with mp.Pool(jobs) as pool:
            for result in pool.imap(_worker, tasks, chunksize=64):
                absorb(result)
    else:
        for task in tasks:
            absorb(_worker(task))

    all_violations.sort(key=lambda v: (v["graph6"], v["theorem"], v["k"], v["lambda"] or 0, v["m"] or 0))
    for v in all_violations:
        report.add_violation(v)
    report.nonvacuous = dict(sorted(report.nonvacuous.items(), key=lambda kv: ALL_THEOREMS.index(kv[0])))
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


# ---------------------------------------------------------------------------
# sharpness


def _sharp_entry(family: str, g: Graph, k: int, lam: int | None, m: int | None, check: str, holds: bool, values: dict) -> dict:
    return {
        "family": family,
        "graph6": to_graph6_str(g),
        "k": k,
        "lambda": lam,
        "m": m,
        "check": check,
        "holds": bool(holds),
        "values": {key: _json_value(v) for key, v in values.items()},
    }


SHARPNESS_FAMILIES = ("g1", "g2", "g3", "krr")


def sharpness_suite(
    k_values: Iterable[int],
    lam_values: Iterable[int],
    r_values: Iterable[int] = (2, 3, 4),
    max_n: int | None = None,
    families: Iterable[str] = SHARPNESS_FAMILIES,
) -> VerificationReport:
    """Confirm that the extremal families meet the bounds with equality.

    * ``g1(k, lam)`` misses the degree-sum condition by exactly one and the
      conclusion by exactly one (m = 2 .. min(k, lam) + 1);
    * ``g2(k, lam)``, lam >= 2, satisfies the condition and meets the
      conclusion with no slack (2 <= m <= k);
    * ``g3(k)`` with lam = k, m = k + 1, k >= 2, does the same;
    * ``K_{r,r}`` (k = 1) has t_1 = t_2 = 2r.

    Every selected family graph must fit under the solver guard, otherwise
    :class:`~kended.errors.SizeError` is raised before any work is done.
    """
    start = time.perf_counter()
    families = set(families)
    unknown = families - set(SHARPNESS_FAMILIES)
    if unknown:
        raise ParameterError(f"unknown sharpness families {sorted(unknown)}")
    limit = solver_limit(max_n)
    ks = sorted(set(k_values))
    lams = sorted(set(lam_values))
    plan = []
    for k in ks:
        for lam in lams:
            plan.append(("g1", FamilySpec("g1", (k, lam)), k, lam))
            if lam >= 2 and k >= 2:
                plan.append(("g2", FamilySpec("g2", (k, lam)), k, lam))
        if k >= 2 and k in lams:
            plan.append(("g3", FamilySpec("g3", (k,)), k, k))
    if 1 in ks:
        for r in sorted(set(r_values)):
            plan.append(("krr", FamilySpec("krr", (r,)), 1, None))
    plan = [p for p in plan if p[0] in families]
    graphs = []
    for family, spec, k, lam in plan:
        g = build_family(spec)
        if g.n > limit:
            raise SizeError(f"{family}{spec.params} has {g.n} vertices, above the solver limit {limit}")
        graphs.append((family, spec, g, k, lam))

    report = VerificationReport(corpus="sharpness families")
    for family, spec, g, k, lam in graphs:
        P = GraphProfile(g, k + 1, limit)
        tk, tk1 = P.t(k), P.t(k + 1)
        if family == "g1":
            for m in range(2, min(k, lam) + 2):
                s = P.sigma(m)
                holds = s == tk1 - lam * (k - m + 1) - 1 and tk == tk1 - lam
                report.sharpness.append(_sharp_entry(
                    family, g, k, lam, m, "sigma_m = t_{k+1} - lam(k-m+1) - 1 and t_k = t_{k+1} - lam",
                    holds, {"sigma_m": s, "t_k": tk, "t_k1": tk1, "n": g.n}))
        elif family == "g2":
            for m in range(2, min(k, lam + 1) + 1):
                s = P.sigma(m)
                holds = s >= tk1 - lam * (k - m + 1) and tk == tk1 - lam + 1
                report.sharpness.append(_sharp_entry(
                    family, g, k, lam, m, "condition holds and t_k = t_{k+1} - lam + 1",
                    holds, {"sigma_m": s, "t_k": tk, "t_k1": tk1, "n": g.n}))
        elif family == "g3":
            m = k + 1
            s = P.sigma(m)
            holds = s >= tk1 and tk == tk1 - lam + 1
            report.sharpness.append(_sharp_entry(
                family, g, k, lam, m, "sigma_{k+1} >= t_{k+1} and t_k = t_{k+1} - k + 1",
                holds, {"sigma_m": s, "t_k": tk, "t_k1": tk1, "n": g.n}))
        else:
            r = spec.params[0]
            holds = tk == tk1 == 2 * r
            report.sharpness.append(_sharp_entry(
                family, g, 1, None, 2, "t_1 = t_2 = 2r",
                holds, {"sigma_m": P.sigma(2), "t_k": tk, "t_k1": tk1, "n": g.n}))
    report.graphs = len(graphs)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


__all__ = [
    "ALL_THEOREMS",
    "CheckOutcome",
    "GraphProfile",
    "SHARPNESS_FAMILIES",
    "STATEMENTS",
    "TheoremInstance",
    "VerificationReport",
    "check_instance",
    "generate_instances",
    "make_instance",
    "parent_instance",
    "sharpness_suite",
    "verify_corpus",
]
