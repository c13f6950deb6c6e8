"""Command-line front end.

    kended tk --family g1 --fk 2 --flambda 2 --k 2
    kended profile --graph6 Bw --kmax 2
    kended verify --enumerate 4 --kmax 3 --lmax 3
    kended sharpness --kmax 2 --lmax 3
    kended replay --graph6 'E?~w' --k 2 --lambda 1
    kended gen --random --n 8 --p 0.4 --seed 7

Exit status: 0 on success, 1 when a theorem instance, sharpness equality
or proof claim fails, 2 on usage, parse or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import KendedError, ParameterError
from .graph import FAMILY_KINDS, FamilySpec, Graph, build_family, enumerate_labeled_connected, random_connected
from .graph6 import parse_graph6, read_graph6_file, to_graph6_str
from .harness import ALL_THEOREMS, VerificationReport, sharpness_suite, verify_corpus
from .solver import t_k_exact, t_values
from .transforms import proof_replay

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUBCOMMANDS = ("tk", "profile", "verify", "sharpness", "replay", "gen")


# ---------------------------------------------------------------------------
# reports


def _report_dict(report: VerificationReport) -> dict:
    # the first five keys are the stable schema; the rest are supplementary
    return {
        "corpus": report.corpus,
        "instances": report.instances,
        "violations": report.violations,
        "sharpness": report.sharpness,
        "elapsed_ms": report.elapsed_ms,
        "graphs": report.graphs,
        "skipped_disconnected": report.skipped_disconnected,
        "violation_count": report.violation_count,
        "nonvacuous": report.nonvacuous,
    }


def render_report(report: VerificationReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(_report_dict(report), separators=(",", ":"))
    if fmt != "text":
        raise ParameterError(f"unknown format {fmt!r}")
    d = _report_dict(report)
    lines = [
        f"corpus:               {d['corpus']}",
        f"graphs:               {d['graphs']}",
        f"skipped disconnected: {d['skipped_disconnected']}",
        f"instances:            {d['instances']}",
        f"violations:           {d['violation_count']}",
        f"elapsed_ms:           {d['elapsed_ms']}",
    ]
    if d["nonvacuous"]:
        lines.append("")
        lines.append(f"{'theorem':<8} {'non-vacuous':>12}")
        for name, count in d["nonvacuous"].items():
            lines.append(f"{name:<8} {count:>12}")
    if d["violations"]:
        lines.append("")
        lines.append("graph6        theorem  k  lambda  m  t_k  t_k1  sigma_m  n")
        for v in d["violations"]:
            lines.append(
                f"{v['graph6']:<13} {v['theorem']:<8} {v['k']:<2} {str(v['lambda']):<7} {str(v['m']):<2} "
                f"{v['t_k']:<4} {v['t_k1']:<5} {str(v['sigma_m']):<8} {v['n']}"
            )
    if d["sharpness"]:
        lines.append("")
        lines.append("family  graph6         k  lambda  m  holds  values")
        for s in d["sharpness"]:
            vals = " ".join(f"{key}={val}" for key, val in s["values"].items())
            lines.append(
                f"{s['family']:<7} {s['graph6']:<14} {s['k']:<2} {str(s['lambda']):<7} {str(s['m']):<2} "
                f"{'yes' if s['holds'] else 'NO':<6} {vals}"
            )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# configuration


@dataclass
class CommandConfig:
    subcommand: str
    graph6: str | None = None
    corpus: str | None = None
    family: str | None = None
    fk: int | None = None
    flambda: int | None = None
    fq: int | None = None
    fr: int | None = None
    fs: int | None = None
    enumerate: int | None = None
    random: bool = False
    n: int | None = None
    p: float = 0.5
    seed: int = 0
    k: int | None = None
    lam: int | None = None
    m: int | None = None
    kmax: int | None = None
    lmax: int | None = None
    theorems: tuple[str, ...] | None = None
    max_n: int | None = None
    jobs: int = 1
    output: str | None = None
    format: str = "text"

    def validate(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise ParameterError(f"unknown subcommand {self.subcommand!r}")
        for name in ("fk", "flambda", "fq", "fr", "fs", "enumerate", "n", "k", "lam", "m", "kmax", "lmax", "jobs", "max_n"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ParameterError(f"--{name.replace('lam', 'lambda')} must be a positive integer")
        if not 0.0 <= self.p <= 1.0:
            raise ParameterError("--p must lie in [0, 1]")
        if self.format not in ("json", "text"):
            raise ParameterError(f"unknown format {self.format!r}")
        if self.theorems:
            bad = [t for t in self.theorems if t not in ALL_THEOREMS]
            if bad:
                raise ParameterError(f"unknown theorem(s) {bad}")

    def source(self) -> str | None:
        """The graph source that applies, by precedence."""
        if self.graph6 is not None:
            return "graph6"
        if self.corpus is not None:
            return "corpus"
        if self.family is not None:
            return "family"
        if self.enumerate is not None:
            return "enumerate"
        if self.random:
            return "random"
        return None


def _family_spec(cfg: CommandConfig) -> FamilySpec:
    kind = cfg.family
    if kind not in FAMILY_KINDS or kind in ("join", "union"):
        raise ParameterError(f"--family must be one of {sorted(k for k in FAMILY_KINDS if k not in ('join', 'union'))}")
    wanted = {
        "g1": ("fk", "flambda"),
        "g2": ("fk", "flambda"),
        "g3": ("fk",),
        "krr": ("fr",),
        "complete": ("fq",),
        "path": ("fq",),
        "cycle": ("fq",),
        "star": ("fq",),
        "complete-bipartite": ("fr", "fs"),
    }[kind]
    params = []
    for name in wanted:
        value = getattr(cfg, name)
        if value is None:
            raise ParameterError(f"--family {kind} needs --{name}")
        params.append(value)
    return FamilySpec(kind, tuple(params))


def _graphs(cfg: CommandConfig) -> Iterator[Graph]:
    src = cfg.source()
    if src is None:
        raise ParameterError("a graph source is required: --graph6, --corpus, --family, --enumerate or --random")
    if src == "graph6":
        yield parse_graph6(cfg.graph6)
    elif src == "corpus":
        try:
            yield from read_graph6_file(cfg.corpus)
        except OSError as exc:
            raise ParameterError(f"cannot read corpus {cfg.corpus}: {exc.strerror}") from None
    elif src == "family":
        yield build_family(_family_spec(cfg))
    elif src == "enumerate":
        yield from enumerate_labeled_connected(cfg.enumerate)
    else:
        if cfg.n is None:
            raise ParameterError("--random needs --n")
        yield random_connected(cfg.n, cfg.p, cfg.seed)


def _single(cfg: CommandConfig) -> Graph:
    it = _graphs(cfg)
    g = next(it, None)
    if g is None:
        raise ParameterError("graph source is empty")
    if next(it, None) is not None:
        raise ParameterError(f"{cfg.subcommand} takes a single graph")
    return g


def _describe(cfg: CommandConfig) -> str:
    src = cfg.source()
    if src == "graph6":
        return f"graph6 {cfg.graph6}"
    if src == "corpus":
        return f"corpus {cfg.corpus}"
    if src == "family":
        return f"family {_family_spec(cfg).kind}{_family_spec(cfg).params}"
    if src == "enumerate":
        return f"labeled connected graphs n={cfg.enumerate}"
    return f"random n={cfg.n} p={cfg.p} seed={cfg.seed}"


# ---------------------------------------------------------------------------
# dispatch


def _witness(w) -> dict:
    if isinstance(w, tuple):
        return {"cycle": list(w)}
    return {"vertices": sorted(w.vertices), "edges": [list(e) for e in sorted(w.edges)]}


def dispatch(cfg: CommandConfig) -> tuple[int, str]:
    """Run one command; returns (exit status, document)."""
    cfg.validate()
    sub = cfg.subcommand
    if sub == "tk":
        if cfg.k is None:
            raise ParameterError("tk needs --k")
        res = t_k_exact(_single(cfg), cfg.k, cfg.max_n)
        if cfg.format == "json":
            return EXIT_OK, json.dumps({"k": res.k, "t_k": res.order, "witness": _witness(res.witness)})
        return EXIT_OK, str(res.order)
    if sub == "profile":
        kmax = cfg.kmax or 4
        vals = t_values(_single(cfg), kmax, cfg.max_n)
        if cfg.format == "json":
            return EXIT_OK, json.dumps({"k_max": kmax, "t": vals})
        return EXIT_OK, str(vals)
    if sub == "verify":
        kmax, lmax = cfg.kmax or 4, cfg.lmax or 4
        report = verify_corpus(
            _graphs(cfg),
            range(1, kmax + 1),
            range(1, lmax + 1),
            cfg.theorems,
            description=_describe(cfg),
            jobs=cfg.jobs,
            max_n=cfg.max_n,
        )
        return (EXIT_OK if report.ok else EXIT_FAIL), render_report(report, cfg.format)
    if sub == "sharpness":
        kmax, lmax = cfg.kmax or 2, cfg.lmax or 3
        report = sharpness_suite(range(1, kmax + 1), range(1, lmax + 1), max_n=cfg.max_n)
        return (EXIT_OK if report.ok else EXIT_FAIL), render_report(report, cfg.format)
    if sub == "replay":
        if cfg.k is None or cfg.lam is None:
            raise ParameterError("replay needs --k and --lambda")
        rep = proof_replay(_single(cfg), cfg.k, cfg.lam, cfg.max_n)
        claims = {c: getattr(rep, f"{c}_ok") for c in ("claim1", "claim2", "claim3", "claim6", "claim7", "claim8")}
        doc = {
            "k": rep.k,
            "lambda": rep.lam,
            "precondition_held": rep.precondition_held,
            "t_k": rep.t_k,
            "t_k1": rep.t_k1,
            "trees_checked": rep.trees_checked,
            "claims": claims,
            "failures": [
                {"claim": c, "detail": d, "tree_edges": [list(e) for e in sorted(t.edges)]} for t, c, d in rep.failures
            ],
        }
        if cfg.format == "json":
            text = json.dumps(doc)
        else:
            lines = [
                f"t_k = {rep.t_k}, t_(k+1) = {rep.t_k1}, precondition {'holds' if rep.precondition_held else 'fails'}",
                f"maximum trees checked: {rep.trees_checked}",
            ]
            lines += [f"{c}: {'ok' if ok else 'FAILED'}" for c, ok in claims.items()]
            lines += [f"  {c}: {d}" for _, c, d in rep.failures]
            text = "\n".join(lines)
        return (EXIT_OK if rep.ok else EXIT_FAIL), text
    # gen
    graphs = list(_graphs(cfg))
    if cfg.format == "json":
        return EXIT_OK, json.dumps([{"graph6": to_graph6_str(g), "n": g.n, "edges": [list(e) for e in g.edges]} for g in graphs])
    return EXIT_OK, "\n".join(to_graph6_str(g) for g in graphs)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kended", description="Largest k-ended trees and degree-sum theorems on small graphs.")
    sub = ap.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        src = sp.add_argument_group("graph source (precedence: graph6 > corpus > family > enumerate > random)")
        src.add_argument("--graph6")
        src.add_argument("--corpus", metavar="PATH")
        src.add_argument("--family", metavar="KIND")
        src.add_argument("--fk", type=int)
        src.add_argument("--flambda", type=int)
        src.add_argument("--fq", type=int)
        src.add_argument("--fr", type=int)
        src.add_argument("--fs", type=int)
        src.add_argument("--enumerate", type=int, metavar="N")
        src.add_argument("--random", action="store_true")
        src.add_argument("--n", type=int)
        src.add_argument("--p", type=float, default=0.5)
        src.add_argument("--seed", type=int, default=0)
        sp.add_argument("--k", type=int)
        sp.add_argument("--lambda", dest="lam", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--kmax", type=int)
        sp.add_argument("--lmax", type=int)
        sp.add_argument("--theorems", help="comma-separated theorem ids")
        sp.add_argument("--max-n", dest="max_n", type=int, help="solver size guard (default KENDED_MAX_N or 10)")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--output", "-o", metavar="PATH")
        sp.add_argument("--format", choices=("json", "text"), default="text")
    return ap


def parse_config(argv: Sequence[str] | None = None) -> CommandConfig:
    ns = vars(_parser().parse_args(argv))
    theorems = ns.pop("theorems")
    if theorems:
        ns["theorems"] = tuple(t.strip() for t in theorems.split(",") if t.strip())
    return CommandConfig(**ns)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        status, doc = dispatch(cfg)
    except KendedError as exc:
        print(f"kended: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)
    return status


__all__ = ["CommandConfig", "dispatch", "main", "parse_config", "render_report"]
