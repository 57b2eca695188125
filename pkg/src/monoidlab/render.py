"""DOT and JSON renderings of analysis results."""

from __future__ import annotations

import json
from typing import Any

from monoidlab.automata import DFA
from monoidlab.coincidence import LemmaReport, OverflowGraph, SolutionSummary
from monoidlab.freehull import FreeGraph, FreeHullResult
from monoidlab.intersection import IntersectionReport
from monoidlab.maximality import MaximalityVerdict

SCHEMA = 1


def _q(s: str) -> str:
    return json.dumps(s if s else "ε", ensure_ascii=False)


def free_graph_dot(graph: FreeGraph) -> str:
    lines = ["graph free_graph {", f"  // components: {len(graph.components)}"]
    for i, comp in enumerate(graph.components):
        block = graph.first[comp[0]]
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f"    label={_q(f'component {i}: first block {block}')};")
        for w in comp:
            lines.append(f"    {_q(w)};")
        lines.append("  }")
    for u, w in graph.edges:
        lines.append(f"  {_q(u)} -- {_q(w)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def automaton_dot(dfa: DFA, name: str = "automaton") -> str:
    live = dfa.useful() | {dfa.initial}
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  start [shape=point];']
    for q in sorted(live):
        shape = "doublecircle" if q in dfa.finals else "circle"
        lines.append(f"  q{q} [shape={shape}];")
    lines.append(f"  start -> q{dfa.initial};")
    for q in sorted(live):
        by_target: dict[int, list[str]] = {}
        for i, r in enumerate(dfa.delta[q]):
            if r in live:
                by_target.setdefault(r, []).append(dfa.alphabet[i])
        for r, syms in sorted(by_target.items()):
            lines.append(f"  q{q} -> q{r} [label={_q(','.join(syms))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def overflow_graph_dot(graph: OverflowGraph) -> str:
    ids = {q: f"s{i}" for i, q in enumerate(graph.states)}
    live = graph.coreachable()
    lines = ["digraph overflow_graph {", "  rankdir=LR;"]
    for q, n in ids.items():
        label = "balanced" if q.side == "=" else f"{q.side} ahead: {q.overflow}"
        style = "" if q in live else ", style=dashed"
        shape = "doublecircle" if q.side == "=" else "ellipse"
        lines.append(f"  {n} [label={_q(label)}, shape={shape}{style}];")
    for q, out in graph.edges.items():
        for e in out:
            lines.append(f"  {ids[q]} -> {ids[e.target]} [label={_q(f'{e.g_letter}|{e.h_letter}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- JSON ---------------------------------------------------------------------


def dumps(data: dict[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def envelope(command: str, **payload: Any) -> dict[str, Any]:
    return {"schema": SCHEMA, "command": command, **payload}


def free_hull_json(result: FreeHullResult) -> dict[str, Any]:
    return envelope(
        "free-basis",
        generators=list(result.generators),
        basis=list(result.basis),
        free_rank=result.free_rank,
        factorizations={x: list(f) for x, f in result.factorizations.items()},
    )


def free_graph_json(graph: FreeGraph) -> dict[str, Any]:
    return envelope(
        "free-graph",
        nodes=list(graph.nodes),
        edges=[list(e) for e in graph.edges],
        components=[list(c) for c in graph.components],
        first={x: graph.first[x] for x in graph.nodes},
    )


def maximality_json(words: list[str], verdict: MaximalityVerdict) -> dict[str, Any]:
    return envelope(
        "is-k-maximal",
        generators=words,
        k=verdict.k,
        is_maximal=verdict.is_maximal,
        witness=list(verdict.witness) if verdict.witness else None,
        escape=verdict.escape,
    )


def classification_json(report: IntersectionReport) -> dict[str, Any]:
    cls = report.classification
    out: dict[str, Any] = {"kind": cls.kind}
    if cls.kind == "FinitelyGenerated":
        out["generators"] = list(cls.generators)
    elif cls.kind == "OneParameterFamily":
        out.update(alpha=cls.alpha, gamma=cls.gamma, beta=cls.beta)
    out["basis_sample"] = list(report.basis_sample)
    out["infinite"] = report.infinite
    return out


def intersection_json(report: IntersectionReport, classify: bool) -> dict[str, Any]:
    data = envelope(
        "intersect",
        X=list(report.xs),
        U=list(report.us),
        max_len=report.max_len,
        basis_sample=list(report.basis_sample),
        infinite=report.infinite,
        intersection_states=report.intersection_automaton.num_states,
        basis_states=report.basis_automaton.num_states,
    )
    if classify:
        data["certified"] = report.certified
        data["classification"] = classification_json(report)
        data["notes"] = list(report.notes)
    return data


def solutions_json(summary: SolutionSummary, g, h, criticals, lemmas: LemmaReport) -> dict[str, Any]:
    fam = summary.family
    return envelope(
        "coincidence",
        g=dict(g.items()),
        h=dict(h.items()),
        solutions=[{"r": p.r, "s": p.s, "image": g(p.r)} for p in summary.solutions],
        finite=summary.finite,
        truncated=summary.truncated,
        family=None if fam is None else {
            "u": fam.u, "p": fam.p, "u1": fam.u1, "v": fam.v, "q": fam.q, "v1": fam.v1,
            "alpha": fam.alpha, "gamma": fam.gamma, "beta": fam.beta,
        },
        critical_overflows=[
            {"o": c.o, "side": c.side, "anchor": list(c.anchor),
             "branches": [list(b) for b in c.branches]}
            for c in criticals
        ],
        lemmas={
            "certified": lemmas.certified,
            "case": lemmas.case,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in lemmas.checks],
        },
    )
