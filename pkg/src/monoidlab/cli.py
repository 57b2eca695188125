"""Command-line front end.

Exit codes: 0 success, 1 a contract or theorem violation was detected,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from monoidlab import render
from monoidlab.coincidence import (
    Morphism,
    critical_overflows,
    minimal_solutions,
    overflow_graph,
    verify_section4_lemmas,
)
from monoidlab.errors import ContractViolation, InputError
from monoidlab.freehull import free_graph, free_hull
from monoidlab.intersection import (
    Classification,
    IntersectionReport,
    basis_language,
    certify_3maximal,
    classify_3maximal_intersection,
    default_max_len,
    enumerate_basis,
    intersect,
)
from monoidlab.maximality import is_k_maximal
from monoidlab.words import WordSet

# -- input parsing ----------------------------------------------------------------


def parse_lines(text: str) -> list[list[str]]:
    """Blank-line separated blocks, one word per line, ``#`` starts a comment."""
    blocks: list[list[str]] = [[]]
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        if any(c.isspace() for c in line):
            raise InputError(f"one word per line expected, got {line!r}")
        blocks[-1].append(line)
    return [b for b in blocks if b]


def parse_json(text: str) -> list[list[str]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if isinstance(data, list):
        data = {"words": data}
    if not isinstance(data, dict):
        raise InputError("JSON input must be an object or a list of words")
    for keys in (("words",), ("X", "U"), ("g", "h"), ("X",)):
        if all(k in data for k in keys):
            blocks = [data[k] for k in keys]
            break
    else:
        raise InputError("JSON input needs 'words', 'X'/'U' or 'g'/'h'")
    for b in blocks:
        if not isinstance(b, list) or not all(isinstance(w, str) for w in b):
            raise InputError("word lists must be arrays of strings")
    return blocks


def read_blocks(path: str, fmt: str = "auto") -> list[list[str]]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None
    if fmt == "auto":
        fmt = "json" if path.endswith(".json") or text.lstrip().startswith(("{", "[")) else "lines"
    return parse_json(text) if fmt == "json" else parse_lines(text)


def dedupe(words: list[str]) -> list[str]:
    seen, out = set(), []
    for w in words:
        if w in seen:
            print(f"warning: duplicate word {w!r} ignored", file=sys.stderr)
            continue
        seen.add(w)
        out.append(w)
    WordSet(out)
    return out


def word_sets(args, count: int) -> list[list[str]]:
    blocks = []
    for path in args.inputs:
        blocks += read_blocks(path, args.input_format)
    if len(blocks) != count:
        raise InputError(f"expected {count} word set(s), found {len(blocks)}")
    return [dedupe(b) for b in blocks]


# -- commands -------------------------------------------------------------------


def emit(args, text: str, data: dict) -> None:
    sys.stdout.write(render.dumps(data) if args.format == "json" else text)


def write_dot(path: Optional[str], dot: str) -> None:
    if path is None:
        return
    if path == "-":
        sys.stdout.write(dot)
    else:
        Path(path).write_text(dot)


def cmd_free_basis(args) -> int:
    (words,) = word_sets(args, 1)
    result = free_hull(words)
    lines = [f"basis: {{{', '.join(result.basis)}}}", f"free rank: {result.free_rank}"]
    lines += [f"  {x} = {' . '.join(f)}" for x, f in result.factorizations.items()]
    emit(args, "\n".join(lines) + "\n", render.free_hull_json(result))
    return 0


def cmd_free_graph(args) -> int:
    (words,) = word_sets(args, 1)
    graph = free_graph(words)
    write_dot(args.dot, render.free_graph_dot(graph))
    if args.dot == "-":
        return 0
    lines = [f"components: {len(graph.components)}"]
    lines += [f"  edge [{u}, {w}]" for u, w in graph.edges]
    lines += [f"  component {{{', '.join(c)}}}" for c in graph.components]
    emit(args, "\n".join(lines) + "\n", render.free_graph_json(graph))
    return 0


def cmd_is_k_maximal(args) -> int:
    (words,) = word_sets(args, 1)
    verdict = is_k_maximal(words, args.k)
    if verdict.is_maximal:
        text = f"{{{', '.join(WordSet(words).sorted())}}}* is {args.k}-maximal\n"
    else:
        text = (f"not {args.k}-maximal: contained in {{{', '.join(verdict.witness)}}}*"
                f" ({verdict.escape} lies outside)\n")
    emit(args, text, render.maximality_json(WordSet(words).sorted(), verdict))
    return 0


def cmd_intersect(args) -> int:
    xs, us = word_sets(args, 2)
    if args.classify:
        report = classify_3maximal_intersection(xs, us, unchecked=args.unchecked,
                                                max_len=args.max_len)
    else:
        max_len = args.max_len or default_max_len(xs, us)
        m = intersect(xs, us)
        basis = basis_language(m)
        sample = enumerate_basis(m, max_len, basis)
        report = IntersectionReport(tuple(WordSet(xs).sorted()), tuple(WordSet(us).sorted()),
                                    m, basis, Classification("Unclassified"), sample.words,
                                    sample.infinite, max_len, False)
    write_dot(args.dot, render.automaton_dot(report.intersection_automaton, "intersection")
              + render.automaton_dot(report.basis_automaton, "basis"))
    lines = [f"basis words up to length {report.max_len}: "
             f"{{{', '.join(report.basis_sample)}}}",
             f"basis is {'infinite' if report.infinite else 'finite'}"]
    if args.classify:
        cls = report.classification
        if cls.kind == "OneParameterFamily":
            lines.append(f"classification: {{{cls.alpha} ({cls.gamma})* {cls.beta}}}*")
        elif cls.kind == "FinitelyGenerated":
            lines.append(f"classification: {{{', '.join(cls.generators)}}}*")
        else:
            lines.append(f"classification: {cls.kind}")
        lines.append(f"certified 3-maximal: {report.certified}")
        lines += [f"note: {n}" for n in report.notes]
    emit(args, "\n".join(lines) + "\n", render.intersection_json(report, args.classify))
    return 0


def cmd_coincidence(args) -> int:
    (gs, hs) = [list(b) for b in _morphism_blocks(args)]
    g, h = Morphism(tuple(gs)), Morphism(tuple(hs))
    graph = overflow_graph(g, h)
    summary = minimal_solutions(g, h, count_bound=args.count_bound,
                                length_bound=args.max_len, graph=graph)
    criticals = critical_overflows(g, h, graph)
    certified = (len(gs) == 3 and len(hs) == 3 and set(gs) != set(hs)
                 and certify_3maximal(gs) and certify_3maximal(hs))
    lemmas = verify_section4_lemmas(g, h, summary.solutions, certified=certified)
    write_dot(args.dot, render.overflow_graph_dot(graph))

    lines = ["g: " + ", ".join(f"{a}->{w}" for a, w in g.items()),
             "h: " + ", ".join(f"{a}->{w}" for a, w in h.items()),
             "minimal solutions:"]
    lines += [f"  ({p.r}, {p.s})  image {g(p.r)}" for p in summary.solutions]
    if summary.truncated:
        lines.append("  ... (truncated)")
    lines.append(f"first-return language is {'finite' if summary.finite else 'infinite'}")
    if summary.family:
        f = summary.family
        lines.append(f"family: ({f.u} ({f.p})^i {f.u1}, {f.v} ({f.q})^i {f.v1}); "
                     f"images {f.alpha} ({f.gamma})^i {f.beta}")
    for c in criticals:
        lines.append(f"critical overflow {c.o or 'ε'!s} ({c.side}) on "
                     f"({c.anchor[0] or 'ε'}, {c.anchor[1] or 'ε'}), branches {c.branches}")
    lines.append(f"lemma checks ({'certified' if certified else 'uncertified'} input):")
    lines += [f"  {'ok  ' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
              for c in lemmas.checks]
    emit(args, "\n".join(lines) + "\n", render.solutions_json(summary, g, h, criticals, lemmas))
    if certified and not lemmas.passed:
        return 1
    return 0


def _morphism_blocks(args) -> list[list[str]]:
    blocks = []
    for path in args.inputs:
        blocks += read_blocks(path, args.input_format)
    if len(blocks) != 2:
        raise InputError(f"expected images of g and h, found {len(blocks)} block(s)")
    if len(blocks[0]) != len(blocks[1]):
        raise InputError("g and h need the same number of images")
    for b in blocks:
        WordSet(b)
    return blocks


# -- entry point ----------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoidlab", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--input-format", choices=("auto", "lines", "json"), default="auto")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("free-basis", parents=[common], help="free hull basis and factorizations")
    p.add_argument("inputs", nargs=1)
    p.set_defaults(func=cmd_free_basis)

    p = sub.add_parser("free-graph", parents=[common], help="free graph of a word set")
    p.add_argument("inputs", nargs=1)
    p.add_argument("--dot", metavar="PATH", help="write DOT here ('-' for stdout)")
    p.set_defaults(func=cmd_free_graph)

    p = sub.add_parser("is-k-maximal", parents=[common], help="decide k-maximality")
    p.add_argument("inputs", nargs=1)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_is_k_maximal)

    p = sub.add_parser("intersect", parents=[common], help="intersection of two submonoids")
    p.add_argument("inputs", nargs="+", help="one file with two blocks, or two files")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--max-len", type=int)
    p.add_argument("--unchecked", action="store_true", help="skip 3-maximality certification")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("coincidence", parents=[common], help="minimal solutions of g(r) = h(s)")
    p.add_argument("inputs", nargs="+", help="images of g then h (blank-line separated)")
    p.add_argument("--count-bound", type=int, default=16)
    p.add_argument("--max-len", type=int)
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=cmd_coincidence)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", 1) is not None and getattr(args, "k", 1) < 1:
        parser.error("--k must be positive")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
