"""Coincidence sets of two nonerasing morphisms via the overflow graph.

The overflow graph records how far one side's image runs ahead of the other
while a double factorization is built.  From the balanced state the g side
moves first; a state ``("g", o)`` means ``g(r) = h(s) o`` and is advanced by
one h-letter, a state ``("h", o)`` means ``h(s) = g(r) o`` and is advanced by
one g-letter.  Every overflow is a proper suffix of some image, so the graph
is finite.  Minimal solutions are exactly the paths that leave the balanced
state and return to it for the first time.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from monoidlab._graphs import single_cycle
from monoidlab.errors import InputError
from monoidlab.freehull import FreeHullResult, free_graph, free_hull, x_factorize
from monoidlab.maximality import is_bifix
from monoidlab.words import WordSet, canonical, longest_common_prefix, prefix_comparable

DOMAIN = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Morphism:
    """A nonerasing morphism from ``letters`` to words; ``images[i]`` is the image of ``letters[i]``."""

    images: tuple[str, ...]
    letters: str = ""

    def __post_init__(self) -> None:
        if not self.letters:
            object.__setattr__(self, "letters", DOMAIN[: len(self.images)])
        if len(self.letters) != len(self.images):
            raise InputError("one image per domain letter is required")
        if len(set(self.letters)) != len(self.letters):
            raise InputError("domain letters must be distinct")
        WordSet(self.images)  # rejects empty images and bad symbols

    def image(self, letter: str) -> str:
        return self.images[self.letters.index(letter)]

    def __call__(self, word: str) -> str:
        return "".join(self.image(a) for a in word)

    def items(self):
        return zip(self.letters, self.images)


def build_morphisms(xs: Iterable[str], us: Iterable[str],
                    canonical_order: bool = True) -> tuple[Morphism, Morphism]:
    """Encode two generating sets as morphisms over a common domain.

    Images are assigned in length-lex order by default; with
    ``canonical_order=False`` the given sequence order is kept.
    """
    xs, us = list(xs), list(us)
    for w in xs + us:
        if not w:
            raise InputError("the empty word cannot be a generator")
    if canonical_order:
        xs, us = canonical(xs), canonical(us)
    return Morphism(tuple(xs)), Morphism(tuple(us))


class State(NamedTuple):
    side: str  # "=", "g" (g ahead) or "h" (h ahead)
    overflow: str

    def __str__(self) -> str:
        return "=" if self.side == "=" else f"{self.side}:{self.overflow}"


BALANCED = State("=", "")


class Edge(NamedTuple):
    g_letter: str
    h_letter: str
    target: State


@dataclass(frozen=True)
class OverflowGraph:
    g: Morphism
    h: Morphism
    edges: dict[State, tuple[Edge, ...]] = field(compare=False)

    @property
    def states(self) -> list[State]:
        return list(self.edges)

    start = BALANCED

    def coreachable(self) -> set[State]:
        """States that reach the balanced state (the balanced state included)."""
        back: dict[State, set[State]] = {}
        for q, out in self.edges.items():
            for e in out:
                back.setdefault(e.target, set()).add(q)
        seen = {BALANCED}
        todo = [BALANCED]
        while todo:
            r = todo.pop()
            for q in back.get(r, ()):
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return seen

    def useful_edges(self) -> dict[State, list[Edge]]:
        live = self.coreachable()
        return {q: [e for e in out if e.target in live]
                for q, out in self.edges.items() if q in live}


def _advance(state: State, letter: str, g: Morphism, h: Morphism) -> Optional[State]:
    if state.side == "=":
        return State("g", g.image(letter))
    o = state.overflow
    image = h.image(letter) if state.side == "g" else g.image(letter)
    other = "h" if state.side == "g" else "g"
    if image == o:
        return BALANCED
    if o.startswith(image):
        return State(state.side, o[len(image):])
    if image.startswith(o):
        return State(other, image[len(o):])
    return None


def overflow_graph(g: Morphism, h: Morphism) -> OverflowGraph:
    edges: dict[State, tuple[Edge, ...]] = {}
    todo = [BALANCED]
    while todo:
        q = todo.pop()
        if q in edges:
            continue
        out = []
        letters = h.letters if q.side == "g" else g.letters
        for a in letters:
            r = _advance(q, a, g, h)
            if r is None:
                continue
            out.append(Edge(a, "", r) if q.side != "g" else Edge("", a, r))
            if r not in edges:
                todo.append(r)
        edges[q] = tuple(out)
    ordered = dict(sorted(edges.items(), key=lambda kv: (kv[0].side != "=", kv[0].side,
                                                           len(kv[0].overflow), kv[0].overflow)))
    return OverflowGraph(g, h, ordered)


@dataclass(frozen=True)
class SolutionPair:
    """A solution ``g(r) == h(s)``; r is the g side, s the h side."""

    r: str
    s: str

    def image(self, g: Morphism) -> str:
        return g(self.r)


@dataclass(frozen=True)
class Family:
    """Minimal solutions ``(u p^i u1, v q^i v1)`` and their common images ``alpha gamma^i beta``."""

    u: str
    p: str
    u1: str
    v: str
    q: str
    v1: str
    alpha: str
    gamma: str
    beta: str
    anchor: State

    def solution(self, i: int) -> SolutionPair:
        return SolutionPair(self.u + self.p * i + self.u1, self.v + self.q * i + self.v1)


@dataclass(frozen=True)
class SolutionSummary:
    solutions: tuple[SolutionPair, ...]
    finite: bool
    truncated: bool
    family: Optional[Family]


def minimal_solutions(g: Morphism, h: Morphism, count_bound: Optional[int] = 16,
                      length_bound: Optional[int] = None,
                      graph: Optional[OverflowGraph] = None) -> SolutionSummary:
    """Minimal solutions up to the bounds, in (image length, image, r, s) order.

    ``length_bound`` limits ``|g(r)|`` (default four times the longest image);
    ``count_bound=None`` disables the count cut.
    """
    graph = graph or overflow_graph(g, h)
    if length_bound is None:
        length_bound = 4 * max(len(w) for w in g.images + h.images)
    useful = graph.useful_edges()
    finite = _first_return_acyclic(useful)
    family = extract_family(graph, useful)

    # best-first on the frontier length; each edge advances one side by a full image
    heap = [(0, "", "", BALANCED)]
    found = []
    while heap:
        front, r, s, q = heapq.heappop(heap)
        for e in useful.get(q, ()):
            r2, s2 = r + e.g_letter, s + e.h_letter
            f2 = max(len(g(r2)), len(h(s2)))
            if f2 > length_bound:
                continue
            if e.target == BALANCED:
                found.append(SolutionPair(r2, s2))
            else:
                heapq.heappush(heap, (f2, r2, s2, e.target))
    found.sort(key=lambda p: (len(g(p.r)), g(p.r), p.r, p.s))
    truncated = count_bound is not None and len(found) > count_bound
    if truncated:
        found = found[:count_bound]
    return SolutionSummary(tuple(found), finite, truncated, family)


def _first_return_acyclic(useful: dict[State, list[Edge]]) -> bool:
    from monoidlab._graphs import strongly_connected

    inner = {q: [e.target for e in out if e.target != BALANCED]
             for q, out in useful.items() if q != BALANCED}
    for comp in strongly_connected(inner):
        v = next(iter(comp))
        if len(comp) > 1 or v in inner[v]:
            return False
    return True


def extract_family(graph: OverflowGraph,
                   useful: Optional[dict[State, list[Edge]]] = None) -> Optional[Family]:
    """Read ``(u, p, u1 | v, q, v1)`` off a single-cycle overflow graph.

    The cycle is anchored at its entry state.  The image split uses the side
    that is ahead there, so ``alpha`` is everything both factorizations have
    committed to on reaching the cycle.
    """
    useful = graph.useful_edges() if useful is None else useful
    labelled = {q: [((e.g_letter, e.h_letter), e.target) for e in out]
                for q, out in useful.items()}
    shape = single_cycle(labelled, BALANCED, lambda q: q == BALANCED)
    if shape is None:
        return None
    prefix, cycle, suffix = shape
    # recover the anchor by replaying the prefix
    q = BALANCED
    for lab in prefix:
        q = next(e.target for e in useful[q] if (e.g_letter, e.h_letter) == lab)

    def side(labels, k):
        return "".join(lab[k] for lab in labels)

    u, p, u1 = side(prefix, 0), side(cycle, 0), side(suffix, 0)
    v, qq, v1 = side(prefix, 1), side(cycle, 1), side(suffix, 1)
    m, a, c, b = (graph.g, u, p, u1) if q.side == "g" else (graph.h, v, qq, v1)
    return Family(u, p, u1, v, qq, v1, m(a), m(c), m(b), q)


# -- marking and critical overflows -------------------------------------------


def is_marked(m: Morphism) -> bool:
    firsts = [w[0] for w in m.images]
    return len(set(firsts)) == len(firsts)


def first_blocks(m: Morphism, hull: FreeHullResult) -> list[str]:
    out = []
    for w in m.images:
        fact = x_factorize(w, hull)
        if fact is None:
            raise InputError(f"image {w!r} is outside the free hull")
        out.append(fact[0])
    return out


def is_z_marked(m: Morphism, hull: FreeHullResult) -> bool:
    firsts = first_blocks(m, hull)
    return len(set(firsts)) == len(firsts)


@dataclass(frozen=True)
class CriticalOverflow:
    o: str
    side: str
    anchor: tuple[str, str]
    branches: tuple[tuple[str, str], tuple[str, str]]
    state: State


def _anchors(graph: OverflowGraph, useful) -> dict[State, tuple[str, str]]:
    """Shortest (then lexicographically least) pair reaching each useful state."""
    best = {BALANCED: ("", "")}
    heap = [(0, "", "", BALANCED)]
    while heap:
        n, r, s, q = heapq.heappop(heap)
        if best.get(q) != (r, s):
            continue
        for e in useful.get(q, ()):
            if e.target == BALANCED:
                continue
            cand = (r + e.g_letter, s + e.h_letter)
            key = (len(cand[0]) + len(cand[1]), cand)
            old = best.get(e.target)
            if old is None or key < (len(old[0]) + len(old[1]), old):
                best[e.target] = cand
                heapq.heappush(heap, (key[0], cand[0], cand[1], e.target))
    return best


def _first_letters(useful, side: str) -> dict[State, set[str]]:
    """For each state, the letters that can be the next ``side`` letter on a way home."""
    k = 0 if side == "g" else 1
    out: dict[State, set[str]] = {q: set() for q in useful}
    changed = True
    while changed:
        changed = False
        for q, edges in useful.items():
            acc = set()
            for e in edges:
                lab = (e.g_letter, e.h_letter)[k]
                if lab:
                    acc.add(lab)
                elif e.target != BALANCED:
                    acc |= out[e.target]
            if acc - out[q]:
                out[q] |= acc
                changed = True
    return out


def branch_pairs(graph: OverflowGraph, state: State, useful=None) -> set[tuple[str, str]]:
    """Pairs (first g-letter, first h-letter) of the continuations from ``state`` home."""
    useful = graph.useful_edges() if useful is None else useful
    fg, fh = _first_letters(useful, "g"), _first_letters(useful, "h")
    pairs = set()
    for e in useful.get(state, ()):
        if e.g_letter:
            heads = {e.h_letter} if e.h_letter else (fh[e.target] if e.target != BALANCED else set())
            pairs |= {(e.g_letter, b) for b in heads}
        else:
            heads = fg[e.target] if e.target != BALANCED else set()
            pairs |= {(a, e.h_letter) for a in heads}
    return pairs


def critical_overflows(g: Morphism, h: Morphism,
                       graph: Optional[OverflowGraph] = None) -> list[CriticalOverflow]:
    """States admitting two continuations home that differ in both first letters."""
    graph = graph or overflow_graph(g, h)
    useful = graph.useful_edges()
    anchors = _anchors(graph, useful)
    out = []
    for q in useful:
        if q not in anchors:
            continue
        pairs = sorted(branch_pairs(graph, q, useful))
        hit = next(((p1, p2) for i, p1 in enumerate(pairs) for p2 in pairs[i + 1:]
                    if p1[0] != p2[0] and p1[1] != p2[1]), None)
        if hit is not None:
            out.append(CriticalOverflow(q.overflow, q.side, anchors[q], hit, q))
    return out


# -- lemma checks -------------------------------------------------------------


@dataclass
class LemmaCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class LemmaReport:
    checks: list[LemmaCheck]
    certified: bool
    case: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[LemmaCheck]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> LemmaCheck:
        return next(c for c in self.checks if c.name == name)


def _domain_words(letters: str, max_len: int) -> list[str]:
    out, layer = [""], [""]
    for _ in range(max_len):
        layer = [w + a for w in layer for a in letters]
        out += layer
    return out


def check_incmorphism(m: Morphism, max_len: int = 3) -> Optional[tuple[str, str]]:
    """Counterexample to ``m(u) <= m(u') iff u <= u'`` over short domain words."""
    ws = _domain_words(m.letters, max_len)
    images = {w: m(w) for w in ws}
    for u in ws:
        for u2 in ws:
            if images[u2].startswith(images[u]) != u2.startswith(u):
                return (u, u2)
    return None


def _lcp_pair(p: SolutionPair, p2: SolutionPair) -> tuple[str, str]:
    return longest_common_prefix(p.r, p2.r), longest_common_prefix(p.s, p2.s)


def verify_section4_lemmas(g: Morphism, h: Morphism, solutions: Sequence[SolutionPair],
                           certified: bool = False) -> LemmaReport:
    """Instantiate the structural lemmas on concrete data.

    Checks are oriented so that the Z-marked morphism plays the role of g
    (the two morphisms are swapped when only h is Z-marked).  Violations on
    certified 3-maximal inputs indicate a bug; on other inputs they are
    expected and reported as data.
    """
    checks: list[LemmaCheck] = []
    sols = list(solutions)
    z = list(g.images) + list(h.images)
    hull = free_hull(z)
    graph_z = free_graph(z, hull)

    checks.append(LemmaCheck("freegraphZ", hull.free_rank > 3,
                             f"r_f(Z) = c(Z) = {hull.free_rank}"))

    for name, m in (("g", g), ("h", h)):
        bad = check_incmorphism(m)
        checks.append(LemmaCheck(f"incmorphism[{name}]", bad is None,
                                 "" if bad is None else f"{name}({bad[0]}) vs {name}({bad[1]})"))

    bad = None
    for i, p in enumerate(sols):
        for p2 in sols[i + 1:]:
            if prefix_comparable(p.r, p2.r) or prefix_comparable(p.s, p2.s):
                bad = (p, p2)
                break
        if bad:
            break
    checks.append(LemmaCheck("notcompa", bad is None,
                             "" if bad is None else f"{bad[0]} and {bad[1]} are prefix comparable"))

    gm, hm = is_z_marked(g, hull), is_z_marked(h, hull)
    if sols:
        ok = gm or hm
        detail = f"g Z-marked={gm}, h Z-marked={hm}"
        for name, m, marked in (("g", g, gm), ("h", h, hm)):
            if not marked:
                blocks = first_blocks(m, hull)
                shared = [a for a, b in zip(m.letters, blocks) if blocks.count(b) > 1]
                ok = ok and len(shared) == 2
                detail += f"; {name} letters sharing a first block: {''.join(shared)}"
        checks.append(LemmaCheck("marked", ok, detail))

    # orient: G is Z-marked
    G, H, pairs = g, h, sols
    if not gm and hm:
        G, H = h, g
        pairs = [SolutionPair(p.s, p.r) for p in sols]
    h_marked = is_z_marked(H, hull)

    case = None
    overflows = set()
    expected_edges: set[frozenset[str]] = set()
    for i, p in enumerate(pairs):
        for p2 in pairs[i + 1:]:
            u, v = _lcp_pair(p, p2)
            if u == p.r or u == p2.r or v == p.s or v == p2.s:
                continue  # comparable; reported by notcompa
            gu, hv = G(u), H(v)
            if not gu.startswith(hv):
                checks.append(LemmaCheck("cases", False,
                                         f"G({u})={gu} does not extend H({v})={hv}"))
                continue
            o = gu[len(hv):]
            overflows.add(o)
            checks.append(LemmaCheck("cases", h_marked == (o == ""),
                                     f"overflow {o!r} on ({u or 'ε'},{v or 'ε'}), H Z-marked={h_marked}"))
            a, a2 = p.r[len(u)], p2.r[len(u)]
            b, b2 = p.s[len(v)], p2.s[len(v)]
            if o:
                want = _x_lcp(H.image(b), H.image(b2), hull)
                checks.append(LemmaCheck("criticaloverflow", want == o,
                                         f"o={o!r}, H({b}) ^_Z H({b2}) = {want!r}"))
            if not u and not v:
                this_case = 1
                expected_edges |= {frozenset((G.image(a), H.image(b))),
                                   frozenset((G.image(a2), H.image(b2)))}
            elif u and not v:
                this_case = 2
                ga = G.image(u[0])
                expected_edges |= {frozenset((ga, H.image(b))), frozenset((ga, H.image(b2))),
                                   frozenset((H.image(b), H.image(b2)))}
            else:
                this_case = 3
                expected_edges |= {frozenset((G.image(u[0]), H.image(v[0]))),
                                   frozenset((H.image(b), H.image(b2)))}
            case = this_case if case in (None, this_case) else -1

    if len(overflows) > 1:
        checks.append(LemmaCheck("unique-overflow", False, f"overflows {sorted(overflows)}"))
    elif overflows:
        checks.append(LemmaCheck("unique-overflow", True, f"o = {next(iter(overflows))!r}"))

    if case is not None:
        actual = {frozenset(e) for e in graph_z.edges}
        wanted = {e for e in expected_edges if len(e) == 2}
        ok = case != -1 and actual <= wanted and all(
            e in actual for e in wanted if e <= set(graph_z.nodes))
        checks.append(LemmaCheck("threecases", ok,
                                 f"case {case}; edges {sorted(tuple(sorted(e)) for e in actual)}"))
    return LemmaReport(checks, certified, case)


def _x_lcp(a: str, b: str, hull: FreeHullResult) -> str:
    fa, fb = x_factorize(a, hull), x_factorize(b, hull)
    common = []
    for x, y in zip(fa, fb):
        if x != y:
            break
        common.append(x)
    return "".join(common)
