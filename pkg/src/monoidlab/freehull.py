"""Free hull, free basis, X-factorizations and the free graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from monoidlab.codes import dangling_suffix_search
from monoidlab.errors import InputError
from monoidlab.words import WordSet, canonical, length_lex


@dataclass(frozen=True)
class FreeHullResult:
    generators: tuple[str, ...]
    basis: tuple[str, ...]
    factorizations: dict[str, tuple[str, ...]] = field(compare=False)

    @property
    def free_rank(self) -> int:
        return len(self.basis)

    def factorize(self, w: str) -> Optional[tuple[str, ...]]:
        return x_factorize(w, self)


def hull_reduction(words: Iterable[str]) -> Iterator[tuple[str, ...]]:
    """Yield the successive generating sets of the stability reduction.

    While the current set Y is not a code, take an ambiguity whose first
    blocks satisfy ``y1 v = y1'`` and replace ``y1'`` by ``v``.  Every ``v``
    lies in any free submonoid containing Y, and the total length drops at
    each step.  The last set yielded is the free basis.
    """
    current = canonical(WordSet(words))
    yield tuple(current)
    while True:
        witness = dangling_suffix_search(current)
        if witness is None:
            return
        short, long_ = witness.first[0], witness.second[0]
        rest = long_[len(short):]
        current = canonical((set(current) - {long_}) | {rest})
        yield tuple(current)


def free_hull(words: Iterable[str]) -> FreeHullResult:
    generators = tuple(canonical(WordSet(words)))
    for basis in hull_reduction(generators):
        pass
    result = FreeHullResult(generators, basis, {})
    for x in generators:
        fact = x_factorize(x, result)
        if fact is None:  # pragma: no cover - reduction invariant
            raise AssertionError(f"{x!r} does not factor over {basis}")
        result.factorizations[x] = fact
    return result


def x_factorize(w: str, result: FreeHullResult) -> Optional[tuple[str, ...]]:
    """Factorization of ``w`` over the free basis, or None if ``w`` is outside the hull.

    Longest match first with backtracking; dead positions are memoized.
    """
    return factorize_over(w, result.basis)


def factorize_over(w: str, words: Iterable[str]) -> Optional[tuple[str, ...]]:
    blocks = sorted(set(words), key=lambda b: (-len(b), b))
    dead: set[int] = set()
    out: list[str] = []

    def walk(i: int) -> bool:
        if i == len(w):
            return True
        if i in dead:
            return False
        for b in blocks:
            if w.startswith(b, i):
                out.append(b)
                if walk(i + len(b)):
                    return True
                out.pop()
        dead.add(i)
        return False

    return tuple(out) if walk(0) else None


def in_monoid(w: str, words: Iterable[str]) -> bool:
    """Membership of ``w`` in the submonoid generated by ``words``."""
    words = set(words)
    ok = [True] + [False] * len(w)
    for i in range(1, len(w) + 1):
        ok[i] = any(ok[i - len(b)] and w.startswith(b, i - len(b))
                    for b in words if len(b) <= i)
    return ok[len(w)]


def first_x(w: str, result: FreeHullResult) -> str:
    if not w:
        raise InputError("first_X is undefined on the empty word")
    fact = x_factorize(w, result)
    if fact is None:
        raise InputError(f"{w!r} is not in the free hull")
    return fact[0]


def longest_common_x_prefix(u: str, w: str, result: FreeHullResult) -> str:
    fu, fw = x_factorize(u, result), x_factorize(w, result)
    if fu is None or fw is None:
        raise InputError("both words must lie in the free hull")
    common = []
    for a, b in zip(fu, fw):
        if a != b:
            break
        common.append(a)
    return "".join(common)


def verify_lemma_first(result: FreeHullResult) -> bool:
    """Every basis word is first_X of some generator."""
    firsts = {fact[0] for fact in result.factorizations.values()}
    return firsts == set(result.basis)


@dataclass(frozen=True)
class FreeGraph:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    components: tuple[tuple[str, ...], ...]
    first: dict[str, str] = field(compare=False)

    def has_edge(self, u: str, w: str) -> bool:
        return (u, w) in self.edges or (w, u) in self.edges


def free_graph(words: Iterable[str], result: Optional[FreeHullResult] = None) -> FreeGraph:
    if result is None:
        result = free_hull(words)
    nodes = result.generators
    first = {x: result.factorizations[x][0] for x in nodes}
    edges = tuple(
        (u, w)
        for i, u in enumerate(nodes)
        for w in nodes[i + 1:]
        if first[u] == first[w]
    )
    groups: dict[str, list[str]] = {}
    for x in nodes:
        groups.setdefault(first[x], []).append(x)
    components = tuple(
        sorted((tuple(g) for g in groups.values()), key=lambda g: length_lex(g[0]))
    )
    return FreeGraph(nodes, edges, components, first)
