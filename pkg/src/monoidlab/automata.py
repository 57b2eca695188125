"""Complete deterministic automata over a small explicit alphabet.

States are integers ``0..n-1``; ``delta[q][i]`` is the successor of ``q``
on ``alphabet[i]``.  Every automaton is complete, so a non-accepting sink
appears explicitly whenever some transition is undefined.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Optional

from monoidlab._graphs import single_cycle


@dataclass(frozen=True)
class DFA:
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def step(self, q: int, symbol: str) -> int:
        return self.delta[q][self.alphabet.index(symbol)]

    def run(self, word: str) -> Optional[int]:
        q = self.initial
        index = {s: i for i, s in enumerate(self.alphabet)}
        for c in word:
            if c not in index:
                return None
            q = self.delta[q][index[c]]
        return q

    def accepts(self, word: str) -> bool:
        q = self.run(word)
        return q is not None and q in self.finals

    def __contains__(self, word: object) -> bool:
        return isinstance(word, str) and self.accepts(word)

    # -- structure -----------------------------------------------------

    def reachable(self) -> set[int]:
        seen = {self.initial}
        todo = [self.initial]
        while todo:
            q = todo.pop()
            for r in self.delta[q]:
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        return seen

    def coreachable(self) -> set[int]:
        back: dict[int, set[int]] = {}
        for q, row in enumerate(self.delta):
            for r in row:
                back.setdefault(r, set()).add(q)
        seen = set(self.finals)
        todo = list(seen)
        while todo:
            r = todo.pop()
            for q in back.get(r, ()):
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return seen

    def useful(self) -> set[int]:
        return self.reachable() & self.coreachable()

    def is_empty(self) -> bool:
        return not (self.reachable() & self.finals)

    def is_infinite(self) -> bool:
        """True iff some cycle runs through useful states only."""
        live = self.useful()
        graph = {q: [r for r in self.delta[q] if r in live] for q in live}
        return _has_cycle(graph)

    # -- transformations -----------------------------------------------

    def with_alphabet(self, alphabet: Iterable[str]) -> "DFA":
        alphabet = tuple(sorted(set(alphabet) | set(self.alphabet)))
        if alphabet == self.alphabet:
            return self
        sink = self.num_states
        old = {s: i for i, s in enumerate(self.alphabet)}
        rows = [
            tuple(row[old[s]] if s in old else sink for s in alphabet)
            for row in self.delta
        ]
        rows.append(tuple(sink for _ in alphabet))
        return DFA(alphabet, tuple(rows), self.initial, self.finals).minimize()

    def complement(self) -> "DFA":
        return DFA(self.alphabet, self.delta, self.initial,
                   frozenset(range(self.num_states)) - self.finals)

    def minimize(self) -> "DFA":
        """Moore partition refinement, then canonical breadth-first numbering."""
        states = sorted(self.reachable())
        block = {q: int(q in self.finals) for q in states}
        while True:
            sigs = {q: (block[q],) + tuple(block[r] for r in self.delta[q]) for q in states}
            ids: dict[tuple, int] = {}
            new = {q: ids.setdefault(sigs[q], len(ids)) for q in states}
            if len(ids) == len(set(block.values())):
                break
            block = new
        # canonical numbering: breadth-first from the initial block, symbols in order
        rep: dict[int, int] = {}
        for q in states:
            rep.setdefault(block[q], q)
        order = {block[self.initial]: 0}
        queue = deque([block[self.initial]])
        while queue:
            b = queue.popleft()
            for r in self.delta[rep[b]]:
                if block[r] not in order:
                    order[block[r]] = len(order)
                    queue.append(block[r])
        rows = [None] * len(order)
        for b, i in order.items():
            rows[i] = tuple(order[block[r]] for r in self.delta[rep[b]])
        finals = frozenset(order[block[q]] for q in states if q in self.finals)
        return DFA(self.alphabet, tuple(rows), 0, finals)

    # -- enumeration ---------------------------------------------------

    def words(self, max_len: int, min_len: int = 0) -> Iterator[str]:
        """Accepted words of length in ``[min_len, max_len]`` in length-lex order."""
        # can_finish[r] = states from which some final state is exactly r steps away
        can_finish = [set(self.finals)]
        for _ in range(max_len):
            prev = can_finish[-1]
            can_finish.append({q for q in range(self.num_states)
                               if any(r in prev for r in self.delta[q])})
        order = sorted(range(len(self.alphabet)), key=lambda i: self.alphabet[i])

        def walk(q: int, prefix: list[str], left: int) -> Iterator[str]:
            if left == 0:
                yield "".join(prefix)
                return
            for i in order:
                r = self.delta[q][i]
                if r in can_finish[left - 1]:
                    prefix.append(self.alphabet[i])
                    yield from walk(r, prefix, left - 1)
                    prefix.pop()

        for n in range(min_len, max_len + 1):
            if self.initial in can_finish[n]:
                yield from walk(self.initial, [], n)

    def finite_language(self) -> list[str]:
        if self.is_infinite():
            raise ValueError("language is infinite")
        return list(self.words(max(len(self.delta) - 1, 0)))


def _has_cycle(graph: dict[int, list[int]]) -> bool:
    color = dict.fromkeys(graph, 0)
    for root in graph:
        if color[root]:
            continue
        stack = [(root, iter(graph[root]))]
        color[root] = 1
        while stack:
            q, it = stack[-1]
            for r in it:
                if color[r] == 1:
                    return True
                if color[r] == 0:
                    color[r] = 1
                    stack.append((r, iter(graph[r])))
                    break
            else:
                color[q] = 2
                stack.pop()
    return False


def build(alphabet: Iterable[str], start: Hashable,
          step: Callable[[Hashable, str], Hashable],
          accepting: Callable[[Hashable], bool]) -> DFA:
    """Explore the reachable macro-states of an implicit automaton.

    ``step`` must be total; this drives both subset and product constructions.
    """
    alphabet = tuple(sorted(set(alphabet)))
    index = {start: 0}
    rows: list[tuple[int, ...]] = []
    queue = deque([start])
    finals = set()
    while queue:
        m = queue.popleft()
        if accepting(m):
            finals.add(index[m])
        row = []
        for s in alphabet:
            n = step(m, s)
            if n not in index:
                index[n] = len(index)
                queue.append(n)
            row.append(index[n])
        rows.append(tuple(row))
    return DFA(alphabet, tuple(rows), 0, frozenset(finals))


def product(a: DFA, b: DFA, combine: Callable[[bool, bool], bool]) -> DFA:
    alphabet = tuple(sorted(set(a.alphabet) | set(b.alphabet)))
    a, b = a.with_alphabet(alphabet), b.with_alphabet(alphabet)
    return build(
        alphabet,
        (a.initial, b.initial),
        lambda m, s: (a.step(m[0], s), b.step(m[1], s)),
        lambda m: combine(m[0] in a.finals, m[1] in b.finals),
    ).minimize()


def intersection(a: DFA, b: DFA) -> DFA:
    return product(a, b, lambda x, y: x and y)


def union(a: DFA, b: DFA) -> DFA:
    return product(a, b, lambda x, y: x or y)


def difference(a: DFA, b: DFA) -> DFA:
    return product(a, b, lambda x, y: x and not y)


def concatenate(a: DFA, b: DFA) -> DFA:
    """DFA for L(a)·L(b): track a's state plus the set of live b-runs."""
    alphabet = tuple(sorted(set(a.alphabet) | set(b.alphabet)))
    a, b = a.with_alphabet(alphabet), b.with_alphabet(alphabet)

    def seed(qa: int, runs: frozenset) -> frozenset:
        return runs | {b.initial} if qa in a.finals else runs

    def step(m, s):
        qa = a.step(m[0], s)
        return (qa, seed(qa, frozenset(b.step(q, s) for q in m[1])))

    start = (a.initial, seed(a.initial, frozenset()))
    return build(alphabet, start, step, lambda m: bool(m[1] & b.finals)).minimize()


def equivalent(a: DFA, b: DFA) -> bool:
    return product(a, b, lambda x, y: x != y).is_empty()


def singleton(word: str, alphabet: Iterable[str]) -> DFA:
    alphabet = tuple(sorted(set(alphabet) | set(word)))
    n = len(word)
    return build(
        alphabet, 0,
        lambda i, s: i + 1 if i < n and word[i] == s else n + 1,
        lambda i: i == n,
    ).minimize()


def cycle_shape(dfa: DFA) -> Optional[tuple[str, str, str]]:
    """Split an automaton for {alpha gamma^i beta : i >= 0} into its three parts.

    Succeeds only on the trimmed shape: one simple cycle, entered along a
    unique path and left along a unique accepting path.  ``alpha`` is read up
    to the entry state, ``gamma`` once around the cycle from there, and
    ``beta`` from the entry state to acceptance.
    """
    live = dfa.useful()
    if dfa.initial not in live:
        return None
    edges = {q: [(dfa.alphabet[i], r) for i, r in enumerate(dfa.delta[q]) if r in live]
             for q in live}
    # an accepting state that continues would hide words from the walk
    if any(edges[q] for q in dfa.finals if q in live):
        return None
    shape = single_cycle(edges, dfa.initial, lambda q: q in dfa.finals)
    if shape is None:
        return None
    return tuple("".join(part) for part in shape)
