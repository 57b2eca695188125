"""Unique decipherability (Sardinas-Patterson) with witness reconstruction."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from monoidlab.words import length_lex


@dataclass(frozen=True)
class Ambiguity:
    """A word with two distinct factorizations over the same set."""

    word: str
    first: tuple[str, ...]
    second: tuple[str, ...]


def dangling_suffix_search(words: Iterable[str]) -> Optional[Ambiguity]:
    """Breadth-first Sardinas-Patterson run; returns a shortest-chain witness.

    A state is a dangling suffix ``d``: the longer partial factorization
    exceeds the shorter one by ``d``.  States are suffixes of generators, so
    the search is finite.  Reaching the empty suffix yields an ambiguity.
    """
    xs = sorted(set(words), key=length_lex)
    parent: dict[str, tuple] = {}
    queue: deque[str] = deque()

    for x in xs:
        for y in xs:
            if x != y and y.startswith(x):
                d = y[len(x):]
                if d not in parent:
                    parent[d] = (None, (y,), (x,))
                    queue.append(d)

    while queue:
        d = queue.popleft()
        for z in xs:
            if d.startswith(z):
                nd, swap = d[len(z):], False
            elif z.startswith(d):
                nd, swap = z[len(d):], True
            else:
                continue
            if nd in parent:
                continue
            parent[nd] = (d, z, swap)
            if nd == "":
                return _rebuild(parent)
            queue.append(nd)
    return None


def _rebuild(parent: dict[str, tuple]) -> Ambiguity:
    # walk back from the empty suffix; ``swap`` means the shorter side overtook
    chain = []
    d = ""
    while True:
        entry = parent[d]
        if entry[0] is None:
            ahead, behind = list(entry[1]), list(entry[2])
            break
        chain.append(entry)
        d = entry[0]
    for _, z, swap in reversed(chain):
        behind.append(z)
        if swap:
            ahead, behind = behind, ahead
    first, second = tuple(ahead), tuple(behind)
    if length_lex(first[0]) > length_lex(second[0]):
        first, second = second, first
    word = "".join(first)
    assert word == "".join(second) and first != second
    return Ambiguity(word, first, second)


def is_code(words: Iterable[str]) -> tuple[bool, Optional[Ambiguity]]:
    """``(True, None)`` for a code, else ``(False, witness)``."""
    witness = dangling_suffix_search(words)
    return witness is None, witness
