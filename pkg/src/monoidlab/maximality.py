"""k-maximality of finitely generated submonoids.

The search is exact but exponential in the worst case; it is meant for
generating sets of a handful of short words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from monoidlab.errors import InputError
from monoidlab.freehull import in_monoid
from monoidlab.words import SYMBOLS, WordSet, canonical, is_primitive, length_lex, words_up_to


@dataclass(frozen=True)
class MaximalityVerdict:
    is_maximal: bool
    k: int
    witness: Optional[tuple[str, ...]] = None
    # a word of the witness monoid outside X*
    escape: Optional[str] = None


def monoid_basis(words: Iterable[str]) -> tuple[str, ...]:
    """Minimal generating set of X*: drop every generator that is a product of others."""
    xs = canonical(WordSet(words))
    return tuple(x for x in xs if not in_monoid(x, [y for y in xs if y != x]))


def is_bifix(words: Iterable[str]) -> bool:
    xs = list(set(words))
    for u in xs:
        for w in xs:
            if u != w and (w.startswith(u) or w.endswith(u)):
                return False
    return True


def is_primitive_1maximal(v: str) -> bool:
    return is_primitive(v)


def witness_key(ys: Iterable[str]) -> tuple:
    ys = sorted(ys, key=length_lex)
    return (len(ys), tuple(length_lex(y) for y in ys))


def covering_sets(basis: tuple[str, ...], k: int) -> set[frozenset[str]]:
    """All sets Y of at most k words with ``basis`` contained in Y*, every word of Y used.

    Backtracking over the generators left to right: at each position either
    reuse a word of Y or add a new factor of the current generator.
    """
    found: set[frozenset[str]] = set()
    order = sorted(basis, key=lambda w: (-len(w), w))

    def extend(ys: frozenset[str], idx: int, pos: int) -> None:
        if idx == len(order):
            found.add(ys)
            return
        x = order[idx]
        if pos == len(x):
            extend(ys, idx + 1, 0)
            return
        for y in ys:
            if x.startswith(y, pos):
                extend(ys, idx, pos + len(y))
        if len(ys) < k:
            for end in range(pos + 1, len(x) + 1):
                y = x[pos:end]
                if y not in ys:
                    extend(ys | {y}, idx, end)

    extend(frozenset(), 0, 0)
    return found


def is_k_maximal(words: Iterable[str], k: int) -> MaximalityVerdict:
    if k < 1:
        raise InputError("k must be a positive integer")
    basis = monoid_basis(words)
    if len(basis) > k:
        raise InputError(f"rank {len(basis)} exceeds k={k}; k-maximality is undefined")
    if len(basis) < k:
        extra = _word_outside(basis)
        return MaximalityVerdict(False, k, tuple(canonical(basis + (extra,))), extra)

    best = None
    for ys in covering_sets(basis, k):
        outside = [y for y in sorted(ys, key=length_lex) if not in_monoid(y, basis)]
        if outside and (best is None or witness_key(ys) < witness_key(best[0])):
            best = (ys, outside[0])
    if best is None:
        return MaximalityVerdict(True, k)
    return MaximalityVerdict(False, k, tuple(canonical(best[0])), best[1])


def _word_outside(basis: tuple[str, ...]) -> str:
    # a monoid of rank < k grows by one generator without exceeding rank k
    alphabet = sorted({c for w in basis for c in w})
    limit = max((len(w) for w in basis), default=0) + 1
    for w in words_up_to(alphabet, limit, min_len=1):
        if not in_monoid(w, basis):
            return w
    return min(SYMBOLS - set(alphabet))


def validate_witness(words: Iterable[str], verdict: MaximalityVerdict) -> bool:
    """Re-check a negative verdict: X inside Y*, and Y* strictly larger than X*."""
    if verdict.is_maximal or verdict.witness is None:
        return False
    xs = list(WordSet(words))
    ys = verdict.witness
    if len(ys) > verdict.k:
        return False
    if not all(in_monoid(x, ys) for x in xs):
        return False
    return any(not in_monoid(y, xs) for y in ys)
