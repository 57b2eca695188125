"""Words, alphabets and the prefix order.

Words are plain ``str`` values, one character per symbol.  The empty string
is the empty word.  Canonical output order is length first, then
lexicographic (see :func:`length_lex`).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable

from monoidlab.errors import InputError

# printable, and safe in the line-based input format
SYMBOLS = frozenset(string.printable) - frozenset(string.whitespace) - {"#"}


def length_lex(word: str) -> tuple[int, str]:
    return (len(word), word)


def canonical(words: Iterable[str]) -> list[str]:
    return sorted(set(words), key=length_lex)


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise InputError("alphabet must be non-empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise InputError(f"duplicate symbols in alphabet {self.symbols!r}")
        for s in self.symbols:
            if len(s) != 1 or s not in SYMBOLS:
                raise InputError(f"invalid symbol {s!r}")

    @classmethod
    def of(cls, words: Iterable[str]) -> "Alphabet":
        return cls(tuple(sorted({c for w in words for c in w})))

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def union(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(tuple(sorted(set(self.symbols) | set(other.symbols))))

    def check(self, word: str) -> str:
        for c in word:
            if c not in self.symbols:
                raise InputError(f"symbol {c!r} of {word!r} not in alphabet")
        return word


class WordSet(frozenset):
    """A finite set of nonempty words; ``alphabet`` is exactly alp(X)."""

    def __new__(cls, words: Iterable[str] = ()):
        words = list(words)
        for w in words:
            if not isinstance(w, str):
                raise InputError(f"words must be strings, got {w!r}")
            if not w:
                raise InputError("the empty word cannot be a generator")
            for c in w:
                if c not in SYMBOLS:
                    raise InputError(f"invalid symbol {c!r} in {w!r}")
        return super().__new__(cls, words)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.of(self)

    def sorted(self) -> list[str]:
        return sorted(self, key=length_lex)

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self), default=0)

    def __repr__(self) -> str:
        return "WordSet({" + ", ".join(self.sorted()) + "})"


def longest_common_prefix(u: str, v: str) -> str:
    n = 0
    for a, b in zip(u, v):
        if a != b:
            break
        n += 1
    return u[:n]


def is_prefix(u: str, v: str) -> bool:
    return v.startswith(u)


def is_suffix(u: str, v: str) -> bool:
    return v.endswith(u)


def prefix_comparable(u: str, v: str) -> bool:
    return u.startswith(v) or v.startswith(u)


def primitive_root(w: str) -> tuple[str, int]:
    """Return ``(r, e)`` with ``w == r * e`` and ``r`` primitive.

    The smallest period dividing ``len(w)`` is the first position > 0 at
    which ``w`` occurs inside ``w + w``.
    """
    if not w:
        raise InputError("the empty word has no primitive root")
    p = (w + w).find(w, 1)
    return w[:p], len(w) // p


def is_primitive(w: str) -> bool:
    return primitive_root(w)[1] == 1


def words_up_to(alphabet: Iterable[str], max_len: int, min_len: int = 0):
    """All words over ``alphabet`` of length in ``[min_len, max_len]``, length-lex."""
    symbols = sorted(alphabet)
    layer = [""]
    for n in range(max_len + 1):
        if n >= min_len:
            yield from layer
        if n < max_len:
            layer = [w + c for w in layer for c in symbols]
