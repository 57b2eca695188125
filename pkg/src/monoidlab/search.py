"""Exhaustive search for 3-maximal sets and a lemma sweep over their pairs.

The search keeps a three-word set only if it is a code using at least three
letters.  Both filters are sound: a non-code has a free hull of smaller rank
that strictly contains it, and three words over two letters sit inside the
rank-two monoid of their letters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from monoidlab.codes import is_code
from monoidlab.coincidence import build_morphisms, minimal_solutions, verify_section4_lemmas
from monoidlab.freehull import free_hull
from monoidlab.intersection import classify_3maximal_intersection
from monoidlab.maximality import is_bifix, is_k_maximal, monoid_basis
from monoidlab.words import is_primitive, words_up_to

SHAPES = ("TrivialEmpty", "FinitelyGenerated", "OneParameterFamily")


def three_maximal_sets(alphabet: str, max_len: int,
                       max_letters: Optional[int] = None) -> list[tuple[str, ...]]:
    """All 3-maximal three-word sets over ``alphabet`` with words of length <= max_len.

    ``max_letters`` additionally bounds the number of letters a set may use.
    """
    words = [w for w in words_up_to(alphabet, max_len, 1) if is_primitive(w)]
    out = []
    for xs in combinations(words, 3):
        used = len(set("".join(xs)))
        if used < 3 or (max_letters is not None and used > max_letters):
            continue
        if is_code(xs)[0] and is_k_maximal(xs, 3).is_maximal:
            out.append(xs)
    return out


@dataclass
class SweepReport:
    pairs: int = 0
    violations: list[str] = field(default_factory=list)
    kinds: Counter = field(default_factory=Counter)
    cases: Counter = field(default_factory=Counter)


def check_pair(xs: tuple[str, ...], us: tuple[str, ...]) -> tuple[list[str], str, Optional[int]]:
    """Violations found on one certified pair, the classification kind and the lemma case."""
    bad = []
    rank = free_hull(xs + us).free_rank
    if rank <= 3:
        bad.append(f"free rank of X u U is {rank}")
    for name, ws in (("X", xs), ("U", us)):
        if not is_bifix(monoid_basis(ws)):
            bad.append(f"basis of {name} is not bifix")
    g, h = build_morphisms(xs, us)
    sols = minimal_solutions(g, h).solutions
    report = verify_section4_lemmas(g, h, sols, certified=True)
    bad += [f"{c.name}: {c.detail}" for c in report.failures()]
    cls = classify_3maximal_intersection(xs, us, unchecked=True).classification
    if cls.kind not in SHAPES or (cls.kind == "FinitelyGenerated" and len(cls.generators) > 2):
        bad.append(f"classification {cls}")
    return bad, cls.kind, report.case


def lemma_sweep(sets: Iterable[tuple[str, ...]]) -> SweepReport:
    """Run :func:`check_pair` on every unordered pair of distinct sets."""
    rep = SweepReport()
    for xs, us in combinations(list(sets), 2):
        rep.pairs += 1
        bad, kind, case = check_pair(xs, us)
        rep.kinds[kind] += 1
        rep.cases[case] += 1
        rep.violations += [f"{xs} / {us}: {b}" for b in bad]
    return rep
