"""Intersections of finitely generated submonoids and their bases.

A submonoid X* is recognized by a trie of X whose completed words re-enter
the root; the basis of a submonoid M is ``(M - {e}) - (M - {e})^2``, built
with automaton concatenation and difference.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from monoidlab.automata import DFA, build, concatenate, cycle_shape, difference, intersection, singleton
from monoidlab.coincidence import Family, build_morphisms, minimal_solutions
from monoidlab.errors import ContractViolation, InputError, TheoremViolation
from monoidlab.maximality import is_k_maximal, monoid_basis
from monoidlab.words import WordSet, canonical, is_primitive


def star_automaton(words: Iterable[str], alphabet: Iterable[str] = ()) -> DFA:
    """Minimal DFA for X*.

    NFA states are the proper prefixes of generators; finishing a generator
    jumps back to the root, which is the only accepting state.
    """
    xs = WordSet(words)
    alphabet = tuple(sorted(set(alphabet) | set(xs.alphabet.symbols))) or ("a",)
    proper = {x[:i] for x in xs for i in range(len(x))}

    def step(states: frozenset, s: str) -> frozenset:
        nxt = set()
        for p in states:
            w = p + s
            if w in proper:
                nxt.add(w)
            if w in xs:
                nxt.add("")
        return frozenset(nxt)

    return build(alphabet, frozenset({""}), step, lambda m: "" in m).minimize()


def intersect(xs: Iterable[str], us: Iterable[str]) -> DFA:
    xs, us = WordSet(xs), WordSet(us)
    alphabet = set(xs.alphabet.symbols) | set(us.alphabet.symbols)
    return intersection(star_automaton(xs, alphabet), star_automaton(us, alphabet))


def basis_language(m: DFA) -> DFA:
    """Automaton for the basis ``(L - {e}) - (L - {e})^2`` of the submonoid L(m)."""
    if m.initial not in m.finals:
        raise ContractViolation("the language does not contain the empty word")
    plus = difference(m, singleton("", m.alphabet))
    square = concatenate(plus, plus)
    if not difference(square, m).is_empty():
        raise ContractViolation("the language is not closed under concatenation")
    return difference(plus, square)


@dataclass(frozen=True)
class BasisEnumeration:
    words: tuple[str, ...]
    infinite: bool
    max_len: int


def enumerate_basis(m: DFA, max_len: int, basis: Optional[DFA] = None) -> BasisEnumeration:
    if max_len < 1:
        raise InputError("max_len must be at least 1")
    basis = basis_language(m) if basis is None else basis
    return BasisEnumeration(tuple(basis.words(max_len, 1)), basis.is_infinite(), max_len)


def default_max_len(xs: Iterable[str], us: Iterable[str]) -> int:
    return 4 * max(len(w) for w in list(xs) + list(us))


# -- classification -------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    kind: str  # "TrivialEmpty" | "FinitelyGenerated" | "OneParameterFamily" | "Unclassified"
    generators: tuple[str, ...] = ()
    alpha: str = ""
    gamma: str = ""
    beta: str = ""

    def predicted(self, max_len: int) -> list[str]:
        """Basis words of length at most ``max_len`` implied by this classification."""
        if self.kind == "FinitelyGenerated":
            return canonical(w for w in self.generators if len(w) <= max_len)
        if self.kind == "OneParameterFamily":
            out, i = [], 0
            while len(self.alpha) + i * len(self.gamma) + len(self.beta) <= max_len:
                out.append(self.alpha + self.gamma * i + self.beta)
                i += 1
            return canonical(out)
        return []

    @property
    def empty_components(self) -> list[str]:
        if self.kind != "OneParameterFamily":
            return []
        return [n for n in ("alpha", "gamma", "beta") if not getattr(self, n)]


@dataclass(frozen=True)
class IntersectionReport:
    xs: tuple[str, ...]
    us: tuple[str, ...]
    intersection_automaton: DFA
    basis_automaton: DFA
    classification: Classification
    basis_sample: tuple[str, ...]
    infinite: bool
    max_len: int
    certified: bool
    family: Optional[Family] = None
    automaton_shape: Optional[tuple[str, str, str]] = None
    notes: tuple[str, ...] = field(default=())


def normalize_family(alpha: str, gamma: str, beta: str) -> tuple[str, str, str]:
    """Rotate ``alpha gamma^i beta`` to the equivalent split with the shortest alpha."""
    while alpha and gamma and alpha[-1] == gamma[-1]:
        alpha, gamma, beta = alpha[:-1], gamma[-1] + gamma[:-1], gamma[-1] + beta
    return alpha, gamma, beta


def certify_3maximal(xs: Iterable[str]) -> bool:
    try:
        return is_k_maximal(xs, 3).is_maximal
    except InputError:
        return False


def classify_3maximal_intersection(xs: Iterable[str], us: Iterable[str],
                                   unchecked: bool = False,
                                   max_len: Optional[int] = None) -> IntersectionReport:
    """Describe X* ∩ U* as empty, finitely generated, or ``{alpha gamma^i beta}``.

    Unless ``unchecked``, both monoids must be certified 3-maximal and the
    result must fit one of the two admissible shapes; anything else raises
    :class:`TheoremViolation`.  The family split comes from the overflow
    graph and is cross-checked against the shape of the basis automaton.
    """
    xs, us = WordSet(xs), WordSet(us)
    if set(xs) == set(us):
        raise InputError("the two generating sets must differ")
    certified = False
    if not unchecked:
        for name, ws in (("X", xs), ("U", us)):
            if not certify_3maximal(ws):
                raise InputError(f"{name} = {ws.sorted()} does not generate a 3-maximal monoid")
        certified = True
    max_len = max_len or default_max_len(xs, us)
    m = intersect(xs, us)
    basis = basis_language(m)
    sample = enumerate_basis(m, max_len, basis)
    notes: list[str] = []

    if basis.is_empty():
        cls = Classification("TrivialEmpty")
        family = shape = None
    elif not sample.infinite:
        words = tuple(basis.finite_language())
        cls = Classification("FinitelyGenerated", words)
        family = shape = None
        if certified and len(words) > 2:
            raise TheoremViolation(f"{len(words)} basis words for a 3-maximal pair: {words}")
    else:
        bx, bu = monoid_basis(xs), monoid_basis(us)
        g, h = build_morphisms(bx, bu)
        family = minimal_solutions(g, h, count_bound=0).family
        shape = cycle_shape(basis)
        if family is not None and shape is not None:
            if normalize_family(family.alpha, family.gamma, family.beta) != normalize_family(*shape):
                raise ContractViolation(
                    f"overflow-cycle split {family.alpha, family.gamma, family.beta} and "
                    f"automaton split {shape} describe different families")
        if family is not None:
            cls = Classification("OneParameterFamily", alpha=family.alpha,
                                 gamma=family.gamma, beta=family.beta)
        elif shape is not None:
            notes.append("family read from the basis automaton only")
            cls = Classification("OneParameterFamily", alpha=shape[0],
                                 gamma=shape[1], beta=shape[2])
        elif certified:
            raise TheoremViolation("infinite basis without a single alpha gamma* beta family")
        else:
            cls = Classification("Unclassified")
        if cls.empty_components:
            notes.append("empty component(s): " + ", ".join(cls.empty_components))

    if cls.kind in ("FinitelyGenerated", "OneParameterFamily"):
        if cls.predicted(max_len) != list(sample.words):
            raise ContractViolation(
                f"classification predicts {cls.predicted(max_len)} but the basis "
                f"enumerates {list(sample.words)} up to length {max_len}")
    return IntersectionReport(
        tuple(xs.sorted()), tuple(us.sorted()), m, basis, cls, sample.words,
        sample.infinite, max_len, certified, family, shape, tuple(notes))


def two_maximal_generator(xs: Iterable[str], us: Iterable[str]) -> Optional[str]:
    """The single primitive generator of a nontrivial intersection of two 2-maximal monoids."""
    m = intersect(xs, us)
    basis = basis_language(m)
    if basis.is_empty():
        return None
    words = basis.finite_language() if not basis.is_infinite() else None
    if not words or len(words) != 1 or not is_primitive(words[0]):
        raise TheoremViolation(f"2-maximal intersection basis is {words}")
    return words[0]
