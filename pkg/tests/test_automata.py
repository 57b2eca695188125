from hypothesis import given, strategies as st

from monoidlab.automata import (
    build,
    concatenate,
    cycle_shape,
    difference,
    equivalent,
    intersection,
    singleton,
    union,
)
from monoidlab.intersection import star_automaton

from oracles import all_words, member

word_sets = st.lists(st.text(alphabet="ab", min_size=1, max_size=3), min_size=1, max_size=3,
                     unique=True)
ALL = all_words("ab", 7)


def family_dfa(alpha, gamma, beta, alphabet="abcd"):
    """Subset construction over positions in alpha, one lap of gamma, and beta."""
    def close(pos):
        out = set(pos)
        for part, i in pos:
            if (part, i) in (("a", len(alpha)), ("g", len(gamma))):
                out |= {("g", 0), ("b", 0)}
        return frozenset(out)

    text = {"a": alpha, "g": gamma, "b": beta}

    def step(ps, s):
        return close({(part, i + 1) for part, i in ps if i < len(text[part]) and text[part][i] == s})

    return build(alphabet, close({("a", 0)}), step, lambda ps: ("b", len(beta)) in ps).minimize()


@given(word_sets)
def test_star_automaton_membership(xs):
    d = star_automaton(xs, "ab")
    assert all(d.accepts(w) == member(w, xs) for w in ALL)


@given(word_sets)
def test_minimization_is_canonical_and_idempotent(xs):
    d = star_automaton(xs, "ab")
    assert d.minimize() == d
    assert d.minimize().minimize() == d.minimize()


@given(word_sets, word_sets)
def test_boolean_operations(xs, us):
    a, b = star_automaton(xs, "ab"), star_automaton(us, "ab")
    i, u, d = intersection(a, b), union(a, b), difference(a, b)
    for w in ALL:
        x, y = member(w, xs), member(w, us)
        assert i.accepts(w) == (x and y)
        assert u.accepts(w) == (x or y)
        assert d.accepts(w) == (x and not y)
    assert equivalent(intersection(a, b), intersection(b, a))


@given(word_sets, word_sets)
def test_concatenation(xs, us):
    c = concatenate(star_automaton(xs, "ab"), difference(star_automaton(us, "ab"),
                                                          singleton("", "ab")))
    for w in all_words("ab", 6):
        want = any(member(w[:i], xs) and member(w[i:], us) for i in range(len(w)))
        assert c.accepts(w) == want


@given(word_sets)
def test_words_are_enumerated_in_length_lex_order(xs):
    d = star_automaton(xs, "ab")
    got = list(d.words(6))
    assert got == [w for w in all_words("ab", 6) if member(w, xs)]


def test_alphabet_extension_adds_a_sink():
    d = star_automaton(["ab"], "ab").with_alphabet("abc")
    assert d.alphabet == ("a", "b", "c")
    assert d.accepts("abab") and not d.accepts("abc")


def test_singleton_and_infinite():
    s = singleton("abc", "abc")
    assert list(s.words(5)) == ["abc"]
    assert not s.is_infinite()
    assert star_automaton(["ab"]).is_infinite()
    assert singleton("a", "ab").finite_language() == ["a"]


def test_cycle_shape_reads_off_a_family():
    d = family_dfa("abc", "dc", "dab")
    assert list(d.words(12)) == ["abcdab", "abcdcdab", "abcdcdcdab", "abcdcdcdcdab"]
    a, g, b = cycle_shape(d)
    assert [a + g * i + b for i in range(4)] == list(d.words(12))


def test_cycle_shape_rejects_other_shapes():
    assert cycle_shape(star_automaton(["a", "b"])) is None
    assert cycle_shape(singleton("ab", "ab")) is None  # no cycle at all
