import pytest
from hypothesis import given, strategies as st

from monoidlab import Alphabet, InputError, WordSet, is_prefix, is_primitive, is_suffix, primitive_root
from monoidlab.words import canonical, length_lex, longest_common_prefix, words_up_to

from oracles import all_words

word = st.text(alphabet="abc", min_size=1, max_size=10)


def test_canonical_order_is_length_then_lex():
    assert canonical(["b", "ab", "a", "ba", "a"]) == ["a", "b", "ab", "ba"]
    assert length_lex("b") < length_lex("aa")


def test_wordset_rejects_empty_and_bad_symbols():
    with pytest.raises(InputError):
        WordSet(["a", ""])
    with pytest.raises(InputError):
        WordSet(["a b"])
    with pytest.raises(InputError):
        WordSet(["a#"])


def test_wordset_properties():
    ws = WordSet(["cab", "a", "bb"])
    assert ws.sorted() == ["a", "bb", "cab"]
    assert ws.max_length == 3
    assert ws.alphabet == Alphabet.of("abc")


def test_alphabet_union_and_check():
    a = Alphabet.of(["ab"]).union(Alphabet.of(["c"]))
    assert a.symbols == ("a", "b", "c")
    assert a.check("cab") == "cab"
    with pytest.raises(InputError):
        a.check("d")


def test_prefix_suffix_basics():
    assert is_prefix("ab", "abc") and not is_prefix("b", "abc")
    assert is_suffix("bc", "abc") and is_suffix("", "abc")
    assert longest_common_prefix("abca", "abcb") == "abc"


@pytest.mark.parametrize("w,root,power", [
    ("a", "a", 1), ("abab", "ab", 2), ("aaa", "a", 3), ("aba", "aba", 1), ("abcabcabc", "abc", 3),
])
def test_primitive_root_fixtures(w, root, power):
    assert primitive_root(w) == (root, power)


def test_primitive_root_of_empty_word_is_an_error():
    with pytest.raises(InputError):
        primitive_root("")


@given(word)
def test_primitive_root_matches_brute_force(w):
    # brute force: the shortest p with w == p^(|w|/|p|)
    n = len(w)
    p = next(w[:d] for d in range(1, n + 1) if n % d == 0 and w[:d] * (n // d) == w)
    assert primitive_root(w) == (p, n // len(p))
    assert is_primitive(w) == (p == w)


@given(word, st.integers(min_value=2, max_value=4))
def test_powers_are_not_primitive(w, k):
    assert not is_primitive(w * k)


def test_words_up_to_matches_product():
    assert list(words_up_to("ba", 3, 1)) == all_words("ab", 3, 1)
    assert list(words_up_to("ab", 0)) == [""]
