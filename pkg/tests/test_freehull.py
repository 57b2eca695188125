import pytest
from hypothesis import given, settings, strategies as st

from monoidlab import InputError
from monoidlab.codes import is_code
from monoidlab.freehull import (
    factorize_over,
    first_x,
    free_graph,
    free_hull,
    hull_reduction,
    in_monoid,
    longest_common_x_prefix,
    verify_lemma_first,
    x_factorize,
)

from oracles import covers, member

EX_FIRST = ["abcac", "bab", "ab", "cacabcacb", "ca"]
word_sets = st.lists(st.text(alphabet="abc", min_size=1, max_size=4), min_size=1, max_size=3,
                     unique=True)


def test_first_example_free_basis_is_the_letters():
    # the stability reduction forces cac, then c, a and b into the hull
    res = free_hull(EX_FIRST)
    assert res.basis == ("a", "b", "c")
    assert res.free_rank == 3
    assert res.factorizations["cacabcacb"] == tuple("cacabcacb")


def test_first_example_free_graph():
    g = free_graph(EX_FIRST)
    assert set(map(frozenset, g.edges)) == {frozenset(("ab", "abcac")),
                                           frozenset(("ca", "cacabcacb"))}
    assert len(g.components) == 3
    assert g.has_edge("abcac", "ab")


def test_reduction_decreases_total_length():
    steps = list(hull_reduction(EX_FIRST))
    totals = [sum(map(len, s)) for s in steps]
    assert all(a > b for a, b in zip(totals, totals[1:]))
    assert is_code(steps[-1])[0]


def test_codes_are_their_own_hull():
    res = free_hull(["ab", "ba", "abb"])
    assert res.basis == ("ab", "ba", "abb")
    assert verify_lemma_first(res)


def test_first_x_and_common_prefix():
    res = free_hull(["ab", "ba", "abb"])
    assert first_x("abbab", res) == "abb"
    assert longest_common_x_prefix("abab", "abba", res) == "ab"
    with pytest.raises(InputError):
        first_x("", res)
    with pytest.raises(InputError):
        first_x("bb", res)


def test_factorize_over_backtracks():
    assert factorize_over("aab", ["aa", "a", "ab"]) in {("a", "ab"), ("aa", "b")} or \
        factorize_over("aab", ["aa", "a", "ab"]) == ("a", "ab")
    assert factorize_over("aab", ["aa", "ab"]) is None
    assert x_factorize("ab", free_hull(["ab", "ba"])) == ("ab",)


@given(word_sets, st.text(alphabet="abc", max_size=8))
def test_membership_agrees_with_enumeration(xs, w):
    assert in_monoid(w, xs) == member(w, xs)
    f = factorize_over(w, xs)
    assert (f is not None) == member(w, xs)
    if f is not None:
        assert "".join(f) == w


@settings(max_examples=40)
@given(word_sets)
def test_free_hull_is_the_least_free_monoid_over_factors(xs):
    res = free_hull(xs)
    assert is_code(res.basis)[0]
    assert all(member(x, res.basis) for x in xs)
    assert res.free_rank <= len(set(xs))
    if not is_code(xs)[0]:
        assert res.free_rank < len(set(xs))  # defect theorem
    # every free monoid generated by factors of X and containing X contains the hull
    for ys in covers(xs, len(set(xs))):
        if is_code(ys)[0]:
            assert all(member(b, ys) for b in res.basis)


@given(word_sets)
def test_free_graph_components_equal_free_rank(xs):
    res = free_hull(xs)
    g = free_graph(xs, res)
    assert len(g.components) == res.free_rank
    assert verify_lemma_first(res)
    for u, w in g.edges:
        assert first_x(u, res) == first_x(w, res)
