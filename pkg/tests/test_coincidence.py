import pytest
from hypothesis import given, settings, strategies as st

from monoidlab import InputError
from monoidlab.coincidence import (
    BALANCED,
    Morphism,
    SolutionPair,
    build_morphisms,
    check_incmorphism,
    critical_overflows,
    is_marked,
    is_z_marked,
    minimal_solutions,
    overflow_graph,
    verify_section4_lemmas,
)
from monoidlab.freehull import free_hull
from monoidlab.intersection import enumerate_basis, intersect

from oracles import minimal_solutions_brute

INFINIT = Morphism(("ab", "cb", "cd")), Morphism(("abc", "dab", "dc"))
TRIANGLE = Morphism(("ab", "bcdd", "cbdd")), Morphism(("abbc", "abcb", "ddab"))
TWOMARKED = Morphism(("aa", "bc", "dab")), Morphism(("aabc", "ab", "d"))
CRITICAL = Morphism(("abc", "bab", "dcb")), Morphism(("ab", "cb", "cd"))

images = st.lists(st.text(alphabet="ab", min_size=1, max_size=3), min_size=2, max_size=3,
                  unique=True)


def pairs(summary):
    return {(p.r, p.s) for p in summary.solutions}


def test_build_morphisms_canonical_order():
    g, h = build_morphisms(["abbc", "da", "db"], ["abbca", "b", "cdad"])
    assert g.images == ("da", "db", "abbc")
    assert g("ccab") == h("caaba") == "abbcabbcdadb"


def test_build_morphisms_keeps_given_order_on_request():
    g, h = build_morphisms(["abbc", "da", "db"], ["abbca", "b", "cdad"], canonical_order=False)
    assert g("aabc") == h("abbcb") == "abbcabbcdadb"


def test_build_morphisms_identical_sets_and_errors():
    g, h = build_morphisms(["b", "a"], ["a", "b"])
    assert g == h
    with pytest.raises(InputError):
        build_morphisms(["a", ""], ["a"])
    with pytest.raises(InputError):
        Morphism(("a", "b"), letters="a")


def test_triangle_solutions():
    s = minimal_solutions(*TRIANGLE)
    assert pairs(s) == {("aba", "ac"), ("aca", "bc")}
    assert s.finite and s.family is None


def test_twomarked_solutions():
    s = minimal_solutions(*TWOMARKED)
    assert pairs(s) == {("ab", "a"), ("c", "cb")}
    assert s.finite


def test_family_solutions():
    g, h = INFINIT
    s = minimal_solutions(g, h)
    # (g-side, h-side); the g side carries the extra c
    assert [(p.r, p.s) for p in s.solutions] == [("a" + "c" * (i + 1) + "a", "a" + "c" * i + "b")
                                                for i in range(4)]
    assert not s.finite and not s.truncated
    assert minimal_solutions(g, h, count_bound=3).truncated
    f = s.family
    assert (f.u + f.p + f.u1, f.v + f.q + f.v1) == ("acca", "acb")
    assert [f.solution(i) for i in range(3)] == list(s.solutions[:3])
    assert (f.alpha, f.gamma, f.beta) == ("abc", "dc", "dab")


def test_overflow_graph_bounds_and_loops():
    for g, h in (INFINIT, TRIANGLE, TWOMARKED, CRITICAL):
        graph = overflow_graph(g, h)
        longest = max(map(len, g.images + h.images))
        # only the first move out of balance stores a whole g-image
        opening = {e.target for e in graph.edges[BALANCED]}
        assert all(len(q.overflow) < longest for q in graph.states if q not in opening)
        assert all(len(q.overflow) <= longest for q in opening)
        suffixes = {w[i:] for w in g.images + h.images for i in range(len(w))}
        assert len(graph.states) <= 2 * len(suffixes) + 1
    g = Morphism(("ab", "b"))
    # equal morphisms: every letter returns to balance on its own
    assert pairs(minimal_solutions(g, g)) == {("a", "a"), ("b", "b")}


def test_critical_overflows():
    c = critical_overflows(*CRITICAL)
    assert [(x.o, x.anchor) for x in c] == [("c", ("a", "a"))]
    assert pairs(minimal_solutions(*CRITICAL)) == {("ab", "aba"), ("ac", "acb")}
    assert [(x.o, x.anchor) for x in critical_overflows(*TWOMARKED)] == [("", ("", ""))]
    assert [(x.o, x.anchor) for x in critical_overflows(*TRIANGLE)] == [("ab", ("a", ""))]
    assert [(x.o, x.anchor) for x in critical_overflows(*INFINIT)] == [("d", ("ac", "a"))]


def test_marking():
    g, h = INFINIT
    hull = free_hull(g.images + h.images)
    assert is_z_marked(g, hull) and not is_z_marked(h, hull)
    assert is_marked(g) is False  # cb and cd share the letter c
    g, h = TWOMARKED
    hull = free_hull(g.images + h.images)
    assert is_z_marked(g, hull) and is_z_marked(h, hull)


@pytest.mark.parametrize("gh,case,edges", [
    (INFINIT, 3, {("ab", "abc"), ("dab", "dc")}),
    (TRIANGLE, 2, {("ab", "abbc"), ("ab", "abcb"), ("abbc", "abcb")}),
    (TWOMARKED, 1, {("aa", "aabc"), ("d", "dab")}),
])
def test_lemmas_on_worked_examples(gh, case, edges):
    g, h = gh
    rep = verify_section4_lemmas(g, h, minimal_solutions(g, h).solutions)
    assert rep.passed, rep.failures()
    assert rep.case == case
    hull = free_hull(g.images + h.images)
    assert hull.free_rank == 4
    from monoidlab.freehull import free_graph
    assert {tuple(sorted(e)) for e in free_graph(g.images + h.images, hull).edges} == edges


def test_non_bifix_image_breaks_incmorphism():
    h = Morphism(("a", "ab", "c"))
    assert check_incmorphism(h) is not None
    rep = verify_section4_lemmas(Morphism(("b", "c", "d")), h, [SolutionPair("a", "a")])
    assert not rep["incmorphism[h]"].passed


@settings(max_examples=50)
@given(images, images)
def test_solutions_match_brute_force(gi, hi):
    g, h = Morphism(tuple(gi)), Morphism(tuple(hi))
    got = minimal_solutions(g, h, count_bound=None, length_bound=8)
    assert pairs(got) == minimal_solutions_brute(dict(g.items()), dict(h.items()), 8)
    for p in got.solutions:
        assert g(p.r) == h(p.s)


@settings(max_examples=50)
@given(images, images)
def test_images_match_the_automaton_pipeline_for_codes(gi, hi):
    from monoidlab.codes import is_code

    if not (is_code(gi)[0] and is_code(hi)[0]):
        return
    g, h = Morphism(tuple(gi)), Morphism(tuple(hi))
    sols = minimal_solutions(g, h, count_bound=None, length_bound=10)
    imgs = sorted({g(p.r) for p in sols.solutions}, key=lambda w: (len(w), w))
    assert imgs == list(enumerate_basis(intersect(gi, hi), 10).words)
