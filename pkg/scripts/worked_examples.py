"""Run every worked example through the library and print the results."""

from monoidlab.coincidence import Morphism, critical_overflows, minimal_solutions, verify_section4_lemmas
from monoidlab.freehull import free_graph, free_hull
from monoidlab.intersection import classify_3maximal_intersection, enumerate_basis, intersect
from monoidlab.maximality import is_bifix, is_k_maximal


def show_basis(xs, us, max_len=20):
    b = enumerate_basis(intersect(xs, us), max_len)
    tail = " ..." if b.infinite else ""
    print(f"  {set(xs)} ∩ {set(us)}: {list(b.words)}{tail}")


def main():
    print("free hull")
    xs = ["abcac", "bab", "ab", "cacabcacb", "ca"]
    res = free_hull(xs)
    print(f"  FB{tuple(xs)} = {res.basis}, rank {res.free_rank}")
    print(f"  free graph edges: {free_graph(xs, res).edges}")

    print("maximality")
    for ws, k in ((["a", "cbd", "dbd"], 3), (["a", "cbd", "dcbd"], 3), (["a", "cbd", "dcbd"], 4),
                  (["a", "b", "cd", "ce"], 4), (["ac", "bc", "da", "ea"], 4)):
        v = is_k_maximal(ws, k)
        print(f"  {ws} k={k}: maximal={v.is_maximal} witness={v.witness} bifix={is_bifix(ws)}")

    print("intersections")
    show_basis(["abcab", "cb"], ["abc", "bcb"])
    show_basis(["abca", "bc"], ["a", "bcabc"])
    show_basis(["aab", "aba"], ["a", "baaba"])
    show_basis(["a", "b", "cd", "ce"], ["ac", "bc", "da", "ea"])
    show_basis(["a", "b", "cd", "ce", "cf"], ["ac", "bc", "da", "ea", "fa"])

    print("three-maximal pairs")
    for name, xs, us in (("triangle", ["ab", "bcdd", "cbdd"], ["abbc", "abcb", "ddab"]),
                         ("family", ["ab", "cb", "cd"], ["abc", "dab", "dc"]),
                         ("two marked", ["aa", "bc", "dab"], ["aabc", "ab", "d"]),
                         ("critical", ["abc", "bab", "dcb"], ["ab", "cb", "cd"])):
        certified = all(is_k_maximal(w, 3).is_maximal for w in (xs, us))
        cls = classify_3maximal_intersection(xs, us, unchecked=True).classification
        g, h = Morphism(tuple(xs)), Morphism(tuple(us))
        sols = minimal_solutions(g, h, count_bound=4)
        crit = [(c.o, c.anchor) for c in critical_overflows(g, h)]
        lemmas = verify_section4_lemmas(g, h, sols.solutions, certified)
        print(f"  {name}: certified={certified} kind={cls.kind} "
              f"{cls.generators or (cls.alpha, cls.gamma, cls.beta)}")
        print(f"    solutions {[(p.r, p.s) for p in sols.solutions]}"
              f"{' ...' if not sols.finite else ''}")
        print(f"    critical overflows {crit}; lemma case {lemmas.case}; all lemmas hold: {lemmas.passed}")


if __name__ == "__main__":
    main()
