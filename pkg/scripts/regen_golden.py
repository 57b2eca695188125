"""Regenerate the CLI golden outputs in tests/fixtures/golden.

Run after an intentional change to the output format, then review the diff.
"""

import contextlib
import io
from pathlib import Path

from monoidlab.cli import main

FIX = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

# (golden file stem, argv)
CASES = [
    ("free_basis_ex_first", ["free-basis", "ex_first.txt"]),
    ("free_graph_ex_first", ["free-graph", "ex_first.txt"]),
    ("maximal_ch3", ["is-k-maximal", "--k", "3", "ch3_maximal.txt"]),
    ("not_maximal_ch3", ["is-k-maximal", "--k", "3", "ch3_not_maximal.txt"]),
    ("intersect_int2max", ["intersect", "int2max.txt"]),
    ("intersect_rank2_b", ["intersect", "--max-len", "20", "int_rank2_b.txt"]),
    ("classify_triangle", ["intersect", "--classify", "triangle.txt"]),
    ("classify_infinit", ["intersect", "--classify", "--unchecked", "infinit.txt"]),
    ("coincidence_twomarked", ["coincidence", "twomarked.txt"]),
    ("coincidence_critical", ["coincidence", "critical.txt"]),
]


def run(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main([argv[0]] + [str(FIX / a) if a.endswith((".txt", ".json")) else a
                                 for a in argv[1:]])
    return code, out.getvalue()


def main_():
    for stem, argv in CASES:
        for fmt in ("text", "json"):
            code, text = run(argv + ["--format", fmt])
            assert code == 0, (stem, code)
            path = FIX / "golden" / f"{stem}.{'json' if fmt == 'json' else 'txt'}"
            path.write_text(text)
            print("wrote", path.relative_to(FIX.parent.parent))


if __name__ == "__main__":
    main_()
