"""Print the three extended-formulation verdicts for the slab U and the
segment X side by side, plus the representation sizes.

    python scripts/example1_report.py
"""
from fractions import Fraction

from exactef import (CoordinateSplit, check_ef_iff, check_ef_map, check_ef_standard, fixtures,
                     h_contains, lemma9_size_report, project_coords, synthesize_linear_map)
from exactef.arith import format_vector


def main():
    U = fixtures.load("example1_U")
    X = fixtures.load("example1_X_vrep")
    X_h = fixtures.load("example1_X_hrep_eq10")
    A = fixtures.load("example1_mapA")
    split = CoordinateSplit(4, (1, 2, 3))

    for name, verdict in (("projection", check_ef_standard(U.hrep(), X, split)),
                          ("biconditional", check_ef_iff(U.hrep(), X, split)),
                          ("linear image (A)", check_ef_map(U, X, A))):
        w = "" if verdict.witness is None else f"  witness {format_vector(verdict.witness)}"
        print(f"{name:18s} holds={verdict.holds!s:5s} {verdict.detail.value}{w}")

    point = (Fraction(45, 2), -50, 100)
    proj = project_coords(U.hrep(), split)
    print(f"\n{format_vector(point)} in projection: {h_contains(proj, point)}, in X: {X.contains(point)}")

    M = synthesize_linear_map(U, X)
    print("synthesized map rows:", [format_vector(r) for r in M.matrix.data])

    s = lemma9_size_report(U.hrep(), X_h.hrep())
    print(f"\nirredundant sizes (equality counts twice): ext {s.ext_size}, target {s.target_size}, "
          f"ext >= target: {s.ext_ge_target}")


if __name__ == "__main__":
    main()
