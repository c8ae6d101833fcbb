"""Sweep objectives through the LP0/LP1/LP2 pipeline on the bundled
reduction instance, then repeat with shrunken Y to show where the
equivalence breaks.

    python scripts/remark1_sweep.py --count 200 --seed 1
"""
import argparse
import random
from collections import Counter
from fractions import Fraction

from exactef import HRep, Polyhedron, ReductionInstance, check_graph_redundancy, fixtures, verify_equivalence


def sweep(inst, count, rng):
    tally = Counter()
    for _ in range(count):
        alpha = tuple(rng.randint(-9, 9) for _ in range(len(inst.alpha)))
        r = verify_equivalence(ReductionInstance(inst.Y, inst.graph, alpha, inst.X))
        tally["equivalent" if r.equivalent else "differs"] += 1
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    inst = fixtures.load("example1_reduction")
    for lo, hi in ((2, 3), (2, Fraction(5, 2)), (3, 3), (0, 1)):
        Y = Polyhedron(h=HRep.from_rows(1, [(-1,), (1,)], [-lo, hi]))
        variant = ReductionInstance(Y, inst.graph, inst.alpha, inst.X)
        redundant = check_graph_redundancy(inst.X, Y, inst.graph)
        tally = sweep(variant, args.count, random.Random(args.seed))
        print(f"Y = [{lo}, {hi}]  redundant={redundant!s:5s}  "
              f"equivalent {tally['equivalent']}/{args.count}")


if __name__ == "__main__":
    main()
