"""Double description method for polyhedral cones.

``cone_generators(G, E, n)`` returns extreme rays and a lineality basis of
``{z in Q^n : G z >= 0, E z = 0}``. The pointed part is computed in the
orthogonal complement of the lineality space, so each extreme ray is
unique up to positive scaling.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import dot, nullspace, primitive, rank, solve_square, RMatrix


def _pointed_rays(G: list[tuple], k: int) -> list[tuple]:
    """Extreme rays of ``{v in Q^k : G v >= 0}`` where ``G`` has rank ``k``."""
    if k == 0:
        return []
    # seed with k independent rows: a simplicial cone
    basis_idx = []
    for i, row in enumerate(G):
        if rank([G[j] for j in basis_idx] + [row]) > len(basis_idx):
            basis_idx.append(i)
            if len(basis_idx) == k:
                break
    if len(basis_idx) < k:
        raise ValueError("constraint matrix is not of full column rank")
    S = RMatrix(tuple(G[i] for i in basis_idx), k)
    rays = []
    for j in range(k):
        e = [Fraction(0)] * k
        e[j] = Fraction(1)
        rays.append(primitive(solve_square(S, e)))
    added = list(basis_idx)
    # tight[r] = set of processed row indices with G[i].r == 0
    tight = {r: frozenset(i for i in added if dot(G[i], r) == 0) for r in rays}

    for i, row in enumerate(G):
        if i in basis_idx:
            continue
        vals = {r: dot(row, r) for r in rays}
        pos = [r for r in rays if vals[r] > 0]
        neg = [r for r in rays if vals[r] < 0]
        zero = [r for r in rays if vals[r] == 0]
        if not neg:
            added.append(i)
            for r in zero:
                tight[r] = tight[r] | {i}
            continue
        new = []
        for p in pos:
            for q in neg:
                common = tight[p] & tight[q]
                if len(common) < k - 2:
                    continue
                if k > 1 and rank([G[j] for j in common]) != k - 2:
                    continue
                # combinatorial check: no third ray shares the common tight set
                if any(r != p and r != q and common <= tight[r] for r in rays):
                    continue
                cand = primitive(tuple(vals[p] * b - vals[q] * a for a, b in zip(p, q)))
                new.append((cand, common | {i}))
        added.append(i)
        rays = pos + zero
        next_tight = {r: tight[r] for r in pos}
        for r in zero:
            next_tight[r] = tight[r] | {i}
        for cand, t in new:
            if cand not in next_tight:
                rays.append(cand)
                next_tight[cand] = t
        tight = next_tight
    return rays


def cone_generators(G, E, n: int) -> tuple[list[tuple], list[tuple]]:
    G = [tuple(map(Fraction, g)) for g in G]
    E = [tuple(map(Fraction, e)) for e in E]
    lineality = nullspace(G + E, n)
    # restrict to the complement of the lineality space inside {E z = 0}
    N = nullspace(E + lineality, n)
    k = len(N)
    if k == 0:
        return [], lineality
    Gu = [tuple(dot(g, col) for col in N) for g in G]
    Gu = [g for g in Gu if any(a != 0 for a in g)]
    rays_u = _pointed_rays(Gu, k)
    rays = [primitive(tuple(sum((v[j] * N[j][t] for j in range(k)), Fraction(0)) for t in range(n)))
            for v in rays_u]
    return rays, lineality
