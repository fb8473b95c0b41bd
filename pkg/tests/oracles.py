"""Brute-force oracles that treat subspaces as explicit sets of vectors.

Nothing here touches row reduction; prime fields only.
"""

from __future__ import annotations

import math
from itertools import product


def vectors(q: int, m: int) -> list[tuple[int, ...]]:
    return list(product(range(q), repeat=m))


def span(q: int, m: int, gens) -> frozenset:
    """Closure of ``gens`` under addition and scalar multiplication mod prime ``q``."""
    out = {(0,) * m}
    frontier = list(out)
    gens = list(gens)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                for c in range(1, q):
                    w = tuple((a + c * b) % q for a, b in zip(v, g))
                    if w not in out:
                        out.add(w)
                        nxt.append(w)
        frontier = nxt
    return frozenset(out)


def all_subspaces(q: int, m: int) -> set[frozenset]:
    """Every subspace of F_q^m, by closing spans one generator at a time."""
    found = {span(q, m, [])}
    layer = set(found)
    vecs = vectors(q, m)
    while layer:
        nxt = set()
        for S in layer:
            for v in vecs:
                if v not in S:
                    T = span(q, m, list(S) + [v])
                    if T not in found:
                        found.add(T)
                        nxt.add(T)
        layer = nxt
    return found


def set_dim(q: int, S: frozenset) -> int:
    return round(math.log(len(S), q))


def set_distance(q: int, m: int, A: frozenset, B: frozenset) -> int:
    s = span(q, m, A | B)
    return set_dim(q, s) - set_dim(q, A & B)


def hamming(a, b) -> int:
    return sum(x != y for x, y in zip(a, b))
