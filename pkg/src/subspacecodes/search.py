"""Exhaustive and greedy code search in small extended spaces.

These routines are independent oracles: they only use the distance table
of the projective space and never the constructions they are meant to
certify.  The exact search is a maximum-clique branch and bound (greedy
colouring bounds, bitset candidate sets) on the compatibility graph whose
edges join tuples at distance ``>= d``.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .galois import field_of_order
from .multishot import MultishotCode, SubspaceTuple
from .subspace import projective_size, projective_space

BNB_SPACE_LIMIT = 10**5
GREEDY_SPACE_LIMIT = 10**6
MODES = ("greedy-lex", "clique-bnb")
ORDERS = ("canonical", "seeded-shuffle")


@dataclass(frozen=True)
class SearchConfig:
    q: int
    m: int
    n: int
    d: int
    mode: str = "greedy-lex"
    node_budget: int = 1_000_000
    order: str = "canonical"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown search mode {self.mode!r}; choose from {MODES}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown order {self.order!r}; choose from {ORDERS}")
        if self.node_budget <= 0:
            raise ValueError("node budget must be positive")
        if self.n < 1 or self.m < 0:
            raise ValueError(f"invalid parameters m={self.m}, n={self.n}")
        if not 1 <= self.d <= max(1, self.m * self.n):
            raise ValueError(f"distance d={self.d} must lie in 1..{self.m * self.n}")
        size = projective_size(self.m, self.q) ** self.n
        limit = BNB_SPACE_LIMIT if self.mode == "clique-bnb" else GREEDY_SPACE_LIMIT
        if size > limit:
            raise ValueError(f"|P(F_{self.q}^{self.m})|^{self.n} = {size} exceeds the {self.mode} limit {limit}")


@dataclass
class Certificate:
    optimal: bool
    nodes_explored: int

    def to_json(self) -> dict:
        return {"optimal": self.optimal, "nodes_explored": self.nodes_explored}


@dataclass
class IndependentSetResult:
    members: list[int]
    optimal: bool
    nodes_explored: int = 0


class _BudgetExhausted(Exception):
    pass


def _colour_sort(cand: int, compat: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``cand``; returns vertices with their colour numbers (non-decreasing)."""
    order: list[int] = []
    colours: list[int] = []
    uncoloured = cand
    colour = 0
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            colours.append(colour)
            uncoloured &= ~low
            avail &= ~low & ~compat[v]
    return order, colours


def max_clique(compat: list[int], node_budget: int = 1_000_000, initial: list[int] | None = None) -> IndependentSetResult:
    """Maximum clique of the graph given by adjacency bitsets ``compat``.

    Vertices are branched on in colour order with lower-index tie breaks, so
    the result is deterministic.  When the node budget runs out the best
    clique found so far is returned with ``optimal=False``.
    """
    n = len(compat)
    best: list[int] = list(initial or [])
    nodes = 0

    def expand(chosen: list[int], cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExhausted
        order, colours = _colour_sort(cand, compat)
        for i in range(len(order) - 1, -1, -1):
            if len(chosen) + colours[i] <= len(best):
                return
            v = order[i]
            chosen.append(v)
            nxt = cand & compat[v]
            if nxt:
                expand(chosen, nxt)
            elif len(chosen) > len(best):
                best = list(chosen)
            chosen.pop()
            cand &= ~(1 << v)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n + 100))
    try:
        expand([], (1 << n) - 1 if n else 0)
        optimal = True
    except _BudgetExhausted:
        optimal = False
    finally:
        sys.setrecursionlimit(limit)
    return IndependentSetResult(sorted(best), optimal, min(nodes, node_budget))


def max_independent_set(
    n_vertices: int,
    conflict: Callable[[int, int], bool],
    node_budget: int = 1_000_000,
    initial: list[int] | None = None,
) -> IndependentSetResult:
    """Largest vertex set with no conflicting pair, via max clique on the complement."""
    compat = [0] * n_vertices
    for a in range(n_vertices):
        for b in range(a + 1, n_vertices):
            if not conflict(a, b):
                compat[a] |= 1 << b
                compat[b] |= 1 << a
    return max_clique(compat, node_budget, initial)


class _TupleSpace:
    """All of P(F_q^m)^n as tuples of element indices, in canonical order."""

    def __init__(self, q: int, m: int, n: int):
        self.space = projective_space(field_of_order(q), m)
        self.n = n
        self.table = self.space.distance_table
        self.tuples = list(product(range(len(self.space)), repeat=n))

    def distance(self, a: tuple[int, ...], b: tuple[int, ...]) -> int:
        t = self.table
        return sum(t[x][y] for x, y in zip(a, b))

    def to_code(self, indices: list[int]) -> MultishotCode:
        els = self.space.elements
        return MultishotCode(SubspaceTuple(tuple(els[i] for i in self.tuples[k])) for k in indices)


def _scan_order(config: SearchConfig, count: int) -> list[int]:
    order = list(range(count))
    if config.order == "seeded-shuffle":
        random.Random(config.seed).shuffle(order)
    return order


def _greedy_indices(ts: _TupleSpace, d: int, order: list[int]) -> list[int]:
    accepted: list[int] = []
    for k in order:
        cand = ts.tuples[k]
        if all(ts.distance(cand, ts.tuples[j]) >= d for j in accepted):
            accepted.append(k)
    return accepted


def greedy_code(config: SearchConfig) -> MultishotCode:
    """Lexicographic (or seeded-shuffle) greedy code with minimum distance ``>= d``."""
    ts = _TupleSpace(config.q, config.m, config.n)
    return ts.to_code(_greedy_indices(ts, config.d, _scan_order(config, len(ts.tuples))))


def max_code_bnb(config: SearchConfig) -> tuple[MultishotCode, Certificate]:
    """Largest code with minimum distance ``>= d``; certified optimal if the search completes."""
    if config.mode != "clique-bnb":
        config = SearchConfig(**{**config.__dict__, "mode": "clique-bnb"})
    ts = _TupleSpace(config.q, config.m, config.n)
    count = len(ts.tuples)
    order = _scan_order(config, count)
    # Relabel vertices so the configured scan order is the branching tie-break.
    verts = [ts.tuples[k] for k in order]
    compat = [0] * count
    for a in range(count):
        va = verts[a]
        for b in range(a + 1, count):
            if ts.distance(va, verts[b]) >= config.d:
                compat[a] |= 1 << b
                compat[b] |= 1 << a
    seed = _greedy_indices(ts, config.d, order)
    position = {k: i for i, k in enumerate(order)}
    result = max_clique(compat, config.node_budget, [position[k] for k in seed])
    code = ts.to_code([order[i] for i in result.members])
    return code, Certificate(result.optimal, result.nodes_explored)
