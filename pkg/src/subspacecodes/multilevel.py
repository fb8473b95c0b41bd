"""Multilevel construction of multishot codes from a partition tree.

A partition tree splits (a subset of) the projective space level by level.
Level ``l`` is *nested* when every level ``l-1`` subset has the same number
``p_l`` of children; children are labelled ``0..p_l-1`` in the order they are
stored.  Classical component codes over ``Z_{p_l}`` pick, column by column,
a label path and hence a subset of the level ``L'`` partition for each
coordinate of the multishot codeword.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Sequence

from .galois import field_of_order
from .multishot import MultishotCode, SubspaceTuple
from .subspace import ProjectiveSpace, Subspace, rref

INF = math.inf
FAMILIES = ("parity", "odd-parity", "full", "repetition")
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass
class PartitionNode:
    members: tuple[Subspace, ...]
    children: list[PartitionNode] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)


class PartitionTree:
    """Rooted tree of subspace subsets; every leaf sits at depth ``L``."""

    def __init__(self, space: ProjectiveSpace, root: PartitionNode):
        self.space = space
        self.root = _normalise(space, root)
        depths = set(_leaf_depths(self.root, 0))
        if len(depths) != 1:
            raise ValueError(f"all leaves must share one depth, found depths {sorted(depths)}")
        self.depth = depths.pop()
        for V in self.root.members:
            space.position(V)

    @property
    def L(self) -> int:
        return self.depth

    def level(self, l: int) -> list[PartitionNode]:
        if not 0 <= l <= self.depth:
            raise ValueError(f"level {l} outside 0..{self.depth}")
        nodes = [self.root]
        for _ in range(l):
            nodes = [c for node in nodes for c in node.children]
        return nodes

    def branching(self, l: int) -> int | None:
        """``p_l`` when level ``l >= 1`` is nested, else ``None``."""
        counts = {len(node.children) for node in self.level(l - 1)}
        return counts.pop() if len(counts) == 1 else None

    def is_nested(self, l: int) -> bool:
        return self.branching(l) is not None

    def subset(self, path: Sequence[int]) -> PartitionNode:
        node = self.root
        for a in path:
            if not 0 <= a < len(node.children):
                raise KeyError(f"label path {tuple(path)} is not present in the tree")
            node = node.children[a]
        return node

    def is_complete(self) -> bool:
        return all(len(node) == 1 for node in self.level(self.depth))

    def intrasubset_distance(self, l: int) -> float:
        return intrasubset_distance(self, l)

    def to_json(self) -> dict:
        def node_json(node: PartitionNode, label: int | None) -> dict:
            return {
                "label": label,
                "subspaces": [V.to_json() for V in node.members],
                "children": [node_json(c, i) for i, c in enumerate(node.children)],
            }

        return {"q": self.space.q, "m": self.space.m, "levels": self.depth, "root": node_json(self.root, None)}

    @classmethod
    def from_json(cls, data: dict, space: ProjectiveSpace | None = None) -> PartitionTree:
        if space is None:
            space = ProjectiveSpace(field_of_order(int(data["q"])), int(data["m"]))
        f, m = space.field, space.m

        def parse(raw: dict) -> PartitionNode:
            children = sorted(raw.get("children", []), key=lambda c: c.get("label", 0))
            members = tuple(rref(f, m, rows) for rows in raw["subspaces"])
            return PartitionNode(members, [parse(c) for c in children])

        return cls(space, parse(data["root"]))


def _leaf_depths(node: PartitionNode, depth: int):
    if not node.children:
        yield depth
    for c in node.children:
        yield from _leaf_depths(c, depth + 1)


def _normalise(space: ProjectiveSpace, node: PartitionNode) -> PartitionNode:
    """Copy with canonical member order; checks that children partition their parent."""
    children = [_normalise(space, c) for c in node.children]
    members = tuple(sorted(set(node.members)))
    if len(members) != len(node.members):
        raise ValueError("partition subsets may not repeat subspaces")
    if not members:
        raise ValueError("partition subsets must be non-empty")
    if children:
        union = [V for c in children for V in c.members]
        if len(set(union)) != len(union) or set(union) != set(members):
            raise ValueError("children must partition their parent subset")
    return PartitionNode(members, children)


def _rebuild(node: PartitionNode) -> PartitionNode:
    if not node.children:
        return PartitionNode(node.members, [])
    children = [_rebuild(c) for c in node.children]
    return PartitionNode(tuple(sorted(V for c in children for V in c.members)), children)


def intrasubset_distance(tree: PartitionTree, l: int) -> float:
    """Smallest distance between distinct members of one level-``l`` subset (``inf`` if none)."""
    table = tree.space.distance_table
    pos = tree.space.position
    best = INF
    for node in tree.level(l):
        idx = [pos(V) for V in node.members]
        for a, b in combinations(idx, 2):
            if table[a][b] < best:
                best = table[a][b]
    return best


def make_nested(tree: PartitionTree, up_to_level: int) -> PartitionTree:
    """Trim the tree so that levels ``1..up_to_level`` are nested.

    At each offending level ``p_l`` becomes the smallest child count among the
    parents.  Over-branched parents keep their ``p_l`` largest children (ties
    go to the earlier child) and every subspace in the other children is
    discarded from the tree.
    """
    if not 0 <= up_to_level <= tree.depth:
        raise ValueError(f"nesting level {up_to_level} outside 0..{tree.depth}")
    root = _rebuild(tree.root)
    nodes = [root]
    for l in range(1, up_to_level + 1):
        counts = [len(node.children) for node in nodes]
        p = min(counts)
        if p == 0:
            raise ValueError(f"a level-{l - 1} subset has no children; cannot nest level {l}")
        for node in nodes:
            if len(node.children) > p:
                ranked = sorted(range(len(node.children)), key=lambda i: (-len(node.children[i]), i))
                keep = sorted(ranked[:p])
                node.children = [node.children[i] for i in keep]
        nodes = [c for node in nodes for c in node.children]
    return PartitionTree(tree.space, _rebuild(root))


def default_tree(space: ProjectiveSpace) -> PartitionTree:
    """Two-level tree splitting by dimension parity, then into singletons.

    Even-dimensional subspaces (including the zero subspace) carry label 0 and
    odd-dimensional ones label 1.  Same-parity subspaces are at even distance,
    so level 1 has intrasubset distance at least 2.  For ``P(F_2^2)`` this is
    ``{O, W}`` / ``{S1, S2, S3}``.
    """
    elements = space.elements
    if len(elements) == 1:
        return PartitionTree(space, PartitionNode(elements))
    groups = [tuple(V for V in elements if V.dim % 2 == parity) for parity in (0, 1)]
    groups = [g for g in groups if g]
    if all(len(g) == 1 for g in groups):
        level1 = [PartitionNode(g) for g in groups]
    else:
        level1 = [PartitionNode(g, [PartitionNode((V,)) for V in g]) for g in groups]
    return PartitionTree(space, PartitionNode(elements, level1))


@dataclass(frozen=True)
class ComponentCode:
    """A classical block code over ``Z_{alphabet_size}``."""

    alphabet_size: int
    length: int
    words: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        words = tuple(sorted(set(tuple(w) for w in self.words)))
        object.__setattr__(self, "words", words)
        if not words:
            raise ValueError("a component code needs at least one word")
        for w in words:
            if len(w) != self.length:
                raise ValueError(f"word {w} does not have length {self.length}")
            if any(not 0 <= x < self.alphabet_size for x in w):
                raise ValueError(f"word {w} has symbols outside Z_{self.alphabet_size}")

    def __len__(self) -> int:
        return len(self.words)

    @cached_property
    def min_hamming(self) -> float:
        best = INF
        for a, b in combinations(self.words, 2):
            dist = sum(x != y for x, y in zip(a, b))
            if dist < best:
                best = dist
        return best

    def to_json(self) -> dict:
        if self.alphabet_size <= len(_DIGITS):
            words = ["".join(_DIGITS[x] for x in w) for w in self.words]
        else:
            words = [list(w) for w in self.words]
        return {"alphabet_size": self.alphabet_size, "length": self.length, "words": words}

    @classmethod
    def from_json(cls, data: dict) -> ComponentCode:
        words = []
        for w in data["words"]:
            words.append(tuple(_DIGITS.index(ch) for ch in w.lower()) if isinstance(w, str) else tuple(w))
        length = int(data.get("length", len(words[0]) if words else 0))
        return cls(int(data["alphabet_size"]), length, tuple(words))


def full_code(p: int, n: int) -> ComponentCode:
    return ComponentCode(p, n, tuple(product(range(p), repeat=n)))


def parity_code(p: int, n: int, syndrome: int = 0) -> ComponentCode:
    """Words of ``Z_p^n`` whose symbol sum is ``syndrome`` mod ``p``."""
    return ComponentCode(p, n, tuple(w for w in product(range(p), repeat=n) if sum(w) % p == syndrome % p))


def repetition_code(p: int, n: int) -> ComponentCode:
    return ComponentCode(p, n, tuple((a,) * n for a in range(p)))


def _candidates(family: str, p: int, n: int) -> list[ComponentCode]:
    if family == "full":
        return [full_code(p, n)]
    if family == "repetition":
        return [repetition_code(p, n)]
    syndrome = 1 if family == "odd-parity" else 0
    return [full_code(p, n), parity_code(p, n, syndrome), repetition_code(p, n)]


@dataclass
class MultilevelDesign:
    tree: PartitionTree
    cutoff: int
    components: list[ComponentCode]
    target_d: int
    n: int

    def __post_init__(self) -> None:
        if len(self.components) != self.cutoff:
            raise ValueError(f"expected {self.cutoff} component codes, got {len(self.components)}")
        if any(c.length != self.n for c in self.components):
            raise ValueError(f"component codes must have length n={self.n}")
        for l, comp in enumerate(self.components, start=1):
            p = self.tree.branching(l)
            if p is None:
                raise ValueError(f"level {l} is not nested")
            if comp.alphabet_size != p:
                raise ValueError(f"component code {l} is over Z_{comp.alphabet_size}, level {l} has p={p}")
        if self.intrasubset[self.cutoff] < self.target_d:
            raise ValueError(f"intrasubset distance at level {self.cutoff} is below d={self.target_d}")
        if self.cutoff and self.level_bound < self.target_d:
            raise ValueError(f"component codes only guarantee distance {self.level_bound} < d={self.target_d}")

    @cached_property
    def intrasubset(self) -> list[float]:
        return [intrasubset_distance(self.tree, l) for l in range(self.tree.depth + 1)]

    @property
    def level_bound(self) -> float:
        """``min_l d_S^(l-1) * d_H^(l)`` over levels ``1..L'`` (``inf`` when ``L' = 0``)."""
        return min(
            (self.intrasubset[l - 1] * c.min_hamming for l, c in enumerate(self.components, start=1)),
            default=INF,
        )

    @property
    def guaranteed_distance(self) -> float:
        """Level bound combined with the intrasubset distance at the cutoff level."""
        return min(self.level_bound, self.intrasubset[self.cutoff])

    def to_json(self) -> dict:
        return {
            "tree": self.tree.to_json(),
            "cutoff": self.cutoff,
            "target_d": self.target_d,
            "n": self.n,
            "components": [c.to_json() for c in self.components],
        }

    @classmethod
    def from_json(cls, data: dict) -> MultilevelDesign:
        tree = PartitionTree.from_json(data["tree"])
        comps = [ComponentCode.from_json(c) for c in data["components"]]
        return cls(tree, int(data["cutoff"]), comps, int(data["target_d"]), int(data["n"]))


def plan(
    tree: PartitionTree,
    n: int,
    d: int,
    components: str | Sequence[ComponentCode] = "parity",
) -> MultilevelDesign:
    """Choose the cutoff level, nest the tree up to it and pick component codes.

    ``components`` is a family name from :data:`FAMILIES` or one user-supplied
    code per level.  Named families take, per level, the largest code of the
    family whose Hamming distance reaches ``ceil(d / d_S^(l-1))``.
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if isinstance(components, str) and components not in FAMILIES:
        raise ValueError(f"unknown component family {components!r}; choose from {FAMILIES}")
    dists = [intrasubset_distance(tree, l) for l in range(tree.depth + 1)]
    cutoff = next((l for l, ds in enumerate(dists) if ds >= d), None)
    if cutoff is None:
        raise ValueError(f"no level of the partition tree reaches intrasubset distance {d}")
    nested = make_nested(tree, cutoff)
    dists = [intrasubset_distance(nested, l) for l in range(nested.depth + 1)]
    if not isinstance(components, str) and len(components) != cutoff:
        raise ValueError(f"cutoff level is {cutoff}; {len(components)} component codes were supplied")

    chosen = []
    for l in range(1, cutoff + 1):
        p = nested.branching(l)
        need = math.ceil(d / dists[l - 1])
        if isinstance(components, str):
            pick = next((c for c in _candidates(components, p, n) if c.min_hamming >= need), None)
            if pick is None:
                raise ValueError(
                    f"family {components!r} has no length-{n} code over Z_{p} with Hamming distance >= {need} (level {l})"
                )
        else:
            pick = components[l - 1]
            if pick.alphabet_size != p or pick.length != n:
                raise ValueError(f"component code {l} must be a length-{n} code over Z_{p}")
            if pick.min_hamming < need:
                raise ValueError(f"component code {l} has Hamming distance {pick.min_hamming} < required {need}")
        chosen.append(pick)
    return MultilevelDesign(nested, cutoff, chosen, d, n)


def _arrays(design: MultilevelDesign):
    return product(*(c.words for c in design.components))


def _column_subsets(design: MultilevelDesign, array: tuple[tuple[int, ...], ...]) -> list[tuple[Subspace, ...]]:
    n = design.n
    return [design.tree.subset(tuple(row[i] for row in array)).members for i in range(n)]


def cardinality(design: MultilevelDesign) -> int:
    """Sum over label arrays of the product of level-``L'`` subset sizes."""
    return sum(math.prod(len(s) for s in _column_subsets(design, a)) for a in _arrays(design))


def assemble(design: MultilevelDesign) -> MultishotCode:
    words = []
    for array in _arrays(design):
        for choice in product(*_column_subsets(design, array)):
            words.append(SubspaceTuple(choice))
    return MultishotCode(words)
