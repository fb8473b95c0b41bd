"""Multishot subspace codes over the n-th extension P(F_q^m)^n.

The extended distance between tuples is the coordinatewise sum of subspace
distances.  Codes are stored with codewords in canonical order (tuples
compared coordinate by coordinate in the ``(dimension, basis)`` order).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from .galois import FieldSpec, field_of_order
from .subspace import Subspace, projective_size, rref, subspace_distance

RATE_CONVENTIONS = ("per-channel-use", "per-packet", "per-symbol")
ELL_MODES = ("average", "maximum")


@dataclass(frozen=True)
class SubspaceTuple:
    shots: tuple[Subspace, ...]

    def __post_init__(self) -> None:
        shots = tuple(self.shots)
        object.__setattr__(self, "shots", shots)
        if not shots:
            raise ValueError("a subspace tuple needs at least one coordinate")
        f, m = shots[0].field, shots[0].m
        if any(V.m != m or V.field != f for V in shots):
            raise ValueError("all coordinates must live in the same F_q^m")

    @property
    def n(self) -> int:
        return len(self.shots)

    @property
    def m(self) -> int:
        return self.shots[0].m

    @property
    def field(self) -> FieldSpec:
        return self.shots[0].field

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(V.dim for V in self.shots)

    def __len__(self) -> int:
        return len(self.shots)

    def __getitem__(self, i: int) -> Subspace:
        return self.shots[i]

    def __iter__(self):
        return iter(self.shots)

    def __lt__(self, other: SubspaceTuple) -> bool:
        return self.shots < other.shots

    def to_json(self) -> list:
        return [V.to_json() for V in self.shots]


def extended_distance(A: SubspaceTuple, B: SubspaceTuple) -> int:
    """Sum over coordinates ``i = 1..n`` of the subspace distance."""
    if A.n != B.n or A.m != B.m or A.field != B.field:
        raise ValueError(f"tuples have mismatched parameters: n={A.n}/{B.n}, m={A.m}/{B.m}")
    return sum(subspace_distance(a, b) for a, b in zip(A.shots, B.shots))


class MultishotCode:
    """A non-empty set of n-tuples of subspaces of F_q^m."""

    def __init__(self, codewords: Iterable[SubspaceTuple | Sequence[Subspace]]):
        words = {w if isinstance(w, SubspaceTuple) else SubspaceTuple(tuple(w)) for w in codewords}
        if not words:
            raise ValueError("a code must contain at least one codeword")
        first = next(iter(words))
        self.field: FieldSpec = first.field
        self.m: int = first.m
        self.n: int = first.n
        for w in words:
            if w.n != self.n or w.m != self.m or w.field != self.field:
                raise ValueError("all codewords must share (q, m, n)")
        self.codewords: tuple[SubspaceTuple, ...] = tuple(sorted(words))
        self._members = frozenset(words)

    @property
    def q(self) -> int:
        return self.field.q

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __contains__(self, word: object) -> bool:
        return word in self._members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultishotCode):
            return NotImplemented
        return self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"MultishotCode(q={self.q}, m={self.m}, n={self.n}, size={len(self)})"

    @cached_property
    def minimum_distance(self) -> int:
        return minimum_distance(self)

    @cached_property
    def max_dimension(self) -> int:
        return max(V.dim for w in self.codewords for V in w.shots)

    @cached_property
    def average_dimension(self) -> Fraction:
        total = sum(V.dim for w in self.codewords for V in w.shots)
        return Fraction(total, len(self) * self.n)

    def to_json(self, include_distance: bool = True) -> dict:
        header = {"q": self.q, "m": self.m, "n": self.n, "count": len(self)}
        if include_distance and len(self) >= 2:
            header["min_distance"] = self.minimum_distance
        header["codewords"] = [w.to_json() for w in self.codewords]
        return header

    def dumps(self, include_distance: bool = True) -> str:
        return json.dumps(self.to_json(include_distance), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict) -> MultishotCode:
        field = field_of_order(int(data["q"]))
        m, n = int(data["m"]), int(data["n"])
        words = []
        for raw in data["codewords"]:
            if len(raw) != n:
                raise ValueError(f"codeword {raw} does not have n={n} coordinates")
            words.append(SubspaceTuple(tuple(rref(field, m, rows) for rows in raw)))
        code = cls(words)
        if len(code) != len(words):
            raise ValueError("code file contains duplicate codewords")
        if "count" in data and int(data["count"]) != len(code):
            raise ValueError(f"header count {data['count']} disagrees with {len(code)} codewords")
        return code


def minimum_distance(code: MultishotCode) -> int:
    """Minimum extended distance over distinct codeword pairs."""
    if len(code) < 2:
        raise ValueError("minimum distance is undefined for a code with fewer than two codewords")
    best = code.m * code.n
    for a, b in combinations(code.codewords, 2):
        dist = extended_distance(a, b)
        if dist < best:
            best = dist
            if best == 1:
                break
    return best


def rate(
    code: MultishotCode,
    convention: str = "per-channel-use",
    ell_mode: str = "average",
    base: float | str | None = None,
) -> float:
    """Rate of ``code``.

    ``base`` defaults to ``|P(F_q^m)|``; pass ``"e"`` for natural logarithms.
    """
    if convention not in RATE_CONVENTIONS:
        raise ValueError(f"unknown rate convention {convention!r}; choose from {RATE_CONVENTIONS}")
    if ell_mode not in ELL_MODES:
        raise ValueError(f"unknown ell mode {ell_mode!r}; choose from {ELL_MODES}")
    if base is None:
        base = projective_size(code.m, code.q)
    if base == "e":
        info = math.log(len(code))
    else:
        if base == 1:
            raise ValueError("logarithm base 1 is undefined (use base='e' for P(F_q^0))")
        info = math.log(len(code)) / math.log(base)
    if convention == "per-channel-use":
        return info / code.n
    ell = float(code.average_dimension) if ell_mode == "average" else code.max_dimension
    if ell == 0:
        raise ValueError("rate per packet/symbol is undefined when every codeword coordinate is the zero subspace")
    if convention == "per-packet":
        return info / (ell * code.n)
    return info / (code.m * ell * code.n)


def embed(A: SubspaceTuple) -> Subspace:
    """Block-diagonal one-shot image of ``A`` in F_q^{mn}."""
    m, n = A.m, A.n
    rows = []
    for i, V in enumerate(A.shots):
        left, right = (0,) * (i * m), (0,) * ((n - 1 - i) * m)
        rows.extend(left + r + right for r in V.basis)
    return rref(A.field, m * n, rows)


def embed_code(code: MultishotCode) -> list[Subspace]:
    return [embed(w) for w in code.codewords]


def puncture(code: MultishotCode, coordinate: int) -> MultishotCode:
    """Delete coordinate ``coordinate`` (0-based) from every codeword; duplicates merge."""
    if code.n < 2:
        raise ValueError("cannot puncture a code of length 1")
    if not 0 <= coordinate < code.n:
        raise ValueError(f"coordinate {coordinate} out of range 0..{code.n - 1}")
    return MultishotCode(
        SubspaceTuple(w.shots[:coordinate] + w.shots[coordinate + 1:]) for w in code.codewords
    )


def product_code(one_shot: Iterable[Subspace], n: int) -> MultishotCode:
    """The n-fold Cartesian power of a one-shot code."""
    return MultishotCode(SubspaceTuple(t) for t in product(tuple(one_shot), repeat=n))


def from_classical(alphabet: Sequence[Subspace], words: Iterable[Sequence[int]]) -> MultishotCode:
    """Map a classical code over ``Z_len(alphabet)`` symbol by symbol onto subspaces."""
    return MultishotCode(SubspaceTuple(tuple(alphabet[x] for x in w)) for w in words)
