"""Subspaces of F_q^m in canonical reduced row-echelon form.

A :class:`Subspace` is identified by its RREF basis, so equality and hashing
are structural.  Subspaces are totally ordered by ``(dimension, basis)`` with
bases compared row by row lexicographically; this order fixes the element
indices of :class:`ProjectiveSpace` and every serialization downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .galois import FieldSpec

Row = tuple[int, ...]

ENUMERATION_BUDGET = 10**7


def gaussian_binomial(m: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of F_q^m.

    Returns 0 when ``k < 0`` or ``k > m``.  Numerator and denominator are
    accumulated as exact integers and divided once, so any ``q >= 2`` works.
    """
    if k < 0 or k > m:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (k - i) - 1
    return num // den


def projective_size(m: int, q: int) -> int:
    return sum(gaussian_binomial(m, k, q) for k in range(m + 1))


def _row_reduce(field: FieldSpec, rows: list[list[int]], m: int) -> tuple[list[Row], list[int]]:
    """Gauss-Jordan elimination; returns the nonzero RREF rows and pivot columns."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    n_rows = len(mat)
    for col in range(m):
        if r == n_rows:
            break
        src = next((i for i in range(r, n_rows) if mat[i][col]), None)
        if src is None:
            continue
        mat[r], mat[src] = mat[src], mat[r]
        lead = mat[r][col]
        if lead != 1:
            s = field.inv(lead)
            mat[r] = [field.mul(s, x) for x in mat[r]]
        pivot_row = mat[r]
        for i in range(n_rows):
            if i != r and mat[i][col]:
                c = field.neg(mat[i][col])
                mat[i] = [field.add(x, field.mul(c, y)) for x, y in zip(mat[i], pivot_row)]
        pivots.append(col)
        r += 1
    return [tuple(row) for row in mat[:r]], pivots


def _row_reduce_gf2(rows: list[int], m: int) -> list[int]:
    """RREF over F_2 on rows packed as ints (bit ``m-1-j`` is column ``j``)."""
    mat = list(rows)
    r = 0
    for col in range(m):
        bit = 1 << (m - 1 - col)
        src = next((i for i in range(r, len(mat)) if mat[i] & bit), None)
        if src is None:
            continue
        mat[r], mat[src] = mat[src], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i] & bit:
                mat[i] ^= mat[r]
        r += 1
        if r == len(mat):
            break
    return mat[:r]


def _pack(row: Row) -> int:
    v = 0
    for x in row:
        v = (v << 1) | x
    return v


def _unpack(v: int, m: int) -> Row:
    return tuple((v >> (m - 1 - j)) & 1 for j in range(m))


def rank(field: FieldSpec, rows: Sequence[Sequence[int]], m: int) -> int:
    if not rows:
        return 0
    if field.q == 2:
        return len(_row_reduce_gf2([_pack(tuple(r)) for r in rows], m))
    return len(_row_reduce(field, [list(r) for r in rows], m)[0])


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F_q^m held by its RREF basis (empty for the zero subspace)."""

    field: FieldSpec
    m: int
    basis: tuple[Row, ...]

    def __post_init__(self) -> None:
        pivots = []
        for row in self.basis:
            if len(row) != self.m:
                raise ValueError(f"basis row {row} has length {len(row)}, expected {self.m}")
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is None:
                raise ValueError("RREF basis may not contain a zero row")
            if row[lead] != 1:
                raise ValueError(f"pivot entry of {row} is not 1")
            pivots.append(lead)
        if any(a >= b for a, b in zip(pivots, pivots[1:])):
            raise ValueError("pivot columns must strictly increase")
        for i, c in enumerate(pivots):
            if any(self.basis[j][c] for j in range(len(self.basis)) if j != i):
                raise ValueError(f"pivot column {c} is not otherwise zero")
        object.__setattr__(self, "_key", (len(self.basis), self.basis))
        object.__setattr__(self, "_hash", hash((self.field.q, self.m, self.basis)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.m == other.m and self.basis == other.basis and self.field == other.field

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Subspace) -> bool:
        return self._key < other._key

    def __le__(self, other: Subspace) -> bool:
        return self._key <= other._key

    def __gt__(self, other: Subspace) -> bool:
        return self._key > other._key

    def __ge__(self, other: Subspace) -> bool:
        return self._key >= other._key

    def __repr__(self) -> str:
        rows = ",".join("".join(str(x) for x in r) if self.field.q <= 10 else str(list(r)) for r in self.basis)
        return f"Subspace<{rows or 'O'} in F_{self.field.q}^{self.m}>"

    def vectors(self) -> set[Row]:
        """All vectors of the subspace (exponential in the dimension)."""
        f = self.field
        out = set()
        for coeffs in product(range(f.q), repeat=self.dim):
            v = [0] * self.m
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [f.add(x, f.mul(c, y)) for x, y in zip(v, row)]
            out.add(tuple(v))
        return out

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.basis]

    @classmethod
    def from_json(cls, field: FieldSpec, m: int, data: Sequence[Sequence[int]]) -> Subspace:
        """Parse a basis list; rows are re-reduced, so any spanning set is accepted."""
        return rref(field, m, data)


def zero(field: FieldSpec, m: int) -> Subspace:
    return Subspace(field, m, ())


def full(field: FieldSpec, m: int) -> Subspace:
    return Subspace(field, m, tuple(tuple(int(i == j) for j in range(m)) for i in range(m)))


def rref(field: FieldSpec, m: int, rows: Iterable[Sequence[int]]) -> Subspace:
    """Canonical subspace spanned by ``rows``."""
    rows = [tuple(r) for r in rows]
    for r in rows:
        if len(r) != m:
            raise ValueError(f"row {r} has length {len(r)}, expected {m}")
        if any(not (isinstance(x, int) and 0 <= x < field.q) for x in r):
            raise ValueError(f"row {r} has entries outside {field!r}")
    if field.q == 2:
        packed = _row_reduce_gf2([_pack(r) for r in rows], m)
        basis = tuple(sorted((_unpack(v, m) for v in packed), reverse=True))
        return Subspace(field, m, basis)
    basis, _ = _row_reduce(field, [list(r) for r in rows], m)
    return Subspace(field, m, tuple(basis))


def _check_compatible(V: Subspace, U: Subspace) -> None:
    if V.m != U.m or V.field != U.field:
        raise ValueError(f"subspaces live in different ambient spaces: {V!r} vs {U!r}")


def sum_(V: Subspace, U: Subspace) -> Subspace:
    """The smallest subspace containing both ``V`` and ``U``."""
    _check_compatible(V, U)
    return rref(V.field, V.m, V.basis + U.basis)


def intersect(V: Subspace, U: Subspace) -> Subspace:
    """``V ∩ U`` by the Zassenhaus algorithm."""
    _check_compatible(V, U)
    f, m = V.field, V.m
    if not V.dim or not U.dim:
        return zero(f, m)
    zeros = (0,) * m
    stacked = [list(r + r) for r in V.basis] + [list(r + zeros) for r in U.basis]
    reduced, pivots = _row_reduce(f, stacked, 2 * m)
    inter = [row[m:] for row, c in zip(reduced, pivots) if c >= m]
    return rref(f, m, inter)


@lru_cache(maxsize=1 << 16)
def subspace_distance(V: Subspace, U: Subspace) -> int:
    """``dim(V + U) - dim(V ∩ U)``, computed as ``2 dim(V + U) - dim V - dim U``."""
    _check_compatible(V, U)
    if V == U:
        return 0
    s = rank(V.field, V.basis + U.basis, V.m)
    return 2 * s - V.dim - U.dim


def _rref_matrices(field: FieldSpec, m: int, k: int) -> Iterable[tuple[Row, ...]]:
    for pivots in combinations(range(m), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, m) if j not in pivot_set]
        for values in product(range(field.q), repeat=len(free)):
            mat = [[0] * m for _ in range(k)]
            for i, pc in enumerate(pivots):
                mat[i][pc] = 1
            for (i, j), x in zip(free, values):
                mat[i][j] = x
            yield tuple(tuple(r) for r in mat)


class ProjectiveSpace:
    """All subspaces of F_q^m, indexed in canonical ``(dimension, basis)`` order."""

    def __init__(self, field: FieldSpec, m: int, budget: int = ENUMERATION_BUDGET):
        if m < 0:
            raise ValueError(f"ambient dimension must be >= 0, got {m}")
        size = projective_size(m, field.q)
        if size > budget:
            raise ValueError(f"|P(F_{field.q}^{m})| = {size} exceeds the enumeration budget {budget}")
        self.field = field
        self.m = m
        elements = []
        for k in range(m + 1):
            elements.extend(Subspace(field, m, basis) for basis in _rref_matrices(field, m, k))
        elements.sort()
        self.elements: tuple[Subspace, ...] = tuple(elements)
        self.index: dict[Subspace, int] = {V: i for i, V in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> Subspace:
        return self.elements[i]

    def __contains__(self, V: object) -> bool:
        return V in self.index

    def __repr__(self) -> str:
        return f"ProjectiveSpace(q={self.field.q}, m={self.m}, size={len(self)})"

    @property
    def q(self) -> int:
        return self.field.q

    def position(self, V: Subspace) -> int:
        try:
            return self.index[V]
        except KeyError:
            raise ValueError(f"{V!r} is not an element of {self!r}") from None

    @cached_property
    def distance_table(self) -> list[list[int]]:
        """Pairwise subspace distances by element index."""
        els = self.elements
        return [[subspace_distance(a, b) for b in els] for a in els]

    def shell(self, V: Subspace, j: int) -> list[Subspace]:
        """Elements at distance exactly ``j`` from ``V``, in canonical order."""
        row = self.distance_table[self.position(V)]
        return [self.elements[i] for i, dist in enumerate(row) if dist == j]


def enumerate_space(field: FieldSpec, m: int, budget: int = ENUMERATION_BUDGET) -> ProjectiveSpace:
    return ProjectiveSpace(field, m, budget)


@lru_cache(maxsize=32)
def projective_space(field: FieldSpec, m: int) -> ProjectiveSpace:
    """Shared, cached instance of ``P(F_q^m)``."""
    return ProjectiveSpace(field, m)


def hasse_neighbors(space: ProjectiveSpace, V: Subspace) -> list[Subspace]:
    """Covers and co-covers of ``V``: every subspace at distance 1."""
    return space.shell(V, 1)
