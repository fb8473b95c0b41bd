"""Finite field arithmetic for prime and prime-power orders.

Elements are plain integers in ``range(q)``.  For ``q = p**e`` the base-p
digits of an element are the coefficients of a polynomial over F_p,
little-endian (digit ``i`` is the coefficient of ``x**i``).  Arithmetic in
extension fields is polynomial arithmetic modulo a fixed monic irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

# Fields up to this order get dense add/mul tables.
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by monic-or-not ``b`` over F_p (little-endian)."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        _poly_trim(a)
    return a


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_mod(list(poly), divisor, p):
                return False
    return True


def _lowest_irreducible(p: int, e: int) -> tuple[int, ...]:
    # Monic degree-e polynomials in increasing base-p value of the coefficient list.
    for value in range(p**e):
        low = [(value // p**i) % p for i in range(e)]
        poly = tuple(low) + (1,)
        if is_irreducible(poly, p):
            return poly
    raise RuntimeError(f"no irreducible polynomial of degree {e} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """The finite field of order ``q = p**e``.

    ``modulus`` lists the ``e + 1`` coefficients (little-endian) of the monic
    irreducible used for reduction; it is empty for prime fields.
    """

    p: int
    e: int
    q: int
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"characteristic p={self.p} is not prime")
        if self.e < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.e}")
        if self.q != self.p**self.e:
            raise ValueError(f"q={self.q} does not equal p**e={self.p**self.e}")
        if self.e == 1:
            if self.modulus:
                raise ValueError("prime fields carry no modulus")
        else:
            if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree e")
            if any(not 0 <= c < self.p for c in self.modulus):
                raise ValueError("modulus coefficients must lie in 0..p-1")
            if not is_irreducible(self.modulus, self.p):
                raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")

    def __repr__(self) -> str:
        return f"GF({self.q})"

    # -- digit encoding -------------------------------------------------

    def to_digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def from_digits(self, digits: list[int]) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of {self!r}")
        return a

    # -- raw arithmetic -------------------------------------------------

    def _add_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.to_digits(a), self.to_digits(b)
        return self.from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def _neg_raw(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_digits([(-x) % self.p for x in self.to_digits(a)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        da, db = self.to_digits(a), self.to_digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_mod(prod, list(self.modulus), self.p)
        return self.from_digits(rem + [0] * (self.e - len(rem)))

    @cached_property
    def _tables(self) -> tuple[list[list[int]], list[list[int]], list[int], list[int]] | None:
        if self.q > _TABLE_LIMIT:
            return None
        q = self.q
        add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        neg = [self._neg_raw(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = mul[a].index(1)
        return add, mul, neg, inv

    # -- public operations ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        t = self._tables
        if t is not None:
            return t[0][a][b]
        return self._add_raw(self._check(a), self._check(b))

    def neg(self, a: int) -> int:
        t = self._tables
        if t is not None:
            return t[2][a]
        return self._neg_raw(self._check(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        t = self._tables
        if t is not None:
            return t[1][a][b]
        return self._mul_raw(self._check(a), self._check(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in {self!r}")
        t = self._tables
        if t is not None:
            return t[3][a]
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        # a^(q-2) by square-and-multiply
        result, base, k = 1, self._check(a), self.q - 2
        while k:
            if k & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            k >>= 1
        return result

    def elements(self) -> range:
        return range(self.q)


def field_new(p: int, e: int = 1) -> FieldSpec:
    """Build F_{p^e}, choosing the lowest-valued monic irreducible when ``e > 1``."""
    if not is_prime(p):
        raise ValueError(f"characteristic p={p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    modulus = () if e == 1 else _lowest_irreducible(p, e)
    return FieldSpec(p=p, e=e, q=p**e, modulus=modulus)


def field_of_order(q: int) -> FieldSpec:
    """Build the field with ``q`` elements; ``q`` must be a prime power."""
    if q < 2:
        raise ValueError(f"no field of order {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1 or not is_prime(p):
        raise ValueError(f"q={q} is not a prime power")
    return field_new(p, e)
