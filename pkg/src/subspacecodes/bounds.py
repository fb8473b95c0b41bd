"""Sphere volumes and size bounds for codes in P(F_q^m)^n.

All quantities are exact: integers for counts, :class:`fractions.Fraction`
for averages and ratio bounds.  Rounded integers follow a fixed direction,
ceiling for lower bounds and floor for upper bounds.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .subspace import gaussian_binomial, projective_size

CSV_COLUMNS = (
    "q", "m", "n", "d",
    "classical_lower", "gv_lower_ceil", "hamming_upper_floor", "singleton_upper",
    "best_lower", "best_upper",
)

# Exhaustive classical search only runs below these sizes.
CLASSICAL_SEARCH_MAX_LENGTH = 4
CLASSICAL_SEARCH_MAX_ALPHABET = 7
CLASSICAL_SEARCH_NODE_BUDGET = 200_000


def _check_profile(m: int, profile: Sequence[int]) -> tuple[int, ...]:
    profile = tuple(profile)
    if any(not 0 <= k <= m for k in profile):
        raise ValueError(f"dimension profile {profile} has entries outside 0..{m}")
    return profile


def _check_d(m: int, n: int, d: int) -> None:
    if not 1 <= d <= m * n:
        raise ValueError(f"distance d={d} must lie in 1..{m * n}")


@lru_cache(maxsize=None)
def shell_volume(q: int, m: int, k: int, j: int) -> int:
    """Number of subspaces of F_q^m at distance exactly ``j`` from a ``k``-dimensional one."""
    if not 0 <= k <= m:
        raise ValueError(f"dimension k={k} outside 0..{m}")
    if j < 0:
        raise ValueError(f"radius j={j} must be non-negative")
    return sum(
        gaussian_binomial(m - k, j - i, q) * gaussian_binomial(k, i, q) * q ** (i * (j - i))
        for i in range(j + 1)
    )


def sphere_volume(q: int, m: int, n: int, profile: Sequence[int], r: int) -> int:
    """Tuples within extended distance ``r`` of any center with dimension profile ``profile``."""
    profile = _check_profile(m, profile)
    if len(profile) != n:
        raise ValueError(f"profile {profile} does not have length n={n}")
    if r < 0:
        raise ValueError(f"radius r={r} must be non-negative")
    # Convolve per-coordinate shell counts, truncating at radius r.
    counts = [1] + [0] * r
    for k in profile:
        shells = [shell_volume(q, m, k, j) for j in range(min(m, r) + 1)]
        nxt = [0] * (r + 1)
        for total, c in enumerate(counts):
            if c:
                for j, s in enumerate(shells):
                    if total + j > r:
                        break
                    nxt[total + j] += c * s
        counts = nxt
    return sum(counts)


def freq(q: int, m: int, profile: Sequence[int]) -> int:
    profile = _check_profile(m, profile)
    return math.prod(gaussian_binomial(m, k, q) for k in profile)


def volume_avg(q: int, m: int, n: int, r: int) -> Fraction:
    """Average ball volume, summing over every profile in ``{0..m}^n``."""
    total = 0
    for profile in product(range(m + 1), repeat=n):
        total += freq(q, m, profile) * sphere_volume(q, m, n, profile, r)
    return Fraction(total, projective_size(m, q) ** n)


def volume_min(q: int, m: int, n: int, r: int) -> int:
    return sphere_volume(q, m, n, (m // 2,) * n, r)


def volume_max(q: int, m: int, n: int, r: int) -> int:
    return sphere_volume(q, m, n, (0,) * n, r)


def hamming_upper(q: int, m: int, n: int, d: int) -> Fraction:
    _check_d(m, n, d)
    return Fraction(projective_size(m, q) ** n, volume_min(q, m, n, (d - 1) // 2))


def gv_lower(q: int, m: int, n: int, d: int) -> Fraction:
    _check_d(m, n, d)
    return projective_size(m, q) ** n / volume_avg(q, m, n, d - 1)


def singleton_upper(q: int, m: int, n: int, d: int) -> int:
    _check_d(m, n, d)
    return projective_size(m, q) ** (n - (d - 1) // m)


def classical_gv(alphabet: int, n: int, d: int) -> int:
    """Classical Gilbert-Varshamov guarantee for a length-``n`` code over ``alphabet`` symbols."""
    ball = sum(math.comb(n, i) * (alphabet - 1) ** i for i in range(d))
    return -(-alphabet**n // ball)


def classical_search(alphabet: int, n: int, d: int, node_budget: int = CLASSICAL_SEARCH_NODE_BUDGET) -> int:
    """Size of the largest classical code found by exhaustive search (best-found on budget exhaustion)."""
    from .search import max_independent_set

    words = list(product(range(alphabet), repeat=n))

    def conflict(a: int, b: int) -> bool:
        return sum(x != y for x, y in zip(words[a], words[b])) < d

    result = max_independent_set(len(words), conflict, node_budget=node_budget)
    return len(result.members)


def classical_lower(q: int, m: int, n: int, d: int) -> int:
    """Best classical-code size over an alphabet of ``|P(F_q^m)|`` symbols."""
    _check_d(m, n, d)
    alphabet = projective_size(m, q)
    if d > n:
        # Hamming distance cannot exceed n; only single-word codes qualify.
        return 1
    best = classical_gv(alphabet, n, d)
    if n <= CLASSICAL_SEARCH_MAX_LENGTH and alphabet <= CLASSICAL_SEARCH_MAX_ALPHABET:
        best = max(best, classical_search(alphabet, n, d))
    return best


def oneshot_upper(q: int, m: int, n: int, d: int) -> int:
    """Singleton-like bound for one-shot codes in P(F_q^{mn}); stands in for the one-shot optimum."""
    _check_d(m, n, d)
    mn = m * n
    return projective_size(mn, q) ** (1 - (d - 1) // mn)


def classical_sandwich(q: int, m: int, n: int, d: int) -> tuple[int, int]:
    return classical_lower(q, m, n, d), oneshot_upper(q, m, n, d)


def ceil_fraction(x: Fraction) -> int:
    return -(-x.numerator // x.denominator)


def floor_fraction(x: Fraction) -> int:
    return x.numerator // x.denominator


@dataclass(frozen=True)
class BoundsReport:
    q: int
    m: int
    n: int
    d: int
    gv_lower: Fraction
    hamming_upper: Fraction
    singleton_upper: int
    classical_lower: int
    oneshot_upper: int
    oneshot_upper_note: str = "Singleton bound in P(F_q^{mn}), a proxy for the unknown one-shot optimum"

    @property
    def gv_lower_ceil(self) -> int:
        return ceil_fraction(self.gv_lower)

    @property
    def hamming_upper_floor(self) -> int:
        return floor_fraction(self.hamming_upper)

    @property
    def best_lower(self) -> int:
        return max(self.classical_lower, self.gv_lower_ceil)

    @property
    def best_upper(self) -> int:
        return min(self.hamming_upper_floor, self.singleton_upper, self.oneshot_upper)

    def consistent(self) -> bool:
        return self.best_lower <= self.best_upper

    def row(self) -> dict[str, int]:
        return {
            "q": self.q, "m": self.m, "n": self.n, "d": self.d,
            "classical_lower": self.classical_lower,
            "gv_lower_ceil": self.gv_lower_ceil,
            "hamming_upper_floor": self.hamming_upper_floor,
            "singleton_upper": self.singleton_upper,
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
        }

    def to_json(self) -> dict:
        out = asdict(self)
        out["gv_lower"] = str(self.gv_lower)
        out["hamming_upper"] = str(self.hamming_upper)
        out.update(self.row())
        return out


def bounds_report(q: int, m: int, n: int, d: int) -> BoundsReport:
    report = BoundsReport(
        q=q, m=m, n=n, d=d,
        gv_lower=gv_lower(q, m, n, d),
        hamming_upper=hamming_upper(q, m, n, d),
        singleton_upper=singleton_upper(q, m, n, d),
        classical_lower=classical_lower(q, m, n, d),
        oneshot_upper=oneshot_upper(q, m, n, d),
    )
    if not report.consistent():
        raise ArithmeticError(f"bounds are inconsistent at (q,m,n,d)=({q},{m},{n},{d}): {report.row()}")
    return report


def bounds_table(reports: Iterable[BoundsReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        writer.writerow(rep.row())
    return buf.getvalue()
