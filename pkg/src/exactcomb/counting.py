"""Closed forms and recursions for every counting family, all exact.

Where two independent computation routes exist (closed form vs recursion,
or two printed formulas), both are evaluated and compared on every call;
a mismatch raises ArithmeticError, since it would mean the implementation
is internally inconsistent.  Results are memoized per process.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .exact_core import factorial

__all__ = [
    "TypeVector",
    "GergonneQuery",
    "binomial",
    "falling_factorial",
    "rising_factorial",
    "multiset_coeff",
    "gentile_coeff",
    "multinomial",
    "stirling2",
    "bell",
    "faa_di_bruno",
    "cycle_count",
    "stirling1_signed",
    "cauchy_count",
    "derangement",
    "derangement_fixed",
    "surjection_count",
    "lower_bound_solutions",
    "gergonne",
    "touchard",
    "menage_count",
    "birthday_probability",
    "graph_count",
    "alternating_convolution",
    "iter_type_vectors",
    "GRAPH_KINDS",
]


# guards growth of the shared row tables; lookups of finished rows are free
_TABLE_LOCK = threading.Lock()


def _agree(label: str, *values):
    first = values[0]
    for v in values[1:]:
        if v != first:
            raise ArithmeticError(
                f"internal inconsistency in {label}: routes gave {values}"
            )
    return first


@dataclass(frozen=True)
class TypeVector:
    """Multiplicity vector of a partition or permutation type on an n-set.

    ``nu[i-1]`` is the number of blocks (or cycles) of size i; the weights
    must satisfy sum(i * nu_i) == n.  Trailing zeros are trimmed so that
    equality is structural.
    """

    n: int
    nu: tuple[int, ...]

    def __init__(self, n: int, nu: Sequence[int]):
        nu = tuple(nu)
        while nu and nu[-1] == 0:
            nu = nu[:-1]
        if any(v < 0 for v in nu):
            raise ValueError("multiplicities must be nonnegative")
        if len(nu) > n:
            raise ValueError(f"type vector longer than n={n}")
        weight = sum(i * v for i, v in enumerate(nu, start=1))
        if weight != n:
            raise ValueError(f"type weights sum to {weight}, expected n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "nu", nu)

    @classmethod
    def of_sizes(cls, sizes: Sequence[int]) -> "TypeVector":
        """Build from an explicit list of block/cycle sizes."""
        n = sum(sizes)
        nu = [0] * n
        for s in sizes:
            if s <= 0:
                raise ValueError("sizes must be positive")
            nu[s - 1] += 1
        return cls(n, nu)

    def multiplicity(self, size: int) -> int:
        if size < 1:
            raise ValueError("size must be >= 1")
        return self.nu[size - 1] if size <= len(self.nu) else 0

    @property
    def block_count(self) -> int:
        return sum(self.nu)


def iter_type_vectors(n: int) -> Iterator[TypeVector]:
    """All type vectors of weight n (i.e. integer partitions of n)."""

    def parts(remaining: int, max_part: int, acc: list[int]):
        if remaining == 0:
            yield tuple(acc)
            return
        for p in range(min(remaining, max_part), 0, -1):
            acc.append(p)
            yield from parts(remaining - p, p, acc)
            acc.pop()

    if n == 0:
        yield TypeVector(0, ())
        return
    for sizes in parts(n, n, []):
        yield TypeVector.of_sizes(sizes)


# ---------------------------------------------------------------------------
# binomial and factorial-like coefficients
# ---------------------------------------------------------------------------


def falling_factorial(n: int, k: int) -> int:
    """(n)_k = n (n-1) ... (n-k+1); the empty product is 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = 1
    for i in range(k):
        out *= n - i
    return out


def rising_factorial(n: int, k: int) -> int:
    """<n>_k = n (n+1) ... (n+k-1); the empty product is 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = 1
    for i in range(k):
        out *= n + i
    return out


def _binomial_pascal(n: int, k: int) -> int:
    # one-dimensional Pascal sweep over rows 0..n, columns 0..k
    row = [1] + [0] * k
    for _ in range(n):
        for j in range(k, 0, -1):
            row[j] += row[j - 1]
    return row[k]


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n; closed form and Pascal recursion agree."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    closed = falling_factorial(n, k) // factorial(k)
    return _agree(f"binomial({n},{k})", closed, _binomial_pascal(n, k))


@lru_cache(maxsize=None)
def multiset_coeff(n: int, k: int) -> int:
    """<n, k>, the number of k-multisets on an n-set (three routes)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if n == 0:
        return 1 if k == 0 else 0
    via_rising = rising_factorial(n, k) // factorial(k)
    via_binomial = binomial(n + k - 1, k)
    # step-2 recursion <n,k> = <n,k-1> + <n-1,k>
    row = [1] * (k + 1)  # row n=1
    for _ in range(n - 1):
        for j in range(1, k + 1):
            row[j] += row[j - 1]
    return _agree(f"multiset_coeff({n},{k})", via_rising, via_binomial, row[k])


_GENTILE_ROWS: dict[int, list[list[int]]] = {}


def gentile_coeff(p: int, n: int, k: int) -> int:
    """c^p(n, k): k indistinguishable balls in n boxes, at most p per box."""
    if p < 1:
        raise ValueError("occupancy bound p must be >= 1")
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k > n * p:
        return 0
    with _TABLE_LOCK:
        rows = _GENTILE_ROWS.setdefault(p, [[1]])
        while len(rows) <= n:
            prev = rows[-1]
            width = len(rows) * p
            nxt = [0] * (width + 1)
            for kk in range(width + 1):
                nxt[kk] = sum(
                    prev[kk - i] for i in range(min(p, kk) + 1) if kk - i < len(prev)
                )
            rows.append(nxt)
        row = rows[n]
    return row[k] if k < len(row) else 0


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / prod(h_i!), or 0 unless the parts sum to n."""
    if any(h < 0 for h in parts):
        return 0
    if sum(parts) != n:
        return 0
    out = factorial(n)
    for h in parts:
        out //= factorial(h)
    return out


# ---------------------------------------------------------------------------
# partitions: Stirling 2nd kind, Bell, partition types
# ---------------------------------------------------------------------------

_STIRLING2_ROWS: list[list[int]] = [[1]]


def stirling2(n: int, k: int) -> int:
    """S(n, k), k-block set partitions, via the bad-element recursion."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    with _TABLE_LOCK:
        while len(_STIRLING2_ROWS) <= n:
            m = len(_STIRLING2_ROWS)
            prev = _STIRLING2_ROWS[-1]
            nxt = [0] * (m + 1)
            for j in range(1, m + 1):
                nxt[j] = prev[j - 1] + (j * prev[j] if j < m else 0)
            _STIRLING2_ROWS.append(nxt)
        row = _STIRLING2_ROWS[n]
    return row[k] if k < len(row) else 0


_BELL: list[int] = [1]


def bell(n: int) -> int:
    """B_n, all set partitions of an n-set, by the binomial-sum recursion."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _TABLE_LOCK:
        while len(_BELL) <= n:
            m = len(_BELL) - 1  # B_{m+1} from B_0..B_m
            _BELL.append(sum(binomial(m, k) * _BELL[k] for k in range(m + 1)))
        value = _BELL[n]
    return _agree(f"bell({n})", value, sum(stirling2(n, k) for k in range(n + 1)))


def faa_di_bruno(tv: TypeVector) -> int:
    """Number of set partitions of the given type:
    n! / prod((i!)^nu_i) / prod(nu_i!)."""
    den = 1
    for i, v in enumerate(tv.nu, start=1):
        den *= factorial(i) ** v * factorial(v)
    num = factorial(tv.n)
    if num % den:
        raise ArithmeticError(f"faa_di_bruno({tv}): non-integer quotient")
    return num // den


# ---------------------------------------------------------------------------
# permutations: cycle counts, Cauchy coefficients, derangements
# ---------------------------------------------------------------------------

_CYCLE_ROWS: list[list[int]] = [[1]]


def cycle_count(n: int, k: int) -> int:
    """Permutations of an n-set with exactly k cycles (unsigned Stirling
    numbers of the first kind)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    with _TABLE_LOCK:
        while len(_CYCLE_ROWS) <= n:
            m = len(_CYCLE_ROWS)
            prev = _CYCLE_ROWS[-1]
            nxt = [0] * (m + 1)
            for j in range(1, m + 1):
                nxt[j] = (prev[j - 1] if j - 1 < len(prev) else 0) + (
                    (m - 1) * prev[j] if j < len(prev) else 0
                )
            _CYCLE_ROWS.append(nxt)
        row = _CYCLE_ROWS[n]
    return row[k] if k < len(row) else 0


def stirling1_signed(n: int, k: int) -> int:
    """s(n, k) = (-1)^(n-k) C(n, k): falling-factorial expansion coefficients."""
    value = cycle_count(n, k)
    return -value if (n - k) % 2 else value


def cauchy_count(tv: TypeVector) -> int:
    """Number of permutations of the given cycle type:
    n! / prod(i^nu_i) / prod(nu_i!)."""
    den = 1
    for i, v in enumerate(tv.nu, start=1):
        den *= i**v * factorial(v)
    num = factorial(tv.n)
    if num % den:
        raise ArithmeticError(f"cauchy_count({tv}): non-integer quotient")
    return num // den


_DERANGEMENTS: list[int] = [1, 0]  # d_0 := 1 so that d_{n,n} = C(n,n) * d_0


def derangement(n: int) -> int:
    """d_n, fixed-point-free permutations, via d_n = (n-1)(d_{n-2} + d_{n-1})."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _TABLE_LOCK:
        while len(_DERANGEMENTS) <= n:
            m = len(_DERANGEMENTS)
            _DERANGEMENTS.append(
                (m - 1) * (_DERANGEMENTS[m - 2] + _DERANGEMENTS[m - 1])
            )
        return _DERANGEMENTS[n]


def derangement_fixed(n: int, k: int) -> int:
    """d_{n,k}, permutations with exactly k fixed points (two routes)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k > n:
        return 0
    via_choose = binomial(n, k) * derangement(n - k)
    # n!/k! * sum_{h=k}^{n} (-1)^(h-k) / (h-k)!   (termwise integral)
    base = factorial(n) // factorial(k)
    total = 0
    for h in range(k, n + 1):
        term = base // factorial(h - k)
        total += -term if (h - k) % 2 else term
    return _agree(f"derangement_fixed({n},{k})", via_choose, total)


def surjection_count(k: int, n: int) -> int:
    """Surjections from a k-set onto an n-set, by the alternating sum
    over image sizes (0^0 counts as 1)."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    total = 0
    for j in range(n + 1):
        term = binomial(n, j) * j**k
        total += -term if (n - j) % 2 else term
    return total


# ---------------------------------------------------------------------------
# integer solutions, Gergonne, menage
# ---------------------------------------------------------------------------


def lower_bound_solutions(n: int, k: int, bounds: Sequence[int]) -> int:
    """Solutions of x_1 + ... + x_n = k with x_i >= bounds[i]."""
    if n < 1:
        raise ValueError("need at least one variable")
    if len(bounds) != n:
        raise ValueError(f"expected {n} bounds, got {len(bounds)}")
    if any(a < 0 for a in bounds):
        raise ValueError("bounds must be nonnegative")
    rest = k - sum(bounds)
    if rest < 0:
        return 0
    return multiset_coeff(n, rest)


@dataclass(frozen=True)
class GergonneQuery:
    """A deck query: n cards (or seats), draw size k, minimum gap m.

    Circular queries model seats on a round table; only m = 1 with an
    even seat count is supported there.
    """

    n: int
    k: int
    m: int = 1
    circular: bool = False

    def __post_init__(self):
        if self.n < 0 or self.k < 0 or self.m < 0:
            raise ValueError("n, k, m must be nonnegative")
        if self.circular:
            if self.m != 1:
                raise ValueError("circular queries support only minimum gap m = 1")
            if self.n % 2 or self.n < 2:
                raise ValueError("circular queries need an even seat count n >= 2")


def gergonne(q: GergonneQuery) -> tuple[int, Fraction]:
    """Winning k-subset count and its probability among all k-subsets."""
    n, k, m = q.n, q.k, q.m
    if q.circular:
        count = binomial(n - k, k) if n - k >= 0 else 0
        if k >= 1 and n - k - 1 >= 0:
            count += binomial(n - k - 1, k - 1)
        if n - k > 0:
            _agree(
                f"gergonne({q})",
                Fraction(count),
                Fraction(n, n - k) * binomial(n - k, k),
            )
    else:
        top = n - m * k + m
        count = binomial(top, k) if top >= 0 else 0
        # same thing through the bounded-equation reduction
        if k >= 1 and n >= k:
            bounds = [0] + [m] * (k - 1) + [0]
            _agree(f"gergonne({q})", count, lower_bound_solutions(k + 1, n - k, bounds))
    total = binomial(n, k)
    prob = Fraction(count, total) if total else Fraction(0)
    return count, prob


def touchard(n: int) -> int:
    """U_n, the reduced menage count, by the alternating circular-selection
    sum; terms beyond k = n vanish, so the sum stops there."""
    if n < 2:
        raise ValueError("menage seatings need n >= 2 couples")
    total = 0
    for k in range(n + 1):
        circ = binomial(2 * n - k, k) + binomial(2 * n - k - 1, k - 1)
        term = circ * factorial(n - k)
        total += -term if k % 2 else term
    return total


def menage_count(n: int) -> int:
    """Full menage count 2 * n! * U_n (both sexes, women in any order)."""
    return 2 * factorial(n) * touchard(n)


def birthday_probability(k: int, days: int = 365) -> Fraction:
    """Exact probability that k people share at least one birthday."""
    if days < 1:
        raise ValueError("days must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    return 1 - Fraction(falling_factorial(days, k), days**k)


# ---------------------------------------------------------------------------
# graph families
# ---------------------------------------------------------------------------

GRAPH_KINDS = (
    "graph",
    "digraph",
    "loopless_digraph",
    "multigraph",
    "multidigraph",
    "loopless_multidigraph",
)

_SLOT_COUNTS = {
    "graph": lambda n: binomial(n, 2),
    "digraph": lambda n: n * n,
    "loopless_digraph": lambda n: n * (n - 1),
    "multigraph": lambda n: binomial(n, 2),
    "multidigraph": lambda n: n * n,
    "loopless_multidigraph": lambda n: n * (n - 1),
}


def graph_count(kind: str, n: int, k: Optional[int] = None) -> int:
    """Count (di/multi)graphs on n labelled vertices, optionally with
    exactly k edges/arrows.  Multigraph kinds require k: without it the
    family is infinite."""
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {GRAPH_KINDS}")
    if n < 0:
        raise ValueError("n must be >= 0")
    slots = _SLOT_COUNTS[kind](n)
    if "multi" in kind:
        if k is None:
            raise ValueError(f"{kind} on {n} vertices is an infinite family; pass k")
        return multiset_coeff(slots, k)
    if k is None:
        return 2**slots
    return binomial(slots, k)


# ---------------------------------------------------------------------------
# alternating binomial/multiset convolution
# ---------------------------------------------------------------------------


def alternating_convolution(n: int, m: int, k: int) -> int:
    """Coefficient of t^k in (1-t)^n / (1-t)^m, as the convolution
    sum_h (-1)^h C(n,h) <m, k-h>, checked against the collapsed form."""
    if n < 0 or m < 0 or k < 0:
        raise ValueError("n, m, k must be >= 0")
    total = 0
    for h in range(min(n, k) + 1):
        term = binomial(n, h) * multiset_coeff(m, k - h)
        total += -term if h % 2 else term
    if n > m:
        expected = binomial(n - m, k) * (-1 if k % 2 else 1)
    elif n == m:
        expected = 1 if k == 0 else 0
    else:
        expected = multiset_coeff(m - n, k)
    return _agree(f"alternating_convolution({n},{m},{k})", total, expected)
