"""Brute-force generation of every combinatorial family at small sizes.

These generators are the oracles that validate the closed forms and
recursions in `counting`: each family is produced explicitly, in a
deterministic canonical order, behind hard size guards so a mistyped
argument cannot melt a test run.

Conventions: ground sets are {1..n}; functions and permutations are
tuples of 1-based images; set partitions are tuples of blocks, each
block an ascending tuple, blocks ordered by their minimum.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator, Optional, Sequence

from .counting import (
    GergonneQuery,
    TypeVector,
    binomial,
    falling_factorial,
    multiset_coeff,
)

MAX_FUNCTION_IMAGES = 10**7
MAX_SUBSET_GROUND = 24
MAX_MULTISET_COUNT = 10**6
MAX_PARTITION_GROUND = 12
MAX_PERMUTATION_GROUND = 9
MAX_GERGONNE_SUBSETS = 10**6
MAX_MENAGE_COUPLES = 7


class SizeGuardError(ValueError):
    """Raised when a requested enumeration would be explosively large."""


def _guard(ok: bool, what: str):
    if not ok:
        raise SizeGuardError(f"enumeration guard exceeded: {what}")


def as_word(values: Sequence[int]) -> str:
    """Word form of a function/letter sequence; single-digit alphabets
    concatenate ("1312"), larger ones join with commas."""
    if all(0 <= v <= 9 for v in values):
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


# ---------------------------------------------------------------------------
# functions, subsets, multisets
# ---------------------------------------------------------------------------


def enumerate_functions(
    k: int, n: int, mode: str = "all"
) -> Iterator[tuple[int, ...]]:
    """All functions {1..k} -> {1..n} as image tuples, optionally filtered
    to injective or surjective ones."""
    if mode not in ("all", "injective", "surjective"):
        raise ValueError(f"unknown mode {mode!r}")
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    if mode == "injective":
        _guard(falling_factorial(n, k) <= MAX_FUNCTION_IMAGES, f"(n)_k with n={n}, k={k}")
        yield from permutations(range(1, n + 1), k)
        return
    _guard(n**k <= MAX_FUNCTION_IMAGES, f"n^k with n={n}, k={k}")
    everything = product(range(1, n + 1), repeat=k)
    if mode == "all":
        yield from everything
    else:
        full = set(range(1, n + 1))
        yield from (f for f in everything if set(f) == full)


def enumerate_subsets(n: int, k: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Subsets of {1..n} as increasing tuples (equivalently, increasing
    words); all of them, or only the k-subsets."""
    _guard(0 <= n <= MAX_SUBSET_GROUND, f"subset ground set n={n}")
    if k is None:
        for size in range(n + 1):
            yield from combinations(range(1, n + 1), size)
    else:
        yield from combinations(range(1, n + 1), k)


def enumerate_multisets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-multisets on {1..n} as multiplicity vectors (rho(1), ..., rho(n))."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    _guard(multiset_coeff(n, k) <= MAX_MULTISET_COUNT, f"<n,k> with n={n}, k={k}")
    if n == 0:
        if k == 0:
            yield ()
        return

    def rec(slot: int, remaining: int, acc: list[int]):
        if slot == n - 1:
            acc.append(remaining)
            yield tuple(acc)
            acc.pop()
            return
        for take in range(remaining + 1):
            acc.append(take)
            yield from rec(slot + 1, remaining - take, acc)
            acc.pop()

    yield from rec(0, k, [])


def multiset_word(rho: Sequence[int]) -> str:
    """Nondecreasing word for a multiplicity vector: (2,1,3) -> "112333"."""
    letters: list[int] = []
    for i, count in enumerate(rho, start=1):
        letters.extend([i] * count)
    return as_word(letters)


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------

Block = tuple[int, ...]
Partition = tuple[Block, ...]


def enumerate_set_partitions(
    n: int,
    k: Optional[int] = None,
    type_vector: Optional[TypeVector] = None,
) -> Iterator[Partition]:
    """Set partitions of {1..n}, optionally restricted to k blocks or to a
    given type.  Blocks come out ascending and ordered by minimum."""
    _guard(0 <= n <= MAX_PARTITION_GROUND, f"partition ground set n={n}")
    if type_vector is not None and type_vector.n != n:
        raise ValueError("type vector weight differs from n")

    def rec(i: int, blocks: list[list[int]]):
        if i > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    if n == 0:
        candidates: Iterator[Partition] = iter([()])
    else:
        candidates = rec(1, [])
    for part in candidates:
        if k is not None and len(part) != k:
            continue
        if type_vector is not None and partition_type(part) != type_vector:
            continue
        yield part


def partition_type(partition: Partition) -> TypeVector:
    """The multiplicity vector recording how many blocks of each size."""
    return TypeVector.of_sizes([len(b) for b in partition]) if partition else TypeVector(0, ())


def kernel_partition(func: Sequence[int]) -> Partition:
    """Partition of the domain {1..k} grouping positions with equal values.

    The induced map block -> common value is injective by construction;
    this is asserted."""
    groups: dict[int, list[int]] = {}
    for pos, value in enumerate(func, start=1):
        groups.setdefault(value, []).append(pos)
    blocks = tuple(sorted((tuple(g) for g in groups.values()), key=lambda b: b[0]))
    assert len({func[b[0] - 1] for b in blocks}) == len(blocks)
    return blocks


# ---------------------------------------------------------------------------
# permutations and cycles
# ---------------------------------------------------------------------------

Cycle = tuple[int, ...]
CycleDecomposition = tuple[Cycle, ...]


def enumerate_permutations(
    n: int,
    cycles: Optional[int] = None,
    type_vector: Optional[TypeVector] = None,
    derangement_only: bool = False,
) -> Iterator[tuple[int, ...]]:
    """Permutations of {1..n} as image tuples, optionally filtered by
    cycle count, cycle type, or to derangements."""
    _guard(0 <= n <= MAX_PERMUTATION_GROUND, f"permutation ground set n={n}")
    if type_vector is not None and type_vector.n != n:
        raise ValueError("type vector weight differs from n")
    for perm in permutations(range(1, n + 1)):
        if derangement_only and any(perm[i - 1] == i for i in range(1, n + 1)):
            continue
        if cycles is not None or type_vector is not None:
            decomp = cycle_decompose(perm)
            if cycles is not None and len(decomp) != cycles:
                continue
            if type_vector is not None and permutation_type(perm) != type_vector:
                continue
        yield perm


def fixed_points(perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(perm) + 1) if perm[i - 1] == i)


def cycle_decompose(perm: Sequence[int]) -> CycleDecomposition:
    """Unique disjoint-cycle factorization by following the arrows of the
    permutation digraph; each cycle starts at its least element, cycles
    are ordered by least element."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..n")
    seen = [False] * (n + 1)
    out: list[Cycle] = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x - 1]
        out.append(tuple(cyc))
    return tuple(out)


def cycles_to_permutation(cycles: Sequence[Cycle], n: int) -> tuple[int, ...]:
    """Inverse of cycle_decompose: rebuild the image tuple."""
    image = [0] * (n + 1)
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            image[a] = b
    if 0 in image[1:]:
        raise ValueError("cycles do not cover 1..n")
    return tuple(image[1:])


def cycle_words(cycle: Cycle) -> tuple[str, ...]:
    """The k distinct word presentations of a k-cycle (all rotations of
    its orbit word)."""
    k = len(cycle)
    return tuple(as_word(cycle[i:] + cycle[:i]) for i in range(k))


def permutation_type(perm: Sequence[int]) -> TypeVector:
    return (
        TypeVector.of_sizes([len(c) for c in cycle_decompose(perm)])
        if perm
        else TypeVector(0, ())
    )


# ---------------------------------------------------------------------------
# Gergonne draws and menage seatings
# ---------------------------------------------------------------------------


def enumerate_gergonne(q: GergonneQuery) -> Iterator[tuple[int, ...]]:
    """All winning k-subsets for a Gergonne query: consecutive chosen
    positions at least m+1 apart (also around the wrap for circular)."""
    _guard(
        binomial(q.n, q.k) <= MAX_GERGONNE_SUBSETS,
        f"C(n,k) with n={q.n}, k={q.k}",
    )
    for subset in combinations(range(1, q.n + 1), q.k):
        ok = all(b - a >= q.m + 1 for a, b in zip(subset, subset[1:]))
        if ok and q.circular and q.k >= 2:
            ok = subset[0] + q.n - subset[-1] >= q.m + 1
        if ok:
            yield subset


def enumerate_menage(n: int) -> Iterator[tuple[int, ...]]:
    """Solutions of the reduced menage problem: women fixed in the odd
    seats, men placed by a bijection f with f(i) never i (own partner on
    her right) nor i+1 cyclically (next partner on her left)."""
    _guard(0 <= n <= MAX_MENAGE_COUPLES, f"menage couples n={n}")
    for f in permutations(range(1, n + 1)):
        if any(f[i - 1] == i or f[i - 1] == i % n + 1 for i in range(1, n + 1)):
            continue
        yield f
