"""Self-check suites: every identity the library claims, run end to end.

Each suite returns a list of named checks; the CLI `verify` command
prints one line per check and exits nonzero if anything failed.  The
"errata" suite pins values that are frequently misprinted in hand-typed
tables: it reports both the bad value and the one the recursions and
brute-force oracles agree on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import counting as ct
from . import enumeration as en
from . import number_theory as nt
from . import poly_identities as poly
from . import poset_mobius as pm
from .exact_core import factorial, gcd
from .recursive_matrix import binomial_matrix, gentile_matrix, multiset_matrix
from .series import FormalSeries, exp_series, geometric_series


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def _mk(checks: list[Check], name: str, ok: bool, detail: str = ""):
    checks.append(Check(name, bool(ok), detail))


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_core() -> list[Check]:
    out: list[Check] = []
    _mk(out, "factorial golden", factorial(0) == 1 and factorial(4) == 24
        and factorial(12) == 479001600)
    ok = all(factorial(n) == n * factorial(n - 1) for n in range(1, 201))
    _mk(out, "factorial recursion to 200", ok)
    _mk(out, "gcd golden", gcd(3, 20) == 1 and gcd(7, 0) == 7 and gcd(30, 210) == 30)
    rng = random.Random(11)
    ok = True
    for _ in range(200):
        a, b = rng.randint(-500, 500), rng.randint(-500, 500)
        if a == b == 0:
            continue
        g = gcd(a, b)
        ok &= g == gcd(b, a) and (g > 0) and (a % g == 0) and (b % g == 0)
    _mk(out, "gcd commutative and divides", ok)
    return out


def suite_series() -> list[Check]:
    out: list[Check] = []
    one = FormalSeries.one(4)
    a = FormalSeries([1, 2, 1, 0, 0])
    _mk(out, "unit element", one * a == a and a * one == a)
    _mk(out, "(1+t)^3 row", (FormalSeries([1, 1, 0, 0]) ** 3).to_json()
        == ["1", "3", "3", "1"])
    geo = geometric_series(5)
    prod = FormalSeries([1, -1, 0, 0, 0, 0]) * geo
    _mk(out, "(1-t) * geometric = 1", prod == FormalSeries.one(5))
    comp = exp_series(4).compose(FormalSeries([0, 2, 0, 0, 0]))
    _mk(out, "exp composed with 2t",
        [comp.coeff_at(k) for k in range(5)]
        == [1, 2, 2, Fraction(4, 3), Fraction(2, 3)])
    rng = random.Random(7)
    ok = True
    for _ in range(40):
        def rand_series():
            return FormalSeries([rng.randint(-4, 4) for _ in range(6)])
        x, y, z = rand_series(), rand_series(), rand_series()
        ok &= x * y == y * x
        ok &= (x * y) * z == x * (y * z)
        ok &= x * (y + z) == x * y + x * z
    _mk(out, "commutative/associative/distributive", ok)
    return out


def suite_matrix() -> list[Check]:
    out: list[Check] = []
    pascal = binomial_matrix(6)
    _mk(out, "Pascal rows 0..3", pascal.table(4, 5)
        == [[1, 0, 0, 0, 0], [1, 1, 0, 0, 0], [1, 2, 1, 0, 0], [1, 3, 3, 1, 0]])
    multi = multiset_matrix(6)
    _mk(out, "multiset rows 0..3", multi.table(4, 5)
        == [[1, 0, 0, 0, 0], [1, 1, 1, 1, 1], [1, 2, 3, 4, 5], [1, 3, 6, 10, 15]])
    gent = gentile_matrix(2, 6)
    _mk(out, "occupancy-bound p=2 row 3",
        [gent.entry(3, k) for k in range(7)] == [1, 3, 6, 7, 6, 3, 1])
    ok = True
    for mat, closed in (
        (pascal, ct.binomial),
        (multi, ct.multiset_coeff),
        (gent, lambda n, k: ct.gentile_coeff(2, n, k)),
    ):
        for n in range(9):
            ok &= all(mat.entry(n, k) == closed(n, k) for k in range(7))
    _mk(out, "rows match closed forms to n=8", ok)
    ok = True
    for n in range(9):
        for i in range(n + 1):
            for k in range(7):
                ok &= pascal.vandermonde_convolve(i, n - i, k) == pascal.entry(n, k)
    _mk(out, "convolutions over all splits to n=8", ok)
    return out


def suite_counting() -> list[Check]:
    out: list[Check] = []
    _mk(out, "binomial golden", ct.binomial(3, 2) == 3 and ct.binomial(6, 3) == 20
        and ct.binomial(7, 0) == 1)
    _mk(out, "row sums are powers of two",
        all(sum(ct.binomial(n, k) for k in range(n + 1)) == 2**n for n in range(21)))
    ok = True
    for n in range(7):
        for k in range(1, 7):
            total = sum(
                ct.multinomial(n, h)
                for h in _compositions_of(n, k)
            )
            ok &= total == k**n
    _mk(out, "multinomial sums are k^n", ok)
    _mk(out, "partition statistics agree",
        all(sum(ct.stirling2(n, k) for k in range(n + 1)) == ct.bell(n)
            == sum(ct.faa_di_bruno(tv) for tv in ct.iter_type_vectors(n))
            for n in range(11)))
    _mk(out, "permutation statistics agree",
        all(sum(ct.cycle_count(n, k) for k in range(n + 1)) == factorial(n)
            == sum(ct.cauchy_count(tv) for tv in ct.iter_type_vectors(n))
            for n in range(11)))
    _mk(out, "fixed-point counts sum to n!",
        all(sum(ct.derangement_fixed(n, k) for k in range(n + 1)) == factorial(n)
            for n in range(10)))
    ok = True
    lo = sum(Fraction((-1) ** h, factorial(h)) for h in range(26))
    hi = sum(Fraction((-1) ** h, factorial(h)) for h in range(27))
    for n in range(1, 19):
        # d_n/n! equals the alternating partial sum; 1/e lies between the
        # order-25 and order-26 partial sums, far past every tested n, so
        # comparing against both brackets the true distance exactly
        s_n = Fraction(ct.derangement(n), factorial(n))
        bound = Fraction(1, factorial(n + 1))
        ok &= max(abs(s_n - lo), abs(s_n - hi)) < bound
    _mk(out, "derangement ratio brackets 1/e", ok)
    _mk(out, "alternating convolution cases",
        ct.alternating_convolution(2, 2, 1) == 0
        and ct.alternating_convolution(3, 1, 2) == 1
        and ct.alternating_convolution(1, 3, 2) == 3)
    return out


def _compositions_of(n: int, k: int):
    """All ordered k-tuples of nonnegative ints summing to n."""
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions_of(n - first, k - 1):
            yield (first,) + rest


def suite_oracles() -> list[Check]:
    out: list[Check] = []
    ok = True
    for k in range(5):
        for n in range(5):
            fs = list(en.enumerate_functions(k, n))
            ok &= len(fs) == n**k
            ok &= len(list(en.enumerate_functions(k, n, "injective"))) \
                == ct.falling_factorial(n, k)
            ok &= len(list(en.enumerate_functions(k, n, "surjective"))) \
                == ct.surjection_count(k, n)
    _mk(out, "function counts", ok)
    ok = all(
        len(list(en.enumerate_subsets(n, k))) == ct.binomial(n, k)
        for n in range(9)
        for k in range(n + 2)
    )
    _mk(out, "subset counts", ok)
    ok = all(
        len(list(en.enumerate_multisets(n, k))) == ct.multiset_coeff(n, k)
        for n in range(5)
        for k in range(6)
    )
    _mk(out, "multiset counts", ok)
    ok = True
    for n in range(8):
        parts = list(en.enumerate_set_partitions(n))
        ok &= len(parts) == ct.bell(n)
        for k in range(n + 1):
            ok &= sum(1 for p in parts if len(p) == k) == ct.stirling2(n, k)
    _mk(out, "partition counts", ok)
    ok = True
    for n in range(7):
        perms = list(en.enumerate_permutations(n))
        ok &= len(perms) == factorial(n)
        for k in range(n + 1):
            ok &= sum(1 for p in perms if len(en.cycle_decompose(p)) == k) \
                == ct.cycle_count(n, k)
            ok &= sum(1 for p in perms if len(en.fixed_points(p)) == k) \
                == ct.derangement_fixed(n, k)
    _mk(out, "permutation counts", ok)
    return out


def suite_faa() -> list[Check]:
    out: list[Check] = []
    rng = random.Random(99)
    ok = True
    for _ in range(8):
        f = FormalSeries([rng.randint(-3, 3) for _ in range(7)])
        g = FormalSeries([0] + [rng.randint(-3, 3) for _ in range(6)])
        comp = f.compose(g)
        for n in range(1, 7):
            lhs = factorial(n) * comp.coeff_at(n)
            rhs = Fraction(0)
            for tv in ct.iter_type_vectors(n):
                term = Fraction(ct.faa_di_bruno(tv))
                term *= factorial(tv.block_count) * f.coeff_at(tv.block_count)
                for i, v in enumerate(tv.nu, start=1):
                    term *= (factorial(i) * g.coeff_at(i)) ** v
                rhs += term
            ok &= lhs == rhs
    _mk(out, "composite-derivative coefficients via partition types", ok)
    return out


def suite_stirling() -> list[Check]:
    out: list[Check] = []
    _mk(out, "transition matrices invert (12x12)", poly.stirling_inverse_check(12))
    ok = True
    for n in range(11):
        back = poly.power_from_falling(poly.power_to_falling(n))
        expect = poly.trim([0] * n + [1])
        ok &= back == expect
    _mk(out, "power <-> falling roundtrip", ok)
    ok = all(
        poly.rising_expansion_coeffs(n)[k] == ct.cycle_count(n, k)
        and poly.falling_expansion_coeffs(n)[k] == ct.stirling1_signed(n, k)
        for n in range(13)
        for k in range(n + 1)
    )
    _mk(out, "factorial-basis expansions match cycle counts", ok)
    return out


def suite_mobius() -> list[Check]:
    out: list[Check] = []
    ok = True
    for n in range(7):
        lat = pm.boolean_lattice(n)
        mu = pm.mobius(lat)
        ok &= all(
            mu(a, b) == (-1) ** (len(b) - len(a))
            for a in lat.elements
            for b in lat.up(a)
        )
    _mk(out, "boolean lattice closed form to n=6", ok)
    ok = all(
        pm.mobius(pm.divisor_poset(n))(1, n) == nt.mobius_classical(n)
        for n in range(1, 201)
    )
    _mk(out, "divisor poset matches classical mu to 200", ok)
    rng = random.Random(5)
    ok = True
    for _ in range(12):
        P = random_poset(rng, rng.randint(1, 8))
        ok &= pm.delta_check(P)
        f = {e: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for e in P.elements}
        ok &= pm.invert(P, pm.accumulate(P, f)) == f
        ok &= pm.invert_dual(P, pm.accumulate_dual(P, f)) == f
    _mk(out, "zeta*mu = delta and inversion roundtrips", ok)
    return out


def suite_sieve() -> list[Check]:
    out: list[Check] = []
    ok = True
    for n in range(1, 7):
        fam = derangement_family(n)
        ok &= pm.sylvester_count(fam) == ct.derangement(n)
        ok &= pm.jordan_counts(fam) == [
            ct.derangement_fixed(n, k) for k in range(n + 1)
        ]
    _mk(out, "derangement families via sieve", ok)
    rng = random.Random(21)
    ok = True
    for _ in range(10):
        universe = rng.randint(1, 300)
        sets = [
            frozenset(rng.sample(range(universe), rng.randint(0, universe)))
            for _ in range(rng.randint(0, 6))
        ]
        fam = pm.SubsetFamily(universe, sets)
        exact = [sum(1 for x in range(universe)
                     if sum(x in s for s in sets) == m)
                 for m in range(len(sets) + 1)]
        ok &= pm.jordan_counts(fam) == exact
    _mk(out, "random families: exactly-m counts by scan", ok)
    return out


def suite_gergonne() -> list[Check]:
    out: list[Check] = []
    ok = True
    for n in range(1, 11):
        for k in range(n + 1):
            for m in range(4):
                q = ct.GergonneQuery(n, k, m)
                ok &= ct.gergonne(q)[0] == len(list(en.enumerate_gergonne(q)))
    _mk(out, "linear draws match enumeration", ok)
    ok = True
    for n in range(2, 11, 2):
        for k in range(n + 1):
            q = ct.GergonneQuery(n, k, 1, circular=True)
            ok &= ct.gergonne(q)[0] == len(list(en.enumerate_gergonne(q)))
    _mk(out, "circular draws match enumeration", ok)
    return out


def suite_menage() -> list[Check]:
    out: list[Check] = []
    _mk(out, "U3=1 U4=2 U5=13",
        ct.touchard(3) == 1 and ct.touchard(4) == 2 and ct.touchard(5) == 13)
    ok = all(
        ct.touchard(n) == len(list(en.enumerate_menage(n))) for n in range(2, 6)
    )
    _mk(out, "formula matches exhaustive seating", ok)
    _mk(out, "full count is 2 n! U_n",
        all(ct.menage_count(n) == 2 * factorial(n) * ct.touchard(n)
            for n in range(2, 8)))
    return out


def suite_numbers() -> list[Check]:
    out: list[Check] = []
    _mk(out, "totient golden", nt.euler_phi(30) == 8 and nt.euler_phi(100) == 40
        and nt.euler_phi(125) == 100 and nt.euler_phi(210) == 48)
    counts = nt.totient_counts(2000)
    ok = all(nt.euler_phi(n) == counts[n] for n in range(1, 2001))
    _mk(out, "product formula vs divisor-classification count to 2000", ok)
    ok = all(nt.euler_phi(n) == nt.phi_scan(n) for n in range(1, 600))
    _mk(out, "product formula vs literal scan to 600", ok)
    _mk(out, "classical mu golden", nt.mobius_classical(6) == 1
        and nt.mobius_classical(4) == 0 and nt.mobius_classical(1) == 1)
    _mk(out, "inverse and power golden", nt.mod_inverse(3, 20) == 7
        and nt.mod_pow(19, 7, 25) == 14)
    _mk(out, "raw demo n=25", nt.mod_pow(14, 3, 25) == 19
        and nt.mod_pow(19, 7, 25) == 14)
    key = nt.rsa_keygen(5, 11, 3)
    ok = key.d == 27 and all(
        nt.mod_pow(m, key.e * key.d, key.n) == m for m in range(1, key.n)
    )
    _mk(out, "keypair (5,11,3) full roundtrip", ok)
    return out


def suite_birthday() -> list[Check]:
    out: list[Check] = []
    _mk(out, "23 people beat a coin flip",
        ct.birthday_probability(23) > Fraction(1, 2))
    _mk(out, "22 people do not",
        ct.birthday_probability(22) < Fraction(1, 2))
    _mk(out, "edge cases", ct.birthday_probability(1) == 0
        and ct.birthday_probability(400) == 1)
    return out


def suite_surjections() -> list[Check]:
    out: list[Check] = []
    ok = all(
        ct.surjection_count(k, n)
        == len(list(en.enumerate_functions(k, n, "surjective")))
        for k in range(6)
        for n in range(5)
    )
    _mk(out, "alternating sum matches filtered enumeration", ok)
    ok = True
    for n in range(1, 5):
        lat = pm.boolean_lattice(n)
        top = frozenset(range(1, n + 1))
        for k in range(5):
            g = {b: Fraction(len(b) ** k) for b in lat.elements}
            ok &= pm.invert(lat, g)[top] == ct.surjection_count(k, n)
    _mk(out, "matches inversion on the subset lattice", ok)
    return out


# pinned regressions: values that hand-typed tables often get wrong,
# asserted against recursions and brute force (the "misprint" column is
# what must NOT come back)
ERRATA = [
    ("d(4)", lambda: ct.derangement(4), 9, 6),
    ("d(5)", lambda: ct.derangement(5), 44, 32),
    ("d(6)", lambda: ct.derangement(6), 265, 190),
    ("d(7)", lambda: ct.derangement(7), 1854, 1332),
    ("d(8)", lambda: ct.derangement(8), 14833, 10654),
    ("B(7)", lambda: ct.bell(7), 877, 887),
    ("C(3,1)", lambda: ct.cycle_count(3, 1), 2, 1),
    ("C(4,2)", lambda: ct.cycle_count(4, 2), 11, 10),
]


def suite_errata() -> list[Check]:
    out: list[Check] = []
    for name, fn, good, misprint in ERRATA:
        got = fn()
        _mk(
            out,
            f"{name} = {good}",
            got == good and got != misprint,
            f"computed {got}; guarded misprint {misprint}",
        )
    oracle = {
        "d(4)": sum(1 for _ in en.enumerate_permutations(4, derangement_only=True)),
        "B(7)": len(list(en.enumerate_set_partitions(7))),
        "C(3,1)": sum(1 for _ in en.enumerate_permutations(3, cycles=1)),
        "C(4,2)": sum(1 for _ in en.enumerate_permutations(4, cycles=2)),
    }
    _mk(out, "oracle confirms pinned values",
        oracle == {"d(4)": 9, "B(7)": 877, "C(3,1)": 2, "C(4,2)": 11})
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "core": suite_core,
    "series": suite_series,
    "matrix": suite_matrix,
    "counting": suite_counting,
    "oracles": suite_oracles,
    "faa": suite_faa,
    "stirling": suite_stirling,
    "mobius": suite_mobius,
    "sieve": suite_sieve,
    "gergonne": suite_gergonne,
    "menage": suite_menage,
    "numbers": suite_numbers,
    "birthday": suite_birthday,
    "surjections": suite_surjections,
    "errata": suite_errata,
}


def run_suites(names: list[str]) -> list[tuple[str, Check]]:
    """Run the named suites ("all" expands to every suite), in order."""
    expanded: list[str] = []
    for name in names:
        if name == "all":
            expanded.extend(SUITES)
        elif name in SUITES:
            expanded.append(name)
        else:
            raise KeyError(name)
    results = []
    for name in expanded:
        for check in SUITES[name]():
            results.append((name, check))
    return results


# ---------------------------------------------------------------------------
# shared helpers for suites and tests
# ---------------------------------------------------------------------------


def random_poset(rng: random.Random, size: int) -> pm.FinitePoset:
    """A random poset on 0..size-1: random edges upward, then the
    transitive closure (which is automatically antisymmetric)."""
    up = {i: {i} for i in range(size)}
    for i in range(size - 1, -1, -1):
        for j in range(i + 1, size):
            if rng.random() < 0.35:
                up[i] |= up[j]
    pairs = [(i, j) for i in range(size) for j in up[i]]
    return pm.FinitePoset(list(range(size)), pairs)


def derangement_family(n: int) -> pm.SubsetFamily:
    """Universe: the n! permutations (indexed); set i: permutations
    fixing the point i."""
    perms = list(en.enumerate_permutations(n))
    sets = [
        frozenset(idx for idx, p in enumerate(perms) if p[i - 1] == i)
        for i in range(1, n + 1)
    ]
    return pm.SubsetFamily(len(perms), sets)


def menage_family(n: int) -> pm.SubsetFamily:
    """Universe: all n! placements of the men; the 2n forbidden events of
    the reduced menage problem (partner on either side)."""
    from itertools import permutations as iperm

    placements = list(iperm(range(1, n + 1)))
    sets = []
    for i in range(1, n + 1):  # man i' to the right of woman i
        sets.append(frozenset(idx for idx, f in enumerate(placements)
                              if f[i - 1] == i))
        nxt = i % n + 1  # man (i+1)' to the left of woman i+1
        sets.append(frozenset(idx for idx, f in enumerate(placements)
                              if f[i - 1] == nxt))
    return pm.SubsetFamily(len(placements), sets)
