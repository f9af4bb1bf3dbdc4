"""Posets: construction, Mobius/zeta/delta, inversion, lattices, sieve."""

import random
from fractions import Fraction

import pytest

import exactcomb.counting as ct
import exactcomb.enumeration as en
import exactcomb.number_theory as nt
import exactcomb.poset_mobius as pm
from exactcomb.exact_core import factorial
from exactcomb.verify import derangement_family, menage_family, random_poset

# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------


def chain(n):
    return pm.FinitePoset(range(n), [(i, j) for i in range(n) for j in range(i, n)])


def test_reflexive_closure_applied():
    P = pm.FinitePoset(["a", "b"], [("a", "b")])
    assert P.leq("a", "a") and P.leq("b", "b") and P.leq("a", "b")
    assert not P.leq("b", "a")


def test_antisymmetry_violation():
    with pytest.raises(pm.PosetError) as err:
        pm.FinitePoset([1, 2], [(1, 2), (2, 1)])
    assert set(err.value.witness) == {1, 2}


def test_transitivity_violation():
    with pytest.raises(pm.PosetError) as err:
        pm.FinitePoset([1, 2, 3], [(1, 2), (2, 3)])
    assert len(err.value.witness) == 3


def test_duplicate_elements_rejected():
    with pytest.raises(ValueError):
        pm.FinitePoset([1, 1], [])


def test_linear_extension_respects_order():
    rng = random.Random(2)
    for _ in range(20):
        P = random_poset(rng, rng.randint(1, 9))
        ext = P.linear_extension()
        pos = {e: i for i, e in enumerate(ext)}
        for x in P.elements:
            for y in P.up(x):
                assert pos[x] <= pos[y]


def test_json_roundtrip():
    P = pm.boolean_lattice(0)
    Q = pm.FinitePoset.from_json(chain(3).to_json())
    assert set(Q.elements) == {0, 1, 2}
    assert Q.leq(0, 2)
    assert len(P) == 1


# ---------------------------------------------------------------------------
# Mobius function
# ---------------------------------------------------------------------------


def test_mobius_two_chain():
    P = chain(2)
    mu = pm.mobius(P)
    assert mu(0, 0) == mu(1, 1) == 1
    assert mu(0, 1) == -1
    assert mu(1, 0) == 0  # incomparable direction


def test_mobius_boolean_closed_form():
    for n in range(7):
        lat = pm.boolean_lattice(n)
        mu = pm.mobius(lat)
        for a in lat.elements:
            for b in lat.up(a):
                assert mu(a, b) == (-1) ** (len(b) - len(a))
    b2 = pm.boolean_lattice(2)
    assert pm.mobius(b2)(frozenset(), frozenset({1, 2})) == 1


def test_mobius_divisor_examples():
    assert pm.mobius(pm.divisor_poset(12))(1, 12) == 0  # squared prime factor
    mu30 = pm.mobius(pm.divisor_poset(30))
    assert mu30(1, 30) == -1  # three primes
    mu12 = pm.mobius(pm.divisor_poset(12))
    assert mu12(2, 12) == mu12(1, 6) == 1


def test_mobius_divisor_matches_classical():
    for n in range(1, 501):
        assert pm.mobius(pm.divisor_poset(n))(1, n) == nt.mobius_classical(n)


def test_mobius_divisor_five_rules_to_10000():
    for n in range(1, 10_001):
        P = pm.divisor_poset(n)
        mu = pm.mobius(P)
        for d in P.elements:
            assert mu(1, d) == nt.mobius_classical(d)
    # rule: mu(m, n) only depends on the quotient
    for n in (12, 60, 360, 9240):
        P = pm.divisor_poset(n)
        mu = pm.mobius(P)
        for m in P.elements:
            for d in P.up(m):
                assert mu(m, d) == nt.mobius_classical(d // m)


def test_mobius_interval_rule_both_sides():
    # the defining sum over [x, y) and its mirror over (x, y] agree
    rng = random.Random(8)
    for _ in range(15):
        P = random_poset(rng, rng.randint(2, 9))
        mu = pm.mobius(P)
        for x in P.elements:
            for y in P.up(x):
                if x == y:
                    continue
                left = -sum(mu(x, z) for z in P.interval(x, y) if z != y)
                right = -sum(mu(z, y) for z in P.interval(x, y) if z != x)
                assert mu(x, y) == left == right


def test_zeta_and_delta_check():
    rng = random.Random(9)
    for _ in range(20):
        P = random_poset(rng, rng.randint(1, 8))
        z = pm.zeta(P)
        assert all(z(x, x) == 1 for x in P.elements)
        assert pm.delta_check(P)
    assert pm.delta_check(pm.boolean_lattice(3))


# ---------------------------------------------------------------------------
# inversion
# ---------------------------------------------------------------------------


def test_inversion_roundtrip():
    rng = random.Random(10)
    for _ in range(25):
        P = random_poset(rng, rng.randint(1, 10))
        f = {e: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for e in P.elements}
        assert pm.invert(P, pm.accumulate(P, f)) == f
        assert pm.accumulate(P, pm.invert(P, f)) == f
        assert pm.invert_dual(P, pm.accumulate_dual(P, f)) == f
        assert pm.accumulate_dual(P, pm.invert_dual(P, f)) == f


def test_delta_roundtrips_through_bottom():
    P = chain(4)
    f = {e: Fraction(1 if e == 0 else 0) for e in P.elements}
    g = pm.accumulate(P, f)  # constant 1
    assert all(v == 1 for v in g.values())
    assert pm.invert(P, g) == f


def test_surjections_via_inversion():
    # g(B) = |B|^k counts functions landing inside B; inverting on the
    # subset lattice leaves exactly the surjections at the top
    for n in range(1, 5):
        lat = pm.boolean_lattice(n)
        top = frozenset(range(1, n + 1))
        for k in range(6):
            g = {b: Fraction(len(b) ** k) for b in lat.elements}
            f = pm.invert(lat, g)
            assert f[top] == ct.surjection_count(k, n)


def test_derangements_via_dual_inversion():
    # g(A) = (4-|A|)! counts permutations fixing at least A; dual
    # inversion gives permutations fixing exactly B
    lat = pm.boolean_lattice(4)
    g = {a: Fraction(factorial(4 - len(a))) for a in lat.elements}
    f = pm.invert_dual(lat, g)
    assert f[frozenset({1})] == 2 == ct.derangement(3)
    exact1 = [
        p
        for p in en.enumerate_permutations(4)
        if en.fixed_points(p) == (1,)
    ]
    assert f[frozenset({1})] == len(exact1)
    for b in lat.elements:
        assert f[b] == ct.derangement(4 - len(b))


def test_dual_inversion_on_chain_telescopes():
    P = chain(3)
    g = {e: Fraction(5) for e in P.elements}  # constant on a chain
    f = pm.invert_dual(P, g)
    # sum over x >= y of f(x) = 5 forces f = 5 at the top, 0 below
    assert f == {0: 0, 1: 0, 2: Fraction(5)}


# ---------------------------------------------------------------------------
# lattice builders
# ---------------------------------------------------------------------------


def test_boolean_lattice_shape():
    lat = pm.boolean_lattice(3)
    assert len(lat) == 8
    assert sum(1 for a in lat.elements for _ in lat.up(a)) == 3**3
    with pytest.raises(ValueError):
        pm.boolean_lattice(17)


def test_divisor_poset_shape():
    P = pm.divisor_poset(12)
    assert P.elements == (1, 2, 3, 4, 6, 12)
    assert P.leq(2, 12) and not P.leq(4, 6)


# ---------------------------------------------------------------------------
# sieve
# ---------------------------------------------------------------------------


def test_subset_family_validation():
    with pytest.raises(ValueError):
        pm.SubsetFamily(3, [[0, 5]])
    fam = pm.SubsetFamily(4, [[0, 1], []])
    assert fam.sets == (frozenset({0, 1}), frozenset())
    back = pm.SubsetFamily.from_json(fam.to_json())
    assert back == fam


def test_sylvester_empty_family():
    fam = pm.SubsetFamily(9, [])
    assert pm.sylvester_numbers(fam) == [9]
    assert pm.sylvester_count(fam) == 9
    assert pm.jordan_counts(fam) == [9]


def test_sylvester_three_set_inclusion_exclusion():
    fam = pm.SubsetFamily(10, [{0, 1, 2, 3}, {2, 3, 4}, {3, 4, 5, 6}])
    a, b, c = (set(s) for s in fam.sets)
    s = pm.sylvester_numbers(fam)
    assert s[0] == 10
    assert s[1] == len(a) + len(b) + len(c)
    assert s[2] == len(a & b) + len(a & c) + len(b & c)
    assert s[3] == len(a & b & c)
    assert pm.sylvester_count(fam) == 10 - len(a | b | c)


def test_derangement_families():
    fam4 = derangement_family(4)
    assert pm.sylvester_numbers(fam4)[1] == 4 * factorial(3) == 24
    assert pm.sylvester_count(fam4) == 9 == ct.derangement(4)
    assert pm.jordan_counts(fam4)[1] == 8 == ct.derangement_fixed(4, 1)
    fam5 = derangement_family(5)
    assert pm.jordan_counts(fam5) == [
        ct.derangement_fixed(5, k) for k in range(6)
    ]


def test_menage_family():
    fam = menage_family(3)
    assert pm.sylvester_count(fam) == 1 == ct.touchard(3)
    fam4 = menage_family(4)
    assert pm.sylvester_count(fam4) == 2 == ct.touchard(4)


def test_jordan_on_random_families():
    rng = random.Random(31)
    for _ in range(15):
        universe = rng.randint(1, 400)
        sets = [
            frozenset(rng.sample(range(universe), rng.randint(0, universe)))
            for _ in range(rng.randint(0, 7))
        ]
        fam = pm.SubsetFamily(universe, sets)
        exact = [
            sum(1 for x in range(universe) if sum(x in s for s in sets) == m)
            for m in range(len(sets) + 1)
        ]
        assert pm.jordan_counts(fam) == exact
        assert sum(pm.jordan_counts(fam)) == universe
