"""The generators themselves: canonical forms, counts, guards, structure maps."""

import pytest

import exactcomb.counting as ct
import exactcomb.enumeration as en
from exactcomb.exact_core import factorial


def test_function_words():
    funcs = list(en.enumerate_functions(4, 3))
    assert len(funcs) == 3**4
    assert (1, 3, 1, 2) in funcs
    assert en.as_word((1, 3, 1, 2)) == "1312"
    assert en.as_word((10, 2)) == "10,2"  # two-digit letters cannot concatenate


def test_function_modes():
    assert len(list(en.enumerate_functions(2, 3, "injective"))) == 6
    assert len(list(en.enumerate_functions(3, 2, "surjective"))) == 6
    assert list(en.enumerate_functions(0, 3)) == [()]
    with pytest.raises(ValueError):
        list(en.enumerate_functions(2, 2, "bijective"))


def test_function_counts_match_formulas():
    for k in range(5):
        for n in range(5):
            assert len(list(en.enumerate_functions(k, n))) == n**k
            assert (
                len(list(en.enumerate_functions(k, n, "injective")))
                == ct.falling_factorial(n, k)
            )
            assert (
                len(list(en.enumerate_functions(k, n, "surjective")))
                == ct.surjection_count(k, n)
            )


def test_subsets():
    assert len(list(en.enumerate_subsets(3))) == 8
    assert (1, 3, 4) in list(en.enumerate_subsets(5, 3))  # the word a1 a3 a4
    assert len(list(en.enumerate_subsets(6, 3))) == 20 == ct.binomial(6, 3)
    # increasing words are unique and sorted
    words = [en.as_word(s) for s in en.enumerate_subsets(5, 2)]
    assert len(words) == len(set(words))
    assert all(tuple(s) == tuple(sorted(s)) for s in en.enumerate_subsets(5))


def test_multisets():
    vectors = list(en.enumerate_multisets(3, 6))
    assert (2, 1, 3) in vectors
    assert en.multiset_word((2, 1, 3)) == "112333"
    assert list(en.enumerate_multisets(4, 0)) == [(0, 0, 0, 0)]
    assert len(list(en.enumerate_multisets(3, 2))) == 6 == ct.multiset_coeff(3, 2)
    # nondecreasing-word forms are exactly the sorted words
    for rho in en.enumerate_multisets(3, 4):
        word = en.multiset_word(rho)
        assert word == "".join(sorted(word))


def test_set_partitions():
    assert len(list(en.enumerate_set_partitions(4))) == 15
    assert len(list(en.enumerate_set_partitions(4, k=2))) == 7
    by_type = list(
        en.enumerate_set_partitions(4, type_vector=ct.TypeVector(4, (0, 2)))
    )
    assert len(by_type) == 3 == ct.faa_di_bruno(ct.TypeVector(4, (0, 2)))
    # canonical form: blocks ascend, ordered by minimum, and cover 1..n
    for part in en.enumerate_set_partitions(5):
        flat = sorted(x for b in part for x in b)
        assert flat == list(range(1, 6))
        assert [b[0] for b in part] == sorted(b[0] for b in part)
        assert all(list(b) == sorted(b) for b in part)


def test_permutation_filters():
    assert len(list(en.enumerate_permutations(3, cycles=1))) == 2
    assert len(list(en.enumerate_permutations(3, derangement_only=True))) == 2
    typed = list(
        en.enumerate_permutations(4, type_vector=ct.TypeVector(4, (0, 2)))
    )
    assert len(typed) == 3 == ct.cauchy_count(ct.TypeVector(4, (0, 2)))
    for n in range(7):
        perms = list(en.enumerate_permutations(n))
        assert len(perms) == factorial(n)


def test_cycle_decompose_golden():
    sigma = (5, 7, 4, 6, 1, 3, 8, 2)
    assert en.cycle_decompose(sigma) == ((1, 5), (2, 7, 8), (3, 4, 6))
    identity = tuple(range(1, 6))
    assert en.cycle_decompose(identity) == ((1,), (2,), (3,), (4,), (5,))
    # tau: 1->3, 3->2, 2->4, 4->1 is a single 4-cycle
    tau = (3, 4, 2, 1)
    decomp = en.cycle_decompose(tau)
    assert decomp == ((1, 3, 2, 4),)
    assert set(en.cycle_words(decomp[0])) == {"3241", "2413", "4132", "1324"}


def test_cycle_words_are_distinct():
    for perm in en.enumerate_permutations(6):
        for cyc in en.cycle_decompose(perm):
            words = en.cycle_words(cyc)
            assert len(set(words)) == len(cyc)


def test_cycle_recompose_roundtrip():
    for n in range(1, 9):
        for perm in en.enumerate_permutations(n):
            cycles = en.cycle_decompose(perm)
            assert en.cycles_to_permutation(cycles, n) == perm


def test_cycle_decompose_rejects_non_permutation():
    with pytest.raises(ValueError):
        en.cycle_decompose((1, 1, 3))


def test_kernel_partition():
    assert en.kernel_partition((1, 3, 1, 2)) == ((1, 3), (2,), (4,))
    assert en.kernel_partition((7, 7, 7)) == ((1, 2, 3),)
    assert en.kernel_partition((4, 2, 9)) == ((1,), (2,), (3,))


def test_kernel_partition_validates_power_identity():
    # classify all functions n -> m by kernel: each k-block kernel admits
    # (m)_k injective factor maps, giving m^n = sum_k S(n,k) (m)_k
    for n in range(1, 6):
        for m in range(1, 6):
            by_blocks: dict[int, int] = {}
            for f in en.enumerate_functions(n, m):
                k = len(en.kernel_partition(f))
                by_blocks[k] = by_blocks.get(k, 0) + 1
            for k, count in by_blocks.items():
                assert count == ct.stirling2(n, k) * ct.falling_factorial(m, k)
            assert sum(by_blocks.values()) == m**n


def test_gergonne_enumeration():
    q = ct.GergonneQuery(5, 2, 1)
    assert list(en.enumerate_gergonne(q)) == [
        (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5),
    ]
    singles = list(en.enumerate_gergonne(ct.GergonneQuery(6, 1, 3)))
    assert singles == [(i,) for i in range(1, 7)]
    circ = list(en.enumerate_gergonne(ct.GergonneQuery(8, 3, 1, circular=True)))
    assert len(circ) == 16


def test_menage_enumeration():
    assert list(en.enumerate_menage(3)) == [(3, 1, 2)]
    assert len(list(en.enumerate_menage(4))) == 2
    assert list(en.enumerate_menage(2)) == []


def test_guards():
    with pytest.raises(en.SizeGuardError):
        list(en.enumerate_functions(30, 10))
    with pytest.raises(en.SizeGuardError):
        list(en.enumerate_subsets(30))
    with pytest.raises(en.SizeGuardError):
        list(en.enumerate_multisets(40, 40))
    with pytest.raises(en.SizeGuardError):
        list(en.enumerate_set_partitions(20))
    with pytest.raises(en.SizeGuardError):
        list(en.enumerate_permutations(12))
    with pytest.raises(en.SizeGuardError):
        list(en.enumerate_menage(9))
    with pytest.raises(en.SizeGuardError):
        list(en.enumerate_gergonne(ct.GergonneQuery(40, 20, 0)))


def test_generators_are_deterministic():
    a = list(en.enumerate_set_partitions(5))
    b = list(en.enumerate_set_partitions(5))
    assert a == b
    vectors = list(en.enumerate_multisets(3, 3))
    assert vectors == sorted(vectors)  # ascending lexicographic
