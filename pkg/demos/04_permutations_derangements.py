"""Permutations through their cycles, and the 1/e rendezvous.

Every permutation factors uniquely into disjoint cycles; counting by
number of cycles, by cycle type, or by fixed points gives three classical
families, and the fixed-point-free fraction marches straight to 1/e.
"""

from fractions import Fraction

from exactcomb import cycle_count, derangement, derangement_fixed, factorial
from exactcomb.enumeration import cycle_decompose, cycle_words, enumerate_permutations

sigma = (5, 7, 4, 6, 1, 3, 8, 2)
print("sigma =", sigma)
cycles = cycle_decompose(sigma)
print("factors into cycles:", " ".join("(" + " ".join(map(str, c)) + ")"
                                       for c in cycles))
print("word presentations of the 3-cycle (2 7 8):", ", ".join(cycle_words(cycles[1])))

print("\nPermutations of a 5-set by cycle count:",
      [cycle_count(5, k) for k in range(6)], " (sums to 5! =", factorial(5), ")")

print("\nDerangement numbers by the (n-1)(d[n-2]+d[n-1]) recursion:")
print("  ", [derangement(n) for n in range(1, 9)])
print("(watch out: several published tables misprint d4..d8; the recursion")
print(" and the brute-force count below agree with each other)")
for n in (4, 5):
    brute = sum(1 for _ in enumerate_permutations(n, derangement_only=True))
    print(f"  n={n}: recursion {derangement(n)}, brute force {brute}")

print("\nExactly-k-fixed-points table for n = 6:",
      [derangement_fixed(6, k) for k in range(7)])

print("\nThe fixed-point-free fraction d_n/n! approaches 1/e = 0.3678794...")
for n in (3, 5, 8, 12):
    r = Fraction(derangement(n), factorial(n))
    print(f"  n={n:2d}: {r}  ~ {float(r):.10f}")
