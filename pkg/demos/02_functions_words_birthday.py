"""Functions as words, subsets as increasing words, and the birthday bet.

Counting functions between finite sets answers three questions at once
(arbitrary, injective, surjective), and the word model makes each family
something you can print and eyeball.
"""

from fractions import Fraction

from exactcomb import (
    birthday_probability,
    falling_factorial,
    surjection_count,
)
from exactcomb.enumeration import as_word, enumerate_functions, enumerate_subsets

k, n = 4, 3
funcs = list(enumerate_functions(k, n))
print(f"All {n}^{k} = {len(funcs)} functions from a {k}-set to a {n}-set, as words:")
print("  first ten:", ", ".join(as_word(f) for f in funcs[:10]), "...")

inj = list(enumerate_functions(2, 5, "injective"))
print(f"\nInjections 2 -> 5: ({5})_2 = {falling_factorial(5, 2)} = {len(inj)} of them")

sur = list(enumerate_functions(3, 2, "surjective"))
print(f"Surjections 3 -> 2: {surjection_count(3, 2)} by the alternating sum,"
      f" {len(sur)} by filtering: {', '.join(as_word(f) for f in sur)}")

print("\n3-subsets of a 5-set are increasing words:")
print("  ", ", ".join(as_word(s) for s in enumerate_subsets(5, 3)))

print("\nThe birthday bet, exactly (no floating point):")
for people in (22, 23, 32):
    p = birthday_probability(people)
    verdict = "wins" if p > Fraction(1, 2) else "loses"
    print(f"  {people} people: collision probability {float(p):.4f} "
          f"(exact {p.numerator}/{p.denominator} ... {verdict})")
