"""Coefficient triangles as powers of a single series.

The binomial, multiset, and bounded-occupancy triangles are all the same
object: a biinfinite matrix whose n-th row generating series is the n-th
power of its first row.  Changing the first row (the recursion rule)
changes the physics: one ball per box, unlimited balls per box, or at
most p balls per box.
"""

from exactcomb import binomial_matrix, gentile_matrix, multiset_matrix

print("Pascal triangle: rule 1 + t")
pascal = binomial_matrix(8)
for n in range(5):
    print("  ", [pascal.entry(n, k) for k in range(n + 1)])

print("\nMultiset triangle: rule 1 + t + t^2 + ... (unlimited occupancy)")
multi = multiset_matrix(8)
for n in range(5):
    print("  ", [multi.entry(n, k) for k in range(6)])

print("\nBounded occupancy, at most 2 per box: rule 1 + t + t^2")
gentile = gentile_matrix(2, 8)
for n in range(5):
    print("  ", [gentile.entry(n, k) for k in range(2 * n + 1)])

print("\nRow 3 of each is literally rule**3:")
print("  ", pascal.row_series(3).text())
print("  ", gentile.row_series(3).text())

# Because row(i+j) = row(i) * row(j), every entry satisfies a
# convolution identity for every split of the row index.
print("\nVandermonde convolution: C(5,2) from rows 2 and 3:")
print("  sum_h C(2,h) C(3,2-h) =", pascal.vandermonde_convolve(2, 3, 2))
print("  C(5,2)                =", pascal.entry(5, 2))

print("\nBound p=1 gives exactly the binomial triangle (exclusion principle):")
g1 = gentile_matrix(1, 8)
print("  row 4, p=1   :", [g1.entry(4, k) for k in range(5)])
print("  row 4, Pascal:", [pascal.entry(4, k) for k in range(5)])
