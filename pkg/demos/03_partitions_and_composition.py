"""Set partitions, their types, and derivatives of composite functions.

The number of partitions of an n-set with given block-size multiplicities
is exactly the coefficient that appears in the n-th derivative of f(g(t)).
Here both sides are computed independently: partitions by brute force,
derivatives by exact truncated series composition.
"""

from fractions import Fraction

from exactcomb import (
    FormalSeries,
    bell,
    faa_di_bruno,
    factorial,
    iter_type_vectors,
    stirling2,
)
from exactcomb.enumeration import enumerate_set_partitions, partition_type

n = 4
parts = list(enumerate_set_partitions(n))
print(f"The {bell(n)} partitions of a {n}-set, grouped by type:")
by_type: dict = {}
for p in parts:
    by_type.setdefault(partition_type(p), []).append(p)
for tv in iter_type_vectors(n):
    shown = by_type.get(tv, [])
    sizes = "+".join(
        str(i) for i, v in enumerate(tv.nu, start=1) for _ in range(v)
    )
    print(f"  type {sizes:>9}: {len(shown):2d} partitions"
          f"  (closed form {faa_di_bruno(tv)})")

print("\nBlock-count marginals are the Stirling numbers:",
      [stirling2(n, k) for k in range(n + 1)])

# Now the analytic side: coefficients of f(g(t)).
f = FormalSeries([0, 1, -1, 2, 0, 1])       # any f
g = FormalSeries([0, 3, 1, 0, -2, 1])       # any g with g(0) = 0
comp = f.compose(g)
print("\nn-th derivative of f(g(t)) at 0, two ways:")
for m in range(1, 6):
    via_series = factorial(m) * comp.coeff_at(m)
    via_types = Fraction(0)
    for tv in iter_type_vectors(m):
        term = Fraction(faa_di_bruno(tv))
        term *= factorial(tv.block_count) * f.coeff_at(tv.block_count)
        for i, v in enumerate(tv.nu, start=1):
            term *= (factorial(i) * g.coeff_at(i)) ** v
        via_types += term
    marker = "ok" if via_series == via_types else "MISMATCH"
    print(f"  m={m}: series {via_series}, partition sum {via_types}  [{marker}]")
