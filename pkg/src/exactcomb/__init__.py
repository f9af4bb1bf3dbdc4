"""exactcomb: exact enumerative combinatorics with built-in cross-checks.

Counting formulas and recursions, truncated generating series,
row-recursive matrices, polynomial bases, Mobius inversion on finite
posets, sieve counting, elementary number theory with a toy RSA cycle,
and brute-force enumerators that everything is validated against.
"""

from .counting import (
    GergonneQuery,
    TypeVector,
    alternating_convolution,
    bell,
    binomial,
    birthday_probability,
    cauchy_count,
    cycle_count,
    derangement,
    derangement_fixed,
    faa_di_bruno,
    falling_factorial,
    gentile_coeff,
    gergonne,
    graph_count,
    iter_type_vectors,
    lower_bound_solutions,
    menage_count,
    multinomial,
    multiset_coeff,
    rising_factorial,
    stirling1_signed,
    stirling2,
    surjection_count,
    touchard,
)
from .exact_core import ExactInt, ExactRat, factorial, gcd
from .poset_mobius import (
    FinitePoset,
    IncidenceFunction,
    PosetError,
    SubsetFamily,
    accumulate,
    accumulate_dual,
    boolean_lattice,
    delta_check,
    divisor_poset,
    invert,
    invert_dual,
    jordan_counts,
    mobius,
    sylvester_count,
    sylvester_numbers,
    zeta,
)
from .recursive_matrix import (
    RecursiveMatrix,
    binomial_matrix,
    gentile_matrix,
    multiset_matrix,
)
from .series import FormalSeries, exp_series, geometric_series

__version__ = "0.1.0"

__all__ = [
    "ExactInt",
    "ExactRat",
    "factorial",
    "gcd",
    "FormalSeries",
    "geometric_series",
    "exp_series",
    "RecursiveMatrix",
    "binomial_matrix",
    "multiset_matrix",
    "gentile_matrix",
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
    "FinitePoset",
    "IncidenceFunction",
    "PosetError",
    "SubsetFamily",
    "mobius",
    "zeta",
    "delta_check",
    "accumulate",
    "accumulate_dual",
    "invert",
    "invert_dual",
    "boolean_lattice",
    "divisor_poset",
    "sylvester_numbers",
    "sylvester_count",
    "jordan_counts",
]
