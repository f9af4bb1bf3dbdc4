"""Row-recursive biinfinite matrices.

A matrix is determined by its recursion rule: row 0's generating series
is the constant 1, and row n's series is the rule raised to the n-th
power.  Columns are truncated at a caller-chosen order; rows are
materialized lazily (one series multiplication each) and cached forever,
which is cheap at the sizes this library targets.
"""

from __future__ import annotations

import csv
import io
import json

from .series import FormalSeries, geometric_series


class RecursiveMatrix:
    def __init__(self, rule: FormalSeries, order: int | None = None):
        if order is None:
            order = rule.order
        if order < 0:
            raise ValueError("order must be >= 0")
        self.rule = rule.truncate(order)
        self.order = order
        self._rows: dict[int, FormalSeries] = {0: FormalSeries.one(order)}

    def row_series(self, n: int) -> FormalSeries:
        """Generating series of row n: rule**n, memoized via the one-step
        recursion row(n) = rule * row(n-1)."""
        if n < 0:
            raise ValueError("row index must be >= 0")
        rows = self._rows
        if n not in rows:
            top = max(rows)
            series = rows[top]
            for m in range(top + 1, n + 1):
                series = self.rule * series
                rows[m] = series
        return rows[n]

    def entry(self, n: int, k: int) -> int:
        """M(n, k): coefficient of t^k in row n, guaranteed integral."""
        if not 0 <= k <= self.order:
            raise IndexError(f"column {k} out of range (order {self.order})")
        value = self.row_series(n).coeff_at(k)
        if value.denominator != 1:
            raise ArithmeticError(
                f"internal inconsistency: entry ({n},{k}) is non-integer {value}"
            )
        return value.numerator

    def vandermonde_convolve(self, i: int, j: int, k: int) -> int:
        """sum_h M(i,h) M(j,k-h); equals entry(i+j, k) for any split."""
        if not 0 <= k <= self.order:
            raise IndexError(f"column {k} out of range (order {self.order})")
        return sum(self.entry(i, h) * self.entry(j, k - h) for h in range(k + 1))

    # -- table dumps ---------------------------------------------------

    def table(self, rows: int, cols: int) -> list[list[int]]:
        if cols - 1 > self.order:
            raise IndexError(f"requested {cols} columns, order is {self.order}")
        return [[self.entry(n, k) for k in range(cols)] for n in range(rows)]

    def to_csv(self, rows: int, cols: int) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self.table(rows, cols):
            writer.writerow(row)
        return buf.getvalue()

    def to_json(self, rows: int, cols: int) -> str:
        # integers as decimal strings so consumers cannot lose precision
        data = [[str(v) for v in row] for row in self.table(rows, cols)]
        return json.dumps({"rows": data})


def binomial_matrix(order: int) -> RecursiveMatrix:
    """Rule 1 + t: the Pascal triangle of binomial coefficients."""
    return RecursiveMatrix(FormalSeries([1, 1]).truncate(order), order)


def multiset_matrix(order: int) -> RecursiveMatrix:
    """Rule 1 + t + t^2 + ...: multiset coefficients <n, k>."""
    return RecursiveMatrix(geometric_series(order), order)


def gentile_matrix(p: int, order: int) -> RecursiveMatrix:
    """Rule 1 + t + ... + t^p: occupancy counts with at most p per box."""
    if p < 1:
        raise ValueError("occupancy bound p must be >= 1")
    coeffs = [1 if i <= p else 0 for i in range(order + 1)]
    return RecursiveMatrix(FormalSeries(coeffs), order)
