#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Fraction-free determinant of sparse matrices over an integral domain.

Rows are dictionaries column -> entry. The same routine runs over Python
integers and over sympy polynomial rings; the caller passes the ring's zero
and one, an exact division and a weight used to pick small pivots.
"""

from typing import Any, Callable, Dict, List


def _exact_int_quotient(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def fraction_free_determinant(rows: List[Dict[int, Any]], size: int, zero: Any = 0, one: Any = 1,
                              exact_quotient: Callable[[Any, Any], Any] = _exact_int_quotient,
                              weight: Callable[[Any], Any] = abs) -> Any:
    """Determinant of a square sparse matrix by Bareiss elimination

    Every step picks the nonzero entry of least weight among the remaining
    rows and columns, so entries stay small on the sparse matrices that knot
    diagrams produce. All divisions are exact.

    Args:
        rows (list): size rows, each a dict column -> entry, columns 0..size-1
        size (int): Matrix dimension
        zero: Additive identity of the ring
        one: Multiplicative identity of the ring
        exact_quotient (callable): a, b -> a / b, exact
        weight (callable): Sort key for pivot choice

    Returns:
        Determinant, an element of the ring
    """
    if size == 0:
        return one
    work = [{c: v for c, v in row.items() if v != zero} for row in rows]
    pending_rows = list(range(size))
    pending_cols = set(range(size))
    previous = one
    sign = 1

    for step in range(size):
        best = None
        for position, r in enumerate(pending_rows):
            for c, v in work[r].items():
                if c in pending_cols:
                    key = (weight(v), r, c)
                    if best is None or key < best[0]:
                        best = (key, position, r, c)
        if best is None:
            return zero

        _, position, pivot_row, pivot_col = best
        # Moving the pivot row and column to the front of what remains is a
        # cyclic shift of position (resp. column rank) places
        column_rank = sum(1 for c in pending_cols if c < pivot_col)
        if (position + column_rank) % 2:
            sign = -sign
        pending_rows.pop(position)
        pending_cols.discard(pivot_col)

        pivot = work[pivot_row][pivot_col]
        if not pending_rows:
            return pivot if sign > 0 else -pivot

        pivot_entries = {c: v for c, v in work[pivot_row].items() if c in pending_cols}
        for r in pending_rows:
            row = work[r]
            factor = row.get(pivot_col, zero)
            updated = {}
            for c in set(row) | set(pivot_entries):
                if c not in pending_cols:
                    continue
                value = pivot * row.get(c, zero)
                if factor != zero:
                    value = value - factor * pivot_entries.get(c, zero)
                if value != zero:
                    updated[c] = exact_quotient(value, previous)
            work[r] = updated
        previous = pivot

    return previous
