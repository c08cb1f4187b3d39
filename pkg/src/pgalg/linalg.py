"""Exact rank of sparse rational matrices.

Rows are dicts column-key -> Fraction; keys can be anything hashable.
Plain fraction-exact Gaussian elimination, good for the desk-scale systems
in this package (tens of rows, thousands of sparse columns).
"""

from __future__ import annotations

from fractions import Fraction


def rank_of_rows(rows) -> int:
    """Rank over the rationals of the span of the given sparse rows."""
    pivots = []  # list of (pivot_key, reduced_row)
    rank = 0
    for row in rows:
        current = {k: Fraction(v) for k, v in row.items() if v}
        for key, prow in pivots:
            c = current.get(key)
            if not c:
                continue
            for k, v in prow.items():
                nv = current.get(k, Fraction(0)) - c * v
                if nv:
                    current[k] = nv
                elif k in current:
                    del current[k]
        if not current:
            continue
        pivot_key = next(iter(current))
        inv = Fraction(1) / current[pivot_key]
        reduced = {k: v * inv for k, v in current.items()}
        pivots.append((pivot_key, reduced))
        rank += 1
    return rank
