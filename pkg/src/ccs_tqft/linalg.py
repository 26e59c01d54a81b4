"""Exact rank via fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence[Fraction | int]]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        m = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * m) for x in fr])
    return out


def rank_exact(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank of a rational matrix. Each row is scaled to integers first, which
    leaves the rank unchanged; all later arithmetic stays in the integers."""
    a = _integer_rows(rows)
    if not a or not a[0]:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, n_rows):
            f = a[r][col]
            for c in range(col, n_cols):
                # exact by the Sylvester identity
                a[r][c] = (p * a[r][c] - f * a[rank][c]) // prev
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank
