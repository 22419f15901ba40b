"""Exact matrix rank over the rationals and over prime fields."""

from __future__ import annotations

from typing import Sequence

__all__ = ["rank_rational", "rank_mod_p"]


def rank_rational(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on an integer matrix."""
    m = [list(map(int, row)) for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, rows):
            x = m[r][c]
            row = m[r]
            top = m[rank]
            for j in range(c + 1, cols):
                # exact: Bareiss guarantees divisibility by the previous pivot
                row[j] = (p * row[j] - x * top[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Rank over the prime field with ``p`` elements."""
    if p < 2:
        raise ValueError(f"{p} is not a prime")
    m = [[int(v) % p for v in row] for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][c], -1, p)
        top = [v * inv % p for v in m[rank]]
        m[rank] = top
        for r in range(rows):
            if r != rank and m[r][c]:
                x = m[r][c]
                m[r] = [(a - x * b) % p for a, b in zip(m[r], top)]
        rank += 1
        if rank == rows:
            break
    return rank
