"""Exact dense linear algebra over a ``Field`` and over polynomial rings.

Constant matrices are lists of lists of field elements.  Polynomial matrices
are lists of lists of ``MPoly``/``Poly`` entries.
"""

from __future__ import annotations

import random
from itertools import combinations

from .field import Field


def identity(field: Field, n: int):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(row) for row in zip(*m)]


def const_matmul(field: Field, a, b):
    norm = field.norm
    bt = transpose(b)
    return [[norm(sum(x * y for x, y in zip(row, col))) for col in bt] for row in a]


def _echelon(field: Field, m):
    """Row-reduce a copy of ``m``; return (rank, sign-adjusted pivot product)."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    norm = field.norm
    rank = 0
    det = field.one
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if pivot is None:
            det = field.zero
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            det = -det
        pv = rows[rank][col]
        det = norm(det * pv)
        inv = field.inv(pv)
        for r in range(rank + 1, nrows):
            f = rows[r][col]
            if f:
                f = norm(f * inv)
                rows[r] = [norm(x - f * y) for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank, det


def const_rank(field: Field, m) -> int:
    if not m or not m[0]:
        return 0
    return _echelon(field, m)[0]


def const_det(field: Field, m):
    n = len(m)
    if n == 0:
        return field.one
    rank, det = _echelon(field, m)
    return field.norm(det) if rank == n else field.zero


def random_const_matrix(field: Field, n: int, rng: random.Random, bound: int = 5):
    return [[field.random(rng, bound) for _ in range(n)] for _ in range(n)]


def random_invertible(field: Field, n: int, rng: random.Random, bound: int = 5):
    """Sample until the determinant is nonzero."""
    while True:
        x = random_const_matrix(field, n, rng, bound)
        if const_det(field, x):
            return x


# polynomial matrices -----------------------------------------------------


def poly_matmul(a, b):
    n, m, k = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = a[i][0] * b[0][j]
            for t in range(1, m):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def poly_det(m, one):
    """Laplace expansion along rows, memoized on the remaining column set."""
    n = len(m)
    if n == 0:
        return one
    memo = {}

    def rec(row, cols):
        if row == n:
            return one
        key = cols
        if key in memo:
            return memo[key]
        acc = None
        for pos, c in enumerate(cols):
            entry = m[row][c]
            if not entry:
                continue
            term = entry * rec(row + 1, cols[:pos] + cols[pos + 1 :])
            if pos % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = one - one
        memo[key] = acc
        return acc

    return rec(0, tuple(range(n)))


def poly_minor(m, i, j):
    return [row[:j] + row[j + 1 :] for r, row in enumerate(m) if r != i]


def poly_adjugate(m, one):
    """Classical adjugate: adj[j][i] = (-1)^(i+j) det(minor(i, j))."""
    n = len(m)
    if n == 1:
        return [[one]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cof = poly_det(poly_minor(m, i, j), one)
            adj[j][i] = -cof if (i + j) % 2 else cof
    return adj


def evaluate_matrix(m, pt):
    return [[e.evaluate(pt) for e in row] for row in m]


def principal_subsets(n: int, size: int):
    return combinations(range(n), size)
