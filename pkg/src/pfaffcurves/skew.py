"""Skew-symmetric polynomial matrices and their Pfaffian calculus.

Indices are 0-based internally; ``pfaffian_minor`` and the file format use
the 1-based convention of the literature.

Sign convention for the pfaffian adjoint, frozen here once: for i < j
(1-based) the entry of the adjoint is ``(-1)**(i+j) * Pf^{ij}``, and the
(j, i) entry is its negative.  With this choice ``adjoint @ S == Pf(S) * Id``
holds identically; ``tests/test_skew.py`` rederives the table from a generic
4x4 matrix.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Mapping

from .errors import DegreeMismatch, FieldMismatch, SizeLimit
from .field import Field
from .linalg import const_det, const_rank
from .poly import TERNARY, MPoly, Poly

MATCHING_ORACLE_LIMIT = 12


def adjoint_sign(i: int, j: int) -> int:
    """Sign of entry (i, j), i < j, 0-based, of the pfaffian adjoint."""
    # (-1)^{(i+1)+(j+1)} in 1-based terms equals (-1)^{i+j}
    return -1 if (i + j) % 2 else 1


class SkewPolyMatrix:
    """Even-size skew matrix with homogeneous polynomial entries.

    Only the strictly upper triangle is stored, as a map ``(i, j) -> entry``
    with ``i < j``; zero entries are omitted.
    """

    __slots__ = ("n", "field", "gens", "degree", "entries")

    def __init__(self, n: int, field: Field, entries: Mapping | None = None, degree: int | None = None, gens=TERNARY):
        if n % 2:
            raise ValueError(f"skew matrices here have even size, got {n}")
        self.n = n
        self.field = field
        self.gens = tuple(gens)
        store = {}
        for (i, j), e in (entries or {}).items():
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise IndexError(f"bad entry index {(i, j)} for size {n}")
            if i > j:
                i, j, e = j, i, -e
            if e.field != field:
                raise FieldMismatch(f"entry over {e.field}, matrix over {field}")
            if e:
                if degree is None and isinstance(e, Poly):
                    degree = e.degree
                elif isinstance(e, Poly) and e.degree != degree:
                    raise DegreeMismatch(f"entry {(i, j)} has degree {e.degree}, expected {degree}")
                store[(i, j)] = e
        self.entries = store
        self.degree = degree if degree is not None else 0

    # constructors --------------------------------------------------------

    @classmethod
    def from_dense(cls, rows, field: Field, degree=None):
        n = len(rows)
        entries = {}
        for i in range(n):
            for j in range(i + 1, n):
                entries[(i, j)] = rows[i][j]
        return cls(n, field, entries, degree)

    @classmethod
    def pencil(cls, mats, field: Field):
        """``x0*A0 + x1*A1 + x2*A2`` for constant skew matrices A0, A1, A2."""
        n = len(mats[0])
        entries = {}
        for i in range(n):
            for j in range(i + 1, n):
                coeffs = [m[i][j] for m in mats]
                if any(field(c) for c in coeffs):
                    entries[(i, j)] = Poly.linear(field, coeffs)
        return cls(n, field, entries, degree=1)

    @classmethod
    def random_linear(cls, n: int, field: Field, rng: random.Random, bound: int = 5, density: float = 1.0):
        entries = {}
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < density:
                    entries[(i, j)] = Poly.linear(field, [field.random(rng, bound) for _ in range(3)])
        return cls(n, field, entries, degree=1)

    @classmethod
    def random_constant(cls, n: int, field: Field, rng: random.Random, bound: int = 9):
        entries = {}
        for i in range(n):
            for j in range(i + 1, n):
                entries[(i, j)] = Poly.constant(field, value=field.random(rng, bound))
        return cls(n, field, entries, degree=0)

    # access --------------------------------------------------------------

    def zero_entry(self):
        if self.gens == TERNARY:
            return Poly.zero(self.field, self.degree)
        return MPoly.constant(self.field, self.gens, 0)

    def one(self):
        if self.gens == TERNARY:
            return Poly.one(self.field)
        return MPoly.constant(self.field, self.gens, 1)

    def __getitem__(self, ij):
        i, j = ij
        if i < j:
            e = self.entries.get((i, j))
        elif i > j:
            e = self.entries.get((j, i))
            e = -e if e is not None else None
        else:
            e = None
        return e if e is not None else self.zero_entry()

    def dense(self):
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def evaluate(self, pt):
        field = self.field
        vals = {k: e.evaluate(pt) for k, e in self.entries.items()}
        out = [[field.zero] * self.n for _ in range(self.n)]
        for (i, j), v in vals.items():
            out[i][j] = v
            out[j][i] = field.norm(-v)
        return out

    def map(self, fn: Callable, degree=None):
        return SkewPolyMatrix(self.n, self.field, {k: fn(e) for k, e in self.entries.items()}, degree, self.gens)

    def scale(self, s):
        return self.map(lambda e: e.scale(s), self.degree)

    def delete(self, idx) -> "SkewPolyMatrix":
        """Remove the rows and columns listed in ``idx`` (0-based)."""
        keep = [k for k in range(self.n) if k not in set(idx)]
        pos = {k: t for t, k in enumerate(keep)}
        entries = {(pos[i], pos[j]): e for (i, j), e in self.entries.items() if i in pos and j in pos}
        return SkewPolyMatrix(len(keep), self.field, entries, self.degree, self.gens)

    def linear_parts(self):
        """Constant matrices A0, A1, A2 of a linear pencil (x0*A0 + x1*A1 + x2*A2)."""
        field = self.field
        mats = [[[field.zero] * self.n for _ in range(self.n)] for _ in range(3)]
        for (i, j), e in self.entries.items():
            if e.degree != 1:
                raise DegreeMismatch("linear_parts needs degree-1 entries")
            for exps, c in e.terms.items():
                k = exps.index(1)
                mats[k][i][j] = c
                mats[k][j][i] = field.norm(-c)
        return mats

    def __eq__(self, other):
        return (
            isinstance(other, SkewPolyMatrix)
            and self.n == other.n
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __repr__(self):
        body = ", ".join(f"({i + 1},{j + 1}): {e.fmt()}" for (i, j), e in sorted(self.entries.items()))
        return f"SkewPolyMatrix(n={self.n}, {{{body}}})"


# Pfaffians ---------------------------------------------------------------


class _PfaffianCache:
    """Memoized first-row expansion keyed on the tuple of remaining indices."""

    def __init__(self, S: SkewPolyMatrix):
        self.S = S
        self.memo = {(): S.one()}

    def __call__(self, idx: tuple):
        memo = self.memo
        hit = memo.get(idx)
        if hit is not None:
            return hit
        S = self.S
        first = idx[0]
        acc = None
        for k in range(1, len(idx)):
            e = S.entries.get((first, idx[k]))
            if e is None:
                continue
            sub = self(idx[1:k] + idx[k + 1 :])
            if not sub:
                continue
            term = e * sub
            if k % 2 == 0:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = S.zero_entry()
            if S.gens == TERNARY:
                acc = Poly.zero(S.field, S.degree * len(idx) // 2)
        memo[idx] = acc
        return acc


def pfaffian(S: SkewPolyMatrix):
    """Pfaffian by recursive expansion along the first row."""
    return _PfaffianCache(S)(tuple(range(S.n)))


def pfaffian_matchings_oracle(S: SkewPolyMatrix):
    """Signed sum over all perfect matchings, computed independently of ``pfaffian``."""
    if S.n > MATCHING_ORACLE_LIMIT:
        raise SizeLimit(f"matching oracle limited to n <= {MATCHING_ORACLE_LIMIT}")
    total = None
    for matching in perfect_matchings(list(range(S.n))):
        flat = [v for pair in matching for v in pair]
        sign = permutation_sign(flat)
        term = None
        for i, j in matching:
            e = S.entries.get((i, j))
            if e is None:
                term = None
                break
            term = e if term is None else term * e
        else:
            if term is None:
                term = S.one()
            if sign < 0:
                term = -term
            total = term if total is None else total + term
    if total is None:
        if S.gens == TERNARY:
            return Poly.zero(S.field, S.degree * S.n // 2)
        return S.zero_entry()
    return total


def perfect_matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        for tail in perfect_matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, partner)] + tail


def permutation_sign(perm) -> int:
    inversions = sum(1 for a, b in combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def pfaffian_minor(S: SkewPolyMatrix, i: int, j: int, _cache: _PfaffianCache | None = None):
    """Pf^{ij}: Pfaffian after deleting rows/columns i and j (1-based, i < j)."""
    if not (1 <= i < j <= S.n):
        raise IndexError(f"need 1 <= i < j <= {S.n}, got ({i}, {j})")
    cache = _cache or _PfaffianCache(S)
    return cache(tuple(k for k in range(S.n) if k not in (i - 1, j - 1)))


def pfaffian_adjoint(S: SkewPolyMatrix) -> SkewPolyMatrix:
    """Skew matrix of signed pfaffian minors with ``adj @ S == Pf(S) * Id``."""
    cache = _PfaffianCache(S)
    entries = {}
    for i in range(S.n):
        for j in range(i + 1, S.n):
            minor = pfaffian_minor(S, i + 1, j + 1, cache)
            entries[(i, j)] = minor if adjoint_sign(i, j) > 0 else -minor
    k = S.n // 2
    return SkewPolyMatrix(S.n, S.field, entries, S.degree * (k - 1), S.gens)


def skew_matmul(a: SkewPolyMatrix, b: SkewPolyMatrix):
    """Dense product of two skew polynomial matrices (result is not skew)."""
    n = a.n
    da, db = a.dense(), b.dense()
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for t in range(n):
                x, y = da[i][t], db[t][j]
                if x and y:
                    acc = x * y if acc is None else acc + x * y
            if acc is None:
                acc = Poly.zero(a.field, a.degree + b.degree) if a.gens == TERNARY else a.zero_entry()
            row.append(acc)
        out.append(row)
    return out


def is_scalar_identity(m, value) -> bool:
    """True iff ``m`` equals ``value * Id`` exactly."""
    n = len(m)
    for i in range(n):
        for j in range(n):
            e = m[i][j]
            if i == j:
                if e != value:
                    return False
            elif e:
                return False
    return True


def congruence(X, S: SkewPolyMatrix) -> SkewPolyMatrix:
    """X S X^t for a constant square matrix X."""
    n = S.n
    if len(X) != n or any(len(r) != n for r in X):
        raise ValueError(f"congruence needs a {n}x{n} matrix")
    field = S.field
    X = [[field(v) for v in row] for row in X]
    dense = S.dense()
    # T = S X^t, then X T
    T = [[None] * n for _ in range(n)]
    for k in range(n):
        for j in range(n):
            acc = None
            for l in range(n):
                c = X[j][l]
                e = dense[k][l]
                if c and e:
                    term = e.scale(c)
                    acc = term if acc is None else acc + term
            T[k][j] = acc
    entries = {}
    for i in range(n):
        for j in range(i + 1, n):
            acc = None
            for k in range(n):
                c, e = X[i][k], T[k][j]
                if c and e is not None and e:
                    term = e.scale(c)
                    acc = term if acc is None else acc + term
            if acc is not None and acc:
                entries[(i, j)] = acc
    return SkewPolyMatrix(n, field, entries, S.degree, S.gens)


def rank_at_point(S: SkewPolyMatrix, pt) -> int:
    return const_rank(S.field, S.evaluate(pt))


def det_at_point(S: SkewPolyMatrix, pt):
    return const_det(S.field, S.evaluate(pt))
