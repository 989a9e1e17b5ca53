"""Pfaffian and determinantal representations of plane curves.

A pfaffian representation of a degree-d curve F is a 2d x 2d skew matrix of
linear forms A = x0*A0 + x1*A1 + x2*A2 with Pf(A) = c*F, c != 0.  A
determinantal one is a d x d matrix of linear forms M with det(M) = c*F.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .errors import (
    BudgetExhausted,
    DegenerateRep,
    DegreeMismatch,
    NonlinearQuotient,
    NotARepresentation,
    SampleNotOnCurve,
)
from .field import Field, GF
from .linalg import const_det, const_rank, evaluate_matrix, poly_adjugate, poly_det, poly_matmul, random_invertible
from .poly import Poly, curve_points, projective_plane
from .skew import (
    SkewPolyMatrix,
    _PfaffianCache,
    congruence,
    pfaffian,
    pfaffian_adjoint,
    pfaffian_minor,
    rank_at_point,
)


def scale_between(target: Poly, multiple: Poly):
    """The unique c with ``multiple == c * target``, or None."""
    if target.is_zero():
        raise ValueError("target polynomial is zero")
    exps, lead = target.leading_term()
    c = multiple.field.div(multiple.coefficient(exps), lead)
    if c and multiple == target.scale(c):
        return c
    return None


def decomposable_sign(d: int) -> int:
    """Pf([[0, M], [-M^t, 0]]) = decomposable_sign(d) * det(M) for d x d blocks."""
    return -1 if (d * (d - 1) // 2) % 2 else 1


# representation types ----------------------------------------------------


@dataclass(frozen=True)
class PfaffianRep:
    matrix: SkewPolyMatrix
    curve: Poly
    scale: object

    @property
    def size(self) -> int:
        return self.matrix.n

    @property
    def field(self) -> Field:
        return self.matrix.field

    def parts(self):
        """The constant skew matrices A0, A1, A2."""
        return self.matrix.linear_parts()

    @classmethod
    def build(cls, matrix: SkewPolyMatrix, curve: Poly) -> "PfaffianRep":
        return cls(matrix, curve, verify_pfaffian(matrix, curve))


@dataclass(frozen=True)
class DeterminantalRep:
    matrix: tuple
    curve: Poly
    scale: object

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def field(self) -> Field:
        return self.curve.field

    def parts(self):
        field = self.field
        d = self.size
        mats = [[[field.zero] * d for _ in range(d)] for _ in range(3)]
        for i, row in enumerate(self.matrix):
            for j, e in enumerate(row):
                for exps, c in e.terms.items():
                    mats[exps.index(1)][i][j] = c
        return mats

    def evaluate(self, pt):
        return evaluate_matrix(self.matrix, pt)

    @classmethod
    def build(cls, matrix, curve: Poly) -> "DeterminantalRep":
        matrix = tuple(tuple(row) for row in matrix)
        return cls(matrix, curve, verify_determinantal(matrix, curve))


def linear_matrix(field: Field, mats):
    """``x0*M0 + x1*M1 + x2*M2`` as a list of rows of linear forms."""
    d = len(mats[0])
    return [[Poly.linear(field, [m[i][j] for m in mats]) for j in range(d)] for i in range(d)]


# verification ------------------------------------------------------------


def verify_pfaffian(A: SkewPolyMatrix, F: Poly):
    """Return c with Pf(A) = c*F exactly."""
    if F.is_zero():
        raise NotARepresentation("target curve is the zero polynomial")
    if A.n != 2 * F.degree:
        raise NotARepresentation(f"size {A.n} does not match curve degree {F.degree}")
    if A.entries and A.degree != 1:
        raise DegreeMismatch(f"pfaffian representations are linear, got entry degree {A.degree}")
    P = pfaffian(A)
    if P.is_zero():
        raise DegenerateRep("Pf A vanishes identically")
    c = scale_between(F, P)
    if c is None:
        raise NotARepresentation(f"Pf A = {P.fmt()} is not a multiple of {F.fmt()}")
    return c


def verify_determinantal(M, F: Poly):
    """Return c with det(M) = c*F exactly."""
    if F.is_zero():
        raise NotARepresentation("target curve is the zero polynomial")
    if len(M) != F.degree:
        raise NotARepresentation(f"size {len(M)} does not match curve degree {F.degree}")
    D = poly_det([list(r) for r in M], Poly.one(F.field))
    if D.is_zero():
        raise DegenerateRep("det M vanishes identically")
    c = scale_between(F, D)
    if c is None:
        raise NotARepresentation(f"det M = {D.fmt()} is not a multiple of {F.fmt()}")
    return c


def decomposable_matrix(M) -> SkewPolyMatrix:
    """The skew block matrix [[0, M], [-M^t, 0]]."""
    d = len(M)
    field = M[0][0].field
    entries = {(i, d + j): M[i][j] for i in range(d) for j in range(d) if M[i][j]}
    return SkewPolyMatrix(2 * d, field, entries, degree=1)


def decomposable_pfaffian(rep: DeterminantalRep) -> PfaffianRep:
    A = decomposable_matrix(rep.matrix)
    c = verify_pfaffian(A, rep.curve)
    return PfaffianRep(A, rep.curve, c)


def matrix_adjugate(rep: DeterminantalRep):
    """d x d matrix of degree-(d-1) forms with adj(M) @ M = det(M) * Id."""
    return poly_adjugate([list(r) for r in rep.matrix], Poly.one(rep.field))


# section matrices and the inverse construction ---------------------------


@dataclass(frozen=True)
class SectionMatrix:
    """Skew matrix B of degree-(d-1) forms attached to a curve of degree d."""

    matrix: SkewPolyMatrix
    curve: Poly

    def ranks_at(self, points):
        return [rank_at_point(self.matrix, pt) for pt in points]


def section_matrix_from_determinantal(rep: DeterminantalRep) -> SectionMatrix:
    """Section matrix built from adj(M).

    The block layout is ``sign * [[0, -adj(M)^t], [adj(M), 0]]``, which is
    exactly the pfaffian adjoint of the decomposable representation.
    """
    d = rep.size
    adj = matrix_adjugate(rep)
    sign = decomposable_sign(d)
    entries = {}
    for i in range(d):
        for j in range(d):
            e = adj[j][i]  # (adj^t)[i][j]
            if e:
                entries[(i, d + j)] = -e if sign > 0 else e
    B = SkewPolyMatrix(2 * d, rep.field, entries, degree=d - 1)
    return SectionMatrix(B, rep.curve)


def representation_from_B(section: SectionMatrix) -> PfaffianRep:
    """A = adjoint(B) / F^(d-2), verified as a pfaffian representation."""
    B, F = section.matrix, section.curve
    d = F.degree
    if B.n != 2 * d:
        raise NotARepresentation(f"section matrix of size {B.n} for a curve of degree {d}")
    divisor = F ** (d - 2)
    cache = _PfaffianCache(B)
    entries = {}
    for i in range(B.n):
        for j in range(i + 1, B.n):
            minor = pfaffian_minor(B, i + 1, j + 1, cache)
            q = minor.exact_div(divisor)
            if q and q.degree != 1:
                raise NonlinearQuotient(f"entry ({i + 1},{j + 1}) has degree {q.degree}")
            if q:
                entries[(i, j)] = q if (i + j) % 2 == 0 else -q
    A = SkewPolyMatrix(B.n, B.field, entries, degree=1)
    return PfaffianRep(A, F, verify_pfaffian(A, F))


# pointwise checks --------------------------------------------------------


@dataclass
class CorankReport:
    size: int
    coranks: list = dc_field(default_factory=list)
    flagged: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.flagged


def _require_on_curve(F: Poly, pt):
    if F.evaluate(pt):
        raise SampleNotOnCurve(f"{pt} is not on {F.fmt()}")


def corank_profile(rep: PfaffianRep, samples) -> CorankReport:
    report = CorankReport(rep.size)
    for pt in samples:
        _require_on_curve(rep.curve, pt)
        k = rep.size - rank_at_point(rep.matrix, pt)
        report.coranks.append(k)
        if k != 2:
            report.flagged.append((pt, k))
    return report


def signed_minors(A: SkewPolyMatrix):
    """dPf/da_ij for i < j: (-1)^(i+j+1) Pf^{ij} (1-based), the gradient convention."""
    cache = _PfaffianCache(A)
    out = {}
    for i in range(A.n):
        for j in range(i + 1, A.n):
            m = pfaffian_minor(A, i + 1, j + 1, cache)
            out[(i, j)] = m if (i + j) % 2 else -m
    return out


def _gradient_terms(rep: PfaffianRep):
    minors = signed_minors(rep.matrix)
    parts = rep.parts()
    field = rep.field
    sums = []
    for k in range(3):
        acc = Poly.zero(field, rep.curve.degree - 1)
        for (i, j), m in minors.items():
            a = parts[k][i][j]
            if a:
                acc = acc + m.scale(a)
        sums.append(acc)
    return sums


def gradient_identity_check(rep: PfaffianRep, pt) -> bool:
    """dF/dx_k(pt) == (1/c) * sum_{i<j} a_ij^k Pf^{ij}(pt) for k = 0, 1, 2."""
    _require_on_curve(rep.curve, pt)
    field = rep.field
    inv_c = field.inv(rep.scale)
    for k, s in enumerate(_gradient_terms(rep)):
        lhs = rep.curve.partial(k).evaluate(pt)
        if lhs != field.norm(s.evaluate(pt) * inv_c):
            return False
    return True


def gradient_identity_symbolic(rep: PfaffianRep) -> bool:
    """The gradient identity as a polynomial identity in x."""
    return all(
        s == rep.curve.partial(k).scale(rep.scale) for k, s in enumerate(_gradient_terms(rep))
    )


def random_equivalence(rep: PfaffianRep, seed=None, identity=False):
    """Apply A -> X A X^t for an invertible X drawn from ``seed``."""
    field = rep.field
    n = rep.size
    if identity:
        X = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    else:
        X = random_invertible(field, n, random.Random(seed), bound=3)
    A2 = congruence(X, rep.matrix)
    detX = const_det(field, X)
    return PfaffianRep(A2, rep.curve, verify_pfaffian(A2, rep.curve)), X, detX


def sample_curve_points(F: Poly, field: Field, count: int | None = None, rng=None):
    """F_p-points of F (exhaustive), optionally subsampled."""
    pts = curve_points(F.reduce_mod(field) if F.field != field else F, field)
    if count is not None and len(pts) > count:
        rng = rng or random.Random(0)
        pts = rng.sample(pts, count)
    return pts


def adjugate_rank_at(adj, pt, field) -> int:
    return const_rank(field, evaluate_matrix(adj, pt))


def adjugate_identity(rep: DeterminantalRep, adj) -> bool:
    M = [list(r) for r in rep.matrix]
    D = rep.curve.scale(rep.scale)
    d = rep.size
    for prod in (poly_matmul(adj, M), poly_matmul(M, adj)):
        for i in range(d):
            for j in range(d):
                if prod[i][j] != (D if i == j else 0):
                    return False
    return True


# smoothness --------------------------------------------------------------


@dataclass
class SmoothnessVerdict:
    prime: int
    points_scanned: int
    singular_point: tuple | None

    @property
    def smooth(self) -> bool:
        return self.singular_point is None

    def describe(self) -> str:
        if self.singular_point is None:
            return f"no F_{self.prime}-rational singular points found"
        return f"singular point {self.singular_point} over F_{self.prime}"


def smoothness_probe(F: Poly, primes, exhaustive: bool = True, budget: int = 2_000_000):
    """Scan P^2(F_p) for common zeros of F and its three partials."""
    if F.is_zero():
        raise ValueError("zero polynomial")
    verdicts = []
    for p in primes:
        npts = p * p + p + 1
        if npts > budget:
            raise BudgetExhausted(f"P^2(F_{p}) has {npts} points, budget {budget}")
        field = GF(p)
        G = F.reduce_mod(field)
        system = [G] + [g for g in G.gradient() if g]
        witness = None
        for pt in projective_plane(field):
            if all(not g.evaluate(pt) for g in system):
                witness = pt
                break
        verdicts.append(SmoothnessVerdict(p, npts, witness))
    return verdicts
