"""Determinantal and pfaffian representations of a Weierstrass cubic.

Every representation of F = -x1*x2^2 + x0^3 + alpha*x0*x1^2 + beta*x1^3 is
x0*Id + x2*N + x1*C(s, l) for an affine point (s, l) with
l^2 = s^3 + alpha*s + beta; the pfaffian ones are the block matrices built
from these.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import PointNotOnCurve
from .field import QQ, Field, GF, require_odd_prime
from .poly import Poly
from .reps import DeterminantalRep, PfaffianRep, decomposable_pfaffian, linear_matrix

NILPOTENT = ((0, 1, 0), (0, 0, 1), (0, 0, 0))


@dataclass(frozen=True)
class WeierstrassCurve:
    alpha: object
    beta: object
    field: Field = QQ

    def __post_init__(self):
        object.__setattr__(self, "alpha", self.field(self.alpha))
        object.__setattr__(self, "beta", self.field(self.beta))

    @property
    def poly(self) -> Poly:
        return weierstrass_poly(self.alpha, self.beta, self.field)

    @property
    def discriminant(self):
        """4*alpha^3 + 27*beta^2; zero flags a singular curve."""
        a, b = self.alpha, self.beta
        return self.field.norm(4 * a**3 + 27 * b**2)

    @property
    def smooth_candidate(self) -> bool:
        return bool(self.discriminant)

    def on_curve(self, s, l) -> bool:
        f = self.field
        s, l = f(s), f(l)
        return not f.norm(l * l - (s**3 + self.alpha * s + self.beta))

    def over(self, field: Field) -> "WeierstrassCurve":
        return WeierstrassCurve(field(self.alpha), field(self.beta), field)


def weierstrass_poly(alpha, beta, field: Field = QQ) -> Poly:
    a, b = field(alpha), field(beta)
    terms = {(0, 1, 2): field(-1), (3, 0, 0): field.one, (1, 2, 0): a, (0, 3, 0): b}
    return Poly(field, terms, degree=3)


def cubic_matrices(curve: WeierstrassCurve, s, l):
    """The constant matrices (M0, M1, M2): Id, C(s, l), N."""
    f = curve.field
    require_odd_prime(f)
    s, l = f(s), f(l)
    half = f.inv(f(2))
    three_quarters = f.div(f(3), f(4))
    norm = f.norm
    C = [
        [norm(s * half), l, norm(curve.alpha + three_quarters * s * s)],
        [f.zero, norm(-s), norm(-l)],
        [f(-1), f.zero, norm(s * half)],
    ]
    ident = [[f.one if i == j else f.zero for j in range(3)] for i in range(3)]
    N = [[f(v) for v in row] for row in NILPOTENT]
    return ident, C, N


def cubic_determinantal(curve: WeierstrassCurve, s, l) -> DeterminantalRep:
    if not curve.on_curve(s, l):
        raise PointNotOnCurve(f"({s}, {l}) does not satisfy l^2 = s^3 + alpha*s + beta")
    if not curve.smooth_candidate:
        warnings.warn("Weierstrass discriminant vanishes: curve is singular", stacklevel=2)
    mats = cubic_matrices(curve, s, l)
    return DeterminantalRep.build(linear_matrix(curve.field, mats), curve.poly)


def cubic_pfaffian(curve: WeierstrassCurve, s, l) -> PfaffianRep:
    return decomposable_pfaffian(cubic_determinantal(curve, s, l))


def enumerate_affine_points(curve: WeierstrassCurve, p: int | None = None):
    """All (s, l) in F_p^2 with l^2 = s^3 + alpha*s + beta."""
    if p is not None:
        curve = curve.over(GF(p))
    f = curve.field
    if not f.characteristic:
        raise ValueError("affine point enumeration needs a prime field")
    p = f.characteristic
    require_odd_prime(f, 2)
    roots: dict[int, list[int]] = {}
    for l in range(p):
        roots.setdefault(l * l % p, []).append(l)
    pts = []
    for s in range(p):
        rhs = f.norm(s**3 + curve.alpha * s + curve.beta)
        for l in roots.get(rhs, ()):
            pts.append((s, l))
    return pts


# rational points used by the QQ checks; each satisfies l^2 = s^3 + alpha*s + beta
RATIONAL_POINTS = {
    (0, 1): [(0, 1), (0, -1), (2, 3), (2, -3), (-1, 0)],
    (1, 1): [(0, 1), (0, -1)],
    (2, 3): [(-1, 0), (3, 6), (3, -6)],
}
