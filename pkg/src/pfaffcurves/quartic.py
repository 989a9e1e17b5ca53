"""Pfaffian representations of the genus-3 quartic x^4 - y*z^3 - y^4.

Every representation can be brought to the 8x8 skew form

    A = x*X + z*Z + y*C,

with fixed anti-diagonal patterns X, Z and a matrix C of 28 parameters c_ij.
Comparing Pf(A) with the quartic fixes seven c_ij; an equivalence action
removes nine more, leaving 12 parameters subject to three residual equations
and a three-parameter action (a, e, p).  The module regenerates all of this
symbolically and samples the residual variety over prime fields.
"""

from __future__ import annotations

import functools
import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Mapping

import numpy as np

from .errors import (
    EliminationFailed,
    InsufficientSamples,
    InvalidGroupElement,
    MissingParameter,
    NoSolutionFound,
    UnsupportedField,
    WrongCount,
)
from .field import QQ, Field, GF
from .linalg import const_rank
from .poly import MPoly, Poly, TERNARY, parse_mpoly
from .skew import SkewPolyMatrix, pfaffian

SIZE = 8
XYZ = ("x", "y", "z")
ALL_KEYS = tuple(f"c{i}{j}" for i in range(1, 9) for j in range(i + 1, 9))
GENS = XYZ + ALL_KEYS

X_PATTERN = ((1, 8), (2, 7), (3, 6), (4, 5))
Z_PATTERN = ((1, 7), (2, 6), (3, 5))

# (target, monomial x^a y^b z^c whose coefficient is solved for it), in order
ELIMINATION_ORDER = (
    ("c48", (0, 1, 3)),
    ("c47", (1, 1, 2)),
    ("c37", (2, 1, 1)),
    ("c27", (3, 1, 0)),
    ("c17", (0, 2, 2)),
    ("c16", (1, 2, 1)),
    ("c15", (2, 2, 0)),
)
SOLVED_KEYS = tuple(t for t, _ in ELIMINATION_ORDER)

# parameters set to zero by the equivalence action
REDUCED_ZEROS = ("c14", "c18", "c24", "c28", "c34", "c38", "c58", "c68", "c78")
REDUCED_KEYS = ("c12", "c13", "c23", "c25", "c26", "c35", "c36", "c45", "c46", "c56", "c57", "c67")
SCAN_KEYS = ("c56", "c57", "c67")
OUTER_KEYS = tuple(k for k in REDUCED_KEYS if k not in SCAN_KEYS)


def key(i: int, j: int) -> str:
    return f"c{i}{j}"


def frame_matrices():
    """The constant 8x8 skew matrices multiplying x and z (0/1 entries)."""
    mats = []
    for pattern in (X_PATTERN, Z_PATTERN):
        m = [[0] * SIZE for _ in range(SIZE)]
        for i, j in pattern:
            m[i - 1][j - 1] = 1
            m[j - 1][i - 1] = -1
        mats.append(m)
    return tuple(mats)


def quartic_curve(field: Field = QQ) -> Poly:
    """x^4 - y*z^3 - y^4 in x0, x1, x2."""
    return Poly(field, {(4, 0, 0): 1, (0, 1, 3): -1, (0, 4, 0): -1}, degree=4)


# parameters and group elements ------------------------------------------


@dataclass(frozen=True)
class QuarticParams:
    values: Mapping[str, object]
    mode: str = "reduced"
    field: Field = QQ

    def __post_init__(self):
        if self.mode not in ("reduced", "full"):
            raise ValueError(f"unknown mode {self.mode!r}")
        keys = REDUCED_KEYS if self.mode == "reduced" else ALL_KEYS
        missing = [k for k in keys if k not in self.values]
        if missing:
            raise MissingParameter(f"missing parameters: {', '.join(missing)}")
        extra = set(self.values) - set(keys)
        if extra:
            raise MissingParameter(f"unexpected parameters for {self.mode} mode: {sorted(extra)}")
        object.__setattr__(self, "values", {k: self.field(self.values[k]) for k in keys})

    def __getitem__(self, k):
        return self.values[k]

    def vector(self):
        keys = REDUCED_KEYS if self.mode == "reduced" else ALL_KEYS
        return [self.values[k] for k in keys]

    def __eq__(self, other):
        return (
            isinstance(other, QuarticParams)
            and self.mode == other.mode
            and self.field == other.field
            and dict(self.values) == dict(other.values)
        )

    def __hash__(self):
        return hash((self.mode, tuple(self.vector())))

    @classmethod
    def random(cls, field: Field, rng: random.Random, mode="reduced", bound=5):
        keys = REDUCED_KEYS if mode == "reduced" else ALL_KEYS
        return cls({k: field.random(rng, bound) for k in keys}, mode, field)


@dataclass(frozen=True)
class GroupElement:
    a: object
    e: object
    p: object

    def validated(self, field: Field):
        a, e, p = field(self.a), field(self.e), field(self.p)
        if not p:
            raise InvalidGroupElement("p must be nonzero")
        if not field.norm(a - e):
            raise InvalidGroupElement("a and e must differ")
        return a, e, p

    @classmethod
    def random(cls, field: Field, rng: random.Random, bound=5):
        while True:
            a, e, p = (field.random(rng, bound) for _ in range(3))
            if p and field.norm(a - e):
                return cls(a, e, p)


# symbolic core -----------------------------------------------------------


def _ring(field=QQ):
    var = functools.partial(MPoly.variable, field, GENS)
    return {g: var(g) for g in GENS}


def symbolic_canonical(field: Field = QQ, y_entries: Mapping | None = None) -> SkewPolyMatrix:
    """x*X + z*Z + y*C with symbolic or supplied y-coefficients (MPoly entries)."""
    v = _ring(field)
    X, Z = frame_matrices()
    entries = {}
    for i in range(SIZE):
        for j in range(i + 1, SIZE):
            k = key(i + 1, j + 1)
            c = v[k] if y_entries is None else y_entries[k]
            e = v["y"] * c
            if X[i][j]:
                e = e + v["x"]
            if Z[i][j]:
                e = e + v["z"]
            entries[(i, j)] = e
    return SkewPolyMatrix(SIZE, field, entries, gens=GENS)


def _quartic_in_gens(field=QQ) -> MPoly:
    v = _ring(field)
    return v["x"] ** 4 - v["y"] * v["z"] ** 3 - v["y"] ** 4


@dataclass(frozen=True)
class LinearRelations:
    """Substitutions target -> polynomial in the remaining c_ij, in solving order."""

    relations: tuple
    residuals: Mapping
    vanished: tuple

    def as_dict(self):
        return dict(self.relations)

    def format(self):
        return [f"{t} = {expr_fmt(e)}" for t, e in self.relations]


def _to_params_ring(f: MPoly, keys=ALL_KEYS) -> MPoly:
    return f.change_gens(keys)


def expr_fmt(f: MPoly) -> str:
    return _to_params_ring(f).fmt()


@functools.lru_cache(maxsize=None)
def derive_linear_relations() -> LinearRelations:
    """Solve Pf(A) = x^4 - y*z^3 - y^4 for c48, c47, c37, c27, c17, c16, c15.

    Each target must appear in its coefficient equation linearly with a unit
    coefficient once earlier solutions are substituted.  The remaining
    coefficient equations are returned as residuals keyed by monomial.
    """
    A = symbolic_canonical(QQ)
    diff = pfaffian(A) - _quartic_in_gens(QQ)
    coeffs = {m: c for m, c in diff.split(XYZ).items() if c}
    solved = []
    for target, mono in ELIMINATION_ORDER:
        eq = coeffs.get(mono)
        if eq is None:
            raise EliminationFailed(f"no coefficient equation at monomial {mono}")
        for t, expr in solved:
            eq = eq.compose(t, expr)
        if eq.degree_in(target) != 1:
            raise EliminationFailed(f"{target} is not linear in the {mono} coefficient")
        lin = eq.coefficient_of_power(target, 1)
        if not lin.is_constant() or lin.constant_value() not in (1, -1):
            raise EliminationFailed(f"{target} has non-unit coefficient {expr_fmt(lin)}")
        rest = eq.coefficient_of_power(target, 0)
        expr = rest.scale(-QQ.inv(lin.constant_value()))
        solved.append((target, expr))
    # fold earlier solutions into later ones so each relation is in free parameters only
    final = []
    for idx, (t, expr) in enumerate(solved):
        for t2, e2 in solved[:idx]:
            expr = expr.compose(t2, e2)
        final.append((t, expr))
    residuals = {}
    vanished = []
    solved_monos = {m for _, m in ELIMINATION_ORDER}
    for mono, eq in coeffs.items():
        for t, expr in final:
            eq = eq.compose(t, expr)
        if mono in solved_monos:
            if eq:
                raise EliminationFailed(f"solved equation at {mono} does not vanish")
            continue
        if eq:
            residuals[mono] = eq
        else:
            vanished.append(mono)
    return LinearRelations(tuple(final), residuals, tuple(sorted(vanished)))


@functools.lru_cache(maxsize=None)
def reduced_y_entries():
    """The y-matrix of the 12-parameter form, entries as MPoly in the 12 keys."""
    rel = derive_linear_relations().as_dict()
    zero = {k: 0 for k in REDUCED_ZEROS}
    out = {}
    for k in ALL_KEYS:
        if k in REDUCED_ZEROS:
            f = MPoly.constant(QQ, REDUCED_KEYS, 0)
        elif k in rel:
            f = rel[k].substitute(zero).change_gens(REDUCED_KEYS)
        else:
            f = MPoly.variable(QQ, REDUCED_KEYS, k)
        out[k] = f
    return out


def y_matrix(params: QuarticParams):
    """Concrete 8x8 y-coefficient matrix (upper entries) for the given parameters."""
    f = params.field
    if params.mode == "full":
        return dict(params.values)
    vals = params.vector()
    return {k: e.reduce_mod(f).evaluate(vals) for k, e in reduced_y_entries().items()}


def assemble_canonical(params: QuarticParams) -> SkewPolyMatrix:
    """A(x, y, z) = x*X + z*Z + y*C(params) as a linear ternary skew matrix."""
    field = params.field
    X, Z = frame_matrices()
    Y = y_matrix(params)
    entries = {}
    for i in range(SIZE):
        for j in range(i + 1, SIZE):
            coeffs = (X[i][j], Y[key(i + 1, j + 1)], Z[i][j])
            if any(field(c) for c in coeffs):
                entries[(i, j)] = Poly.linear(field, coeffs)
    return SkewPolyMatrix(SIZE, field, entries, degree=1)


@functools.lru_cache(maxsize=None)
def _residual_system_qq():
    rel = derive_linear_relations()
    zero = {k: 0 for k in REDUCED_ZEROS}
    eqs = []
    for mono in sorted(rel.residuals, reverse=True):
        eq = rel.residuals[mono].substitute(zero).change_gens(REDUCED_KEYS)
        if eq:
            eqs.append((mono, eq))
    return tuple(eqs)


def residual_system(field: Field = QQ, check_independence: bool = True):
    """The three equations left on the 12 parameters, as (monomial, MPoly) pairs.

    The polynomial is the coefficient of that x,y,z monomial in
    Pf(A) - (x^4 - y*z^3 - y^4).
    """
    eqs = _residual_system_qq()
    if len(eqs) != 3:
        raise WrongCount(f"expected 3 residual equations, found {len(eqs)}")
    if check_independence:
        rng = random.Random(20240611)
        F = GF(10007)
        pt = [F.random(rng) for _ in REDUCED_KEYS]
        if jacobian_rank([e.reduce_mod(F) for _, e in eqs], pt, F) != 3:
            raise WrongCount("residual equations are not independent")
    if field != QQ:
        return tuple((m, e.reduce_mod(field)) for m, e in eqs)
    return eqs


def residual_values(params: QuarticParams):
    vals = params.vector()
    return [e.evaluate(vals) for _, e in residual_system(params.field, check_independence=False)]


def is_solution(params: QuarticParams) -> bool:
    return not any(residual_values(params))


# group action and invariants ---------------------------------------------


def apply_group_action(params: QuarticParams, g: GroupElement) -> QuarticParams:
    """The (a, e, p) parameter map on the 12-parameter form."""
    if params.mode != "reduced":
        raise ValueError("the action is defined on reduced parameters")
    F = params.field
    a, e, p = g.validated(F)
    c = params.values
    c12, c13, c23, c25, c26 = c["c12"], c["c13"], c["c23"], c["c25"], c["c26"]
    c35, c36, c45, c46 = c["c35"], c["c36"], c["c45"], c["c46"]
    c56, c57, c67 = c["c56"], c["c57"], c["c67"]
    p2 = p * p
    ae = F.norm(a - e)
    ae2 = ae * ae
    d = F.div
    out = {
        "c12": d(c12 + a * (-2 * c25 - 2 * c36 * c46 - 3 * c45 * c46 + a * c56 + a * c46 * c67), p2),
        "c13": d(c13 + a * (-c26 - 2 * c35 - c46**2 + a * c57), p2),
        "c23": d(c23 + a * (-2 * c36 - c45 + a * c67), p2),
        "c25": d(c12 - a * c25 - c23 * c46 - 2 * a * c45 * c46 - e * c25 + a * e * c56, ae),
        "c26": c26,
        "c35": d(c13 - e * c35 - a * (c26 + c35 + c46**2 - e * c57), ae),
        "c36": d(c23 - e * c36 - a * (c36 + c45 - e * c67), ae),
        "c45": c45,
        "c46": c46,
        "c56": d((c12 - c23 * c46 + e * (-2 * c25 - 2 * c45 * c46 + e * c56)) * p2, ae2),
        "c57": d((c13 + e * (-c26 - 2 * c35 - c46**2 + e * c57)) * p2, ae2),
        "c67": d((c23 + e * (-2 * c36 - c45 + e * c67)) * p2, ae2),
    }
    return QuarticParams(out, "reduced", F)


def invariant_pair(params: QuarticParams):
    """c13*c57 - c35*(c35 + c26 + c46^2) and c23*c67 - c36*(c36 + c45)."""
    c = params.values
    F = params.field
    first = c["c13"] * c["c57"] - c["c35"] * (c["c35"] + c["c26"] + c["c46"] ** 2)
    second = c["c23"] * c["c67"] - c["c36"] * (c["c36"] + c["c45"])
    return F.norm(F(first)), F.norm(F(second))


# sampling over F_p -------------------------------------------------------


@dataclass
class SolveReport:
    prime: int
    solutions: list = dc_field(default_factory=list)
    attempts: int = 0
    evaluations: int = 0


def _grid_eval(poly3: MPoly, grids, p: int):
    """Evaluate a polynomial in the scan keys at every grid point, mod p."""
    out = np.zeros(grids[0].shape[0], dtype=np.int64)
    pos = [poly3.gens.index(k) for k in SCAN_KEYS]
    powers = {}
    for exps, coef in poly3.terms.items():
        term = np.full_like(out, coef % p)
        for g, idx in zip(grids, pos):
            k = exps[idx]
            if k:
                pw = powers.get((idx, k))
                if pw is None:
                    pw = powers[(idx, k)] = np.array([pow(int(v), k, p) for v in range(p)], dtype=np.int64)[g]
                term = term * pw % p
        out = (out + term) % p
    return out


def solve_over_prime_field(p: int, budget: int = 10**6, count: int = 8, seed: int = 0) -> SolveReport:
    """Sample solutions of the residual system over F_p.

    Nine parameters are drawn at random; c56, c57, c67 are scanned
    exhaustively.  ``budget`` bounds the number of scanned points.
    """
    if p <= 3:
        raise UnsupportedField(f"need a prime p > 3, got {p}")
    F = GF(p)
    eqs = [e for _, e in residual_system(F, check_independence=False)]
    rng = random.Random(seed)
    axis = np.arange(p, dtype=np.int64)
    grids = [g.ravel() for g in np.meshgrid(axis, axis, axis, indexing="ij")]
    report = SolveReport(p)
    per_scan = p**3
    while len(report.solutions) < count:
        if report.evaluations + per_scan > budget:
            break
        report.attempts += 1
        report.evaluations += per_scan
        outer = {k: rng.randrange(p) for k in OUTER_KEYS}
        mask = np.ones(per_scan, dtype=bool)
        for eq in eqs:
            mask &= _grid_eval(eq.substitute(outer), grids, p) == 0
        for hit in np.flatnonzero(mask):
            vals = dict(outer)
            vals.update({k: int(g[hit]) for k, g in zip(SCAN_KEYS, grids)})
            report.solutions.append(QuarticParams(vals, "reduced", F))
            if len(report.solutions) >= count:
                break
    if not report.solutions:
        raise NoSolutionFound(
            f"no solution over F_{p} after {report.attempts} attempts ({report.evaluations} points)",
            attempts=report.attempts,
        )
    return report


# dimension count ---------------------------------------------------------


def jacobian_rank(eqs, point, field: Field) -> int:
    jac = [[d.evaluate(point) for d in (e.partial(k) for k in range(len(e.gens)))] for e in eqs]
    return const_rank(field, jac)


@dataclass
class DimensionReport:
    prime: int
    ranks: list
    counts: list
    dimension: int
    orbit_dimension: int = 3

    @property
    def full_rank_samples(self) -> int:
        return sum(1 for r in self.ranks if r == 3)


def moduli_dimension_estimate(solutions, p: int, orbit_dimension: int = 3) -> DimensionReport:
    """12 - rank(Jacobian) - orbit dimension, majority over samples."""
    if len(solutions) < 5:
        raise InsufficientSamples(f"need at least 5 samples, got {len(solutions)}")
    F = GF(p)
    eqs = [e for _, e in residual_system(F, check_independence=False)]
    ranks = []
    for s in solutions:
        vals = [F(v) for v in s.vector()]
        if any(e.evaluate(vals) for e in eqs):
            raise InsufficientSamples("sample does not satisfy the residual system")
        ranks.append(jacobian_rank(eqs, vals, F))
    if not any(ranks):
        raise InsufficientSamples("all Jacobians vanish")
    counts = [len(REDUCED_KEYS) - r - orbit_dimension for r in ranks]
    dimension = Counter(counts).most_common(1)[0][0]
    return DimensionReport(p, ranks, counts, dimension, orbit_dimension)


# printed formulas --------------------------------------------------------

PRINTED_RELATIONS = {
    "c48": "1",
    "c15": (
        "-c18^2 + 2*c26*c28 + c28*c35 - c18*c36 - c36^2 + 2*c25*c38 + 2*c18*c28*c38"
        " - c28*c36*c38 - c26*c38^2 - 2*c35*c38^2 - c18*c38^3"
        " - c18*c45 - c36*c45 - c28*c38*c45 + c38^3*c45 - c45^2 + c26*c46 - c28^2*c46"
        " - c35*c46 + c18*c38*c46 + c36*c38*c46 + c28*c38^2*c46"
        " + 2*c38*c45*c46 + c34*c56 + c24*c57 - c34*c38*c57 + c14*c58 - c28*c34*c58"
        " - c24*c38*c58 + c34*c38^2*c58 + c23*c67 - c24*c38*c67"
        " + c13*c68 - c24*c28*c68 - c14*c38*c68 - c23*c38*c68 + c24*c38^2*c68 + c12*c78"
        " - c14*c28*c78 - c13*c38*c78 + c14*c38^2*c78"
    ),
    "c16": (
        "-c25 - c18*c28 + c28*c36 + c26*c38 + 2*c35*c38 + c18*c38^2 - c38^2*c45"
        " - c18*c46 - c36*c46 - c28*c38*c46"
        " - 2*c45*c46 + c34*c57 + c24*c58 - c34*c38*c58 + c24*c67 + c14*c68 + c23*c68"
        " - c24*c38*c68 + c13*c78 - c14*c38*c78"
    ),
    "c17": "-c26 - c35 - c18*c38 + c38*c45 + c28*c46 + c34*c58 + c24*c68 + c14*c78",
    "c37": "-c28 - c46",
    "c27": "-c18 - c36 - c45",
    "c47": "-c38",
}

PRINTED_REDUCED_ENTRIES = {
    "c15": "-c36^2 - c36*c45 - c45^2 + c26*c46 - c35*c46 + c23*c67",
    "c16": "-c25 - c36*c46 - 2*c45*c46",
    "c17": "-c26 - c35",
    "c27": "-c36 - c45",
    "c37": "-c46",
    "c47": "0",
    "c48": "1",
}

PRINTED_RESIDUALS = (
    (
        "2*c36^2*c45 + 2*c36*c45^2 + c45^3 + 2*c35*c45*c46 + c25*(c26 + 2*c35 + c46^2) + c23*c46*c57",
        "2*c26*c45*c46 + c13*c56 + c12*c57 + 2*c23*c45*c67",
    ),
    (
        "c36^4 + 2*c36^3*c45 + c25^2*c46 + 2*c25*c45*c46^2 + c26^2*(-c35 + c46^2)"
        " + c13*c45*c56 + c23*c25*c57 + 2*c23*c45*c46*c57 + c12*c35*c67"
        " + c23^2*c67^2 + 2*c36^2*(c45^2 - c23*c67)"
        " + c36*(c45^3 + c25*c46^2 + c13*c56 - c12*c57 + c23*c46*c57 - 2*c45*(c35*c46 + c23*c67))",
        "1 + c25*c35*c45 + 2*c35*c45^2*c46 + c23*c35*c56 + c12*c46*c56"
        " + c13*c25*c67 + c23*c45^2*c67 + c23*c35*c46*c67"
        " + c26*(c35^2 - c25*c36 + 2*c36^2*c46 + 2*c36*c45*c46 + c45^2*c46"
        " + c35*c46^2 + c23*c56 - c13*c57 - 2*c23*c46*c67)",
    ),
    (
        "c26^2 + c26*c35 + c35^2 + 2*c25*c36 + c25*c45 + 2*c36^2*c46 + 4*c36*c45*c46"
        " + 3*c45^2*c46 + c35*c46^2",
        "c26*c46^2 + c13*c57 + c12*c67 + c23*(c56 + c46*c67)",
    ),
)


@dataclass
class Discrepancy:
    label: str
    derived: str
    printed: str
    difference: str


def compare_relations_with_printed():
    """Derived linear relations versus the printed ones; empty list on agreement."""
    out = []
    derived = derive_linear_relations().as_dict()
    for target, text in PRINTED_RELATIONS.items():
        printed = parse_mpoly(text, QQ, ALL_KEYS)
        got = derived[target].change_gens(ALL_KEYS)
        if got != printed:
            out.append(Discrepancy(target, got.fmt(), printed.fmt(), (got - printed).fmt()))
    return out


def compare_reduced_with_printed():
    out = []
    entries = reduced_y_entries()
    for k, text in PRINTED_REDUCED_ENTRIES.items():
        printed = parse_mpoly(text, QQ, REDUCED_KEYS)
        if entries[k] != printed:
            out.append(Discrepancy(k, entries[k].fmt(), printed.fmt(), (entries[k] - printed).fmt()))
    return out


def printed_residuals():
    """The printed equations as left-minus-right polynomials in the 12 keys."""
    return [parse_mpoly(l, QQ, REDUCED_KEYS) - parse_mpoly(r, QQ, REDUCED_KEYS) for l, r in PRINTED_RESIDUALS]


def match_residuals_with_printed():
    """Pair each printed equation with a derived residual equal up to sign.

    Returns (matches, unmatched) where matches maps printed index to
    (monomial, sign).
    """
    derived = list(residual_system())
    matches = {}
    unmatched = []
    for idx, printed in enumerate(printed_residuals()):
        for mono, eq in derived:
            if eq == printed:
                matches[idx] = (mono, 1)
                break
            if eq == -printed:
                matches[idx] = (mono, -1)
                break
        else:
            unmatched.append(idx)
    return matches, unmatched
