import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pfaffcurves.cubic import WeierstrassCurve, cubic_determinantal
from pfaffcurves.errors import SizeLimit
from pfaffcurves.field import GF, QQ
from pfaffcurves.linalg import const_det, random_invertible
from pfaffcurves.poly import MPoly, Poly, parse_poly
from pfaffcurves.quartic import QuarticParams, assemble_canonical
from pfaffcurves.reps import decomposable_matrix
from pfaffcurves.skew import (
    SkewPolyMatrix,
    adjoint_sign,
    congruence,
    is_scalar_identity,
    pfaffian,
    pfaffian_adjoint,
    pfaffian_matchings_oracle,
    pfaffian_minor,
    rank_at_point,
    skew_matmul,
)


def generic(n):
    """Skew matrix whose (i, j) entry is an indeterminate a_ij (1-based names)."""
    gens = [f"a{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    entries = {(int(g[1]) - 1, int(g[2]) - 1): MPoly.variable(QQ, gens, g) for g in gens}
    return SkewPolyMatrix(n, QQ, entries, gens=gens), gens


def var(gens, name):
    return MPoly.variable(QQ, gens, name)


def random_points(rng, count, field=QQ):
    pts = []
    while len(pts) < count:
        pt = tuple(field.random(rng, 7) for _ in range(3))
        if any(pt):
            pts.append(pt)
    return pts


class TestPfaffian:
    def test_two_by_two(self):
        a = parse_poly("x0 - 2*x2")
        S = SkewPolyMatrix(2, QQ, {(0, 1): a})
        assert pfaffian(S) == a

    def test_empty(self):
        assert pfaffian(SkewPolyMatrix(0, QQ, {})) == Poly.one(QQ)

    def test_generic_four(self):
        S, g = generic(4)
        v = lambda n: var(g, n)
        assert pfaffian(S) == v("a12") * v("a34") - v("a13") * v("a24") + v("a14") * v("a23")

    def test_cubic_block_matrix_is_minus_curve(self):
        # oracle: signed perfect-matching sum
        rep = cubic_determinantal(WeierstrassCurve(0, 1), 0, 1)
        A = decomposable_matrix(rep.matrix)
        F = parse_poly("x0^3 + x1^3 - x1*x2^2")
        assert pfaffian_matchings_oracle(A) == -F
        assert pfaffian(A) == -F

    def test_zero_pfaffian_keeps_degree(self):
        S = SkewPolyMatrix(4, QQ, {(0, 1): parse_poly("x0")})
        P = pfaffian(S)
        assert P.is_zero() and P.degree == 2


class TestMatchingOracle:
    def test_two_by_two(self):
        S = SkewPolyMatrix(2, QQ, {(0, 1): parse_poly("x1")})
        assert pfaffian_matchings_oracle(S) == pfaffian(S)

    def test_number_of_matchings(self):
        S = SkewPolyMatrix.random_constant(8, QQ, random.Random(0))
        from pfaffcurves.skew import perfect_matchings

        assert sum(1 for _ in perfect_matchings(list(range(8)))) == 105

    def test_random_rational_six(self):
        rng = random.Random(6)
        for _ in range(100):
            S = SkewPolyMatrix.random_constant(6, QQ, rng)
            assert pfaffian(S) == pfaffian_matchings_oracle(S)

    def test_canonical_quartic_over_f101(self):
        rng = random.Random(8)
        F = GF(101)
        for _ in range(5):
            A = assemble_canonical(QuarticParams.random(F, rng))
            assert pfaffian(A) == pfaffian_matchings_oracle(A)

    def test_size_guard(self):
        with pytest.raises(SizeLimit):
            pfaffian_matchings_oracle(SkewPolyMatrix(14, QQ, {}))

    @given(st.sampled_from([2, 4, 6, 8]), st.integers(0, 10**6))
    def test_agreement_and_square_is_det(self, n, seed):
        rng = random.Random(seed)
        S = SkewPolyMatrix.random_linear(n, QQ, rng, density=0.8)
        P = pfaffian(S)
        assert P == pfaffian_matchings_oracle(S)
        for pt in random_points(rng, 3):
            assert P(pt) ** 2 == const_det(QQ, S.evaluate(pt))


class TestMinors:
    def test_two_by_two_minor_is_one(self):
        S = SkewPolyMatrix(2, QQ, {(0, 1): parse_poly("x0")})
        assert pfaffian_minor(S, 1, 2) == Poly.one(QQ)

    def test_generic_four(self):
        S, g = generic(4)
        assert pfaffian_minor(S, 1, 2) == var(g, "a34")
        assert pfaffian_minor(S, 2, 4) == var(g, "a13")

    def test_index_errors(self):
        S, _ = generic(4)
        for i, j in ((0, 1), (2, 2), (3, 2), (1, 5)):
            with pytest.raises(IndexError):
                pfaffian_minor(S, i, j)

    def test_first_row_expansion(self):
        rng = random.Random(4)
        for n in (4, 6, 8):
            S = SkewPolyMatrix.random_linear(n, QQ, rng)
            acc = Poly.zero(QQ, n // 2)
            for j in range(2, n + 1):
                term = S[0, j - 1] * pfaffian_minor(S, 1, j)
                acc = acc + (term if j % 2 == 0 else -term)
            assert acc == pfaffian(S)


class TestAdjoint:
    def test_two_by_two(self):
        a = parse_poly("x0")
        S = SkewPolyMatrix(2, QQ, {(0, 1): a})
        adj = pfaffian_adjoint(S)
        assert adj[0, 1] == Poly.constant(QQ, value=-1)
        assert adj[1, 0] == Poly.one(QQ)

    def test_sign_table_derived_from_generic_four(self):
        # pick each sign so that adj @ S = Pf * Id on the generic 4x4 matrix
        S, _ = generic(4)
        P = pfaffian(S)
        pairs = list(itertools.combinations(range(4), 2))
        found = None
        for signs in itertools.product((1, -1), repeat=len(pairs)):
            entries = {}
            for (i, j), s in zip(pairs, signs):
                m = pfaffian_minor(S, i + 1, j + 1)
                entries[(i, j)] = m if s > 0 else -m
            cand = SkewPolyMatrix(4, QQ, entries, gens=S.gens)
            if is_scalar_identity(skew_matmul(cand, S), P):
                assert found is None
                found = dict(zip(pairs, signs))
        assert found == {(i, j): adjoint_sign(i, j) for i, j in pairs}
        assert found == {(i, j): (-1) ** ((i + 1) + (j + 1)) for i, j in pairs}

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_inverse_identity_both_sides(self, n):
        rng = random.Random(n)
        S = SkewPolyMatrix.random_linear(n, QQ, rng)
        adj, P = pfaffian_adjoint(S), pfaffian(S)
        assert is_scalar_identity(skew_matmul(adj, S), P)
        assert is_scalar_identity(skew_matmul(S, adj), P)

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_power_laws(self, n):
        # adj = Pf * S^{-1} forces Pf(adj) = (-1)^k Pf^{k-1} and adj(adj) = (-1)^k Pf^{k-2} S
        k = n // 2
        sign = (-1) ** k
        S = SkewPolyMatrix.random_linear(n, QQ, random.Random(10 + n))
        P = pfaffian(S)
        adj = pfaffian_adjoint(S)
        assert pfaffian(adj) == (P ** (k - 1)).scale(sign)
        twice = pfaffian_adjoint(adj)
        factor = (P ** (k - 2)).scale(sign)
        assert twice == S.map(lambda e: e * factor)

    def test_unsigned_power_law_fails_for_six(self):
        # the unsigned statement Pf(adj) = Pf^2 cannot hold together with adj @ S = Pf * Id
        S = SkewPolyMatrix.random_linear(6, QQ, random.Random(3))
        P = pfaffian(S)
        assert pfaffian(pfaffian_adjoint(S)) == -(P**2)

    def test_adjoint_over_prime_field(self):
        F = GF(101)
        S = SkewPolyMatrix.random_linear(8, F, random.Random(1))
        assert is_scalar_identity(skew_matmul(pfaffian_adjoint(S), S), pfaffian(S))


class TestCongruence:
    def test_identity(self):
        S = SkewPolyMatrix.random_linear(6, QQ, random.Random(0))
        ident = [[int(i == j) for j in range(6)] for i in range(6)]
        assert congruence(ident, S) == S

    def test_scalar(self):
        S = SkewPolyMatrix.random_linear(4, QQ, random.Random(1))
        lam = Fraction(3, 2)
        X = [[lam if i == j else 0 for j in range(4)] for i in range(4)]
        T = congruence(X, S)
        assert T == S.scale(lam**2)
        assert pfaffian(T) == pfaffian(S).scale(lam**4)

    @pytest.mark.parametrize("seed", range(5))
    def test_pfaffian_scales_by_det(self, seed):
        rng = random.Random(seed)
        S = SkewPolyMatrix.random_linear(6, QQ, rng)
        X = random_invertible(QQ, 6, rng, bound=3)
        assert pfaffian(congruence(X, S)) == pfaffian(S).scale(const_det(QQ, X))

    def test_size_mismatch(self):
        S = SkewPolyMatrix.random_linear(4, QQ, random.Random(1))
        with pytest.raises(ValueError):
            congruence([[1, 0], [0, 1]], S)


class TestRank:
    def test_examples(self):
        assert rank_at_point(SkewPolyMatrix(4, QQ, {}), (1, 0, 0)) == 0
        one = Poly.constant(QQ, value=1)
        assert rank_at_point(SkewPolyMatrix(2, QQ, {(0, 1): one}), (1, 2, 3)) == 2

    @given(st.sampled_from([2, 4, 6, 8]), st.integers(0, 10**6))
    def test_even_and_full_iff_pfaffian_nonzero(self, n, seed):
        rng = random.Random(seed)
        F = GF(7)  # small field so singular evaluations occur
        S = SkewPolyMatrix.random_linear(n, F, rng, density=0.6)
        P = pfaffian(S)
        for pt in random_points(rng, 4, F):
            r = rank_at_point(S, pt)
            assert r % 2 == 0
            assert (r == n) == bool(P(pt))
