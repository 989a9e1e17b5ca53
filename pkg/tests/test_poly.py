import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import forms, points, rationals
from pfaffcurves.errors import DegreeMismatch, NotDivisible, ParseError
from pfaffcurves.field import GF, QQ
from pfaffcurves.poly import MPoly, Poly, curve_points, parse_mpoly, parse_poly, projective_plane


def P(text, field=QQ):
    return parse_poly(text, field)


class TestArithmetic:
    def test_examples(self):
        assert P("x0^2") + Poly.zero(QQ, 2) == P("x0^2")
        assert P("x0^2") + Poly.zero(QQ, 0) == P("x0^2")
        assert P("x0 + x1") * P("x0 - x1") == P("x0^2 - x1^2")
        F7 = GF(7)
        assert P("3*x0", F7) * P("5*x0", F7) == P("x0^2", F7)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            P("x0") + P("x1^2")
        with pytest.raises(DegreeMismatch):
            Poly(QQ, {(1, 0, 0): 1, (0, 2, 0): 1})

    def test_degrees(self):
        f = P("x0*x1 - x2^2")
        assert (f * P("x0")).degree == 3
        assert (-f).degree == 2
        assert (f - f).degree == 2 and (f - f).is_zero()
        assert (f**3).degree == 6
        assert P("0").degree == 0

    @given(forms(2), forms(2), forms(2))
    def test_ring_laws(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f - f == Poly.zero(QQ, 2)

    @given(forms(), forms(), points)
    def test_eval_is_ring_homomorphism(self, f, g, pt):
        assert (f * g)(pt) == f(pt) * g(pt)
        if f.degree == g.degree:
            assert (f + g)(pt) == f(pt) + g(pt)

    @given(forms(), points, rationals.filter(bool))
    def test_homogeneity_of_evaluation(self, f, pt, lam):
        scaled = tuple(lam * c for c in pt)
        assert f(scaled) == lam**f.degree * f(pt)

    @given(
        st.lists(st.integers(-20, 20), min_size=6, max_size=6),
        st.lists(st.integers(-20, 20), min_size=3, max_size=3),
        st.sampled_from([5, 7, 11, 101, 10007]),
    )
    def test_reduction_commutes_with_product(self, fc, gc, p):
        monos2 = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
        f = Poly(QQ, dict(zip(monos2, fc)), degree=2)
        g = Poly.linear(QQ, gc)
        F = GF(p)
        assert (f * g).reduce_mod(F) == f.reduce_mod(F) * g.reduce_mod(F)


class TestEvaluation:
    def test_examples(self):
        assert P("x0^3 + x1^3 - x1*x2^2")(0, 1, 1) == 0
        assert P("x0^2")(3, 0, 0) == 9

    def test_rational_point(self):
        assert P("x0^2 - x1*x2")(Fraction(1, 2), 1, Fraction(1, 4)) == 0


class TestPartials:
    def test_examples(self):
        assert P("x0^3").partial(0) == P("3*x0^2")
        assert P("x1*x2^2").partial(0).is_zero()
        assert P("x1*x2^2").partial("z") == P("2*x1*x2")

    def test_euler_relation_weierstrass(self):
        # Euler: sum x_k dF/dx_k = 3F, expanded by hand for -x1x2^2 + x0^3 + a x0x1^2 + b x1^3
        rng = random.Random(3)
        for _ in range(10):
            a, b = Fraction(rng.randint(-9, 9), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), 3)
            F = Poly(QQ, {(0, 1, 2): -1, (3, 0, 0): 1, (1, 2, 0): a, (0, 3, 0): b})
            euler = sum((Poly.var(QQ, k) * F.partial(k) for k in range(3)), Poly.zero(QQ, 3))
            assert euler == F.scale(3)

    @given(forms())
    def test_euler_relation(self, f):
        euler = Poly.zero(QQ, f.degree)
        for k in range(3):
            euler = euler + Poly.var(QQ, k) * f.partial(k)
        assert euler == f.scale(f.degree)


class TestDivision:
    def test_examples(self):
        assert P("x0^2 - x1^2").exact_div(P("x0 - x1")) == P("x0 + x1")
        f = P("x0*x1 + 3*x2^2")
        assert f.exact_div(Poly.one(QQ)) == f

    def test_not_divisible_witness(self):
        with pytest.raises(NotDivisible) as info:
            P("x0^2").exact_div(P("x1"))
        assert info.value.remainder == P("x0^2")

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            P("x0").exact_div(Poly.zero(QQ, 1))

    @given(forms(), forms().filter(bool))
    def test_exact_div_inverts_mul(self, f, g):
        q = (f * g).exact_div(g)
        assert q == f and q.degree == f.degree

    def test_over_prime_field(self):
        F = GF(101)
        f, g = P("x0^3 + 5*x1*x2^2", F), P("7*x0 - x2", F)
        assert (f * g).exact_div(g) == f


class TestParsing:
    def test_weierstrass_example(self):
        f = P("x0^3 - x1*x2^2 + x1^3")
        assert f == Poly(QQ, {(3, 0, 0): 1, (0, 1, 2): -1, (0, 3, 0): 1})
        assert f.degree == 3

    def test_zero(self):
        z = P("0")
        assert z.is_zero()

    def test_inhomogeneous_rejected(self):
        with pytest.raises(ParseError):
            P("x0 + x1^2")

    def test_aliases_and_rationals(self):
        assert P("x*y - 3/4 * z^2") == P("x0*x1 - 3/4*x2^2")
        assert P(" - x ^ 2 ") == P("-x0^2")

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as info:
            P("x0 + * x1")
        assert info.value.position is not None
        with pytest.raises(ParseError):
            P("x3^2")
        with pytest.raises(ParseError):
            P("x0^-1")
        with pytest.raises(ParseError):
            P("x0/x1")

    @given(forms())
    def test_round_trip(self, f):
        assert P(f.fmt()) == f

    @given(forms(field=GF(101)))
    def test_round_trip_prime_field(self, f):
        assert parse_poly(f.fmt(), GF(101)) == f

    def test_general_generators(self):
        gens = ("c12", "c13")
        f = parse_mpoly("c12*(c13 + 2) - c13^2", QQ, gens)
        assert f.terms == {(1, 1): 1, (1, 0): 2, (0, 2): -1}
        g = f.compose("c12", parse_mpoly("c13 + 1", QQ, gens))
        assert g == parse_mpoly("3*c13 + 2", QQ, gens)


class TestProjectivePlane:
    def test_point_count(self):
        F = GF(7)
        pts = list(projective_plane(F))
        assert len(pts) == 57 == len(set(pts))

    def test_curve_points_lie_on_curve(self):
        F = GF(11)
        f = P("x^3 + y^3 + z^3", F)
        pts = curve_points(f)
        assert pts and all(f(pt) == 0 for pt in pts)
