import pytest

from pfaffcurves import io
from pfaffcurves.cubic import WeierstrassCurve, cubic_determinantal, cubic_pfaffian
from pfaffcurves.errors import NotARepresentation, ParseError
from pfaffcurves.field import GF, QQ
from pfaffcurves.quartic import GroupElement, QuarticParams, REDUCED_KEYS
from pfaffcurves.reps import section_matrix_from_determinantal
from pfaffcurves.poly import parse_poly


def test_skew_round_trip():
    B = section_matrix_from_determinantal(cubic_determinantal(WeierstrassCurve(0, 1), 0, 1))
    text = io.write_skew(B.matrix, B.curve)
    again = io.read_section_matrix(text)
    assert again.matrix == B.matrix and again.curve == B.curve


def test_skew_rejects_bad_degree():
    with pytest.raises(ParseError):
        io.read_skew("skew 2 1 QQ\n1 2 x0^2\n")


def test_skew_rejects_lower_index():
    with pytest.raises(ParseError):
        io.read_skew("skew 2 1 QQ\n2 1 x0\n")


def test_skew_comments_and_field():
    S, curve = io.read_skew("# header\nskew 2 1 Fp:7\n1 2 8*x0  # wraps\n")
    assert S.field == GF(7) and S[0, 1] == parse_poly("x0", GF(7))
    assert curve is None


@pytest.mark.parametrize("field", [QQ, GF(13)])
def test_pfaffrep_round_trip(field):
    rep = cubic_pfaffian(WeierstrassCurve(2, 3, field), 3, 6)
    again = io.read_pfaffrep(io.write_pfaffrep(rep.matrix, rep.curve))
    assert again.matrix == rep.matrix and again.scale == rep.scale


def test_pfaffrep_lower_entries_and_skew_check():
    text = "pfaffrep 2 QQ\nA0\n2 1 -1\nA1\nA2\ncurve x0\n"
    assert io.read_pfaffrep(text).scale == 1
    with pytest.raises(ParseError):
        io.read_pfaffrep("pfaffrep 2 QQ\nA0\n1 2 1\n2 1 1\nA1\nA2\ncurve x0\n")


def test_pfaffrep_wrong_curve():
    with pytest.raises(NotARepresentation):
        io.read_pfaffrep("pfaffrep 2 QQ\nA0\n1 2 1\nA1\nA2\ncurve x1\n")


def test_detrep_round_trip():
    rep = cubic_determinantal(WeierstrassCurve(0, 1), 2, 3)
    again = io.read_detrep(io.write_detrep(rep.matrix, rep.curve))
    assert again.matrix == rep.matrix and again.scale == 1


def test_missing_curve():
    with pytest.raises(ParseError):
        io.read_detrep("detrep 1 QQ\nM0\n1 1 1\n")


def test_params_round_trip():
    vals = {k: i for i, k in enumerate(REDUCED_KEYS)}
    params = QuarticParams(vals, "reduced", QQ)
    text = io.write_params(params, GroupElement(1, 2, 3))
    again, g = io.read_params(text, QQ)
    assert again == params
    assert (g.a, g.e, g.p) == (1, 2, 3)


def test_params_full_mode_defaults_zero():
    params, g = io.read_params("cij 1 8 1\n", QQ)
    assert params.mode == "full" and params["c18"] == 1 and params["c12"] == 0
    assert g is None


def test_params_bad_record():
    with pytest.raises(ParseError):
        io.read_params("c 1 2 3\n", QQ)
    with pytest.raises(ParseError):
        io.read_params("cij 2 2 3\n", QQ)
