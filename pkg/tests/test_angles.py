import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from reptile_lab.angles import (ALPHA, BETA, GAMMA, PI, AngleAssignment,
                                AngleForm, NoExactCosineError, RelationSet,
                                exact_cos, format_angle, parse_angle)
from reptile_lab.exactmath import Poly, QuadExt

R_CASE_A = RelationSet.of(("gamma", parse_angle("1/2 pi")),
                          ("alpha", parse_angle("pi-2*beta")))


fractions = st.fractions(min_value=-4, max_value=4, max_denominator=12)


@st.composite
def angle_forms(draw):
    return AngleForm(tuple(draw(fractions) for _ in range(4)))


class TestParse:
    @pytest.mark.parametrize("text,coeffs", [
        ("2/9 pi", (F(2, 9), 0, 0, 0)),
        ("alpha+2*beta", (0, 1, 2, 0)),
        ("pi-2*beta", (1, 0, -2, 0)),
        ("1/2 pi", (F(1, 2), 0, 0, 0)),
        ("gamma", (0, 0, 0, 1)),
        ("-alpha", (0, -1, 0, 0)),
    ])
    def test_examples(self, text, coeffs):
        assert parse_angle(text) == AngleForm(tuple(F(c) for c in coeffs))

    def test_rejects_garbage(self):
        for bad in ("", "2", "pi pi", "1/2", "delta"):
            with pytest.raises(ValueError):
                parse_angle(bad)

    @given(angle_forms())
    def test_round_trip(self, form):
        assert parse_angle(format_angle(form)) == form


class TestNormalize:
    def test_substitution(self):
        r = RelationSet.of(("alpha", parse_angle("pi-2*beta")))
        assert r.normalize(ALPHA + BETA) == parse_angle("pi-beta")
        assert r.normalize(ALPHA + 2 * BETA) == PI

    def test_concrete(self):
        r = RelationSet.of(("gamma", parse_angle("1/2 pi")),
                           ("beta", parse_angle("1/3 pi")))
        assert r.normalize(2 * BETA) == parse_angle("2/3 pi")

    @given(angle_forms())
    def test_idempotent(self, form):
        once = R_CASE_A.normalize(form)
        assert R_CASE_A.normalize(once) == once

    @given(angle_forms())
    def test_eval_commutes(self, form):
        # assignment consistent with the relations
        beta = 1.234
        a = AngleAssignment(alpha=math.pi - 2 * beta, beta=beta, gamma=math.pi / 2)
        assert R_CASE_A.normalize(form).eval(a) == pytest.approx(form.eval(a), abs=1e-12)

    def test_cycle_detected(self):
        r = RelationSet.of(("alpha", BETA), ("beta", ALPHA))
        with pytest.raises(ValueError):
            r.normalize(ALPHA)

    def test_missing_symbol(self):
        with pytest.raises(KeyError):
            ALPHA.eval(AngleAssignment(beta=1.0))


class TestEval:
    def test_simple(self):
        a = AngleAssignment(alpha=math.pi / 4, beta=math.pi / 3, gamma=math.pi / 2)
        assert ALPHA.eval(a) == pytest.approx(0.7853981633974483)
        b = AngleAssignment(alpha=2 * math.pi / 9, beta=math.pi / 3, gamma=0.0)
        assert (2 * ALPHA + BETA).eval(b) == pytest.approx(7 * math.pi / 9)
        c = AngleAssignment(alpha=math.pi / 4, beta=math.pi / 3, gamma=math.pi / 2)
        assert (ALPHA + BETA + GAMMA - PI).eval(c) == pytest.approx(math.pi / 12)


class TestExactCos:
    @pytest.mark.parametrize("text,value", [
        ("1/3 pi", F(1, 2)),
        ("3/4 pi", QuadExt(F(0), F(-1, 2), 2)),
        ("1/5 pi", QuadExt(F(1, 4), F(1, 4), 5)),
        ("2/5 pi", QuadExt(F(-1, 4), F(1, 4), 5)),
        ("1/6 pi", QuadExt(F(0), F(1, 2), 3)),
        ("1/2 pi", F(0)),
        ("pi", F(-1)),
    ])
    def test_pi_multiples(self, text, value):
        assert exact_cos(parse_angle(text)) == value

    def test_unsupported_denominator(self):
        with pytest.raises(NoExactCosineError):
            exact_cos(parse_angle("2/9 pi"))

    def test_parametric(self):
        tpoly = Poly([0, 1])
        assert exact_cos(BETA, R_CASE_A, as_poly_in="beta") == tpoly
        assert exact_cos(ALPHA + BETA, R_CASE_A, as_poly_in="beta") == -tpoly
        assert exact_cos(ALPHA, R_CASE_A, as_poly_in="beta") == Poly([1, 0, -2])
        assert exact_cos(2 * BETA, R_CASE_A, as_poly_in="beta") == Poly([-1, 0, 2])
        assert exact_cos(GAMMA, R_CASE_A) == F(0)

    def test_numeric_agreement(self):
        a = AngleAssignment(alpha=math.pi / 5, beta=math.pi / 3, gamma=math.pi / 2)
        for text in ("1/5 pi", "2/5 pi", "3/4 pi", "1/6 pi", "1/3 pi"):
            form = parse_angle(text)
            assert float(exact_cos(form)) == pytest.approx(
                math.cos(form.eval(a)), abs=1e-12)

    def test_parametric_numeric_agreement(self):
        beta = 1.1
        a = AngleAssignment(alpha=math.pi - 2 * beta, beta=beta, gamma=math.pi / 2)
        tval = math.cos(beta)
        for form in (BETA, 2 * BETA, ALPHA, ALPHA + BETA):
            poly = exact_cos(form, R_CASE_A, as_poly_in="beta")
            assert float(poly(F(tval).limit_denominator(10 ** 12))) == pytest.approx(
                math.cos(form.eval(a)), abs=1e-9)
