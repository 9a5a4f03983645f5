import random
from decimal import Decimal, getcontext
from fractions import Fraction as F

import pytest

from reptile_lab.exactmath import (ExactMatrix, Poly, QuadExt, RingMismatchError,
                                   ZeroPolynomialError, isolate_roots,
                                   sturm_count)


def P(*cs):
    return Poly(cs)


t = Poly.x()


class TestPoly:
    def test_arithmetic(self):
        p = P(1, 2) * P(-1, 1)  # (1+2t)(t-1) = -1 - t + 2t^2
        assert p == P(-1, -1, 2)
        assert (p - p).is_zero()
        assert p.degree == 2
        assert p(F(2)) == F(5)

    def test_divmod_exact(self):
        a = P(-1, 0, 1)  # t^2 - 1
        q, r = a.divmod(P(1, 1))
        assert q == P(-1, 1) and r.is_zero()
        assert a.exact_div(P(-1, 1)) == P(1, 1)
        with pytest.raises(ArithmeticError):
            a.exact_div(P(1, 0, 0, 1))

    def test_square_free(self):
        p = P(-1, 1) ** 3 * P(2, 1)
        assert p.square_free_part() == (P(-1, 1) * P(2, 1)).monic()


class TestSturm:
    def test_single_root_interval(self):
        p = P(-1, 2)  # 2t - 1
        assert sturm_count(p, F(0), F(1, 2)) == 0
        assert sturm_count(p, F(0), F(3, 5)) == 1

    def test_full_line_and_endpoints(self):
        p = P(-1, 0, 1)
        assert sturm_count(p) == 2
        assert sturm_count(p, F(-1), F(1)) == 0  # open interval, endpoint roots
        assert sturm_count(p, F(-2), F(1)) == 1

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            sturm_count(Poly())

    def test_against_factored_construction(self):
        # 100 random cubics/quartics with known rational roots
        rng = random.Random(7)
        for _ in range(100):
            deg = rng.choice((3, 4))
            roots = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(deg)]
            p = P(1)
            for r in roots:
                p = p * P(-r, 1)
            lo = F(rng.randint(-12, 0))
            hi = lo + F(rng.randint(1, 14))
            expected = len({r for r in roots if lo < r < hi})
            assert sturm_count(p, lo, hi) == expected


class TestIsolation:
    def test_double_root_at_zero(self):
        roots = isolate_roots(P(0, 0, 1))
        assert len(roots) == 1 and roots[0].exact and roots[0].midpoint == 0

    def test_disjoint_and_precise(self):
        p = P(-1, 0, 1) * P(-3, 1) * P(1, 3)  # roots -1, 1, 3, -1/3
        rs = isolate_roots(p, F(1, 1000))
        mids = [r.midpoint for r in rs]
        assert mids == sorted(mids)
        assert [round(float(m), 3) for m in mids] == [-1.0, -0.333, 1.0, 3.0]
        for a, b in zip(rs, rs[1:]):
            assert a.hi <= b.lo
        for r in rs:
            assert r.hi - r.lo <= F(1, 1000)

    def test_irrational_roots(self):
        rs = isolate_roots(P(-2, 0, 1), F(1, 10 ** 6))
        assert [round(float(r.midpoint), 5) for r in rs] == [-1.41421, 1.41421]

    def test_one_sign_change_per_interval(self):
        p = (P(-1, 3) * P(1, 2) * P(-5, 1, 1)).square_free_part()
        for r in isolate_roots(p, F(1, 1000)):
            if not r.exact:
                assert p(r.lo) * p(r.hi) < 0


class TestQuadExt:
    def test_norm_identity(self):
        one_plus = QuadExt(F(1), F(1), 2)
        one_minus = QuadExt(F(1), F(-1), 2)
        assert one_plus * one_minus == F(-1)

    def test_square(self):
        x = QuadExt(F(1, 4), F(1, 4), 5)  # (sqrt5+1)/4
        assert x * x == QuadExt(F(3, 8), F(1, 8), 5)

    def test_inverse_division(self):
        x = QuadExt(F(2), F(3), 3)
        assert x * x.inverse() == F(1)
        with pytest.raises(ZeroDivisionError):
            QuadExt(F(0), F(0), 7).inverse()

    def test_field_mismatch(self):
        with pytest.raises(RingMismatchError):
            QuadExt(F(1), F(1), 2) + QuadExt(F(1), F(1), 3)

    def test_numeric_high_precision_oracle(self):
        getcontext().prec = 50
        x = QuadExt(F(1, 4), F(1, 4), 5)
        precise = (Decimal(5).sqrt() + 1) / 4
        assert abs(float(x) - float(precise)) < 1e-12
        assert round(float(x), 4) == 0.809

    def test_binary64_agreement_random(self):
        rng = random.Random(3)
        for _ in range(200):
            a = F(rng.randint(-1000, 1000), rng.randint(1, 1000))
            b = F(rng.randint(-1000, 1000), rng.randint(1, 1000))
            m = rng.choice((2, 3, 5, 7))
            x = QuadExt(a, b, m)
            y = QuadExt(b, a, m)
            assert abs(float(x * y) - float(x) * float(y)) < 1e-9
            assert abs(float(x + y) - (float(x) + float(y))) < 1e-9


class TestDeterminant:
    def test_identity(self):
        assert ExactMatrix.identity(5).det() == 1

    def test_singular(self):
        m = ExactMatrix([[1, 2], [2, 4]])
        assert m.det() == 0

    def test_row_swap_sign(self):
        m = ExactMatrix([[0, 1], [1, 0]])
        assert m.det() == -1

    def _random_matrix(self, rng, ring, n):
        def entry():
            if ring == "Q":
                return F(rng.randint(-4, 4), rng.randint(1, 3))
            if ring == "Qt":
                return P(rng.randint(-3, 3), rng.randint(-2, 2))
            return QuadExt(F(rng.randint(-3, 3)), F(rng.randint(-2, 2)), 2)

        return ExactMatrix([[entry() for _ in range(n)] for _ in range(n)])

    @pytest.mark.parametrize("ring", ["Q", "Qt", "Qs"])
    def test_multiplicative(self, ring):
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(2, 4)
            a = self._random_matrix(rng, ring, n)
            b = self._random_matrix(rng, ring, n)
            assert (a @ b).det() == a.det() * b.det()

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            ExactMatrix([[Poly([1]), QuadExt(F(1), F(1), 2)],
                         [F(0), F(1)]])
