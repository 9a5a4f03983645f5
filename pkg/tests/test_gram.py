import math
import random
from fractions import Fraction as F

import numpy as np
import pytest

from reptile_lab import fixtures
from reptile_lab.angles import parse_angle
from reptile_lab.coxeter import CoxeterDiagram, all_edges
from reptile_lab.exactmath import QuadExt
from reptile_lab.gram import (DegenerateSimplexError, EuclideanSimplex,
                              dihedral_angle_at_ridge, dihedral_angles,
                              fiedler_check, gram_from_angles,
                              gram_from_diagram, parametric_fiedler)


class TestGramConstruction:
    def test_parametric_ring(self):
        d = fixtures.diagram("case-a-1")
        g = gram_from_diagram(d, as_poly_in="beta")
        assert g.ring == "Q[t]"

    def test_quadratic_ring(self):
        g = gram_from_diagram(fixtures.diagram("quarter-1"))
        assert g.ring == "Q(sqrt(2))"
        g5 = gram_from_diagram(fixtures.diagram("fifth-1"))
        assert g5.ring == "Q(sqrt(5))"

    def test_all_right_angles(self):
        labels = {e: parse_angle("1/2 pi") for e in all_edges(5)}
        d = CoxeterDiagram(list("uvwxy"), labels)
        g = gram_from_diagram(d)
        assert g.ring == "Q"
        assert np.allclose(g.numeric, -np.eye(5))


class TestFiedler:
    def test_regular_simplex_gram(self):
        # cosine matrix of the regular 4-simplex: off-diagonal 1/4
        m = np.full((5, 5), 0.25)
        np.fill_diagonal(m, -1.0)
        # eigen-decomposition oracle: (1/4)(J - I) - I has eigenvalues
        # (1/4)(5) - 1/4 - 1 = 0 (once, all-ones) and -1/4 - 1 = -5/4 (x4)
        rep = fiedler_check(m)
        assert rep.is_singular and rep.rank == 4
        assert rep.negative_semidefinite and rep.kernel_strictly_positive
        assert np.allclose(rep.kernel_vector, np.ones(5) / math.sqrt(5))
        assert rep.verdict == "consistent-with-simplex"

    @pytest.mark.parametrize("key,a,b,m", [
        ("quarter-1", "1/16", "0", 2),
        ("quarter-2", "1/8", "0", 2),
        ("quarter-3", "9/16", "-1/4", 2),
        ("fifth-1", "3/32", "1/32", 5),
        ("fifth-2", "3/32", "1/32", 5),
        ("fifth-3", "15/32", "-5/32", 5),
    ])
    def test_concrete_determinants(self, key, a, b, m):
        g = gram_from_diagram(fixtures.diagram(key))
        det = g.exact.det()
        assert det == QuadExt(F(a), F(b), m)
        rep = fiedler_check(g)
        assert not rep.is_singular
        assert rep.verdict == "cannot-be-a-simplex"

    def test_parametric_exclusions(self):
        for i in range(1, 5):
            excl = parametric_fiedler(fixtures.diagram(f"case-a-{i}"),
                                      F(0), F(1, 2))
            assert excl.excluded and excl.roots_in_interval == 0

    def test_synthetic_single_root(self):
        from reptile_lab.exactmath import Poly, sturm_count
        assert sturm_count(Poly([-1, 2]), F(0), F(1)) == 1


def _h03():
    h = F(1, 2)
    return EuclideanSimplex(((F(0), F(0), F(0)), (h, F(0), F(0)),
                             (h, h, F(0)), (h, h, h)))


class TestDihedralAngles:
    def test_regular_tetrahedron(self):
        s = EuclideanSimplex(((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)))
        angles = dihedral_angles(s)
        expected = math.acos(F(1, 3))
        for i in range(4):
            for j in range(i + 1, 4):
                assert angles[i, j] == pytest.approx(expected, abs=1e-12)

    def test_h03_angle_multiset(self):
        # cube orthoscheme: three right dihedral angles, two pi/4, one pi/3
        # (confirmed independently by the ridge-vector method below)
        angles = dihedral_angles(_h03())
        got = sorted(angles[i, j] for i in range(4) for j in range(i + 1, 4))
        expected = sorted([math.pi / 2] * 3 + [math.pi / 4] * 2 + [math.pi / 3])
        assert got == pytest.approx(expected, abs=1e-12)

    def test_ridge_method_cross_check(self):
        s = _h03()
        angles = dihedral_angles(s)
        for i in range(4):
            for j in range(i + 1, 4):
                assert angles[i, j] == pytest.approx(
                    dihedral_angle_at_ridge(s, i, j), abs=1e-9)

    def test_triangle_angles_sum(self):
        tri = EuclideanSimplex(((0, 0), (1, 0), (0, 1)))
        angles = dihedral_angles(tri)
        total = sum(angles[i, j] for i in range(3) for j in range(i + 1, 3))
        assert total == pytest.approx(math.pi, abs=1e-12)

    def test_degenerate_rejected(self):
        flat = EuclideanSimplex(((0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0)))
        with pytest.raises(DegenerateSimplexError):
            dihedral_angles(flat)


def random_rational_simplex(rng, d):
    while True:
        verts = tuple(tuple(F(rng.randint(-8, 8), rng.randint(1, 4))
                            for _ in range(d)) for _ in range(d + 1))
        s = EuclideanSimplex(verts)
        if not s.is_degenerate():
            return s


class TestRoundTrip:
    @pytest.mark.parametrize("d", [3, 4])
    def test_random_simplices(self, d):
        rng = random.Random(100 + d)
        for _ in range(20):
            s = random_rational_simplex(rng, d)
            gram = gram_from_angles(dihedral_angles(s))
            rep = fiedler_check(gram, tol=1e-9)
            assert rep.is_singular
            assert rep.rank == d
            assert rep.negative_semidefinite
            assert rep.kernel_strictly_positive
