"""Spherical triangle primitives on the unit 2-sphere.

Angles are the source of truth; edges are always derived through the law of
cosines for angles.  Validity follows the classical facts for spherical
triangles: angle sum above pi, each angle in (0, pi), and the spherical
triangle inequality (the two largest angles sum to less than pi plus the
smallest), which is equivalent to the area bound 2*min-angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .angles import AngleForm, RelationSet

AngleLike = Union[float, Fraction]


def _rad(x: AngleLike) -> float:
    # Fractions are interpreted as fractions of pi; floats as radians.
    if isinstance(x, Fraction):
        return float(x) * math.pi
    return float(x)


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


def is_valid(angles: Sequence[AngleLike]) -> ValidityReport:
    """Strict spherical-triangle validity for an angle triple.

    Exact when all three angles are Fractions of pi; numeric otherwise.
    """
    if len(angles) != 3:
        return ValidityReport(False, "need exactly three angles")
    if all(isinstance(a, Fraction) for a in angles):
        one = Fraction(1)
        qs = sorted(angles)
        if any(q <= 0 or q >= one for q in qs):
            return ValidityReport(False, "angle outside (0, pi)")
        if qs[0] + qs[1] + qs[2] <= one:
            return ValidityReport(False, "angle sum not above pi")
        if qs[1] + qs[2] >= one + qs[0]:
            return ValidityReport(False, "spherical triangle inequality fails")
        return ValidityReport(True)
    vs = sorted(_rad(a) for a in angles)
    if any(v <= 0 or v >= math.pi for v in vs):
        return ValidityReport(False, "angle outside (0, pi)")
    if vs[0] + vs[1] + vs[2] <= math.pi:
        return ValidityReport(False, "angle sum not above pi")
    if vs[1] + vs[2] >= math.pi + vs[0]:
        return ValidityReport(False, "spherical triangle inequality fails")
    return ValidityReport(True)


class InvalidTriangleError(ValueError):
    pass


@dataclass(frozen=True)
class SphTriangle:
    """Spherical triangle given by its three angles (radians).

    Edge a is opposite the first angle, b the second, c the third.
    """

    angles: tuple  # 3 floats, radians

    def __post_init__(self):
        report = is_valid(self.angles)
        if not report:
            raise InvalidTriangleError(report.reason)
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))

    @staticmethod
    def from_pi_fractions(*qs: Fraction) -> "SphTriangle":
        report = is_valid(qs)
        if not report:
            raise InvalidTriangleError(report.reason)
        return SphTriangle(tuple(float(q) * math.pi for q in qs))

    @property
    def area(self) -> float:
        """Spherical excess: angle sum minus pi."""
        return math.fsum(self.angles) - math.pi

    @property
    def edges(self) -> tuple:
        return edge_lengths(self.angles)


def area(triangle: SphTriangle) -> float:
    return triangle.area


def edge_lengths(angles: Sequence[AngleLike]) -> tuple:
    """Edges (a, b, c) from the law of cosines for angles; edge x opposite x.

    cos(c) = (cos gamma' + cos alpha' cos beta') / (sin alpha' sin beta'),
    cyclically.
    """
    report = is_valid(angles)
    if not report:
        raise InvalidTriangleError(report.reason)
    va, vb, vc = (_rad(a) for a in angles)

    def edge(opp, l, r):
        num = math.cos(opp) + math.cos(l) * math.cos(r)
        den = math.sin(l) * math.sin(r)
        return math.acos(max(-1.0, min(1.0, num / den)))

    return (edge(va, vb, vc), edge(vb, vc, va), edge(vc, va, vb))


def angles_from_edges(edges: Sequence[float]) -> tuple:
    """Dual direction (law of cosines for sides); used as a round-trip check."""
    a, b, c = edges

    def ang(opp, l, r):
        num = math.cos(opp) - math.cos(l) * math.cos(r)
        den = math.sin(l) * math.sin(r)
        return math.acos(max(-1.0, min(1.0, num / den)))

    return (ang(a, b, c), ang(b, c, a), ang(c, a, b))


@dataclass(frozen=True)
class Lune:
    """Spherical 2-gon between half great circles meeting at angle phi."""

    phi: float

    def __post_init__(self):
        if not (0 < self.phi < math.pi):
            raise ValueError("lune angle must be in (0, pi)")

    @property
    def area(self) -> float:
        return 2 * self.phi


# ---------------------------------------------------------------------------
# Straight-angle (pi) combinations
# ---------------------------------------------------------------------------


def straight_angle_combinations(angles: Sequence[AngleLike], bound: int = 20,
                                tol: float = 1e-9) -> set:
    """All nonnegative integer coefficient vectors m with sum(m_i * phi_i) = pi.

    Exact when every angle is a Fraction of pi; otherwise numeric to tol.
    Coefficients are searched in [0, bound].
    """
    if any(_rad(a) <= 0 for a in angles):
        raise ValueError("angles must be positive")
    exact = all(isinstance(a, Fraction) for a in angles)
    k = len(angles)
    out = set()
    coeffs = [0] * k

    if exact:
        target = Fraction(1)

        def rec(i, remaining):
            if i == k:
                if remaining == 0:
                    out.add(tuple(coeffs))
                return
            q = angles[i]
            top = min(bound, int(remaining / q) if q > 0 else 0)
            for m in range(top + 1):
                coeffs[i] = m
                rec(i + 1, remaining - m * q)
            coeffs[i] = 0

        rec(0, target)
        return out

    vals = [_rad(a) for a in angles]

    def recf(i, remaining):
        if i == k:
            if abs(remaining) <= tol:
                out.add(tuple(coeffs))
            return
        v = vals[i]
        top = min(bound, int((remaining + tol) / v))
        for m in range(max(0, top) + 1):
            coeffs[i] = m
            recf(i + 1, remaining - m * v)
        coeffs[i] = 0

    recf(0, math.pi)
    return out


def corner_angle_solutions(fixed: Sequence[Fraction], lo: Fraction, hi: Fraction,
                           max_mult: int = 64) -> list:
    """Solve m*q + sum(n_j * f_j) = 1 for q in (lo, hi), m >= 1, n_j >= 0.

    Everything is in units of pi.  Returns the sorted list of admissible
    rational q, i.e. the free angles q*pi that can complete a straight angle
    together with the fixed ones.
    """
    if not (0 < lo < hi):
        raise ValueError("need 0 < lo < hi")
    sols = set()

    def rec(j, used):
        if used >= 1:
            return
        if j == len(fixed):
            rest = 1 - used
            m = 1
            while m <= max_mult and Fraction(rest, m) > lo:
                q = Fraction(rest, m)
                if lo < q < hi:
                    sols.add(q)
                m += 1
            return
        n = 0
        while used + n * fixed[j] < 1:
            rec(j + 1, used + n * fixed[j])
            n += 1

    rec(0, Fraction(0))
    return sorted(sols)


def corner_angle_solutions_rational_scan(fixed: Sequence[Fraction], lo: Fraction,
                                         hi: Fraction, max_denominator: int = 100) -> list:
    """Same solution set by scanning rationals q = s/r, r <= max_denominator.

    Independent route kept as a guard: enumerate candidate rational angles in
    (lo, hi) and keep q admitting m >= 1, n_j >= 0 with m*q + sum n_j f_j = 1.
    """
    found = set()
    for r in range(2, max_denominator + 1):
        for s in range(1, r):
            q = Fraction(s, r)
            if not (lo < q < hi) or q in found:
                continue
            # residual after n_j fixed angles must be a positive multiple of q
            def feasible(j, used):
                if j == len(fixed):
                    rest = 1 - used
                    return rest > 0 and (rest / q).denominator == 1
                n = 0
                while used + n * fixed[j] < 1:
                    if feasible(j + 1, used + n * fixed[j]):
                        return True
                    n += 1
                return False

            if feasible(0, Fraction(0)):
                found.add(q)
    return sorted(found)


# ---------------------------------------------------------------------------
# Symbolic validity on a beta-interval (for parametric diagram labels)
# ---------------------------------------------------------------------------


def const_sign_on_interval(form: AngleForm, beta_lo: Fraction, beta_hi: Fraction) -> int:
    """Sign of q_pi*pi + q_b*beta for all beta in the open interval (lo, hi)*pi.

    Returns +1, -1 or 0 (identically zero); raises if the sign changes
    inside the interval.  The form is linear in beta, so endpoint values
    decide everything.
    """
    if form.coefficient("alpha") != 0 or form.coefficient("gamma") != 0:
        raise ValueError("form must be reduced to pi and beta")
    qp, qb = form.coefficient("pi"), form.coefficient("beta")
    if qp == 0 and qb == 0:
        return 0
    v_lo = qp + qb * beta_lo
    v_hi = qp + qb * beta_hi
    if v_lo >= 0 and v_hi >= 0:
        return 1  # endpoints excluded; a linear form can vanish at most once
    if v_lo <= 0 and v_hi <= 0:
        return -1
    raise ValueError("sign not constant on the beta interval")


def is_valid_symbolic(forms, relations: RelationSet, beta_lo: Fraction,
                      beta_hi: Fraction) -> ValidityReport:
    """Validity of a triple of angle forms, uniform over beta in an interval.

    The forms must reduce (under the relations) to linear forms in pi and
    beta with interval-constant comparison signs.  An identical equality
    (the degenerate case of the spherical triangle inequality) makes the
    triple invalid, matching the strict inequalities of the numeric check.
    """
    reduced = [relations.normalize(f) for f in forms]

    def sgn(form):
        return const_sign_on_interval(form, beta_lo, beta_hi)

    one = AngleForm.pi_multiple(1)
    for f in reduced:
        if sgn(f) <= 0:
            return ValidityReport(False, "angle not positive")
        if sgn(one - f) <= 0:
            return ValidityReport(False, "angle not below pi")
    total = reduced[0] + reduced[1] + reduced[2]
    if sgn(total - one) <= 0:
        return ValidityReport(False, "angle sum not above pi")
    # order the three forms on the interval, then test L1 + L2 < pi + L0
    ordered = list(reduced)
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            if sgn(ordered[j] - ordered[i]) < 0:
                ordered[i], ordered[j] = ordered[j], ordered[i]
    slack = one + ordered[0] - ordered[1] - ordered[2]
    if sgn(slack) <= 0:
        return ValidityReport(False, "spherical triangle inequality fails")
    return ValidityReport(True)
