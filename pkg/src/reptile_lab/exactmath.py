"""Exact arithmetic substrate.

Rationals (stdlib Fraction), dense univariate polynomials over Q,
quadratic field elements a + b*sqrt(m), exact determinants of small
matrices via fraction-free (Bareiss) elimination, and Sturm-sequence
real root counting / isolation.

Everything here is immutable and pure; no rounding happens anywhere
except in the explicitly numeric evaluation helpers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction


class RingMismatchError(TypeError):
    """Operands live in different coefficient rings (e.g. sqrt(2) vs sqrt(5))."""


class ZeroPolynomialError(ValueError):
    """Operation undefined for the zero polynomial."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# Polynomials over Q
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial over Q, coefficients in ascending degree.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(c) -> "Poly":
        return Poly([_frac(c)])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d, lc = other.degree, other.leading()
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return Poly(q), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        out = x * 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    # -- gcd / square-free -------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.leading()
        return Poly([c / lc for c in self.coeffs])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def square_free_part(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial")
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return self.exact_div(g).monic()


def _coerce_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.constant(x)
    return None


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm chain of the square-free part of p."""
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    f = p.square_free_part()
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2].divmod(chain[-1])[1]))
    chain.pop()
    return chain


def _sign_at(p: Poly, x) -> int:
    # x is a Fraction, or +/- infinity encoded as the strings "+inf"/"-inf"
    if p.is_zero():
        return 0
    if x == "+inf":
        return 1 if p.leading() > 0 else -1
    if x == "-inf":
        s = 1 if p.leading() > 0 else -1
        return s if p.degree % 2 == 0 else -s
    v = p(x)
    return 0 if v == 0 else (1 if v > 0 else -1)


def _variations(chain: Sequence[Poly], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    lo=None / hi=None mean -infinity / +infinity.  Multiplicities are
    ignored (the square-free part is taken first).  Endpoint roots are
    never counted.
    """
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    if lo is not None and hi is not None and _frac(lo) >= _frac(hi):
        raise ValueError("empty interval")
    chain = sturm_chain(p)
    f = chain[0]
    a = "-inf" if lo is None else _frac(lo)
    b = "+inf" if hi is None else _frac(hi)
    count = _variations(chain, a) - _variations(chain, b)
    if b != "+inf" and f(b) == 0:
        count -= 1  # V(a)-V(b) counts roots in (a, b]
    return count


@dataclass(frozen=True)
class RootInterval:
    """Isolating interval for one distinct real root.

    For a root found exactly (rational), lo == hi == the root.
    Otherwise the open interval (lo, hi) contains exactly one root.
    """

    lo: Fraction
    hi: Fraction
    exact: bool

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots, via the rational root theorem on a cleared poly."""
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    roots = []
    # strip t^k
    cs = list(p.coeffs)
    k = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        k += 1
    if k:
        roots.append(Fraction(0))
    if not cs or len(cs) == 1:
        return roots
    q = Poly(cs)
    den = math.lcm(*[c.denominator for c in q.coeffs])
    ints = [int(c * den) for c in q.coeffs]
    g = math.gcd(*[abs(c) for c in ints if c != 0])
    ints = [c // g for c in ints]
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return sorted(set(out))

    for num in divisors(a0):
        for dnm in divisors(an):
            for cand in (Fraction(num, dnm), Fraction(-num, dnm)):
                if q(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def isolate_roots(p: Poly, precision=Fraction(1, 10000)) -> list[RootInterval]:
    """Disjoint isolating intervals (width <= precision) for all real roots.

    Rational roots are detected by exact evaluation and reported as exact
    point intervals; the remaining roots are isolated by Sturm bisection on
    open intervals with rational non-root endpoints.
    """
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    precision = _frac(precision)
    f = p.square_free_part()
    out = [RootInterval(r, r, True) for r in _rational_roots(f)]
    for r in out:
        f = f.exact_div(Poly([-r.lo, 1]))
    if f.degree >= 1:
        # Cauchy bound; f has no rational roots left, so rational endpoints
        # are never roots and open-interval Sturm counts are clean.
        lc = abs(f.leading())
        bound = 1 + max(abs(c) for c in f.coeffs) / lc
        chain = sturm_chain(f)
        stack = [(-bound, bound, _variations(chain, -bound) - _variations(chain, bound))]
        while stack:
            lo, hi, cnt = stack.pop()
            if cnt == 0:
                continue
            if cnt == 1 and hi - lo <= precision:
                out.append(RootInterval(lo, hi, False))
                continue
            mid = (lo + hi) / 2
            if f(mid) == 0:  # cannot happen (no rational roots), keep safe
                mid += (hi - lo) / 4
            vm = _variations(chain, mid)
            vl = _variations(chain, lo)
            vh = _variations(chain, hi)
            stack.append((lo, mid, vl - vm))
            stack.append((mid, hi, vm - vh))
    return sorted(out, key=lambda r: r.midpoint)


# ---------------------------------------------------------------------------
# Quadratic field Q(sqrt(m))
# ---------------------------------------------------------------------------


def _square_free(m: int) -> bool:
    if m < 1:
        return False
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class QuadExt:
    """Element a + b*sqrt(m) of Q(sqrt(m)), m square-free positive."""

    a: Fraction
    b: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if not _square_free(self.m):
            raise ValueError(f"field tag {self.m} is not square-free positive")

    def _match(self, other) -> "QuadExt":
        if isinstance(other, (int, Fraction)):
            return QuadExt(_frac(other), Fraction(0), self.m)
        if isinstance(other, QuadExt):
            if other.m != self.m:
                raise RingMismatchError(f"sqrt({self.m}) vs sqrt({other.m})")
            return other
        raise TypeError(type(other).__name__)

    def __add__(self, other):
        o = self._match(other)
        return QuadExt(self.a + o.a, self.b + o.b, self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        return self + (-self._match(other))

    def __rsub__(self, other):
        return self._match(other) - self

    def __mul__(self, other):
        o = self._match(other)
        return QuadExt(self.a * o.a + self.m * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.m)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.a * self.a - self.m * self.b * self.b
        if n == 0:
            if self.a == 0 and self.b == 0:
                raise ZeroDivisionError("inverse of zero")
            # a^2 = m b^2 with m square-free > 1 forces a = b = 0
            raise ZeroDivisionError("inverse of zero")
        return QuadExt(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        return self * self._match(other).inverse()

    def __rtruediv__(self, other):
        return self._match(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            if other.m != self.m:
                return self.b == 0 == other.b and self.a == other.a
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __float__(self):
        # binary64 evaluation: two roundings (sqrt and the fma-less combine);
        # error is a few ulp, far below the 1e-9 tolerances used downstream.
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __repr__(self):
        return f"QuadExt({self.a} + {self.b}*sqrt({self.m}))"


# ---------------------------------------------------------------------------
# Exact matrices and determinants
# ---------------------------------------------------------------------------

_RING_RATIONAL = "Q"
_RING_POLY = "Q[t]"


def _ring_of(entries) -> str:
    has_poly = any(isinstance(e, Poly) for row in entries for e in row)
    quad_ms = {e.m for row in entries for e in row if isinstance(e, QuadExt)}
    if has_poly and quad_ms:
        raise RingMismatchError("polynomial and quadratic-field entries mixed")
    if len(quad_ms) > 1:
        raise RingMismatchError(f"mixed quadratic fields {sorted(quad_ms)}")
    if has_poly:
        return _RING_POLY
    if quad_ms:
        return f"Q(sqrt({quad_ms.pop()}))"
    return _RING_RATIONAL


class ExactMatrix:
    """Square matrix over Q, Q[t] or Q(sqrt(m)); rationals are coerced up."""

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        ring = _ring_of(rows)
        if ring == _RING_POLY:
            rows = [[e if isinstance(e, Poly) else Poly.constant(e) for e in r]
                    for r in rows]
        elif ring != _RING_RATIONAL:
            m = next(e.m for r in rows for e in r if isinstance(e, QuadExt))
            rows = [[e if isinstance(e, QuadExt) else QuadExt(_frac(e), Fraction(0), m)
                     for e in r] for r in rows]
        else:
            rows = [[_frac(e) for e in r] for r in rows]
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.ring = ring

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        n = self.n
        return ExactMatrix(
            [[sum2(self.rows[i][k] * other.rows[k][j] for k in range(n))
              for j in range(n)] for i in range(n)])

    def det(self):
        """Exact determinant via fraction-free (Bareiss) elimination.

        All intermediate divisions are exact in the coefficient ring, so no
        fractions of polynomials ever appear and nothing is rounded.
        """
        n = self.n
        a = [list(r) for r in self.rows]
        if n == 0:
            return Fraction(1)
        sign = 1
        prev = None
        for k in range(n - 1):
            if _is_zero_entry(a[k][k]):
                for i in range(k + 1, n):
                    if not _is_zero_entry(a[i][k]):
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return self._zero()
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                    a[i][j] = num if prev is None else _exact_div_entry(num, prev)
                a[i][k] = self._zero()
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return d if sign == 1 else -d

    def _zero(self):
        if self.ring == _RING_POLY:
            return Poly()
        if self.ring == _RING_RATIONAL:
            return Fraction(0)
        m = self.rows[0][0].m
        return QuadExt(Fraction(0), Fraction(0), m)

    def to_float(self):
        return [[_entry_float(e) for e in row] for row in self.rows]


def sum2(items):
    items = list(items)
    out = items[0]
    for x in items[1:]:
        out = out + x
    return out


def _is_zero_entry(e) -> bool:
    if isinstance(e, Poly):
        return e.is_zero()
    if isinstance(e, QuadExt):
        return e.is_zero()
    return e == 0


def _exact_div_entry(num, den):
    if isinstance(num, Poly):
        return num.exact_div(den)
    if isinstance(num, QuadExt):
        return num / den
    return num / den


def _entry_float(e):
    if isinstance(e, (Fraction, QuadExt)):
        return float(e)
    raise TypeError("no generic float value for polynomial entries")
