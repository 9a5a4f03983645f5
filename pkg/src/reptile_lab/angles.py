"""Exact symbolic angles.

An angle is a rational linear form q_pi*pi + q_a*alpha + q_b*beta + q_g*gamma.
A relation set rewrites symbols away (e.g. gamma -> pi/2, alpha -> pi - 2*beta)
and gives every form a unique canonical representative, so label equality in
diagrams is decidable.

Exact cosines are available for rational multiples of pi with denominator up
to 6 (values in Q or a quadratic field), and, under a cos-parametrisation of
beta, for integer combinations k*pi + r*beta (values in Q[t], t = cos beta).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exactmath import Poly, QuadExt, Rational

SYMBOLS = ("pi", "alpha", "beta", "gamma")


class NoExactCosineError(ValueError):
    """The angle has no supported exact cosine; fall back to numerics."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class AngleForm:
    """Rational linear form over (pi, alpha, beta, gamma)."""

    coeffs: tuple  # 4 Fractions, ordered as SYMBOLS

    @staticmethod
    def of(pi=0, alpha=0, beta=0, gamma=0) -> "AngleForm":
        return AngleForm((_frac(pi), _frac(alpha), _frac(beta), _frac(gamma)))

    @staticmethod
    def pi_multiple(q) -> "AngleForm":
        return AngleForm.of(pi=_frac(q))

    def __add__(self, other: "AngleForm") -> "AngleForm":
        return AngleForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "AngleForm") -> "AngleForm":
        return AngleForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "AngleForm":
        return AngleForm(tuple(-a for a in self.coeffs))

    def __rmul__(self, k) -> "AngleForm":
        k = _frac(k)
        return AngleForm(tuple(k * a for a in self.coeffs))

    __mul__ = __rmul__

    def coefficient(self, symbol: str) -> Fraction:
        return self.coeffs[SYMBOLS.index(symbol)]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def pi_fraction(self) -> Optional[Fraction]:
        """The q with self == q*pi, or None if a symbol is present."""
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def substitute(self, symbol: str, replacement: "AngleForm") -> "AngleForm":
        i = SYMBOLS.index(symbol)
        c = self.coeffs[i]
        if c == 0:
            return self
        base = list(self.coeffs)
        base[i] = Fraction(0)
        return AngleForm(tuple(base)) + c * replacement

    def eval(self, assignment: "AngleAssignment") -> float:
        """Numeric value in radians."""
        values = (math.pi, assignment.alpha, assignment.beta, assignment.gamma)
        for c, name, v in zip(self.coeffs, SYMBOLS, values):
            if c != 0 and name != "pi" and v is None:
                raise KeyError(f"assignment missing symbol {name}")
        return float(sum(float(c) * v for c, v in zip(self.coeffs, values) if c != 0))

    def sort_key(self):
        return tuple(self.coeffs)

    def __repr__(self):
        return f"AngleForm({format_angle(self)!r})"


PI = AngleForm.of(pi=1)
ALPHA = AngleForm.of(alpha=1)
BETA = AngleForm.of(beta=1)
GAMMA = AngleForm.of(gamma=1)


@dataclass(frozen=True)
class RelationSet:
    """Ordered substitution rules, each eliminating one symbol.

    Rules are applied left to right; the rule list must be acyclic in the
    sense that after one full pass every eliminated symbol is gone.
    """

    rules: tuple  # of (symbol, AngleForm)

    @staticmethod
    def of(*rules) -> "RelationSet":
        return RelationSet(tuple((s, f) for s, f in rules))

    def normalize(self, form: AngleForm) -> AngleForm:
        out = form
        for sym, rep in self.rules:
            out = out.substitute(sym, rep)
        for sym, _ in self.rules:
            if out.coefficient(sym) != 0:
                raise ValueError(f"cyclic relation set: {sym} reappears")
        return out


EMPTY_RELATIONS = RelationSet(())


def normalize(form: AngleForm, relations: RelationSet) -> AngleForm:
    return relations.normalize(form)


@dataclass(frozen=True)
class AngleAssignment:
    """Numeric values (radians) for alpha, beta, gamma."""

    alpha: Optional[float] = None
    beta: Optional[float] = None
    gamma: Optional[float] = None

    def ordered_triangle(self) -> "AngleAssignment":
        a, b, g = sorted((self.alpha, self.beta, self.gamma))
        if not (0 < a <= b <= g < math.pi):
            raise ValueError("not a triangle angle basis")
        return AngleAssignment(a, b, g)


# ---------------------------------------------------------------------------
# Text format: "1/2 pi", "2/9 pi", "alpha+2*beta", "3*alpha", ...
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"^\s*(?:(?P<coef>-?\d+(?:/\d+)?)\s*\*?\s*)?(?P<sym>pi|alpha|beta|gamma)\s*$"
    r"|^\s*(?P<bare>-?\d+(?:/\d+)?)\s*$"
)


def parse_angle(text: str) -> AngleForm:
    """Parse an angle literal; inverse of format_angle."""
    s = text.strip()
    if not s:
        raise ValueError("empty angle literal")
    # split into signed terms at top level
    terms = []
    buf = ""
    sign = 1
    for ch in s:
        if ch in "+-" and buf.strip():
            terms.append((sign, buf))
            buf = ""
            sign = 1 if ch == "+" else -1
        elif ch in "+-" and not buf.strip():
            sign = sign if ch == "+" else -sign
        else:
            buf += ch
    terms.append((sign, buf))
    out = AngleForm.of()
    for sign, term in terms:
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"bad angle term {term!r} in {text!r}")
        if m.group("bare") is not None:
            raise ValueError(f"bare number {term!r}: angles need a pi factor")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        coef *= sign
        out = out + coef * AngleForm.of(**{m.group("sym"): 1})
    return out


def format_angle(form: AngleForm) -> str:
    """Canonical text for an angle form; parse_angle round-trips it."""
    parts = []
    for c, sym in zip(form.coeffs, SYMBOLS):
        if c == 0:
            continue
        mag = abs(c)
        if sym == "pi":
            body = "pi" if mag == 1 else f"{mag} pi"
        else:
            body = sym if mag == 1 else f"{mag}*{sym}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    if not parts:
        return "0 pi"
    return "".join(parts)


# ---------------------------------------------------------------------------
# Exact cosines
# ---------------------------------------------------------------------------

_SUPPORTED_DENOMS = (1, 2, 3, 4, 5, 6)


def _cos_pi_fraction(q: Fraction) -> Union[Rational, QuadExt]:
    """cos(q*pi) exactly, for q with reduced denominator in 1..6."""
    q = q % 2
    if q > 1:
        q = 2 - q  # cos(2pi - x) = cos(x)
    d = q.denominator
    if d not in _SUPPORTED_DENOMS:
        raise NoExactCosineError(f"no exact cosine for {q} pi (denominator {d})")
    n = q.numerator
    if d == 1:
        return Fraction(1) if n == 0 else Fraction(-1)
    if d == 2:
        return Fraction(0)
    if d == 3:
        return Fraction(1, 2) if n == 1 else Fraction(-1, 2)
    if d == 4:
        half = Fraction(1, 2) if n == 1 else Fraction(-1, 2)
        return QuadExt(Fraction(0), half, 2)
    if d == 6:
        half = Fraction(1, 2) if n == 1 else Fraction(-1, 2)
        return QuadExt(Fraction(0), half, 3)
    # d == 5: cos(pi/5) = (1+sqrt5)/4, cos(2pi/5) = (sqrt5-1)/4
    table = {
        1: QuadExt(Fraction(1, 4), Fraction(1, 4), 5),
        2: QuadExt(Fraction(-1, 4), Fraction(1, 4), 5),
        3: QuadExt(Fraction(1, 4), Fraction(-1, 4), 5),
        4: QuadExt(Fraction(-1, 4), Fraction(-1, 4), 5),
    }
    return table[n]


def _chebyshev(r: int) -> Poly:
    # T_r with T_r(cos x) = cos(r x)
    t0, t1 = Poly.constant(1), Poly.x()
    if r == 0:
        return t0
    for _ in range(r - 1):
        t0, t1 = t1, Poly([0, 2]) * t1 - t0
    return t1


def exact_cos(form: AngleForm, relations: RelationSet = EMPTY_RELATIONS,
              as_poly_in: Optional[str] = None):
    """Exact cosine of the angle under the given relations.

    Returns a Fraction or QuadExt for rational multiples of pi with
    denominator up to 6.  With as_poly_in="beta", forms reducing to
    k*pi + r*beta (k, r integers) yield a Poly in t = cos(beta).
    Raises NoExactCosineError otherwise.
    """
    f = relations.normalize(form)
    q = f.pi_fraction()
    if q is not None:
        return _cos_pi_fraction(q)
    if as_poly_in == "beta" and f.coefficient("alpha") == 0 == f.coefficient("gamma"):
        k, r = f.coefficient("pi"), f.coefficient("beta")
        if k.denominator == 1 and r.denominator == 1:
            p = _chebyshev(abs(int(r)))
            return p if int(k) % 2 == 0 else -p
    raise NoExactCosineError(f"no exact cosine for {format_angle(f)}")
