"""Truncated Laurent series with exact rational coefficients.

A series stores its lowest exponent (``valuation``), the coefficients from
there on and an exclusive truncation exponent ``order``: every term
``x**e`` with ``e >= order`` is unknown.  Arithmetic always returns the
tightest order that is still sound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

Rational = Fraction

KINDS = ("sin", "cos", "sinh", "cosh", "exp")


def _q(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, str):
        return Fraction(v.strip())
    return Fraction(v)


@dataclass(frozen=True)
class LaurentSeries:
    valuation: int
    coeffs: tuple
    order: int

    def __post_init__(self):
        coeffs = tuple(_q(c) for c in self.coeffs)
        val = self.valuation
        if len(coeffs) != self.order - val:
            raise ValueError("coeffs length must equal order - valuation")
        # normalise: strip leading zeros, the series then starts later
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        if i:
            coeffs = coeffs[i:]
            val += i
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "valuation", val)

    # -- constructors -------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Sequence, valuation: int = 0, order: int | None = None):
        coeffs = [_q(c) for c in coeffs]
        if order is None:
            order = valuation + len(coeffs)
        if order - valuation < len(coeffs):
            coeffs = coeffs[: order - valuation]
        coeffs = coeffs + [Fraction(0)] * (order - valuation - len(coeffs))
        return cls(valuation, tuple(coeffs), order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff=1):
        if order <= exponent:
            return cls(order, (), order)
        return cls.from_coeffs([coeff], exponent, order)

    @classmethod
    def constant(cls, c, order: int):
        return cls.monomial(0, order, c)

    @classmethod
    def zero(cls, order: int):
        return cls(order, (), order)

    # -- basic queries ------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e: int) -> Fraction:
        if e >= self.order:
            raise ValueError(f"coefficient of x^{e} is beyond the truncation order {self.order}")
        if e < self.valuation:
            return Fraction(0)
        return self.coeffs[e - self.valuation]

    def terms(self):
        return [(self.valuation + i, c) for i, c in enumerate(self.coeffs) if c]

    def truncate(self, order: int) -> "LaurentSeries":
        order = min(order, self.order)
        if order <= self.valuation:
            return LaurentSeries.zero(order)
        return LaurentSeries(self.valuation, self.coeffs[: order - self.valuation], order)

    # -- arithmetic ---------------------------------------------------
    def __neg__(self):
        return LaurentSeries(self.valuation, tuple(-c for c in self.coeffs), self.order)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.constant(other, self.order)
        order = min(self.order, other.order)
        val = min(self.valuation, other.valuation, order)
        out = [Fraction(0)] * (order - val)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                e = s.valuation + i
                if e < order:
                    out[e - val] += c
        return LaurentSeries(val, tuple(out), order)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LaurentSeries":
        c = _q(c)
        return LaurentSeries(self.valuation, tuple(c * a for a in self.coeffs), self.order)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            order = min(self.valuation + other.order, other.valuation + self.order)
            return LaurentSeries.zero(order)
        val = self.valuation + other.valuation
        order = min(self.valuation + other.order, other.valuation + self.order)
        n = order - val
        out = [Fraction(0)] * n
        a, b = self.coeffs, other.coeffs
        for i in range(min(len(a), n)):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(len(b), n - i)):
                out[i + j] += ai * b[j]
        return LaurentSeries(val, tuple(out), order)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            return invert(self) ** (-n)
        result = LaurentSeries.constant(1, self.order - self.valuation)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(1 / _q(other))
        return self * invert(other)

    def derivative(self) -> "LaurentSeries":
        out = [c * (self.valuation + i) for i, c in enumerate(self.coeffs)]
        if self.is_zero():
            return LaurentSeries.zero(self.order - 1)
        return LaurentSeries(self.valuation - 1, tuple(out), self.order - 1)

    def subs_power(self, k: int) -> "LaurentSeries":
        """Substitute x -> x**k (k >= 1)."""
        if k < 1:
            raise ValueError("k must be positive")
        if self.is_zero():
            return LaurentSeries.zero(self.order * k)
        val = self.valuation * k
        order = self.order * k
        out = [Fraction(0)] * (order - val)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return LaurentSeries(val, tuple(out), order)

    def rescale(self, c) -> "LaurentSeries":
        """Substitute x -> c*x."""
        c = _q(c)
        if c == 0:
            raise ValueError("rescale by zero")
        out = tuple(a * c ** (self.valuation + i) for i, a in enumerate(self.coeffs))
        return LaurentSeries(self.valuation, out, self.order)

    def even_to_half(self) -> "LaurentSeries":
        """For an even series f(x) return F with F(x**2) = f(x)."""
        if any(c and (self.valuation + i) % 2 for i, c in enumerate(self.coeffs)):
            raise ValueError("series is not even")
        if self.is_zero():
            return LaurentSeries.zero(-((-self.order) // 2))
        val = self.valuation // 2
        order = -((-self.order) // 2)
        out = [self.coeff(2 * e) for e in range(val, order)]
        return LaurentSeries(val, tuple(out), order)

    def __repr__(self):
        if self.is_zero():
            return f"O(x^{self.order})"
        parts = []
        for e, c in self.terms():
            parts.append(f"{c}*x^{e}")
        return " + ".join(parts) + f" + O(x^{self.order})"

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.valuation, self.coeffs, self.order) == (other.valuation, other.coeffs, other.order)

    def __hash__(self):
        return hash((self.valuation, self.coeffs, self.order))

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equality of the coefficients both series know."""
        order = min(self.order, other.order)
        lo = min(self.valuation, other.valuation)
        return all(self.coeff(e) == other.coeff(e) for e in range(lo, order))


def elem_series(kind: str, scale=1, order: int = 10) -> LaurentSeries:
    """Taylor expansion of ``kind(scale*x)`` truncated at ``x**order``."""
    if kind not in KINDS:
        raise ValueError(f"unknown series kind {kind!r}")
    if order < 1:
        raise ValueError("order must be >= 1")
    a = _q(scale)
    out = []
    for e in range(order):
        base = a ** e / factorial(e)
        if kind == "exp":
            c = base
        elif kind == "sin":
            c = base * (-1) ** (e // 2) if e % 2 else 0
        elif kind == "cos":
            c = base * (-1) ** (e // 2) if e % 2 == 0 else 0
        elif kind == "sinh":
            c = base if e % 2 else 0
        else:
            c = base if e % 2 == 0 else 0
        out.append(c)
    return LaurentSeries.from_coeffs(out, 0, order)


def invert(s: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse by long division."""
    if s.is_zero():
        raise ZeroDivisionError("non-invertible series")
    v = s.valuation
    n = s.order - v
    a = s.coeffs
    lead = a[0]
    out = [Fraction(0)] * n
    out[0] = 1 / lead
    for i in range(1, n):
        acc = Fraction(0)
        for j in range(1, i + 1):
            if a[j]:
                acc += a[j] * out[i - j]
        out[i] = -acc / lead
    return LaurentSeries(-v, tuple(out), -v + n)


def residue(s: LaurentSeries) -> Fraction:
    """Coefficient of x^-1."""
    if s.order <= -1:
        raise ValueError("residue not determined at this truncation order")
    return s.coeff(-1)


def b_coeffs(n: int) -> list:
    """Even coefficients b_0..b_n of x/sin x."""
    if n < 0:
        raise ValueError("n must be >= 0")
    order = 2 * n + 3
    sinx_over_x = LaurentSeries.from_coeffs(elem_series("sin", 1, order + 1).coeffs, 0, order)
    inv = invert(sinx_over_x)
    return [inv.coeff(2 * k) for k in range(n + 1)]


# ---------------------------------------------------------------------------
# the eight trigonometric residue identities
# Each case is Res of a quotient of trig functions; closed forms follow from
# the substitution y = sin x.  Closed forms below hold for every n >= 0.

def _sin(c, order):
    return elem_series("sin", c, order)


def _cos(c, order):
    return elem_series("cos", c, order)


def _identity_integrand(case: int, n: int, prec: int) -> LaurentSeries:
    # numerator and denominator as (list of cos factors, list of sin factors)
    if case == 1:
        num, den = [], [(1, 2 * n), (2, 1)]
    elif case == 2:
        num, den = [], [(1, 2 * n), (4, 1)]
    elif case == 3:
        num, den = [1], [(1, 2 * n + 1)]
    elif case == 4:
        num, den = [1], [(1, 2 * n), (3, 1)]
    elif case == 5:
        num, den = [1, 1], [(1, 2 * n), (2, 1)]
    elif case == 6:
        num, den = [1, 2], [(1, 2 * n + 1)]
    elif case == 7:
        num, den = [3], [(1, 2 * n - 1), (3, 2)]
    elif case == 8:
        num, den = [1, 2], [(1, 2 * n - 1), (2, 2)]
    else:
        raise ValueError(f"unknown residue identity case {case}")
    top = LaurentSeries.constant(1, prec)
    for c in num:
        top = top * _cos(c, prec)
    bottom = LaurentSeries.constant(1, prec)
    for c, e in den:
        if e >= 0:
            bottom = bottom * _sin(c, prec) ** e
        else:
            top = top * _sin(c, prec) ** (-e)
    return top * invert(bottom)


def _identity_closed(case: int, n: int) -> Fraction:
    F = Fraction
    if case == 1:
        return F(1, 2)
    if case == 2:
        return F(2 ** (n + 1) - 1, 4)
    if case == 3:
        return F(1) if n == 0 else F(0)
    if case == 4:
        return F(4 ** n, 3 ** (n + 1))
    if case == 5:
        return F(1, 2) if n == 0 else F(0)
    if case == 6:
        return {0: F(1), 1: F(-2)}.get(n, F(0))
    if case == 7:
        return F(-(4 ** n) * (2 * n - 1), 3 ** (n + 2))
    if case == 8:
        return F(1, 4) if n == 0 else F(-1, 4)
    raise ValueError(f"unknown residue identity case {case}")


# ranges in which the familiar short form of each identity is usually quoted;
# the closed forms above also cover the boundary values
QUOTED_RANGE = {1: 0, 2: 0, 3: 1, 4: 0, 5: 1, 6: 2, 7: 0, 8: 1}


def residue_identity(case: int, n: int, via: str = "closed_form") -> Fraction:
    if case not in range(1, 9):
        raise ValueError(f"unknown residue identity case {case}")
    if n < 0:
        raise ValueError(f"n={n} outside the validity range n >= 0")
    if via == "closed_form":
        return _identity_closed(case, n)
    if via == "series":
        return residue(_identity_integrand(case, n, 2 * n + 8))
    raise ValueError(f"unknown evaluation path {via!r}")


def poly_eval(coeffs: Iterable, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc
