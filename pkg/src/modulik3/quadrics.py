"""Pencils of quadrics, their discriminant forms, and divisor lattice checks.

The discriminant det(x1 Q1 - x2 Q2) is computed exactly by evaluating
det(t Q1 - Q2) at N + 1 integers and interpolating.  Squarefreeness and
factorisation over Q use sympy.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import sympy

Matrix = Tuple[Tuple[Fraction, ...], ...]


class DegeneratePencilError(ValueError):
    pass


def _matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def diag(entries) -> Matrix:
    n = len(entries)
    return _matrix([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def identity(n: int) -> Matrix:
    return diag([1] * n)


def det(m: Matrix) -> Fraction:
    a = [list(row) for row in m]
    n = len(a)
    sign, out = 1, Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        out *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return sign * out


def rank(m: Matrix) -> int:
    a = [list(row) for row in m]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, n_rows):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def _combine(s, A: Matrix, t, B: Matrix) -> Matrix:
    return tuple(tuple(s * a - t * b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def transform(A: Matrix, M: Matrix) -> Matrix:
    """A^T M A."""
    n = len(M)
    AT = list(zip(*A))
    MA = [[sum((M[i][k] * A[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
    return tuple(tuple(sum((AT[i][k] * MA[k][j] for k in range(n)), Fraction(0)) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class QuadricPencil:
    Q1: Matrix
    Q2: Matrix

    def __post_init__(self):
        q1, q2 = _matrix(self.Q1), _matrix(self.Q2)
        object.__setattr__(self, "Q1", q1)
        object.__setattr__(self, "Q2", q2)
        n = len(q1)
        if len(q2) != n or any(len(r) != n for r in q1 + q2):
            raise ValueError("pencil matrices must be square of equal size")
        for q in (q1, q2):
            if any(q[i][j] != q[j][i] for i in range(n) for j in range(n)):
                raise ValueError("pencil matrices must be symmetric")

    @property
    def size(self) -> int:
        return len(self.Q1)

    def member(self, x1, x2) -> Matrix:
        return _combine(Fraction(x1), self.Q1, Fraction(x2), self.Q2)

    def swapped(self) -> "QuadricPencil":
        return QuadricPencil(self.Q2, self.Q1)


@dataclass(frozen=True)
class BinaryForm:
    """sum_i coeffs[i] x1^i x2^(degree - i)."""

    degree: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("a binary form of degree n has n + 1 coefficients")

    def __call__(self, x1, x2) -> Fraction:
        x1, x2 = Fraction(x1), Fraction(x2)
        return sum((c * x1 ** i * x2 ** (self.degree - i) for i, c in enumerate(self.coeffs)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def swap(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(reversed(self.coeffs)))

    def dehomogenized(self) -> sympy.Poly:
        t = sympy.Symbol("t")
        return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], t, domain="QQ")

    def __str__(self):
        out = ""
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            j = self.degree - i
            mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in (("x1", i), ("x2", j)) if e)
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else f"{mag}")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out or "0"


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> List[Fraction]:
    """Coefficients (constant first) of the polynomial through the points, by Newton's method."""
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # poly = poly * (t - xs[k]) + coef[k]
        new = [Fraction(0)] * n
        for i, c in enumerate(poly):
            if c:
                if i + 1 < n:
                    new[i + 1] += c
                new[i] -= c * xs[k]
        new[0] += coef[k]
        poly = new
    return poly


def pencil_disc(p: QuadricPencil) -> BinaryForm:
    n = p.size
    ts = [Fraction(i) for i in range(n + 1)]
    vals = [det(p.member(t, 1)) for t in ts]
    return BinaryForm(n, tuple(interpolate(ts, vals)))


def _finite_part(f: BinaryForm):
    poly = f.dehomogenized()
    at_infinity = f.degree - poly.degree()
    return poly, at_infinity


def is_simple(p: QuadricPencil) -> Tuple[bool, Optional[int]]:
    f = pencil_disc(p)
    if f.is_zero():
        raise DegeneratePencilError("degenerate pencil")
    poly, at_inf = _finite_part(f)
    squarefree = poly.degree() == 0 or sympy.gcd(poly, poly.diff()).degree() == 0
    simple = squarefree and at_inf <= 1
    return simple, ((p.size - 2) // 2 if simple else None)


@dataclass(frozen=True)
class DegenerateMember:
    root: Union[Fraction, str]
    corank: int
    count: int = 1

    def __str__(self):
        return f"{self.root}: corank {self.corank}" + (f" ({self.count} conjugate roots)" if self.count > 1 else "")


def _corank_over_extension(p: QuadricPencil, factor: sympy.Poly) -> int:
    """Corank of t Q1 - Q2 over Q[t]/(factor)."""
    t = factor.gen

    def red(x):
        return sympy.Poly(x, t, domain="QQ").rem(factor)

    n = p.size
    a = [[red(t * sympy.Rational(p.Q1[i][j].numerator, p.Q1[i][j].denominator)
              - sympy.Rational(p.Q2[i][j].numerator, p.Q2[i][j].denominator)) for j in range(n)] for i in range(n)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if not a[i][c].is_zero), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = sympy.Poly(sympy.invert(a[r][c].as_expr(), factor.as_expr(), t), t, domain="QQ")
        for i in range(r + 1, n):
            if not a[i][c].is_zero:
                f = (a[i][c] * inv).rem(factor)
                a[i] = [(x - f * y).rem(factor) for x, y in zip(a[i], a[r])]
        r += 1
    return n - r


def degenerate_members(p: QuadricPencil) -> List[DegenerateMember]:
    f = pencil_disc(p)
    if f.is_zero():
        raise DegeneratePencilError("degenerate pencil")
    poly, at_inf = _finite_part(f)
    out = []
    if poly.degree() > 0:
        _, factors = poly.factor_list()
        for fac, _mult in sorted(factors, key=lambda fm: (fm[0].degree(), str(fm[0].as_expr()))):
            if fac.degree() == 1:
                a, b = fac.all_coeffs()
                root = Fraction(int((-b / a).p), int((-b / a).q))
                out.append(DegenerateMember(root, p.size - rank(p.member(root, 1))))
            else:
                out.append(DegenerateMember(f"root of {fac.as_expr()}", _corank_over_extension(p, fac), fac.degree()))
    if at_inf:
        out.append(DegenerateMember("inf", p.size - rank(p.Q1)))
    return out


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def load_pencil(text: str) -> QuadricPencil:
    """Two symmetric matrices separated by a blank line (or a line '---'),
    rows of whitespace-separated rationals like 1/2; or 'diag a b c ...' lines."""
    blocks, cur = [], []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line or line == "---":
            if cur:
                blocks.append(cur)
                cur = []
            continue
        cur.append(line)
    if cur:
        blocks.append(cur)
    mats = []
    for b in blocks:
        if len(b) == 1 and b[0].startswith("diag"):
            mats.append(diag([parse_rational(x) for x in b[0].split()[1:]]))
        else:
            mats.append(_matrix([[parse_rational(x) for x in row.split()] for row in b]))
    if len(mats) != 2:
        raise ValueError("a pencil file holds exactly two matrices")
    return QuadricPencil(*mats)


# ---------------------------------------------------------------------------
# divisor lattice on the K3 surface with 64 sextic rational curves
#
# Basis (h, e1, ..., e7) with h^2 = 24, h.e_i = 6, e_i^2 = -2, e_i.e_j = 0.

DIV_H2, DIV_HE, DIV_E2 = 24, 6, -2
ALL = frozenset(range(1, 8))


@dataclass(frozen=True)
class DivisorClass:
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.coords)
        if len(c) != 8:
            raise ValueError("divisor classes have 8 coordinates (h, e1..e7)")
        object.__setattr__(self, "coords", c)

    def __add__(self, o):
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, o.coords)))

    def __sub__(self, o):
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, o.coords)))

    def scale(self, k):
        return DivisorClass(tuple(Fraction(k) * a for a in self.coords))

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _gram(i, j) -> int:
    if i == 0 and j == 0:
        return DIV_H2
    if i == 0 or j == 0:
        return DIV_HE
    return DIV_E2 if i == j else 0


def intersect(a: DivisorClass, b: DivisorClass) -> Fraction:
    return sum((a.coords[i] * b.coords[j] * _gram(i, j) for i in range(8) for j in range(8)), Fraction(0))


def _basis(i) -> DivisorClass:
    return DivisorClass(tuple(1 if k == i else 0 for k in range(8)))


H_CLASS = _basis(0)


def _e_sum(idx) -> DivisorClass:
    out = DivisorClass((0,) * 8)
    for i in idx:
        out = out + _basis(i)
    return out


def e_class(I, complement: bool = False) -> DivisorClass:
    """e_I for I odd or empty; with complement=True an even I is replaced by its complement."""
    I = frozenset(I)
    if not I <= ALL:
        raise ValueError("indices must lie in 1..7")
    if len(I) % 2 == 0 and I:
        if not complement:
            raise ValueError("e_I needs |I| odd or I empty (or identify it with its complement)")
        I = ALL - I
    if len(I) == 7:
        I = frozenset()
    out_ = ALL - I
    if not I:
        return (H_CLASS.scale(3) - _e_sum(ALL)).scale(Fraction(1, 5))
    if len(I) == 1:
        return _basis(next(iter(I)))
    if len(I) == 3:
        return (H_CLASS - _e_sum(out_).scale(2) + _e_sum(I).scale(3)).scale(Fraction(1, 5))
    return (H_CLASS.scale(2) - _e_sum(out_).scale(4) + _e_sum(I)).scale(Fraction(1, 5))


def h_m_class() -> DivisorClass:
    return (H_CLASS + _e_sum(ALL).scale(3)).scale(Fraction(1, 5))


def odd_subsets():
    """The 64 index sets: the empty set and the odd subsets of size 1, 3, 5."""
    yield frozenset()
    for k in (1, 3, 5):
        for c in itertools.combinations(range(1, 8), k):
            yield frozenset(c)


def divisor_class(sym: str, complement: bool = False) -> DivisorClass:
    """'h', 'K', 'H_M', 'e_i' style names 'E_{}', 'E_{1,2,3}', 'e_4'."""
    s = sym.strip().replace(" ", "")
    if s in ("h", "-K"):
        return H_CLASS
    if s == "K":
        return H_CLASS.scale(-1)
    if s in ("H_M", "HM", "H"):
        return h_m_class()
    m = re.fullmatch(r"[Ee]_?(?:\{([0-9,]*)\}|([0-9]+)|(empty|M))", s)
    if not m:
        raise ValueError(f"unknown divisor symbol {sym!r}")
    if m.group(3):
        return e_class(())
    digits = m.group(1) if m.group(1) is not None else ",".join(m.group(2))
    idx = [int(x) for x in digits.split(",") if x]
    if len(set(idx)) != len(idx):
        raise ValueError("repeated index")
    return e_class(idx, complement)


# ---------------------------------------------------------------------------
# self-intersections in explicit models

def bezout_coefficient(factors, dims, monomial) -> sympy.Rational:
    """Coefficient of a monomial in the product of linear forms in
    Q[a_1..a_k]/(a_i^(dims_i + 1)); factors are tuples of multidegrees."""
    gens = sympy.symbols(f"a0:{len(dims)}")
    prod = sympy.Integer(1)
    for f in factors:
        prod = sympy.expand(prod * sum(c * g for c, g in zip(f, gens)))
    poly = sympy.Poly(prod, *gens)
    return poly.coeff_monomial(sympy.Mul(*[g ** e for g, e in zip(gens, monomial)]))


def model_h2(model: str) -> Fraction:
    if model == "segre_ci":
        # K3 in P3 x P3 cut by (1,1)^2, (2,0), (0,2); polarization (1,1)
        factors = [(1, 1), (1, 1), (2, 0), (0, 2), (1, 1), (1, 1)]
        return Fraction(int(bezout_coefficient(factors, (3, 3), (3, 3))))
    if model == "nodal_sextic":
        # lattice <e0^2 = 6, e_i^2 = -2>, class 5 e0 - 3 sum e_i
        v = [5] + [-3] * 7
        g = [6] + [-2] * 7
        return Fraction(sum(c * c * w for c, w in zip(v, g)))
    if model == "sextic_hyperplane":
        # complete intersection of degrees 2 and 3 in P4, hyperplane class squared
        factors = [(2,), (3,), (1,), (1,)]
        return Fraction(int(bezout_coefficient(factors, (4,), (4,))))
    raise ValueError(f"unknown model {model!r}")
