"""Intersection theory on the moduli space N of stable rank-2 bundles with odd
determinant on a genus-g curve, in terms of the classes alpha, beta, gamma.

Classes live in :class:`CohClass`, a truncated polynomial in alpha, beta and
gamma (with beta**-1 allowed only next to gamma).  ``kappa`` integrates a
class over N.  A second evaluation path, :func:`kappa_residue`, rewrites
integrals of ``exp(k*alpha) * F(-beta) * X`` as residues of trigonometric
series; the two paths are checked against each other in the tests.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .series import LaurentSeries, b_coeffs, elem_series, invert, residue

MAX_GENUS = 12


class ConsistencyError(RuntimeError):
    """Raised when two independent evaluation paths disagree."""


def _check_genus(g: int, lo: int = 2):
    if not isinstance(g, int) or g < lo:
        raise ValueError(f"genus must be an integer >= {lo}")
    if g > MAX_GENUS:
        raise ValueError(f"genus {g} above the configured cap {MAX_GENUS}")


def top_degree(g: int) -> int:
    return 3 * g - 3


def _valid_monomial(m, n, p):
    if m < 0 or p < 0:
        raise ValueError("negative alpha or gamma exponent")
    if n < -1:
        raise ValueError("gamma^2 beta^-2 and lower beta powers are not supported")
    if n == -1 and p != 1:
        raise ValueError("beta^-1 is only allowed together with a single gamma")


class CohClass:
    """Polynomial in alpha, beta, gamma truncated above degree 3g-3.

    ``terms`` maps (m, n, p) -> coefficient for alpha^m beta^n gamma^p;
    the degree of that monomial is m + 2n + 3p.
    """

    __slots__ = ("genus", "terms")

    def __init__(self, genus: int, terms=None):
        self.genus = genus
        top = top_degree(genus)
        clean = {}
        for (m, n, p), c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            _valid_monomial(m, n, p)
            if m + 2 * n + 3 * p > top:
                continue
            clean[(m, n, p)] = clean.get((m, n, p), 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    # constructors
    @classmethod
    def const(cls, g, c=1):
        return cls(g, {(0, 0, 0): c})

    @classmethod
    def alpha(cls, g):
        return cls(g, {(1, 0, 0): 1})

    @classmethod
    def beta(cls, g):
        return cls(g, {(0, 1, 0): 1})

    @classmethod
    def gamma(cls, g):
        return cls(g, {(0, 0, 1): 1})

    @classmethod
    def gob(cls, g):
        """gamma / beta"""
        return cls(g, {(0, -1, 1): 1})

    @classmethod
    def monomial(cls, g, m, n, p, c=1):
        return cls(g, {(m, n, p): c})

    def _coerce(self, other):
        if isinstance(other, CohClass):
            if other.genus != self.genus:
                raise ValueError("classes of different genus")
            return other
        return CohClass.const(self.genus, Fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return CohClass(self.genus, t)

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.genus, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CohClass):
            c = Fraction(other)
            return CohClass(self.genus, {k: v * c for k, v in self.terms.items()})
        other = self._coerce(other)
        top = top_degree(self.genus)
        out = {}
        for (m1, n1, p1), a in self.terms.items():
            d1 = m1 + 2 * n1 + 3 * p1
            for (m2, n2, p2), b in other.terms.items():
                if d1 + m2 + 2 * n2 + 3 * p2 > top:
                    continue
                key = (m1 + m2, n1 + n2, p1 + p2)
                out[key] = out.get(key, 0) + a * b
        return CohClass(self.genus, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of classes are not supported here")
        out = CohClass.const(self.genus)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CohClass):
            return self.genus == other.genus and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.genus, tuple(sorted(self.terms.items()))))

    def degree_part(self, d: int) -> "CohClass":
        return CohClass(self.genus, {k: v for k, v in self.terms.items()
                                     if k[0] + 2 * k[1] + 3 * k[2] == d})

    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0, 0), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, n, p), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0] + 2 * kv[0][1] + 3 * kv[0][2], kv[0])):
            mono = "*".join(f"{name}^{e}" for name, e in (("alpha", m), ("beta", n), ("gamma", p)) if e)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# kappa

def kappa_monomial(g: int, m: int, n: int, p: int) -> Fraction:
    """Integral of alpha^m beta^n gamma^p over N."""
    if m < 0 or p < 0:
        raise ValueError("exponents of alpha and gamma must be >= 0")
    if n < -p:
        raise ValueError("unsupported negative β power")
    if m + 2 * n + 3 * p != 3 * g - 3:
        return Fraction(0)
    if p > g:
        return Fraction(0)
    idx = g - 1 - n - p
    if idx < 0:
        return Fraction(0)
    b = b_coeffs(idx)[idx]
    sign = -1 if n % 2 else 1
    return sign * Fraction(2) ** (2 * g - 2 - p) * factorial(g) * factorial(m) / factorial(g - p) * b


def kappa(c: CohClass) -> Fraction:
    top = top_degree(c.genus)
    total = Fraction(0)
    for (m, n, p), v in c.terms.items():
        if m + 2 * n + 3 * p == top:
            total += v * kappa_monomial(c.genus, m, n, p)
    return total


# ---------------------------------------------------------------------------
# residue evaluation of kappa[exp(k alpha) F(-beta) X]

MODES = ("plain", "times_gamma", "times_alpha", "contact", "gamma_over_beta_plus_d")


def default_order(g: int) -> int:
    return 6 * g + 10


def _res_over(num: LaurentSeries, xpow: int, sin_scale, sin_pow: int, prec: int) -> Fraction:
    """Res[num / (x^xpow * sin(sin_scale x)^sin_pow)]"""
    den = LaurentSeries.monomial(xpow, xpow + prec) * elem_series("sin", sin_scale, prec) ** sin_pow
    return residue(num * invert(den))


def kappa_residue(g: int, k, F: LaurentSeries, mode: str = "plain", d=0) -> Fraction:
    _check_genus(g)
    k = Fraction(k)
    if k == 0:
        raise ValueError("k must be nonzero")
    if F.valuation < 0:
        raise ValueError("F must be a power series")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    prec = default_order(g)
    Fx = F.subs_power(2)
    two = Fraction(2)
    if mode == "plain":
        return 4 ** (g - 1) * k ** g * _res_over(Fx, 2 * g - 2, k, 1, prec)
    if mode == "times_gamma":
        return two ** (2 * g - 3) * k ** (g - 1) * g * _res_over(Fx, 2 * g - 4, k, 1, prec)
    cosk = elem_series("cos", k, prec)
    if mode == "times_alpha":
        r1 = _res_over(Fx, 2 * g - 2, k, 1, prec)
        r2 = _res_over(cosk * Fx * k, 2 * g - 3, k, 2, prec)
        return 4 ** (g - 1) * k ** (g - 1) * (g * r1 - r2)
    if mode == "contact":
        return two ** (2 * g - 3) * k ** g * _res_over(cosk * Fx, 2 * g - 3, k, 2, prec)
    d = Fraction(d)
    return two ** (2 * g - 3) * k ** (g - 1) * (2 * d * k - g) * _res_over(Fx, 2 * g - 2, k, 1, prec)


def kappa_monomial_residue(g: int, m: int, n: int, p: int) -> Fraction:
    """kappa(alpha^m beta^n gamma^p) for p <= 1, read off a residue with k = 1.

    With F = (-t)^n the residue computes kappa[exp(alpha) beta^n X], in which
    only the alpha power of the right degree survives; multiplying by m!
    isolates the monomial.  beta^-1 gamma goes through the gamma/beta mode.
    """
    if p not in (0, 1):
        raise ValueError("the residue path covers gamma exponents 0 and 1")
    if m + 2 * n + 3 * p != top_degree(g):
        return Fraction(0)
    order = top_degree(g) + 2
    if n == -1:
        if p != 1:
            raise ValueError("beta^-1 needs gamma")
        val = kappa_residue(g, 1, LaurentSeries.constant(1, order), "gamma_over_beta_plus_d", 0)
    else:
        F = LaurentSeries.monomial(n, order, (-1) ** n)
        val = kappa_residue(g, 1, F, "times_gamma" if p else "plain")
    return val * factorial(m)


def exp_alpha(g: int, k) -> CohClass:
    k = Fraction(k)
    return CohClass(g, {(i, 0, 0): k ** i / factorial(i) for i in range(top_degree(g) + 1)})


def F_of_minus_beta(g: int, F: LaurentSeries) -> CohClass:
    top = top_degree(g)
    t = {}
    for i in range(top // 2 + 1):
        if i >= F.order:
            if 2 * i <= top:
                raise ValueError("F is not known to high enough order")
            break
        t[(0, i, 0)] = F.coeff(i) * (-1) ** i
    return CohClass(g, t)


def mode_factor(g: int, mode: str, d=0) -> CohClass:
    a, gob = CohClass.alpha(g), CohClass.gob(g)
    if mode == "plain":
        return CohClass.const(g)
    if mode == "times_gamma":
        return CohClass.gamma(g)
    if mode == "times_alpha":
        return a
    if mode == "contact":
        return a * Fraction(-1, 2) - gob
    if mode == "gamma_over_beta_plus_d":
        return gob + Fraction(d)
    raise ValueError(f"unknown mode {mode!r}")


def kappa_class_route(g: int, k, F: LaurentSeries, mode: str = "plain", d=0) -> Fraction:
    """Same quantity as kappa_residue, through the class algebra."""
    return kappa(exp_alpha(g, k) * F_of_minus_beta(g, F) * mode_factor(g, mode, d))


# ---------------------------------------------------------------------------
# classes with square roots of beta, used while evaluating expressions

class _SqrtPoly:
    """Polynomial in alpha, s = sqrt(beta), gamma; keys (m, j, p) with s^j."""

    __slots__ = ("g", "t")

    def __init__(self, g, t=None):
        self.g = g
        top = top_degree(g)
        out = {}
        for (m, j, p), c in (t or {}).items():
            if c and m + j + 3 * p <= top:
                out[(m, j, p)] = out.get((m, j, p), 0) + Fraction(c)
        self.t = {k: v for k, v in out.items() if v}

    @classmethod
    def const(cls, g, c):
        return cls(g, {(0, 0, 0): c})

    def __add__(self, o):
        t = dict(self.t)
        for k, v in o.t.items():
            t[k] = t.get(k, 0) + v
        return _SqrtPoly(self.g, t)

    def __neg__(self):
        return _SqrtPoly(self.g, {k: -v for k, v in self.t.items()})

    def __sub__(self, o):
        return self + (-o)

    def scale(self, c):
        return _SqrtPoly(self.g, {k: v * c for k, v in self.t.items()})

    def __mul__(self, o):
        top = top_degree(self.g)
        out = {}
        for (m1, j1, p1), a in self.t.items():
            d1 = m1 + j1 + 3 * p1
            for (m2, j2, p2), b in o.t.items():
                if d1 + m2 + j2 + 3 * p2 > top:
                    continue
                if p1 + p2 > 1 and (j1 + j2) < 0:
                    raise ValueError("gamma^2 beta^-2 is not supported")
                key = (m1 + m2, j1 + j2, p1 + p2)
                out[key] = out.get(key, 0) + a * b
        return _SqrtPoly(self.g, out)

    def constant(self):
        return self.t.get((0, 0, 0), Fraction(0))

    def apply(self, coeffs):
        """f(P) for a power series f given by its coefficient list; P must be nilpotent."""
        if self.constant():
            raise ValueError("power series applied to a class with nonzero constant term")
        top = top_degree(self.g)
        out = _SqrtPoly.const(self.g, coeffs[0] if coeffs else 0)
        power = _SqrtPoly.const(self.g, 1)
        for i in range(1, min(len(coeffs), top + 3)):
            power = power * self
            if not power.t:
                break
            out = out + power.scale(coeffs[i])
        return out

    def inverse(self):
        c = self.constant()
        if not c:
            raise ValueError("class is not invertible")
        nil = self.scale(1 / c) - _SqrtPoly.const(self.g, 1)
        geo = [Fraction((-1) ** i) for i in range(top_degree(self.g) + 3)]
        return nil.apply(geo).scale(1 / c)

    def power(self, e: int):
        if e < 0:
            return self.inverse().power(-e)
        out = _SqrtPoly.const(self.g, 1)
        for _ in range(e):
            out = out * self
        return out

    def to_class(self) -> CohClass:
        t = {}
        for (m, j, p), c in self.t.items():
            if j % 2:
                raise ValueError("not a cohomology class (odd power of sqrt(beta))")
            t[(m, j // 2, p)] = c
        return CohClass(self.g, t)

    @classmethod
    def from_class(cls, c: CohClass):
        return cls(c.genus, {(m, 2 * n, p): v for (m, n, p), v in c.terms.items()})


def _series_coeffs(kind, n):
    s = elem_series(kind, 1, n)
    return [s.coeff(i) for i in range(n)]


def _s_series(g, series: LaurentSeries) -> _SqrtPoly:
    """Embed a power series in s = sqrt(beta)."""
    top = top_degree(g)
    return _SqrtPoly(g, {(0, j, 0): series.coeff(j) for j in range(min(top + 1, series.order))})


def _sinhc_series(g) -> LaurentSeries:
    n = top_degree(g) + 2
    sh = elem_series("sinh", Fraction(1, 2), n + 1)
    return LaurentSeries.from_coeffs([2 * sh.coeff(e) for e in range(1, n + 1)], 0, n)


def _toddfac_series(g) -> LaurentSeries:
    return invert(_sinhc_series(g)) ** (2 * g - 2)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),]))")


def _tokenize(expr: str):
    pos = 0
    out = []
    expr = expr.strip()
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse expression near {expr[pos:]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", Fraction(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    FUNCS = ("exp", "cosh", "sinh", "cos", "sin")

    def __init__(self, g, tokens, env=None):
        self.g, self.toks, self.i = g, tokens, 0
        self.env = env or {}

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise ValueError(f"unexpected token {tok[1]!r} in class expression")
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input {self.peek()[1]!r} in class expression")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            w = self.unary()
            v = v * w if op == "*" else v * w.inverse()
        return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            e = self.take("num")[1]
            if e.denominator != 1:
                raise ValueError("exponents must be integers")
            v = v.power(sign * int(e))
        return v

    def atom(self):
        g = self.g
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return _SqrtPoly.const(g, val)
        if kind == "op" and val == "(":
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        if kind != "name":
            raise ValueError(f"unexpected token {val!r} in class expression")
        self.take()
        if val in self.FUNCS:
            self.take("op", "(")
            arg = self.expr()
            self.take("op", ")")
            return arg.apply(_series_coeffs(val, top_degree(g) + 2))
        if val in self.env:
            return self.env[val]
        atoms = {
            "alpha": {(1, 0, 0): 1},
            "beta": {(0, 2, 0): 1},
            "gamma": {(0, 0, 1): 1},
            "gob": {(0, -2, 1): 1},
            "sqb": {(0, 1, 0): 1},
        }
        if val in atoms:
            return _SqrtPoly(g, atoms[val])
        if val == "sinhc":
            return _s_series(g, _sinhc_series(g))
        if val == "toddfac":
            return _s_series(g, _toddfac_series(g))
        if val == "d":
            raise ValueError("the symbol d must be bound to a number")
        raise ValueError(f"unknown symbol {val!r} in class expression")


def class_expr(g: int, expr: str, **bindings) -> CohClass:
    """Evaluate a class expression at genus g.

    Grammar: atoms ``alpha beta gamma gob sqb sinhc toddfac`` and rational
    literals, functions ``exp cosh sinh cos sin`` of nilpotent arguments,
    operators ``+ - * / ^``.  Extra keyword arguments bind names to numbers
    or classes.
    """
    _check_genus(g)
    env = {}
    for k, v in bindings.items():
        env[k] = _SqrtPoly.from_class(v) if isinstance(v, CohClass) else _SqrtPoly.const(g, Fraction(v))
    return _Parser(g, _tokenize(expr), env).parse().to_class()


# ---------------------------------------------------------------------------
# standard classes

def ch_U(g):
    """Chern character of the restricted universal bundle U_p."""
    return class_expr(g, "2*exp(alpha/2)*cosh(sqb/2)")


def td_N(g):
    return class_expr(g, "exp(alpha)*toddfac")


def c2_U(g):
    return class_expr(g, "(alpha^2 - beta)/4")


def koszul_factor(g):
    """c2(U_p)/td(U_p): the product of (1 - e^{-r}) over the Chern roots."""
    return class_expr(g, "(1 - exp(-(alpha+sqb)/2))*(1 - exp(-(alpha-sqb)/2))")


def push_ch_U(g, d):
    """Pushforward to N of ch of the universal bundle on N x C (degree d)."""
    return class_expr(g, "exp(alpha/2)*(sinhc*(-alpha/2 - gob) + cosh(sqb/2)*(gob + d))", d=d)


def chi(g: int, c: CohClass) -> Fraction:
    return kappa(c * td_N(g))


# ---------------------------------------------------------------------------
# Chern characters

@dataclass(frozen=True)
class ChRecord:
    label: str
    cls: CohClass
    rank: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        object.__setattr__(self, "rank", self.cls.constant_term())


def ch_from_chern(g: int, rank: int, chern, label="E") -> ChRecord:
    """ch from Chern classes c_1..c_r via Newton's identities."""
    top = top_degree(g)
    e = [CohClass.const(g)] + [c if isinstance(c, CohClass) else class_expr(g, c) for c in chern]
    e += [CohClass(g)] * (top + 1 - len(e) + 1)
    p = [CohClass.const(g, rank)]
    total = CohClass.const(g, rank)
    for k in range(1, top + 1):
        pk = CohClass(g)
        for i in range(1, k):
            pk = pk + e[i] * p[k - i] * (-1) ** (i - 1)
        pk = pk + e[k] * ((-1) ** (k - 1) * k)
        p.append(pk)
        total = total + pk * Fraction(1, factorial(k))
    return ChRecord(label, total)


def adams(c: ChRecord, k: int) -> ChRecord:
    t = {key: v * Fraction(k) ** (key[0] + 2 * key[1] + 3 * key[2]) for key, v in c.cls.terms.items()}
    return ChRecord(f"psi{k}({c.label})", CohClass(c.cls.genus, t))


def sym2_ch(c: ChRecord) -> ChRecord:
    return ChRecord(f"S2({c.label})", (c.cls * c.cls + adams(c, 2).cls) * Fraction(1, 2))


def twist(c: ChRecord, m) -> ChRecord:
    return ChRecord(f"{c.label}({m})", c.cls * exp_alpha(c.cls.genus, m))


def ch_Q(g) -> ChRecord:
    """Restriction of the rank-2 quotient bundle: c1 = alpha, c2 = alpha^2/2 + beta/2."""
    return ch_from_chern(g, 2, ["alpha", "alpha^2/2 + beta/2"], label="Q")


def chi_sym2Q(g: int, m: int) -> Fraction:
    return chi(g, twist(sym2_ch(ch_Q(g)), m).cls)


# ---------------------------------------------------------------------------
# numbers

@dataclass(frozen=True)
class CYInvariants:
    dim_Y: int
    dim_Z: int
    deg_Y: Fraction
    deg_Z: Fraction
    chi_OZ: Fraction

    def as_tuple(self):
        return (self.dim_Y, self.dim_Z, self.deg_Y, self.deg_Z, self.chi_OZ)


def deg_Y_closed(g):
    b = b_coeffs(g - 1)
    return Fraction(4) ** (g - 2) * (factorial(3 * g - 3) * b[g - 1] + factorial(3 * g - 5) * b[g - 2])


def deg_Z_closed(g):
    b = b_coeffs(g - 1)
    return Fraction(4) ** (g - 3) * (factorial(3 * g - 3) * b[g - 1] + 2 * factorial(3 * g - 5) * b[g - 2]
                                     + factorial(3 * g - 7) * b[g - 3])


def cy_invariants(g: int) -> CYInvariants:
    _check_genus(g, 3)
    a = CohClass.alpha(g)
    c2 = c2_U(g)
    dY = kappa(a ** (3 * g - 5) * c2)
    dZ = kappa(a ** (3 * g - 7) * c2 * c2)
    if dY != deg_Y_closed(g) or dZ != deg_Z_closed(g):
        raise ConsistencyError(f"degree mismatch at g={g}")
    kf = koszul_factor(g)
    chi_z = kappa(td_N(g) * kf * kf)
    if chi_z != 1 + (-1) ** (g + 1):
        raise ConsistencyError(f"chi(O_Z) mismatch at g={g}")
    return CYInvariants(3 * g - 5, 3 * g - 7, dY, dZ, chi_z)


def pushforward_rank_deg(g: int, d: int):
    _check_genus(g)
    td = td_N(g)
    rank = kappa(ch_U(g) * td)
    deg = kappa(push_ch_U(g, d) * td)
    if rank != 2 ** g or deg != 2 ** (g - 1) * (d - g + 1):
        raise ConsistencyError(f"pushforward mismatch at g={g}, d={d}")
    return rank, deg


def _mu_residue(g, d, k, j):
    K = (2 * Fraction(k) + 1) / 2
    j = Fraction(j)
    prec = default_order(g)
    cj = elem_series("cos", j, prec)
    den1 = elem_series("sin", K, prec) ** 2 * elem_series("sin", Fraction(1, 2), prec) ** (2 * g - 3)
    den2 = elem_series("sin", K, prec) * elem_series("sin", Fraction(1, 2), prec) ** (2 * g - 2)
    r1 = residue(cj * elem_series("cos", K, prec) * invert(den1))
    r2 = residue(cj * elem_series("cos", Fraction(1, 2), prec) * invert(den2))
    return K ** g * r1 + (2 * K * d - g) / 2 * K ** (g - 1) * r2


def mu_class(g, d, k, j) -> Fraction:
    """mu_{k,j} straight from its definition as a kappa integral."""
    K = 2 * Fraction(k) + 1
    base = class_expr(g, "exp(K*alpha/2)*cosh(j*sqb)*toddfac", K=K, j=Fraction(j))
    rest = class_expr(g, "sinhc*(-alpha/2 - gob) + cosh(sqb/2)*(gob + d)", d=d)
    return kappa(base * rest)


def mu(g: int, d: int, k, j) -> Fraction:
    _check_genus(g)
    if 2 * Fraction(k) + 1 == 0:
        # exp(0*alpha): the residue form degenerates, use the integral itself
        return mu_class(g, d, k, j)
    return _mu_residue(g, d, k, j)


MU_AGGREGATE = ((1, 0, 1), (-1, 0, 1), (0, 0, 4), (Fraction(1, 2), Fraction(1, 2), -4),
                (0, 1, 2), (Fraction(-1, 2), Fraction(1, 2), -4))


def mu_aggregate(g, d) -> Fraction:
    return sum((c * mu(g, d, k, j) for k, j, c in MU_AGGREGATE), Fraction(0))


def restricted_pushforward(g: int, d: int):
    _check_genus(g, 3)
    kf = koszul_factor(g)
    rank = kappa(ch_U(g) * td_N(g) * kf * kf)
    deg = mu_aggregate(g, d)
    if rank != 2 ** g or deg != 2 ** (g - 1) * (d - g + 1) + 2:
        raise ConsistencyError(f"restricted pushforward mismatch at g={g}, d={d}")
    return rank, deg


def moduli_dim(r: int, g: int) -> int:
    if r < 2 or g < 2:
        raise ValueError("need r >= 2 and g >= 2")
    return (r * r - 1) * (g - 1)
