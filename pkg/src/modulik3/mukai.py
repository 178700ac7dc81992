"""Mukai lattice arithmetic on a polarized K3 surface and the S x C model.

Classes on S are recorded by (rank, c1 as a multiple of h, integrated ch2);
the Mukai vector of such a class is (r, c1, ch2 + r).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Tuple

H2_DEFAULT = 24


class LatticeError(ValueError):
    pass


def _q(x) -> Fraction:
    return Fraction(x)


@dataclass(frozen=True)
class MukaiVector:
    r: int
    c: int
    s: int

    def __iter__(self):
        return iter((self.r, self.c, self.s))

    def __add__(self, o):
        return MukaiVector(self.r + o.r, self.c + o.c, self.s + o.s)

    def __neg__(self):
        return MukaiVector(-self.r, -self.c, -self.s)

    def __sub__(self, o):
        return self + (-o)

    def scale(self, k: int) -> "MukaiVector":
        return MukaiVector(k * self.r, k * self.c, k * self.s)

    def __str__(self):
        return f"({self.r},{self.c}h,{self.s})"


def mukai_pair(v: MukaiVector, w: MukaiVector, h2: int = H2_DEFAULT) -> int:
    return v.c * w.c * h2 - v.r * w.s - w.r * v.s


def moduli_dim(v: MukaiVector, h2: int = H2_DEFAULT) -> int:
    sq = mukai_pair(v, v, h2)
    if sq < -2:
        raise LatticeError("no semistable sheaf: <v,v> < -2")
    return sq + 2


def T(v: MukaiVector) -> MukaiVector:
    """(a, b, c) -> (a, b, c + a)."""
    return MukaiVector(v.r, v.c, v.s + v.r)


def T_inv(v: MukaiVector) -> MukaiVector:
    return MukaiVector(v.r, v.c, v.s - v.r)


def genus_from_h2(h2: int) -> int:
    if h2 % 2:
        raise LatticeError("h^2 must be even on a K3 surface")
    if h2 < 2:
        raise LatticeError("h^2 must be at least 2")
    return h2 // 2 + 1


def su_moduli_dim(r: int, g: int) -> int:
    """Dimension of the moduli space of stable rank r bundles with fixed determinant."""
    return (r * r - 1) * (g - 1)


def two_section_locus_dim(r: int, g: int) -> int:
    """Dimension of the common zero locus of sections of U_p1 and U_p2."""
    return su_moduli_dim(r, g) - 2 * r


# ---------------------------------------------------------------------------
# Chern characters on S

@dataclass(frozen=True)
class K3ChClass:
    r: Fraction
    c1: Fraction
    ch2: Fraction
    h2: int = H2_DEFAULT

    def __post_init__(self):
        object.__setattr__(self, "r", _q(self.r))
        object.__setattr__(self, "c1", _q(self.c1))
        object.__setattr__(self, "ch2", _q(self.ch2))

    @classmethod
    def line(cls, m, h2: int = H2_DEFAULT) -> "K3ChClass":
        """ch O(m h)."""
        m = _q(m)
        return cls(1, m, m * m * h2 / 2, h2)

    @classmethod
    def from_chern(cls, r, c1, c2, h2: int = H2_DEFAULT) -> "K3ChClass":
        """c1 a multiple of h, c2 an integrated degree."""
        c1 = _q(c1)
        return cls(r, c1, c1 * c1 * h2 / 2 - _q(c2), h2)

    def _same(self, o):
        if self.h2 != o.h2:
            raise LatticeError("classes on different polarized surfaces")

    def __add__(self, o):
        self._same(o)
        return K3ChClass(self.r + o.r, self.c1 + o.c1, self.ch2 + o.ch2, self.h2)

    def __sub__(self, o):
        return self + o.scale(-1)

    def scale(self, k) -> "K3ChClass":
        k = _q(k)
        return K3ChClass(k * self.r, k * self.c1, k * self.ch2, self.h2)

    def __mul__(self, o):
        self._same(o)
        return K3ChClass(self.r * o.r, self.r * o.c1 + o.r * self.c1,
                         self.r * o.ch2 + o.r * self.ch2 + self.c1 * o.c1 * self.h2, self.h2)

    def adams(self, k: int) -> "K3ChClass":
        return K3ChClass(self.r, k * self.c1, k * k * self.ch2, self.h2)

    def sym2(self) -> "K3ChClass":
        return (self * self + self.adams(2)).scale(Fraction(1, 2))

    def wedge2(self) -> "K3ChClass":
        return (self * self - self.adams(2)).scale(Fraction(1, 2))

    def twist(self, m) -> "K3ChClass":
        return self * K3ChClass.line(m, self.h2)

    def dual(self) -> "K3ChClass":
        return K3ChClass(self.r, -self.c1, self.ch2, self.h2)

    @property
    def c2(self) -> Fraction:
        return self.c1 * self.c1 * self.h2 / 2 - self.ch2

    def mukai(self) -> MukaiVector:
        vals = (self.r, self.c1, self.ch2 + self.r)
        if any(x.denominator != 1 for x in vals):
            raise LatticeError("Mukai vector is not integral")
        return MukaiVector(*(int(x) for x in vals))


def chi_K3(e: K3ChClass, twist_m: int = 0) -> Fraction:
    """Riemann-Roch on a K3: chi = 2 r + ch2, with td(S) = 1 + 2[pt]."""
    e = e.twist(twist_m)
    return 2 * e.r + e.ch2


def restrict_universal(c2_beta_coeff=Fraction(1, 2), h2: int = H2_DEFAULT, beta_S: int = -8,
                       c1_coeff: int = 1, c2_alpha2_coeff=Fraction(1, 2)) -> MukaiVector:
    """Mukai vector of a rank 2 bundle with c1 = c1_coeff * alpha and
    c2 = c2_alpha2_coeff * alpha^2 + c2_beta_coeff * beta, restricted to S
    where alpha -> h and beta -> beta_S [pt]."""
    c1 = _q(c1_coeff)
    c2 = _q(c2_alpha2_coeff) * h2 + _q(c2_beta_coeff) * beta_S
    return K3ChClass.from_chern(2, c1, c2, h2).mukai()


def quotient_on_S(h2: int = H2_DEFAULT, beta_S: int = -8) -> K3ChClass:
    """The rank 2 quotient restricted to S: c1 = h, c2 = h^2/2 + beta_S/2."""
    return K3ChClass.from_chern(2, 1, Fraction(h2, 2) + Fraction(beta_S, 2), h2)


# ---------------------------------------------------------------------------
# classes on S x C
#
# Basis: {1, h, pt} on S times {1, f} on C, with h^2 = h2 [pt] and f^2 = 0.
# Classes of H^2(S) orthogonal to h, and the odd classes, do not enter: the
# only odd contribution sqrt(gamma x f) restricts through H^3(S) = 0.

_S_DEG = {"1": 0, "h": 1, "pt": 2}


@dataclass(frozen=True)
class SxCClass:
    terms: Tuple[Tuple[Tuple[str, int], Fraction], ...]
    h2: int = H2_DEFAULT

    @classmethod
    def make(cls, d: Dict[Tuple[str, int], Fraction], h2=H2_DEFAULT) -> "SxCClass":
        return cls(tuple(sorted((k, _q(v)) for k, v in d.items() if v)), h2)

    def as_dict(self):
        return dict(self.terms)

    def coeff(self, s: str, c: int) -> Fraction:
        return self.as_dict().get((s, c), Fraction(0))

    def __add__(self, o):
        d = self.as_dict()
        for k, v in o.terms:
            d[k] = d.get(k, 0) + v
        return SxCClass.make(d, self.h2)

    def scale(self, k):
        return SxCClass.make({key: k * v for key, v in self.terms}, self.h2)

    def __mul__(self, o):
        d: Dict[Tuple[str, int], Fraction] = {}
        for (s1, c1), v1 in self.terms:
            for (s2, c2), v2 in o.terms:
                if c1 + c2 > 1:
                    continue
                deg = _S_DEG[s1] + _S_DEG[s2]
                if deg > 2:
                    continue
                if deg == 0:
                    s, k = "1", 1
                elif deg == 1:
                    s, k = "h", 1
                elif s1 == "h" and s2 == "h":
                    s, k = "pt", self.h2
                else:
                    s, k = "pt", 1
                key = (s, c1 + c2)
                d[key] = d.get(key, 0) + k * v1 * v2
        return SxCClass.make(d, self.h2)

    def exp(self) -> "SxCClass":
        """exp of a class without constant term (nilpotent of order 4)."""
        if self.coeff("1", 0):
            raise ValueError("exp needs a class without constant term")
        out = SxCClass.make({("1", 0): 1}, self.h2)
        power = out
        for k in range(1, 4):
            power = power * self
            out = out + power.scale(Fraction(1, factorial(k)))
        return out

    def push_to_C(self) -> Tuple[Fraction, Fraction]:
        """(rank, degree) part of the pushforward to C: coefficients of pt and pt*f."""
        return self.coeff("pt", 0), self.coeff("pt", 1)


def _sxc(d, h2):
    return SxCClass.make(d, h2)


def universal_ch_SxC(d: int, h2: int = H2_DEFAULT, beta_S: int = -8) -> SxCClass:
    """ch of the universal bundle restricted to S x C (alpha -> h, beta -> beta_S [pt])."""
    E = _sxc({("h", 0): Fraction(1, 2), ("1", 1): Fraction(d, 2)}, h2)
    eE = E.exp()
    b = Fraction(beta_S)
    # cosh(sqrt(beta)/2) and sinh(sqrt(beta)/2)/(sqrt(beta)/2); beta^2 = 0 on S
    cosh = _sxc({("1", 0): 1, ("pt", 0): b / 8}, h2)
    sinhc = _sxc({("1", 0): 1, ("pt", 0): b / 24}, h2)
    # delta = -alpha f / 2 - sqrt(gamma f); the second term and delta^2 vanish on S x C
    delta = _sxc({("h", 1): Fraction(-1, 2)}, h2)
    return (eE * cosh).scale(2) + eE * sinhc * delta


def todd_S(h2: int = H2_DEFAULT) -> SxCClass:
    return _sxc({("1", 0): 1, ("pt", 0): 2}, h2)


def k3_class_SxC(v: MukaiVector, h2: int = H2_DEFAULT) -> SxCClass:
    """Pull back of a K3 class (a + b h + c [pt]) to S x C."""
    return _sxc({("1", 0): v.r, ("h", 0): v.c, ("pt", 0): v.s}, h2)


def pushforward_SxC(d: int, h2: int = H2_DEFAULT, beta_S: int = -8) -> Tuple[Fraction, Fraction]:
    """(rank, degree) of the pushforward of U|_{S x C} to C by Grothendieck-Riemann-Roch."""
    return (universal_ch_SxC(d, h2, beta_S) * todd_S(h2)).push_to_C()


def phi_degree(test: MukaiVector, d: int = 1, h2: int = H2_DEFAULT, beta_S: int = -8) -> Fraction:
    """deg pr2_*( pr1^* T^{-1}(test) . ch(U|_{S x C}) . pr1^* td(S) )."""
    cls = k3_class_SxC(T_inv(test), h2) * universal_ch_SxC(d, h2, beta_S) * todd_S(h2)
    return cls.push_to_C()[1]
