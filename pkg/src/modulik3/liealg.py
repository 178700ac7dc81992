"""Root systems of type A, B, D in ambient coordinates and Bott's theorem.

Weights are plain tuples of Fractions.  Type A weights are really weights of
GL(n+1); the root data only sees them modulo the all-ones vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

Weight = tuple


def weight(coords: Sequence) -> Weight:
    return tuple(Fraction(c) for c in coords)


def parse_weight(text: str) -> Weight:
    """'1,0;0,0' or '(1/2,1/2,-1/2)' or '(3,-1,1,-1)/2'."""
    text = text.strip().replace(" ", "")
    denom = Fraction(1)
    if ")/" in text:
        text, d = text.rsplit("/", 1)
        denom = Fraction(d)
    text = text.strip("()").replace(";", ",")
    return tuple(Fraction(x) / denom for x in text.split(",") if x != "")


def fmt_weight(w: Weight, sep=",") -> str:
    return "(" + sep.join(str(c) for c in w) + ")"


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def smul(c, u) -> Weight:
    return tuple(c * a for a in u)


def reflect(v, root) -> Weight:
    c = 2 * dot(v, root) / dot(root, root)
    return tuple(a - c * r for a, r in zip(v, root))


def solve_exact(basis, target):
    """Coefficients x with sum x_i basis_i = target, or None if impossible."""
    n = len(basis)
    dim = len(target)
    # columns are basis vectors
    rows = [[Fraction(basis[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(dim)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, dim) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][n] != 0 for i in range(r, dim)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][n]
    return x


class SubSystem:
    """A (possibly reducible) root system given by simple and positive roots."""

    family = "?"
    ambient_dim: int
    simple_roots: tuple
    positive_roots_list: tuple

    @cached_property
    def rho(self) -> Weight:
        acc = [Fraction(0)] * self.ambient_dim
        for r in self.positive_roots_list:
            acc = [a + b for a, b in zip(acc, r)]
        return tuple(a / 2 for a in acc)

    def positive_roots(self):
        return list(self.positive_roots_list)

    def is_dominant(self, w) -> bool:
        return all(dot(w, a) >= 0 for a in self.simple_roots)

    def make_dominant(self, v):
        """Dominant conjugate of v, the number of simple reflections used and
        whether v lies on a wall."""
        v = tuple(v)
        steps = 0
        while True:
            for a in self.simple_roots:
                if dot(v, a) < 0:
                    v = reflect(v, a)
                    steps += 1
                    break
            else:
                break
        wall = any(dot(v, a) == 0 for a in self.simple_roots)
        return v, steps, wall

    def dominant(self, v) -> Weight:
        return self.make_dominant(v)[0]

    def dual_weight(self, w) -> Weight:
        return self.dominant(tuple(-a for a in w))

    def dim(self, lam) -> int:
        return weyl_dim(self, lam)

    def root_coords(self, v):
        """Coordinates of v in the basis of simple roots (None if not in the span)."""
        return solve_exact(self.simple_roots, v)


class RootSystem(SubSystem):
    def __init__(self, family: str, rank: int):
        family = family.upper()
        if family not in ("A", "B", "D"):
            raise ValueError(f"unsupported family {family}")
        lo = {"A": 1, "B": 2, "D": 3}[family]
        if rank < lo:
            raise ValueError(f"rank of type {family} must be >= {lo}")
        self.family, self.rank = family, rank
        n = rank + 1 if family == "A" else rank
        self.ambient_dim = n

        def e(i, s=1):
            v = [Fraction(0)] * n
            v[i] = Fraction(s)
            return v

        def comb(i, j, s):
            v = e(i)
            v[j] += s
            return tuple(v)

        simple = [comb(i, i + 1, -1) for i in range(n - 1)]
        pos = [comb(i, j, -1) for i in range(n) for j in range(i + 1, n)]
        if family == "B":
            simple.append(tuple(e(n - 1)))
            pos += [comb(i, j, 1) for i in range(n) for j in range(i + 1, n)]
            pos += [tuple(e(i)) for i in range(n)]
        elif family == "D":
            simple.append(comb(n - 2, n - 1, 1))
            pos += [comb(i, j, 1) for i in range(n) for j in range(i + 1, n)]
        self.simple_roots = tuple(simple)
        self.positive_roots_list = tuple(pos)

    def __repr__(self):
        return f"{self.family}{self.rank}"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    @cached_property
    def rho(self) -> Weight:
        r = super().rho
        if self.family == "A":
            # shift so that the last entry is 0: (n, n-1, ..., 0)
            r = tuple(a - r[-1] for a in r)
        return r

    def check_weight(self, w):
        if len(w) != self.ambient_dim:
            raise ValueError(f"weight {w} has wrong length for {self}")
        dens = {Fraction(c).denominator for c in w}
        if self.family == "A":
            if dens != {1}:
                raise ValueError("type A weights must be integral")
        elif not (dens == {1} or dens == {2}):
            raise ValueError("weight entries must be all integral or all half-integral")
        return weight(w)

    def equivalent(self, u, v) -> bool:
        """Equality of weights (modulo the all-ones vector in type A)."""
        if self.family != "A":
            return tuple(u) == tuple(v)
        d = [a - b for a, b in zip(u, v)]
        return all(x == d[0] for x in d)


@dataclass(frozen=True)
class BottResult:
    vanishing: bool
    index: Optional[int] = None
    dominant: Optional[Weight] = None
    dimension: int = 0

    def __str__(self):
        if self.vanishing:
            return "Vanishing"
        return f"H^{self.index} = C^{self.dimension} (highest weight {fmt_weight(self.dominant)})"


def singular(system: SubSystem, v) -> bool:
    return any(dot(v, a) == 0 for a in system.positive_roots_list)


def bott_index(system: SubSystem, v) -> int:
    return sum(1 for a in system.positive_roots_list if dot(v, a) < 0)


def bott(system: SubSystem, lam) -> BottResult:
    lam = weight(lam)
    if isinstance(system, RootSystem):
        system.check_weight(lam)
    v = add(lam, system.rho)
    if singular(system, v):
        return BottResult(True)
    index = bott_index(system, v)
    dom, steps, wall = system.make_dominant(v)
    if wall or steps != index:
        raise AssertionError("reflection count disagrees with the root count")
    mu = sub(dom, system.rho)
    return BottResult(False, index, mu, weyl_dim(system, mu))


def weyl_dim(system: SubSystem, lam) -> int:
    lam = weight(lam)
    if not system.is_dominant(lam):
        raise ValueError(f"weight {fmt_weight(lam)} is not dominant")
    rho = system.rho
    v = add(lam, rho)
    num, den = Fraction(1), Fraction(1)
    for a in system.positive_roots_list:
        num *= dot(v, a)
        den *= dot(rho, a)
    q = num / den
    assert q.denominator == 1
    return int(q)


def positive_roots(system: SubSystem):
    return system.positive_roots()


def rho(system: SubSystem) -> Weight:
    return system.rho
