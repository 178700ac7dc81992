"""Representation-theoretic decompositions.

* Littlewood-Richardson products of partitions (skew tableaux enumeration)
* weight multiplicities by Freudenthal's recursion
* tensor products over a Levi subsystem by Klimyk's formula
* exterior and symmetric powers from explicit weight multisets
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .liealg import RootSystem, SubSystem, add, dot, fmt_weight, solve_exact, sub, weight, weyl_dim


# ---------------------------------------------------------------------------
# partitions and the LR rule

class Partition(tuple):
    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be non-negative")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def padded(self, n):
        if len(self) > n:
            raise ValueError(f"partition {tuple(self)} has more than {n} rows")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self):
        return f"Partition({tuple(self)})"


def _horizontal_strips(shape, c, max_rows):
    shape = list(shape) + [0] * (max_rows - len(shape))

    def rec(r, left):
        if r == max_rows:
            if left == 0:
                yield []
            return
        hi = shape[r] + left if r == 0 else min(shape[r - 1], shape[r] + left)
        for new in range(hi, shape[r] - 1, -1):
            for rest in rec(r + 1, left - (new - shape[r])):
                yield [new - shape[r]] + rest

    yield from rec(0, c)


def _is_lattice(rows):
    """rows[r] = labels of the added boxes in row r, left to right."""
    count = Counter()
    for labels in rows:
        for x in reversed(labels):
            count[x] += 1
            if x > 1 and count[x] > count[x - 1]:
                return False
    return True


def lr_tensor(lam, mu, max_rows: int) -> Counter:
    """Littlewood-Richardson decomposition of s_lam * s_mu truncated to max_rows rows."""
    if max_rows < 1:
        raise ValueError("max_rows must be >= 1")
    lam, mu = Partition(lam), Partition(mu)
    out = Counter()
    if len(lam) > max_rows or len(mu) > max_rows:
        return out
    start = list(lam.padded(max_rows))

    def rec(i, shape, rows):
        if i == len(mu):
            if _is_lattice(rows):
                out[Partition(shape)] += 1
            return
        for strip in _horizontal_strips(shape, mu[i], max_rows):
            new_shape = [a + b for a, b in zip(shape, strip)]
            new_rows = [r + [i + 1] * s for r, s in zip(rows, strip)]
            rec(i + 1, new_shape, new_rows)

    rec(0, start, [[] for _ in range(max_rows)])
    return out


# ---------------------------------------------------------------------------
# Levi subsystems

class LeviSystem(SubSystem):
    """Levi factor obtained by deleting one node (1-based) of the Dynkin diagram."""

    def __init__(self, parent: RootSystem, marked_node: int):
        if not 1 <= marked_node <= len(parent.simple_roots):
            raise ValueError("marked node out of range")
        self.parent, self.marked_node = parent, marked_node
        self.family = f"{parent}/{marked_node}"
        self.ambient_dim = parent.ambient_dim
        idx = marked_node - 1
        self.simple_roots = tuple(a for i, a in enumerate(parent.simple_roots) if i != idx)
        pos = []
        for a in parent.positive_roots_list:
            c = solve_exact(parent.simple_roots, a)
            if c[idx] == 0:
                pos.append(a)
        self.positive_roots_list = tuple(pos)

    def __repr__(self):
        return f"Levi({self.parent}, node {self.marked_node})"

    def __eq__(self, other):
        return isinstance(other, LeviSystem) and (self.parent, self.marked_node) == (other.parent, other.marked_node)

    def __hash__(self):
        return hash(("levi", self.parent, self.marked_node))


def _system_key(system):
    return hash(system)


class _Projector:
    """Coordinates in the simple-root basis via a precomputed left inverse."""

    def __init__(self, system: SubSystem):
        S = system.simple_roots
        r = len(S)
        gram = [[dot(a, b) for b in S] for a in S]
        inv = []
        for j in range(r):
            e = [Fraction(int(i == j)) for i in range(r)]
            inv.append(solve_exact([tuple(row[i] for row in gram) for i in range(r)], e))
        # inv[j] is column j of gram^{-1}; gram is symmetric
        self.S, self.inv, self.r = S, inv, r

    def coords(self, v):
        pair = [dot(v, a) for a in self.S]
        c = [sum((self.inv[j][i] * pair[i] for i in range(self.r)), Fraction(0)) for j in range(self.r)]
        back = [Fraction(0)] * len(v)
        for cj, a in zip(c, self.S):
            if cj:
                back = [x + cj * y for x, y in zip(back, a)]
        if tuple(back) != tuple(v):
            return None
        return c


_projectors: dict = {}
_irreps: dict = {}


def _projector(system):
    key = _system_key(system)
    if key not in _projectors:
        _projectors[key] = _Projector(system)
    return _projectors[key]


class _Irrep:
    """Weight data of one irreducible representation, filled lazily."""

    def __init__(self, system: SubSystem, lam):
        self.system, self.lam = system, weight(lam)
        if not system.is_dominant(self.lam):
            raise ValueError(f"{fmt_weight(self.lam)} is not dominant for {system}")
        self.proj = _projector(system)
        rho = system.rho
        self.norm_top = dot(add(self.lam, rho), add(self.lam, rho))
        self.dom_mult = {self.lam: 1}
        self._dominant_cache = {}

    def below(self, mu) -> bool:
        c = self.proj.coords(sub(self.lam, mu))
        return c is not None and all(x >= 0 and x.denominator == 1 for x in c)

    def dominant(self, mu):
        d = self._dominant_cache.get(mu)
        if d is None:
            d = self.system.dominant(mu)
            self._dominant_cache[mu] = d
        return d

    def mult(self, mu) -> int:
        mu = self.dominant(tuple(mu))
        if mu in self.dom_mult:
            return self.dom_mult[mu]
        if not self.below(mu):
            self.dom_mult[mu] = 0
            return 0
        rho = self.system.rho
        num = Fraction(0)
        for a in self.system.positive_roots_list:
            k = 1
            while True:
                nu = add(mu, tuple(k * x for x in a))
                if not self.below(nu):
                    break
                m = self.mult(nu)
                if m:
                    num += dot(nu, a) * m
                k += 1
        den = self.norm_top - dot(add(mu, rho), add(mu, rho))
        val = 2 * num / den
        if val.denominator != 1 or val < 0:
            raise ArithmeticError("Freudenthal recursion produced a non-integer")
        self.dom_mult[mu] = int(val)
        return int(val)

    @cached_property
    def character(self) -> Counter:
        out = Counter({self.lam: 1})
        todo = [self.lam]
        seen = {self.lam}
        while todo:
            mu = todo.pop()
            for a in self.system.simple_roots:
                nu = sub(mu, a)
                if nu in seen:
                    continue
                seen.add(nu)
                m = self.mult(nu)
                if m:
                    out[nu] = m
                    todo.append(nu)
        return out


def irrep(system: SubSystem, lam) -> _Irrep:
    key = (_system_key(system), weight(lam))
    if key not in _irreps:
        _irreps[key] = _Irrep(system, lam)
    return _irreps[key]


def weight_mult(system: SubSystem, lam, nu) -> int:
    return irrep(system, lam).mult(weight(nu))


def character(system: SubSystem, lam) -> Counter:
    return Counter(irrep(system, lam).character)


def char_of(system: SubSystem, summands: Counter) -> Counter:
    out = Counter()
    for lam, m in summands.items():
        for w, k in character(system, lam).items():
            out[w] += m * k
    return out


def decompose_character(system: SubSystem, char: Counter) -> Counter:
    """Split a (genuine) character into irreducibles by peeling highest weights."""
    char = Counter({w: m for w, m in char.items() if m})
    rho = system.rho
    out = Counter()
    while char:
        top = max(char, key=lambda w: (dot(w, rho), w))
        m = char[top]
        if m < 0 or not system.is_dominant(top):
            raise ArithmeticError("not a genuine character")
        out[top] += m
        for w, k in character(system, top).items():
            char[w] -= m * k
            if not char[w]:
                del char[w]
    return out


def dimension(system: SubSystem, summands: Counter) -> int:
    return sum(m * weyl_dim(system, lam) for lam, m in summands.items())


def levi_tensor(system: SubSystem, lam, mu) -> Counter:
    """Klimyk: V(lam) x V(mu) = sum over weights nu of V(mu) of sign * V(w.(lam+nu))."""
    lam, mu = weight(lam), weight(mu)
    for w in (lam, mu):
        if not system.is_dominant(w):
            raise ValueError(f"{fmt_weight(w)} is not dominant for {system}")
    if weyl_dim(system, lam) < weyl_dim(system, mu):
        lam, mu = mu, lam
    rho = system.rho
    out = Counter()
    for nu, m in character(system, mu).items():
        v = add(add(lam, nu), rho)
        dom, steps, wall = system.make_dominant(v)
        if wall:
            continue
        out[sub(dom, rho)] += -m if steps % 2 else m
    if any(v < 0 for v in out.values()):
        raise ArithmeticError("Klimyk cancellation left a negative multiplicity")
    return Counter({k: v for k, v in out.items() if v})


def tensor_summands(system: SubSystem, a: Counter, b: Counter) -> Counter:
    out = Counter()
    for la, ma in a.items():
        for lb, mb in b.items():
            for w, m in levi_tensor(system, la, lb).items():
                out[w] += ma * mb * m
    return out


def _weight_list(system, summands: Counter):
    ws = []
    for w, m in sorted(char_of(system, summands).items()):
        ws.extend([w] * m)
    return ws


def exterior_summands(system: SubSystem, summands: Counter, k: int) -> Counter:
    ws = _weight_list(system, summands)
    if not 0 <= k <= len(ws):
        return Counter()
    zero = tuple(Fraction(0) for _ in range(system.ambient_dim))
    char = Counter()
    for combo in combinations(ws, k):
        acc = zero
        for w in combo:
            acc = add(acc, w)
        char[acc] += 1
    return decompose_character(system, char)


def sym_summands(system: SubSystem, summands: Counter, k: int) -> Counter:
    ws = _weight_list(system, summands)
    if k < 0:
        return Counter()
    zero = tuple(Fraction(0) for _ in range(system.ambient_dim))
    char = Counter()
    for combo in combinations_with_replacement(ws, k):
        acc = zero
        for w in combo:
            acc = add(acc, w)
        char[acc] += 1
    return decompose_character(system, char)


def levi_exterior(system: SubSystem, lam, k: int) -> Counter:
    lam = weight(lam)
    d = weyl_dim(system, lam)
    if not 0 <= k <= d:
        raise ValueError(f"k must lie in 0..{d}")
    return exterior_summands(system, Counter({lam: 1}), k)


def levi_sym(system: SubSystem, lam, k: int) -> Counter:
    return sym_summands(system, Counter({weight(lam): 1}), k)


def dual_summands(system: SubSystem, summands: Counter) -> Counter:
    out = Counter()
    for w, m in summands.items():
        out[system.dual_weight(w)] += m
    return out


def gl_weight(p: Sequence[int], n: int):
    return weight(Partition(p).padded(n))
