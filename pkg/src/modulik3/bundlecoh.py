"""Homogeneous bundles on Gr(8,2), OG(2,8) and OG(2,7).

A bundle expression is parsed into a small syntax tree, evaluated to a list
of Levi-irreducible summands (highest weight -> multiplicity) and pushed
through Borel-Weil-Bott.  Koszul first pages are assembled from the same
pieces.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Optional, Sequence, Tuple

from .liealg import BottResult, RootSystem, add, bott, smul, sub, weight, weyl_dim
from .schurrep import (
    LeviSystem,
    Partition,
    dimension,
    dual_summands,
    exterior_summands,
    sym_summands,
    tensor_summands,
)


class BundleParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# spaces

@dataclass(frozen=True)
class Space:
    id: str
    family: str
    rank: int
    marked_node: int
    generators: Tuple[Tuple[str, tuple], ...]
    o1: tuple

    @property
    def root_system(self) -> RootSystem:
        return _root_system(self.family, self.rank)

    @property
    def levi(self) -> LeviSystem:
        return _levi(self.family, self.rank, self.marked_node)

    @property
    def dim(self) -> int:
        return len(self.root_system.positive_roots_list) - len(self.levi.positive_roots_list)

    def generator(self, name: str):
        for n, w in self.generators:
            if n == name:
                return w
        raise BundleParseError(f"generator {name!r} is not available on {self.id}")

    def twist_weight(self, m: int):
        return smul(Fraction(m), self.o1)

    @property
    def canonical_index(self) -> int:
        """i with omega = O(-i), read off from 2(rho - rho_L)."""
        v = smul(2, sub(self.root_system.rho, self.levi.rho))
        rs = self.root_system
        for i in range(0, 4 * self.dim + 1):
            if rs.equivalent(v, smul(i, self.o1)):
                return i
        raise ArithmeticError("canonical class is not a multiple of O(1)")

    def __str__(self):
        return self.id


@lru_cache(maxsize=None)
def _root_system(family, rank):
    return RootSystem(family, rank)


@lru_cache(maxsize=None)
def _levi(family, rank, node):
    return LeviSystem(_root_system(family, rank), node)


_h = Fraction(1, 2)

SPACES: Dict[str, Space] = {
    "GR82": Space(
        "GR82", "A", 7, 2,
        (("Q", weight((1, 0, 0, 0, 0, 0, 0, 0))), ("K", weight((0, 0, 1, 0, 0, 0, 0, 0)))),
        weight((1, 1, 0, 0, 0, 0, 0, 0)),
    ),
    "OG82": Space(
        "OG82", "D", 4, 2,
        (("Q", weight((1, 0, 0, 0))), ("S+", weight((_h, _h, _h, -_h))), ("S-", weight((_h, _h, _h, _h)))),
        weight((1, 1, 0, 0)),
    ),
    # On OG(2,7) "Q" is the restriction of the rank 2 quotient from the
    # eight-dimensional side, which is the spinor bundle S'.
    "OG72": Space(
        "OG72", "B", 3, 2,
        (("Q", weight((_h, _h, _h))), ("S'", weight((_h, _h, _h))), ("Q'", weight((1, 0, 0))),
         ("S+", weight((1, 0, 0))), ("S-", weight((_h, _h, _h)))),
        weight((1, 1, 0)),
    ),
}


def get_space(space) -> Space:
    if isinstance(space, Space):
        return space
    try:
        return SPACES[str(space).upper()]
    except KeyError:
        raise BundleParseError(f"unknown space {space!r}; expected one of {sorted(SPACES)}") from None


# ---------------------------------------------------------------------------
# syntax tree

class BundleExpr:
    def rank(self, space: Space) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Gen(BundleExpr):
    name: str

    def rank(self, space):
        if self.name == "K":
            return 6
        return 2

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Twist(BundleExpr):
    m: int

    def rank(self, space):
        return 1

    def __str__(self):
        return f"O({self.m})"


@dataclass(frozen=True)
class Tensor(BundleExpr):
    left: BundleExpr
    right: BundleExpr

    def rank(self, space):
        return self.left.rank(space) * self.right.rank(space)

    def __str__(self):
        return f"{_wrap(self.left, Tensor)}*{_wrap(self.right, Tensor)}"


@dataclass(frozen=True)
class DirectSum(BundleExpr):
    left: BundleExpr
    right: BundleExpr

    def rank(self, space):
        return self.left.rank(space) + self.right.rank(space)

    def __str__(self):
        return f"{self.left} (+) {self.right}"


@dataclass(frozen=True)
class Dual(BundleExpr):
    arg: BundleExpr

    def rank(self, space):
        return self.arg.rank(space)

    def __str__(self):
        return f"dual({self.arg})"


@dataclass(frozen=True)
class Sym(BundleExpr):
    k: int
    arg: BundleExpr

    def rank(self, space):
        r = self.arg.rank(space)
        return comb(r + self.k - 1, self.k) if self.k >= 0 else 0

    def __str__(self):
        return f"sym({self.k},{self.arg})"


@dataclass(frozen=True)
class Wedge(BundleExpr):
    k: int
    arg: BundleExpr

    def rank(self, space):
        return comb(self.arg.rank(space), self.k) if self.k >= 0 else 0

    def __str__(self):
        return f"wedge({self.k},{self.arg})"


@dataclass(frozen=True)
class Sigma(BundleExpr):
    partition: Tuple[int, ...]

    def rank(self, space):
        lam = Partition(self.partition).padded(6)
        return weyl_dim(_root_system("A", 5), weight(lam))

    def __str__(self):
        return f"sigma([{','.join(map(str, self.partition))}],K)"


def _wrap(e, inside):
    if isinstance(e, DirectSum) and inside is Tensor:
        return f"({e})"
    return str(e)


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(\(\+\)|S\+|S-|S'|Q'|-?\d+|[A-Za-z_][A-Za-z_0-9]*|[*(),\[\]])")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise BundleParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        t = self.peek()
        if t is None:
            raise BundleParseError("unexpected end of expression")
        if expected is not None and t != expected:
            raise BundleParseError(f"expected {expected!r}, found {t!r}")
        self.i += 1
        return t

    def integer(self):
        t = self.take()
        if not re.fullmatch(r"-?\d+", t):
            raise BundleParseError(f"expected an integer, found {t!r}")
        return int(t)

    def parse(self):
        e = self.expr()
        if self.peek() is not None:
            raise BundleParseError(f"trailing input at {self.peek()!r}")
        return e

    def expr(self):
        e = self.term()
        while self.peek() == "(+)":
            self.take()
            e = DirectSum(e, self.term())
        return e

    def term(self):
        e = self.atom()
        while self.peek() == "*":
            self.take()
            e = Tensor(e, self.atom())
        return e

    def atom(self):
        t = self.take()
        if t in ("Q", "K", "S+", "S-", "S'", "Q'"):
            return Gen(t)
        if t == "O":
            self.take("(")
            m = self.integer()
            self.take(")")
            return Twist(m)
        if t == "dual":
            self.take("(")
            e = self.expr()
            self.take(")")
            return Dual(e)
        if t in ("sym", "wedge"):
            self.take("(")
            k = self.integer()
            self.take(",")
            e = self.expr()
            self.take(")")
            return Sym(k, e) if t == "sym" else Wedge(k, e)
        if t == "sigma":
            self.take("(")
            self.take("[")
            parts = []
            if self.peek() != "]":
                parts.append(self.integer())
                while self.peek() == ",":
                    self.take()
                    parts.append(self.integer())
            self.take("]")
            self.take(",")
            self.take("K")
            self.take(")")
            try:
                p = Partition(parts)
            except ValueError as exc:
                raise BundleParseError(str(exc)) from None
            if len(p) > 6:
                raise BundleParseError("sigma partitions may have at most 6 rows")
            return Sigma(tuple(p))
        if t == "(":
            e = self.expr()
            self.take(")")
            return e
        raise BundleParseError(f"unexpected token {t!r}")


def parse_bundle(text: str):
    """Parse 'SPACE: expr' or a bare expression.  Returns (space id or None, tree)."""
    text = text.strip()
    space = None
    m = re.match(r"^([A-Za-z0-9]+)\s*:\s*(.*)$", text, re.S)
    if m:
        space = get_space(m.group(1)).id
        text = m.group(2)
    if not text:
        raise BundleParseError("empty expression")
    return space, _Parser(text).parse()


def as_expr(expr) -> BundleExpr:
    if isinstance(expr, BundleExpr):
        return expr
    return parse_bundle(expr)[1]


# ---------------------------------------------------------------------------
# evaluation

def _trivial(space: Space) -> Counter:
    return Counter({weight([0] * space.root_system.ambient_dim): 1})


def _check_space(space: Space, e: BundleExpr):
    if isinstance(e, Gen):
        space.generator(e.name)
    elif isinstance(e, Sigma) and space.id != "GR82":
        raise BundleParseError("sigma(...,K) is only defined on GR82")
    for child in ("left", "right", "arg"):
        if hasattr(e, child):
            _check_space(space, getattr(e, child))


def _eval(space: Space, e: BundleExpr) -> Counter:
    L = space.levi
    if isinstance(e, Gen):
        return Counter({space.generator(e.name): 1})
    if isinstance(e, Twist):
        return Counter({space.twist_weight(e.m): 1})
    if isinstance(e, Sigma):
        return Counter({weight((0, 0) + Partition(e.partition).padded(6)): 1})
    if isinstance(e, Tensor):
        return tensor_summands(L, _eval_cached(space, e.left), _eval_cached(space, e.right))
    if isinstance(e, DirectSum):
        return _eval_cached(space, e.left) + _eval_cached(space, e.right)
    if isinstance(e, Dual):
        return dual_summands(L, _eval_cached(space, e.arg))
    if isinstance(e, Wedge):
        if e.k == 0:
            return _trivial(space)
        if e.k < 0:
            return Counter()
        return exterior_summands(L, _eval_cached(space, e.arg), e.k)
    if isinstance(e, Sym):
        if e.k == 0:
            return _trivial(space)
        if e.k < 0:
            return Counter()
        return sym_summands(L, _eval_cached(space, e.arg), e.k)
    raise TypeError(f"not a bundle expression: {e!r}")


_cache: dict = {}


def _eval_cached(space: Space, e: BundleExpr) -> Counter:
    key = (space.id, e)
    if key not in _cache:
        _cache[key] = _eval(space, e)
    return Counter(_cache[key])


def decompose(space, expr) -> Counter:
    """Levi-irreducible summands of a bundle expression, as a Counter weight -> multiplicity."""
    space = get_space(space)
    e = as_expr(expr)
    _check_space(space, e)
    return _eval_cached(space, e)


def structural_rank(space, expr) -> int:
    space = get_space(space)
    return as_expr(expr).rank(space)


def summand_rank(space, summands: Counter) -> int:
    return dimension(get_space(space).levi, summands)


# ---------------------------------------------------------------------------
# cohomology

def _sign(i: int) -> int:
    return -1 if i % 2 else 1


@dataclass(frozen=True)
class CohProfile:
    """Nonzero cohomology dimensions, stored as sorted (degree, dimension) pairs."""

    items: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d) -> "CohProfile":
        return cls(tuple(sorted((int(k), int(v)) for k, v in d.items() if v)))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.items)

    def __getitem__(self, i) -> int:
        return self.as_dict().get(i, 0)

    def __bool__(self):
        return bool(self.items)

    def euler(self) -> int:
        return sum(_sign(i) * d for i, d in self.items)

    def mirror(self, n: int) -> "CohProfile":
        return CohProfile.from_dict({n - i: d for i, d in self.items})

    def __str__(self):
        if not self.items:
            return "all cohomology vanishes"
        return ", ".join(f"H^{i} = C^{d}" for i, d in self.items)


@dataclass(frozen=True)
class SummandCohomology:
    weight: tuple
    multiplicity: int
    shifted: tuple
    result: BottResult


def bwb_rows(space, expr) -> list:
    space = get_space(space)
    rs = space.root_system
    rows = []
    for w, m in sorted(decompose(space, expr).items()):
        rows.append(SummandCohomology(w, m, add(w, rs.rho), bott(rs, w)))
    return rows


def profile_of_summands(space, summands: Counter) -> CohProfile:
    space = get_space(space)
    rs = space.root_system
    out = Counter()
    for w, m in summands.items():
        r = bott(rs, w)
        if not r.vanishing:
            out[r.index] += m * r.dimension
    return CohProfile.from_dict(out)


def cohomology(space, expr) -> CohProfile:
    space = get_space(space)
    return profile_of_summands(space, decompose(space, expr))


def serre_dual_expr(space, expr) -> BundleExpr:
    space = get_space(space)
    return Tensor(Dual(as_expr(expr)), Twist(-space.canonical_index))


# ---------------------------------------------------------------------------
# Koszul first pages

@dataclass(frozen=True)
class KoszulPage:
    """grid[(p, q)] = dim H^q(wedge^p W^dual * E); the term sits in total degree q - p."""

    grid: Tuple[Tuple[Tuple[int, int], int], ...]
    rank_w: int
    ambient_dim: int
    forced: Optional[CohProfile] = None
    rule: Optional[str] = None

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return dict(self.grid)

    @property
    def zero_locus_dim(self) -> int:
        return self.ambient_dim - self.rank_w

    def euler(self) -> int:
        return sum(_sign(q - p) * d for (p, q), d in self.grid)

    def totals(self) -> Dict[int, int]:
        out = Counter()
        for (p, q), d in self.grid:
            out[q - p] += d
        return dict(out)

    def __str__(self):
        lines = [f"E1 page (rank W = {self.rank_w}, dim = {self.ambient_dim}):"]
        for (p, q), d in self.grid:
            lines.append(f"  p={p} q={q} total={q - p}: {d}")
        if self.forced is not None:
            lines.append(f"forced ({self.rule}): {self.forced}")
        else:
            lines.append("not forced by degree reasons")
        return "\n".join(lines)


def _has_differential(grid: Dict[Tuple[int, int], int]) -> bool:
    nz = [k for k, d in grid.items() if d]
    for (p, q) in nz:
        for (p2, q2) in nz:
            if p2 < p and q2 - p2 == q - p + 1:
                return True
    return False


def force_page(grid: Dict[Tuple[int, int], int], zero_dim: int):
    """Return (profile, rule) when convergence is determined by degrees alone."""
    grid = {k: d for k, d in grid.items() if d}
    totals = Counter()
    for (p, q), d in grid.items():
        totals[q - p] += d
    if not _has_differential(grid):
        return CohProfile.from_dict(totals), "no-differential"
    live = sorted(t for t in totals if 0 <= t <= zero_dim)
    if len(live) <= 1:
        chi = sum(_sign(q - p) * d for (p, q), d in grid.items())
        if not live:
            if chi != 0:
                return None, None
            return CohProfile(), "single-degree"
        t0 = live[0]
        val = _sign(t0) * chi
        if val < 0:
            return None, None
        return CohProfile.from_dict({t0: val}), "single-degree"
    return None, None


def koszul_e1(space, expr, cosection: Sequence = ()) -> KoszulPage:
    space = get_space(space)
    E = as_expr(expr)
    ws = [as_expr(w) for w in cosection]
    if not ws:
        prof = cohomology(space, E)
        grid = {(0, q): d for q, d in prof.items}
        return KoszulPage(tuple(sorted(grid.items())), 0, space.dim, prof, "no-differential")
    W = ws[0]
    for w in ws[1:]:
        W = DirectSum(W, w)
    r = summand_rank(space, decompose(space, W))
    if r > space.dim:
        raise ValueError("cosection rank exceeds the dimension of the space")
    grid = {}
    for p in range(r + 1):
        prof = cohomology(space, Tensor(Wedge(p, Dual(W)), E))
        for q, d in prof.items:
            grid[(p, q)] = d
    forced, rule = force_page(grid, space.dim - r)
    return KoszulPage(tuple(sorted(grid.items())), r, space.dim, forced, rule)


# ---------------------------------------------------------------------------
# the genus 3 moduli space N as a zero locus (dimension 6)
#
# N sits in GR82 as the zero locus of a section of S^2Q + S^2Q and in OG82
# as the zero locus of a section of S^2Q; the universal bundles U_p are the
# restrictions of S+.  For two different points the product U_p1 * U_p2(m)
# is reduced to GR82 through the resolution of the pushed-forward spinor
# bundle, whose terms lie in the span of sigma^a K for the shapes below.

NMINUS_DIM = 6
SPINOR_PUSH_SHAPES = ((), (1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1, 1), (2, 2, 2, 2, 2, 2))


def _sig(p):
    return Sigma(tuple(p))


def nminus_cohomology(kind: str, m: int) -> Optional[CohProfile]:
    """Cohomology on N of O(m), S^2Q(m), U(m), U*U(m) (same point) or U1*U2(m).

    Returns None when the Koszul page does not determine the answer.
    """
    if kind == "O":
        page = koszul_e1("GR82", Twist(m), [as_expr("sym(2,Q)"), as_expr("sym(2,Q)")])
    elif kind == "S2Q":
        page = koszul_e1("GR82", Tensor(as_expr("sym(2,Q)"), Twist(m)), [as_expr("sym(2,Q)"), as_expr("sym(2,Q)")])
    elif kind == "U":
        page = koszul_e1("OG82", Tensor(Gen("S+"), Twist(m)), [as_expr("sym(2,Q)")])
    elif kind == "UU":
        page = koszul_e1("OG82", Tensor(as_expr("S+*S+"), Twist(m)), [as_expr("sym(2,Q)")])
    elif kind == "U1U2":
        for a in SPINOR_PUSH_SHAPES:
            for b in SPINOR_PUSH_SHAPES:
                if cohomology("GR82", Tensor(Tensor(_sig(a), _sig(b)), Twist(m - 1))):
                    return None
        return CohProfile()
    else:
        raise ValueError(f"unknown bundle kind {kind!r}")
    return page.forced


def _nminus_term(a: int, b: int, m: int):
    """wedge^a U1^dual * wedge^b U2^dual (m) with U^dual = U(-1), wedge^2 U^dual = O(-1)."""
    twist = m - (a > 0) - (b > 0)
    ones = (a == 1) + (b == 1)
    kind = {0: "O", 1: "U", 2: "U1U2"}[ones]
    return kind, twist


def nminus_surface_koszul(m: int = 1, points: int = 2) -> KoszulPage:
    """E1 page for O(m) restricted to the zero locus of U_p1 + ... (points = 1 or 2)."""
    if points not in (1, 2):
        raise ValueError("points must be 1 or 2")
    grid = {}
    rank_w = 2 * points
    for a in range(3):
        for b in range(3 if points == 2 else 1):
            kind, twist = _nminus_term(a, b, m)
            prof = nminus_cohomology(kind, twist)
            if prof is None:
                raise ArithmeticError(f"cohomology of {kind}({twist}) on N is not determined")
            for q, d in prof.items:
                grid[(a + b, q)] = grid.get((a + b, q), 0) + d
    forced, rule = force_page(grid, NMINUS_DIM - rank_w)
    return KoszulPage(tuple(sorted(grid.items())), rank_w, NMINUS_DIM, forced, rule)


def nminus_sym2_chi(m: int) -> int:
    """Euler characteristic of S^2Q(m) on N from the GR82 Koszul page."""
    return koszul_e1("GR82", Tensor(as_expr("sym(2,Q)"), Twist(m)), [as_expr("sym(2,Q)"), as_expr("sym(2,Q)")]).euler()
