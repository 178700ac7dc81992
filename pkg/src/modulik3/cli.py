"""Command line front end: ``modulik3 <subcommand> ...``.

Exit codes: 0 success, 1 a verification mismatch or internal consistency
failure, 2 bad usage or unparsable input.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import bundlecoh as bc
from . import newstead as ns
from . import quadrics as qd
from .liealg import bott, fmt_weight, parse_weight
from .tables import UnknownTableError


class UsageError(Exception):
    pass


def _bindings(pairs) -> dict:
    out = {}
    for p in pairs or ():
        if "=" not in p:
            raise UsageError(f"binding {p!r} is not of the form name=value")
        k, v = p.split("=", 1)
        out[k.strip()] = Fraction(v.strip())
    return out


def _cmd_kappa(a) -> int:
    print(ns.kappa(ns.class_expr(a.genus, a.expr, **_bindings(a.set))))
    return 0


def _cmd_chi(a) -> int:
    print(ns.chi(a.genus, ns.class_expr(a.genus, a.expr, **_bindings(a.set))))
    return 0


def _cmd_degrees(a) -> int:
    inv = ns.cy_invariants(a.genus)
    print(f"deg_Y={inv.deg_Y} deg_Z={inv.deg_Z}")
    print(f"dim_Y={inv.dim_Y} dim_Z={inv.dim_Z} chi_OZ={inv.chi_OZ}")
    return 0


def _cmd_pushforward(a) -> int:
    if a.restricted:
        r, d = ns.restricted_pushforward(a.genus, a.degree)
    else:
        r, d = ns.pushforward_rank_deg(a.genus, a.degree)
    print(f"rank={r} degree={d}")
    return 0


def _cmd_bwb(a) -> int:
    space = bc.get_space(a.space)
    w = parse_weight(a.weight)
    n = space.root_system.ambient_dim
    if len(w) != n:
        raise UsageError(f"{space.id} weights have {n} coordinates")
    if not space.levi.is_dominant(w):
        raise UsageError(f"weight {fmt_weight(w)} is not dominant for the Levi factor of {space.id}")
    r = bott(space.root_system, w)
    if r.vanishing:
        print("singular, all cohomology vanishes")
    else:
        print(f"index {r.index}, dim {r.dimension}")
    return 0


def _print_summands(summands) -> None:
    for w, m in sorted(summands.items()):
        print(f"{m} x {fmt_weight(w)}")


def _cmd_tensor(a) -> int:
    _print_summands(bc.decompose(a.space, bc.Tensor(bc.as_expr(a.a), bc.as_expr(a.b))))
    return 0


def _cmd_cohom(a) -> int:
    print(bc.cohomology(a.space, a.expr))
    return 0


def _cmd_koszul(a) -> int:
    print(bc.koszul_e1(a.space, a.expr, a.cosection or ()))
    return 0


def _parse_diag(text: str):
    return qd.diag([Fraction(x) for x in text.split(",") if x.strip()])


def _cmd_pencil(a) -> int:
    if a.diag:
        p = qd.QuadricPencil(_parse_diag(a.diag[0]), _parse_diag(a.diag[1]))
    elif a.file:
        p = qd.load_pencil(Path(a.file).read_text())
    else:
        raise UsageError("give a pencil file or --diag Q1 Q2")
    print(f"discriminant: {qd.pencil_disc(p)}")
    if a.simple:
        simple, genus = qd.is_simple(p)
        print(f"simple: {simple}" + (f", genus {genus}" if simple else ""))
    if a.members:
        for m in qd.degenerate_members(p):
            print(m)
    return 0


def _cmd_divisors(a) -> int:
    x = qd.divisor_class(a.pair[0], a.complement)
    y = qd.divisor_class(a.pair[1], a.complement)
    print(qd.intersect(x, y))
    return 0


def _cmd_verify(a) -> int:
    from .verify import run

    report = run(a.table)
    if a.json:
        Path(a.json).write_text(report.to_json() + "\n")
    for i in report.items:
        if a.verbose or i.status != "match":
            print(f"{i.status:8s} {i.check_id} [{i.location}] expected {i.expected}, computed {i.computed}")
    s = report.summary
    print(f"{s['match']} matched, {s['mismatch']} mismatched, {s['flagged']} flagged")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modulik3", description="Exact checks for moduli of bundles and K3 surfaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("kappa", _cmd_kappa, "integrate a class over N"),
                               ("chi", _cmd_chi, "Euler characteristic of a Chern character on N")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("-g", "--genus", type=int, required=True)
        p.add_argument("expr")
        p.add_argument("--set", action="append", metavar="NAME=VALUE", help="bind a symbol such as d")
        p.set_defaults(func=fn)

    p = sub.add_parser("degrees", help="degrees of the Fano and Calabi-Yau complete intersections")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.set_defaults(func=_cmd_degrees)

    p = sub.add_parser("pushforward", help="rank and degree of the pushforward of the universal bundle")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("--restricted", action="store_true", help="restrict to the Calabi-Yau Z first")
    p.set_defaults(func=_cmd_pushforward)

    p = sub.add_parser("bwb", help="Borel-Weil-Bott for one Levi-dominant weight")
    p.add_argument("space")
    p.add_argument("weight")
    p.set_defaults(func=_cmd_bwb)

    p = sub.add_parser("tensor", help="decompose a tensor product into irreducible summands")
    p.add_argument("space")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("cohom", help="cohomology of a homogeneous bundle")
    p.add_argument("space")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_cohom)

    p = sub.add_parser("koszul", help="first page of the Koszul spectral sequence")
    p.add_argument("space")
    p.add_argument("expr")
    p.add_argument("--cosection", nargs="+", metavar="W")
    p.set_defaults(func=_cmd_koszul)

    p = sub.add_parser("pencil", help="discriminant and degenerate members of a pencil of quadrics")
    p.add_argument("file", nargs="?")
    p.add_argument("--diag", nargs=2, metavar=("Q1", "Q2"), help="diagonal pencil, entries comma separated")
    p.add_argument("--simple", action="store_true")
    p.add_argument("--members", action="store_true")
    p.set_defaults(func=_cmd_pencil)

    p = sub.add_parser("divisors", help="intersection numbers of divisor classes on S")
    p.add_argument("--pair", nargs=2, required=True, metavar=("A", "B"))
    p.add_argument("--complement", action="store_true", help="accept even index sets via their complement")
    p.set_defaults(func=_cmd_divisors)

    p = sub.add_parser("verify-paper", aliases=["verify"], help="run all fixture tables and numerical checks")
    p.add_argument("--table", action="append", metavar="ID")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("-v", "--verbose", action="store_true", help="print matched items too")
    p.set_defaults(func=_cmd_verify)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ns.ConsistencyError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except UnknownTableError as e:
        print(f"error: unknown table or check group {e.args[0]!r}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, KeyError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
