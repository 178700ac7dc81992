"""Full verification run: fixture tables plus every numerical check.

Each group returns a list of CheckItem records; ``run`` assembles the groups
requested (all by default) into one sorted VerificationReport.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

from . import bundlecoh as bc
from . import mukai as mk
from . import newstead as ns
from . import quadrics as qd
from .liealg import weyl_dim
from .report import CheckItem, VerificationReport, item
from .series import residue_identity
from .tables import UnknownTableError, table_ids, verify_table

ODD_D = tuple(range(-5, 10, 2))


def _residues() -> List[CheckItem]:
    out = []
    for case in range(1, 9):
        for n in range(6):
            closed = residue_identity(case, n, "closed_form")
            series = residue_identity(case, n, "series")
            out.append(item(f"residues/case{case}/n={n}", "residue identities", closed, series))
    for case, n, quoted in ((2, 1, Fraction(3, 4)), (7, 2, Fraction(-16, 27)), (3, 1, Fraction(0))):
        out.append(item(f"residues/quoted/case{case}/n={n}", "residue identities",
                        quoted, residue_identity(case, n, "series")))
    return out


def _kappa() -> List[CheckItem]:
    out = []
    for g in range(2, 6):
        top = ns.top_degree(g)
        for p in (0, 1):
            for n in range(-p, top // 2 + 1):
                m = top - 2 * n - 3 * p
                if m < 0:
                    continue
                out.append(item(f"kappa/g={g}/a^{m}b^{n}c^{p}", "intersection numbers",
                                ns.kappa_monomial(g, m, n, p), ns.kappa_monomial_residue(g, m, n, p)))
    a = ns.CohClass.alpha
    out.append(item("kappa/alpha^6/g=3", "intersection numbers", 224, ns.kappa(a(3) ** 6)))
    out.append(item("kappa/alpha^4beta/g=3", "intersection numbers", -64, ns.kappa(a(3) ** 4 * ns.CohClass.beta(3))))
    return out


QUOTED_DEGREES = {3: (72, 24), 4: (13472, 3840), 5: (6913536, 1859968), 6: (7477297152, 1958247936)}


def _degrees() -> List[CheckItem]:
    out = []
    for g, (dy, dz) in QUOTED_DEGREES.items():
        inv = ns.cy_invariants(g)
        out.append(item(f"degrees/g={g}", "Fano and Calabi-Yau complete intersections",
                        f"deg_Y={dy} deg_Z={dz}", f"deg_Y={inv.deg_Y} deg_Z={inv.deg_Z}"))
        out.append(item(f"degrees/closed/g={g}", "degree closed formula",
                        f"{ns.deg_Y_closed(g)},{ns.deg_Z_closed(g)}", f"{inv.deg_Y},{inv.deg_Z}"))
        out.append(item(f"degrees/dims/g={g}", "Fano and Calabi-Yau complete intersections",
                        f"{3 * g - 5},{3 * g - 7}", f"{inv.dim_Y},{inv.dim_Z}"))
    return out


def _euler() -> List[CheckItem]:
    out = []
    for g in range(2, 7):
        ea = ns.exp_alpha(g, 1)
        out.append(item(f"euler/O(alpha)/g={g}", "cohomology on N", 2 ** (g - 1) * (2 ** g - 1), ns.chi(g, ea)))
        out.append(item(f"euler/U(-alpha)/g={g}", "cohomology on N", 0, ns.chi(g, ns.ch_U(g) * ns.exp_alpha(g, -1))))
        out.append(item(f"euler/O(-alpha)/g={g}", "cohomology on N", 0, ns.chi(g, ns.exp_alpha(g, -1))))
        out.append(item(f"euler/O/g={g}", "cohomology on N", 1, ns.chi(g, ns.CohClass.const(g))))
    for g in range(3, 7):
        out.append(item(f"euler/O_Z/g={g}", "Calabi-Yau complete intersection", 1 + (-1) ** (g + 1),
                        ns.cy_invariants(g).chi_OZ))
    for m, expected in zip((0, -1, -2, -3), (34, 1, -2, 1)):
        out.append(item(f"euler/S2Q({m})/grr", "S^2Q on N", expected, ns.chi_sym2Q(3, m)))
        out.append(item(f"euler/S2Q({m})/koszul", "S^2Q on N", expected, bc.nminus_sym2_chi(m)))
    return out


def _pushforward() -> List[CheckItem]:
    out = []
    for g in (3, 4, 5):
        for d in ODD_D:
            out.append(item(f"pushforward/g={g}/d={d}", "degree of the pushforward",
                            f"{2 ** g},{2 ** (g - 1) * (d - g + 1)}", "%s,%s" % ns.pushforward_rank_deg(g, d)))
            out.append(item(f"pushforward/restricted/g={g}/d={d}", "degree of the restricted pushforward",
                            f"{2 ** g},{2 ** (g - 1) * (d - g + 1) + 2}", "%s,%s" % ns.restricted_pushforward(g, d)))
    for d in ODD_D:
        r, deg = mk.pushforward_SxC(d)
        out.append(item(f"pushforward/SxC/d={d}", "pushforward on S x C", f"8,{4 * d - 6}", f"{r},{deg}"))
        out.append(item(f"pushforward/SxC-difference/d={d}", "pushforward on S x C", 2,
                        deg - ns.pushforward_rank_deg(3, d)[1]))
    out.append(item("pushforward/mu/g=3/d=1", "mu aggregate", -2, ns.mu_aggregate(3, 1)))
    out.append(item("pushforward/mu/g=4/d=3", "mu aggregate", 2, ns.mu_aggregate(4, 3)))
    out.append(item("pushforward/phi-degree", "degree of C", 6, mk.phi_degree(mk.MukaiVector(-1, 0, 3))))
    return out


def _dimensions() -> List[CheckItem]:
    out = []
    out.append(item("dimensions/H0(S2Q)/GR82", "sections of S^2Q", "{0: 36}",
                    bc.cohomology("GR82", "sym(2,Q)").as_dict()))
    out.append(item("dimensions/H0(S2Q|N)/koszul", "sections of S^2Q on N", "{0: 34}",
                    bc.nminus_cohomology("S2Q", 0).as_dict()))
    out.append(item("dimensions/H0(S2Q|N)/grr", "sections of S^2Q on N", 34, ns.chi_sym2Q(3, 0)))
    out.append(item("dimensions/H0(O(1)|N)/koszul", "sections of O(1) on N", "{0: 28}",
                    bc.nminus_cohomology("O", 1).as_dict()))
    out.append(item("dimensions/H0(O(1)|N)/grr", "sections of O(1) on N", 28, ns.chi(3, ns.exp_alpha(3, 1))))
    page = bc.nminus_surface_koszul(1, 2)
    out.append(item("dimensions/h0(O_S(h))/koszul", "sections of O_S(h)", "{0: 14}",
                    page.forced.as_dict() if page.forced else None))
    out.append(item("dimensions/h0(O_S(h))/hrr", "sections of O_S(h)", 14, mk.chi_K3(mk.K3ChClass.line(1))))
    out.append(item("dimensions/H0(U_p)/koszul", "sections of U_p", "{0: 8}",
                    bc.nminus_cohomology("U", 0).as_dict()))
    out.append(item("dimensions/H0(U_p)/grr", "sections of U_p", 8, ns.chi(3, ns.ch_U(3))))
    D4 = bc.get_space("OG82").root_system
    out.append(item("dimensions/spin", "spin representation", 8, weyl_dim(D4, bc.get_space("OG82").generator("S+"))))
    out.append(item("dimensions/H0(Q|_S)", "sections of Q on S", 8, mk.chi_K3(mk.quotient_on_S())))
    out.append(item("dimensions/moduli/r=2,g=3", "moduli dimension", 6, ns.moduli_dim(2, 3)))
    out.append(item("dimensions/moduli/r=3,g=2", "moduli dimension", 8, ns.moduli_dim(3, 2)))
    return out


def _koszul() -> List[CheckItem]:
    page = bc.koszul_e1("OG82", "S+*S+*O(-1)", ["sym(2,Q)"])
    out = [item("koszul/U_Udual", "U_p * U_p dual on N", "{0: 1, 1: 1}",
                page.forced.as_dict() if page.forced else None)]
    for m in (-1, -2):
        out.append(item(f"koszul/U({m})", "cohomology of U_p on N", "{}", bc.nminus_cohomology("U", m).as_dict()))
    out.append(item("koszul/U1U2(-1)", "U_p1 * U_p2 on N", "{}", bc.nminus_cohomology("U1U2", -1).as_dict()))
    for m, exp in ((0, "{0: 1}"), (-1, "{}")):
        out.append(item(f"koszul/O({m})", "cohomology of O on N", exp, bc.nminus_cohomology("O", m).as_dict()))
    return out


def _mukai() -> List[CheckItem]:
    V = mk.MukaiVector
    out = [
        item("mukai/<(2,h,6)>", "Mukai pairing", 0, mk.mukai_pair(V(2, 1, 6), V(2, 1, 6))),
        item("mukai/dim(2,h,6)", "moduli of sheaves on S", 2, mk.moduli_dim(V(2, 1, 6))),
        item("mukai/dim(3,h,4)", "semi-rigid bundles", 2, mk.moduli_dim(V(3, 1, 4))),
        item("mukai/<(-1,0,3)>", "Mukai pairing", 6, mk.mukai_pair(V(-1, 0, 3), V(-1, 0, 3))),
        item("mukai/restrict", "restriction of the universal quotient", "(2,1h,6)", mk.restrict_universal()),
        item("mukai/genus(24)", "genus of S", 13, mk.genus_from_h2(24)),
        item("mukai/genus(36)", "genus 19", 19, mk.genus_from_h2(36)),
        item("mukai/<(3,h,6)>_36", "genus 19", 0, mk.mukai_pair(V(3, 1, 6), V(3, 1, 6), 36)),
        item("mukai/<(-1,0,2)>_36", "genus 19", 4, mk.mukai_pair(V(-1, 0, 2), V(-1, 0, 2), 36)),
        item("mukai/chi(Q|_S)", "sections of Q on S", 8, mk.chi_K3(mk.quotient_on_S())),
    ]
    # The text states chi(S^2Q(-1)|_S) = 2, while HRR gives -2, which is the
    # value compatible with H^0 = H^2 = 0 and H^1 = C^2 asserted right after.
    out.append(item("mukai/chi(S2Q(-1)|_S)", "simple semi-rigid bundle", 2,
                    mk.chi_K3(mk.quotient_on_S().sym2(), -1), flagged=True))
    return out


def _pencils() -> List[CheckItem]:
    p = qd.QuadricPencil(qd.identity(8), qd.diag(range(1, 9)))
    members = qd.degenerate_members(p)
    out = [
        item("pencils/simple", "simple pencil", "(True, 3)", qd.is_simple(p)),
        item("pencils/corank-one-members", "degenerate quadrics", "8 x corank 1",
             f"{len(members)} x corank {','.join(sorted({str(x.corank) for x in members}))}"),
        item("pencils/N=12", "simple pencil", "(True, 5)",
             qd.is_simple(qd.QuadricPencil(qd.diag(range(1, 13)), qd.identity(12)))),
        item("pencils/repeated", "simple pencil", "(False, None)",
             qd.is_simple(qd.QuadricPencil(qd.diag([1, 1, 3, 4, 5, 6, 7, 8]), qd.identity(8)))),
    ]
    return out


def _divisors() -> List[CheckItem]:
    out = []
    e0 = qd.e_class(())
    for i in range(1, 8):
        out.append(item(f"divisors/e0.e{i}", "sextic rational curves", 4, qd.intersect(e0, qd.e_class({i}))))
    for I in qd.odd_subsets():
        name = "".join(str(i) for i in sorted(I)) or "0"
        e = qd.e_class(I)
        out.append(item(f"divisors/e_{name}", "sextic rational curves", "-2,6",
                        f"{qd.intersect(e, e)},{qd.intersect(qd.H_CLASS, e)}"))
        if len(I) in (3, 5):
            out.append(item(f"divisors/e0.e_{name}", "sextic rational curves", 2 if len(I) == 3 else 0,
                            qd.intersect(e0, e)))
    H = qd.h_m_class()
    out.append(item("divisors/H^2", "sextic model", 6, qd.intersect(H, H)))
    for i in range(1, 8):
        out.append(item(f"divisors/H.e{i}", "sextic model", 0, qd.intersect(H, qd.e_class({i}))))
    out.append(item("divisors/model/segre_ci", "Segre model", 24, qd.model_h2("segre_ci")))
    out.append(item("divisors/model/nodal_sextic", "genus 13 polarization", 24, qd.model_h2("nodal_sextic")))
    out.append(item("divisors/model/sextic_hyperplane", "sextic model", 6, qd.model_h2("sextic_hyperplane")))
    return out


NUMERIC_GROUPS: Dict[str, Callable[[], List[CheckItem]]] = {
    "residues": _residues,
    "kappa": _kappa,
    "degrees": _degrees,
    "euler": _euler,
    "pushforward": _pushforward,
    "dimensions": _dimensions,
    "koszul": _koszul,
    "mukai": _mukai,
    "pencils": _pencils,
    "divisors": _divisors,
}


def group_ids() -> List[str]:
    return sorted(table_ids()) + sorted(NUMERIC_GROUPS)


def run_group(gid: str) -> List[CheckItem]:
    if gid in NUMERIC_GROUPS:
        return NUMERIC_GROUPS[gid]()
    if gid in table_ids():
        return list(verify_table(gid).items)
    raise UnknownTableError(gid)


def run(groups: Optional[Iterable[str]] = None, workers: int = 1) -> VerificationReport:
    ids = list(groups) if groups is not None else group_ids()
    for gid in ids:
        if gid not in NUMERIC_GROUPS and gid not in table_ids():
            raise UnknownTableError(gid)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(run_group, ids))
    else:
        parts = [run_group(g) for g in ids]
    return VerificationReport([i for part in parts for i in part]).sorted()
