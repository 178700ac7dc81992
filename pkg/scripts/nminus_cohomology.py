"""Cohomology on the genus 3 moduli space N of twists of O, S^2Q, U_p and
U_p * U_p, from Koszul first pages on Gr(8,2) and OG(2,8), next to the
Riemann-Roch Euler characteristic."""
import argparse
from dataclasses import dataclass

from modulik3 import bundlecoh as bc
from modulik3 import newstead as ns


@dataclass
class Config:
    m_min: int = -4
    m_max: int = 2


def _grr(kind, m):
    g = 3
    if kind == "O":
        return ns.chi(g, ns.exp_alpha(g, m))
    if kind == "S2Q":
        return ns.chi_sym2Q(g, m)
    if kind == "U":
        return ns.chi(g, ns.ch_U(g) * ns.exp_alpha(g, m))
    if kind == "UU":
        return ns.chi(g, ns.ch_U(g) * ns.ch_U(g) * ns.exp_alpha(g, m))
    return None


def main(cfg: Config) -> None:
    for kind in ("O", "S2Q", "U", "UU"):
        for m in range(cfg.m_min, cfg.m_max + 1):
            prof = bc.nminus_cohomology(kind, m)
            shown = "not determined by the E1 page" if prof is None else str(prof)
            print(f"{kind:>4}({m:>2}): {shown:<40} chi (GRR) = {_grr(kind, m)}")
    print()
    print(bc.nminus_surface_koszul(1, 2))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-min", type=int, default=Config.m_min)
    ap.add_argument("--m-max", type=int, default=Config.m_max)
    a = ap.parse_args()
    main(Config(a.m_min, a.m_max))
