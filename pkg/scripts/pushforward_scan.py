"""Rank and degree of the pushforward of the universal bundle to the curve,
on N, on the Calabi-Yau Z and on S x C, for a grid of genera and degrees."""
import argparse
from dataclasses import dataclass, field

from modulik3 import mukai as mk
from modulik3 import newstead as ns


@dataclass
class Config:
    genera: tuple = (3, 4, 5)
    degrees: tuple = field(default_factory=lambda: tuple(range(-5, 10, 2)))


def main(cfg: Config) -> None:
    print(f"{'g':>3} {'d':>4} {'N':>12} {'Z':>12} {'S x C':>10}")
    for g in cfg.genera:
        for d in cfg.degrees:
            r, deg = ns.pushforward_rank_deg(g, d)
            rz, degz = ns.restricted_pushforward(g, d)
            sxc = "%s,%s" % mk.pushforward_SxC(d) if g == 3 else ""
            print(f"{g:>3} {d:>4} {f'{r},{deg}':>12} {f'{rz},{degz}':>12} {sxc:>10}")
    print("phi degree of (-1,0,3):", mk.phi_degree(mk.MukaiVector(-1, 0, 3)))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--genera", type=int, nargs="+", default=list(Config.genera))
    ap.add_argument("--degrees", type=int, nargs="+")
    a = ap.parse_args()
    cfg = Config(tuple(a.genera))
    if a.degrees:
        cfg.degrees = tuple(a.degrees)
    main(cfg)
