"""Degrees and Euler characteristics of the Fano and Calabi-Yau complete
intersections in N for a range of genera, by both evaluation pipelines."""
import argparse
import time
from dataclasses import dataclass

from modulik3 import newstead as ns


@dataclass
class Config:
    g_min: int = 3
    g_max: int = 8


def main(cfg: Config) -> None:
    print(f"{'g':>3} {'dim Y':>6} {'dim Z':>6} {'deg Y':>22} {'deg Z':>22} {'chi(O_Z)':>9} {'sec':>6}")
    for g in range(cfg.g_min, cfg.g_max + 1):
        t = time.perf_counter()
        inv = ns.cy_invariants(g)
        dt = time.perf_counter() - t
        print(f"{g:>3} {inv.dim_Y:>6} {inv.dim_Z:>6} {str(inv.deg_Y):>22} {str(inv.deg_Z):>22} "
              f"{str(inv.chi_OZ):>9} {dt:6.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g-min", type=int, default=Config.g_min)
    ap.add_argument("--g-max", type=int, default=Config.g_max)
    a = ap.parse_args()
    main(Config(a.g_min, a.g_max))
