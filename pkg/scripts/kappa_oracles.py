"""Compare the closed intersection formula with the residue evaluation for
every monomial with gamma exponent at most one, and time both."""
import argparse
import time
from dataclasses import dataclass

from modulik3 import newstead as ns


@dataclass
class Config:
    g_min: int = 2
    g_max: int = 8


def main(cfg: Config) -> None:
    for g in range(cfg.g_min, cfg.g_max + 1):
        top = ns.top_degree(g)
        n_cases = bad = 0
        t_closed = t_res = 0.0
        for p in (0, 1):
            for n in range(-p, top // 2 + 1):
                m = top - 2 * n - 3 * p
                if m < 0:
                    continue
                t = time.perf_counter()
                a = ns.kappa_monomial(g, m, n, p)
                t_closed += time.perf_counter() - t
                t = time.perf_counter()
                b = ns.kappa_monomial_residue(g, m, n, p)
                t_res += time.perf_counter() - t
                n_cases += 1
                bad += a != b
        print(f"g={g}: {n_cases} monomials, {bad} disagreements, closed {t_closed:.3f}s, residue {t_res:.3f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g-min", type=int, default=Config.g_min)
    ap.add_argument("--g-max", type=int, default=Config.g_max)
    a = ap.parse_args()
    main(Config(a.g_min, a.g_max))
