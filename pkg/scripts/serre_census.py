"""Run every bundle expression that occurs in the fixture tables through the
Serre duality mirror test, once with the derived canonical twist and once
with the alternative twist, and count agreements."""
import argparse
from collections import Counter
from dataclasses import dataclass

from modulik3 import bundlecoh as bc
from modulik3.tables import registry_expressions


@dataclass
class Config:
    alternative: tuple = (("GR82", 8), ("OG82", 6), ("OG72", 5))


def main(cfg: Config) -> None:
    alt = dict(cfg.alternative)
    ok, ok_alt, total = Counter(), Counter(), Counter()
    for space, e in registry_expressions():
        sp = bc.get_space(space)
        prof = bc.cohomology(space, e).mirror(sp.dim)
        total[space] += 1
        ok[space] += bc.cohomology(space, bc.serre_dual_expr(space, e)) == prof
        other = bc.Tensor(bc.Dual(bc.as_expr(e)), bc.Twist(-alt[space]))
        ok_alt[space] += bc.cohomology(space, other) == prof
    for space in sorted(total):
        sp = bc.get_space(space)
        print(f"{space}: {total[space]} expressions; O(-{sp.canonical_index}) mirrors {ok[space]}, "
              f"O(-{alt[space]}) mirrors {ok_alt[space]}")


if __name__ == "__main__":
    argparse.ArgumentParser(description=__doc__).parse_args()
    main(Config())
