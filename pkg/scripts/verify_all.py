"""Run the full verification and write the JSON report."""
import argparse
import time
from dataclasses import dataclass
from typing import Optional

from modulik3.verify import run


@dataclass
class Config:
    json_path: Optional[str] = None
    workers: int = 1


def main(cfg: Config) -> int:
    t = time.perf_counter()
    report = run(workers=cfg.workers)
    s = report.summary
    for i in report.items:
        if i.status != "match":
            print(f"{i.status}: {i.check_id}: expected {i.expected}, computed {i.computed}")
    print(f"{s['match']} matched, {s['mismatch']} mismatched, {s['flagged']} flagged "
          f"in {time.perf_counter() - t:.1f}s")
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.ok else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", dest="json_path")
    ap.add_argument("--workers", type=int, default=1)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.json_path, a.workers)))
