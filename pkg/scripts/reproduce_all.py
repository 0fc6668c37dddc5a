"""Run every named check and write one JSON and one markdown report per check.

    python3 scripts/reproduce_all.py --out reports
"""

import argparse
import time
from pathlib import Path

from crossmod import suite
from crossmod.config import RunConfig


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="reports")
    ap.add_argument("--gv-window", type=int, default=6)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cfg = RunConfig(gv_window=args.gv_window)
    total = {"pass": 0, "fail": 0, "discrepancy": 0}
    for name in sorted(suite.CHECKS):
        t0 = time.perf_counter()
        rep = suite.run(name, cfg)
        (out / f"{name}.json").write_text(rep.to_json())
        (out / f"{name}.md").write_text(rep.to_markdown())
        s = rep.to_dict()["summary"]
        for k in total:
            total[k] += s[k]
        print(f"{name:22s} pass={s['pass']:3d} fail={s['fail']:2d} discrepancy={s['discrepancy']:2d}"
              f"  {time.perf_counter() - t0:.2f}s")
    print("acceptance criteria:")
    for n, name in sorted(suite.CRITERIA.items()):
        rep = suite.run(name, cfg)
        print(f"  {n:2d} {name:14s} {'FAIL' if rep.failed else 'PASS'}")
    print(f"total: {total}")


if __name__ == "__main__":
    main()
