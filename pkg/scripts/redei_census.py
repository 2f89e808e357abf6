"""Tabulate Redei symbols below a bound and summarize their distribution.

Counts +1 and -1 values, records how often the normalized beta meets a
prime above p3, and writes the per-triple table as CSV.

    python3 scripts/redei_census.py --bound 500 --out census.csv
"""

from __future__ import annotations

import argparse
import csv
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from triplesym import redei


@dataclass
class CensusConfig:
    bound: int = 300
    verify: bool = True
    out: Path | None = None


def census(cfg: CensusConfig):
    rows = []
    for t, value in redei.scan2(cfg.bound):
        ok = None
        if cfg.verify:
            ok = redei.oracle_symbol2(t) == value
        rows.append((*t.as_ints(), value.exponent, value.rendered(), ok, len(value.fallbacks)))
    return rows


def summarize(rows):
    values = Counter(r[4] for r in rows)
    repaired = sum(1 for r in rows if r[6])
    disagreements = sum(1 for r in rows if r[5] is False)
    return values, repaired, disagreements


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=CensusConfig.bound)
    ap.add_argument("--no-verify", action="store_true")
    ap.add_argument("--out", type=Path)
    args = ap.parse_args(argv)
    cfg = CensusConfig(args.bound, not args.no_verify, args.out)
    t0 = time.perf_counter()
    rows = census(cfg)
    values, repaired, bad = summarize(rows)
    print(f"{len(rows)} triples below {cfg.bound} in {time.perf_counter() - t0:.1f}s")
    for sym in ("+1", "-1"):
        share = values[sym] / len(rows) if rows else 0.0
        print(f"  {sym}: {values[sym]} ({share:.1%})")
    print(f"  evaluations needing a fallback: {repaired}")
    if cfg.verify:
        print(f"  oracle disagreements: {bad}")
    if cfg.out:
        with cfg.out.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["p1", "p2", "p3", "exponent", "symbol", "verified", "fallbacks"])
            w.writerows(rows)
        print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
