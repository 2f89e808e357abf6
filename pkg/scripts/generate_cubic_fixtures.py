"""Search theta for every ordered pair of small rational primes q = 8 mod 9.

Writes the hits to a JSON fixture file (decimal-string integers) and
reports the pairs where the bounded search came up empty.

    python3 scripts/generate_cubic_fixtures.py --bound 50
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from triplesym import cubic

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class FixtureConfig:
    primes: list = field(default_factory=lambda: [17, 53, 71, 89, 107])
    bound: int = cubic.DEFAULT_SEARCH_BOUND
    out: Path = ROOT / "tests" / "fixtures" / "cubic_theta.json"


def generate(cfg: FixtureConfig):
    found, missing = [], []
    for q1 in cfg.primes:
        for q2 in cfg.primes:
            if q1 == q2:
                continue
            p1, p2 = cubic.as_primary(q1), cubic.as_primary(q2)
            try:
                theta = cubic.theta_search(p1, p2, cfg.bound)
            except cubic.ThetaNotFound:
                missing.append((q1, q2))
                continue
            found.append((p1.pi, p2.pi, theta))
    return found, missing


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=FixtureConfig.bound)
    ap.add_argument("--primes", type=int, nargs="+")
    ap.add_argument("--out", type=Path)
    args = ap.parse_args(argv)
    cfg = FixtureConfig(bound=args.bound)
    if args.primes:
        cfg.primes = args.primes
    if args.out:
        cfg.out = args.out
    t0 = time.perf_counter()
    found, missing = generate(cfg)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cubic.save_theta_file(cfg.out, found)
    print(f"{len(found)} theta found, {len(missing)} missing, "
          f"{time.perf_counter() - t0:.1f}s at bound {cfg.bound}")
    for q1, q2 in missing:
        print(f"  none for ({-q1}, {-q2})")
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
