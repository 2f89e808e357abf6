"""Cubic triple symbols for rational primes q = 8 mod 9 below a bound.

Searches theta for every ordered pair, evaluates the symbol at each
admissible third prime (rational or split), cross-checks with the nonic
splitting oracle and tests how the value moves under permutations.

    python3 scripts/cubic_census.py --primes 17 53 71 89 --third-bound 300
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations

from triplesym import cubic
from triplesym.redei import Inadmissible


@dataclass
class CubicCensusConfig:
    primes: list = field(default_factory=lambda: [17, 53, 71, 89, 107])
    bound: int = cubic.DEFAULT_SEARCH_BOUND
    third_bound: int = 400


def find_thetas(cfg: CubicCensusConfig):
    out = {}
    for a, b in permutations(cfg.primes, 2):
        p1, p2 = cubic.as_primary(a), cubic.as_primary(b)
        try:
            out[(p1.pi, p2.pi)] = cubic.theta_search(p1, p2, cfg.bound)
        except (cubic.ThetaNotFound, Inadmissible):
            pass
    return out


def evaluate(cfg: CubicCensusConfig, thetas):
    thirds = ([cubic.as_primary(q) for q in cubic.rational_primes_8_mod_9(cfg.third_bound)]
              + cubic.split_primes_1_mod_9(cfg.third_bound))
    values, disagreements = Counter(), []
    for (p1, p2), th in thetas.items():
        for p3 in thirds:
            try:
                t = cubic.admissible3(p1, p2, p3)
            except Inadmissible:
                continue
            v = cubic.cubic_triple_symbol(t, th)
            values[v.rendered()] += 1
            if (cubic.oracle_split3(t, th) == "trivial") != (v.exponent == 0):
                disagreements.append(t)
    return values, disagreements


def permutation_table(cfg: CubicCensusConfig, thetas):
    lines = []
    for tri in permutations([cubic.as_primary(q).pi for q in cfg.primes], 3):
        if list(tri) != sorted(tri, key=lambda e: -e.a):
            continue
        try:
            cubic.admissible3(*tri)
        except Inadmissible:
            continue
        vals = cubic.all_permutation_values(tri, thetas)
        cells = " ".join(f"{''.join(map(str, p))}:{v}" for p, v in sorted(vals.items()))
        lines.append(f"  {tuple(str(p) for p in tri)}  {cells}")
    return lines


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+")
    ap.add_argument("--bound", type=int, default=CubicCensusConfig.bound)
    ap.add_argument("--third-bound", type=int, default=CubicCensusConfig.third_bound)
    args = ap.parse_args(argv)
    cfg = CubicCensusConfig(bound=args.bound, third_bound=args.third_bound)
    if args.primes:
        cfg.primes = args.primes
    t0 = time.perf_counter()
    thetas = find_thetas(cfg)
    n_pairs = len(cfg.primes) * (len(cfg.primes) - 1)
    print(f"theta found for {len(thetas)}/{n_pairs} pairs in {time.perf_counter() - t0:.1f}s")
    values, bad = evaluate(cfg, thetas)
    print("symbol values:", dict(sorted(values.items())))
    print(f"oracle disagreements: {len(bad)}")
    print("Artin exponents by permutation (perm:exponent):")
    for line in permutation_table(cfg, thetas):
        print(line)


if __name__ == "__main__":
    main()
