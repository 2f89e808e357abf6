"""Small experiments with cup products, lifting obstructions and Massey products.

    python3 scripts/cochain_lab.py --n 3
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from triplesym import cochain as cc


@dataclass
class LabConfig:
    n: int = 2
    max_order: int = 27


def cup_table(G, n):
    """Which pairs of characters have a vanishing cup product."""
    chis = cc.characters(G, n)
    prods = [cc.cup(x, y) for x in chis for y in chis]
    sols = cc.are_coboundaries(prods)
    k = len(chis)
    return [[sols[i * k + j] is not None for j in range(k)] for i in range(k)]


def lifting_summary(n):
    G = cc.elementary_abelian(n, 2)
    phis = cc.homomorphisms_to_quotient(G, n)
    lifts = sum(cc.lift_exists(G, phi, n) for phi in phis)
    return len(phis), lifts


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=LabConfig.n)
    args = ap.parse_args(argv)
    cfg = LabConfig(n=args.n)
    t0 = time.perf_counter()

    print(f"cup products of characters with Z/{cfg.n} coefficients")
    for G in cc.small_groups():
        if G.order > cfg.max_order or G.order ** 2 > cc.MAX_UNKNOWNS:
            continue
        table = cup_table(G, cfg.n)
        if len(table) <= 1:
            continue
        zero = sum(map(sum, table))
        print(f"  {G.name:>12}: {zero}/{len(table) ** 2} cup products vanish")

    total, lifts = lifting_summary(cfg.n)
    print(f"(Z/{cfg.n})^2 -> quotient of the Heisenberg group: {lifts}/{total} homomorphisms lift")

    h = cc.heisenberg_data(cfg.n)
    try:
        r = cc.massey(h.group, h.chi_a, h.chi_c, h.chi_a)
        print(f"<a, c, a> on {h.group.name}: defined, vanishes modulo indeterminacy: {r.vanishes}"
              f" ({len(r.indeterminacy)} indeterminacy generators)")
    except cc.CupNotTrivial as exc:
        print(f"<a, c, a> on {h.group.name}: undefined ({exc})")
    print(f"done in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
