"""Acceptance criteria, one PASS/FAIL line each, with wall-clock timings."""

import time
from itertools import permutations

import pytest

from triplesym import cochain as cc
from triplesym import cubic, redei
from triplesym.conic import alternative_beta
from triplesym.eisenstein import UNITS, PRIMARY_MODULUS, EisensteinInteger, primary_associate
from triplesym.modarith import PolyModP, count_roots_mod, legendre, sqrt_mod
from triplesym.redei import Inadmissible

E = EisensteinInteger
BOUND = 300
FIXTURE_PRIMES = (17, 53, 71, 89, 107)


@pytest.fixture
def report(capsys):
    def emit(name, ok, detail="", elapsed=None):
        timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {name}{timing} {detail}".rstrip())
        assert ok, f"{name}: {detail}"
    return emit


@pytest.fixture(scope="module")
def triples():
    return [redei.admissible2(*t) for t in redei.admissible_triples(BOUND)]


def test_reciprocity(report, triples):
    start = time.perf_counter()
    bad = []
    ordered = 0
    for t in triples:
        ps = t.as_ints()
        vals = {redei.redei_symbol(redei.admissible2(*p)) for p in permutations(ps)}
        ordered += 6
        if len(vals) != 1:
            bad.append(ps)
    elapsed = time.perf_counter() - start
    report("reciprocity", not bad and elapsed < 60 and ordered > 300,
           f"{ordered} ordered triples, {len(bad)} disagreements", elapsed)


def test_oracle_equivalence(report, triples):
    start = time.perf_counter()
    bad = [t.as_ints() for t in triples if redei.redei_symbol(t) != redei.oracle_symbol2(t)]
    elapsed = time.perf_counter() - start
    report("oracle equivalence", not bad and elapsed < 120,
           f"{len(triples)} triples, mismatches {bad[:5]}", elapsed)


def test_derived_fixture(report):
    t = redei.admissible2(5, 29, 109)
    value = redei.redei_symbol(t)
    s = sqrt_mod(5, 109)
    by_residue = legendre(7 + 2 * s, 109)
    by_roots = count_roots_mod(PolyModP([29, 0, -14, 0, 1], 109))
    ok = (value.exponent == 0 and value.rendered() == "+1" and s == 21
          and by_residue == 1 and by_roots == 4)
    report("derived fixture [5, 29, 109]", ok,
           f"exponent {value.exponent}, legendre {by_residue}, roots {by_roots}")


def test_well_definedness(report, triples):
    start = time.perf_counter()
    bad = []
    for t in triples:
        beta = redei.beta_for(t.p1, t.p2)
        v = redei.redei_symbol(t, beta)
        p3 = int(t.p3)
        other = p3 - sqrt_mod(int(t.p1), p3)
        if (redei.redei_symbol(t, beta, other) != v
                or redei.redei_symbol(t, alternative_beta(beta)) != v):
            bad.append(t.as_ints())
    elapsed = time.perf_counter() - start
    report("well-definedness", not bad, f"{len(triples)} triples, {len(bad)} failures", elapsed)


def _sections(n):
    pairs = [(a, c) for a in range(n) for c in range(n)]
    return [None, {ac: ac[0] * ac[1] % n for ac in pairs}, {(1, 0): 1, (0, 1): n - 1}]


def test_cup_obstruction_sweep(report):
    start = time.perf_counter()
    rows = cc.cup_obstruction_sweep((2, 3), _sections)
    elapsed = time.perf_counter() - start
    phis = {(n, tuple(phi)) for n, phi, _, _ in rows}
    ok = all(h for *_, h in rows) and len(phis) == 2**4 + 3**4 and elapsed < 30
    report("obstruction equals cup product", ok, f"{len(phis)} homomorphisms, {len(rows)} checks", elapsed)


def test_lifting_sweep(report):
    start = time.perf_counter()
    rows = cc.lifting_sweep((2, 3))
    elapsed = time.perf_counter() - start
    ok = bool(rows) and all(lifts == vanishes for _, _, lifts, vanishes in rows)
    report("lift iff obstruction vanishes", ok, f"{len(rows)} homomorphisms", elapsed)


def test_alternating_identity(report):
    start = time.perf_counter()
    groups = [G for G in cc.small_groups() if G.order <= 27]
    bad = [(G.name, n) for G in groups for n in (2, 3) if not cc.alternating_identity_holds(G, n)]
    elapsed = time.perf_counter() - start
    report("alternating identity", not bad, f"{len(groups)} groups, failures {bad}", elapsed)


def test_heisenberg_structure(report):
    D2, Dih = cc.heisenberg_group(2), cc.dihedral_group(4)
    f = cc.find_isomorphism(D2, Dih)
    iso = f is not None and cc.is_homomorphism(D2, Dih, f) and len(set(f)) == 8
    orders = all(cc.heisenberg_group(n).order == n**3 for n in range(2, 6))
    report("Heisenberg structure", iso and orders, f"isomorphism {f}")


def test_eisenstein_fixtures(report):
    pi = E(5, 2)
    # every associate, checked against the primary modulus directly
    primary = [u * pi for u in UNITS if PRIMARY_MODULUS.divides(u * pi - 1)]
    p = primary_associate(pi)
    # Euler criterion in Z[zeta]/(pi) = F_19 with zeta -> 7
    euler = pow(2, (19 - 1) // 3, 19)
    zeta_image = 7
    assert (5 + 2 * zeta_image) % 19 == 0
    k = [j for j in range(3) if pow(zeta_image, j, 19) == euler]
    symbol = cubic.cubic_residue_symbol(2, p)
    ok = primary == [E(-2, 3)] and p.pi == E(-2, 3) and k == [1] and symbol == 1
    report("Eisenstein fixtures", ok, f"primary {p.pi}, symbol exponent {symbol}")


def test_cubic_suite(report):
    start = time.perf_counter()
    found = {}
    for a in FIXTURE_PRIMES:
        for b in FIXTURE_PRIMES:
            if a == b:
                continue
            p1, p2 = cubic.as_primary(a), cubic.as_primary(b)
            try:
                found[(p1.pi, p2.pi)] = cubic.theta_search(p1, p2, cubic.DEFAULT_SEARCH_BOUND)
            except (cubic.ThetaNotFound, Inadmissible):
                pass
    generation = time.perf_counter() - start
    if not found:
        report("cubic suite", False, "vacuous: no theta at the default search bound", generation)

    thirds = ([cubic.as_primary(q) for q in cubic.rational_primes_8_mod_9(400)]
              + cubic.split_primes_1_mod_9(400))
    problems = []
    checked = 0
    for (p1, p2), th in found.items():
        twisted = th.times_cube((E(2), E(-1), E(1)), p1)
        for p3 in thirds:
            try:
                t = cubic.admissible3(p1, p2, p3)
            except Inadmissible:
                continue
            checked += 1
            exps = {e for e in cubic.conjugate_exponents(t, th) if e is not None}
            value = cubic.cubic_triple_symbol(t, th)
            if len(exps) != 1:
                problems.append(("prime choice", t))
            if cubic.cubic_triple_symbol(t, twisted) != value:
                problems.append(("cube twist", t))
            if (cubic.oracle_split3(t, th) == "trivial") != (value.exponent == 0):
                problems.append(("oracle", t))
    antisym = 0
    primes = [E(-q) for q in FIXTURE_PRIMES]
    for tri in permutations(primes, 3):
        try:
            cubic.admissible3(*tri)
        except Inadmissible:
            continue
        values = cubic.all_permutation_values(tri, found)
        if (0, 1, 2) not in values:
            continue
        for perm, v in values.items():
            antisym += 1
            if v != values[(0, 1, 2)] * cubic.permutation_sign(perm) % 3:
                problems.append(("antisymmetry", tri, perm))
    elapsed = time.perf_counter() - start
    ok = (not problems and checked > 0 and antisym > 0 and generation < 600)
    report("cubic suite", ok,
           f"{len(found)}/20 pairs, {checked} triples, {antisym} permutation checks, "
           f"generation {generation:.1f}s, problems {problems[:3]}", elapsed)
