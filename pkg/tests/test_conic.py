from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triplesym import conic
from triplesym.conic import RedeiBeta, verify_beta
from triplesym.modarith import OddPrime, legendre, primes_below

P1MOD4 = [p for p in primes_below(300) if p % 4 == 1]
PAIRS = [(a, b) for a in P1MOD4 for b in P1MOD4 if a != b and legendre(a, b) == 1]


def _b(x, y, z, p1, p2):
    return RedeiBeta(x, y, z, OddPrime(p1), OddPrime(p2))


@pytest.mark.parametrize("p1,p2,expected", [(5, 29, (7, 2, 1)), (13, 17, (9, 1, 2))])
def test_solve_legendre_examples(p1, p2, expected):
    assert conic.solve_legendre(OddPrime(p1), OddPrime(p2)) == expected


def test_solve_legendre_obstruction():
    with pytest.raises(conic.NoSolution):
        conic.solve_legendre(OddPrime(5), OddPrime(13))


@pytest.mark.parametrize("sol,p1,p2,expected", [
    ((7, 2, 1), 5, 29, (7, 2, 1)),
    ((9, 1, 2), 13, 17, (-15, 4, 1)),
    ((-7, -2, -1), 5, 29, (7, 2, 1)),
])
def test_normalize_examples(sol, p1, p2, expected):
    assert conic.normalize_redei(sol, OddPrime(p1), OddPrime(p2)).triple == expected


@pytest.mark.parametrize("triple,p1,p2,ok", [
    ((7, 2, 1), 5, 29, True),
    ((9, 1, 2), 13, 17, False),
    ((0, 0, 0), 5, 29, False),
    ((-15, 4, 1), 13, 17, True),
])
def test_verify_beta_examples(triple, p1, p2, ok):
    assert verify_beta(_b(*triple, p1, p2)) is ok


@pytest.mark.parametrize("p1,p2", PAIRS)
def test_beta_round_trip(p1, p2):
    b = conic.compute_beta(OddPrime(p1), OddPrime(p2))
    assert verify_beta(b)
    # (x + y sqrt p1)(x - y sqrt p1) = p2 z^2 exactly
    assert b.x * b.x - p1 * b.y * b.y == p2 * b.z * b.z


@given(st.sampled_from(PAIRS))
@settings(max_examples=40)
def test_descent_solves_the_conic(pair):
    p1, p2 = pair
    x, y, z = conic.legendre_descent(p1, p2)
    assert x * x - p1 * y * y - p2 * z * z == 0
    assert gcd(gcd(x, y), z) == 1
    assert (x, y, z) != (0, 0, 0)


def test_descent_on_large_primes():
    # brute force would need x up to sqrt(p1 p2)
    p1, p2 = 1000033, 1000037
    assert legendre(p1, p2) == 1
    x, y, z = conic.legendre_descent(p1, p2)
    assert x * x - p1 * y * y - p2 * z * z == 0


def test_brute_force_is_least_x():
    x, y, z = conic.brute_force_legendre(13, 17)
    for xx in range(1, x):
        for yy in range(0, xx):
            rest = xx * xx - 13 * yy * yy
            if rest > 0 and rest % 17 == 0:
                zz = rest // 17
                assert int(zz**0.5) ** 2 != zz or gcd(gcd(xx, yy), int(zz**0.5)) != 1


@pytest.mark.parametrize("p", [5, 13, 29, 37, 41, 61, 109, 181, 229, 277])
def test_fundamental_unit_has_norm_minus_one(p):
    a, b = conic.fundamental_unit(p)
    assert a * a - p * b * b == -4
    assert (a - b) % 2 == 0


def test_fundamental_unit_half_integral():
    # (1 + sqrt 5)/2 and (3 + sqrt 13)/2
    assert conic.fundamental_unit(5) == (1, 1)
    assert conic.fundamental_unit(13) == (3, 1)


@pytest.mark.parametrize("p1,p2", [(37, 73), (41, 5), (13, 17)])
def test_orbit_needs_square_multipliers(p1, p2):
    sol = conic.solve_legendre(OddPrime(p1), OddPrime(p2))
    reps = list(conic.normalized_representatives(sol, OddPrime(p1), OddPrime(p2)))
    assert reps
    assert all(verify_beta(b) for _, b in reps)


def test_alternative_beta_differs():
    b = conic.compute_beta(OddPrime(5), OddPrime(29))
    alt = conic.alternative_beta(b)
    assert verify_beta(alt)
    assert (alt.x, abs(alt.y)) != (b.x, abs(b.y)) or alt.y == -b.y
