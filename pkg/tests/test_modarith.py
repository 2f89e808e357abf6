import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import isprime

from triplesym import fields
from triplesym.modarith import (
    MR_BOUND,
    NotASquare,
    OddPrime,
    PolyModP,
    count_roots_mod,
    is_prime,
    legendre,
    mod_pow,
    primes_below,
    sqrt_mod,
)

SMALL_PRIMES = [p for p in primes_below(2000) if p > 2]
odd_primes = st.sampled_from(SMALL_PRIMES)


@pytest.mark.parametrize("args,expected", [((2, 10, 1000), 24), ((9, 0, 7), 1), ((7, 1, 5), 2)])
def test_mod_pow_examples(args, expected):
    assert mod_pow(*args) == expected


def test_mod_pow_rejects_bad_input():
    with pytest.raises(ValueError):
        mod_pow(2, -1, 5)
    with pytest.raises(ValueError):
        mod_pow(2, 3, 0)


@given(st.integers(min_value=-10, max_value=10**7))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == isprime(n)


@given(st.integers(min_value=10**17, max_value=10**20))
@settings(max_examples=50)
def test_is_prime_large(n):
    assert is_prime(n) == isprime(n)


def test_is_prime_refuses_above_bound():
    with pytest.raises(ValueError):
        is_prime(MR_BOUND)


def test_odd_prime_validation():
    assert int(OddPrime(17)) == 17
    for bad in (2, 9, 1, -5):
        with pytest.raises(ValueError):
            OddPrime(bad)
    with pytest.raises(TypeError):
        OddPrime(True)


@pytest.mark.parametrize("a,p,expected", [(1, 17, 1), (13, 17, 1), (3, 7, -1), (0, 7, 0), (14, 7, 0)])
def test_legendre_examples(a, p, expected):
    assert legendre(a, OddPrime(p)) == expected


@given(st.integers(), odd_primes)
def test_legendre_against_square_table(a, p):
    squares = {x * x % p for x in range(1, p)}
    want = 0 if a % p == 0 else (1 if a % p in squares else -1)
    assert legendre(a, p) == want


@given(st.integers(), st.integers(), odd_primes)
def test_legendre_multiplicative(a, b, p):
    if a % p and b % p:
        assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@pytest.mark.parametrize("a,p,expected", [(13, 17, 8), (0, 17, 0), (4, 17, 2), (5, 109, 21)])
def test_sqrt_mod_examples(a, p, expected):
    assert sqrt_mod(a, p) == expected


@given(st.integers(), odd_primes)
def test_sqrt_mod_squares_back(a, p):
    if legendre(a, p) == -1:
        with pytest.raises(NotASquare):
            sqrt_mod(a, p)
        return
    r = sqrt_mod(a, p)
    assert r * r % p == a % p
    assert r <= p - r


@pytest.mark.parametrize("coeffs,p,expected", [
    ([-1, 0, 1], 7, 2),
    ([-3, 0, 1], 7, 0),
    ([29, 0, -14, 0, 1], 109, 4),
])
def test_count_roots_examples(coeffs, p, expected):
    assert count_roots_mod(PolyModP(coeffs, p)) == expected


@given(st.lists(st.integers(-50, 50), min_size=2, max_size=8),
       st.sampled_from([p for p in SMALL_PRIMES if p < 400]))
@settings(max_examples=150)
def test_count_roots_against_evaluation(coeffs, p):
    f = PolyModP(coeffs, p)
    if f.is_zero():
        return
    assert count_roots_mod(f) == sum(1 for x in range(p) if f(x) == 0)


def test_polymodp_trims_and_reduces():
    f = PolyModP([8, 0, 7, 0], 7)
    assert f.coefficients == (1,)
    assert f.degree == 0


@given(st.lists(st.integers(0, 40), min_size=2, max_size=6), st.sampled_from([5, 11, 17, 29]))
@settings(max_examples=60)
def test_find_roots_in_quadratic_extension(coeffs, p):
    K = fields.QuadField(p)
    f = fields.poly_trim(K, [K.elem(c) for c in coeffs])
    if len(f) < 2:
        return
    roots = fields.find_roots(K, f)
    brute = sorted(x for x in K.elements() if K.is_zero(fields.poly_eval(K, f, x)))
    assert roots == brute
