from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triplesym.eisenstein import (
    PRIMARY_MODULUS,
    UNITS,
    EisensteinInteger,
    NotCoprime,
    NotOneModNine,
    PrimaryPrime,
    RamifiedPrime,
    cubic_residue_symbol,
    eis_divmod,
    eis_norm,
    primary_associate,
    split_rational_prime,
)
from triplesym.modarith import primes_below

E = EisensteinInteger
coords = st.integers(-10**6, 10**6)
eis = st.builds(E, coords, coords)


@pytest.mark.parametrize("e,n", [((5, 2), 19), ((1, 0), 1), ((0, 1), 1), ((0, 0), 0)])
def test_norm_examples(e, n):
    assert eis_norm(e) == n


@given(eis, eis)
def test_norm_multiplicative(a, b):
    assert eis_norm(a * b) == eis_norm(a) * eis_norm(b)


def test_zeta_relation():
    z = E(0, 1)
    assert z * z + z + 1 == E(0, 0)
    assert z**3 == E(1, 0)


def test_divmod_examples():
    q, r = eis_divmod(E(19), E(5, 2))
    assert r.is_zero() and q * E(5, 2) == E(19)
    assert eis_divmod(E(1), E(1)) == (E(1), E(0))
    q, r = eis_divmod(E(5, 2), E(3))
    assert eis_norm(r) < 9


def _small():
    for a, b in product(range(-16, 17), repeat=2):
        if eis_norm((a, b)) <= 200:
            yield E(a, b)


def test_euclidean_property_exhaustive():
    small = list(_small())
    for a in small:
        for b in small:
            if b.is_zero():
                continue
            q, r = eis_divmod(a, b)
            assert a == q * b + r
            assert eis_norm(r) < eis_norm(b)


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        eis_divmod(E(1), E(0))


@pytest.mark.parametrize("q,expected,kind", [(19, E(5, 2), "split"), (17, E(17), "inert"),
                                             (7, E(3, 1), "split")])
def test_split_rational_prime(q, expected, kind):
    assert split_rational_prime(q) == (expected, kind)


def test_split_three_is_ramified():
    with pytest.raises(RamifiedPrime):
        split_rational_prime(3)


@pytest.mark.parametrize("q", [p for p in primes_below(2000) if p % 3 == 1])
def test_split_prime_has_norm_q(q):
    pi, kind = split_rational_prime(q)
    assert kind == "split" and eis_norm(pi) == q and pi.a > pi.b > 0


def test_primary_examples():
    assert primary_associate(E(5, 2)).pi == E(-2, 3)
    assert primary_associate(E(17)).pi == E(-17)
    assert (E(-17) - 1).exact_div(PRIMARY_MODULUS) == E(2, 4)
    with pytest.raises(NotOneModNine):
        primary_associate(E(3, 1))


def _primes_one_mod_nine(bound):
    for q in primes_below(bound):
        if q % 9 == 1:
            pi, _ = split_rational_prime(q)
            yield pi
            yield pi.conj()
        elif q % 9 == 8:
            yield E(q)


@pytest.mark.parametrize("pi", list(_primes_one_mod_nine(400)))
def test_primary_unique_and_idempotent(pi):
    hits = [u * pi for u in UNITS if PRIMARY_MODULUS.divides(u * pi - 1)]
    assert len(hits) == 1
    p = primary_associate(pi)
    assert p.pi == hits[0]
    assert primary_associate(p.pi).pi == p.pi


def test_primary_prime_rejects_non_primary():
    with pytest.raises(ValueError):
        PrimaryPrime(E(5, 2))
    with pytest.raises(ValueError):
        PrimaryPrime(E(21))


def test_cubic_symbol_examples():
    p = primary_associate(E(5, 2))
    assert p.residue_field.zeta == 7
    assert pow(2, 6, 19) == 7
    assert cubic_residue_symbol(2, p) == 1
    assert cubic_residue_symbol(1, p) == 0
    assert cubic_residue_symbol(E(2, 1) ** 3, p) == 0
    with pytest.raises(NotCoprime):
        cubic_residue_symbol(E(19), p)


@pytest.mark.parametrize("pi", [primary_associate(E(5, 2)), primary_associate(E(17)),
                                primary_associate(E(7, 3).conj())])
@given(a=eis, b=eis)
def test_cubic_symbol_multiplicative(pi, a, b):
    F = pi.residue_field
    if F.K.is_zero(F.reduce(a)) or F.K.is_zero(F.reduce(b)):
        return
    s = cubic_residue_symbol(a * b, pi)
    assert s == (cubic_residue_symbol(a, pi) + cubic_residue_symbol(b, pi)) % 3
    # only the residue class matters
    assert cubic_residue_symbol(a + pi.pi * b, pi) == cubic_residue_symbol(a, pi)


def test_cubic_symbol_counts_cubes():
    # exactly a third of the nonzero residues are cubes
    p = primary_associate(E(17))
    F = p.residue_field
    zeros = sum(1 for x in F.K.elements()
                if not F.K.is_zero(x) and F.cubic_exponent(x) == 0)
    assert zeros == (17 * 17 - 1) // 3
