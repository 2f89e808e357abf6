"""Modular arithmetic and residue primitives over arbitrary-precision ints."""

from __future__ import annotations

from dataclasses import dataclass

from . import fields

# Deterministic Miller-Rabin with the first 13 prime bases is exact below
# this bound (Sorenson-Webster).
MR_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class NotASquare(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= MR_BOUND:
        raise ValueError(f"{n} exceeds the deterministic primality bound")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(bound: int) -> list[int]:
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound, i)))
    return [i for i in range(bound) if sieve[i]]


@dataclass(frozen=True, order=True)
class OddPrime:
    value: int

    def __post_init__(self):
        v = self.value
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"OddPrime needs an int, got {type(v).__name__}")
        if v == 2 or not is_prime(v):
            raise ValueError(f"{v} is not an odd prime")

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def _p(p) -> int:
    return int(p)


def mod_pow(base: int, exp: int, m: int) -> int:
    if m < 1:
        raise ValueError("modulus must be positive")
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base, exp, m)


def legendre(a: int, p) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    p = _p(p)
    t = pow(a % p, (p - 1) // 2, p)
    if t == 0:
        return 0
    return 1 if t == 1 else -1


def sqrt_mod(a: int, p) -> int:
    """Smaller square root of a modulo the odd prime p (Tonelli-Shanks)."""
    p = _p(p)
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        raise NotASquare(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while legendre(z, p) != -1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class PolyModP:
    """Dense polynomial over F_p, coefficients low degree first."""

    coefficients: tuple
    modulus: OddPrime

    def __init__(self, coefficients, modulus):
        if not isinstance(modulus, OddPrime):
            modulus = OddPrime(int(modulus))
        p = modulus.value
        coeffs = [int(c) % p for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "modulus", modulus)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: int) -> int:
        p = self.modulus.value
        acc = 0
        for c in reversed(self.coefficients):
            acc = (acc * x + c) % p
        return acc

    def is_zero(self) -> bool:
        return not self.coefficients


def count_roots_mod(f: PolyModP) -> int:
    """Number of distinct roots of f in F_p, from deg gcd(X^p - X, f)."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    K = fields.PrimeField(f.modulus.value)
    return fields.count_distinct_roots(K, list(f.coefficients))
