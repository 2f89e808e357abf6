"""Exact arithmetic in Z[zeta_3] and the cubic residue character.

An EisensteinInteger (a, b) stands for a + b*zeta with zeta^2 = -1 - zeta.
sqrt(-3) is fixed as 1 + 2*zeta, so the primary modulus 3*sqrt(-3) is
3 + 6*zeta; that ideal is lambda^3 for lambda = 1 - zeta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import fields
from .modarith import is_prime, sqrt_mod


class RamifiedPrime(ValueError):
    pass


class NotOneModNine(ValueError):
    reason = "NotOneModNine"


class NotCoprime(ValueError):
    pass


@dataclass(frozen=True, order=True)
class EisensteinInteger:
    a: int
    b: int = 0

    @classmethod
    def of(cls, x) -> EisensteinInteger:
        if isinstance(x, EisensteinInteger):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        a, b = x
        return cls(int(a), int(b))

    def __add__(self, other):
        o = EisensteinInteger.of(other)
        return EisensteinInteger(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInteger(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-EisensteinInteger.of(other))

    def __rsub__(self, other):
        return EisensteinInteger.of(other) - self

    def __mul__(self, other):
        o = EisensteinInteger.of(other)
        bd = self.b * o.b
        return EisensteinInteger(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power in Z[zeta]")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> EisensteinInteger:
        # zeta -> zeta^2 = -1 - zeta
        return EisensteinInteger(self.a - self.b, -self.b)

    def norm(self) -> int:
        return eis_norm(self)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def divides(self, other) -> bool:
        return eis_divmod(other, self)[1].is_zero()

    def exact_div(self, other) -> EisensteinInteger:
        q, r = eis_divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def associates(self):
        return [u * self for u in UNITS]

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}ζ"
        return f"{self.a}{self.b:+}ζ"


ZERO = EisensteinInteger(0, 0)
ONE = EisensteinInteger(1, 0)
ZETA = EisensteinInteger(0, 1)
ZETA2 = EisensteinInteger(-1, -1)
UNITS = (ONE, ZETA, ZETA2, -ONE, -ZETA, -ZETA2)
LAMBDA = EisensteinInteger(1, -1)
SQRT_MINUS_3 = EisensteinInteger(1, 2)
PRIMARY_MODULUS = EisensteinInteger(3, 6)


def eis_norm(e) -> int:
    e = EisensteinInteger.of(e)
    return e.a * e.a - e.a * e.b + e.b * e.b


def _round_div(x: int, n: int) -> int:
    """Nearest integer to x/n for n > 0, halves rounded up."""
    return (2 * x + n) // (2 * n)


def eis_divmod(a, b):
    """(q, r) with a = q*b + r and N(r) < N(b)."""
    a, b = EisensteinInteger.of(a), EisensteinInteger.of(b)
    n = eis_norm(b)
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[zeta]")
    num = a * b.conj()
    q = EisensteinInteger(_round_div(num.a, n), _round_div(num.b, n))
    return q, a - q * b


def eis_gcd(a, b) -> EisensteinInteger:
    a, b = EisensteinInteger.of(a), EisensteinInteger.of(b)
    while not b.is_zero():
        a, b = b, eis_divmod(a, b)[1]
    return a


def is_cube_unit(u: EisensteinInteger) -> bool:
    return u in (ONE, -ONE)


def split_rational_prime(q):
    """One prime of Z[zeta] above the rational prime q and how q splits.

    Split primes come back as the a + b*zeta of norm q with a > b > 0 and b
    least; inert ones as (q, 0).
    """
    q = int(q)
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q == 3:
        raise RamifiedPrime("3 ramifies in Z[zeta]")
    if q % 3 == 2:
        return EisensteinInteger(q, 0), "inert"
    s = sqrt_mod(-3, q)
    r = (s - 1) * pow(2, -1, q) % q  # root of r^2 + r + 1
    g = eis_gcd(EisensteinInteger(q, 0), EisensteinInteger(-r, 1))
    variants = set()
    for base in (g, g.conj()):
        for u in UNITS:
            variants.add(u * base)
    best = min((v for v in variants if v.a > v.b > 0), key=lambda v: (v.b, v.a))
    assert eis_norm(best) == q
    return best, "split"


def is_eisenstein_prime(pi) -> bool:
    pi = EisensteinInteger.of(pi)
    n = eis_norm(pi)
    if n < 2:
        return False
    if is_prime(n):
        return True
    # otherwise pi must be an associate of an inert rational prime
    for u in UNITS:
        v = u * pi
        if v.b == 0 and v.a > 0 and v.a * v.a == n and is_prime(v.a) and v.a % 3 == 2:
            return True
    return False


@dataclass(frozen=True)
class PrimaryPrime:
    pi: EisensteinInteger

    def __post_init__(self):
        pi = EisensteinInteger.of(self.pi)
        object.__setattr__(self, "pi", pi)
        if not is_eisenstein_prime(pi):
            raise ValueError(f"{pi} is not prime in Z[zeta]")
        if not is_primary(pi):
            raise ValueError(f"{pi} is not 1 mod 3*sqrt(-3)")

    def norm(self) -> int:
        return eis_norm(self.pi)

    @cached_property
    def residue_field(self) -> ResidueField:
        return ResidueField(self.pi)

    def is_rational(self) -> bool:
        return self.pi.b == 0

    def __str__(self):
        return str(self.pi)


def is_primary(pi) -> bool:
    return PRIMARY_MODULUS.divides(EisensteinInteger.of(pi) - ONE)


def primary_associate(pi) -> PrimaryPrime:
    """The unique associate of pi congruent to 1 mod 3 + 6*zeta."""
    pi = EisensteinInteger.of(pi)
    n = eis_norm(pi)
    if n % 9 != 1:
        raise NotOneModNine(f"N({pi}) = {n} is not 1 mod 9")
    hits = [u * pi for u in UNITS if is_primary(u * pi)]
    assert len(hits) == 1, hits
    return PrimaryPrime(hits[0])


class ResidueField:
    """Z[zeta]/(pi) for a prime pi, with zeta sent to a cube root of unity.

    Split primes give F_q with zeta -> r solving a + b*r = 0; inert primes
    give F_q[w]/(w^2 + w + 1) with zeta -> w.
    """

    def __init__(self, pi):
        pi = EisensteinInteger.of(pi)
        self.pi = pi
        n = eis_norm(pi)
        if is_prime(n):
            q = n
            self.K = fields.PrimeField(q)
            if pi.b % q == 0:
                raise ValueError(f"{pi} has norm {q} but no zeta image")
            self.zeta = (-pi.a) * pow(pi.b, -1, q) % q
        else:
            q = None
            for u in UNITS:
                v = u * pi
                if v.b == 0:
                    q = abs(v.a)
            if q is None or q * q != n:
                raise ValueError(f"{pi} is not a prime of Z[zeta]")
            self.K = fields.QuadField(q)
            self.zeta = self.K.w
        self.q = q
        self.order = self.K.order
        K = self.K
        assert K.is_zero(K.add(K.add(K.mul(self.zeta, self.zeta), self.zeta), K.one))

    def reduce(self, e):
        e = EisensteinInteger.of(e)
        K = self.K
        return K.add(K.elem(e.a), K.mul(K.elem(e.b), self.zeta))

    def cubic_exponent(self, x) -> int:
        """k with x^((|k|-1)/3) = zeta^k in this field."""
        K = self.K
        if K.is_zero(x):
            raise NotCoprime("zero in the residue field")
        t = K.pow(x, (self.order - 1) // 3)
        if t == K.one:
            return 0
        if t == self.zeta:
            return 1
        if t == K.mul(self.zeta, self.zeta):
            return 2
        raise ArithmeticError(f"{t} is not a cube root of unity")


def cubic_residue_symbol(alpha, pi) -> int:
    """Exponent k in Z/3 with alpha^((N pi - 1)/3) = zeta^k mod pi."""
    if not isinstance(pi, PrimaryPrime):
        pi = PrimaryPrime(pi)
    F = pi.residue_field
    x = F.reduce(alpha)
    if F.K.is_zero(x):
        raise NotCoprime(f"{alpha} is divisible by {pi}")
    return F.cubic_exponent(x)
