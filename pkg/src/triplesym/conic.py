"""Integral points on x^2 - p1*y^2 - p2*z^2 = 0 and the normalized beta.

A primitive solution (x, y, z) gives beta = x + y*sqrt(p1) of norm p2*z^2.
The dihedral degree-8 field attached to (p1, p2) is Q(sqrt p1, sqrt p2,
sqrt beta) once beta is normalized so that y is even and x - y = 1 mod 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt

from sympy import factorint

from .modarith import OddPrime, legendre, sqrt_mod

BRUTE_FORCE_LIMIT = 10**6
UNIT_EXPONENT_BOUND = 16
SQUARE_BOUND = 12


class NoSolution(ValueError):
    pass


class NormalizationExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class RedeiBeta:
    x: int
    y: int
    z: int
    p1: OddPrime
    p2: OddPrime

    @property
    def triple(self):
        return (self.x, self.y, self.z)

    def norm(self) -> int:
        return self.x * self.x - int(self.p1) * self.y * self.y


def _gcd3(a, b, c):
    return gcd(gcd(a, b), c)


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _check_admissible_pair(p1: int, p2: int):
    if p1 == p2:
        raise NoSolution("p1 and p2 must be distinct")
    if legendre(p1, p2) != 1 or legendre(p2, p1) != 1:
        raise NoSolution(f"x^2 - {p1}y^2 - {p2}z^2 = 0 is not locally solvable")


def brute_force_legendre(p1, p2, x_limit=None):
    """Primitive solution with the smallest positive x, then smallest y."""
    p1, p2 = int(p1), int(p2)
    if x_limit is None:
        # Holzer: some solution has x^2 <= p1 * p2
        x_limit = isqrt(p1 * p2) + 1
    for x in range(1, x_limit + 1):
        xx = x * x
        y = 0
        while p1 * y * y <= xx:
            rest = xx - p1 * y * y
            if rest % p2 == 0:
                zz = rest // p2
                if _is_square(zz):
                    z = isqrt(zz)
                    if _gcd3(x, y, z) == 1:
                        return (x, y, z)
            y += 1
    raise NoSolution(f"no solution with x <= {x_limit}")


def _squarefree_split(m: int):
    """m = sign * core * s^2 with core squarefree and positive."""
    sign = -1 if m < 0 else 1
    core, s = 1, 1
    for q, e in factorint(abs(m)).items():
        core *= q ** (e % 2)
        s *= q ** (e // 2)
    return sign * core, s


def _sqrt_mod_squarefree(a: int, n: int) -> int:
    """Some t with t^2 = a mod n, n squarefree, via CRT over prime factors."""
    t, mod = 0, 1
    for q in factorint(n):
        r = a % 2 if q == 2 else sqrt_mod(a, q)
        # combine t mod `mod` with r mod q
        k = (r - t) * pow(mod, -1, q) % q
        t += mod * k
        mod *= q
    return t


def _descent(a: int, b: int):
    """Nontrivial (x, y, z) with x^2 = a*y^2 + b*z^2, a and b squarefree."""
    if a == 1:
        return (1, 1, 0)
    if b == 1:
        return (1, 0, 1)
    if a < 0 and b < 0:
        raise NoSolution("definite form")
    if abs(a) > abs(b):
        x, y, z = _descent(b, a)
        return (x, z, y)
    n = abs(b)
    t = _sqrt_mod_squarefree(a % n, n)
    if t > n // 2:
        t -= n
    if (t * t - a) % b:
        raise NoSolution(f"{a} is not a square mod {b}")
    m = (t * t - a) // b
    m0, s = _squarefree_split(m)
    X, Y, Z = _descent(a, m0)
    x, y, z = t * X + a * Y, X + t * Y, m0 * s * Z
    g = _gcd3(x, y, z)
    return (x // g, y // g, z // g)


def legendre_descent(p1, p2):
    """Solve x^2 - p1*y^2 - p2*z^2 = 0 by Lagrange descent."""
    p1, p2 = int(p1), int(p2)
    _check_admissible_pair(p1, p2)
    x, y, z = _descent(p1, p2)
    g = _gcd3(x, y, z)
    x, y, z = abs(x // g), y // g, z // g
    assert x * x - p1 * y * y - p2 * z * z == 0
    return (x, y, z)


def solve_legendre(p1: OddPrime, p2: OddPrime):
    """Primitive nonzero solution of x^2 - p1*y^2 - p2*z^2 = 0.

    Small inputs get the canonical brute-force solution (least x, then
    least y); larger ones fall through to the descent.
    """
    a, b = int(p1), int(p2)
    if a % 4 != 1 or b % 4 != 1:
        raise NoSolution("both primes must be 1 mod 4")
    _check_admissible_pair(a, b)
    if a * b < BRUTE_FORCE_LIMIT:
        return brute_force_legendre(a, b)
    return legendre_descent(a, b)


# -- units of Z[(1 + sqrt p)/2] ------------------------------------------

def _pell_minus_one(p: int):
    """Least x + y sqrt(p) with x^2 - p y^2 = +-1 (continued fraction)."""
    a0 = isqrt(p)
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - p * k * k not in (1, -1):
        m = d * a - m
        d = (p - m * m) // d
        a = (a0 + m) // d
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return h, k


def _icbrt_solve(target: int):
    """Integer a with a^3 + 3a = target, or None."""
    lo, hi = -abs(target) - 1, abs(target) + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**3 + 3 * mid < target:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**3 + 3 * lo == target else None


def fundamental_unit(p: int):
    """(a, b) with eps = (a + b sqrt p)/2 the fundamental unit of O_Q(sqrt p).

    Only p = 1 mod 4 prime is supported; then eps has norm -1.
    """
    x0, y0 = _pell_minus_one(p)
    if x0 * x0 - p * y0 * y0 != -1:
        raise ValueError(f"x^2 - {p}y^2 = -1 unsolvable; {p} not a prime 1 mod 4?")
    # eps_O^3 = eps_Z exactly when trace(eps_O)^3 + 3 trace(eps_O) = 2 x0
    a = _icbrt_solve(2 * x0)
    if a is not None and a > 0:
        b2 = (a * a + 4)
        if b2 % p == 0 and _is_square(b2 // p):
            return (a, isqrt(b2 // p))
    return (2 * x0, 2 * y0)


def _mul_half(u, v, p):
    """(a + b sqrt p)/2 * (c + d sqrt p)/2 with both factors in O."""
    a, b = u
    c, d = v
    return ((a * c + p * b * d) // 2, (a * d + b * c) // 2)


def _unit_power(p: int, k: int):
    """eps^k as (a, b) meaning (a + b sqrt p)/2."""
    eps = fundamental_unit(p)
    if k < 0:
        # eps^-1 = -conj(eps) because N(eps) = -1
        eps = (-eps[0], eps[1])
        k = -k
    result = (2, 0)
    for _ in range(k):
        result = _mul_half(result, eps, p)
    return result


def _unit_exponents(bound: int):
    yield 0
    for k in range(1, bound + 1):
        yield k
        yield -k


_SIGNS = list(product((1, -1), repeat=3))


def verify_beta(b: RedeiBeta) -> bool:
    """All three normalization conditions on beta."""
    x, y, z = b.x, b.y, b.z
    p1, p2 = int(b.p1), int(b.p2)
    if _gcd3(x, y, z) != 1:
        return False
    if x * x - p1 * y * y - p2 * z * z != 0:
        return False
    return y % 2 == 0 and (x - y) % 4 == 1


def _square_multipliers(p: int, bound: int):
    """gamma^2 for small nonzero gamma = (a + b sqrt p)/2 in O.

    gamma = 1 comes first; the rest are ordered by height.
    """
    yield (2, 0)
    cands = []
    for b in range(0, bound + 1):
        for a in range(-bound, bound + 1):
            if (a - b) % 2 or (a, b) == (2, 0) or b == 0 and a <= 0:
                continue
            cands.append((abs(a) + b, b, a))
    for _, b, a in sorted(cands):
        yield _mul_half((a, b), (a, b), p)


def normalized_representatives(sol, p1: OddPrime, p2: OddPrime, bound=UNIT_EXPONENT_BOUND,
                               square_bound=SQUARE_BOUND):
    """Every normalized beta in the orbit of sol, in search order.

    The orbit is beta * gamma^2 * eps^k for small gamma in O (gamma = 1
    first) and |k| <= bound, rescaled to a primitive integral triple, with
    all eight sign patterns.  Rescaling only divides by 2^a * s^2, so the
    orbit stays inside the classes +-beta, +-2*beta modulo squares.
    """
    P1, P2 = int(p1), int(p2)
    x0, y0, z0 = sol
    if x0 * x0 - P1 * y0 * y0 - P2 * z0 * z0 != 0 or _gcd3(x0, y0, z0) != 1:
        raise ValueError(f"{sol} is not a primitive solution")
    units = [(k, _unit_power(P1, k)) for k in _unit_exponents(bound)]
    for ga, gb in _square_multipliers(P1, square_bound):
        # gamma^2 = (ga + gb sqrt p1)/2
        gamma_norm = isqrt((ga * ga - P1 * gb * gb) // 4)
        bx = x0 * ga + P1 * y0 * gb
        by = x0 * gb + y0 * ga
        for k, (ua, ub) in units:
            # beta * gamma^2 * eps^k = (X + Y sqrt p1) / 4
            X = bx * ua + P1 * by * ub
            Y = bx * ub + by * ua
            if X * X - P1 * Y * Y <= 0:
                continue  # norm -1 unit power
            Z = 4 * z0 * gamma_norm
            g = _gcd3(X, Y, Z)
            odd = g
            while odd % 2 == 0:
                odd //= 2
            if not _is_square(odd):
                continue
            X, Y, Z = X // g, Y // g, Z // g
            valid = {(sx * X, sy * Y, sz * Z) for sx, sy, sz in _SIGNS}
            valid = [t for t in valid if verify_beta(RedeiBeta(*t, p1, p2))]
            # nonnegative y, then z, first: a conjugate pair resolves the same way
            valid.sort(key=lambda t: (t[1] < 0, t[2] < 0, t[0] < 0, t))
            for t in valid:
                yield (ga, gb, k), RedeiBeta(*t, p1, p2)


def normalize_redei(sol, p1: OddPrime, p2: OddPrime) -> RedeiBeta:
    for _, beta in normalized_representatives(sol, p1, p2):
        return beta
    raise NormalizationExhausted(
        f"no normalized beta for {sol} with |k| <= {UNIT_EXPONENT_BOUND}"
        f" and square multipliers of height <= {SQUARE_BOUND}")


def alternative_beta(beta: RedeiBeta) -> RedeiBeta:
    """A second normalized beta from a different orbit element.

    Falls back to the conjugate x - y sqrt(p1) when the orbit bound holds
    nothing else.
    """
    for _, cand in normalized_representatives(beta.triple, beta.p1, beta.p2):
        if (cand.x, abs(cand.y)) != (beta.x, abs(beta.y)):
            return cand
    conj = RedeiBeta(beta.x, -beta.y, beta.z, beta.p1, beta.p2)
    if verify_beta(conj):
        return conj
    raise NormalizationExhausted(f"no alternative to {beta.triple}")


def compute_beta(p1: OddPrime, p2: OddPrime) -> RedeiBeta:
    return normalize_redei(solve_legendre(p1, p2), p1, p2)
