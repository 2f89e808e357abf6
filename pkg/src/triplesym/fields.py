"""Small exact finite fields and dense polynomials over them.

Two models are enough for this package: the prime field F_p and the
quadratic extension F_p[w]/(w^2 + w + 1) used as the residue field of an
inert prime of Z[zeta_3].  Polynomials are plain lists of field elements,
low degree first, with no trailing zeros.
"""

from __future__ import annotations

import random


class PrimeField:
    """F_p with elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        self.p = p
        self.order = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def elem(self, x) -> int:
        return x % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def neg(self, x):
        return -x % self.p

    def mul(self, x, y):
        return x * y % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return pow(x, -1, self.p)

    def pow(self, x, e: int):
        return pow(x, e, self.p)

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def random(self, rng: random.Random):
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)


class QuadField:
    """F_p[w]/(w^2 + w + 1) for p = 2 mod 3, elements (u, v) = u + v*w.

    The class of w is a primitive cube root of unity, which is how the
    inert residue fields of Z[zeta_3] are modelled.
    """

    def __init__(self, p: int):
        if p % 3 != 2:
            raise ValueError(f"w^2 + w + 1 is reducible mod {p}")
        self.p = p
        self.order = p * p
        self.zero = (0, 0)
        self.one = (1, 0)
        self.w = (0, 1)

    def __repr__(self):
        return f"QuadField({self.p})"

    def __eq__(self, other):
        return isinstance(other, QuadField) and other.p == self.p

    def __hash__(self):
        return hash(("F2", self.p))

    def elem(self, x):
        if isinstance(x, tuple):
            return (x[0] % self.p, x[1] % self.p)
        return (x % self.p, 0)

    def add(self, x, y):
        p = self.p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

    def sub(self, x, y):
        p = self.p
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

    def neg(self, x):
        return (-x[0] % self.p, -x[1] % self.p)

    def mul(self, x, y):
        # w^2 = -1 - w
        a, b = x
        c, d = y
        bd = b * d
        p = self.p
        return ((a * c - bd) % p, (a * d + b * c - bd) % p)

    def norm(self, x) -> int:
        a, b = x
        return (a * a - a * b + b * b) % self.p

    def inv(self, x):
        n = self.norm(x)
        if n == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        # conjugate of a + b w is (a - b) - b w
        ni = pow(n, -1, self.p)
        a, b = x
        return ((a - b) * ni % self.p, -b * ni % self.p)

    def pow(self, x, e: int):
        if e < 0:
            x, e = self.inv(x), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def is_zero(self, x) -> bool:
        return x[0] % self.p == 0 and x[1] % self.p == 0

    def random(self, rng: random.Random):
        return (rng.randrange(self.p), rng.randrange(self.p))

    def elements(self):
        for a in range(self.p):
            for b in range(self.p):
                yield (a, b)


# -- polynomials -----------------------------------------------------------

def poly_trim(K, f):
    f = list(f)
    while f and K.is_zero(f[-1]):
        f.pop()
    return f


def poly_add(K, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else K.zero
        b = g[i] if i < len(g) else K.zero
        out.append(K.add(a, b))
    return poly_trim(K, out)


def poly_sub(K, f, g):
    return poly_add(K, f, [K.neg(c) for c in g])


def poly_mul(K, f, g):
    if not f or not g:
        return []
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return poly_trim(K, out)


def poly_divmod(K, f, g):
    g = poly_trim(K, g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = poly_trim(K, f)
    lead_inv = K.inv(g[-1])
    q = [K.zero] * max(len(r) - len(g) + 1, 0)
    while len(r) >= len(g):
        shift = len(r) - len(g)
        c = K.mul(r[-1], lead_inv)
        q[shift] = c
        for i, b in enumerate(g):
            r[i + shift] = K.sub(r[i + shift], K.mul(c, b))
        r = poly_trim(K, r)
    return poly_trim(K, q), r


def poly_mod(K, f, g):
    return poly_divmod(K, f, g)[1]


def poly_monic(K, f):
    f = poly_trim(K, f)
    if not f:
        return f
    c = K.inv(f[-1])
    return [K.mul(c, a) for a in f]


def poly_gcd(K, f, g):
    f, g = poly_trim(K, f), poly_trim(K, g)
    while g:
        f, g = g, poly_mod(K, f, g)
    return poly_monic(K, f)


def poly_powmod(K, base, e: int, modulus):
    result = [K.one]
    base = poly_mod(K, base, modulus)
    while e:
        if e & 1:
            result = poly_mod(K, poly_mul(K, result, base), modulus)
        base = poly_mod(K, poly_mul(K, base, base), modulus)
        e >>= 1
    return result


def poly_eval(K, f, x):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def poly_derivative(K, f):
    out = []
    for i in range(1, len(f)):
        out.append(K.mul(K.elem(i), f[i]))
    return poly_trim(K, out)


def split_part(K, f):
    """gcd(f, X^q - X): the product of the distinct linear factors of f."""
    f = poly_monic(K, f)
    if len(f) <= 1:
        return [K.one]
    x = [K.zero, K.one]
    xq = poly_powmod(K, x, K.order, f)
    return poly_gcd(K, f, poly_sub(K, xq, x))


def count_distinct_roots(K, f) -> int:
    f = poly_trim(K, f)
    if not f:
        raise ValueError("zero polynomial has every element as a root")
    return len(split_part(K, f)) - 1


def is_squarefree(K, f) -> bool:
    f = poly_trim(K, f)
    if len(f) <= 2:
        return True
    return len(poly_gcd(K, f, poly_derivative(K, f))) == 1


def find_roots(K, f, seed: int = 0):
    """All distinct roots of f in K, sorted, via equal-degree splitting."""
    g = split_part(K, f)
    rng = random.Random(seed)
    roots = []
    stack = [g]
    half = (K.order - 1) // 2
    while stack:
        h = stack.pop()
        if len(h) <= 1:
            continue
        if len(h) == 2:
            roots.append(K.neg(h[0]))  # monic linear
            continue
        while True:
            shift = [K.random(rng), K.one]
            t = poly_powmod(K, shift, half, h)
            d = poly_gcd(K, h, poly_sub(K, t, [K.one]))
            if 1 < len(d) < len(h):
                stack.append(d)
                stack.append(poly_divmod(K, h, d)[0])
                break
    return sorted(roots)
