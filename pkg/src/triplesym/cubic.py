"""The triple cubic residue symbol over F = Q(zeta_3).

Write M = F(u) with u^3 = pi1 and sigma for the generator u -> zeta*u of
Gal(M/F).  A ThetaElement stores theta0 in M whose relative norm is
+-pi2 times a cube; the Kummer generator of the degree-27 extension is
then theta = sigma(theta0) * theta0^2, which agrees with theta0^(sigma-1)
up to cubes and so satisfies theta^(sigma-1) = pi2 mod cubes.  The symbol
at p3 is the cubic character of theta at a degree-one prime of M above p3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import gcd
from pathlib import Path

import mpmath
from sympy import factorint

from . import fields
from .eisenstein import (
    LAMBDA,
    ONE,
    PRIMARY_MODULUS,
    UNITS,
    ZERO,
    EisensteinInteger,
    NotOneModNine,
    PrimaryPrime,
    ResidueField,
    cubic_residue_symbol,
    eis_divmod,
    eis_norm,
    primary_associate,
    split_rational_prime,
)
from .modarith import is_prime, primes_below
from .redei import (
    DegenerateEvaluation,
    Inadmissible,
    NotDistinct,
    OracleDegenerate,
    SymbolValue,
)

DEFAULT_SEARCH_BOUND = 50
WITNESS_PRIME_LIMIT = 5000


class CubicObstruction(Inadmissible):
    reason = "CubicObstruction"


class ThetaNotFound(LookupError):
    def __init__(self, bound):
        super().__init__(f"no theta with coordinate height <= {bound}")
        self.bound = bound


class ThetaRejected(ValueError):
    reason = "ThetaRejected"


# -- arithmetic in M = F(u), u^3 = pi1 ----------------------------------------

def _E(x) -> EisensteinInteger:
    return EisensteinInteger.of(x)


def m_mul(x, y, pi1):
    a0, a1, a2 = x
    b0, b1, b2 = y
    return (a0 * b0 + pi1 * (a1 * b2 + a2 * b1),
            a0 * b1 + a1 * b0 + pi1 * (a2 * b2),
            a0 * b2 + a1 * b1 + a2 * b0)


def m_sigma(x, k: int = 1):
    """sigma^k: u -> zeta^k u."""
    z = UNITS[k % 3]  # 1, zeta, zeta^2
    return (x[0], z * x[1], z * z * x[2])


def m_norm(x, pi1) -> EisensteinInteger:
    prod = m_mul(m_mul(x, m_sigma(x, 1), pi1), m_sigma(x, 2), pi1)
    if not (prod[1].is_zero() and prod[2].is_zero()):
        raise ArithmeticError("relative norm left M")
    return prod[0]


def kummer_generator(theta0, pi1):
    """sigma(theta0) * theta0^2."""
    return m_mul(m_sigma(theta0, 1), m_mul(theta0, theta0, pi1), pi1)


@dataclass(frozen=True)
class ThetaElement:
    """theta0 = a + b*u + c*u^2, u^3 = pi1, stored by its three coordinates."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 3:
            raise ValueError("theta needs exactly three coordinates")
        object.__setattr__(self, "coords", tuple(_E(c) for c in self.coords))

    @classmethod
    def rational(cls, a: int, b: int, c: int) -> ThetaElement:
        return cls((EisensteinInteger(a), EisensteinInteger(b), EisensteinInteger(c)))

    def norm(self, pi1) -> EisensteinInteger:
        return m_norm(self.coords, _pi(pi1))

    def generator(self, pi1):
        return kummer_generator(self.coords, _pi(pi1))

    def times_cube(self, gamma, pi1) -> ThetaElement:
        """theta0 * gamma^3; the generator changes by a cube as well."""
        p = _pi(pi1)
        g = tuple(_E(c) for c in gamma)
        return ThetaElement(m_mul(self.coords, m_mul(g, m_mul(g, g, p), p), p))

    def is_rational(self) -> bool:
        return all(c.b == 0 for c in self.coords)


def _pi(p) -> EisensteinInteger:
    if isinstance(p, PrimaryPrime):
        return p.pi
    if isinstance(p, int):
        # a bare rational prime means its primary associate, -q
        return as_primary(p).pi
    return _E(p)


def _eval_at(coords, r, F: ResidueField):
    """a + b r + c r^2 in the residue field F."""
    K = F.K
    a, b, c = (F.reduce(x) for x in coords)
    return K.add(a, K.mul(r, K.add(b, K.mul(r, c))))


def _eval_generator(coords, r, F: ResidueField):
    """Image of sigma(theta0) * theta0^2 under u -> r."""
    K = F.K
    t0 = _eval_at(coords, r, F)
    t1 = _eval_at(coords, K.mul(F.zeta, r), F)
    return K.mul(t1, K.mul(t0, t0))


def cube_roots_in(F: ResidueField, alpha):
    """Sorted cube roots of alpha in the residue field F."""
    K = F.K
    return fields.find_roots(K, [K.neg(F.reduce(alpha)), K.zero, K.zero, K.one])


# -- admissibility ----------------------------------------------------------

@dataclass(frozen=True)
class AdmissibleTriple3:
    pi1: PrimaryPrime
    pi2: PrimaryPrime
    pi3: PrimaryPrime

    def primes(self):
        return (self.pi1, self.pi2, self.pi3)

    def permuted(self, perm) -> AdmissibleTriple3:
        ps = self.primes()
        return AdmissibleTriple3(*(ps[i] for i in perm))


def as_primary(x) -> PrimaryPrime:
    """Primary associate of an int (rational prime), pair or Eisenstein prime."""
    if isinstance(x, PrimaryPrime):
        return x
    if isinstance(x, int):
        if not is_prime(abs(x)):
            raise ValueError(f"{x} is not prime")
        q = abs(x)
        if q % 3 == 2:
            return primary_associate(EisensteinInteger(q))
        if q == 3:
            raise NotOneModNine("3 ramifies in Z[zeta]")
        # a rational prime 1 mod 3 is not prime in Z[zeta]; use one factor
        return primary_associate(split_rational_prime(q)[0])
    return primary_associate(_E(x))


def admissible3(pi1, pi2, pi3) -> AdmissibleTriple3:
    ps = []
    for i, p in enumerate((pi1, pi2, pi3), 1):
        try:
            ps.append(as_primary(p))
        except NotOneModNine as exc:
            raise NotOneModNine(f"pi{i}: {exc}") from None
    for i in range(3):
        for j in range(i + 1, 3):
            if ps[i].pi == ps[j].pi:
                raise NotDistinct(f"pi{i + 1} and pi{j + 1} are associates", (i + 1, j + 1))
    for i in range(3):
        for j in range(3):
            if i != j and cubic_residue_symbol(ps[i].pi, ps[j]) != 0:
                raise CubicObstruction(
                    f"(pi{i + 1}/pi{j + 1})_3 != 1", (i + 1, j + 1))
    return AdmissibleTriple3(*ps)


# -- verification of theta ----------------------------------------------------

def eis_cube_root(m):
    """(u, w) with m = u * w^3 for a unit u, or None."""
    m = _E(m)
    if m.is_zero():
        return (ONE, ZERO)
    n = eis_norm(m)
    c = round(mpmath.cbrt(n)) if n < 2**50 else None
    if c is None or c**3 != n:
        c = _icbrt(n)
        if c is None:
            return None
    digits = len(str(n)) + 20
    with mpmath.workdps(digits):
        zeta = mpmath.mpc(-0.5, mpmath.sqrt(3) / 2)
        z = m.a + m.b * zeta
        w0 = mpmath.exp(mpmath.log(z) / 3)
        xi = mpmath.exp(2j * mpmath.pi / 18)
        for k in range(18):
            x = w0 * xi**k
            b = int(mpmath.nint(x.imag / (mpmath.sqrt(3) / 2)))
            a = int(mpmath.nint(x.real + b / mpmath.mpf(2)))
            w = EisensteinInteger(a, b)
            cube = w * w * w
            for u in UNITS:
                if u * cube == m:
                    return (u, w)
    return None


def _icbrt(n: int):
    lo, hi = 0, 1
    while hi**3 < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**3 < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**3 == n else None


def _associated(x: EisensteinInteger, y: EisensteinInteger) -> bool:
    return any(u * x == y for u in UNITS)


@lru_cache(maxsize=None)
def lambda_adic_roots(pi1: EisensteinInteger):
    """Representatives mod lambda^3 of the cube roots of pi1 in F_lambda.

    A candidate with rho^3 = pi1 mod lambda^5 is within lambda^3 of a true
    root (Hensel, since v(3 rho^2) = 2), so the classes mod lambda^3 of the
    candidates are exactly the classes of the roots.
    """
    l5 = LAMBDA**5
    reps = []
    for a in range(27):
        for b in range(27):
            rho = EisensteinInteger(a, b)
            if not l5.divides(rho * rho * rho - pi1):
                continue
            if not any(PRIMARY_MODULUS.divides(rho - r) for r in reps):
                reps.append(rho)
    return tuple(reps)


def _eval_exact(coords, x: EisensteinInteger) -> EisensteinInteger:
    a, b, c = coords
    return a + x * (b + x * c)


def _lambda_unramified(coords, pi1) -> bool:
    """theta = +-1 mod lambda^3 at every prime of M above lambda."""
    roots = lambda_adic_roots(pi1)
    if len(roots) != 3:
        # lambda does not split in M; only pi1 = 1 mod 9 is in scope
        return False
    for rho in roots:
        t = _eval_exact(coords, UNITS[1] * rho) * _eval_exact(coords, rho) ** 2
        if not (PRIMARY_MODULUS.divides(t - ONE) or PRIMARY_MODULUS.divides(t + ONE)):
            return False
    return True


class _Completion:
    """Z[zeta] modulo l^k for a prime l of Z[zeta] not above 3."""

    def __init__(self, ell_prime: EisensteinInteger, k: int):
        self.F = ResidueField(ell_prime)
        self.ell = self.F.q
        self.k = k
        self.mod = self.ell**k
        self.split = isinstance(self.F.K, fields.PrimeField)
        if self.split:
            z = self.F.zeta
            for _ in range(k):
                z = (z - (z * z + z + 1) * pow(2 * z + 1, -1, self.mod)) % self.mod
            self.z = z

    def embed(self, e: EisensteinInteger) -> EisensteinInteger:
        if self.split:
            return EisensteinInteger((e.a + e.b * self.z) % self.mod, 0)
        return EisensteinInteger(e.a % self.mod, e.b % self.mod)

    def reduce(self, e: EisensteinInteger) -> EisensteinInteger:
        return EisensteinInteger(e.a % self.mod, e.b % self.mod)

    def lift_residue(self, r) -> EisensteinInteger:
        return EisensteinInteger(r, 0) if self.split else EisensteinInteger(*r)

    def inv(self, e: EisensteinInteger) -> EisensteinInteger:
        if self.split:
            return EisensteinInteger(pow(e.a, -1, self.mod), 0)
        ni = pow(eis_norm(e) % self.mod, -1, self.mod)
        return self.reduce(e.conj() * ni)

    def valuation(self, e: EisensteinInteger) -> int:
        e = self.reduce(e)
        v = 0
        while v < self.k and e.a % self.ell == 0 and e.b % self.ell == 0:
            e = EisensteinInteger(e.a // self.ell, e.b // self.ell)
            v += 1
        return v


def _valuations_above(coords, pi1, ell_prime, k):
    """Valuations of theta0 at the degree-one primes of M above ell_prime."""
    C = _Completion(ell_prime, k)
    roots = cube_roots_in(C.F, pi1)
    if not roots:
        return []
    p1 = C.embed(pi1)
    emb = [C.embed(c) for c in coords]
    vals = []
    for r in roots:
        rho = C.lift_residue(r)
        for _ in range(k):
            f = C.reduce(rho * rho * rho - p1)
            df = C.reduce(3 * rho * rho)
            rho = C.reduce(rho - f * C.inv(df))
        t = C.reduce(emb[0] + rho * (emb[1] + rho * emb[2]))
        vals.append(C.valuation(t))
    return vals


def _primes_of_F_above(ell: int):
    if ell % 3 == 2:
        return [EisensteinInteger(ell)]
    pi, _ = split_rational_prime(ell)
    return [pi, pi.conj()]


def _unramified_away(coords, pi1, pi2, N) -> bool:
    """theta has valuation divisible by 3 at every prime above N other than pi1, pi2."""
    nn = eis_norm(N)
    for ell, e in factorint(nn).items():
        if ell == 3:
            return False
        for lp in _primes_of_F_above(ell):
            if _associated(lp, pi1) or _associated(lp, pi2):
                continue
            vals = _valuations_above(coords, pi1, lp, e + 1)
            if len({v % 3 for v in vals}) > 1:
                return False
    return True


def nontriviality_witness(coords, pi1, limit=WITNESS_PRIME_LIMIT):
    """(l, r) where the generator is not a cube at the prime u -> r above l."""
    coords = tuple(_E(c) for c in coords)
    N = m_norm(coords, pi1)
    bad = eis_norm(N) * eis_norm(pi1) * 3
    if bad == 0:
        return None
    for ell in primes_below(limit):
        if bad % ell == 0:
            continue
        for lp in _primes_of_F_above(ell):
            F = ResidueField(lp)
            for r in cube_roots_in(F, pi1):
                t = _eval_generator(coords, r, F)
                if not F.K.is_zero(t) and F.cubic_exponent(t) != 0:
                    return (lp, r)
    return None


@dataclass
class ThetaCheck:
    norm_pattern: bool = False
    nontrivial: bool = False
    unramified: bool = False
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.norm_pattern and self.nontrivial and self.unramified


def _norm_pattern(coords, pi1, pi2):
    """(N, i, w) with N(theta0) = unit * pi1^i * pi2 * w^3, 0 <= i < 3.

    A factor pi1 = u^3 is harmless: theta0 * u has generator zeta * theta.
    None unless the norm is nonzero and prime to 3.
    """
    N = m_norm(coords, pi1)
    if N.is_zero() or eis_norm(N) % 3 == 0:
        return None
    q, r = eis_divmod(N, pi2)
    if not r.is_zero():
        return None
    for i in range(3):
        found = eis_cube_root(q)
        if found is not None:
            return N, i, found[1]
        q, r = eis_divmod(q, pi1)
        if not r.is_zero():
            return None
    return None


def check_theta(theta: ThetaElement, pi1, pi2) -> ThetaCheck:
    p1, p2 = _pi(pi1), _pi(pi2)
    coords = theta.coords
    report = ThetaCheck()
    pattern = _norm_pattern(coords, p1, p2)
    if pattern is None:
        report.notes.append("norm is not a unit times pi2 times a cube prime to 3")
        return report
    report.norm_pattern = True
    N, _, w = pattern
    witness = nontriviality_witness(coords, p1)
    if witness is None:
        report.notes.append("generator is a cube at every small split prime")
        return report
    report.nontrivial = True
    report.notes.append(f"non-cube at {witness[0]} with u -> {witness[1]}")
    if not _lambda_unramified(coords, p1):
        report.notes.append("ramified above sqrt(-3)")
        return report
    if not _unramified_away(coords, p1, p2, N):
        report.notes.append(f"ramified at a prime dividing w = {w}")
        return report
    report.unramified = True
    return report


def verify_theta(theta: ThetaElement, pi1, pi2) -> bool:
    return check_theta(theta, pi1, pi2).ok


# -- search -----------------------------------------------------------------

def _shell(h: int):
    """Integer triples of max-norm exactly h, lexicographic."""
    for x in range(-h, h + 1):
        for y in range(-h, h + 1):
            if abs(x) == h or abs(y) == h:
                yield from ((x, y, z) for z in range(-h, h + 1))
            else:
                yield (x, y, -h)
                yield (x, y, h)


def _cube_up_to(n: int, p: int) -> bool:
    """n = +-p^i * cube for some 0 <= i < 3."""
    for _ in range(3):
        if _icbrt(abs(n)) is not None:
            return True
        if n % p:
            return False
        n //= p
    return False


def theta_search(pi1, pi2, bound: int = DEFAULT_SEARCH_BOUND) -> ThetaElement:
    """First theta0 with rational coordinates passing verify_theta.

    Shells of increasing max-norm, lexicographic inside a shell; each hit
    of the norm filter is tried as theta0, theta0*u and theta0*u^2.  Both
    primes must be rational (-q with q = 8 mod 9).
    """
    P1, P2 = as_primary(pi1), as_primary(pi2)
    if not (P1.is_rational() and P2.is_rational()):
        raise ValueError("theta_search covers rational pi1, pi2 only")
    if P1.pi == P2.pi:
        raise NotDistinct("pi1 and pi2 are associates", (1, 2))
    for i, j, a, b in ((1, 2, P1, P2), (2, 1, P2, P1)):
        if cubic_residue_symbol(a.pi, b) != 0:
            raise CubicObstruction(f"(pi{i}/pi{j})_3 != 1", (i, j))
    p, q = P1.pi.a, P2.pi.a
    pp = p * p
    for h in range(1, bound + 1):
        for x, y, z in _shell(h):
            n = x * x * x + p * y * y * y + pp * z * z * z - 3 * p * x * y * z
            if n == 0 or n % 3 == 0 or n % q or not _cube_up_to(n // q, p):
                continue
            if gcd(gcd(x, y), z) != 1:
                continue
            # theta0 * u^j twists the generator by zeta^j, which is what
            # the condition above sqrt(-3) usually needs
            for coords in ((x, y, z), (p * z, x, y), (p * y, p * z, x)):
                theta = ThetaElement.rational(*coords)
                if verify_theta(theta, P1, P2):
                    return theta
    raise ThetaNotFound(bound)


# -- evaluation ---------------------------------------------------------------

def conjugate_exponents(t: AdmissibleTriple3, theta: ThetaElement):
    """Cubic exponent of the generator at each prime of M above p3.

    None marks a prime where the generator vanishes.
    """
    F = t.pi3.residue_field
    out = []
    for r in cube_roots_in(F, t.pi1.pi):
        v = _eval_generator(theta.coords, r, F)
        out.append(None if F.K.is_zero(v) else F.cubic_exponent(v))
    return out


def cubic_triple_symbol(t: AdmissibleTriple3, theta: ThetaElement) -> SymbolValue:
    """Artin value: zeta^k with k the cubic exponent of theta at a prime over p3."""
    exps = conjugate_exponents(t, theta)
    if not exps:
        raise DegenerateEvaluation("pi1 is not a cube mod pi3")
    notes = []
    for i, e in enumerate(exps):
        if e is not None:
            return SymbolValue(e, 3, tuple(notes))
        notes.append(f"theta vanishes at cube root #{i}")
    raise DegenerateEvaluation("theta vanishes at every prime above p3")


def cohomological_symbol(t: AdmissibleTriple3, theta: ThetaElement) -> SymbolValue:
    """[chi1, chi2, chi3]_3, the inverse of the Artin value."""
    return cubic_triple_symbol(t, theta).inverse()


def nonic(theta: ThetaElement, pi1):
    """Coefficients in Z[zeta] of prod_i (T^3 - sigma^i theta), low degree first."""
    p = _pi(pi1)
    g = theta.generator(p)
    g1, g2 = m_sigma(g, 1), m_sigma(g, 2)
    s1 = tuple(a + b + c for a, b, c in zip(g, g1, g2))
    s2 = tuple(a + b + c for a, b, c in zip(m_mul(g, g1, p), m_mul(g, g2, p), m_mul(g1, g2, p)))
    s3 = m_mul(m_mul(g, g1, p), g2, p)
    for s in (s1, s2, s3):
        if not (s[1].is_zero() and s[2].is_zero()):
            raise ArithmeticError("symmetric function left F")
    return [-s3[0], ZERO, ZERO, s2[0], ZERO, ZERO, -s1[0], ZERO, ZERO, ONE]


def _lift_residue(F: ResidueField, r) -> EisensteinInteger:
    """An element of Z[zeta] reducing to r."""
    if isinstance(r, tuple):
        return EisensteinInteger(r[0], r[1])
    return EisensteinInteger(r)


def _divide_coords(coords, d: EisensteinInteger):
    out = []
    for c in coords:
        q, rem = eis_divmod(c, d)
        if not rem.is_zero():
            return None
        out.append(q)
    return tuple(out)


def clear_above_p3(theta: ThetaElement, t: AdmissibleTriple3, max_steps: int = 12) -> ThetaElement:
    """A theta0 that is a unit at every prime of M above p3, same class.

    Scaling theta0 by c in F scales the generator by c^3, and multiplying
    theta0 by m^3 changes it by a cube, so neither moves the field.  When
    theta0 vanishes at some but not all of these primes, m is the product
    of u - t over the other roots, with t lifting the root and u - t of
    valuation exactly one; then pi3^3 divides theta0 * m^3.
    """
    F = t.pi3.residue_field
    K = F.K
    p, q3 = t.pi1.pi, t.pi3.pi
    roots = cube_roots_in(F, p)
    coords = theta.coords
    for _ in range(max_steps):
        vanish = [K.is_zero(_eval_at(coords, r, F)) for r in roots]
        if not any(vanish):
            return ThetaElement(coords)
        if all(vanish):
            divisor = q3
        else:
            m = (ONE, ZERO, ZERO)
            for r, v in zip(roots, vanish):
                if v:
                    continue
                lift = _lift_residue(F, r)
                # u - lift has norm pi1 - lift^3 over F; keep it off pi3^2
                if (q3 * q3).divides(p - lift**3):
                    lift = lift + q3
                m = m_mul(m, (-lift, ONE, ZERO), p)
            coords = m_mul(coords, m_mul(m, m_mul(m, m, p), p), p)
            divisor = q3 * q3 * q3
        coords = _divide_coords(coords, divisor)
        if coords is None:
            raise OracleDegenerate("theta does not clear above p3")
    raise OracleDegenerate("theta keeps vanishing above p3")


def oracle_split3(t: AdmissibleTriple3, theta: ThetaElement) -> str:
    """'trivial' iff the nonic for cube roots of theta has 9 roots mod p3."""
    F = t.pi3.residue_field
    K = F.K
    p = t.pi1.pi
    theta = clear_above_p3(theta, t)
    for j in range(0, 20):
        cand = theta if j == 0 else theta.times_cube((ONE, EisensteinInteger(j), ZERO), p)
        f = fields.poly_trim(K, [F.reduce(c) for c in nonic(cand, p)])
        if len(f) < 10 or not fields.is_squarefree(K, f):
            continue
        n = fields.count_distinct_roots(K, f)
        if n == 9:
            return "trivial"
        if n == 0:
            return "nontrivial"
        raise OracleDegenerate(f"nonic has {n} roots mod pi3")
    raise OracleDegenerate("no separable reduction of the nonic")


def all_permutation_values(triple, thetas):
    """{perm: Artin exponent} for every ordering with a theta available.

    thetas maps (pi1, pi2) pairs of EisensteinIntegers to ThetaElements.
    """
    ps = [as_primary(p) for p in triple]
    out = {}
    for perm in permutations(range(3)):
        a, b, c = (ps[i] for i in perm)
        theta = thetas.get((a.pi, b.pi))
        if theta is None:
            continue
        t = admissible3(a, b, c)
        out[perm] = cubic_triple_symbol(t, theta).exponent
    return out


def permutation_sign(perm) -> int:
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


# -- fixtures ---------------------------------------------------------------

def theta_to_json(pi1, pi2, theta: ThetaElement) -> dict:
    def pair(e):
        e = _E(e)
        return [str(e.a), str(e.b)]

    return {"pi1": pair(_pi(pi1)), "pi2": pair(_pi(pi2)),
            "theta": [pair(c) for c in theta.coords]}


def theta_from_json(obj: dict):
    """(pi1, pi2, theta) from the fixture object; integers as decimal strings."""
    def pair(v):
        if len(v) != 2 or not all(isinstance(s, str) for s in v):
            raise ValueError(f"expected two decimal strings, got {v!r}")
        return EisensteinInteger(int(v[0]), int(v[1]))

    pi1, pi2 = pair(obj["pi1"]), pair(obj["pi2"])
    coords = obj["theta"]
    if len(coords) != 3:
        raise ValueError("theta needs three coordinates")
    return pi1, pi2, ThetaElement(tuple(pair(c) for c in coords))


def load_theta_file(path):
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict):
        data = [data]
    return [theta_from_json(obj) for obj in data]


def save_theta_file(path, entries):
    objs = [theta_to_json(p1, p2, th) for p1, p2, th in entries]
    body = ",\n".join(" " + json.dumps(o) for o in objs)
    Path(path).write_text("[\n" + body + "\n]\n")


def rational_primes_8_mod_9(bound: int):
    return [q for q in primes_below(bound) if q % 9 == 8]


def split_primes_1_mod_9(bound: int):
    """Primary primes of norm q = 1 mod 9 (both conjugates), q < bound."""
    out = []
    for q in primes_below(bound):
        if q % 9 == 1:
            pi, _ = split_rational_prime(q)
            out.append(primary_associate(pi))
            out.append(primary_associate(pi.conj()))
    return out
