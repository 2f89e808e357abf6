"""The Redei symbol [p1, p2, p3] by residue evaluation, plus a splitting oracle.

With beta = x + y*sqrt(p1) normalized for (p1, p2), the symbol is +1 exactly
when p3 splits completely in Q(sqrt p1, sqrt p2, sqrt beta).  Since p3
already splits in the biquadratic field, that reduces to whether beta is a
square at one prime above p3, i.e. whether x + y*s is a square mod p3 for
s^2 = p1 mod p3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from . import conic
from .conic import RedeiBeta
from .modarith import OddPrime, PolyModP, count_roots_mod, legendre, primes_below, sqrt_mod


class Inadmissible(ValueError):
    reason = "Inadmissible"

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class NotOneModFour(Inadmissible):
    reason = "NotOneModFour"


class NotDistinct(Inadmissible):
    reason = "NotDistinct"


class LegendreObstruction(Inadmissible):
    reason = "LegendreObstruction"


class DegenerateEvaluation(ArithmeticError):
    pass


class OracleDegenerate(ArithmeticError):
    pass


@dataclass(frozen=True)
class SymbolValue:
    """zeta_n ** exponent; for n = 2 that is (-1) ** exponent."""

    exponent: int
    n: int = 2
    fallbacks: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.n)

    def rendered(self) -> str:
        if self.n == 2:
            return "+1" if self.exponent == 0 else "-1"
        return f"ζ^{self.exponent}"

    def inverse(self) -> SymbolValue:
        return SymbolValue(-self.exponent, self.n, self.fallbacks)


@dataclass(frozen=True)
class AdmissibleTriple2:
    p1: OddPrime
    p2: OddPrime
    p3: OddPrime

    def as_ints(self):
        return (int(self.p1), int(self.p2), int(self.p3))


def admissible2(p1, p2, p3) -> AdmissibleTriple2:
    ps = [p if isinstance(p, OddPrime) else OddPrime(int(p)) for p in (p1, p2, p3)]
    for i, p in enumerate(ps, 1):
        if int(p) % 4 != 1:
            raise NotOneModFour(f"p{i} = {p} is not 1 mod 4", (i,))
    if len({int(p) for p in ps}) < 3:
        raise NotDistinct(f"primes {[int(p) for p in ps]} are not distinct")
    for i, j in combinations(range(3), 2):
        if legendre(int(ps[i]), ps[j]) != 1:
            raise LegendreObstruction(
                f"({ps[i]}/{ps[j]}) = -1", (i + 1, j + 1))
    return AdmissibleTriple2(*ps)


@lru_cache(maxsize=None)
def _beta_for(p1: int, p2: int) -> RedeiBeta:
    return conic.compute_beta(OddPrime(p1), OddPrime(p2))


def beta_for(p1, p2, cache=None) -> RedeiBeta:
    """Normalized beta for (p1, p2), consulting an optional dict-like cache."""
    key = (int(p1), int(p2))
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    beta = _beta_for(*key)
    if cache is not None:
        cache.put(key, beta)
    return beta


def evaluate_beta(beta: RedeiBeta, p3, s=None) -> int:
    """Exponent m with (-1)^m = Legendre(x + y*s, p3).

    Raises DegenerateEvaluation when beta lies in the prime above p3 picked
    out by s.
    """
    q = int(p3)
    if s is None:
        s = sqrt_mod(int(beta.p1), q)
    tau = (beta.x + beta.y * s) % q
    if tau == 0:
        raise DegenerateEvaluation(f"beta = {beta.triple} vanishes at p3 = {q}, s = {s}")
    return 0 if legendre(tau, q) == 1 else 1


def _beta_triple(t: AdmissibleTriple2, beta):
    if beta is None:
        beta = beta_for(t.p1, t.p2)
    if (int(beta.p1), int(beta.p2)) != (int(t.p1), int(t.p2)):
        raise ValueError("beta belongs to a different prime pair")
    return beta


def redei_symbol(t: AdmissibleTriple2, beta: RedeiBeta | None = None, s=None) -> SymbolValue:
    beta = _beta_triple(t, beta)
    try:
        return SymbolValue(evaluate_beta(beta, t.p3, s), 2)
    except DegenerateEvaluation as exc:
        value = oracle_symbol2(t, beta)
        return SymbolValue(value.exponent, 2, (f"oracle fallback: {exc}",) + value.fallbacks)


# -- splitting oracle ------------------------------------------------------

def quartic(beta: RedeiBeta):
    """Integer coefficients of T^4 - 2x T^2 + p2 z^2, low degree first."""
    return [int(beta.p2) * beta.z * beta.z, 0, -2 * beta.x, 0, 1]


def _count_from_quartic(coeffs, q: int):
    f = PolyModP(coeffs, q)
    disc_ok = _separable(f)
    if not disc_ok:
        return None
    return count_roots_mod(f)


def _separable(f: PolyModP) -> bool:
    from . import fields

    K = fields.PrimeField(f.modulus.value)
    return fields.is_squarefree(K, list(f.coefficients))


def _mul_sqrt(a, b, p1):
    """(a0 + a1 sqrt p1)(b0 + b1 sqrt p1)."""
    return (a[0] * b[0] + p1 * a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _clear_prime(beta: RedeiBeta, q: int):
    """An element in the same square class as beta, coprime to q.

    beta meets exactly one prime P above q, with even valuation 2e; dividing
    by gamma^(2e) for gamma = s + sqrt(p1) in P amounts to multiplying by
    conj(gamma)^(2e) and dividing by the rational q-power.
    """
    p1 = int(beta.p1)
    s = sqrt_mod(p1, q)
    for root in (s, q - s):
        if (beta.x + beta.y * root) % q == 0:
            break
    # gamma = -root + sqrt(p1) lies in P; its conjugate does not
    gamma_conj = (-root, -1)
    if (root * root - p1) % (q * q) == 0:
        gamma_conj = (-(root + q), -1)
    elem = (beta.x, beta.y)
    while elem[0] % q == 0 and elem[1] % q == 0:
        elem = (elem[0] // q, elem[1] // q)
    count = 0
    while (elem[0] + elem[1] * root) % q == 0 and count < 200:
        elem = _mul_sqrt(elem, _mul_sqrt(gamma_conj, gamma_conj, p1), p1)
        # each multiplication by conj(gamma)^2 gains q^2 on the rational side
        assert elem[0] % (q * q) == 0 and elem[1] % (q * q) == 0
        elem = (elem[0] // (q * q), elem[1] // (q * q))
        count += 1
    return elem


def _perturb(elem, p1: int, q: int, k: int):
    """elem * gamma^2 with gamma = 1 + k sqrt(p1), required coprime to q."""
    gamma = (1, k)
    return _mul_sqrt(elem, _mul_sqrt(gamma, gamma, p1), p1)


def _quartic_of(elem, p1: int):
    x, y = elem
    return [x * x - p1 * y * y, 0, -2 * x, 0, 1]


def oracle_symbol2(t: AdmissibleTriple2, beta: RedeiBeta | None = None) -> SymbolValue:
    """Symbol from the number of roots of the minimal polynomial of sqrt(beta).

    4 roots mod p3 means p3 splits completely (+1), none means residue
    degree 2 (-1).  An inseparable reduction is repaired by replacing beta
    with another element of its square class.
    """
    beta = _beta_triple(t, beta)
    q, p1 = int(t.p3), int(t.p1)
    notes = []
    n = _count_from_quartic(quartic(beta), q)
    if n is None:
        elem = (beta.x, beta.y)
        if beta.z % q == 0:
            elem = _clear_prime(beta, q)
            notes.append(f"cleared p3 from beta at p3 = {q}")
        for k in range(0, 50):
            cand = elem if k == 0 else _perturb(elem, p1, q, k)
            if (cand[0] * cand[0] - p1 * cand[1] * cand[1]) % q == 0:
                continue
            n = _count_from_quartic(_quartic_of(cand, p1), q)
            if n is not None:
                if k:
                    notes.append(f"perturbed beta by (1 + {k} sqrt p1)^2")
                break
        else:
            raise OracleDegenerate(f"no separable quartic for {t.as_ints()}")
    if n == 4:
        return SymbolValue(0, 2, tuple(notes))
    if n == 0:
        return SymbolValue(1, 2, tuple(notes))
    raise OracleDegenerate(f"quartic has {n} roots mod {q} for {t.as_ints()}")


# -- scanning ----------------------------------------------------------------

def admissible_triples(bound: int):
    """Admissible ordered triples of primes below bound, lexicographic."""
    ps = [p for p in primes_below(bound) if p % 4 == 1]
    res = {(a, b): legendre(a, b) == 1 for a in ps for b in ps if a != b}
    out = []
    for a in ps:
        for b in ps:
            if b == a or not res[a, b]:
                continue
            for c in ps:
                if c in (a, b) or not res[a, c] or not res[b, c]:
                    continue
                out.append((a, b, c))
    return out


def scan2(bound: int, cache=None):
    """All admissible triples below bound with their symbols, lexicographic."""
    if bound < 1:
        raise ValueError("bound must be positive")
    out = []
    for a, b, c in admissible_triples(bound):
        t = admissible2(a, b, c)
        out.append((t, redei_symbol(t, beta_for(a, b, cache))))
    return out


def all_permutations_agree(t: AdmissibleTriple2) -> bool:
    values = {redei_symbol(admissible2(*perm)).exponent for perm in permutations(t.as_ints())}
    return len(values) == 1
