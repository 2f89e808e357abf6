"""Inhomogeneous cochains of finite groups with trivial Z/n coefficients.

Cochains are non-normalized: a degree-i cochain is a numpy array of shape
(|G|,) * i holding values mod n.  Coboundary classes are decided by
diagonalizing the coboundary matrix with unimodular row and column
operations and then solving the diagonal system mod n, which stays correct
for composite n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd

import numpy as np

MAX_GROUP_ORDER = 64
MAX_UNKNOWNS = 4096


class NotAHomomorphism(ValueError):
    pass


class NotACocycle(ValueError):
    pass


class CupNotTrivial(ValueError):
    def __init__(self, i, j):
        super().__init__(f"cup product of chi{i} and chi{j} is not a coboundary")
        self.pair = (i, j)


# -- groups -----------------------------------------------------------------

@dataclass(eq=False)
class FiniteGroup:
    """Multiplication table on 0..order-1; labels are optional names."""

    order: int
    table: np.ndarray
    identity: int = 0
    labels: list | None = None
    name: str = ""

    def __post_init__(self):
        T = np.asarray(self.table, dtype=np.int64)
        self.table = T
        N = self.order
        if T.shape != (N, N) or T.min() < 0 or T.max() >= N:
            raise ValueError("table must be order x order with entries in range")
        e = self.identity
        idx = np.arange(N)
        if not (np.array_equal(T[e], idx) and np.array_equal(T[:, e], idx)):
            raise ValueError("identity axiom fails")
        if not all((T[g] == e).any() for g in range(N)):
            raise ValueError("inverse axiom fails")
        # associativity: (a b) c == a (b c) for every triple
        left = T[T[:, :, None], idx[None, None, :]]
        right = T[idx[:, None, None], T[None, :, :]]
        if not np.array_equal(left, right):
            raise ValueError("associativity fails")
        self.inverses = np.argmax(T == e, axis=1)

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverses[g])

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    def index(self, label) -> int:
        return self.labels.index(label)

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by decreasing element order."""
        gens: list[int] = []
        span = {self.identity}
        for g in sorted(range(self.order), key=lambda g: (-self.element_order(g), g)):
            if g in span:
                continue
            gens.append(g)
            span = self._closure(gens)
            if len(span) == self.order:
                break
        return gens

    def _closure(self, gens):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mul(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


def group_from_law(elements, law, name="") -> FiniteGroup:
    elements = list(elements)
    pos = {x: i for i, x in enumerate(elements)}
    N = len(elements)
    table = np.empty((N, N), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            table[i, j] = pos[law(x, y)]
    e = [i for i in range(N) if all(table[i, j] == j for j in range(N))]
    if len(e) != 1:
        raise ValueError("no unique identity")
    return FiniteGroup(N, table, e[0], elements, name)


def cyclic_group(m: int) -> FiniteGroup:
    return group_from_law(range(m), lambda x, y: (x + y) % m, f"Z/{m}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    elems = [(g, h) for g in range(G.order) for h in range(H.order)]
    return group_from_law(elems, lambda x, y: (G.mul(x[0], y[0]), H.mul(x[1], y[1])),
                          f"{G.name}x{H.name}")


def elementary_abelian(n: int, rank: int) -> FiniteGroup:
    elems = list(product(range(n), repeat=rank))
    return group_from_law(elems, lambda x, y: tuple((a + b) % n for a, b in zip(x, y)),
                          f"(Z/{n})^{rank}")


def heisenberg_law(n: int):
    def law(x, y):
        a1, b1, c1 = x
        a2, b2, c2 = y
        return ((a1 + a2) % n, (b1 + b2 + a1 * c2) % n, (c1 + c2) % n)

    return law


def heisenberg_group(n: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z/n, labelled by (a, b, c)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return group_from_law(product(range(n), repeat=3), heisenberg_law(n), f"D_{n}")


def dihedral_group(m: int) -> FiniteGroup:
    """Symmetries of the m-gon: (k, s) = r^k s^s, order 2m."""
    def law(x, y):
        k1, s1 = x
        k2, s2 = y
        return ((k1 + (-k2 if s1 else k2)) % m, (s1 + s2) % 2)

    return group_from_law([(k, s) for s in range(2) for k in range(m)], law, f"Dih_{m}")


def quaternion_group() -> FiniteGroup:
    # (sign, unit) with unit in 1, i, j, k
    mult = {("1", x): (1, x) for x in "1ijk"}
    mult.update({(x, "1"): (1, x) for x in "1ijk"})
    for x in "ijk":
        mult[(x, x)] = (-1, "1")
    mult.update({("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})

    def law(x, y):
        s, u = mult[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    return group_from_law([(s, u) for s in (1, -1) for u in "1ijk"], law, "Q8")


def find_isomorphism(G: FiniteGroup, H: FiniteGroup):
    """A bijective homomorphism G -> H as a list, or None."""
    if G.order != H.order:
        return None
    gens = G.generators()
    orders_h = [H.element_order(h) for h in range(H.order)]
    choices = [[h for h in range(H.order) if orders_h[h] == G.element_order(g)] for g in gens]
    for images in product(*choices):
        f = extend_homomorphism(G, H, gens, images)
        if f is not None and len(set(f)) == G.order:
            return f
    return None


def extend_homomorphism(G: FiniteGroup, H: FiniteGroup, gens, images):
    """The homomorphism sending gens to images, or None if there is none."""
    f = [-1] * G.order
    f[G.identity] = H.identity
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = G.mul(x, s)
                fy = H.mul(f[x], t)
                if f[y] == -1:
                    f[y] = fy
                    nxt.append(y)
                elif f[y] != fy:
                    return None
        frontier = nxt
    if -1 in f:
        return None
    for x in range(G.order):
        for y in range(G.order):
            if f[G.mul(x, y)] != H.mul(f[x], f[y]):
                return None
    return f


def is_homomorphism(G: FiniteGroup, H: FiniteGroup, f) -> bool:
    return all(f[G.mul(x, y)] == H.mul(f[x], f[y])
               for x in range(G.order) for y in range(G.order))


# -- cochains -----------------------------------------------------------------

@dataclass(eq=False)
class FiniteCochain:
    group: FiniteGroup
    degree: int
    modulus: int
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64) % self.modulus
        if v.shape != (self.group.order,) * self.degree:
            raise ValueError(f"values must have shape {(self.group.order,) * self.degree}")
        self.values = v

    def __call__(self, *gs) -> int:
        return int(self.values[gs])

    def _check(self, other: FiniteCochain):
        if other.group is not self.group or other.modulus != self.modulus:
            raise ValueError("cochains live on different groups or moduli")
        if other.degree != self.degree:
            raise ValueError("degrees differ")

    def __add__(self, other):
        self._check(other)
        return FiniteCochain(self.group, self.degree, self.modulus, self.values + other.values)

    def __sub__(self, other):
        self._check(other)
        return FiniteCochain(self.group, self.degree, self.modulus, self.values - other.values)

    def __neg__(self):
        return FiniteCochain(self.group, self.degree, self.modulus, -self.values)

    def scale(self, k: int) -> FiniteCochain:
        return FiniteCochain(self.group, self.degree, self.modulus, k * self.values)

    def __eq__(self, other):
        return (isinstance(other, FiniteCochain) and other.group is self.group
                and other.modulus == self.modulus and other.degree == self.degree
                and np.array_equal(self.values, other.values))

    def is_zero(self) -> bool:
        return not self.values.any()

    def pointwise(self, other: FiniteCochain) -> FiniteCochain:
        self._check(other)
        return FiniteCochain(self.group, self.degree, self.modulus, self.values * other.values)


def zero_cochain(G: FiniteGroup, degree: int, n: int) -> FiniteCochain:
    return FiniteCochain(G, degree, n, np.zeros((G.order,) * degree, dtype=np.int64))


def cochain_from_function(G: FiniteGroup, degree: int, n: int, f) -> FiniteCochain:
    vals = np.empty((G.order,) * degree, dtype=np.int64)
    for gs in product(range(G.order), repeat=degree):
        vals[gs] = f(*gs)
    return FiniteCochain(G, degree, n, vals)


def coboundary(f: FiniteCochain) -> FiniteCochain:
    """(df)(g1..g_{i+1}) = f(g2..) + sum_j (-1)^j f(.., g_j g_{j+1}, ..) + (-1)^{i+1} f(g1..g_i)."""
    G, i, v = f.group, f.degree, f.values
    N = G.order
    T = G.table
    shape = (N,) * (i + 1)
    grids = np.indices(shape)
    out = np.zeros(shape, dtype=np.int64)
    out += v[tuple(grids[1:])]
    for j in range(1, i + 1):
        args = [grids[k] for k in range(j - 1)]
        args.append(T[grids[j - 1], grids[j]])
        args.extend(grids[k] for k in range(j + 1, i + 1))
        out += (-1) ** j * v[tuple(args)]
    out += (-1) ** (i + 1) * v[tuple(grids[:i])]
    return FiniteCochain(G, i + 1, f.modulus, out)


def cup(f: FiniteCochain, g: FiniteCochain) -> FiniteCochain:
    """(f u g)(g1..g_{p+q}) = f(g1..g_p) * g(g_{p+1}..g_{p+q})."""
    if f.group is not g.group or f.modulus != g.modulus:
        raise ValueError("cochains live on different groups or moduli")
    return FiniteCochain(f.group, f.degree + g.degree, f.modulus,
                         np.multiply.outer(f.values, g.values))


# -- homomorphisms to Z/n -------------------------------------------------------

def characters(G: FiniteGroup, n: int) -> list[FiniteCochain]:
    """Every homomorphism G -> Z/n as a degree-1 cochain."""
    Zn = cyclic_group(n)
    gens = G.generators()
    out = []
    for images in product(range(n), repeat=len(gens)):
        f = extend_homomorphism(G, Zn, gens, images)
        if f is not None:
            out.append(FiniteCochain(G, 1, n, np.array(f)))
    return out


# -- linear algebra mod n ----------------------------------------------------------

def _solve_diagonal(d: int, c: int, n: int):
    """y with d*y = c mod n, or None."""
    g = gcd(d, n)
    if c % g:
        return None
    m = n // g
    if m == 1:
        return 0
    return (c // g) * pow(d // g, -1, m) % m


def _bezout(a: int, b: int):
    """(h, s, t) with s*a + t*b = h = gcd(a, b) over the integers."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


@dataclass
class ModSolution:
    """Solutions of A x = c mod n for each right-hand side column."""

    solutions: list
    rank: int
    certificates: list = field(default_factory=list)


def solve_mod(A, C, n: int) -> ModSolution:
    """Solve A x = c (mod n) for every column c of C.

    Unimodular integer row operations act on [A | C] and column operations
    on A are recorded in V; once A is diagonal each system decouples.  A
    missing solution comes with the index of the decoupled equation that
    has none, which certifies it because the operations are invertible.
    """
    A = np.array(A, dtype=np.int64) % n
    C = np.array(C, dtype=np.int64) % n
    if C.ndim == 1:
        C = C[:, None]
    m, k = A.shape
    V = np.eye(k, dtype=np.int64)
    r = 0
    while r < min(m, k):
        sub = A[r:, r:]
        nz = sub != 0
        if not nz.any():
            break
        g = np.where(nz, np.gcd(sub, n), n + 1)
        i, j = np.unravel_index(np.argmin(g), g.shape)
        i += r
        j += r
        if i != r:
            A[[r, i]] = A[[i, r]]
            C[[r, i]] = C[[i, r]]
        if j != r:
            A[:, [r, j]] = A[:, [j, r]]
            V[:, [r, j]] = V[:, [j, r]]
        while True:
            _clear_column(A, C, r, n)
            if not A[r, r + 1:].any():
                break
            _clear_row(A, V, r, n)
            if not A[r + 1:, r].any():
                break
        r += 1
    sols, certs = [], []
    for col in range(C.shape[1]):
        c = C[:, col]
        if c[r:].any():
            sols.append(None)
            certs.append(int(r + np.flatnonzero(c[r:])[0]))
            continue
        y = np.zeros(k, dtype=np.int64)
        bad = None
        for t in range(r):
            s = _solve_diagonal(int(A[t, t]), int(c[t]), n)
            if s is None:
                bad = t
                break
            y[t] = s
        if bad is not None:
            sols.append(None)
            certs.append(bad)
            continue
        sols.append(V @ y % n)
        certs.append(None)
    return ModSolution(sols, r, certs)


def _clear_column(A, C, r, n):
    a = int(A[r, r])
    ga = gcd(a, n)
    rows = np.flatnonzero(A[r + 1:, r]) + r + 1
    if rows.size == 0:
        return
    divisible = rows[A[rows, r] % ga == 0]
    if divisible.size:
        m = n // ga
        inv = pow(a // ga, -1, m) if m > 1 else 0
        f = (A[divisible, r] // ga) * inv % n
        A[divisible] = (A[divisible] - f[:, None] * A[r]) % n
        C[divisible] = (C[divisible] - f[:, None] * C[r]) % n
    for i in np.flatnonzero(A[r + 1:, r]) + r + 1:
        a, b = int(A[r, r]), int(A[i, r])
        h, s, t = _bezout(a, b)
        ra, rb = A[r].copy(), A[i].copy()
        ca, cb = C[r].copy(), C[i].copy()
        A[r] = (s * ra + t * rb) % n
        A[i] = ((-b // h) * ra + (a // h) * rb) % n
        C[r] = (s * ca + t * cb) % n
        C[i] = ((-b // h) * ca + (a // h) * cb) % n


def _clear_row(A, V, r, n):
    a = int(A[r, r])
    ga = gcd(a, n)
    cols = np.flatnonzero(A[r, r + 1:]) + r + 1
    if cols.size == 0:
        return
    divisible = cols[A[r, cols] % ga == 0]
    if divisible.size:
        m = n // ga
        inv = pow(a // ga, -1, m) if m > 1 else 0
        f = (A[r, divisible] // ga) * inv % n
        A[:, divisible] = (A[:, divisible] - A[:, [r]] * f[None, :]) % n
        V[:, divisible] = (V[:, divisible] - V[:, [r]] * f[None, :]) % n
    for j in np.flatnonzero(A[r, r + 1:]) + r + 1:
        a, b = int(A[r, r]), int(A[r, j])
        h, s, t = _bezout(a, b)
        ca, cb = A[:, r].copy(), A[:, j].copy()
        va, vb = V[:, r].copy(), V[:, j].copy()
        A[:, r] = (s * ca + t * cb) % n
        A[:, j] = ((-b // h) * ca + (a // h) * cb) % n
        V[:, r] = (s * va + t * vb) % n
        V[:, j] = ((-b // h) * va + (a // h) * vb) % n


def coboundary_matrix(G: FiniteGroup, degree: int, n: int) -> np.ndarray:
    """Matrix of d: C^degree -> C^(degree+1) on the flattened standard bases."""
    k = G.order**degree
    cols = []
    for idx in range(k):
        e = np.zeros(k, dtype=np.int64)
        e[idx] = 1
        f = FiniteCochain(G, degree, n, e.reshape((G.order,) * degree))
        cols.append(coboundary(f).values.reshape(-1))
    return np.stack(cols, axis=1) % n


def _check_size(G: FiniteGroup, degree: int):
    if G.order > MAX_GROUP_ORDER:
        raise ValueError(f"group order {G.order} exceeds {MAX_GROUP_ORDER}")
    if G.order ** (degree - 1) > MAX_UNKNOWNS:
        raise ValueError(f"C^{degree - 1} of a group of order {G.order} is too large")


def is_coboundary(c: FiniteCochain, check_cocycle: bool = True):
    """x with dx = c, or None when c is not a coboundary."""
    return are_coboundaries([c], check_cocycle)[0]


def are_coboundaries(cs, check_cocycle: bool = True, extra=()):
    """Solve dx = c for each c at once; extra cochains widen the image.

    With extra = (e1, .., em) the question becomes c in B + span(e_i), and a
    solution is (x, coefficients).
    """
    if not cs:
        return []
    c0 = cs[0]
    G, degree, n = c0.group, c0.degree, c0.modulus
    if degree < 2:
        raise ValueError("only degrees 2 and 3 are supported")
    _check_size(G, degree)
    for c in cs:
        c0._check(c)
        if check_cocycle and not coboundary(c).is_zero():
            raise NotACocycle("dc != 0")
    D = coboundary_matrix(G, degree - 1, n)
    if extra:
        D = np.concatenate([D] + [e.values.reshape(-1, 1) for e in extra], axis=1)
    rhs = np.stack([c.values.reshape(-1) for c in cs], axis=1)
    res = solve_mod(D, rhs, n)
    kx = G.order ** (degree - 1)
    out = []
    for sol in res.solutions:
        if sol is None:
            out.append(None)
            continue
        x = FiniteCochain(G, degree - 1, n, sol[:kx].reshape((G.order,) * (degree - 1)))
        if extra:
            out.append((x, [int(v) for v in sol[kx:]]))
        else:
            out.append(x)
    # every witness is re-checked against the definition
    for c, o in zip(cs, out):
        if o is None:
            continue
        x, coeffs = o if extra else (o, [])
        total = coboundary(x)
        for e, a in zip(extra, coeffs):
            total = total + e.scale(a)
        assert total == c, "solver produced a wrong witness"
    return out


def cohomologous(c1: FiniteCochain, c2: FiniteCochain) -> bool:
    return is_coboundary(c1 - c2) is not None


# -- Heisenberg data and the lifting obstruction ------------------------------------

@dataclass
class HeisenbergData:
    n: int
    group: FiniteGroup
    chi_a: FiniteCochain
    b: FiniteCochain
    chi_c: FiniteCochain


def heisenberg_data(n: int) -> HeisenbergData:
    D = heisenberg_group(n)
    coord = [np.array([lab[i] for lab in D.labels]) for i in range(3)]
    return HeisenbergData(n, D, *(FiniteCochain(D, 1, n, v) for v in coord))


def delta_phi(G: FiniteGroup, phi, n: int, section=None) -> FiniteCochain:
    """b-part of s(phi g1) s(phi g2) s(phi(g1 g2))^-1 for phi: G -> (Z/n)^2.

    phi lists (a, c) per element of G; section maps (a, c) to the chosen
    b of its lift, zero by default.
    """
    phi = [(int(a) % n, int(c) % n) for a, c in phi]
    for x in range(G.order):
        for y in range(G.order):
            a = (phi[x][0] + phi[y][0]) % n
            c = (phi[x][1] + phi[y][1]) % n
            if phi[G.mul(x, y)] != (a, c):
                raise NotAHomomorphism(f"phi fails on ({x}, {y})")
    if section is None:
        section = {}
    law = heisenberg_law(n)

    def lift(ac):
        return (ac[0], section.get(ac, 0) % n, ac[1])

    def inverse(h):
        a, b, c = h
        return ((-a) % n, (-b + a * c) % n, (-c) % n)

    def value(x, y):
        prod = law(law(lift(phi[x]), lift(phi[y])), inverse(lift(phi[G.mul(x, y)])))
        assert prod[0] == 0 and prod[2] == 0
        return prod[1]

    return cochain_from_function(G, 2, n, value)


def phi_characters(G: FiniteGroup, phi, n: int):
    chi1 = FiniteCochain(G, 1, n, np.array([a for a, _ in phi]))
    chi2 = FiniteCochain(G, 1, n, np.array([c for _, c in phi]))
    return chi1, chi2


def lift_exists(G: FiniteGroup, phi, n: int) -> bool:
    """Brute force: is there a homomorphism G -> D_n over phi?"""
    D = heisenberg_group(n)
    gens = G.generators()
    fibres = [[D.index((phi[g][0] % n, b, phi[g][1] % n)) for b in range(n)] for g in gens]
    for images in product(*fibres):
        f = extend_homomorphism(G, D, gens, images)
        if f is not None:
            return True
    return False


def homomorphisms_to_quotient(G: FiniteGroup, n: int):
    """Every homomorphism G -> (Z/n)^2 as a list of (a, c) pairs."""
    chis = characters(G, n)
    return [list(zip(x.values.tolist(), y.values.tolist())) for x in chis for y in chis]


# -- Massey products ------------------------------------------------------------------

@dataclass
class MasseyResult:
    value: FiniteCochain
    c12: FiniteCochain
    c23: FiniteCochain
    indeterminacy: list
    vanishes: bool


def massey(G: FiniteGroup, x1: FiniteCochain, x2: FiniteCochain, x3: FiniteCochain) -> MasseyResult:
    """c12 u x3 + x1 u c23 with dc12 = x1 u x2 and dc23 = x2 u x3.

    The class is only defined modulo x1 u H^1 + H^1 u x3; that subspace is
    returned as a list of cocycles, and vanishes records whether the value
    lies in coboundaries plus that subspace.
    """
    c12, c23 = are_coboundaries([cup(x1, x2), cup(x2, x3)])
    if c12 is None:
        raise CupNotTrivial(1, 2)
    if c23 is None:
        raise CupNotTrivial(2, 3)
    value = cup(c12, x3) + cup(x1, c23)
    if not coboundary(value).is_zero():
        raise AssertionError("Massey value is not a cocycle")
    hs = characters(G, x1.modulus)
    indet = [cup(x1, h) for h in hs] + [cup(h, x3) for h in hs]
    indet = [c for c in indet if not c.is_zero()]
    vanishes = are_coboundaries([value], check_cocycle=False, extra=indet)[0] is not None
    return MasseyResult(value, c12, c23, indet, vanishes)


# -- sweeps used by tests and the command line ------------------------------------------

def lifting_sweep(ns=(2, 3)):
    """(G, phi, lifts, obstruction vanishes) for every phi on Z/n."""
    out = []
    for n in ns:
        G = cyclic_group(n)
        for phi in homomorphisms_to_quotient(G, n):
            lifts = lift_exists(G, phi, n)
            vanishes = is_coboundary(delta_phi(G, phi, n)) is not None
            out.append((G.name, phi, lifts, vanishes))
    return out


def cup_obstruction_sweep(ns=(2, 3), sections=None):
    """(n, phi, section index, holds) over G = (Z/n)^2 and every phi."""
    out = []
    for n in ns:
        G = elementary_abelian(n, 2)
        secs = sections(n) if sections else [None]
        for phi in homomorphisms_to_quotient(G, n):
            chi1, chi2 = phi_characters(G, phi, n)
            cands = [delta_phi(G, phi, n, s) - cup(chi1, chi2) for s in secs]
            sols = are_coboundaries(cands)
            for k, sol in enumerate(sols):
                out.append((n, phi, k, sol is not None))
    return out


def small_groups():
    """A spread of groups of order at most 27."""
    gs = [cyclic_group(m) for m in range(1, 28)]
    gs += [elementary_abelian(2, 2), elementary_abelian(2, 3), elementary_abelian(2, 4),
           elementary_abelian(3, 2), elementary_abelian(3, 3),
           direct_product(cyclic_group(2), cyclic_group(4)),
           direct_product(cyclic_group(3), cyclic_group(6)),
           direct_product(cyclic_group(2), cyclic_group(6)),
           heisenberg_group(2), heisenberg_group(3), quaternion_group()]
    gs += [dihedral_group(m) for m in range(3, 14)]
    return gs


def alternating_identity_holds(G: FiniteGroup, n: int) -> bool:
    chis = characters(G, n)
    for u in chis:
        for v in chis:
            if not (cup(u, v) + cup(v, u) + coboundary(u.pointwise(v))).is_zero():
                return False
    return True


def triple_cup(x, y, z) -> FiniteCochain:
    return cup(cup(x, y), z)
