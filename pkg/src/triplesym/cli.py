"""triplesym command line: redei, cubic, scan, verify.

Exit codes: 0 success, 1 internal error or failed suite, 2 inadmissible
input, 3 no theta found.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import cochain, cubic, redei
from .cache import BetaCache, CacheCorrupt
from .eisenstein import EisensteinInteger, NotOneModNine

EXIT_OK, EXIT_INTERNAL, EXIT_INADMISSIBLE, EXIT_NO_THETA = 0, 1, 2, 3
MAX_SCAN_BOUND = 10**4
CSV_HEADER = "p1,p2,p3,exponent,symbol,verified"


@dataclass
class ResultRecord:
    n: int
    triple: list
    exponent: int
    rendered: str
    verified: bool
    fallbacks: list = field(default_factory=list)
    cohomological_exponent: int | None = None
    cohomological_rendered: str | None = None

    def __post_init__(self):
        if redei.SymbolValue(self.exponent, self.n).rendered() != self.rendered:
            raise ValueError("rendered does not match exponent")

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> ResultRecord:
        return cls(**json.loads(text))

    def text(self) -> str:
        tag = "verified" if self.verified else "unverified"
        line = f"{self.triple}: {self.rendered} (exponent {self.exponent}, {tag})"
        if self.cohomological_exponent is not None:
            line += (f"; cohomological {self.cohomological_rendered}"
                     f" (exponent {self.cohomological_exponent})")
        for note in self.fallbacks:
            line += f"\n  note: {note}"
        return line


class Rejected(Exception):
    """Inadmissible input; carries the machine-readable reason."""

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


def _fail(reason, message, as_json):
    if as_json:
        print(json.dumps({"error": reason, "message": message}, sort_keys=True))
    else:
        print(f"error: {reason}: {message}", file=sys.stderr)


# -- redei ------------------------------------------------------------------

def redei_record(p1, p2, p3, verify=False, cache=None) -> ResultRecord:
    try:
        t = redei.admissible2(p1, p2, p3)
    except redei.Inadmissible as exc:
        raise Rejected(exc.reason, str(exc)) from None
    except (ValueError, TypeError) as exc:
        raise Rejected("NotAnOddPrime", str(exc)) from None
    beta = redei.beta_for(t.p1, t.p2, cache)
    value = redei.redei_symbol(t, beta)
    verified = False
    notes = list(value.fallbacks)
    if verify:
        check = redei.oracle_symbol2(t, beta)
        notes.extend(check.fallbacks)
        if check != value:
            raise RuntimeError(f"oracle disagrees on {t.as_ints()}")
        verified = True
    return ResultRecord(2, list(t.as_ints()), value.exponent, value.rendered(), verified, notes)


def cmd_redei(args) -> int:
    cache = None if args.no_cache else BetaCache()
    rec = redei_record(args.p1, args.p2, args.p3, args.verify, cache)
    if cache is not None:
        cache.flush()
    print(rec.to_json() if args.json else rec.text())
    return EXIT_OK


# -- cubic ------------------------------------------------------------------

def _parse_prime(text: str):
    if "," in text:
        a, b = text.split(",")
        return EisensteinInteger(int(a), int(b))
    return int(text)


def cubic_record(q1, q2, q3, theta_file=None, bound=cubic.DEFAULT_SEARCH_BOUND) -> ResultRecord:
    try:
        t = cubic.admissible3(q1, q2, q3)
    except NotOneModNine as exc:
        raise Rejected("NotOneModNine", str(exc)) from None
    except redei.Inadmissible as exc:
        raise Rejected(exc.reason, str(exc)) from None
    except ValueError as exc:
        raise Rejected("NotAPrime", str(exc)) from None
    if theta_file is not None:
        theta = None
        for pi1, pi2, th in cubic.load_theta_file(theta_file):
            if (pi1, pi2) == (t.pi1.pi, t.pi2.pi):
                theta = th
        if theta is None:
            raise Rejected("ThetaRejected", "theta file has no entry for this (pi1, pi2)")
        if not cubic.verify_theta(theta, t.pi1, t.pi2):
            notes = cubic.check_theta(theta, t.pi1, t.pi2).notes
            raise Rejected("ThetaRejected", "; ".join(notes))
    else:
        if not (t.pi1.is_rational() and t.pi2.is_rational()):
            raise Rejected("OutOfScope", "theta search needs rational pi1, pi2; pass --theta")
        theta = cubic.theta_search(t.pi1, t.pi2, bound)
    value = cubic.cubic_triple_symbol(t, theta)
    verdict = cubic.oracle_split3(t, theta)
    if (verdict == "trivial") != (value.exponent == 0):
        raise RuntimeError("splitting oracle disagrees with the residue evaluation")
    coh = value.inverse()
    triple = [str(p.pi) for p in t.primes()]
    return ResultRecord(3, triple, value.exponent, value.rendered(), True,
                        list(value.fallbacks), coh.exponent, coh.rendered())


def cmd_cubic(args) -> int:
    rec = cubic_record(_parse_prime(args.q1), _parse_prime(args.q2), _parse_prime(args.q3),
                       args.theta, args.search_bound)
    print(rec.to_json() if args.json else rec.text())
    return EXIT_OK


# -- scan -------------------------------------------------------------------

def _scan_chunk(task):
    (p1, p2), thirds, cached = task
    beta = redei.RedeiBeta(*cached, redei.OddPrime(p1), redei.OddPrime(p2)) if cached else None
    if beta is None:
        beta = redei.beta_for(p1, p2)
    rows = []
    for p3 in thirds:
        t = redei.admissible2(p1, p2, p3)
        value = redei.redei_symbol(t, beta)
        check = redei.oracle_symbol2(t, beta)
        rows.append((p1, p2, p3, value.exponent, value.rendered(), check == value))
    return (p1, p2), beta.triple, rows


def scan_rows(bound: int, jobs: int = 1, cache=None):
    triples = redei.admissible_triples(bound) if bound >= 5 else []
    groups: dict = {}
    for a, b, c in triples:
        groups.setdefault((a, b), []).append(c)
    tasks = []
    for key, thirds in groups.items():
        hit = cache.get(key) if cache is not None else None
        tasks.append((key, thirds, hit.triple if hit is not None else None))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_chunk, tasks, chunksize=8))
    else:
        results = [_scan_chunk(t) for t in tasks]
    rows = []
    for (p1, p2), triple, chunk in results:
        if cache is not None:
            cache.put((p1, p2), redei.RedeiBeta(*triple, redei.OddPrime(p1), redei.OddPrime(p2)))
        rows.extend(chunk)
    return rows


def render_scan(rows, fmt: str) -> str:
    if fmt == "csv":
        lines = [CSV_HEADER]
        lines += [f"{a},{b},{c},{e},{s},{'true' if v else 'false'}" for a, b, c, e, s, v in rows]
        return "\n".join(lines) + "\n"
    recs = [ResultRecord(2, [a, b, c], e, s, v).to_dict() for a, b, c, e, s, v in rows]
    return json.dumps(recs, sort_keys=True) + "\n"


def cmd_scan(args) -> int:
    if args.n != 2:
        raise Rejected("UnsupportedModulus", "scan supports --n 2 only")
    if args.bound > MAX_SCAN_BOUND:
        raise Rejected("BoundTooLarge", f"bound must be at most {MAX_SCAN_BOUND}")
    cache = None if args.no_cache else BetaCache()
    rows = scan_rows(args.bound, args.jobs, cache)
    if cache is not None:
        cache.flush()
    sys.stdout.write(render_scan(rows, args.out))
    sys.stdout.flush()
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def _suite_lifting():
    for name, phi, lifts, vanishes in cochain.lifting_sweep():
        if lifts != vanishes:
            return f"{name}, phi = {phi}: lift {lifts} but obstruction vanishes {vanishes}"
    return None


def _suite_obstruction():
    for n, phi, k, holds in cochain.cup_obstruction_sweep(sections=_sections):
        if not holds:
            return f"n = {n}, phi = {phi}, section #{k}"
    return None


def _sections(n):
    """Zero section plus the sections b = a*c and b = 1 on (1, 0)."""
    pairs = [(a, c) for a in range(n) for c in range(n)]
    return [None, {ac: ac[0] * ac[1] for ac in pairs}, {(1, 0): 1}]


def _suite_alternating():
    for G in cochain.small_groups():
        for n in (2, 3):
            if not cochain.alternating_identity_holds(G, n):
                return f"{G.name}, n = {n}"
    return None


def _suite_reciprocity(bound=300):
    for t in redei.admissible_triples(bound):
        if not redei.all_permutations_agree(redei.admissible2(*t)):
            return f"permutations of {t} disagree"
    return None


def _suite_oracle(bound=300):
    for t in redei.admissible_triples(bound):
        tt = redei.admissible2(*t)
        if redei.redei_symbol(tt) != redei.oracle_symbol2(tt):
            return f"oracle disagrees on {t}"
    return None


SUITES = {
    "lemma1": _suite_lifting,
    "lemma2": _suite_obstruction,
    "alternating": _suite_alternating,
    "reciprocity": _suite_reciprocity,
    "oracle": _suite_oracle,
}


def cmd_verify(args) -> int:
    failure = SUITES[args.suite]()
    if failure is None:
        print(f"{args.suite}: pass")
        return EXIT_OK
    print(f"{args.suite}: FAIL: {failure}")
    return EXIT_INTERNAL


# -- entry point -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="triplesym", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("redei", help="quadratic triple symbol [p1, p2, p3]")
    for name in ("p1", "p2", "p3"):
        r.add_argument(name, type=int)
    r.add_argument("--json", action="store_true")
    r.add_argument("--verify", action="store_true", help="cross-check with the splitting oracle")
    r.add_argument("--no-cache", action="store_true")
    r.set_defaults(func=cmd_redei)

    c = sub.add_parser("cubic", help="cubic triple symbol; primes as q or a,b")
    for name in ("q1", "q2", "q3"):
        c.add_argument(name)
    c.add_argument("--theta", metavar="FILE")
    c.add_argument("--search-bound", type=int, default=cubic.DEFAULT_SEARCH_BOUND)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_cubic)

    s = sub.add_parser("scan", help="tabulate Redei symbols below a bound")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--out", choices=("csv", "json"), default="csv")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-cache", action="store_true")
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", help="run an invariant sweep")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        return args.func(args)
    except Rejected as exc:
        _fail(exc.reason, str(exc), as_json)
        return EXIT_INADMISSIBLE
    except cubic.ThetaNotFound as exc:
        _fail("ThetaNotFound", f"{exc} (bound {exc.bound})", as_json)
        return EXIT_NO_THETA
    except CacheCorrupt as exc:
        _fail("CacheCorrupt", str(exc), as_json)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - the exit-code contract needs a catch-all
        _fail("InternalError", f"{type(exc).__name__}: {exc}", as_json)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
