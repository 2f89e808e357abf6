"""On-disk JSON cache of normalized beta values, keyed "p1,p2"."""

from __future__ import annotations

import json
import os
from pathlib import Path

from filelock import FileLock

from .conic import RedeiBeta, verify_beta
from .modarith import OddPrime

ENV_VAR = "TRIPLESYM_BETA_CACHE"


class CacheCorrupt(RuntimeError):
    pass


def default_cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_DATA_HOME") or Path.home() / ".local" / "share"
    return Path(base) / "triplesym" / "beta_cache.json"


class BetaCache:
    """Loads and checks every entry up front; writes happen in flush()."""

    def __init__(self, path=None):
        self.path = Path(path) if path is not None else default_cache_path()
        self.entries: dict[tuple[int, int], RedeiBeta] = {}
        self.dirty = False
        if self.path.exists():
            self._load()

    def _load(self):
        try:
            raw = json.loads(self.path.read_text())
        except (OSError, ValueError) as exc:
            raise CacheCorrupt(f"{self.path}: unreadable cache ({exc})") from None
        if not isinstance(raw, dict):
            raise CacheCorrupt(f"{self.path}: top level must be an object")
        for key, val in raw.items():
            try:
                p1, p2 = (int(s) for s in key.split(","))
                beta = RedeiBeta(int(val["x"]), int(val["y"]), int(val["z"]),
                                 OddPrime(p1), OddPrime(p2))
            except (ValueError, TypeError, KeyError) as exc:
                raise CacheCorrupt(f"{self.path}: malformed entry {key!r} ({exc})") from None
            if not verify_beta(beta):
                raise CacheCorrupt(f"{self.path}: entry {key!r} fails the beta conditions")
            self.entries[(p1, p2)] = beta

    def get(self, key):
        return self.entries.get((int(key[0]), int(key[1])))

    def put(self, key, beta: RedeiBeta):
        key = (int(key[0]), int(key[1]))
        if key not in self.entries:
            self.entries[key] = beta
            self.dirty = True

    def to_json(self) -> dict:
        return {f"{p1},{p2}": {"x": b.x, "y": b.y, "z": b.z}
                for (p1, p2), b in sorted(self.entries.items())}

    def flush(self):
        if not self.dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with FileLock(str(self.path) + ".lock"):
            merged = dict(self.entries)
            if self.path.exists():
                # keep what other writers added since we loaded
                other = BetaCache.__new__(BetaCache)
                other.path, other.entries, other.dirty = self.path, {}, False
                other._load()
                merged = {**other.entries, **merged}
            self.entries = merged
            tmp = self.path.with_suffix(".tmp")
            tmp.write_text(json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n")
            os.replace(tmp, self.path)
        self.dirty = False
