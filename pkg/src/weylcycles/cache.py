"""On-disk cache of Weyl divisor catalogs, keyed by (n, s).

Files hold the class list plus a sha256 of its canonical JSON; a file whose
hash does not match is ignored and rewritten.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from . import weyl
from .lattice import DivisorClass

log = logging.getLogger(__name__)

ENV_VAR = "WEYLCYCLES_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "weylcycles"


def _digest(rows: list[list[int]]) -> str:
    blob = json.dumps(rows, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def cache_file(n: int, s: int, cache_dir: Path | None = None) -> Path:
    return Path(cache_dir or default_cache_dir()) / f"divisors_n{n}_s{s}.json"


def load_divisor_catalog(n: int, s: int, cache_dir: Path | None = None) -> weyl.WeylDivisorCatalog:
    """Catalog for (n, s), read from the cache when valid, otherwise computed
    and written back. The result is also installed as the in-process catalog."""
    path = cache_file(n, s, cache_dir)
    if path.exists():
        try:
            obj = json.loads(path.read_text())
            rows = obj["classes"]
            if obj.get("sha256") == _digest(rows) and (obj["n"], obj["s"]) == (n, s):
                cat = weyl.catalog_from_classes(
                    n, s, [DivisorClass(n, s, r[0], tuple(r[1:])) for r in rows])
                weyl.install_divisor_catalog(cat)
                return cat
            log.warning("cache file %s failed its integrity check; recomputing", path)
        except (OSError, ValueError, KeyError):
            log.warning("unreadable cache file %s; recomputing", path)
    cat = weyl.weyl_divisor_orbit(n, s)
    rows = [list(D.vector()) for D in cat.classes]
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"n": n, "s": s, "classes": rows, "sha256": _digest(rows)}))
    except OSError as exc:
        log.warning("could not write cache %s: %s", path, exc)
    return cat
