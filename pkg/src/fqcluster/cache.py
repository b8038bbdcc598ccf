"""On-disk cache of computed polynomials, one JSON file per cell."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .cluster import as_pattern_set
from .series import Polynomial

CACHE_VERSION = 1
ENV_VAR = "FQCLUSTER_CACHE_DIR"


def cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    path = explicit or os.environ.get(ENV_VAR)
    return Path(path) if path else None


def cell_key(gamma, n: int, family: str, s, method: str) -> dict:
    return {"pattern": [list(p) for p in as_pattern_set(gamma).patterns], "n": n, "family": family,
            "s": "symbolic" if s is None else s, "method": method}


def _path(root: Path, key: dict) -> Path:
    digest = hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()[:24]
    return root / f"{digest}.json"


def load(root: Path | None, key: dict) -> Polynomial | None:
    if root is None:
        return None
    path = _path(root, key)
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("version") != CACHE_VERSION or data.get("key") != key:
        return None
    return Polynomial.from_json(data["coeffs"])


def store(root: Path | None, key: dict, poly: Polynomial) -> None:
    if root is None:
        return
    root.mkdir(parents=True, exist_ok=True)
    path = _path(root, key)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"version": CACHE_VERSION, "key": key, "coeffs": poly.to_json()}))
    tmp.replace(path)
