"""Versioned JSON cache for computed orbit posets.

The on-disk schema is {version, family, p/q or n, convention, orbits,
dims, covers}; orbits are canonical clan strings and covers carry their
1-based root label or null for completion edges.  Loading validates the
schema and rebuilds reachability; a failed check raises rather than
returning a bad poset.
"""

from __future__ import annotations

import json
from pathlib import Path

from .clans import parse_clan
from .closure import OrbitPoset
from .errors import CorruptCache, VersionMismatch

CACHE_VERSION = 1


def poset_to_dict(poset: OrbitPoset) -> dict:
    return {
        "version": CACHE_VERSION,
        **poset.meta,
        "orbits": [str(c) for c in poset.orbits],
        "dims": list(poset.dims),
        "covers": [{"lo": lo, "hi": hi, "root": root} for lo, hi, root in poset.covers],
    }


def poset_from_dict(data: dict) -> OrbitPoset:
    version = data.get("version")
    if version != CACHE_VERSION:
        raise VersionMismatch(f"cache version {version}, expected {CACHE_VERSION}")
    try:
        orbits = [parse_clan(s) for s in data["orbits"]]
        dims = [int(d) for d in data["dims"]]
        covers = [(e["lo"], e["hi"], e["root"]) for e in data["covers"]]
        meta = {
            k: v
            for k, v in data.items()
            if k not in ("version", "orbits", "dims", "covers")
        }
        if len(orbits) != len(set(orbits)) or len(orbits) != len(dims):
            raise ValueError("orbit list malformed")
        poset = OrbitPoset(meta, orbits, dims, covers)
        poset.validate()
    except VersionMismatch:
        raise
    except Exception as exc:
        raise CorruptCache(f"cache did not validate: {exc}") from exc
    return poset


def cache_key(meta: dict) -> str:
    if meta.get("family") == "d":
        core = f"d-n{meta['n']}-{meta.get('convention', 'paper')}"
    else:
        core = f"{meta['family']}-p{meta['p']}-q{meta['q']}"
    if meta.get("level"):
        core += f"-{meta['level']}"
    return core + ".json"


def save_poset(poset: OrbitPoset, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(poset_to_dict(poset), sort_keys=True))
    return path


def load_poset(path: str | Path) -> OrbitPoset:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CorruptCache(f"unreadable cache file {path}: {exc}") from exc
    return poset_from_dict(data)


def load_or_build(family, cache_dir: str | Path | None):
    """Fetch the family's poset from the cache directory, building and
    storing it on a miss."""
    from .closure import build_poset

    if cache_dir is None:
        return build_poset(family)
    path = Path(cache_dir) / cache_key(family.meta())
    if path.exists():
        return load_poset(path)
    poset = build_poset(family)
    save_poset(poset, path)
    return poset
