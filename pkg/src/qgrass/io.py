"""JSON wire formats: families, sequence traces."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import DimensionMismatch, RankDeficient
from .families import Family, SequenceTrace
from .subspace import Ambient, Subspace, canonicalize

__all__ = [
    "family_to_dict",
    "family_from_dict",
    "dump_family",
    "load_family",
    "load_family_listing",
    "trace_to_dict",
    "dumps",
]


def dumps(obj: Any) -> str:
    """Deterministic JSON text (fixed key order, trailing newline)."""
    return json.dumps(obj, indent=2) + "\n"


def family_to_dict(fam: Family) -> dict:
    return {
        "q": fam.ambient.q,
        "n": fam.ambient.n,
        "k": fam.k,
        "subspaces": [m.rows() for m in fam.members],
    }


def _subspaces_from_dict(d: dict) -> tuple[Ambient, int, list[Subspace]]:
    for key in ("q", "n", "k", "subspaces"):
        if key not in d:
            raise DimensionMismatch(f"family JSON lacks {key!r}")
    amb = Ambient(int(d["q"]), int(d["n"]))
    k = int(d["k"])
    subs = []
    for i, rows in enumerate(d["subspaces"]):
        s = canonicalize(amb, rows)
        if s.dim != k or len(rows) != k:
            raise RankDeficient(f"subspace #{i} has {len(rows)} rows of rank {s.dim}, expected {k}")
        subs.append(s)
    return amb, k, subs


def family_from_dict(d: dict) -> Family:
    """Canonicalize every listed basis; rank-deficient entries are rejected."""
    amb, k, subs = _subspaces_from_dict(d)
    return Family(amb, k, subs)


def dump_family(fam: Family, path: str | Path) -> None:
    Path(path).write_text(dumps(family_to_dict(fam)))


def load_family(path: str | Path) -> Family:
    return family_from_dict(json.loads(Path(path).read_text()))


def load_family_listing(path: str | Path) -> tuple[Family, list[Subspace]]:
    """Family plus the canonical subspaces in file order (for index lookups)."""
    amb, k, subs = _subspaces_from_dict(json.loads(Path(path).read_text()))
    return Family(amb, k, subs), subs


def _index_of(listing: list[Subspace]) -> dict[Subspace, int]:
    idx: dict[Subspace, int] = {}
    for i, s in enumerate(listing):
        idx.setdefault(s, i)
    return idx


def trace_to_dict(trace: SequenceTrace, f_listing: list[Subspace], g_listing: list[Subspace],
                  validation: dict[str, bool] | None = None) -> dict:
    """Serialize a trace with member indices into the two family files."""
    fi, gi = _index_of(f_listing), _index_of(g_listing)
    out = {
        "t": trace.t,
        "m": trace.m,
        "f_seq": [fi[s] for s in trace.f_seq],
        "g_seq": [gi[s] for s in trace.g_seq],
        "survivors": list(trace.survivors),
        "cover_witness": None if trace.cover_witness is None else fi[trace.cover_witness],
    }
    if validation is not None:
        out["properties"] = validation
    return out
