"""Bundled catalog of graphs with published residue rows.

Entries are named P_<loops>_<k> following the census naming of 4-regular
(completed) graphs.  Graphs through 7 loops, plus the 8-loop circulants,
carry explicit completed edge lists; the remaining 8-loop entries are
row-data-only (their adjacency is not reconstructible from the name
alone).  The JSON payload is integrity-checked against the bundled
CHECKSUMS file at load time.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .expressions import BinomialSumExpr, parse_expr
from .graphs import OrientedGraph, build_graph, decomplete
from .sequences import EgpSequence, sequence_from_row

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "load_catalog",
    "get_entry",
    "entry_names",
    "nonprimitive_4regular",
    "certificates",
    "load_expression",
]


class CatalogError(ValueError):
    """Catalog data missing, corrupt, or queried for an absent entry."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    loops: int
    calV: int
    calE: int
    row: dict[int, int]
    completed_vertices: int | None = None
    completed_edges: tuple[tuple[int, int], ...] | None = None
    relations: dict[str, object] = field(default_factory=dict)
    symmetry_zero: bool | None = None
    expression_file: str | None = None
    completed_expression_file: str | None = None
    eta_product: str | None = None
    common_names: dict[str, str] = field(default_factory=dict)

    @property
    def has_edges(self) -> bool:
        return self.completed_edges is not None

    def completed_graph(self) -> OrientedGraph:
        """The 4-regular completed graph (special vertex 0 by convention)."""
        if not self.has_edges:
            raise CatalogError(f"entry {self.name} has no stored edges")
        return build_graph(list(self.completed_edges), self.completed_vertices, 0)

    def decompletion(self, vertex: int | None = None) -> OrientedGraph:
        """Delete one vertex of the completed graph (default: the last)."""
        g = self.completed_graph()
        if vertex is None:
            vertex = g.vertex_count - 1
        return decomplete(g, vertex)

    def row_sequence(self) -> EgpSequence:
        """The stored residue row as a canonical sequence."""
        return sequence_from_row(self.name, self.calV, self.calE, self.row)


def _data_bytes(filename: str) -> bytes:
    ref = resources.files("egperm.data") / filename
    try:
        return ref.read_bytes()
    except FileNotFoundError as exc:
        raise CatalogError(f"bundled data file {filename} is missing") from exc


@lru_cache(maxsize=1)
def _raw_catalog() -> dict:
    payload = _data_bytes("catalog.json")
    digest = hashlib.sha256(payload).hexdigest()
    recorded = None
    for line in _data_bytes("CHECKSUMS").decode().splitlines():
        parts = line.split()
        if len(parts) == 2 and parts[1] == "catalog.json":
            recorded = parts[0]
    if recorded is None:
        raise CatalogError("CHECKSUMS has no record for catalog.json")
    if recorded != digest:
        raise CatalogError(
            f"catalog.json checksum mismatch: {digest} != recorded {recorded}")
    return json.loads(payload)


def _entry_from_json(obj: dict) -> CatalogEntry:
    completed = obj.get("completed")
    return CatalogEntry(
        name=obj["name"],
        loops=obj["loops"],
        calV=obj["calV"],
        calE=obj["calE"],
        row={int(p): r for p, r in obj["row"].items()},
        completed_vertices=completed["vertices"] if completed else None,
        completed_edges=tuple(tuple(e) for e in completed["edges"]) if completed else None,
        relations=obj.get("relations", {}),
        symmetry_zero=obj.get("symmetry_zero"),
        expression_file=obj.get("expression"),
        completed_expression_file=obj.get("completed_expression"),
        eta_product=obj.get("eta_product"),
        common_names=obj.get("common_names", {}),
    )


@lru_cache(maxsize=1)
def load_catalog() -> tuple[CatalogEntry, ...]:
    return tuple(_entry_from_json(o) for o in _raw_catalog()["entries"])


def entry_names() -> list[str]:
    return [e.name for e in load_catalog()]


def get_entry(name: str) -> CatalogEntry:
    for e in load_catalog():
        if e.name == name:
            return e
    raise CatalogError(f"no catalog entry named {name!r}")


def nonprimitive_4regular() -> list[OrientedGraph]:
    """Connected non-primitive 4-regular graphs on 7..9 vertices."""
    out = []
    for obj in _raw_catalog()["nonprimitive_4regular"]:
        out.append(build_graph([tuple(e) for e in obj["edges"]], obj["vertices"], 0))
    return out


def certificates() -> dict:
    """Frozen twist-cut and planar-rotation witnesses for the 7-loop pairs."""
    return _raw_catalog()["certificates"]


def load_expression(filename: str, calV: int = 2) -> BinomialSumExpr:
    ref = resources.files("egperm.data") / "expressions" / filename
    try:
        text = ref.read_text()
    except FileNotFoundError as exc:
        raise CatalogError(f"expression file {filename} is missing") from exc
    return parse_expr(text, calV)
