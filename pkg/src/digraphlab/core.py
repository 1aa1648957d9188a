"""Digraph values, homomorphism witnesses, and their serialization.

Vertices are dense integers 0..n-1.  Constructions that produce structured
vertices (tuples, functions) flatten them to integers in lexicographic order
and keep the original objects in a label table for witness reporting.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence


class ConstructionError(ValueError):
    """Malformed construction arguments (bad endpoints, non-tree input, ...)."""


class SizeLimitExceeded(RuntimeError):
    """A construction or search refused to run past a configured size limit."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


@dataclass(frozen=True, eq=False)
class Digraph:
    """Immutable digraph with a sorted, duplicate-free arc tuple.

    Equality and hashing use ``(n, arcs)`` only; ``name`` and ``labels`` are
    provenance metadata.  ``labels``, when present, maps each vertex id to the
    structured object (tuple, function table, ...) it was flattened from.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]
    name: Optional[str] = None
    labels: Optional[tuple] = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Digraph{tag} n={self.n} arcs={len(self.arcs)}>"

    @cached_property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)

    @cached_property
    def out_sets(self) -> tuple[frozenset[int], ...]:
        outs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            outs[u].add(v)
        return tuple(frozenset(s) for s in outs)

    @cached_property
    def in_sets(self) -> tuple[frozenset[int], ...]:
        ins: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            ins[v].add(u)
        return tuple(frozenset(s) for s in ins)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.arcs)

    def rename(self, name: Optional[str]) -> "Digraph":
        return Digraph(self.n, self.arcs, name, self.labels)

    def label_of(self, v: int):
        return self.labels[v] if self.labels is not None else v


def make_digraph(
    n: int,
    arcs: Iterable[tuple[int, int]],
    name: Optional[str] = None,
    labels: Optional[Sequence] = None,
) -> Digraph:
    """Build a digraph, deduplicating and sorting the arc list.

    Loops (u, u) are allowed; endpoints outside 0..n-1 are a construction
    error.
    """
    if n < 0:
        raise ConstructionError(f"vertex count must be >= 0, got {n}")
    seen = set()
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise ConstructionError(f"arc ({u},{v}) has endpoint outside 0..{n - 1}")
        seen.add((int(u), int(v)))
    tab = tuple(labels) if labels is not None else None
    if tab is not None and len(tab) != n:
        raise ConstructionError(f"label table has {len(tab)} entries for {n} vertices")
    return Digraph(n, tuple(sorted(seen)), name, tab)


def symmetrize(g: Digraph) -> Digraph:
    """Close the arc set under reversal; the vertex set is unchanged."""
    closed = set(g.arcs)
    closed.update((v, u) for u, v in g.arcs)
    name = f"sym({g.name})" if g.name else None
    return Digraph(g.n, tuple(sorted(closed)), name, g.labels)


def is_symmetric(g: Digraph) -> bool:
    return all((v, u) in g.arc_set for u, v in g.arcs)


def induced(g: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subgraph induced by ``vertices``, relabelled in sorted order to 0..|S|-1."""
    sub = sorted(set(vertices))
    for v in sub:
        if not (0 <= v < g.n):
            raise ConstructionError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(sub)}
    arcs = [(index[u], index[v]) for u, v in g.arcs if u in index and v in index]
    labels = tuple(g.labels[v] for v in sub) if g.labels is not None else None
    return make_digraph(len(sub), arcs, name=None, labels=labels)


@dataclass(frozen=True)
class Hom:
    """A vertex map witnessing a homomorphism; map[u] is the image of u."""

    map: tuple[int, ...]
    source: Optional[str] = None
    target: Optional[str] = None

    def __len__(self) -> int:
        return len(self.map)

    def __getitem__(self, u: int) -> int:
        return self.map[u]


def validate_hom(h: Hom, g: Digraph, h_graph: Digraph) -> bool:
    """True iff every arc of ``g`` maps to an arc of ``h_graph``."""
    if len(h.map) != g.n:
        raise ValueError(f"map length {len(h.map)} != |V| = {g.n}")
    if any(not (0 <= x < h_graph.n) for x in h.map):
        return False
    target = h_graph.arc_set
    return all((h.map[u], h.map[v]) in target for u, v in g.arcs)


# --- serialization -----------------------------------------------------------
#
# JSON digraph format: {"n": <int>, "arcs": [[u,v],...], "name": <string?>}
# with arcs sorted lexicographically.  The format is exact and versionless;
# labels are in-memory metadata and are not serialized.


def to_json_dict(g: Digraph) -> dict:
    d: dict = {"n": g.n, "arcs": [[u, v] for u, v in g.arcs]}
    if g.name is not None:
        d["name"] = g.name
    return d


def to_json(g: Digraph) -> str:
    return json.dumps(to_json_dict(g), separators=(",", ":"))


def from_json_dict(d: dict) -> Digraph:
    if not isinstance(d, dict) or "n" not in d or "arcs" not in d:
        raise ConstructionError("digraph JSON needs 'n' and 'arcs' keys")
    arcs = [(int(u), int(v)) for u, v in d["arcs"]]
    return make_digraph(int(d["n"]), arcs, name=d.get("name"))


def from_json(text: str) -> Digraph:
    return from_json_dict(json.loads(text))


def hom_to_json_dict(h: Hom, target: Optional[Digraph] = None) -> dict:
    d: dict = {"map": list(h.map)}
    if h.source is not None:
        d["source"] = h.source
    if h.target is not None:
        d["target"] = h.target
    if target is not None and target.labels is not None:
        d["decoded"] = [_jsonable(target.labels[x]) for x in h.map]
    return d


def _jsonable(label):
    if isinstance(label, tuple):
        return [_jsonable(x) for x in label]
    return label


def to_dot(g: Digraph, collapse_symmetric: bool = False) -> str:
    """DOT export.  With ``collapse_symmetric``, mutual arc pairs are drawn
    once as undirected edges."""
    lines = ["digraph {"]
    if g.name:
        lines.append(f'  label="{g.name}";')
    for v in range(g.n):
        lines.append(f"  {v};")
    drawn = set()
    for u, v in g.arcs:
        if collapse_symmetric and u != v and (v, u) in g.arc_set:
            if (v, u) in drawn:
                continue
            lines.append(f"  {u} -> {v} [dir=none];")
        else:
            lines.append(f"  {u} -> {v};")
        drawn.add((u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"
