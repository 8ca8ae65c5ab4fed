"""Core data model for temporal graphs.

A temporal graph is an undirected graph on vertices ``0..n-1`` whose edges
carry finite non-empty sets of integer presence times (labels).  A contact is
one (edge, time) pair.  Everything downstream (closures, transforms, spanner
and component search) consumes the types defined here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidGraphError, NoContactsError


class Strictness(Enum):
    """Journey time discipline: strictly increasing vs non-decreasing."""

    STRICT = "strict"
    NON_STRICT = "nonstrict"

    @classmethod
    def parse(cls, text: str) -> "Strictness":
        key = text.strip().lower().replace("-", "").replace("_", "")
        if key == "strict":
            return cls.STRICT
        if key == "nonstrict":
            return cls.NON_STRICT
        raise InvalidGraphError(f"unknown strictness {text!r}")


@dataclass(frozen=True, order=True)
class EdgeSlot:
    """One undirected edge together with its sorted tuple of labels."""

    u: int
    v: int
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))


@dataclass(frozen=True, order=True)
class Contact:
    """A single presence of an edge at one time.  Endpoints are normalized u < v."""

    u: int
    v: int
    time: int

    def __post_init__(self):
        if self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)


@dataclass(frozen=True)
class StaticGraph:
    """A plain graph; used for footprints, snapshots and closure symmetric parts.

    Undirected edges are normalized to (min, max) pairs.  With ``directed=True``
    the pairs are kept as given and read as arcs.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    directed: bool = False

    def __post_init__(self):
        if self.directed:
            pairs = frozenset((int(a), int(b)) for a, b in self.edges)
        else:
            pairs = frozenset((min(a, b), max(a, b)) for a, b in self.edges)
        object.__setattr__(self, "edges", pairs)

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))


@dataclass(frozen=True)
class TemporalGraph:
    """Vertices 0..n-1 plus labeled undirected edges, kept sorted by endpoints."""

    n: int
    edges: tuple[EdgeSlot, ...] = ()
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: (e.u, e.v))))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))

    def contacts(self) -> Iterator[Contact]:
        for e in self.edges:
            for t in e.labels:
                yield Contact(e.u, e.v, t)

    def label_of(self, u: int, v: int) -> tuple[int, ...]:
        a, b = min(u, v), max(u, v)
        for e in self.edges:
            if (e.u, e.v) == (a, b):
                return e.labels
        return ()


def temporal_graph(n: int, edges: Iterable[tuple[int, int, Iterable[int]]],
                   names: Sequence[str] | None = None) -> TemporalGraph:
    """Convenience constructor from ``(u, v, labels)`` triples."""
    slots = tuple(EdgeSlot(min(u, v), max(u, v), tuple(sorted(set(labels)))) for u, v, labels in edges)
    return TemporalGraph(n, slots, tuple(names) if names is not None else None)


def static_graph(n: int, edges: Iterable[tuple[int, int]], directed: bool = False) -> StaticGraph:
    return StaticGraph(n, frozenset((u, v) for u, v in edges), directed)


def validate(g: TemporalGraph) -> list[str]:
    """Return a list of invariant violations; an empty list means the graph is well formed."""
    out = []
    if g.n < 0:
        out.append(f"vertex count is negative: {g.n}")
    seen = set()
    for e in g.edges:
        if not (0 <= e.u < g.n and 0 <= e.v < g.n):
            out.append(f"edge ({e.u},{e.v}) has an endpoint outside 0..{g.n - 1}")
        if e.u >= e.v:
            out.append(f"edge ({e.u},{e.v}) must satisfy u < v")
        if (e.u, e.v) in seen:
            out.append(f"duplicate edge ({e.u},{e.v})")
        seen.add((e.u, e.v))
        if len(e.labels) == 0:
            out.append(f"edge ({e.u},{e.v}) has no labels")
        if list(e.labels) != sorted(set(e.labels)):
            out.append(f"edge ({e.u},{e.v}) labels must be strictly increasing")
        if any(t < 1 for t in e.labels):
            out.append(f"edge ({e.u},{e.v}) has a label < 1")
    if g.names is not None and len(g.names) != g.n:
        out.append(f"names has {len(g.names)} entries for {g.n} vertices")
    return out


def footprint(g: TemporalGraph) -> StaticGraph:
    """The underlying static graph: every edge, labels forgotten."""
    return StaticGraph(g.n, frozenset((e.u, e.v) for e in g.edges))


def snapshot(g: TemporalGraph, t: int) -> StaticGraph:
    """The static graph of edges present at time t."""
    return StaticGraph(g.n, frozenset((e.u, e.v) for e in g.edges if t in e.labels))


def distinct_times(g: TemporalGraph) -> tuple[int, ...]:
    return tuple(sorted({t for e in g.edges for t in e.labels}))


def lifetime(g: TemporalGraph) -> tuple[int, int]:
    """(min label, max label) over all contacts; error on an edgeless graph."""
    times = distinct_times(g)
    if not times:
        raise NoContactsError("graph has no contacts, lifetime undefined")
    return times[0], times[-1]


def contacts_count(g: TemporalGraph) -> int:
    return sum(len(e.labels) for e in g.edges)


def max_degree(g: TemporalGraph) -> int:
    """Maximum footprint degree; 0 for an edgeless graph."""
    deg = [0] * g.n
    for e in g.edges:
        deg[e.u] += 1
        deg[e.v] += 1
    return max(deg, default=0)


def is_proper(g: TemporalGraph) -> bool:
    """No two edges sharing a vertex share a time (labels are locally injective)."""
    at_vertex: dict[int, set[int]] = {}
    for e in g.edges:
        for x in (e.u, e.v):
            used = at_vertex.setdefault(x, set())
            for t in e.labels:
                if t in used:
                    return False
            used.update(e.labels)
    return True


def is_simple(g: TemporalGraph) -> bool:
    """Every edge has exactly one label."""
    return all(len(e.labels) == 1 for e in g.edges)


def is_happy(g: TemporalGraph) -> bool:
    return is_simple(g) and is_proper(g)


def induced_subgraph(g: TemporalGraph, vertices: Iterable[int]) -> tuple[TemporalGraph, tuple[int, ...]]:
    """Subgraph on the given vertices, reindexed to 0..k-1.

    Returns ``(subgraph, original)`` where ``original[i]`` is the input index of
    the subgraph's vertex ``i``.
    """
    kept = tuple(sorted(set(vertices)))
    for v in kept:
        if not 0 <= v < g.n:
            raise InvalidGraphError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(kept)}
    keep = set(kept)
    slots = tuple(EdgeSlot(index[e.u], index[e.v], e.labels)
                  for e in g.edges if e.u in keep and e.v in keep)
    names = tuple(g.names[v] for v in kept) if g.names is not None else None
    return TemporalGraph(len(kept), slots, names), kept


@dataclass(frozen=True)
class SettingClass:
    """One of the six meaningful combinations of strictness, properness and simpleness.

    Properness makes the strictness split vacuous, so proper settings are
    normalized to STRICT; that leaves exactly six classes:
    strict, non-strict, proper, simple-strict, simple-non-strict, happy.
    """

    strictness: Strictness = Strictness.STRICT
    require_proper: bool = False
    require_simple: bool = False

    def __post_init__(self):
        if self.require_proper:
            object.__setattr__(self, "strictness", Strictness.STRICT)

    @property
    def name(self) -> str:
        if self.require_proper:
            return "happy" if self.require_simple else "proper"
        base = "strict" if self.strictness is Strictness.STRICT else "non-strict"
        return f"simple-{base}" if self.require_simple else base

    @classmethod
    def parse(cls, text: str) -> "SettingClass":
        key = text.strip().lower().replace("_", "-")
        key = key.replace("nonstrict", "non-strict")
        table = {
            "strict": cls(Strictness.STRICT, False, False),
            "non-strict": cls(Strictness.NON_STRICT, False, False),
            "proper": cls(Strictness.STRICT, True, False),
            "simple-strict": cls(Strictness.STRICT, False, True),
            "simple-non-strict": cls(Strictness.NON_STRICT, False, True),
            "happy": cls(Strictness.STRICT, True, True),
        }
        if key not in table:
            raise InvalidGraphError(f"unknown setting {text!r}; expected one of {sorted(table)}")
        return table[key]

    def admits(self, g: TemporalGraph) -> bool:
        """Does the graph satisfy the structural side of this setting?"""
        if self.require_proper and not is_proper(g):
            return False
        if self.require_simple and not is_simple(g):
            return False
        return True


ALL_SETTINGS: tuple[SettingClass, ...] = (
    SettingClass(Strictness.STRICT, False, False),
    SettingClass(Strictness.NON_STRICT, False, False),
    SettingClass(Strictness.STRICT, True, False),
    SettingClass(Strictness.STRICT, False, True),
    SettingClass(Strictness.NON_STRICT, False, True),
    SettingClass(Strictness.STRICT, True, True),
)


def static_components(f: StaticGraph) -> list[frozenset[int]]:
    """Connected components of an undirected static graph (singletons included)."""
    parent = list(range(f.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in f.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, set[int]] = {}
    for v in range(f.n):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(s) for s in groups.values()]


def static_is_connected(f: StaticGraph) -> bool:
    return f.n <= 1 or len(static_components(f)) == 1
