"""Setting-preserving transformations between temporal graph classes.

Three constructions, each reported with the vertex embedding sigma and size
stats:

* ``dilate``: non-strict -> proper, on the same vertex set, preserving journey
  supports.  Each snapshot needing work (it contains a two-edge path) becomes
  a block of k nominal steps, k the snapshot's longest path; every snapshot
  edge repeats at each nominal step, tilted by a proper edge coloring of the
  snapshot so the block is itself proper.
* ``saturate``: non-strict -> strict, on the same vertex set and label set.
  Every snapshot connected component becomes a clique at that time, so one
  strict hop reaches whatever a same-time chain could.
* ``semaphore``: strict -> happy (proper and simple).  Every contact is
  replaced by a two-vertex gadget whose four edges carry tilted labels; the
  paper-and-pencil epsilon tilt becomes exact integers via t*S - c / t*S + c
  with S = 2*(C + 1), which keeps nominal time order: t*S + c < t'*S - c'
  whenever t < t'.

Dilate and semaphore compact output labels to 1..lifetime afterwards; only
relative order matters for reachability.  Saturate keeps the input labels
untouched since its contract is to preserve the label set.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .coloring import proper_edge_coloring
from .errors import InvalidGraphError
from .graphs import (EdgeSlot, StaticGraph, TemporalGraph, contacts_count,
                     distinct_times, static_components, static_graph)


@dataclass(frozen=True)
class TransformReport:
    """A transform's output graph, its vertex embedding, and size accounting."""

    transform: str
    graph: TemporalGraph
    sigma: tuple[int, ...]
    stats: dict


def dilate(g: TemporalGraph, method: str = "fan") -> TransformReport:
    """Spread each snapshot over enough tilted steps that strict journeys match
    the input's non-strict journeys, support for support."""
    times = distinct_times(g)
    by_time: dict[int, list[tuple[int, int]]] = {t: [] for t in times}
    for e in g.edges:
        for t in e.labels:
            by_time[t].append((e.u, e.v))

    raw: dict[tuple[int, int], set[int]] = {}
    bands = []
    offset = 0
    for t in times:
        snap = sorted(by_time[t])
        deg: dict[int, int] = {}
        for u, v in snap:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        needs_work = max(deg.values()) >= 2
        if needs_work:
            scheme = proper_edge_coloring(static_graph(g.n, snap), method)
            c_count = scheme.color_count
            steps = _longest_path_edges(g.n, snap) if len(snap) <= 20 else g.n - 1
            for u, v in snap:
                color = scheme.colors[(u, v)]
                raw.setdefault((u, v), set()).update(
                    offset + j * (c_count + 1) + color for j in range(1, steps + 1))
            width = steps * (c_count + 1) + c_count
        else:
            c_count = 1
            steps = 1
            for u, v in snap:
                raw.setdefault((u, v), set()).add(offset + 1)
            width = 1
        bands.append({"time": t, "dilated": needs_work, "nominal_steps": steps, "colors": c_count})
        offset += width

    out = _graph_from_label_map(g.n, _compact(raw), g.names)
    stats = {
        "bands": bands,
        "color_count": max((b["colors"] for b in bands), default=0),
        "lifetime_in": len(times),
        "lifetime_out": len(distinct_times(out)),
        "contacts_in": contacts_count(g),
        "contacts_out": contacts_count(out),
    }
    return TransformReport("dilate", out, tuple(range(g.n)), stats)


def lifetime_blowup_bound(g: TemporalGraph, method: str = "fan") -> int:
    """Upper bound lifetime_in * C * (n - 1) on dilate's distinct-time count,
    using the color count C dilate actually needs."""
    if not g.edges:
        return 0
    rep = dilate(g, method)
    return rep.stats["lifetime_in"] * rep.stats["color_count"] * (g.n - 1)


def saturate(g: TemporalGraph) -> TransformReport:
    """Complete each snapshot component into a clique at that time."""
    raw: dict[tuple[int, int], set[int]] = {}
    for t in distinct_times(g):
        snap = [(e.u, e.v) for e in g.edges if t in e.labels]
        for comp in static_components(StaticGraph(g.n, frozenset(snap))):
            members = sorted(comp)
            if len(members) < 2:
                continue
            for i, u in enumerate(members):
                for v in members[i + 1:]:
                    raw.setdefault((u, v), set()).add(t)
    out = _graph_from_label_map(g.n, raw, g.names)
    stats = {
        "lifetime_in": len(distinct_times(g)),
        "lifetime_out": len(distinct_times(out)),
        "contacts_in": contacts_count(g),
        "contacts_out": contacts_count(out),
        "contacts_bound": g.n * (g.n + 1) * len(distinct_times(g)) // 2,
    }
    return TransformReport("saturate", out, tuple(range(g.n)), stats)


def semaphore(g: TemporalGraph, method: str = "fan") -> TransformReport:
    """Replace each contact with a two-vertex gadget; output is happy.

    Contact ({u,v}, t) with footprint color c gets vertices a (u side) and
    b (v side) and edges u-a @ tS-c, a-v @ tS+c, u-b @ tS+c, b-v @ tS-c, so u
    crosses via a and v crosses back via b.  Reachability among the original
    vertices is exactly the strict closure of the input.
    """
    scheme = proper_edge_coloring(StaticGraph(g.n, frozenset((e.u, e.v) for e in g.edges)), method)
    scale = scheme.scale
    contacts = sorted(g.contacts())
    raw: dict[tuple[int, int], set[int]] = {}
    names = list(g.names) if g.names is not None else None
    nxt = g.n
    for c in contacts:
        color = scheme.colors[(c.u, c.v)]
        a, b = nxt, nxt + 1
        nxt += 2
        lo, hi = c.time * scale - color, c.time * scale + color
        # aux indices exceed the originals, keep slots normalized u < v
        raw[(c.u, a)] = {lo}
        raw[(c.v, a)] = {hi}
        raw[(c.u, b)] = {hi}
        raw[(c.v, b)] = {lo}
        if names is not None:
            names.append(f"{g.names[c.u]}>{g.names[c.v]}@{c.time}")
            names.append(f"{g.names[c.v]}>{g.names[c.u]}@{c.time}")
    out = _graph_from_label_map(nxt, _compact(raw), tuple(names) if names is not None else None)
    stats = {
        "vertices_in": g.n,
        "vertices_out": nxt,
        "contacts_in": len(contacts),
        "contacts_out": contacts_count(out),
        "color_count": scheme.color_count,
        "scale": scale,
        "lifetime_out": len(distinct_times(out)),
    }
    return TransformReport("semaphore", out, tuple(range(g.n)), stats)


def _longest_path_edges(n: int, edges: list[tuple[int, int]]) -> int:
    """Exact longest simple path (edge count) of a small static graph."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    best = 0

    def dfs(v: int, visited: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        for w in adj[v]:
            if not visited >> w & 1:
                dfs(w, visited | (1 << w), length + 1)

    for v in adj:
        dfs(v, 1 << v, 0)
    return best


def _compact(raw: Mapping[tuple[int, int], Iterable[int]]) -> dict[tuple[int, int], set[int]]:
    """Order-preserving relabeling of all label values onto 1..count."""
    values = sorted({t for labels in raw.values() for t in labels})
    rank = {t: i + 1 for i, t in enumerate(values)}
    return {pair: {rank[t] for t in labels} for pair, labels in raw.items()}


def _graph_from_label_map(n: int, raw: Mapping[tuple[int, int], Iterable[int]],
                          names: tuple[str, ...] | None) -> TemporalGraph:
    slots = tuple(EdgeSlot(u, v, tuple(sorted(labels))) for (u, v), labels in raw.items())
    return TemporalGraph(n, slots, names)
