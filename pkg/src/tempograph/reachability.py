"""Reachability over temporal graphs.

The closure engine runs one sweep per source over the distinct times in
ascending order, maintaining earliest arrival as a bitmask:

* strict: at time t, one simultaneous relaxation moves the sweep across every
  contact at t whose tail arrived strictly before t.  Two contacts at the same
  time can never chain, which is exactly the strict-journey semantics.
* non-strict: at time t, every vertex in a snapshot connected component that
  already contains an arrived vertex becomes arrived.  Arbitrarily long
  same-time chains collapse into one component marking.

Only the relative order of labels matters, so the engine works on the
snapshot sequence; `closure_of_snapshots` is shared with the realizability
search, which feeds it candidate sequences directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GuardExceededError, InvalidGraphError
from .graphs import (Contact, StaticGraph, Strictness, TemporalGraph,
                     distinct_times, footprint)


@dataclass(frozen=True)
class ReachabilityGraph:
    """Directed closure: arc (u, v) iff a journey u -> v exists.  Irreflexive."""

    n: int
    arcs: frozenset[tuple[int, int]] = frozenset()

    def has(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def is_complete(self) -> bool:
        return len(self.arcs) == self.n * (self.n - 1)

    def symmetric_part(self) -> StaticGraph:
        """Undirected graph of mutually reachable pairs."""
        pairs = frozenset((u, v) for u, v in self.arcs if u < v and (v, u) in self.arcs)
        return StaticGraph(self.n, pairs)


@dataclass(frozen=True)
class Journey:
    """A chained contact sequence, anchored at its start vertex.

    The traversed vertex sequence must be a simple path and the contact times
    must be non-decreasing (NON_STRICT) or strictly increasing (STRICT).
    """

    start: int
    contacts: tuple[Contact, ...]
    strictness: Strictness

    def support(self) -> tuple[int, ...]:
        """The traversed vertex sequence, start first."""
        seq = [self.start]
        for c in self.contacts:
            prev = seq[-1]
            if prev == c.u:
                seq.append(c.v)
            elif prev == c.v:
                seq.append(c.u)
            else:
                raise InvalidGraphError(f"contact ({c.u},{c.v}) does not touch vertex {prev}")
        return tuple(seq)


def journey_violations(g: TemporalGraph, j: Journey) -> list[str]:
    """Invariant check for a journey against its graph; empty list means valid."""
    out = []
    if not j.contacts:
        out.append("journey has no contacts")
        return out
    try:
        seq = j.support()
    except InvalidGraphError as exc:
        return [str(exc)]
    if len(set(seq)) != len(seq):
        out.append("support revisits a vertex")
    for c in j.contacts:
        if c.time not in g.label_of(c.u, c.v):
            out.append(f"contact ({c.u},{c.v})@{c.time} not present in the graph")
    times = [c.time for c in j.contacts]
    for a, b in zip(times, times[1:]):
        if j.strictness is Strictness.STRICT and not a < b:
            out.append(f"times {a},{b} not strictly increasing")
        if j.strictness is Strictness.NON_STRICT and not a <= b:
            out.append(f"times {a},{b} decreasing")
    return out


def snapshot_sequence(g: TemporalGraph) -> list[list[tuple[int, int]]]:
    """Edge lists per distinct time, ascending."""
    by_time: dict[int, list[tuple[int, int]]] = {}
    for e in g.edges:
        for t in e.labels:
            by_time.setdefault(t, []).append((e.u, e.v))
    return [sorted(by_time[t]) for t in sorted(by_time)]


def closure_of_snapshots(n: int, snapshots: Sequence[Sequence[tuple[int, int]]],
                         strictness: Strictness) -> frozenset[tuple[int, int]]:
    """Arc set of the closure for an explicit snapshot sequence."""
    if strictness is Strictness.STRICT:
        prepped = [tuple(s) for s in snapshots]
    else:
        prepped = [_component_masks(n, s) for s in snapshots]
    arcs = set()
    for src in range(n):
        reached = 1 << src
        if strictness is Strictness.STRICT:
            for edges in prepped:
                before = reached
                add = 0
                for u, v in edges:
                    if before >> u & 1:
                        add |= 1 << v
                    if before >> v & 1:
                        add |= 1 << u
                reached |= add
        else:
            for comps in prepped:
                for cm in comps:
                    if reached & cm:
                        reached |= cm
        reached &= ~(1 << src)
        while reached:
            low = reached & -reached
            arcs.add((src, low.bit_length() - 1))
            reached ^= low
    return frozenset(arcs)


def closure(g: TemporalGraph, strictness: Strictness) -> ReachabilityGraph:
    """Reachability closure of g under the given strictness."""
    return ReachabilityGraph(g.n, closure_of_snapshots(g.n, snapshot_sequence(g), strictness))


def reaches(g: TemporalGraph, u: int, v: int, strictness: Strictness) -> bool:
    if u == v:
        raise InvalidGraphError("reflexive reachability queries are rejected")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise InvalidGraphError(f"vertex {x} outside 0..{g.n - 1}")
    return closure(g, strictness).has(u, v)


def is_temporally_connected(g: TemporalGraph, strictness: Strictness) -> bool:
    """True iff every ordered vertex pair is connected by a journey."""
    if g.n < 1:
        raise InvalidGraphError("connectivity needs at least one vertex")
    return closure(g, strictness).is_complete()


def enumerate_supports(g: TemporalGraph, strictness: Strictness, guard: int = 10) -> frozenset[tuple[int, ...]]:
    """All vertex sequences (length >= 2) that support some journey.

    Depth-first search over simple footprint paths.  Each extension takes the
    smallest feasible label of the next edge: arriving earlier never rules out
    a continuation, so the greedy choice is exact for support existence.
    """
    if g.n > guard:
        raise GuardExceededError(f"supports enumeration guarded at n <= {guard}, got {g.n}")
    strict = strictness is Strictness.STRICT
    adj: dict[int, list[tuple[int, tuple[int, ...]]]] = {v: [] for v in range(g.n)}
    for e in g.edges:
        adj[e.u].append((e.v, e.labels))
        adj[e.v].append((e.u, e.labels))
    out: set[tuple[int, ...]] = set()
    path: list[int] = []

    def extend(v: int, visited: int, last: int) -> None:
        for w, labels in adj[v]:
            if visited >> w & 1:
                continue
            t = None
            for cand in labels:
                if cand > last or (not strict and cand == last):
                    t = cand
                    break
            if t is None:
                continue
            path.append(w)
            out.add(tuple(path))
            extend(w, visited | (1 << w), t)
            path.pop()

    for v0 in range(g.n):
        path = [v0]
        extend(v0, 1 << v0, 0)
    return frozenset(out)


def footprint_distance(g: TemporalGraph, u: int, v: int) -> int | None:
    """Hop distance in the footprint, labels ignored; None if unreachable."""
    for x in (u, v):
        if not 0 <= x < g.n:
            raise InvalidGraphError(f"vertex {x} outside 0..{g.n - 1}")
    if u == v:
        return 0
    adj: dict[int, list[int]] = {x: [] for x in range(g.n)}
    for a, b in footprint(g).edges:
        adj[a].append(b)
        adj[b].append(a)
    dist = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == v:
                        return dist[y]
                    nxt.append(y)
        frontier = nxt
    return None


def _component_masks(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    """Bitmasks of the non-trivial connected components of one snapshot."""
    parent: dict[int, int] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    masks: dict[int, int] = {}
    for x in parent:
        r = find(x)
        masks[r] = masks.get(r, 0) | (1 << x)
    return list(masks.values())
