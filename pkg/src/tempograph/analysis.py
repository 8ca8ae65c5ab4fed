"""Spanner search, temporal components, and the clique-to-component reduction.

Exhaustive searches run smallest-first (spanners) or largest-first
(components) over lexicographically ordered candidates, so results are
deterministic and witnesses are tight: a returned spanner of size k means
every size k-1 candidate failed on the way.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .coloring import proper_edge_coloring
from .errors import GuardExceededError, InvalidGraphError
from .graphs import (EdgeSlot, StaticGraph, Strictness, TemporalGraph,
                     contacts_count, induced_subgraph)
from .reachability import closure, closure_of_snapshots, is_temporally_connected


class SpannerMode(Enum):
    CONTACTS = "contacts"
    EDGES = "edges"


class ComponentMode(Enum):
    OPEN = "open"
    CLOSED = "closed"


def is_spanner(g: TemporalGraph, candidate: TemporalGraph, strictness: Strictness) -> bool:
    """Is candidate a temporally connected subgraph of g?

    Subgraph means: same vertex count, every candidate edge exists in g, and
    its labels are a subset of g's labels on that edge.
    """
    if candidate.n != g.n:
        raise InvalidGraphError(f"candidate has {candidate.n} vertices, graph has {g.n}")
    for e in candidate.edges:
        have = set(g.label_of(e.u, e.v))
        if not set(e.labels) <= have:
            raise InvalidGraphError(
                f"candidate edge ({e.u},{e.v}) labels {sorted(e.labels)} not within {sorted(have)}")
    return is_temporally_connected(candidate, strictness)


def min_spanner(g: TemporalGraph, strictness: Strictness, mode: SpannerMode,
                guard: int = 24) -> tuple[int, TemporalGraph]:
    """Smallest temporally connected subgraph, counting contacts or edges.

    CONTACTS drops labels one by one; EDGES drops whole edges but keeps every
    label of the edges it retains.  Exhaustive over subsets, ascending by
    size, so the count returned is optimal and the witness is the
    lexicographically first at that size.
    """
    if contacts_count(g) > guard:
        raise GuardExceededError(f"spanner search guarded at {guard} contacts, got {contacts_count(g)}")
    if not is_temporally_connected(g, strictness):
        raise InvalidGraphError("graph is not temporally connected, no spanner exists")
    if g.n <= 1:
        return 0, TemporalGraph(g.n, (), g.names)

    if mode is SpannerMode.CONTACTS:
        items = [(e.u, e.v, t) for e in g.edges for t in e.labels]
    else:
        items = [(e.u, e.v, e.labels) for e in g.edges]

    lower = g.n - 1
    for k in range(min(lower, len(items)), len(items) + 1):
        for combo in itertools.combinations(range(len(items)), k):
            label_map: dict[tuple[int, int], set[int]] = {}
            for i in combo:
                if mode is SpannerMode.CONTACTS:
                    u, v, t = items[i]
                    label_map.setdefault((u, v), set()).add(t)
                else:
                    u, v, labels = items[i]
                    label_map[(u, v)] = set(labels)
            if not _spans_connected(g.n, label_map):
                continue
            if _label_map_connected(g.n, label_map, strictness):
                witness = TemporalGraph(g.n, tuple(
                    EdgeSlot(u, v, tuple(sorted(ts))) for (u, v), ts in label_map.items()), g.names)
                return k, witness
    raise AssertionError("unreachable: the graph itself is temporally connected")


def _spans_connected(n: int, label_map) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merges = 0
    for u, v in label_map:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            merges += 1
    return merges == n - 1


def _label_map_connected(n: int, label_map, strictness: Strictness) -> bool:
    by_time: dict[int, list[tuple[int, int]]] = {}
    for (u, v), ts in label_map.items():
        for t in ts:
            by_time.setdefault(t, []).append((u, v))
    snapshots = [by_time[t] for t in sorted(by_time)]
    return len(closure_of_snapshots(n, snapshots, strictness)) == n * (n - 1)


def max_clique(f: StaticGraph, guard: int = 16) -> int:
    """Maximum clique size of a static graph, by branch and bound."""
    if f.directed:
        raise InvalidGraphError("max_clique expects an undirected graph")
    if f.n > guard:
        raise GuardExceededError(f"clique search guarded at n <= {guard}, got {f.n}")
    size, _ = _max_clique_mask(_adjacency_masks(f), f.n)
    return size


def max_temporal_component(g: TemporalGraph, strictness: Strictness, mode: ComponentMode,
                           guard: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Largest vertex set pairwise connected by journeys.

    OPEN lets journeys relay through outside vertices: the answer is a maximum
    clique of the closure's symmetric part.  CLOSED requires journeys to stay
    inside the set (closure of the induced subgraph is complete).  Closed runs
    never exceed open runs, so the closed search first tries the open witness;
    only when that witness is not closed does it fall back to subset
    enumeration, which is what the guard protects.
    """
    if mode is ComponentMode.OPEN:
        guard = 20 if guard is None else guard
        if g.n > guard:
            raise GuardExceededError(f"open component search guarded at n <= {guard}, got {g.n}")
        return _max_open(g, strictness)

    guard = 16 if guard is None else guard
    open_size, open_witness = _max_open(g, strictness)
    sub, _ = induced_subgraph(g, open_witness)
    if closure(sub, strictness).is_complete():
        return open_size, open_witness
    if g.n > guard:
        raise GuardExceededError(
            f"closed component enumeration guarded at n <= {guard}, got {g.n}")
    for k in range(min(open_size, g.n), 0, -1):
        for combo in itertools.combinations(range(g.n), k):
            sub, _ = induced_subgraph(g, combo)
            if closure(sub, strictness).is_complete():
                return k, combo
    raise AssertionError("unreachable: singletons are always closed components")


def _max_open(g: TemporalGraph, strictness: Strictness) -> tuple[int, tuple[int, ...]]:
    sym = closure(g, strictness).symmetric_part()
    adj = _adjacency_masks(sym)
    size, _ = _max_clique_mask(adj, g.n)
    return size, _lex_smallest_clique(adj, g.n, size)


def _adjacency_masks(f: StaticGraph) -> list[int]:
    adj = [0] * f.n
    for u, v in f.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _max_clique_mask(adj: list[int], n: int, start: int | None = None) -> tuple[int, int]:
    """Branch and bound with greedy-coloring bounds; returns (size, mask).

    ``start`` restricts the search to a vertex subset (default: all).
    """
    best_size = 0
    best_mask = 0

    def expand(rmask: int, rsize: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if cand == 0:
            if rsize > best_size:
                best_size, best_mask = rsize, rmask
            return
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            cls = 0
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                bounds.append(color)
                cls |= low
                avail &= ~(adj[v] | low)
            rest &= ~cls
        camask = cand
        for i in reversed(range(len(order))):
            v = order[i]
            if rsize + bounds[i] <= best_size:
                return
            expand(rmask | (1 << v), rsize + 1, camask & adj[v])
            camask &= ~(1 << v)

    expand(0, 0, (1 << n) - 1 if start is None else start)
    return best_size, best_mask


def _lex_smallest_clique(adj: list[int], n: int, size: int) -> tuple[int, ...]:
    """Greedy front-to-back selection; keep v whenever a big enough clique remains."""
    chosen: list[int] = []
    cand = (1 << n) - 1
    need = size
    for v in range(n):
        if need == 0:
            break
        if not cand >> v & 1:
            continue
        sub = cand & adj[v]
        sub_size, _ = _max_clique_mask(adj, n, start=sub)
        if sub_size >= need - 1:
            chosen.append(v)
            cand = sub
            need -= 1
    assert len(chosen) == size
    return tuple(chosen)


def hamiltonian_path_decomposition(count: int) -> list[list[int]]:
    """Partition the complete graph on ``count`` (even) vertices into
    count/2 edge-disjoint hamiltonian paths, by the zigzag construction."""
    if count < 2 or count % 2:
        raise InvalidGraphError(f"need an even vertex count >= 2, got {count}")
    base = [0]
    for j in range(1, count // 2 + 1):
        base.append(j)
        if count - j != j:
            base.append(count - j)
    # base is the zigzag 0, 1, n-1, 2, n-2, ...; shifting it tiles the edges
    return [[(x + i) % count for x in base] for i in range(count // 2)]


@dataclass(frozen=True)
class ReductionInstance:
    """A happy graph whose largest temporal component mirrors a clique question.

    For an input with m edges, the largest open (equally: closed) component
    has exactly 2m + w vertices, w the input's maximum clique size, so asking
    "component of size 2m + k?" answers "clique of size k?".
    """

    graph: TemporalGraph
    originals: tuple[int, ...]
    auxiliaries: tuple[int, ...]
    input_edge_count: int

    def component_size_for(self, clique_size: int) -> int:
        return 2 * self.input_edge_count + clique_size


def clique_to_component_instance(f: StaticGraph, method: str = "fan") -> ReductionInstance:
    """Build the component instance for a static graph with at least 4 edges.

    Per input edge {u, v} two auxiliary vertices carry a forward and a
    backward crossing gadget; labels are laid out in disjoint bands:

      phase 1 (two hamiltonian aux paths, toward then from the pivot)
      < all gadget entries < all gadget exits
      < phase 4 (two more hamiltonian aux paths, toward then from the pivot).

    Within the gadget bands, entries occupy two sub-bands and exits the next
    two, each of width C (a proper edge coloring of the input), so the whole
    graph is happy, each gadget is internally increasing, and no journey can
    chain two gadgets: auxiliaries are mutually reachable and reach every
    incident original, originals reach every auxiliary, but one original
    reaches another only when they are adjacent in the input.
    """
    if f.directed:
        raise InvalidGraphError("the reduction expects an undirected graph")
    edges = sorted(f.edges)
    m = len(edges)
    if m < 4:
        raise InvalidGraphError(f"need at least 4 edges for the hamiltonian-path phases, got {m}")
    n0 = f.n
    scheme = proper_edge_coloring(f, method)
    c_count = scheme.color_count

    aux_total = 2 * m
    paths = hamiltonian_path_decomposition(aux_total)[:4]
    paths = [[n0 + x for x in p] for p in paths]
    pivot = n0
    span = aux_total - 1

    raw: dict[tuple[int, int], int] = {}

    def put(a: int, b: int, label: int) -> None:
        key = (min(a, b), max(a, b))
        assert key not in raw
        raw[key] = label

    for (path, toward, base) in (
        (paths[0], True, 0),
        (paths[1], False, span),
        (paths[2], True, 2 * span + 4 * c_count),
        (paths[3], False, 3 * span + 4 * c_count),
    ):
        for (a, b), label in _pivot_path_labels(path, pivot, base, toward).items():
            put(a, b, label)

    entry_fwd = 2 * span
    entry_bwd = 2 * span + c_count
    exit_fwd = 2 * span + 2 * c_count
    exit_bwd = 2 * span + 3 * c_count
    for j, (u, v) in enumerate(edges):
        color = scheme.colors[(u, v)]
        fwd, bwd = n0 + 2 * j, n0 + 2 * j + 1
        put(u, fwd, entry_fwd + color)
        put(fwd, v, exit_fwd + color)
        put(v, bwd, entry_bwd + color)
        put(bwd, u, exit_bwd + color)

    slots = tuple(EdgeSlot(u, v, (t,)) for (u, v), t in raw.items())
    graph = TemporalGraph(n0 + aux_total, slots)
    return ReductionInstance(graph, tuple(range(n0)), tuple(range(n0, n0 + aux_total)), m)


def _pivot_path_labels(path: list[int], pivot: int, base: int, toward: bool) -> dict[tuple[int, int], int]:
    """Label a path so both sides ascend toward (or from) the pivot, all distinct."""
    j = path.index(pivot)
    span = len(path) - 1
    out = {}
    # each side gets its own contiguous label range, so all span labels are distinct
    for i in range(span):
        a, b = path[i], path[i + 1]
        if toward:
            label = base + 1 + i if i < j else base + 1 + j + (span - 1 - i)
        else:
            label = base + 1 + (j - 1 - i) if i < j else base + 1 + i
        out[(min(a, b), max(a, b))] = label
    return out
