"""Proper edge colorings of static graphs.

The fan-rotation algorithm colors any simple graph with at most maxdeg + 1
colors.  It repeatedly grows a maximal fan around one endpoint of an
uncolored edge, makes one color free at that endpoint by inverting a
two-colored alternating path, then rotates a fan prefix so the freed color
lands on the new edge.  A cheaper greedy variant (at most 2*maxdeg - 1
colors) is available behind the ``method`` flag; everything downstream
computes its strides from the color count actually used, so correctness never
depends on which method produced the coloring.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidGraphError
from .graphs import StaticGraph


@dataclass(frozen=True)
class TiltScheme:
    """A proper edge coloring with the integer scale transforms tilt by.

    ``colors`` maps each (u, v) edge to a color in 1..color_count; incident
    edges never share a color.  ``scale`` is 2 * (color_count + 1): nominal
    time t may be tilted to t * scale +/- color without two distinct nominal
    times ever overlapping.
    """

    colors: Mapping[tuple[int, int], int]
    color_count: int
    scale: int


def proper_edge_coloring(f: StaticGraph, method: str = "fan") -> TiltScheme:
    """Color f's edges so incident edges differ; returns the scheme with its scale."""
    if f.directed:
        raise InvalidGraphError("edge coloring expects an undirected graph")
    if method == "fan":
        colors = _fan_coloring(f)
    elif method == "greedy":
        colors = _greedy_coloring(f)
    else:
        raise InvalidGraphError(f"unknown coloring method {method!r}")
    count = max(colors.values(), default=0)
    return TiltScheme(colors, count, 2 * (count + 1))


def coloring_violations(f: StaticGraph, colors: Mapping[tuple[int, int], int]) -> list[str]:
    out = []
    for e in f.edges:
        if e not in colors:
            out.append(f"edge {e} uncolored")
    at: dict[int, dict[int, tuple[int, int]]] = {}
    for e, c in colors.items():
        if c < 1:
            out.append(f"edge {e} has color {c}, colors start at 1")
        for x in e:
            seen = at.setdefault(x, {})
            if c in seen:
                out.append(f"edges {seen[c]} and {e} share color {c} at vertex {x}")
            seen[c] = e
    return out


def _greedy_coloring(f: StaticGraph) -> dict[tuple[int, int], int]:
    colors: dict[tuple[int, int], int] = {}
    used: dict[int, set[int]] = {}
    for e in sorted(f.edges):
        u, v = e
        taken = used.setdefault(u, set()) | used.setdefault(v, set())
        c = 1
        while c in taken:
            c += 1
        colors[e] = c
        used[u].add(c)
        used[v].add(c)
    return colors


def _fan_coloring(f: StaticGraph) -> dict[tuple[int, int], int]:
    n = f.n
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in f.edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort()
    maxdeg = max((len(nb) for nb in adj.values()), default=0)
    palette = range(1, maxdeg + 2)

    colors: dict[tuple[int, int], int] = {}
    # at[x][c] = neighbor across the c-colored edge at x, if any
    at: dict[int, dict[int, int]] = {v: {} for v in range(n)}

    def key(a, b):
        return (a, b) if a < b else (b, a)

    def set_color(a, b, c):
        colors[key(a, b)] = c
        at[a][c] = b
        at[b][c] = a

    def uncolor(a, b):
        old = colors.pop(key(a, b))
        del at[a][old]
        del at[b][old]

    def free_color(x):
        for c in palette:
            if c not in at[x]:
                return c
        raise AssertionError("palette exhausted, coloring bug")

    def invert_path(x, c, d):
        # maximal path from x alternating colors d, c; swap the two colors on it
        edges = []
        cur, want = x, d
        while want in at[cur]:
            nxt = at[cur][want]
            edges.append((cur, nxt, want))
            cur, want = nxt, (c if want == d else d)
        for a, b, _ in edges:
            uncolor(a, b)
        for a, b, col in edges:
            set_color(a, b, c if col == d else d)

    for u, v in sorted(f.edges):
        # maximal fan of u starting at v: each next spoke's color is free at the previous tip
        fan = [v]
        in_fan = {v}
        while True:
            tip = fan[-1]
            nxt = None
            for w in adj[u]:
                if w in in_fan:
                    continue
                c = colors.get(key(u, w))
                if c is not None and c not in at[tip]:
                    nxt = w
                    break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)

        c = free_color(u)
        d = free_color(fan[-1])
        if d in at[u]:
            invert_path(u, c, d)

        # shortest fan prefix that is still a fan after the inversion and ends where d is free
        w_index = None
        for i, w in enumerate(fan):
            if d in at[w]:
                continue
            ok = True
            for j in range(1, i + 1):
                col = colors.get(key(u, fan[j]))
                if col is None or col in at[fan[j - 1]]:
                    ok = False
                    break
            if ok:
                w_index = i
                break
        assert w_index is not None, "no rotatable fan prefix, coloring bug"

        # rotate: shift each spoke color one step toward v, then color the last spoke d
        shift = [colors[key(u, fan[j])] for j in range(1, w_index + 1)]
        for j in range(1, w_index + 1):
            uncolor(u, fan[j])
        for j in range(w_index):
            set_color(u, fan[j], shift[j])
        set_color(u, fan[w_index], d)

    return colors
