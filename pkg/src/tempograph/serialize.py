"""Wire formats: canonical JSON for graphs and closures, DOT for closures.

The JSON layout is the toolkit's interchange format.  Serialization is
deterministic: edges sorted by (u, v), labels ascending, arcs lexicographic,
object keys sorted.  ``dumps(loads(s))`` is therefore byte-stable.
"""
from __future__ import annotations

import json
from typing import Any, Mapping

from .errors import InvalidGraphError
from .graphs import EdgeSlot, StaticGraph, TemporalGraph
from .reachability import ReachabilityGraph


def temporal_to_obj(g: TemporalGraph) -> dict:
    obj: dict[str, Any] = {"n": g.n}
    if g.names is not None:
        obj["names"] = list(g.names)
    obj["edges"] = [{"u": e.u, "v": e.v, "labels": list(e.labels)} for e in g.edges]
    return obj


def temporal_from_obj(obj: Mapping) -> TemporalGraph:
    _need_keys(obj, {"n", "edges"})
    try:
        n = int(obj["n"])
        names = tuple(str(x) for x in obj["names"]) if "names" in obj and obj["names"] is not None else None
        slots = tuple(EdgeSlot(int(e["u"]), int(e["v"]), tuple(int(t) for t in e["labels"]))
                      for e in obj["edges"])
    except (TypeError, KeyError, ValueError) as exc:
        raise InvalidGraphError(f"malformed temporal graph object: {exc}") from exc
    return TemporalGraph(n, slots, names)


def static_to_obj(f: StaticGraph) -> dict:
    obj: dict[str, Any] = {"n": f.n}
    if f.directed:
        obj["directed"] = True
    obj["edges"] = [{"u": u, "v": v} for u, v in sorted(f.edges)]
    return obj


def static_from_obj(obj: Mapping) -> StaticGraph:
    _need_keys(obj, {"n", "edges"})
    try:
        n = int(obj["n"])
        directed = bool(obj.get("directed", False))
        pairs = frozenset((int(e["u"]), int(e["v"])) for e in obj["edges"])
    except (TypeError, KeyError, ValueError) as exc:
        raise InvalidGraphError(f"malformed static graph object: {exc}") from exc
    return StaticGraph(n, pairs, directed)


def closure_to_obj(r: ReachabilityGraph) -> dict:
    return {"n": r.n, "arcs": [[u, v] for u, v in sorted(r.arcs)]}


def closure_from_obj(obj: Mapping) -> ReachabilityGraph:
    _need_keys(obj, {"n", "arcs"})
    try:
        n = int(obj["n"])
        arcs = frozenset((int(a), int(b)) for a, b in obj["arcs"])
    except (TypeError, ValueError) as exc:
        raise InvalidGraphError(f"malformed closure object: {exc}") from exc
    for a, b in arcs:
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise InvalidGraphError(f"arc ({a},{b}) invalid for n={n}")
    return ReachabilityGraph(n, arcs)


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGraphError(f"not valid JSON: {exc}") from exc


def closure_dot(r: ReachabilityGraph, names=None, collapse_mutual: bool = False) -> str:
    """Render a closure as GraphViz DOT.

    With ``collapse_mutual`` each mutual arc pair becomes a single edge marked
    ``dir=both``; one-way arcs keep their arrowheads.
    """
    def label(v):
        return f'"{names[v]}"' if names else str(v)

    lines = ["digraph closure {"]
    emitted = set()
    for u, v in sorted(r.arcs):
        if (u, v) in emitted:
            continue
        if collapse_mutual and (v, u) in r.arcs:
            lines.append(f"  {label(u)} -> {label(v)} [dir=both];")
            emitted.add((v, u))
        else:
            lines.append(f"  {label(u)} -> {label(v)};")
        emitted.add((u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _need_keys(obj: Mapping, keys: set[str]) -> None:
    if not isinstance(obj, Mapping):
        raise InvalidGraphError(f"expected a JSON object, got {type(obj).__name__}")
    missing = keys - set(obj)
    if missing:
        raise InvalidGraphError(f"missing keys: {sorted(missing)}")
