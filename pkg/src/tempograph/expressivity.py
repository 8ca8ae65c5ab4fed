"""Equivalence checks, canonical labeling enumeration, and realizability search.

Two graphs are compared through their closures (possibly under a vertex
mapping), through their journey supports, or through the closure of one
induced on an embedded copy of the other.

The realizability search asks whether a target digraph is the closure of any
temporal graph in a given setting class.  It scans canonical labelings only:

* single-label classes: ordered set partitions of the footprint edges into
  label classes 1..k, since only the relative label order affects journeys;
* multi-label classes: explicit snapshot sequences.  A sequence longer than
  n*(n-1) always contains a snapshot that changes no source's reached set,
  and dropping such a snapshot preserves the closure (`compress_snapshots`
  is the executable form of that argument), so length is capped there.

Footprints are drawn from the mutual pairs of the target only: an edge with
any label yields journeys both ways, so a witness can never have a footprint
edge outside the target's symmetric part.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import GuardExceededError, InvalidGraphError
from .fixtures import FIXTURES
from .graphs import (SettingClass, StaticGraph, Strictness, TemporalGraph,
                     static_components, temporal_graph)
from .reachability import (ReachabilityGraph, _component_masks, closure,
                           enumerate_supports)
from .serialize import closure_to_obj, temporal_to_obj

SIMPLE_EDGE_GUARD = 10
MULTI_LABEL_VERTEX_GUARD = 5
ISO_GUARD = 8
REALIZE_VERTEX_GUARD = 6


@dataclass(frozen=True)
class VertexMapping:
    """Injective map from vertices 0..len(images)-1 into 0..codomain-1."""

    images: tuple[int, ...]
    codomain: int

    def __post_init__(self):
        for x in self.images:
            if not 0 <= x < self.codomain:
                raise InvalidGraphError(f"image {x} outside 0..{self.codomain - 1}")
        if len(set(self.images)) != len(self.images):
            raise InvalidGraphError("vertex mapping is not injective")

    @classmethod
    def identity(cls, n: int) -> "VertexMapping":
        return cls(tuple(range(n)), n)

    def apply(self, u: int) -> int:
        return self.images[u]

    def __len__(self) -> int:
        return len(self.images)


def _as_mapping(mapping, domain: int, codomain: int) -> VertexMapping:
    if not isinstance(mapping, VertexMapping):
        mapping = VertexMapping(tuple(mapping), codomain)
    if len(mapping) != domain or mapping.codomain != codomain:
        raise InvalidGraphError(
            f"mapping shape {len(mapping)}->{mapping.codomain}, expected {domain}->{codomain}")
    return mapping


def digraph_isomorphic(d1: ReachabilityGraph, d2: ReachabilityGraph,
                       guard: int = ISO_GUARD) -> bool:
    """Exact isomorphism by backtracking vertex assignment."""
    if max(d1.n, d2.n) > guard:
        raise GuardExceededError(f"isomorphism search guarded at n <= {guard}")
    if d1.n != d2.n or len(d1.arcs) != len(d2.arcs):
        return False
    if d1.arcs == d2.arcs:
        return True
    n = d1.n
    out1, in1 = _adjacency_masks(d1)
    out2, in2 = _adjacency_masks(d2)
    prof1 = [(bin(out1[v]).count("1"), bin(in1[v]).count("1")) for v in range(n)]
    prof2 = [(bin(out2[v]).count("1"), bin(in2[v]).count("1")) for v in range(n)]
    if sorted(prof1) != sorted(prof2):
        return False
    image = [-1] * n

    def assign(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(n):
            if used >> c & 1 or prof1[v] != prof2[c]:
                continue
            ok = True
            for w in range(v):
                if (out1[v] >> w & 1) != (out2[c] >> image[w] & 1) or \
                        (in1[v] >> w & 1) != (in2[c] >> image[w] & 1):
                    ok = False
                    break
            if ok:
                image[v] = c
                if assign(v + 1, used | (1 << c)):
                    return True
        image[v] = -1
        return False

    return assign(0, 0)


def _adjacency_masks(d: ReachabilityGraph) -> tuple[list[int], list[int]]:
    out = [0] * d.n
    inc = [0] * d.n
    for u, v in d.arcs:
        out[u] |= 1 << v
        inc[v] |= 1 << u
    return out, inc


def reachability_equivalent(g1: TemporalGraph, g2: TemporalGraph,
                            s1: Strictness, s2: Strictness,
                            mapping=None) -> bool:
    """Closures equal under the mapping, or isomorphic when no mapping is given."""
    if g1.n != g2.n:
        raise InvalidGraphError("reachability comparison needs equal vertex counts")
    c1 = closure(g1, s1)
    c2 = closure(g2, s2)
    if mapping is None:
        return digraph_isomorphic(c1, c2)
    m = _as_mapping(mapping, g1.n, g2.n)
    return frozenset((m.apply(u), m.apply(v)) for u, v in c1.arcs) == c2.arcs


def support_equivalent(g1: TemporalGraph, g2: TemporalGraph,
                       s1: Strictness, s2: Strictness, guard: int = 10) -> bool:
    """Same journeys vertex-sequence-wise, in both directions."""
    if g1.n != g2.n:
        raise InvalidGraphError("support comparison needs equal vertex counts")
    return enumerate_supports(g1, s1, guard) == enumerate_supports(g2, s2, guard)


def induced_reachability_equivalent(g_small: TemporalGraph, g_big: TemporalGraph,
                                    s_small: Strictness, s_big: Strictness,
                                    sigma) -> bool:
    """Closure of g_big restricted to the embedded copy equals g_small's closure."""
    m = _as_mapping(sigma, g_small.n, g_big.n)
    small = closure(g_small, s_small).arcs
    big = closure(g_big, s_big).arcs
    for a in range(g_small.n):
        for b in range(g_small.n):
            if a == b:
                continue
            if ((a, b) in small) != ((m.apply(a), m.apply(b)) in big):
                return False
    return True


def sequence_length_bound(n: int) -> int:
    """Longest useful snapshot sequence on n vertices.

    A snapshot that grows no source's reached set can be dropped without
    changing the closure, and the reached sets can only grow n*(n-1) times
    in total, so every closure is attained by a sequence within this bound.
    """
    return n * (n - 1)


def compress_snapshots(n: int, snapshots: Sequence[Sequence[tuple[int, int]]],
                       strictness: Strictness) -> list[list[tuple[int, int]]]:
    """Drop the snapshots that change no reached set; closure-preserving.

    The result never exceeds sequence_length_bound(n) snapshots.
    """
    reached = [1 << s for s in range(n)]
    kept: list[list[tuple[int, int]]] = []
    for snap in snapshots:
        edges = [(u, v) for u, v in snap]
        masks = None if strictness is Strictness.STRICT else _component_masks(n, edges)
        nxt = []
        changed = False
        for r in reached:
            if strictness is Strictness.STRICT:
                add = 0
                for u, v in edges:
                    if r >> u & 1:
                        add |= 1 << v
                    if r >> v & 1:
                        add |= 1 << u
                r2 = r | add
            else:
                r2 = r
                for cm in masks:
                    if r2 & cm:
                        r2 |= cm
            nxt.append(r2)
            changed = changed or r2 != r
        if changed:
            reached = nxt
            kept.append(edges)
    return kept


def enumerate_labelings(f: StaticGraph, setting: SettingClass) -> Iterator[TemporalGraph]:
    """All canonical labelings of footprint f within the setting class.

    Single-label classes stream ordered set partitions of the edges (with no
    two incident edges sharing a class when local injectivity is required).
    Multi-label classes stream snapshot sequences up to sequence_length_bound
    long, over edge subsets of f (matchings of f when labels must be locally
    injective), with adjacent duplicates suppressed under non-strict journeys
    because repeating a snapshot never extends a non-strict journey.
    """
    if f.directed:
        raise InvalidGraphError("labelings are enumerated over undirected footprints")
    es = sorted(f.edges)
    if setting.require_simple:
        if len(es) > SIMPLE_EDGE_GUARD:
            raise GuardExceededError(
                f"single-label enumeration guarded at {SIMPLE_EDGE_GUARD} edges, got {len(es)}")
        conflicts = None
        if setting.require_proper:
            conflicts = [[j for j in range(i) if set(es[i]) & set(es[j])]
                         for i in range(len(es))]
        for labels in _surjective_labelings(len(es), conflicts):
            yield temporal_graph(f.n, [(u, v, [t]) for (u, v), t in zip(es, labels)])
        return
    if f.n > MULTI_LABEL_VERTEX_GUARD:
        raise GuardExceededError(
            f"multi-label enumeration guarded at n <= {MULTI_LABEL_VERTEX_GUARD}, got {f.n}")
    alphabet = _snapshot_alphabet(es, matchings_only=setting.require_proper)
    no_repeat = setting.strictness is Strictness.NON_STRICT
    for seq in _snapshot_sequences(alphabet, sequence_length_bound(f.n), no_repeat):
        yield _graph_from_sequence(f.n, seq)


def _surjective_labelings(m: int, conflicts) -> Iterator[tuple[int, ...]]:
    """Label tuples over 1..k with image exactly {1..k}, lexicographically.

    conflicts[i], when given, lists earlier positions that must not share
    position i's label.
    """
    if m == 0:
        yield ()
        return
    labels = [0] * m

    def rec(i: int, mx: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            yield tuple(labels)
            return
        remaining = m - 1 - i
        for v in range(1, m + 1):
            if conflicts is not None and any(labels[j] == v for j in conflicts[i]):
                continue
            new_mx = mx if mx >= v else v
            new_used = used | (1 << v)
            # unused values below the max must each fit a later position
            missing = new_mx - bin(new_used & ((2 << new_mx) - 2)).count("1")
            if missing > remaining:
                continue
            labels[i] = v
            yield from rec(i + 1, new_mx, new_used)
        labels[i] = 0

    yield from rec(0, 0, 0)


def _snapshot_alphabet(es: list[tuple[int, int]], matchings_only: bool) -> list[tuple]:
    subsets = []
    for mask in range(1 << len(es)):
        sub = tuple(es[i] for i in range(len(es)) if mask >> i & 1)
        if matchings_only:
            ends = [x for e in sub for x in e]
            if len(set(ends)) != len(ends):
                continue
        subsets.append(sub)
    return subsets


def _snapshot_sequences(alphabet, bound: int, no_repeat: bool) -> Iterator[tuple]:
    # shortest sequences first, so short positive witnesses surface early
    for length in range(bound + 1):
        for seq in itertools.product(alphabet, repeat=length):
            if no_repeat and any(a == b for a, b in zip(seq, seq[1:])):
                continue
            yield seq


def _graph_from_sequence(n: int, seq) -> TemporalGraph:
    labels: dict[tuple[int, int], list[int]] = {}
    for i, snap in enumerate(seq):
        for e in snap:
            labels.setdefault(e, []).append(i + 1)
    return temporal_graph(n, [(u, v, ts) for (u, v), ts in labels.items()])


def _arc_capacity(f: StaticGraph) -> int:
    """Most arcs any closure over footprint f can hold.

    Journeys never leave a footprint component, so each component of size s
    contributes at most s*(s-1) arcs.
    """
    return sum(len(c) * (len(c) - 1) for c in static_components(f))


def _check_target(target: ReachabilityGraph) -> None:
    for u, v in target.arcs:
        if u == v:
            raise InvalidGraphError("target closure must be irreflexive")
        for x in (u, v):
            if not 0 <= x < target.n:
                raise InvalidGraphError(f"arc vertex {x} outside 0..{target.n - 1}")


def realize(target: ReachabilityGraph, setting: SettingClass
            ) -> tuple[TemporalGraph | None, int]:
    """Search for a graph in the setting class whose closure matches target.

    Returns (witness, scanned) on success, (None, scanned) after exhausting
    every canonical labeling of every footprint inside the target's mutual
    pairs.  Matching is up to digraph isomorphism: a witness under any vertex
    relabeling has an exactly-matching relabeled twin inside the scanned
    space, so the pruning loses nothing.  Footprints whose components cannot
    carry enough arcs are skipped whole; `scanned` counts the labelings whose
    closure was actually compared, and is stable run to run.

    Multi-label spaces grow as (subsets of f)^(n*(n-1)); exhausting them is
    only practical for very small targets, which is what the guards reflect.
    """
    _check_target(target)
    if target.n > REALIZE_VERTEX_GUARD:
        raise GuardExceededError(f"realizability search guarded at n <= {REALIZE_VERTEX_GUARD}")
    sym = sorted(target.symmetric_part().edges)
    if setting.require_simple:
        if len(sym) > SIMPLE_EDGE_GUARD:
            raise GuardExceededError(
                f"single-label search guarded at {SIMPLE_EDGE_GUARD} mutual pairs, got {len(sym)}")
    elif target.n > MULTI_LABEL_VERTEX_GUARD:
        raise GuardExceededError(
            f"multi-label search guarded at n <= {MULTI_LABEL_VERTEX_GUARD}, got {target.n}")
    scanned = 0
    want = len(target.arcs)
    for r in range(len(sym) + 1):
        for combo in itertools.combinations(sym, r):
            f = StaticGraph(target.n, frozenset(combo))
            if _arc_capacity(f) < want:
                continue
            for cand in enumerate_labelings(f, setting):
                scanned += 1
                arcs = closure(cand, setting.strictness)
                if len(arcs.arcs) != want:
                    continue
                if digraph_isomorphic(arcs, target):
                    return cand, scanned
    return None, scanned


@dataclass(frozen=True)
class SeparationCase:
    """A target closure together with the setting class that cannot attain it."""

    name: str
    setting: SettingClass
    target: ReachabilityGraph
    description: str


def _case(name: str, setting_name: str, fixture: str, strictness: Strictness,
          description: str) -> SeparationCase:
    fx = FIXTURES[fixture]
    target = ReachabilityGraph(fx.graph.n, fx.expected_closures[strictness])
    return SeparationCase(name, SettingClass.parse(setting_name), target, description)


SEPARATIONS: Mapping[str, SeparationCase] = {c.name: c for c in (
    _case("L2", "simple-strict", "L2", Strictness.STRICT,
          "strict closure of L2: needs a doubled middle edge, beyond single labels"),
    _case("L3", "non-strict", "L3", Strictness.STRICT,
          "strict closure of L3: non-strict journeys always add the end-to-end arcs"),
    _case("L5", "simple-non-strict", "L5", Strictness.NON_STRICT,
          "diamond closure of L5: single labels and non-strict journeys overshoot it"),
    _case("L7", "happy", "L7", Strictness.NON_STRICT,
          "non-strict closure of L7: out of reach once labels are locally injective"),
)}


def verify_separation(case: SeparationCase | str) -> dict:
    """Exhaust the search space for the case; certificate records the outcome."""
    if isinstance(case, str):
        if case not in SEPARATIONS:
            raise InvalidGraphError(f"unknown separation case {case!r}")
        case = SEPARATIONS[case]
    witness, scanned = realize(case.target, case.setting)
    return {
        "case": case.name,
        "setting": case.setting.name,
        "target": closure_to_obj(case.target),
        "scanned": scanned,
        "witness": None if witness is None else temporal_to_obj(witness),
    }


def verify_all_separations() -> list[dict]:
    return [verify_separation(name) for name in sorted(SEPARATIONS)]
