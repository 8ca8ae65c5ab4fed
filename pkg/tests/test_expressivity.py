import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from tempograph import (
    GuardExceededError,
    InvalidGraphError,
    ReachabilityGraph,
    SEPARATIONS,
    SettingClass,
    Strictness,
    VertexMapping,
    closure,
    closure_of_snapshots,
    compress_snapshots,
    digraph_isomorphic,
    enumerate_labelings,
    footprint,
    get_fixture,
    induced_reachability_equivalent,
    realize,
    reachability_equivalent,
    saturate,
    sequence_length_bound,
    snapshot_sequence,
    static_graph,
    support_equivalent,
    temporal_graph,
    verify_all_separations,
    verify_separation,
)

from .generators import random_temporal_graph

S, N = Strictness.STRICT, Strictness.NON_STRICT
SIMPLE_STRICT = SettingClass.parse("simple-strict")
HAPPY = SettingClass.parse("happy")
PROPER = SettingClass.parse("proper")


# ------------------------------------------------------------- mappings, iso

def test_vertex_mapping_basics():
    m = VertexMapping.identity(3)
    assert [m.apply(i) for i in range(3)] == [0, 1, 2]
    assert len(m) == 3
    with pytest.raises(InvalidGraphError):
        VertexMapping((0, 0), 2)       # not injective
    with pytest.raises(InvalidGraphError):
        VertexMapping((0, 5), 2)       # image outside codomain


def test_digraph_isomorphic_positive():
    a = ReachabilityGraph(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    b = ReachabilityGraph(3, frozenset({(1, 0), (0, 2), (2, 1)}))
    assert digraph_isomorphic(a, b)


def test_digraph_isomorphic_negative():
    path = ReachabilityGraph(3, frozenset({(0, 1), (1, 2)}))
    fork = ReachabilityGraph(3, frozenset({(0, 1), (0, 2)}))
    assert not digraph_isomorphic(path, fork)
    assert not digraph_isomorphic(path, ReachabilityGraph(3, frozenset({(0, 1)})))


def test_digraph_isomorphic_guard():
    big = ReachabilityGraph(9, frozenset())
    with pytest.raises(GuardExceededError):
        digraph_isomorphic(big, big)


# ----------------------------------------------------------- equivalences

def test_reachability_equivalent_modes():
    g = temporal_graph(3, [(0, 1, [1]), (1, 2, [2])])   # ascending path, one-way 0->2
    assert reachability_equivalent(g, g, S, S, VertexMapping.identity(3))
    h = temporal_graph(3, [(0, 1, [2]), (1, 2, [1])])   # mirrored: one-way 2->0
    assert not reachability_equivalent(g, h, S, S, VertexMapping.identity(3))
    assert reachability_equivalent(g, h, S, S)          # but isomorphic via 0<->2
    with pytest.raises(InvalidGraphError):
        reachability_equivalent(g, temporal_graph(2, [(0, 1, [1])]), S, S)


def test_saturate_is_closure_but_not_support_equivalent():
    g = get_fixture("L3").graph
    out = saturate(g).graph
    assert reachability_equivalent(g, out, N, N, VertexMapping.identity(3))
    # the filled-in chord supports a direct 0-2 journey the path never had
    assert not support_equivalent(g, out, N, N)


def test_semaphore_induces_the_strict_closure():
    from tempograph import semaphore
    g = get_fixture("L3").graph   # nonstrict and strict closures differ here
    rep = semaphore(g)
    assert induced_reachability_equivalent(g, rep.graph, S, S, rep.sigma)
    assert not induced_reachability_equivalent(g, rep.graph, N, S, rep.sigma)


# -------------------------------------------------------------- compression

def test_sequence_length_bound_values():
    assert [sequence_length_bound(n) for n in (1, 2, 3, 4)] == [0, 2, 6, 12]


def test_compress_drops_noop_snapshots():
    snaps = [[(0, 1)], [(0, 1)], [], [(1, 2)], [(1, 2)]]
    kept = compress_snapshots(3, snaps, N)
    assert kept == [[(0, 1)], [(1, 2)]]
    assert compress_snapshots(3, snaps, S) == kept  # repeats add nothing here either
    # but a repeated whole-path snapshot does buy strict journeys another hop
    twice = [[(0, 1), (1, 2)], [(0, 1), (1, 2)]]
    assert compress_snapshots(3, twice, S) == twice
    assert compress_snapshots(3, twice, N) == twice[:1]


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6))
def test_compress_preserves_closure_within_bound(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    length = rng.randint(0, 14)
    pairs = list(itertools.combinations(range(n), 2))
    snaps = [rng.sample(pairs, rng.randint(0, len(pairs))) for _ in range(length)]
    for s in (S, N):
        kept = compress_snapshots(n, snaps, s)
        assert len(kept) <= sequence_length_bound(n)
        assert closure_of_snapshots(n, kept, s) == closure_of_snapshots(n, snaps, s)
        assert compress_snapshots(n, kept, s) == kept  # idempotent


def test_fixture_sequences_compress_within_bound():
    for name in ("G1", "L5", "L7", "dilation-demo"):
        g = get_fixture(name).graph
        kept = compress_snapshots(g.n, snapshot_sequence(g), N)
        assert len(kept) <= sequence_length_bound(g.n)


# -------------------------------------------------------------- enumeration

def _matching_footprint(m):
    return static_graph(2 * max(m, 1), [(2 * i, 2 * i + 1) for i in range(m)])


def test_simple_labeling_counts_follow_the_surjection_numbers():
    # m edges, no incidence constraints: ordered set partitions of m items
    want = {0: 1, 1: 1, 2: 3, 3: 13, 4: 75, 5: 541}
    for m, count in want.items():
        stream = list(enumerate_labelings(_matching_footprint(m), SIMPLE_STRICT))
        assert len(stream) == count
        assert len(set(stream)) == count  # no duplicates


def test_simple_labelings_use_an_initial_label_segment():
    for g in enumerate_labelings(static_graph(3, [(0, 1), (1, 2)]), SIMPLE_STRICT):
        used = {t for e in g.edges for t in e.labels}
        assert used == set(range(1, len(used) + 1))


def test_happy_labeling_counts():
    two_incident = static_graph(3, [(0, 1), (1, 2)])
    assert sum(1 for _ in enumerate_labelings(two_incident, HAPPY)) == 2
    star3 = static_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert sum(1 for _ in enumerate_labelings(star3, HAPPY)) == 6
    triangle = static_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert sum(1 for _ in enumerate_labelings(triangle, HAPPY)) == 6
    two_disjoint = _matching_footprint(2)
    assert sum(1 for _ in enumerate_labelings(two_disjoint, HAPPY)) == 3


def test_every_emitted_labeling_is_admitted():
    f = static_graph(3, [(0, 1), (1, 2)])
    for name in ("simple-strict", "simple-non-strict", "happy"):
        setting = SettingClass.parse(name)
        for g in enumerate_labelings(f, setting):
            assert setting.admits(g)
    for name in ("strict", "non-strict", "proper"):
        setting = SettingClass.parse(name)
        for g in itertools.islice(enumerate_labelings(f, setting), 200):
            assert setting.admits(g)


def test_multi_label_stream_sizes_single_edge():
    f = static_graph(2, [(0, 1)])
    # alphabet {empty, {e}}; bound 2; non-strict forbids adjacent repeats
    assert sum(1 for _ in enumerate_labelings(f, SettingClass.parse("non-strict"))) == 5
    assert sum(1 for _ in enumerate_labelings(f, SettingClass.parse("strict"))) == 7


def test_proper_stream_uses_matchings_only():
    f = static_graph(3, [(0, 1), (1, 2)])
    # snapshots never contain both incident edges at once
    for g in itertools.islice(enumerate_labelings(f, PROPER), 300):
        from tempograph import distinct_times, snapshot
        for t in distinct_times(g):
            deg = {}
            for (a, b) in snapshot(g, t).edges:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            assert all(d <= 1 for d in deg.values())


def test_enumeration_guards():
    with pytest.raises(GuardExceededError):
        next(enumerate_labelings(_matching_footprint(11), SIMPLE_STRICT))
    with pytest.raises(GuardExceededError):
        next(enumerate_labelings(static_graph(6, [(0, 1)]), SettingClass.parse("strict")))
    with pytest.raises(InvalidGraphError):
        next(enumerate_labelings(static_graph(2, [(0, 1)], directed=True), SIMPLE_STRICT))


# ------------------------------------------------------ canonical soundness

@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_order_preserving_relabel_keeps_the_closure(seed):
    # justification for enumerating canonical label values only
    rng = random.Random(seed)
    g = random_temporal_graph(rng, max_n=6)
    # any strictly monotone time map; gaps and offsets must not matter
    offset = rng.randint(0, 5)
    h = temporal_graph(g.n, [(e.u, e.v, [3 * t + offset for t in e.labels]) for e in g.edges],
                       g.names)
    for s in (S, N):
        assert closure(g, s).arcs == closure(h, s).arcs


def test_footprint_edges_yield_mutual_arcs():
    rng = random.Random(2026)
    for _ in range(80):
        g = random_temporal_graph(rng)
        r = closure(g, S)
        for (u, v) in footprint(g).edges:
            assert r.has(u, v) and r.has(v, u)


# ------------------------------------------------------------------ realize

def test_realize_single_mutual_pair():
    target = ReachabilityGraph(2, frozenset({(0, 1), (1, 0)}))
    witness, scanned = realize(target, SIMPLE_STRICT)
    assert witness is not None
    assert closure(witness, S).arcs == target.arcs
    assert scanned >= 1


def test_realize_finds_the_l2_closure_with_multi_labels():
    fx = get_fixture("L2")
    target = ReachabilityGraph(4, fx.expected_closures[S])
    witness, scanned = realize(target, SettingClass.parse("strict"))
    assert witness is not None
    assert digraph_isomorphic(closure(witness, S), target)
    assert scanned == 40  # regression pin: deterministic scan order


def test_realize_rejects_malformed_targets():
    with pytest.raises(InvalidGraphError):
        realize(ReachabilityGraph(2, frozenset({(0, 0)})), SIMPLE_STRICT)
    with pytest.raises(GuardExceededError):
        realize(ReachabilityGraph(7, frozenset()), SIMPLE_STRICT)


def test_realize_empty_target():
    witness, scanned = realize(ReachabilityGraph(3, frozenset()), SIMPLE_STRICT)
    assert witness is not None
    assert witness.edges == ()


# -------------------------------------------------------------- separations

def test_separation_l2_is_unrealizable_with_single_labels():
    cert = verify_separation("L2")
    assert cert["witness"] is None
    assert cert["setting"] == "simple-strict"
    assert cert["scanned"] == 13  # 8 footprints, all but K3-path pruned; 13 labelings


def test_separation_l3_is_unrealizable_nonstrictly():
    cert = verify_separation("L3")
    assert cert["witness"] is None
    assert cert["scanned"] == 1457


def test_separation_l3_closure_realizable_elsewhere():
    # same target, friendlier class: the fixture itself is found
    fx = get_fixture("L3")
    target = ReachabilityGraph(3, fx.expected_closures[S])
    witness, _ = realize(target, SIMPLE_STRICT)
    assert witness is not None
    # and the proper class cannot do it either (snapshots are matchings)
    witness2, scanned2 = realize(target, PROPER)
    assert witness2 is None
    assert scanned2 == 1093


def test_unknown_separation_name():
    with pytest.raises(InvalidGraphError):
        verify_separation("L99")


def test_separation_catalog_shape():
    assert set(SEPARATIONS) == {"L2", "L3", "L5", "L7"}
    for name, case in SEPARATIONS.items():
        assert case.name == name
        assert case.target.n == get_fixture(name).graph.n
