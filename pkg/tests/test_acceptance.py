"""Acceptance gate: eight criteria, one pass/fail line each (run with -s or
read the captured stdout in the report).  Each test prints

    criterion N: PASS — detail

on success; a failure prints FAIL with the first offending instance and then
asserts.  Randomized suites use fixed seeds, so reruns are reproducible.
"""

import itertools
import random
import time

from tempograph import (
    ComponentMode,
    ReachabilityGraph,
    SettingClass,
    SpannerMode,
    Strictness,
    clique_to_component_instance,
    closure,
    closure_of_snapshots,
    contacts_count,
    dilate,
    distinct_times,
    enumerate_labelings,
    footprint,
    get_fixture,
    induced_reachability_equivalent,
    is_happy,
    is_proper,
    is_temporally_connected,
    lifetime,
    max_temporal_component,
    min_spanner,
    saturate,
    semaphore,
    static_graph,
    static_is_connected,
    support_equivalent,
    verify_separation,
)

from .generators import (
    brute_max_clique,
    random_connected_static,
    random_happy_tc_graph,
    random_proper_graph,
    random_temporal_graph,
)

S, N = Strictness.STRICT, Strictness.NON_STRICT


def _report(num: int, failures: list, detail: str) -> None:
    status = "PASS" if not failures else "FAIL"
    extra = "" if not failures else f" [{len(failures)} failures; first: {failures[0]}]"
    print(f"criterion {num}: {status} — {detail}{extra}")
    assert not failures, f"criterion {num}: {failures[:3]}"


def test_criterion_1_closure_golden():
    t0 = time.monotonic()
    failures = []
    for name, strictness in (("L2", S), ("L3", S), ("L5", N), ("L7", N)):
        fx = get_fixture(name)
        got = closure(fx.graph, strictness).arcs
        want = fx.expected_closures[strictness]
        if got != want:
            failures.append(f"{name}: {sorted(got ^ want)} differ")
    took = time.monotonic() - t0
    if took >= 1.0:
        failures.append(f"took {took:.2f}s, budget 1s")
    _report(1, failures, f"4 golden closures exact in {took:.3f}s")


def test_criterion_2_spanner_numbers():
    t0 = time.monotonic()
    failures = []
    g1 = get_fixture("G1").graph
    g5 = get_fixture("G5").graph
    checks = [
        ("G1 nonstrict contacts", min_spanner(g1, N, SpannerMode.CONTACTS)[0], 3),
        ("G1 strict contacts", min_spanner(g1, S, SpannerMode.CONTACTS)[0], 4),
        ("G1 strict edges", min_spanner(g1, S, SpannerMode.EDGES)[0], 3),
        ("G5 strict edges", min_spanner(g5, S, SpannerMode.EDGES)[0], 6),
    ]
    for label, got, want in checks:
        if got != want:
            failures.append(f"{label}: got {got}, want {want}")
    took = time.monotonic() - t0
    if took >= 5.0:
        failures.append(f"took {took:.2f}s, budget 5s")
    _report(2, failures, f"spanner numbers 3/4/3 and 6 in {took:.3f}s")


def test_criterion_3_separations():
    t0 = time.monotonic()
    failures = []
    first = {name: verify_separation(name) for name in ("L2", "L3", "L5", "L7")}
    for name, cert in first.items():
        if cert["witness"] is not None:
            failures.append(f"{name}: unexpected witness {cert['witness']}")
        if cert["scanned"] <= 0:
            failures.append(f"{name}: empty scan")
    # stability: the exhaustion is deterministic, so a rerun scans identically
    for name, cert in first.items():
        again = verify_separation(name)["scanned"]
        if again != cert["scanned"]:
            failures.append(f"{name}: scan count drifted {cert['scanned']} -> {again}")
    took = time.monotonic() - t0
    if took >= 60.0:
        failures.append(f"took {took:.2f}s, budget 60s")
    counts = {name: cert["scanned"] for name, cert in first.items()}
    _report(3, failures, f"4 separations witness-free, scans {counts}, twice in {took:.1f}s")


def test_criterion_4_transform_properties():
    rng = random.Random(480)
    failures = []
    total = 500
    for i in range(total):
        g = random_temporal_graph(rng, max_n=7, max_tau=5, max_edges=12)
        tau = len(distinct_times(g))
        m = contacts_count(g)

        rep = dilate(g)
        if not is_proper(rep.graph):
            failures.append(f"#{i} dilate not proper: {g}")
        elif not support_equivalent(g, rep.graph, N, S):
            failures.append(f"#{i} dilate changed supports: {g}")

        rep = saturate(g)
        if closure(rep.graph, S).arcs != closure(g, N).arcs:
            failures.append(f"#{i} saturate changed the closure: {g}")
        elif lifetime(rep.graph) != lifetime(g):
            failures.append(f"#{i} saturate changed the lifetime: {g}")
        elif contacts_count(rep.graph) > g.n * (g.n + 1) * tau // 2:
            failures.append(f"#{i} saturate exceeded the contact bound: {g}")

        rep = semaphore(g)
        if not is_happy(rep.graph):
            failures.append(f"#{i} semaphore not happy: {g}")
        elif rep.graph.n != g.n + 2 * m:
            failures.append(f"#{i} semaphore vertex count {rep.graph.n} != {g.n + 2 * m}")
        elif len(rep.graph.edges) != 4 * m or contacts_count(rep.graph) != 4 * m:
            failures.append(f"#{i} semaphore edge count off: {g}")
        elif not induced_reachability_equivalent(g, rep.graph, S, S, rep.sigma):
            failures.append(f"#{i} semaphore changed induced closure: {g}")
        if failures:
            break
    _report(4, failures, f"dilate/saturate/semaphore properties on {total} random graphs")


def test_criterion_5_properness_collapse():
    rng = random.Random(550)
    failures = []
    total = 500
    for i in range(total):
        g = random_proper_graph(rng, max_n=7, max_edges=12)
        if not is_proper(g):
            failures.append(f"#{i} generator emitted an improper graph: {g}")
            break
        if closure(g, S).arcs != closure(g, N).arcs:
            failures.append(f"#{i} closures differ on a proper graph: {g}")
            break
    _report(5, failures, f"strict == non-strict closure on {total} random proper graphs")


def test_criterion_6_reduction_soundness():
    t0 = time.monotonic()
    rng = random.Random(660)
    failures = []
    total = 200
    for i in range(total):
        n0 = rng.randint(4, 6)
        m = rng.randint(max(4, n0 - 1), min(9, n0 * (n0 - 1) // 2))
        f = random_connected_static(rng, n0, m)
        omega = brute_max_clique(f)
        inst = clique_to_component_instance(f)
        want = 2 * m + omega
        open_size, _ = max_temporal_component(inst.graph, S, ComponentMode.OPEN,
                                              guard=inst.graph.n)
        closed_size, _ = max_temporal_component(inst.graph, S, ComponentMode.CLOSED,
                                                guard=inst.graph.n)
        if not (open_size == closed_size == want):
            failures.append(
                f"#{i} n0={n0} m={m}: open={open_size} closed={closed_size} want={want}")
            break
    took = time.monotonic() - t0
    if took >= 600.0:
        failures.append(f"took {took:.1f}s, budget 600s")
    _report(6, failures, f"open == closed == 2m+clique on {total} reductions in {took:.1f}s")


def test_criterion_7_distance_two_pairs_meet():
    rng = random.Random(770)
    failures = []
    total = 1000
    for i in range(total):
        g = random_temporal_graph(rng, max_n=7, max_tau=5, max_edges=12)
        f = footprint(g)
        adj = {v: set() for v in range(g.n)}
        for a, b in f.edges:
            adj[a].add(b)
            adj[b].add(a)
        r = closure(g, N)
        for u, v in itertools.combinations(range(g.n), 2):
            if v in adj[u] or not (adj[u] & adj[v]):
                continue  # distance 1, or farther than 2
            if not (r.has(u, v) or r.has(v, u)):
                failures.append(f"#{i} pair ({u},{v}) unreachable both ways: {g}")
                break
        if failures:
            break
    _report(7, failures, f"distance-2 pairs share an arc on {total} random graphs")


def _spanning_tree_index_sets(n, edges):
    out = []
    for combo in itertools.combinations(range(len(edges)), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merges = 0
        for i in combo:
            a, b = find(edges[i][0]), find(edges[i][1])
            if a != b:
                parent[a] = b
                merges += 1
        if merges == n - 1:
            out.append(combo)
    return out


def test_criterion_8_happy_and_simple_spanner_claims():
    t0 = time.monotonic()
    failures = []

    # randomly generated happy TC graphs: min edge spanner needs >= 2n-4 edges
    rng = random.Random(880)
    happy_counts = {4: 0, 5: 0, 6: 0, 7: 0}
    target_per_size = 30
    for n in sorted(happy_counts):
        while happy_counts[n] < target_per_size:
            g = random_happy_tc_graph(rng, n)
            if g is None:
                failures.append(f"generator starved at n={n}")
                break
            happy_counts[n] += 1
            size, _ = min_spanner(g, S, SpannerMode.EDGES, guard=30)
            if size < 2 * n - 4:
                failures.append(f"happy n={n}: spanner {size} < {2 * n - 4}: {g}")
                break
        if failures:
            break

    # simple TC graphs, exhausting canonical labelings per footprint class:
    # a spanning-tree spanner exists exactly when some snapshot is connected.
    # n <= 4 covers every connected footprint; n = 5 covers all classes with
    # at most 7 edges (the 8..10-edge label spaces are out of desk reach).
    checked = 0
    simple = SettingClass.parse("simple-non-strict")
    if not failures:
        for n, max_m in ((2, 1), (3, 3), (4, 6), (5, 7)):
            for es in _connected_footprint_classes(n, max_m):
                trees = _spanning_tree_index_sets(n, es)
                for g in enumerate_labelings(static_graph(n, es), simple):
                    snaps = _label_snapshots(g)
                    arcs = closure_of_snapshots(n, snaps, N)
                    if len(arcs) != n * (n - 1):
                        continue  # not TC, claim is about TC graphs
                    checked += 1
                    has_conn_snap = any(
                        static_is_connected(static_graph(n, snap)) for snap in snaps)
                    has_tree = _some_tree_is_tc(n, g, trees)
                    if has_tree != has_conn_snap:
                        failures.append(
                            f"n={n} {es}: tree-spanner={has_tree} "
                            f"connected-snapshot={has_conn_snap}: {g}")
                        break
                if failures:
                    break
            if failures:
                break

    took = time.monotonic() - t0
    _report(8, failures,
            f"{sum(happy_counts.values())} happy graphs >= 2n-4; "
            f"{checked} simple TC labelings match the tree-spanner law; {took:.1f}s")


def _connected_footprint_classes(n, max_m):
    """Connected footprints with n-1..max_m edges, one per isomorphism class."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    classes = []
    for m in range(n - 1, max_m + 1):
        for combo in itertools.combinations(pairs, m):
            adj = {v: set() for v in range(n)}
            for a, b in combo:
                adj[a].add(b)
                adj[b].add(a)
            stack, reached = [0], {0}
            while stack:
                for w in adj[stack.pop()]:
                    if w not in reached:
                        reached.add(w)
                        stack.append(w)
            if len(reached) != n:
                continue
            canon = min(tuple(sorted((min(p[a], p[b]), max(p[a], p[b])) for a, b in combo))
                        for p in perms)
            if canon not in seen:
                seen.add(canon)
                classes.append(combo)
    return classes


def _label_snapshots(g):
    by_time = {}
    for e in g.edges:
        by_time.setdefault(e.labels[0], []).append((e.u, e.v))
    return [by_time[t] for t in sorted(by_time)]


def _some_tree_is_tc(n, g, trees):
    es = [(e.u, e.v, e.labels[0]) for e in g.edges]
    for combo in trees:
        by_time = {}
        for i in combo:
            u, v, t = es[i]
            by_time.setdefault(t, []).append((u, v))
        snaps = [by_time[t] for t in sorted(by_time)]
        if len(closure_of_snapshots(n, snaps, N)) == n * (n - 1):
            return True
    return False
