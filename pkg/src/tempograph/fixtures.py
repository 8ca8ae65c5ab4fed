"""Built-in example graphs with frozen expected closures.

The expected arc sets are stored literally rather than recomputed, so a
regression in the closure engine shows up as a mismatch against known data.
They were derived once by exhaustive journey enumeration and cross-checked
against the sweep engine before being frozen.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidGraphError
from .graphs import Strictness, TemporalGraph, temporal_graph


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    graph: TemporalGraph
    expected_closures: Mapping[Strictness, frozenset[tuple[int, int]]]


def _fx(name, description, n, edges, names, strict_arcs, nonstrict_arcs):
    return Fixture(
        name, description, temporal_graph(n, edges, names),
        {Strictness.STRICT: frozenset(strict_arcs), Strictness.NON_STRICT: frozenset(nonstrict_arcs)},
    )


_COMPLETE_4 = [(i, j) for i in range(4) for j in range(4) if i != j]

FIXTURES: dict[str, Fixture] = {f.name: f for f in (
    _fx("G1", "four-cycle with two labels per edge, temporally connected under both disciplines",
        4, [(0, 1, [1, 3]), (0, 3, [2, 3]), (1, 2, [1, 2]), (2, 3, [1, 3])], "abcd",
        _COMPLETE_4, _COMPLETE_4),
    _fx("G2", "three edges all at time 3; connected non-strictly, not strictly",
        4, [(0, 1, [3]), (0, 3, [3]), (2, 3, [3])], "abcd",
        [(0, 1), (0, 3), (1, 0), (2, 3), (3, 0), (3, 2)], _COMPLETE_4),
    _fx("G3", "four-cycle, one label per edge, strictly connected; a 4-contact spanner of G1",
        4, [(0, 1, [1]), (0, 3, [2]), (1, 2, [2]), (2, 3, [1])], "abcd",
        _COMPLETE_4, _COMPLETE_4),
    _fx("G4", "three-edge path with doubled outer edges; a 3-edge strict spanner of G1",
        4, [(0, 1, [1, 3]), (1, 2, [2]), (2, 3, [1, 3])], "abcd",
        _COMPLETE_4, _COMPLETE_4),
    _fx("G5", "complete graph on four vertices, every edge at time 1",
        4, [(0, 1, [1]), (0, 2, [1]), (0, 3, [1]), (1, 2, [1]), (1, 3, [1]), (2, 3, [1])], "abcd",
        _COMPLETE_4, _COMPLETE_4),
    _fx("L2", "path with doubled middle edge; its strict closure has no simple strict realization",
        4, [(0, 1, [1]), (1, 2, [1, 2]), (2, 3, [2])], "abcd",
        [(0, 1), (0, 2), (1, 0), (1, 2), (1, 3), (2, 1), (2, 3), (3, 2)],
        [(0, 1), (0, 2), (0, 3), (1, 0), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (3, 1), (3, 2)]),
    _fx("L3", "two-edge path, both edges at time 1; strict closure needs multi-labels to realize",
        3, [(0, 1, [1]), (1, 2, [1])], "abc",
        [(0, 1), (1, 0), (1, 2), (2, 1)],
        [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]),
    _fx("L5", "proper path, outer edges at 2 and middle at 1 and 3; diamond closure",
        4, [(0, 1, [2]), (1, 2, [1, 3]), (2, 3, [2])], "abcd",
        [(0, 1), (0, 2), (1, 0), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (3, 1), (3, 2)],
        [(0, 1), (0, 2), (1, 0), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (3, 1), (3, 2)]),
    _fx("L7", "five vertices, five single-label edges; non-strict closure has no happy realization",
        5, [(0, 2, [1]), (0, 3, [1]), (1, 2, [2]), (2, 3, [3]), (3, 4, [2])], "abcde",
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3),
         (3, 0), (3, 2), (3, 4), (4, 2), (4, 3)],
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 0), (2, 1), (2, 3), (2, 4),
         (3, 0), (3, 1), (3, 2), (3, 4), (4, 2), (4, 3)]),
    _fx("dilation-demo", "five vertices whose time-1 snapshot holds a three-edge path; exercises dilation",
        5, [(0, 1, [1, 3]), (1, 2, [1, 2]), (2, 3, [1]), (2, 4, [3, 4]), (3, 4, [2])], "abcef",
        [(0, 1), (0, 2), (0, 4), (1, 0), (1, 2), (1, 4), (2, 0), (2, 1), (2, 3), (2, 4),
         (3, 0), (3, 1), (3, 2), (3, 4), (4, 2), (4, 3)],
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 2), (1, 3), (1, 4), (2, 0), (2, 1),
         (2, 3), (2, 4), (3, 0), (3, 1), (3, 2), (3, 4), (4, 2), (4, 3)]),
    _fx("semaphore-demo", "doubled edge plus a pendant edge; smallest interesting gadget-transform input",
        3, [(0, 1, [1, 2]), (1, 2, [1])], "uvw",
        [(0, 1), (1, 0), (1, 2), (2, 0), (2, 1)],
        [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]),
)}


def list_fixtures() -> tuple[str, ...]:
    return tuple(FIXTURES)


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise InvalidGraphError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
