"""Brute-force exact matching counts with per-corner constraints.

This is the independent ground truth the generated recursion systems are
validated against.  The core counter eliminates the lowest-index surviving
vertex v of the bitmask state: either v stays unmatched, or it is matched
to one of its surviving neighbors.  Memoization is keyed by the surviving
mask; the copy-major vertex order of HanoiGraph keeps the reachable state
count small on these self-similar graphs.

Corner constraints reduce to vertex deletions: a monomer-forced corner is
deleted up front, and a dimer-forced set D is handled by inclusion-exclusion
over its subsets, sum_{T subseteq D} (-1)^|T| N(G - monomers - T).

Every call owns a private memo table, so concurrent calls are independent.
Not meant to scale past a few dozen vertices; the recursion system is the
scalable path.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .errors import CapExceeded, IntegrityError
from .evolve import BoundaryClassVector
from .hanoi_graph import HanoiGraph

DEFAULT_ORACLE_VERTEX_CAP = 40
DEFAULT_MEMO_CAP = 1 << 26

GraphLike = "HanoiGraph | tuple[int, Iterable[tuple[int, int]]]"


class CornerState(Enum):
    MONOMER = "m"  # corner must stay unmatched
    DIMER = "d"  # corner must be matched
    FREE = "f"


@dataclass(frozen=True)
class CornerConstraint:
    """One state per corner; length must equal d+1."""

    states: tuple[CornerState, ...]

    @classmethod
    def parse(cls, text: str) -> CornerConstraint:
        try:
            return cls(tuple(CornerState(ch) for ch in text))
        except ValueError:
            raise ValueError(
                f"constraint {text!r} must use only 'm', 'd', 'f'"
            ) from None

    @classmethod
    def dimer_prefix(cls, d: int, k: int) -> CornerConstraint:
        """First k corners dimer-forced, the rest monomer-forced."""
        return cls(tuple(CornerState.DIMER if i < k else CornerState.MONOMER
                         for i in range(d + 1)))


def _graph_data(graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    if isinstance(graph, HanoiGraph):
        return graph.vertex_count, graph.edges
    vertex_count, edges = graph
    return vertex_count, tuple(edges)


def count_matchings(graph, *, vertex_cap: int = DEFAULT_ORACLE_VERTEX_CAP,
                    memo_cap: int = DEFAULT_MEMO_CAP,
                    _removed: frozenset[int] = frozenset()) -> int:
    """Exact number of matchings (independent edge subsets), empty one included."""
    vertex_count, edges = _graph_data(graph)
    if vertex_count > vertex_cap:
        raise CapExceeded(
            f"oracle refuses {vertex_count} vertices, above the cap of "
            f"{vertex_cap}; raise it with --vertex-cap"
        )
    adjacency = [0] * vertex_count
    alive = 0
    for v in range(vertex_count):
        if v not in _removed:
            alive |= 1 << v
    for u, v in edges:
        if u in _removed or v in _removed:
            continue
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u

    memo: dict[int, int] = {}

    def count(mask: int) -> int:
        if mask == 0:
            return 1
        cached = memo.get(mask)
        if cached is not None:
            return cached
        v_bit = mask & -mask
        v = v_bit.bit_length() - 1
        rest = mask ^ v_bit
        total = count(rest)  # v unmatched
        neighbors = adjacency[v] & rest
        while neighbors:
            u_bit = neighbors & -neighbors
            total += count(rest ^ u_bit)  # v matched to u
            neighbors ^= u_bit
        if len(memo) >= memo_cap:
            raise CapExceeded(
                f"matching memo table hit the cap of {memo_cap} entries; "
                "raise it with --memo-cap"
            )
        memo[mask] = total
        return total

    return count(alive)


def count_constrained(graph, constraint: CornerConstraint, *,
                      vertex_cap: int = DEFAULT_ORACLE_VERTEX_CAP,
                      memo_cap: int = DEFAULT_MEMO_CAP) -> int:
    """Matchings honoring the per-corner monomer/dimer/free constraints."""
    if not isinstance(graph, HanoiGraph):
        raise TypeError("corner constraints need a HanoiGraph with labeled corners")
    if len(constraint.states) != graph.d + 1:
        raise ValueError(
            f"constraint has {len(constraint.states)} entries, graph has "
            f"{graph.d + 1} corners"
        )
    monomers = frozenset(
        c for c, s in zip(graph.corners, constraint.states) if s is CornerState.MONOMER
    )
    dimers = [c for c, s in zip(graph.corners, constraint.states) if s is CornerState.DIMER]
    total = 0
    for r in range(len(dimers) + 1):
        for removed in combinations(dimers, r):
            part = count_matchings(
                graph, vertex_cap=vertex_cap, memo_cap=memo_cap,
                _removed=monomers | frozenset(removed),
            )
            total += -part if r % 2 else part
    return total


def boundary_class_vector(graph: HanoiGraph, *,
                          vertex_cap: int = DEFAULT_ORACLE_VERTEX_CAP,
                          memo_cap: int = DEFAULT_MEMO_CAP) -> BoundaryClassVector:
    """All d+2 class counts of a built graph, with the symmetry cross-check.

    For every k, each k-subset of corners must give the same count; a
    disagreement would indicate a construction bug and raises IntegrityError.
    """
    d = graph.d
    counts = []
    for k in range(d + 2):
        seen: set[int] = set()
        for chosen in combinations(range(d + 1), k):
            states = tuple(
                CornerState.DIMER if i in chosen else CornerState.MONOMER
                for i in range(d + 1)
            )
            seen.add(count_constrained(graph, CornerConstraint(states),
                                       vertex_cap=vertex_cap, memo_cap=memo_cap))
        if len(seen) != 1:
            raise IntegrityError(
                f"corner-symmetry violation for k={k} on TH_{d}({graph.n}): "
                f"distinct counts {sorted(seen)}"
            )
        counts.append(seen.pop())
    m = count_matchings(graph, vertex_cap=vertex_cap, memo_cap=memo_cap)
    return BoundaryClassVector(d=d, n=graph.n, counts=tuple(counts), m=m)
