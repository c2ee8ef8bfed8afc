"""Random greedy r-coloring and its variants.

The driver processes vertices in ascending birth time and gives each vertex
the smallest color that does not complete a monochromatic edge at that
moment (an edge can only become monochromatic when its last vertex is
colored). When every color is blocked the vertex takes color r and is
recorded as forced. Variants: an explicit-permutation driver, a two-phase
precolor-then-greedy scheme for two colors, and a random equitable-partition
baseline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .hypergraph import BirthTimeAssignment, Coloring, Hypergraph

_MIXED = -1  # edge has seen at least two colors
_NONE = 0  # edge has seen no color yet


@dataclass(frozen=True)
class GreedyTrace:
    """Outcome of one greedy run.

    processing_order is the order vertices received colors (for the plain
    driver: birth-time order with index tie-breaks). forced_vertices are the
    vertices that found every color blocked and took color r.
    """

    coloring: Coloring
    forced_vertices: tuple[int, ...]
    processing_order: tuple[int, ...]


def sample_birth_times(vertex_count: int, rng_seed: int) -> BirthTimeAssignment:
    """Independent uniform [0,1) birth times, deterministic per seed."""
    rng = np.random.default_rng(rng_seed)
    return BirthTimeAssignment(rng.random(vertex_count).tolist())


def _run(
    h: Hypergraph,
    order: Sequence[int],
    r: int,
    colors: list[int],
    edge_seen: list[int],
    edge_colored: list[int],
) -> list[int]:
    """Greedy rule over `order`; mutates the three state arrays in place.

    colors[v] == 0 means uncolored; edge state may be pre-seeded (two-phase).
    Returns the forced vertices in processing order.
    """
    incidence = h.incidence
    sizes = h.edge_sizes
    all_blocked = ((1 << r) - 1) << 1
    forced: list[int] = []
    for v in order:
        blocked = 0
        for ei in incidence[v]:
            if edge_colored[ei] == sizes[ei] - 1:
                c = edge_seen[ei]
                if c > 0:
                    blocked |= 1 << c
                elif c == _NONE:
                    # v is the whole edge: any color completes it
                    blocked = all_blocked
                    break
        choice = r
        if blocked != all_blocked:
            for j in range(1, r + 1):
                if not blocked & (1 << j):
                    choice = j
                    break
        else:
            forced.append(v)
        colors[v] = choice
        for ei in incidence[v]:
            edge_colored[ei] += 1
            c = edge_seen[ei]
            if c == _NONE:
                edge_seen[ei] = choice
            elif c != choice:
                edge_seen[ei] = _MIXED
    return forced


def greedy_color_by_permutation(h: Hypergraph, order: Sequence[int], r: int) -> GreedyTrace:
    """Greedy rule driven by an explicit processing order."""
    if r < 2:
        raise ValueError(f"need r >= 2 colors, got {r}")
    h.require_valid()
    order = tuple(order)
    if sorted(order) != list(range(h.vertex_count)):
        raise ValueError("order is not a permutation of all vertices")
    colors = [0] * h.vertex_count
    edge_seen = [_NONE] * h.edge_count
    edge_colored = [0] * h.edge_count
    forced = _run(h, order, r, colors, edge_seen, edge_colored)
    return GreedyTrace(Coloring(colors, r), tuple(forced), order)


def greedy_color(h: Hypergraph, t: BirthTimeAssignment, r: int) -> GreedyTrace:
    """Greedy coloring in ascending birth-time order."""
    if len(t) != h.vertex_count:
        raise ValueError(
            f"birth times cover {len(t)} of {h.vertex_count} vertices"
        )
    return greedy_color_by_permutation(h, t.order(), r)


def greedy_succeeds(h: Hypergraph, order: Sequence[int], r: int) -> bool:
    """Fast properness check: a run fails iff some vertex gets forced.

    (A forced vertex takes color r while an incident edge has all its other
    vertices colored r, completing a monochromatic edge; conversely a
    monochromatic edge has color r and its last vertex was forced.)
    """
    incidence = h.incidence
    sizes = h.edge_sizes
    edge_seen = [_NONE] * h.edge_count
    edge_colored = [0] * h.edge_count
    all_blocked = ((1 << r) - 1) << 1
    for v in order:
        blocked = 0
        for ei in incidence[v]:
            if edge_colored[ei] == sizes[ei] - 1:
                c = edge_seen[ei]
                if c > 0:
                    blocked |= 1 << c
                elif c == _NONE:
                    return False
        if blocked == all_blocked:
            return False
        choice = r
        for j in range(1, r + 1):
            if not blocked & (1 << j):
                choice = j
                break
        for ei in incidence[v]:
            edge_colored[ei] += 1
            c = edge_seen[ei]
            if c == _NONE:
                edge_seen[ei] = choice
            elif c != choice:
                edge_seen[ei] = _MIXED
    return True


def two_phase_color(
    h: Hypergraph, t: BirthTimeAssignment, r: int = 2, p: float = 0.5
) -> GreedyTrace:
    """Precolor the outer birth-time intervals, then run greedy on the middle.

    Phase 1 colors t(v) < (1-p)/2 with color 1 and t(v) >= (1+p)/2 with
    color 2, ignoring edges. Phase 2 colors the remaining vertices in birth
    order under the greedy rule with phase-1 colors fixed.
    """
    if r != 2:
        raise ValueError("two-phase coloring is defined for r = 2 only")
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0,1), got {p}")
    if len(t) != h.vertex_count:
        raise ValueError(f"birth times cover {len(t)} of {h.vertex_count} vertices")
    h.require_valid()
    lo, hi = (1.0 - p) / 2.0, (1.0 + p) / 2.0
    colors = [0] * h.vertex_count
    edge_seen = [_NONE] * h.edge_count
    edge_colored = [0] * h.edge_count
    precolored: list[int] = []
    middle: list[int] = []
    for v in t.order():
        time = t[v]
        if time < lo:
            colors[v] = 1
        elif time >= hi:
            colors[v] = 2
        else:
            middle.append(v)
            continue
        precolored.append(v)
        for ei in h.incidence[v]:
            edge_colored[ei] += 1
            c = edge_seen[ei]
            if c == _NONE:
                edge_seen[ei] = colors[v]
            elif c != colors[v]:
                edge_seen[ei] = _MIXED
    forced = _run(h, middle, r, colors, edge_seen, edge_colored)
    return GreedyTrace(Coloring(colors, r), tuple(forced), tuple(precolored + middle))


def equitable_partition_color(h: Hypergraph, rng_seed, r: int) -> Coloring:
    """Uniformly random coloring with class sizes differing by at most one."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    rng = np.random.default_rng(rng_seed)
    q, s = divmod(h.vertex_count, r)
    labels = [j for j in range(1, r + 1) for _ in range(q)]
    if s:
        # which colors get the extra vertex is itself uniform
        labels.extend(int(c) + 1 for c in rng.choice(r, size=s, replace=False))
    labels = [labels[i] for i in rng.permutation(h.vertex_count)]
    return Coloring(labels, r)
