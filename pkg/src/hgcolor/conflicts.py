"""Conflict structures of a birth-time assignment.

First/last vertices, dangerous and conflicting edge pairs, r-chains,
edge lengths and short edges, and attribution of conflicting pairs to the
three-interval partition used in the two-color analysis. Everything here is
exact for the given assignment; probabilities live in :mod:`hgcolor.bounds`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ChainCeilingError
from .hypergraph import BirthTimeAssignment, Hypergraph

DEFAULT_CHAIN_CEILING = 10_000_000


@dataclass(frozen=True)
class Chain:
    """Edges f_1..f_r with |f_i ∩ f_{i+1}| = 1 (link x_i) and all other
    pairs disjoint."""

    edges: tuple[int, ...]
    links: tuple[int, ...]

    def __post_init__(self):
        if len(self.links) != len(self.edges) - 1:
            raise ValueError("a chain of r edges has r-1 links")


@dataclass(frozen=True)
class IntervalPartition:
    """[0,1] split into B = [0,(1-p)/2), P = [(1-p)/2,(1+p)/2), R = [(1+p)/2,1]."""

    p: float

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise ValueError(f"p must lie in (0,1), got {self.p}")

    @property
    def lo(self) -> float:
        return (1.0 - self.p) / 2.0

    @property
    def hi(self) -> float:
        return (1.0 + self.p) / 2.0

    def locate(self, x: float) -> str:
        if x < self.lo:
            return "B"
        if x < self.hi:
            return "P"
        return "R"


def first_last(edge: Iterable[int], t: BirthTimeAssignment) -> tuple[int, int]:
    """The edge's vertices with smallest and largest birth time (index ties
    broken ascending)."""
    verts = list(edge)
    if not verts:
        raise ValueError("empty edge has no first or last vertex")
    first = min(verts, key=lambda v: (t[v], v))
    last = max(verts, key=lambda v: (t[v], v))
    return first, last


def edge_length(edge: Iterable[int], t: BirthTimeAssignment) -> float:
    """Span of the edge's birth times (max - min)."""
    times = [t[v] for v in edge]
    if not times:
        raise ValueError("empty edge has no length")
    return max(times) - min(times)


def dangerous_pairs(h: Hypergraph) -> list[tuple[int, int]]:
    """All ordered pairs of distinct edges sharing exactly one vertex."""
    sets = h.edge_sets
    m = len(sets)
    out = []
    for i in range(m):
        for j in range(m):
            if i != j and len(sets[i] & sets[j]) == 1:
                out.append((i, j))
    return out


def _firsts_lasts(
    h: Hypergraph, t: BirthTimeAssignment
) -> tuple[list[int], list[int]]:
    firsts, lasts = [], []
    for e in h.edges:
        f, l = first_last(e, t)
        firsts.append(f)
        lasts.append(l)
    return firsts, lasts


def conflicting_pairs(h: Hypergraph, t: BirthTimeAssignment) -> list[tuple[int, int]]:
    """Ordered pairs (e, f) where the last vertex of e is the first vertex
    of f. Such pairs share exactly that vertex, so they are dangerous."""
    firsts, lasts = _firsts_lasts(h, t)
    by_first: dict[int, list[int]] = {}
    for fi, v in enumerate(firsts):
        by_first.setdefault(v, []).append(fi)
    out = []
    for ei, v in enumerate(lasts):
        for fi in by_first.get(v, ()):
            if fi != ei:
                out.append((ei, fi))
    return sorted(out)


def enumerate_chains(
    h: Hypergraph, r: int, ceiling: int = DEFAULT_CHAIN_CEILING
) -> Iterator[Chain]:
    """Yield every r-chain exactly once (edges ordered, indices distinct).

    Raises ChainCeilingError once more than `ceiling` chains have been
    produced; never truncates silently.
    """
    if r < 2:
        raise ValueError(f"chains need r >= 2 edges, got {r}")
    sets = h.edge_sets
    m = len(sets)
    # neighbour lists restricted to |intersection| == 1, with the link vertex
    neighbours: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i != j:
                inter = sets[i] & sets[j]
                if len(inter) == 1:
                    neighbours[i].append((j, next(iter(inter))))
    count = 0
    path = [0] * r
    links = [0] * (r - 1)

    def extend(depth: int) -> Iterator[Chain]:
        nonlocal count
        for (j, link) in neighbours[path[depth - 1]]:
            ok = True
            for k in range(depth - 1):
                if path[k] == j or sets[path[k]] & sets[j]:
                    ok = False
                    break
            if not ok:
                continue
            path[depth] = j
            links[depth - 1] = link
            if depth == r - 1:
                count += 1
                if count > ceiling:
                    raise ChainCeilingError(ceiling)
                yield Chain(tuple(path), tuple(links))
            else:
                yield from extend(depth + 1)

    for start in range(m):
        path[0] = start
        yield from extend(1)


def conflicting_chains(
    h: Hypergraph,
    t: BirthTimeAssignment,
    r: int,
    ceiling: int = DEFAULT_CHAIN_CEILING,
) -> list[Chain]:
    """The r-chains that are conflicting under t: the last vertex of each
    edge is the first vertex of its successor.

    Enumerated directly by following last->first matches (equivalent to
    filtering enumerate_chains, but pruned by the conflict condition).
    """
    if r < 2:
        raise ValueError(f"chains need r >= 2 edges, got {r}")
    sets = h.edge_sets
    firsts, lasts = _firsts_lasts(h, t)
    by_first: dict[int, list[int]] = {}
    for fi, v in enumerate(firsts):
        by_first.setdefault(v, []).append(fi)
    out: list[Chain] = []
    path = [0] * r
    links = [0] * (r - 1)

    def extend(depth: int) -> None:
        prev = path[depth - 1]
        v = lasts[prev]
        for j in by_first.get(v, ()):
            if j == prev or len(sets[prev] & sets[j]) != 1:
                continue
            ok = True
            for k in range(depth - 1):
                if path[k] == j or sets[path[k]] & sets[j]:
                    ok = False
                    break
            if not ok:
                continue
            path[depth] = j
            links[depth - 1] = v
            if depth == r - 1:
                if len(out) >= ceiling:
                    raise ChainCeilingError(ceiling)
                out.append(Chain(tuple(path), tuple(links)))
            else:
                extend(depth + 1)

    for start in range(len(sets)):
        path[0] = start
        extend(1)
    return out


def short_edges(
    h: Hypergraph, t: BirthTimeAssignment, r: int, p: float
) -> list[int]:
    """Edges whose birth-time span is below (1-p)/r."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0,1), got {p}")
    threshold = (1.0 - p) / r
    return [
        ei for ei, e in enumerate(h.edges) if edge_length(e, t) < threshold
    ]


@dataclass(frozen=True)
class IntervalConflictCounts:
    b: int
    p: int
    r: int

    @property
    def total(self) -> int:
        return self.b + self.p + self.r


def classify_conflicts_by_interval(
    h: Hypergraph, t: BirthTimeAssignment, partition: IntervalPartition
) -> IntervalConflictCounts:
    """Count conflicting pairs by the interval holding their common vertex."""
    counts = {"B": 0, "P": 0, "R": 0}
    _, lasts = _firsts_lasts(h, t)
    for (ei, _fi) in conflicting_pairs(h, t):
        counts[partition.locate(t[lasts[ei]])] += 1
    return IntervalConflictCounts(counts["B"], counts["P"], counts["R"])


def link_interval_bounds(i: int, r: int, p: float) -> tuple[float, float]:
    """Interval [(i - i·p)/r, (i + (r-i)·p)/r] that must contain the i-th
    link's birth time in any conflicting chain with no short edge."""
    if not 1 <= i <= r - 1:
        raise ValueError(f"link index {i} outside 1..{r - 1}")
    return (i - i * p) / r, (i + (r - i) * p) / r
