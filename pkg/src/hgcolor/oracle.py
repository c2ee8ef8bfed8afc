"""Exact ground truth by exhaustion: r-colorability with witness, proper
coloring counts, and the exact greedy success probability over all vertex
orderings (the algorithm depends on birth times only through the induced
order, so averaging over permutations is exact).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .errors import BudgetExceededError
from .hypergraph import Coloring, Hypergraph

DEFAULT_ORACLE_BUDGET = 10_000_000


@dataclass(frozen=True)
class OrderingStatistics:
    """Exact census of greedy outcomes over every processing order."""

    total_orderings: int
    proper_orderings: int

    @property
    def success_probability(self) -> Fraction:
        if self.total_orderings == 0:
            return Fraction(1)
        return Fraction(self.proper_orderings, self.total_orderings)


def is_r_colorable(
    h: Hypergraph, r: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> tuple[bool, Coloring | None]:
    """Backtracking search for a proper r-coloring; returns a witness.

    The budget caps tried (vertex, color) assignments and fails loudly.
    """
    h.require_valid()
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    v_count = h.vertex_count
    if v_count > 32 and r**v_count > budget:
        raise BudgetExceededError(
            f"colorability search on {v_count} vertices exceeds budget {budget}"
        )
    incidence = h.incidence
    sizes = h.edge_sizes
    colors = [0] * v_count
    edge_seen = [0] * h.edge_count  # 0 none, -1 mixed, j uniform
    edge_colored = [0] * h.edge_count
    nodes = 0

    def completes_mono(v: int, j: int) -> bool:
        for ei in incidence[v]:
            if edge_colored[ei] == sizes[ei] - 1:
                c = edge_seen[ei]
                if c == j or c == 0:
                    return True
        return False

    def place(v: int, j: int) -> None:
        colors[v] = j
        for ei in incidence[v]:
            edge_colored[ei] += 1
            c = edge_seen[ei]
            if c == 0:
                edge_seen[ei] = j
            elif c != j:
                edge_seen[ei] = -1

    def unplace(v: int, j: int) -> None:
        colors[v] = 0
        for ei in incidence[v]:
            edge_colored[ei] -= 1
            # recompute the seen-color summary for this edge
            seen = 0
            for u in h.edges[ei]:
                cu = colors[u]
                if cu:
                    if seen == 0:
                        seen = cu
                    elif seen != cu:
                        seen = -1
                        break
            edge_seen[ei] = seen

    def search(v: int) -> bool:
        nonlocal nodes
        if v == v_count:
            return True
        for j in range(1, r + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"colorability search exceeded budget {budget}"
                )
            if completes_mono(v, j):
                continue
            place(v, j)
            if search(v + 1):
                return True
            unplace(v, j)
        return False

    if search(0):
        return True, Coloring(colors, r)
    return False, None


def count_proper_colorings(
    h: Hypergraph, r: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> int:
    """Exact number of proper r-colorings by pruned exhaustive search."""
    h.require_valid()
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if r**h.vertex_count > budget:
        raise BudgetExceededError(
            f"{r}^{h.vertex_count} colorings exceed budget {budget}"
        )
    incidence = h.incidence
    sizes = h.edge_sizes
    colors = [0] * h.vertex_count
    edge_seen = [0] * h.edge_count
    edge_colored = [0] * h.edge_count

    def count(v: int) -> int:
        if v == h.vertex_count:
            return 1
        total = 0
        for j in range(1, r + 1):
            bad = False
            for ei in incidence[v]:
                if edge_colored[ei] == sizes[ei] - 1:
                    c = edge_seen[ei]
                    if c == j or c == 0:
                        bad = True
                        break
            if bad:
                continue
            colors[v] = j
            undo = []
            for ei in incidence[v]:
                edge_colored[ei] += 1
                c = edge_seen[ei]
                undo.append((ei, c))
                if c == 0:
                    edge_seen[ei] = j
                elif c != j:
                    edge_seen[ei] = -1
            total += count(v + 1)
            for ei, c in reversed(undo):
                edge_colored[ei] -= 1
                edge_seen[ei] = c
            colors[v] = 0
        return total

    return count(0)


def greedy_success_exact(
    h: Hypergraph, r: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> OrderingStatistics:
    """Run the greedy rule under every ordering of the vertices.

    A run fails exactly when some vertex finds all colors blocked, so each
    order is aborted at the first forced vertex.
    """
    h.require_valid()
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    v_count = h.vertex_count
    total = factorial(v_count)
    if total > budget:
        raise BudgetExceededError(
            f"{v_count}! orderings exceed budget {budget}"
        )
    incidence = h.incidence
    m = h.edge_count
    last_threshold = [s - 1 for s in h.edge_sizes]
    all_blocked = ((1 << r) - 1) << 1
    color_range = tuple(range(1, r + 1))
    proper = 0
    for order in permutations(range(v_count)):
        edge_seen = [0] * m
        edge_colored = [0] * m
        ok = True
        for v in order:
            blocked = 0
            for ei in incidence[v]:
                if edge_colored[ei] == last_threshold[ei]:
                    c = edge_seen[ei]
                    if c > 0:
                        blocked |= 1 << c
                    elif c == 0:
                        blocked = all_blocked
                        break
            if blocked == all_blocked:
                ok = False
                break
            choice = r
            for j in color_range:
                if not blocked & (1 << j):
                    choice = j
                    break
            for ei in incidence[v]:
                edge_colored[ei] += 1
                c = edge_seen[ei]
                if c == 0:
                    edge_seen[ei] = choice
                elif c != choice:
                    edge_seen[ei] = -1
        if ok:
            proper += 1
    return OrderingStatistics(total, proper)
