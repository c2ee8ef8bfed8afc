"""Instance generators: complete and random n-uniform hypergraphs and the
Fano plane (the smallest 3-uniform hypergraph with no proper 2-coloring).
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from .errors import BudgetExceededError
from .hypergraph import Hypergraph

DEFAULT_EDGE_BUDGET = 1_000_000

# lines {i, i+1, i+3} mod 7; every two lines meet in exactly one point
_FANO_LINES = (
    (0, 1, 3),
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 6),
    (0, 4, 5),
    (1, 5, 6),
    (0, 2, 6),
)


def gen_complete_uniform(
    m: int, n: int, edge_budget: int = DEFAULT_EDGE_BUDGET
) -> Hypergraph:
    """All C(m, n) n-subsets of m vertices, in lexicographic order."""
    if not 2 <= n <= m:
        raise ValueError(f"need 2 <= n <= m, got m={m}, n={n}")
    total = comb(m, n)
    if total > edge_budget:
        raise BudgetExceededError(
            f"complete hypergraph has {total} edges, exceeding budget {edge_budget}"
        )
    return Hypergraph(m, combinations(range(m), n))


def gen_random_uniform(
    m: int,
    n: int,
    edge_count: int,
    seed: int,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
) -> Hypergraph:
    """edge_count distinct uniform n-subsets of m vertices, seeded."""
    if not 2 <= n <= m:
        raise ValueError(f"need 2 <= n <= m, got m={m}, n={n}")
    total = comb(m, n)
    if edge_count < 0 or edge_count > total:
        raise ValueError(
            f"cannot pick {edge_count} distinct edges out of {total} possible"
        )
    if edge_count > edge_budget:
        raise BudgetExceededError(
            f"{edge_count} edges exceed budget {edge_budget}"
        )
    rng = np.random.default_rng(seed)
    if total <= max(4 * edge_count, 4096):
        pool = list(combinations(range(m), n))
        picks = rng.choice(total, size=edge_count, replace=False)
        return Hypergraph(m, [pool[i] for i in picks])
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    while len(edges) < edge_count:
        e = tuple(sorted(rng.choice(m, size=n, replace=False).tolist()))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return Hypergraph(m, edges)


def gen_fano() -> Hypergraph:
    """The Fano plane as a 3-uniform hypergraph on 7 vertices."""
    return Hypergraph(7, _FANO_LINES)
