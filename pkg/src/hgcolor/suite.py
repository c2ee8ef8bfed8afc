"""A fixed 40-instance benchmark suite, small enough for the exact
ordering oracle (at most 8 vertices, so at most 8! orderings each).

Entries are (name, hypergraph, r) with deterministic construction; the
suite is shared by cross-validation tests and the CLI.
"""

from __future__ import annotations

from .generators import gen_complete_uniform, gen_fano, gen_random_uniform
from .hypergraph import Hypergraph

SuiteEntry = tuple[str, Hypergraph, int]


def fixed_suite() -> list[SuiteEntry]:
    entries: list[SuiteEntry] = [
        ("single_edge_n3", Hypergraph(3, [(0, 1, 2)]), 2),
        ("path_2uniform", Hypergraph(3, [(0, 1), (1, 2)]), 2),
        ("triangle_r2", Hypergraph(3, [(0, 1), (1, 2), (0, 2)]), 2),
        ("triangle_r3", Hypergraph(3, [(0, 1), (1, 2), (0, 2)]), 3),
        ("fano_r2", gen_fano(), 2),
        ("fano_r3", gen_fano(), 3),
        ("k4_graph", gen_complete_uniform(4, 2), 2),
        ("k5_graph_r3", gen_complete_uniform(5, 2), 3),
        ("complete_5_3", gen_complete_uniform(5, 3), 2),
        ("complete_6_3", gen_complete_uniform(6, 3), 2),
        ("complete_6_4", gen_complete_uniform(6, 4), 2),
        ("two_disjoint_triangles_r3", Hypergraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]), 3),
    ]
    specs = [
        # (m, n, edges, r)
        (5, 2, 6, 2),
        (6, 2, 8, 2),
        (6, 2, 10, 2),
        (7, 2, 12, 2),
        (8, 2, 14, 2),
        (8, 2, 10, 3),
        (6, 3, 8, 2),
        (7, 3, 10, 2),
        (7, 3, 15, 2),
        (8, 3, 12, 2),
        (8, 3, 20, 2),
        (8, 3, 12, 3),
        (7, 4, 10, 2),
        (8, 4, 14, 2),
        (8, 4, 20, 2),
        (8, 4, 12, 3),
        (8, 5, 12, 2),
        (8, 5, 18, 2),
        (7, 5, 9, 2),
        (8, 6, 10, 2),
    ]
    for idx, (m, n, edges, r) in enumerate(specs):
        h = gen_random_uniform(m, n, edges, seed=1000 + idx)
        entries.append((f"random_m{m}_n{n}_e{edges}_r{r}_s{idx}", h, r))
    # denser 2-uniform instances where greedy actually fails sometimes
    for idx in range(8):
        h = gen_random_uniform(6, 2, 11 + idx % 3, seed=2000 + idx)
        entries.append((f"dense_graph_{idx}", h, 2))
    assert len(entries) == 40
    return entries
