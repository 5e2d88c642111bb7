"""Independent brute-force oracles used to cross-check the library.

These deliberately avoid the library's verifier internals: consecutiveness
is tested by sorting and stepping, and existence by enumerating every
injection of {1..p+t} into the vertices.  Only usable for p + t <= ~9.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from semdef.graphs import Graph


def sums_are_consecutive(sums) -> bool:
    if not sums:
        return True
    ordered = sorted(sums)
    return all(b - a == 1 for a, b in zip(ordered, ordered[1:]))


def labeling_is_sem_bruteforce(g: Graph, labels, total_labels: int) -> bool:
    """Direct check of one labeling: injective into range, sums consecutive."""
    if len(labels) != g.vertex_count:
        return False
    if len(set(labels)) != len(labels):
        return False
    if any(not (1 <= lab <= total_labels) for lab in labels):
        return False
    return sums_are_consecutive([labels[u] + labels[v] for u, v in g.edges])


def sem_exists_bruteforce(g: Graph, t: int) -> bool:
    """Enumerate every injection {1..p+t} -> V and test consecutiveness."""
    p = g.vertex_count
    n_total = p + t
    if p == 0:
        return True
    for chosen in combinations(range(1, n_total + 1), p):
        for perm in permutations(chosen):
            if sums_are_consecutive([perm[u] + perm[v] for u, v in g.edges]):
                return True
    return False


def all_injections(p: int, n_total: int):
    for chosen in combinations(range(1, n_total + 1), p):
        yield from permutations(chosen)


def random_graph(rng: random.Random, p: int) -> Graph:
    density = rng.choice((0.2, 0.4, 0.6))
    edges = [
        (u, v) for u in range(p) for v in range(u + 1, p) if rng.random() < density
    ]
    return Graph(p, edges)
