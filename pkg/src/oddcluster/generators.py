"""Graph families and seeded random generators used by the CLI and tests."""

import random
from itertools import combinations

from .graph import Graph


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph(n, combinations(range(n), 2))


def star_graph(n):
    """Star on n vertices: centre 0, leaves 1..n-1."""
    if n < 1:
        raise ValueError("star needs at least 1 vertex")
    return Graph(n, [(0, i) for i in range(1, n)])


def empty_graph(n):
    return Graph(n, [])


def random_tree(n, seed):
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, edges)


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_partial_ktree(n, k, seed, edge_keep=0.8):
    """Random subgraph of a random k-tree; treewidth at most k by construction."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    rng = random.Random(seed)
    base = min(k + 1, n)
    edges = list(combinations(range(base), 2))
    cliques = [tuple(range(base))] if k > 0 else [(0,)]
    for v in range(base, n):
        host = list(rng.choice(cliques))
        if len(host) > k:
            host = rng.sample(host, k)
        for u in host:
            edges.append((u, v))
        cliques.append(tuple(sorted(host)) + (v,))
    kept = [e for e in edges if rng.random() < edge_keep]
    return Graph(n, kept)
