"""Seeded instance generators and the small-graph enumerator.

All randomness flows through an explicit seed; identical seeds give
byte-identical instances.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .errors import InputError
from .graphs import Graph, graph_from_edges, is_isomorphic
from .reductions import Hypergraph4P3U

GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]  # unlabeled graphs by n


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) via geometric edge skipping (fast when sparse)."""
    if not (0.0 <= p <= 1.0) or n < 0:
        raise InputError("gnp needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(("gnp", n, p, seed))
    edges = []
    if p >= 1.0:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return graph_from_edges(n, edges)
    if p > 0.0:
        import math

        log_q = math.log1p(-p)
        total = n * (n - 1) // 2
        idx = -1
        while True:
            idx += int(math.log(1.0 - rng.random()) / log_q) + 1
            if idx >= total:
                break
            # unrank pair index -> (u, v)
            u = int((2 * n - 1 - math.sqrt((2 * n - 1) ** 2 - 8 * idx)) / 2)
            base = u * (2 * n - u - 1) // 2
            while base > idx:
                u -= 1
                base = u * (2 * n - u - 1) // 2
            while u + 1 < n and base + (n - u - 1) <= idx:
                base += n - u - 1
                u += 1
            v = u + 1 + (idx - base)
            edges.append((u, v))
    return graph_from_edges(n, edges)


def planted_clique(n: int, t: int, p: float, seed: int) -> Graph:
    """G(n, p) with vertices 0..t-1 forced into a clique."""
    if t > n:
        raise InputError("clique size exceeds vertex count")
    g = gnp(n, p, seed)
    extra = [(u, v) for u in range(t) for v in range(u + 1, t)]
    return graph_from_edges(n, list(g.edges()) + extra)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree (decoded Pruefer sequence)."""
    if n <= 0:
        raise InputError("tree needs at least one vertex")
    if n == 1:
        return graph_from_edges(1, [])
    if n == 2:
        return graph_from_edges(2, [(0, 1)])
    rng = random.Random(("tree", n, seed))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return graph_from_edges(n, edges)


def _hg_triples(sizes: tuple[int, int, int, int]):
    for parts in itertools.combinations(range(4), 3):
        for idxs in itertools.product(*(range(sizes[p]) for p in parts)):
            yield tuple(zip(parts, idxs))


def hg_random(sizes: tuple[int, int, int, int], p: float, seed: int) -> Hypergraph4P3U:
    """4-partite 3-uniform hypergraph with each admissible triple kept w.p. p."""
    rng = random.Random(("hg", sizes, p, seed))
    triples = frozenset(t for t in _hg_triples(sizes) if rng.random() < p)
    return Hypergraph4P3U(sizes, triples)


def hg_planted(sizes: tuple[int, int, int, int], seed: int) -> Hypergraph4P3U:
    """Hypergraph holding exactly the four triples of one random hyperclique."""
    if any(s < 1 for s in sizes):
        raise InputError("every part needs at least one vertex")
    rng = random.Random(("hgplant", sizes, seed))
    quad = [rng.randrange(sizes[i]) for i in range(4)]
    triples = set()
    for parts in itertools.combinations(range(4), 3):
        triples.add(tuple((p, quad[p]) for p in parts))
    return Hypergraph4P3U(sizes, frozenset(triples))


def _invariant(g: Graph) -> tuple:
    masks = g.masks()
    tri = []
    for v in range(g.n):
        c = 0
        for u in g.nbrs[v]:
            c += (masks[v] & masks[u]).bit_count()
        tri.append(c // 2)
    return (g.n, g.m, tuple(sorted(zip(map(g.degree, range(g.n)), tri))))


@lru_cache(maxsize=None)
def all_graphs_up_to_iso(n: int) -> tuple[Graph, ...]:
    """All unlabeled graphs on n vertices, built by incremental extension."""
    if n == 0:
        return (graph_from_edges(0, []),)
    if n == 1:
        return (graph_from_edges(1, []),)
    out: dict[tuple, list[Graph]] = {}
    for base in all_graphs_up_to_iso(n - 1):
        base_edges = list(base.edges())
        for nb_mask in range(1 << (n - 1)):
            edges = base_edges + [
                (u, n - 1) for u in range(n - 1) if nb_mask >> u & 1
            ]
            g = graph_from_edges(n, edges)
            key = _invariant(g)
            bucket = out.setdefault(key, [])
            if not any(is_isomorphic(g, h) is not None for h in bucket):
                bucket.append(g)
    result = tuple(g for bucket in out.values() for g in bucket)
    if n < len(GRAPH_COUNTS):
        assert len(result) == GRAPH_COUNTS[n], (n, len(result))
    return result
