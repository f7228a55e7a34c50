"""Simple undirected graphs with bitset adjacency, plus small-graph utilities.

Vertices are dense 0-based integers.  Neighbor sets are kept as sorted tuples
and, on demand, as integer bitsets; the bitsets are built lazily so that large
sparse graphs (used by the linear-time detectors) never pay for n-bit masks.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional

from .errors import CapacityError, InputError

ISO_MAX = 16


@dataclass(frozen=True)
class Graph:
    n: int
    nbrs: tuple[tuple[int, ...], ...]
    _mask_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.nbrs) // 2

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        a = self.nbrs[u]
        if len(self.nbrs[v]) < len(a):
            a, u, v = self.nbrs[v], v, u
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def mask(self, v: int) -> int:
        """Neighbor set of v as an int bitset (built once, then cached)."""
        mk = self._mask_cache.get(v)
        if mk is None:
            mk = 0
            for u in self.nbrs[v]:
                mk |= 1 << u
            self._mask_cache[v] = mk
        return mk

    def masks(self) -> list[int]:
        return [self.mask(v) for v in range(self.n)]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.nbrs[u]:
                if u < v:
                    yield (u, v)

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of an int bitset in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates are merged.

    Raises InputError on self-loops or out-of-range endpoints.
    """
    if n < 0:
        raise InputError("vertex count must be non-negative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) out of range for n={n}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in adj))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    full = set(range(g.n))
    return Graph(
        g.n,
        tuple(tuple(sorted(full - {v} - set(g.nbrs[v]))) for v in range(g.n)),
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the given vertex set.

    Returns the new graph (vertices renumbered in ascending order of the old
    labels) together with the old->new index map.
    """
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise InputError("induced_subgraph: vertex out of range")
    old_to_new = {v: i for i, v in enumerate(vs)}
    nbrs = tuple(
        tuple(old_to_new[u] for u in g.nbrs[v] if u in old_to_new) for v in vs
    )
    return Graph(len(vs), nbrs), old_to_new


@dataclass(frozen=True)
class Pattern:
    """A small named graph: the unit every detector and reduction works on."""

    graph: Graph
    name: Optional[str] = None

    @property
    def n(self) -> int:
        return self.graph.n

    def __repr__(self) -> str:  # keep test output readable
        return f"Pattern({self.name or '?'}, n={self.n}, m={self.graph.m})"


@dataclass(frozen=True)
class PartitionedGraph:
    """A graph whose vertices carry a part index in {0..k-1}."""

    graph: Graph
    part_of: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if len(self.part_of) != self.graph.n:
            raise InputError("part_of must assign every vertex exactly one part")
        if any(not (0 <= p < self.k) for p in self.part_of):
            raise InputError("part index out of range")

    def parts(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, p in enumerate(self.part_of):
            out[p].append(v)
        return out


def is_H_partite(pg: PartitionedGraph, h: Pattern) -> bool:
    """True iff every edge of pg crosses a part pair that is an edge of h.

    Intra-part edges fail the test (h is simple, so (i,i) is never an edge).
    """
    if pg.k != h.n:
        raise InputError(f"part count {pg.k} != pattern size {h.n}")
    hg = h.graph
    for u, v in pg.graph.edges():
        pu, pv = pg.part_of[u], pg.part_of[v]
        if pu == pv or not hg.has_edge(pu, pv):
            return False
    return True


def _iso_backtrack(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    n = g.n
    gm = g.masks()
    hm = h.masks()
    order = sorted(range(n), key=lambda v: -g.degree(v))
    mapping = [-1] * n
    used = 0

    def place(idx: int) -> bool:
        nonlocal used
        if idx == n:
            return True
        v = order[idx]
        deg = g.degree(v)
        for w in range(n):
            if used >> w & 1 or h.degree(w) != deg:
                continue
            ok = True
            for j in range(idx):
                u = order[j]
                if bool(gm[v] >> u & 1) != bool(hm[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used |= 1 << w
                if place(idx + 1):
                    return True
                used ^= 1 << w
                mapping[v] = -1
        return False

    return tuple(mapping) if place(0) else None


def is_isomorphic(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """An isomorphism g -> h as a tuple (image of vertex i at index i), or None.

    Backtracking with degree pruning; intended for pattern-sized graphs.
    """
    if max(g.n, h.n) > ISO_MAX:
        raise CapacityError(f"isomorphism search capped at {ISO_MAX} vertices")
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return None
    return _iso_backtrack(g, h)


def graphs_equal(g: Graph, h: Graph) -> bool:
    """Equality of labeled edge sets (not isomorphism)."""
    return g.n == h.n and g.nbrs == h.nbrs


# ---------------------------------------------------------------------------
# Edge-list text format: line 1 "n m", then m lines "u v" with u < v, sorted;
# '#'-prefixed lines are comments.
# ---------------------------------------------------------------------------


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise InputError(f"line {lineno}: expected 'n m' header")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise InputError(f"line {lineno}: non-integer header") from None
            continue
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer endpoint") from None
        if not (0 <= u < v < header[0]):
            raise InputError(f"line {lineno}: edge ({u},{v}) violates 0 <= u < v < n")
        edges.append((u, v))
    if header is None:
        raise InputError("line 1: empty edge-list file")
    n, m = header
    if len(edges) != m:
        raise InputError(f"header announced {m} edges, found {len(edges)}")
    g = graph_from_edges(n, edges)
    if g.m != m:
        raise InputError("duplicate edges in edge-list file")
    return g


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_edge_list(g))


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.nbrs[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bitsel in range(1 << len(pairs)):
        yield graph_from_edges(n, [pairs[i] for i in range(len(pairs)) if bitsel >> i & 1])
