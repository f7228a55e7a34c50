"""Clique subgraphs, clique-minor partitions, and the derived size bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt
from typing import Optional, Union

from .errors import CapacityError, InputError
from .graphs import Graph, Pattern, bits, connected_components, induced_subgraph
from .homcore import is_core

CLIQUE_MAX = 20
MINOR_MAX = 12

GraphLike = Union[Graph, Pattern]


def _g(x: GraphLike) -> Graph:
    return x.graph if isinstance(x, Pattern) else x


@dataclass(frozen=True)
class MinorFunction:
    """A partition of V(pattern) into t labeled blocks witnessing a clique minor.

    Every block induces a connected subgraph and every pair of blocks has at
    least one edge between them.
    """

    pattern: Pattern
    t: int
    f: tuple[int, ...]

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.t)]
        for v, lab in enumerate(self.f):
            out[lab].append(v)
        return out

    def validate(self) -> bool:
        g = self.pattern.graph
        if len(self.f) != g.n or self.t < 1:
            return False
        if any(not (0 <= lab < self.t) for lab in self.f):
            return False
        block_masks = [0] * self.t
        for v, lab in enumerate(self.f):
            block_masks[lab] |= 1 << v
        if any(mask == 0 for mask in block_masks):
            return False
        for mask in block_masks:
            if not _connected_in(g, mask):
                return False
        reach = [0] * self.t
        for v in range(g.n):
            reach[self.f[v]] |= g.mask(v)
        for i in range(self.t):
            for j in range(i + 1, self.t):
                if not (reach[i] & block_masks[j]):
                    return False
        return True

    def relabeled(self, perm: tuple[int, ...]) -> "MinorFunction":
        """Apply a permutation of block labels (perm[old] = new)."""
        if sorted(perm) != list(range(self.t)):
            raise InputError("relabeling must be a permutation of the block labels")
        return MinorFunction(self.pattern, self.t, tuple(perm[lab] for lab in self.f))


def _connected_in(g: Graph, mask: int) -> bool:
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.mask(v)
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def max_clique(h: GraphLike) -> int:
    """Exact maximum clique size by branch and bound with bitset candidates."""
    g = _g(h)
    if g.n > CLIQUE_MAX:
        raise CapacityError(f"max clique capped at {CLIQUE_MAX} vertices")
    if g.n == 0:
        return 0
    masks = g.masks()
    best = [1]

    def expand(size: int, cand: int) -> None:
        if size + cand.bit_count() <= best[0]:
            return
        if cand == 0:
            best[0] = max(best[0], size)
            return
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            expand(size + 1, cand & masks[v])

    expand(0, g.vertex_mask())
    return best[0]


def has_clique(h: GraphLike, t: int) -> Optional[tuple[int, ...]]:
    """A t-clique as a vertex tuple if one exists, else None (t=0 gives ())."""
    g = _g(h)
    if t <= 0:
        return ()
    if g.n > CLIQUE_MAX + 44:  # generous: early-exit search, not full optimum
        raise CapacityError("clique witness search capped at 64 vertices")
    masks = g.masks()
    chosen: list[int] = []

    def expand(cand: int) -> bool:
        if len(chosen) == t:
            return True
        if len(chosen) + cand.bit_count() < t:
            return False
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand ^= 1 << v
            chosen.append(v)
            if expand(cand & masks[v]):
                return True
            chosen.pop()
            if len(chosen) + cand.bit_count() < t:
                return False
        return False

    return tuple(chosen) if expand(g.vertex_mask()) else None


def _rgs_partitions(n: int, t: int):
    """Restricted-growth strings on n items with exactly t blocks, lex order."""
    a = [0] * n

    def rec(i: int, maxlab: int):
        if n - i < t - (maxlab + 1):
            return
        if i == n:
            if maxlab + 1 == t:
                yield tuple(a)
            return
        hi = min(maxlab + 1, t - 1)
        for lab in range(hi + 1):
            a[i] = lab
            yield from rec(i + 1, max(maxlab, lab))

    if t >= 1 and n >= t:
        a[0] = 0
        yield from rec(1, 0)


def find_Kt_minor_function(h: GraphLike, t: int) -> Optional[MinorFunction]:
    """Lexicographically smallest t-block minor partition of h, or None.

    Enumerates set partitions via restricted-growth strings and checks block
    connectivity plus pairwise block adjacency.
    """
    g = _g(h)
    if g.n > MINOR_MAX:
        raise CapacityError(f"minor search capped at {MINOR_MAX} vertices")
    if t < 1 or t > g.n:
        return None
    pattern = h if isinstance(h, Pattern) else Pattern(g)
    masks = g.masks()
    for labels in _rgs_partitions(g.n, t):
        block_masks = [0] * t
        for v, lab in enumerate(labels):
            block_masks[lab] |= 1 << v
        reach = [0] * t
        for v, lab in enumerate(labels):
            reach[lab] |= masks[v]
        ok = True
        for i in range(t):
            if not ok:
                break
            for j in range(i + 1, t):
                if not (reach[i] & block_masks[j]):
                    ok = False
                    break
        if not ok:
            continue
        if all(_connected_in(g, mask) for mask in block_masks):
            return MinorFunction(pattern, t, labels)
    return None


def max_clique_minor(h: GraphLike) -> tuple[int, MinorFunction]:
    """Largest t admitting a minor partition, with a witness.

    For a disconnected pattern the maximum is taken over connected components
    and the witness lives on the winning component's induced subgraph.
    """
    g = _g(h)
    if g.n > MINOR_MAX:
        raise CapacityError(f"minor search capped at {MINOR_MAX} vertices")
    if g.n == 0:
        raise InputError("empty pattern has no clique minor")
    comps = connected_components(g)
    if len(comps) > 1:
        best: Optional[tuple[int, MinorFunction]] = None
        for comp in comps:
            sub, _ = induced_subgraph(g, comp)
            t, mf = max_clique_minor(Pattern(sub))
            if best is None or t > best[0]:
                best = (t, mf)
        assert best is not None
        return best
    upper = min(g.n, (g.n + max_clique(g)) // 2)
    for t in range(upper, 0, -1):
        mf = find_Kt_minor_function(h, t)
        if mf is not None:
            return t, mf
    raise AssertionError("unreachable: t=1 always works for a connected graph")


def eta_path_cycle_formula(kind: str, k: int) -> int:
    """Closed form for the maximum clique minor of a path/cycle complement.

    Follows the floor((k + clique)/2) rule with the known small exceptions
    (path complements on 4 and 5 vertices, cycle complements on 3 and 4).
    """
    if kind == "path":
        if k < 2:
            raise InputError("path complements need k >= 2")
        if k == 4:
            return 2
        if k == 5:
            return 3
        omega = (k + 1) // 2
    elif kind == "cycle":
        if k < 3:
            raise InputError("cycle complements need k >= 3")
        if k == 3:
            return 1  # complement of a triangle is edgeless
        if k == 4:
            return 2
        omega = k // 2
    else:
        raise InputError(f"kind must be 'path' or 'cycle', got {kind!r}")
    return (k + omega) // 2


def _ceil_sqrt_frac(num: int, den: int) -> int:
    """Smallest integer s with s*s*den >= num (num, den positive)."""
    s = isqrt((num + den - 1) // den)
    while s * s * den < num:
        s += 1
    while s >= 1 and (s - 1) * (s - 1) * den >= num:
        s -= 1
    return s


def core_clique_lower_bound(h: GraphLike) -> int:
    """max(ceil(sqrt((k+2w)/2)), ceil(sqrt(k/1.95))) for a core on k vertices."""
    g = _g(h)
    if g.n > 16:
        raise CapacityError("lower-bound formula capped at 16 vertices")
    if not is_core(h):
        raise InputError("core_clique_lower_bound requires a core pattern")
    k, w = g.n, max_clique(g)
    return max(_ceil_sqrt_frac(k + 2 * w, 2), _ceil_sqrt_frac(20 * k, 39))


def induced_si_bound(k: int) -> int:
    """ceil(k^(1/4) / 1.39), computed with exact integer arithmetic."""
    if k < 1:
        raise InputError("pattern size must be positive")
    s = 0
    while (139 * s) ** 4 < k * 100**4:
        s += 1
    return s
