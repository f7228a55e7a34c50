"""Homomorphisms, cores, chromatic numbers, and rainbow coverings.

Everything here is exponential in the pattern size and guarded by hard caps;
these routines are meant for constant-size patterns only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import CapacityError, InputError
from .graphs import (
    Graph,
    Pattern,
    bits,
    induced_subgraph,
)

HOM_MAX = 16
CHROMATIC_MAX = 16
CRITICAL_MAX = 14
COVER_MAX_VERTICES = 12
COVER_MAX_COPIES = 64

GraphLike = Union[Graph, Pattern]


def _g(x: GraphLike) -> Graph:
    return x.graph if isinstance(x, Pattern) else x


def find_homomorphism(h: GraphLike, c: GraphLike) -> Optional[tuple[int, ...]]:
    """An edge-preserving map V(h) -> V(c) as a tuple, or None.

    Backtracking over the source vertices in descending-degree order; a
    partial image is rejected as soon as some already-placed neighbor fails
    to map to a neighbor.
    """
    hg, cg = _g(h), _g(c)
    if max(hg.n, cg.n) > HOM_MAX:
        raise CapacityError(f"homomorphism search capped at {HOM_MAX} vertices")
    if hg.n == 0:
        return ()
    if cg.n == 0:
        return None
    order = sorted(range(hg.n), key=lambda v: -hg.degree(v))
    pos = {v: i for i, v in enumerate(order)}
    cmasks = cg.masks()
    full = cg.vertex_mask()
    image = [0] * hg.n

    def place(idx: int) -> bool:
        if idx == hg.n:
            return True
        v = order[idx]
        cand = full
        for u in hg.nbrs[v]:
            if pos[u] < idx:
                cand &= cmasks[image[u]]
        for w in bits(cand):
            image[v] = w
            if place(idx + 1):
                return True
        return False

    return tuple(image) if place(0) else None


def _retract_once(g: Graph) -> Optional[list[int]]:
    """A homomorphism from g onto a proper induced subgraph, or None."""
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        sub, old_to_new = induced_subgraph(g, keep)
        hom = find_homomorphism(g, sub)
        if hom is not None:
            new_to_old = {i: u for u, i in old_to_new.items()}
            return [new_to_old[w] for w in hom]
    return None


def is_core(h: GraphLike) -> bool:
    """True iff h admits no homomorphism to any proper induced subgraph."""
    g = _g(h)
    if g.n > HOM_MAX:
        raise CapacityError(f"core check capped at {HOM_MAX} vertices")
    return _retract_once(g) is None


def compute_core(h: GraphLike) -> tuple[Pattern, tuple[int, ...]]:
    """The core of h plus a retraction onto it.

    Returns (core, rho) where core is an induced subgraph of h (relabeled to
    0..c-1) and rho maps each h-vertex to a core vertex, edge-preservingly.
    The core's vertex set inside h is the lexicographically smallest among
    the minimum-size retract images, for determinism.
    """
    g = _g(h)
    if g.n > HOM_MAX:
        raise CapacityError(f"core computation capped at {HOM_MAX} vertices")
    if g.n == 0:
        return Pattern(g, None), ()

    # Shrink to some minimal retract to learn the core size.
    work = g
    keep_old = list(range(g.n))  # work-vertex -> g-vertex
    while True:
        hom = _retract_once(work)
        if hom is None:
            break
        image = sorted(set(hom))
        work, old_to_new = induced_subgraph(work, image)
        keep_old = [keep_old[v] for v in image]
    c = work.n

    # Lexicographically smallest vertex set of that size carrying a retract.
    for subset in itertools.combinations(range(g.n), c):
        sub, old_to_new = induced_subgraph(g, subset)
        hom = find_homomorphism(g, sub)
        if hom is not None:
            return Pattern(sub, None), hom
    raise AssertionError("unreachable: the shrunken retract itself qualifies")


def _greedy_clique_size(g: Graph) -> int:
    best = 0
    masks = g.masks()
    for v in sorted(range(g.n), key=lambda v: -g.degree(v)):
        size, cand = 1, masks[v]
        while cand:
            w = max(bits(cand), key=lambda w: (cand & masks[w]).bit_count())
            size += 1
            cand &= masks[w]
        best = max(best, size)
    return best


def _colorable_with(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    masks = g.masks()
    color = [-1] * g.n

    def place(idx: int, used: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        seen = 0
        for u in bits(masks[v]):
            if color[u] >= 0:
                seen |= 1 << color[u]
        limit = min(used + 1, k)
        for col in range(limit):
            if seen >> col & 1:
                continue
            color[v] = col
            if place(idx + 1, max(used, col + 1)):
                return True
            color[v] = -1
        return False

    return place(0, 0)


def chromatic_number(h: GraphLike) -> int:
    """Exact chromatic number by branch and bound."""
    g = _g(h)
    if g.n > CHROMATIC_MAX:
        raise CapacityError(f"chromatic number capped at {CHROMATIC_MAX} vertices")
    if g.n == 0:
        return 0
    lo = max(1, _greedy_clique_size(g))
    for k in range(lo, g.n + 1):
        if _colorable_with(g, k):
            return k
    return g.n


def is_color_critical(h: GraphLike) -> bool:
    """True iff removing any single vertex lowers the chromatic number."""
    g = _g(h)
    if g.n > CRITICAL_MAX:
        raise CapacityError(f"color-criticality check capped at {CRITICAL_MAX} vertices")
    if g.n == 0:
        return False
    chi = chromatic_number(g)
    for v in range(g.n):
        sub, _ = induced_subgraph(g, [u for u in range(g.n) if u != v])
        if chromatic_number(sub) >= chi:
            return False
    return True


def subgraph_copy_sets(f: GraphLike, c: GraphLike) -> list[frozenset[int]]:
    """Vertex sets of f that carry a (not necessarily induced) copy of c.

    Each returned set S supports an injective edge-preserving map of c onto
    exactly S; sets are deduplicated and sorted for determinism.
    """
    fg, cg = _g(f), _g(c)
    if max(fg.n, cg.n) > HOM_MAX:
        raise CapacityError(f"copy enumeration capped at {HOM_MAX} vertices")
    if cg.n > fg.n:
        return []
    order = sorted(range(cg.n), key=lambda v: -cg.degree(v))
    pos = {v: i for i, v in enumerate(order)}
    fmasks = fg.masks()
    full = fg.vertex_mask()
    image = [0] * cg.n
    found: set[frozenset[int]] = set()

    def place(idx: int, used: int) -> None:
        if idx == cg.n:
            found.add(frozenset(image))
            return
        v = order[idx]
        cand = full & ~used
        for u in cg.nbrs[v]:
            if pos[u] < idx:
                cand &= fmasks[image[u]]
        for w in bits(cand):
            image[v] = w
            place(idx + 1, used | 1 << w)

    place(0, 0)
    return sorted(found, key=sorted)


def find_C_coloring(f: GraphLike, c: GraphLike) -> Optional[tuple[int, ...]]:
    """A coloring of f with |V(c)| colors making every copy of c rainbow.

    "Copy" means subgraph copy.  Returns the color tuple or None.  The search
    enumerates the copies once, then backtracks over vertex colors, pruning a
    color as soon as it repeats inside any copy.
    """
    fg, cg = _g(f), _g(c)
    ncolors = cg.n
    if ncolors == 0:
        return None if fg.n else ()
    copies = subgraph_copy_sets(fg, cg)
    member_of: list[list[int]] = [[] for _ in range(fg.n)]
    for ci, s in enumerate(copies):
        for v in s:
            member_of[v].append(ci)
    used: list[int] = [0] * len(copies)  # bitmask of colors used inside copy
    color = [-1] * fg.n
    order = sorted(range(fg.n), key=lambda v: -len(member_of[v]))

    def place(idx: int) -> bool:
        if idx == fg.n:
            return True
        v = order[idx]
        for col in range(ncolors):
            bit = 1 << col
            if any(used[ci] & bit for ci in member_of[v]):
                continue
            color[v] = col
            for ci in member_of[v]:
                used[ci] |= bit
            if place(idx + 1):
                return True
            for ci in member_of[v]:
                used[ci] ^= bit
            color[v] = -1
        return False

    return tuple(color) if place(0) else None


@dataclass(frozen=True)
class CCovering:
    """A family of vertex subsets of some pattern h, each rainbow-colorable
    for the core c, jointly containing every copy of c in h."""

    core: Pattern
    sets: tuple[frozenset[int], ...]
    colorings: tuple[tuple[int, ...], ...]  # per set, indexed by sorted members

    @property
    def size(self) -> int:
        return len(self.sets)

    def verify(self, h: GraphLike) -> bool:
        hg = _g(h)
        copies = subgraph_copy_sets(hg, self.core)
        for s in copies:
            if not any(s <= ci for ci in self.sets):
                return False
        for ci, coloring in zip(self.sets, self.colorings):
            members = sorted(ci)
            sub, old_to_new = induced_subgraph(hg, members)
            for s in subgraph_copy_sets(sub, self.core):
                cols = {coloring[v] for v in s}
                if len(cols) != len(s):
                    return False
        return True


def min_C_covering(h: GraphLike, c: GraphLike) -> CCovering:
    """A minimum-size covering of h's copies of c by rainbow-colorable sets.

    Branch and bound assigning copies to groups (a group's candidate set is
    the union of its copies' vertices), memoizing on visited group states.
    """
    hg, cg = _g(h), _g(c)
    if hg.n > COVER_MAX_VERTICES:
        raise CapacityError(f"covering search capped at {COVER_MAX_VERTICES} vertices")
    copies = subgraph_copy_sets(hg, cg)
    if len(copies) > COVER_MAX_COPIES:
        raise CapacityError(f"covering search capped at {COVER_MAX_COPIES} copies")
    if not copies:
        return CCovering(Pattern(cg), (), ())

    colorable_cache: dict[frozenset[int], Optional[tuple[int, ...]]] = {}

    def coloring_of(union: frozenset[int]) -> Optional[tuple[int, ...]]:
        if union not in colorable_cache:
            sub, _ = induced_subgraph(hg, sorted(union))
            colorable_cache[union] = find_C_coloring(sub, cg)
        return colorable_cache[union]

    nc = len(copies)
    best: list[Optional[list[frozenset[int]]]] = [None]
    best_size = [nc + 1]
    seen_states: set[frozenset[frozenset[int]]] = set()

    def covered(groups: list[frozenset[int]], idx: int) -> bool:
        return any(copies[idx] <= u for u in groups)

    def recurse(next_idx: int, groups: list[frozenset[int]]) -> None:
        if len(groups) >= best_size[0]:
            return
        while next_idx < nc and covered(groups, next_idx):
            next_idx += 1
        if next_idx == nc:
            best_size[0] = len(groups)
            best[0] = list(groups)
            return
        state = frozenset(groups)
        if state in seen_states:
            return
        seen_states.add(state)
        cs = copies[next_idx]
        for i, u in enumerate(groups):
            merged = u | cs
            if coloring_of(merged) is not None:
                groups[i] = merged
                recurse(next_idx + 1, groups)
                groups[i] = u
        if len(groups) + 1 < best_size[0] and coloring_of(cs) is not None:
            groups.append(cs)
            recurse(next_idx + 1, groups)
            groups.pop()

    # Singleton copies are always rainbow-colorable, so a solution exists.
    recurse(0, [])
    assert best[0] is not None
    sets = tuple(sorted(best[0], key=sorted))
    colorings = []
    for s in sets:
        coloring = coloring_of(s)
        assert coloring is not None
        colorings.append(coloring)
    return CCovering(Pattern(cg), sets, tuple(colorings))
