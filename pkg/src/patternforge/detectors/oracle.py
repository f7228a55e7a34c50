"""Brute-force oracles: the ground truth every fast detector is tested against."""

from __future__ import annotations

from typing import Optional, Sequence, Union

from ..errors import CapacityError, InputError
from ..graphs import Graph, Pattern, PartitionedGraph, bits
from .result import DetectionResult, absent_result

ORACLE_PATTERN_MAX = 8
ORACLE_HOST_MAX = 128
COLORFUL_PRODUCT_CAP = 1 << 44

GraphLike = Union[Graph, Pattern]


def _gp(x: GraphLike) -> tuple[Graph, Optional[str]]:
    if isinstance(x, Pattern):
        return x.graph, x.name
    return x, None


def _find_embedding(g: Graph, pat: Graph, induced: bool) -> Optional[tuple[int, ...]]:
    """Injective map of pat into g; induced mode also preserves non-edges."""
    n = pat.n
    if n > g.n:
        return None
    order = sorted(range(n), key=lambda v: -pat.degree(v))
    pos = {v: i for i, v in enumerate(order)}
    gmasks = g.masks()
    pmasks = pat.masks()
    full = g.vertex_mask()
    image = [0] * n

    def place(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        cand = full & ~used
        for j in range(idx):
            u = order[j]
            if pmasks[v] >> u & 1:
                cand &= gmasks[image[u]]
            elif induced:
                cand &= ~gmasks[image[u]]
        for w in bits(cand):
            image[v] = w
            if place(idx + 1, used | 1 << w):
                return True
        return False

    return tuple(image) if place(0, 0) else None


def brute_force_detect(g: Graph, h: GraphLike, induced: bool) -> DetectionResult:
    """Exhaustive backtracking search for one copy of h in g."""
    pat, name = _gp(h)
    if pat.n > ORACLE_PATTERN_MAX:
        raise CapacityError(f"oracle pattern size capped at {ORACLE_PATTERN_MAX}")
    if g.n > ORACLE_HOST_MAX:
        raise CapacityError(f"oracle host size capped at {ORACLE_HOST_MAX}")
    image = _find_embedding(g, pat, induced)
    if image is None:
        return absent_result()
    return DetectionResult(found=(name or "pattern", image))


def brute_force_detect_set(
    g: Graph, patterns: Sequence[GraphLike], induced: bool
) -> DetectionResult:
    """First pattern of the set found in g, else absent."""
    for h in patterns:
        res = brute_force_detect(g, h, induced)
        if res:
            return res
    return absent_result()


def brute_force_colorful(pg: PartitionedGraph, h: GraphLike) -> DetectionResult:
    """Search for a copy of h taking exactly one vertex from each part.

    Part i hosts the image of h-vertex i.  Only the edges of h are enforced:
    a selection whose induced graph covers every required part pair carries a
    copy of h, and any colorful copy yields such a selection.
    """
    pat, name = _gp(h)
    if pg.k != pat.n:
        raise InputError(f"part count {pg.k} != pattern size {pat.n}")
    parts = pg.parts()
    sizes = [max(1, len(p)) for p in parts]
    prod = 1
    for s in sizes:
        prod *= s
        if prod > COLORFUL_PRODUCT_CAP:
            raise CapacityError("colorful search: part-size product cap exceeded")
    if any(len(p) == 0 for p in parts):
        return absent_result()
    g = pg.graph
    gmasks = g.masks()
    order = sorted(range(pat.n), key=lambda v: -pat.degree(v))
    pos = {v: i for i, v in enumerate(order)}
    part_masks = []
    for p in parts:
        mk = 0
        for v in p:
            mk |= 1 << v
        part_masks.append(mk)
    choice = [0] * pat.n

    def place(idx: int) -> bool:
        if idx == pat.n:
            return True
        v = order[idx]
        cand = part_masks[v]
        for u in pat.nbrs[v]:
            if pos[u] < idx:
                cand &= gmasks[choice[u]]
        for w in bits(cand):
            choice[v] = w
            if place(idx + 1):
                return True
        return False

    if place(0):
        return DetectionResult(found=(name or "pattern", tuple(choice)))
    return absent_result()
