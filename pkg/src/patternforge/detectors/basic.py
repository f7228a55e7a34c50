"""Near-linear and quadratic building-block detectors.

These are the subroutines the heavier paired detectors lean on: non-induced
four-cycle scanning, induced-P3 structure, the quadratic {C4, triangle}
detector, the linear {K4, I4} procedure, and all pairs of 3-vertex patterns.
"""

from __future__ import annotations

from typing import Optional, Union

from ..catalog import catalog_lookup, identify_pattern
from ..errors import InputError
from ..graphs import Graph, Pattern, bits, complement, induced_subgraph
from .oracle import brute_force_detect_set
from .result import (
    Certificate,
    DetectionResult,
    absent_result,
    found_result,
)

SMALL_N_ORACLE = 12
RAMSEY_MIN_N = 31


def _translate(res: DetectionResult, new_of_old: dict[int, int]) -> DetectionResult:
    """Map a sub-result's witness back into the parent graph's labels."""
    if not res:
        return res
    name, verts = res.found
    old_of_new = {i: v for v, i in new_of_old.items()}
    return DetectionResult(found=(name, tuple(old_of_new[v] for v in verts)))


def noninduced_c4(g: Graph) -> DetectionResult:
    """Quadratic non-induced 4-cycle scan via pair marking.

    For each vertex, every pair of its neighbors is recorded; seeing a pair a
    second time closes a 4-cycle.  At most one more pair than n(n-1)/2 is
    ever processed, so the scan is O(n^2).
    """
    seen: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        nb = g.nbrs[v]
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                key = (nb[i], nb[j])
                other = seen.get(key)
                if other is not None and other != v:
                    return found_result(
                        g, "C4", (other, nb[i], v, nb[j]), induced=False
                    )
                seen[key] = v
    return absent_result()


def _classify_c4_quad(g: Graph, quad: tuple[int, int, int, int]) -> DetectionResult:
    """Split a non-induced 4-cycle (u,a,v,b) into an induced C4 or a triangle."""
    u, a, v, b = quad
    if g.has_edge(a, b):
        return found_result(g, "K3", (a, b, v))
    if g.has_edge(u, v):
        return found_result(g, "K3", (u, v, a))
    return found_result(g, "C4", (u, a, v, b))


def p3_structure(g: Graph, complemented: bool = False) -> DetectionResult:
    """Find an induced P3 (or its complement), else certify the structure.

    Without a P3 the graph is a disjoint union of cliques; without a co-P3 it
    is complete multipartite.  Quadratic: repeatedly peel the closed
    neighborhood of a maximum-degree vertex.
    """
    if complemented:
        res = p3_structure(complement(g), complemented=False)
        if res:
            _, verts = res.found
            return found_result(g, "co-P3", verts)
        cliques = res.certificate.parts
        return absent_result(
            g, Certificate("complete-multipartite", cliques)
        )

    remaining = sorted(range(g.n))
    cliques: list[tuple[int, ...]] = []
    rem_set = set(remaining)
    while rem_set:
        v = max(sorted(rem_set), key=lambda x: sum(1 for u in g.nbrs[x] if u in rem_set))
        nb = [u for u in g.nbrs[v] if u in rem_set]
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if not g.has_edge(nb[i], nb[j]):
                    return found_result(g, "P3", (nb[i], v, nb[j]))
        comp = tuple(sorted(nb + [v]))
        cliques.append(comp)
        rem_set.difference_update(comp)
    return absent_result(g, Certificate("disjoint-cliques", tuple(cliques)))


def _triangle_scan(g: Graph) -> Optional[tuple[int, int, int]]:
    """Triangle search tuned for 4-cycle-free graphs (few high-degree nodes)."""
    hi_cut = 3 * max(1, int(g.n**0.5))
    high = [v for v in range(g.n) if g.degree(v) >= hi_cut]
    high_mask = 0
    for v in high:
        high_mask |= 1 << v
    for u, w in g.edges():
        common_high = g.mask(u) & g.mask(w) & high_mask
        if common_high:
            x = next(bits(common_high))
            return (u, w, x)
    for v in range(g.n):
        if g.degree(v) >= hi_cut:
            continue
        nb = g.nbrs[v]
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if g.has_edge(nb[i], nb[j]):
                    return (v, nb[i], nb[j])
    return None


def _detect_c4_or_triangle_impl(g: Graph) -> DetectionResult:
    quad = noninduced_c4(g)
    if quad:
        return _classify_c4_quad(g, quad.found[1])
    tri = _triangle_scan(g)
    if tri is not None:
        return found_result(g, "K3", tri)
    # Both absent: the host is 4-cycle-free, so m = O(n^1.5) here.
    return absent_result()


def detect_c4_or_triangle(g: Graph) -> DetectionResult:
    """Induced {C4, K3} detection in O(n^2)."""
    if g.n < SMALL_N_ORACLE:
        return brute_force_detect_set(
            g, [catalog_lookup("C4"), catalog_lookup("K3")], induced=True
        )
    return _detect_c4_or_triangle_impl(g)


# ---------------------------------------------------------------------------
# {K4, I4} in linear time for n >= 31.
# ---------------------------------------------------------------------------


def _ramsey6_triangle_or_i3(g: Graph, verts: list[int], flipped: bool):
    """Among >= 6 vertices, find a triangle or an independent triple.

    Adjacency is complemented when flipped is set.  Existence is guaranteed
    by the Ramsey bound R(3,3)=6, so checking all triples of six vertices
    suffices.
    """

    def adj(a: int, b: int) -> bool:
        return g.has_edge(a, b) != flipped

    six = verts[:6]
    for i in range(len(six)):
        for j in range(i + 1, len(six)):
            for k in range(j + 1, len(six)):
                a, b, c = six[i], six[j], six[k]
                e1, e2, e3 = adj(a, b), adj(a, c), adj(b, c)
                if e1 and e2 and e3:
                    return True, (a, b, c)
                if not (e1 or e2 or e3):
                    return False, (a, b, c)
    raise AssertionError("unreachable: R(3,3) = 6")


def detect_k4_or_i4(g: Graph) -> DetectionResult:
    """Always-succeeding {K4, I4} search, O(n) adjacency probes, n >= 31.

    Works on the complement implicitly when the probe vertex has low degree;
    never materializes complement adjacency, so it stays linear even when
    the graph object is large and sparse.
    """
    if g.n < RAMSEY_MIN_N:
        raise InputError(f"detect_k4_or_i4 needs n >= {RAMSEY_MIN_N}")
    v = 0
    flipped = g.degree(v) < (g.n - 1) / 2

    def adj(a: int, b: int) -> bool:
        return g.has_edge(a, b) != flipped

    def out(name: str, verts) -> DetectionResult:
        if flipped:
            name = "I4" if name == "K4" else "K4"
        return found_result(g, name, verts)

    if flipped:
        nbset = set(g.nbrs[v])
        neighborhood = [u for u in range(g.n) if u != v and u not in nbset]
    else:
        neighborhood = list(g.nbrs[v])
    # d >= (n-1)/2 >= 15 in the working orientation.
    is_tri, (a, b, c) = _ramsey6_triangle_or_i3(g, neighborhood, flipped)
    if is_tri:
        return out("K4", (v, a, b, c))
    trio = (a, b, c)
    buckets: dict[int, list[int]] = {a: [], b: [], c: []}
    for x in neighborhood:
        if x in trio:
            continue
        hit = None
        for t in trio:
            if adj(x, t):
                hit = t
                break
        if hit is None:
            return out("I4", (x, a, b, c))
        buckets[hit].append(x)
    t_star = max(trio, key=lambda t: len(buckets[t]))
    four = buckets[t_star][:4]
    # |N(v)| >= 15 ensures the largest bucket has at least four members.
    for i in range(4):
        for j in range(i + 1, 4):
            if adj(four[i], four[j]):
                return out("K4", (v, t_star, four[i], four[j]))
    return out("I4", tuple(four))


# ---------------------------------------------------------------------------
# All pairs of 3-vertex patterns.
# ---------------------------------------------------------------------------

_PAIR3_SMALL_N = 8  # the linear procedures assume n > 7


def _find_k3_or_i3(g: Graph) -> tuple[bool, tuple[int, int, int]]:
    """Triangle or independent triple in a graph with n >= 6 (R(3,3))."""
    return _ramsey6_triangle_or_i3(g, list(range(g.n)), flipped=False)


def _pair_k3_p3(g: Graph) -> DetectionResult:
    for z in range(g.n):
        if g.degree(z) >= 2:
            x, y = g.nbrs[z][0], g.nbrs[z][1]
            if g.has_edge(x, y):
                return found_result(g, "K3", (z, x, y))
            return found_result(g, "P3", (x, z, y))
    return absent_result()


def _pair_p3_cop3(g: Graph) -> DetectionResult:
    for z in range(g.n):
        if 1 <= g.degree(z) <= g.n - 2:
            x = g.nbrs[z][0]
            y = next(u for u in range(g.n) if u != z and not g.has_edge(z, u))
            if g.has_edge(x, y):
                return found_result(g, "P3", (z, x, y))
            return found_result(g, "co-P3", (z, x, y))
    return absent_result()


def _pair_cop3_i3(g: Graph) -> DetectionResult:
    for z in range(g.n):
        if g.degree(z) <= g.n - 3:
            non = [u for u in range(g.n) if u != z and not g.has_edge(z, u)][:2]
            x, y = non
            if g.has_edge(x, y):
                return found_result(g, "co-P3", (x, y, z))
            return found_result(g, "I3", (x, y, z))
    return absent_result()


def _pair_k3_i3(g: Graph) -> DetectionResult:
    is_tri, verts = _find_k3_or_i3(g)
    return found_result(g, "K3" if is_tri else "I3", verts)


def _pair_k3_cop3(g: Graph) -> DetectionResult:
    """{K3, co-P3} via a maximal independent set around a found I3."""
    is_tri, verts = _find_k3_or_i3(g)
    if is_tri:
        return found_result(g, "K3", verts)
    indep = set(verts)
    for v in range(g.n):
        if v not in indep and not any(g.has_edge(v, u) for u in indep):
            indep.add(v)
    s = sorted(indep)
    outside = [v for v in range(g.n) if v not in indep]
    for v in outside:
        misses = [u for u in s if not g.has_edge(v, u)]
        if misses:
            hit = next(u for u in s if g.has_edge(v, u))
            return found_result(g, "co-P3", (v, hit, misses[0]))
    # Everyone outside is adjacent to the entire independent set.
    for i, v in enumerate(outside):
        for w in outside[i + 1:]:
            if g.has_edge(v, w):
                return found_result(g, "K3", (v, w, s[0]))
    return absent_result()


def _pair_i3_p3(g: Graph) -> DetectionResult:
    res = _pair_k3_cop3(complement(g))
    if not res:
        return res
    name, verts = res.found
    return found_result(g, "I3" if name == "K3" else "P3", verts)


_PAIR3_DISPATCH = {
    frozenset(("K3", "P3")): _pair_k3_p3,
    frozenset(("P3", "co-P3")): _pair_p3_cop3,
    frozenset(("co-P3", "I3")): _pair_cop3_i3,
    frozenset(("K3", "I3")): _pair_k3_i3,
    frozenset(("K3", "co-P3")): _pair_k3_cop3,
    frozenset(("I3", "P3")): _pair_i3_p3,
}


def _single_k3(g: Graph) -> DetectionResult:
    for u, w in g.edges():
        common = g.mask(u) & g.mask(w)
        if common:
            return found_result(g, "K3", (u, w, next(bits(common))))
    return absent_result()


def _single_pattern_3(g: Graph, name: str) -> DetectionResult:
    if name == "K3":
        return _single_k3(g)
    if name == "I3":
        res = _single_k3(complement(g))
        return found_result(g, "I3", res.found[1]) if res else absent_result()
    res = p3_structure(g, complemented=(name == "co-P3"))
    return res if res else absent_result()


def detect_pair_3node(g: Graph, h1: Union[Graph, Pattern], h2: Union[Graph, Pattern]) -> DetectionResult:
    """Induced detection of one of two 3-vertex patterns.

    Linear for every pair except {K3, co-P3} and {I3, P3}, which run in
    O(n^2); hosts with at most 7 vertices go to the exhaustive oracle.
    """
    g1 = h1.graph if isinstance(h1, Pattern) else h1
    g2 = h2.graph if isinstance(h2, Pattern) else h2
    if g1.n != 3 or g2.n != 3:
        raise InputError("detect_pair_3node expects two 3-vertex patterns")
    n1, n2 = identify_pattern(g1), identify_pattern(g2)
    if g.n < _PAIR3_SMALL_N:
        return brute_force_detect_set(
            g, [catalog_lookup(n1), catalog_lookup(n2)], induced=True
        )
    if n1 == n2:
        return _single_pattern_3(g, n1)
    return _PAIR3_DISPATCH[frozenset((n1, n2))](g)
