"""Quadratic detectors for {H, complement(H)} over all 4-vertex patterns.

Each family gets its own procedure; hosts below the threshold its analysis
needs (31 where the always-found {K4, I4} probe is used, 12 otherwise) go to
the exhaustive oracle.
"""

from __future__ import annotations

from typing import Optional, Union

from ..catalog import catalog_lookup, complement_pattern, identify_pattern
from ..errors import InputError, InternalError
from ..graphs import (
    Graph,
    Pattern,
    bits,
    complement,
    connected_components,
    induced_subgraph,
)
from .basic import RAMSEY_MIN_N, SMALL_N_ORACLE, detect_k4_or_i4, p3_structure
from .oracle import brute_force_detect_set
from .result import (
    Certificate,
    DetectionResult,
    absent_result,
    found_result,
)

_COMPLEMENT_NAME = {
    "K4": "I4", "I4": "K4",
    "diamond": "co-diamond", "co-diamond": "diamond",
    "paw": "co-paw", "co-paw": "paw",
    "claw": "co-claw", "co-claw": "claw",
    "C4": "2K2", "2K2": "C4",
    "P4": "P4",
}

_COMPLEMENT_CERT_KIND = {
    "disjoint-cliques": "complete-multipartite",
    "complete-multipartite": "disjoint-cliques",
}


def _flip_result(g: Graph, res: DetectionResult) -> DetectionResult:
    """Translate a result found on the complement back to the real graph."""
    if res:
        name, verts = res.found
        return found_result(g, _COMPLEMENT_NAME[name], verts)
    cert = res.certificate
    if cert is None:
        return res
    if cert.kind in _COMPLEMENT_CERT_KIND:
        return absent_result(g, Certificate(_COMPLEMENT_CERT_KIND[cert.kind], cert.parts))
    if cert.kind == "split-graph":
        return absent_result(
            g, Certificate("split-graph", (cert.parts[1], cert.parts[0]))
        )
    if cert.kind == "complete-split":
        clique, indep = cert.parts
        parts = (indep,) + tuple((v,) for v in clique)
        return absent_result(g, Certificate("disjoint-cliques", parts))
    return absent_result()


def _maximal_clique_from(g: Graph, seed: tuple[int, ...]) -> list[int]:
    clique = list(seed)
    in_c = set(clique)
    for v in range(g.n):
        if v not in in_c and all(g.has_edge(v, u) for u in clique):
            clique.append(v)
            in_c.add(v)
    return sorted(clique)


# ---------------------------------------------------------------------------
# {diamond, co-diamond}
# ---------------------------------------------------------------------------


def _diamond_codiamond(g: Graph) -> DetectionResult:
    probe = detect_k4_or_i4(g)
    name, verts = probe.found
    if name == "I4":
        return _flip_result(g, _diamond_codiamond(complement(g)))
    clique = _maximal_clique_from(g, verts)
    cset = set(clique)
    outside = [v for v in range(g.n) if v not in cset]
    for u in outside:
        hits = [c for c in clique if g.has_edge(u, c)]
        if len(hits) >= 2:
            miss = next(c for c in clique if not g.has_edge(u, c))
            return found_result(g, "diamond", (u, hits[0], hits[1], miss))
    for i, u1 in enumerate(outside):
        for u2 in outside[i + 1:]:
            if not g.has_edge(u1, u2):
                free = [
                    c
                    for c in clique
                    if not g.has_edge(u1, c) and not g.has_edge(u2, c)
                ][:2]
                return found_result(g, "co-diamond", (free[0], free[1], u1, u2))
    # Outside is now a clique; only all-but-one-outside diamonds remain.
    for c in clique:
        onbrs = [u for u in outside if g.has_edge(c, u)]
        if 2 <= len(onbrs) < len(outside):
            miss = next(u for u in outside if not g.has_edge(c, u))
            return found_result(g, "diamond", (c, onbrs[0], onbrs[1], miss))
    return absent_result()


# ---------------------------------------------------------------------------
# {paw, co-paw}
# ---------------------------------------------------------------------------


def _paw_copaw(g: Graph) -> DetectionResult:
    comps = connected_components(g)
    if len(comps) > 1:
        all_cliques: list[tuple[int, ...]] = []
        for ci, comp in enumerate(comps):
            sub, old_to_new = induced_subgraph(g, comp)
            res = p3_structure(sub)
            new_to_old = {x: y for y, x in old_to_new.items()}
            if res:
                a, b, c = (new_to_old[x] for x in res.found[1])
                other = comps[1][0] if ci == 0 else comps[0][0]
                return found_result(g, "co-paw", (a, b, c, other))
            all_cliques.extend(
                tuple(sorted(new_to_old[x] for x in part))
                for part in res.certificate.parts
            )
        return absent_result(g, Certificate("disjoint-cliques", tuple(all_cliques)))
    gc = complement(g)
    if len(connected_components(gc)) > 1:
        return _flip_result(g, _paw_copaw(gc))
    probe = detect_k4_or_i4(g)
    name, verts = probe.found
    if name == "I4":
        return _flip_result(g, _paw_copaw(complement(g)))
    clique = _maximal_clique_from(g, verts)
    cset = set(clique)
    outside = [v for v in range(g.n) if v not in cset]
    for u in outside:
        hits = [c for c in clique if g.has_edge(u, c)]
        if 1 <= len(hits) <= len(clique) - 2:
            miss = [c for c in clique if not g.has_edge(u, c)][:2]
            return found_result(g, "paw", (hits[0], miss[0], miss[1], u))
    s_side = [u for u in outside if not any(g.has_edge(u, c) for c in clique)]
    t_side = [u for u in outside if u not in set(s_side)]
    if s_side:
        t_set = set(t_side)
        for s in s_side:
            t = next((w for w in g.nbrs[s] if w in t_set), None)
            if t is not None:
                vi, vj = [c for c in clique if g.has_edge(t, c)][:2]
                return found_result(g, "paw", (t, vi, vj, s))
        raise InternalError("connected graph with unreachable outside vertices")
    groups: dict[int, list[int]] = {c: [] for c in clique}
    for u in t_side:
        miss = next(c for c in clique if not g.has_edge(u, c))
        groups[miss].append(u)
    for c, grp in groups.items():
        for i, u in enumerate(grp):
            for w in grp[i + 1:]:
                if g.has_edge(u, w):
                    vj = next(x for x in clique if x != c)
                    return found_result(g, "paw", (u, w, vj, c))
    clique_sorted = sorted(groups)
    for ci_i, ci in enumerate(clique_sorted):
        for cj in clique_sorted[ci_i + 1:]:
            for u in groups[ci]:
                for w in groups[cj]:
                    if not g.has_edge(u, w):
                        vz = next(x for x in clique if x != ci and x != cj)
                        return found_result(g, "paw", (u, cj, vz, w))
    parts = tuple(
        tuple(sorted([c] + groups[c])) for c in clique_sorted
    )
    return absent_result(g, Certificate("complete-multipartite", parts))


# ---------------------------------------------------------------------------
# {claw, co-claw}
# ---------------------------------------------------------------------------


def _claw_coclaw_mid_degree(g: Graph, v: int) -> DetectionResult:
    """A vertex with 3 <= deg <= n-4 always pins down a claw or co-claw."""
    flipped = g.degree(v) < (g.n - 1) / 2

    def adj(a: int, b: int) -> bool:
        return g.has_edge(a, b) != flipped

    def out(name: str, verts) -> DetectionResult:
        if flipped:
            name = _COMPLEMENT_NAME[name]
        return found_result(g, name, verts)

    nv = [u for u in range(g.n) if u != v and adj(v, u)]
    mv = [u for u in range(g.n) if u != v and not adj(v, u)]
    non_edge = None
    for i in range(len(mv)):
        for j in range(i + 1, len(mv)):
            if not adj(mv[i], mv[j]):
                non_edge = (mv[i], mv[j])
                break
        if non_edge:
            break
    if non_edge is None:
        m1, m2, m3 = mv[0], mv[1], mv[2]
        return out("co-claw", (m1, m2, m3, v))
    u, w = non_edge
    for z in nv:
        if adj(z, u) and adj(z, w):
            return out("claw", (z, u, w, v))
    cand = [z for z in nv if not adj(z, u)]
    if len(cand) < 3:
        cand = [z for z in nv if not adj(z, w)]
        u = w
    z1, z2, z3 = cand[:3]
    for a, b in ((z1, z2), (z1, z3), (z2, z3)):
        if adj(a, b):
            return out("co-claw", (a, b, v, u))
    return out("claw", (v, z1, z2, z3))


def _claw_coclaw(g: Graph) -> DetectionResult:
    n = g.n
    for v in range(n):
        if 3 <= g.degree(v) <= n - 4:
            return _claw_coclaw_mid_degree(g, v)
    lows = [v for v in range(n) if g.degree(v) <= 2]
    highs = [v for v in range(n) if g.degree(v) >= n - 3]
    if lows and highs:
        flipped = len(lows) < len(highs)

        def adj(a: int, b: int) -> bool:
            return g.has_edge(a, b) != flipped

        def out(name: str, verts) -> DetectionResult:
            if flipped:
                name = _COMPLEMENT_NAME[name]
            return found_result(g, name, verts)

        work_lows = highs if flipped else lows
        work_low_set = set(work_lows)
        v = next(x for x in range(n) if x not in work_low_set)
        u = next(x for x in work_lows if adj(v, x))
        zs = [z for z in range(n) if z not in (u, v) and adj(v, z) and not adj(u, z)][:3]
        z1, z2, z3 = zs
        for a, b in ((z1, z2), (z1, z3), (z2, z3)):
            if not adj(a, b):
                return out("claw", (v, a, b, u))
        return out("co-claw", (z1, z2, z3, u))
    flipped = not lows

    def adj(a: int, b: int) -> bool:
        return g.has_edge(a, b) != flipped

    def out(name: str, verts) -> DetectionResult:
        if flipped:
            name = _COMPLEMENT_NAME[name]
        return found_result(g, name, verts)

    # Every vertex now has degree at most 2 in the working orientation
    # (a disjoint union of paths and cycles): claws are impossible and any
    # triangle is an isolated component, closing a co-claw.
    for v in range(n):
        wn = [u for u in range(n) if u != v and adj(v, u)]
        if len(wn) == 2 and adj(wn[0], wn[1]):
            w = next(x for x in range(n) if x not in (v, wn[0], wn[1]))
            return out("co-claw", (v, wn[0], wn[1], w))
    return absent_result()


# ---------------------------------------------------------------------------
# {C4, 2K2}
# ---------------------------------------------------------------------------


def split_graph_certificate(g: Graph) -> Optional[Certificate]:
    """Split-graph recognition by the degree-sequence criterion.

    Returns a verified (clique, independent) partition or None.  A split
    graph contains neither an induced 4-cycle nor two independent edges.
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m_idx = 0
    for i in range(g.n):
        if degs[i] >= i:
            m_idx = i + 1
    lhs = sum(degs[:m_idx])
    rhs = m_idx * (m_idx - 1) + sum(degs[m_idx:])
    if lhs != rhs:
        return None
    clique = tuple(sorted(order[:m_idx]))
    indep = tuple(sorted(order[m_idx:]))
    for i, u in enumerate(clique):
        for v in clique[i + 1:]:
            if not g.has_edge(u, v):
                return None
    for i, u in enumerate(indep):
        for v in indep[i + 1:]:
            if g.has_edge(u, v):
                return None
    return Certificate("split-graph", (clique, indep))


def _c4_2k2_mainlemma(
    g: Graph, clique: list[int], t_side: list[int], s_side: list[int],
    allow_cert: bool = True,
) -> DetectionResult:
    """Final case analysis once both residue classes are independent."""
    cset = set(clique)
    miss_of = {w: next(c for c in clique if not g.has_edge(w, c)) for w in t_side}
    tn = {v: [w for w in t_side if g.has_edge(v, w)] for v in s_side}

    def cert(cl, ind) -> DetectionResult:
        if not allow_cert:
            return absent_result()
        return absent_result(
            g, Certificate("split-graph", (tuple(sorted(cl)), tuple(sorted(ind))))
        )

    for v in s_side:
        if len(tn[v]) >= 3:
            cmiss = [c for c in clique if not g.has_edge(v, c)][:2]
            for c in cmiss:
                ws = [w for w in tn[v] if g.has_edge(w, c)][:2]
                if len(ws) == 2:
                    return found_result(g, "C4", (v, ws[0], c, ws[1]))
            raise InternalError("three probe neighbors but no shared clique vertex")
    for v in s_side:
        if len(tn[v]) == 2 and sum(1 for c in clique if not g.has_edge(v, c)) >= 3:
            cmiss = [c for c in clique if not g.has_edge(v, c)][:3]
            w1, w2 = tn[v]
            for c in cmiss:
                if g.has_edge(w1, c) and g.has_edge(w2, c):
                    return found_result(g, "C4", (v, w1, c, w2))
            raise InternalError("pigeonhole failed on three missed clique vertices")
    two_side = [v for v in s_side if len(tn[v]) == 2]
    if two_side and len(t_side) >= 3:
        v = two_side[0]
        w1, w2 = tn[v]
        c1, c2 = [c for c in clique if not g.has_edge(v, c)][:2]
        for c in (c1, c2):
            if g.has_edge(w1, c) and g.has_edge(w2, c):
                return found_result(g, "C4", (v, w1, c, w2))
        u = next(w for w in t_side if w not in (w1, w2))
        chit = c1 if g.has_edge(u, c1) else c2
        wmiss = w1 if not g.has_edge(w1, chit) else w2
        return found_result(g, "2K2", (v, wmiss, u, chit))
    if two_side:
        # |T| == 2 with a doubly-attached outside vertex.
        v = two_side[0]
        t1, t2 = t_side
        for v2 in two_side[1:]:
            return found_result(g, "C4", (v, t1, v2, t2))
        for c in clique:
            if not g.has_edge(v, c) and g.has_edge(t1, c) and g.has_edge(t2, c):
                return found_result(g, "C4", (t1, v, t2, c))
        c1, c2 = miss_of[t1], miss_of[t2]
        for x in s_side:
            if x != v and g.has_edge(x, c1) and not g.has_edge(x, t1):
                return found_result(g, "2K2", (v, t1, c1, x))
            if x != v and g.has_edge(x, c2) and not g.has_edge(x, t2):
                return found_result(g, "2K2", (v, t2, c2, x))
        sub = _c4_2k2_mainlemma(
            g, clique, t_side, [x for x in s_side if x != v], allow_cert=False
        )
        return sub
    ones = [v for v in s_side if len(tn[v]) == 1]
    if not ones:
        return cert(clique, t_side + s_side)
    v = ones[0]
    w = tn[v][0]
    c = miss_of[w]
    if g.has_edge(v, c):
        cp = next(x for x in clique if not g.has_edge(v, x))
        return found_result(g, "C4", (w, v, c, cp))
    for wp in t_side:
        if g.has_edge(wp, c):
            return found_result(g, "2K2", (c, wp, w, v))
    for vp in ones[1:]:
        if tn[vp][0] != w:
            return found_result(g, "2K2", (v, w, vp, tn[vp][0]))
        if g.has_edge(vp, c):
            cp = next(x for x in clique if not g.has_edge(vp, x))
            return found_result(g, "C4", (w, vp, c, cp))
    for v0 in s_side:
        if not tn[v0] and g.has_edge(v0, c):
            return found_result(g, "2K2", (v0, c, v, w))
    new_clique = [x for x in clique if x != c] + [w]
    new_indep = [x for x in t_side if x != w] + s_side + [c]
    return cert(new_clique, new_indep)


def _c4_2k2(g: Graph) -> DetectionResult:
    probe = detect_k4_or_i4(g)
    name, verts = probe.found
    if name == "I4":
        return _flip_result(g, _c4_2k2(complement(g)))
    clique = _maximal_clique_from(g, verts)
    while True:
        cset = set(clique)
        outside = [v for v in range(g.n) if v not in cset]
        t_side = [
            v for v in outside if sum(1 for c in clique if g.has_edge(v, c)) == len(clique) - 1
        ]
        s_side = [v for v in outside if v not in set(t_side)]
        # Residue-class edges force a pattern or a larger clique.
        for i, u in enumerate(s_side):
            for v in s_side[i + 1:]:
                if g.has_edge(u, v):
                    a_set = [c for c in clique if not g.has_edge(u, c)]
                    b_set = [c for c in clique if not g.has_edge(v, c)]
                    both = [c for c in a_set if c in set(b_set)][:2]
                    if len(both) == 2:
                        return found_result(g, "2K2", (u, v, both[0], both[1]))
                    c2 = next(c for c in a_set if c not in set(b_set))
                    c1 = next(c for c in b_set if c not in set(a_set))
                    return found_result(g, "C4", (u, v, c2, c1))
        grow = None
        for i, u in enumerate(t_side):
            if grow:
                break
            for v in t_side[i + 1:]:
                if not g.has_edge(u, v):
                    continue
                cu = next(c for c in clique if not g.has_edge(u, c))
                cv = next(c for c in clique if not g.has_edge(v, c))
                if cu != cv:
                    return found_result(g, "C4", (u, cv, cu, v))
                z = cu
                wz = next((w for w in t_side if g.has_edge(w, z)), None)
                if wz is not None:
                    y = next(c for c in clique if not g.has_edge(wz, c))
                    if g.has_edge(wz, u):
                        return found_result(g, "C4", (y, z, wz, u))
                    if g.has_edge(wz, v):
                        return found_result(g, "C4", (y, z, wz, v))
                    return found_result(g, "2K2", (z, wz, u, v))
                grow = (u, v, z)
                break
        if grow is None:
            return _c4_2k2_mainlemma(g, clique, t_side, s_side)
        u, v, z = grow
        clique = _maximal_clique_from(
            g, tuple([c for c in clique if c != z] + [u, v])
        )


# ---------------------------------------------------------------------------
# {P4} (self-complementary)
# ---------------------------------------------------------------------------


def _p4(g: Graph) -> DetectionResult:
    full = g.vertex_mask()
    for b, c in g.edges():
        a_mask = g.mask(b) & ~g.mask(c) & ~(1 << c) & full
        d_mask = g.mask(c) & ~g.mask(b) & ~(1 << b) & full
        if not a_mask or not d_mask:
            continue
        for a in bits(a_mask):
            rest = d_mask & ~g.mask(a) & ~(1 << a)
            if rest:
                d = next(bits(rest))
                return found_result(g, "P4", (a, b, c, d))
    return absent_result()


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------


def detect_h_or_complement(g: Graph, h: Union[Graph, Pattern]) -> DetectionResult:
    """Induced {H, complement(H)} detection for any 4-vertex H, O(n^2)."""
    hg = h.graph if isinstance(h, Pattern) else h
    if hg.n != 4:
        raise InputError("detect_h_or_complement expects a 4-vertex pattern")
    name = identify_pattern(hg)
    family = frozenset((name, _COMPLEMENT_NAME[name]))

    def oracle() -> DetectionResult:
        return brute_force_detect_set(
            g, [catalog_lookup(x) for x in sorted(family)], induced=True
        )

    if family == frozenset(("K4", "I4")):
        return oracle() if g.n < RAMSEY_MIN_N else detect_k4_or_i4(g)
    if family == frozenset(("diamond", "co-diamond")):
        return oracle() if g.n < RAMSEY_MIN_N else _diamond_codiamond(g)
    if family == frozenset(("paw", "co-paw")):
        return oracle() if g.n < RAMSEY_MIN_N else _paw_copaw(g)
    if family == frozenset(("claw", "co-claw")):
        return oracle() if g.n < SMALL_N_ORACLE else _claw_coclaw(g)
    if family == frozenset(("C4", "2K2")):
        cert = split_graph_certificate(g)
        if cert is not None:
            return absent_result(g, cert)
        return oracle() if g.n <= RAMSEY_MIN_N else _c4_2k2(g)
    return oracle() if g.n < SMALL_N_ORACLE else _p4(g)
