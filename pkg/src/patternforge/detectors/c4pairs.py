"""Paired detectors {C4, H} for every 4-vertex H containing a triangle.

{C4, diamond} and {C4, K4} run the subcubic independent-set/clique-table
procedures with recursion threshold n^(2/3); {C4, paw} and {C4, co-claw} are
quadratic.  Hosts below the small-size threshold go to the exhaustive oracle.
"""

from __future__ import annotations

from typing import Optional, Union

from ..catalog import catalog_lookup, identify_pattern
from ..errors import InputError, InternalError
from ..graphs import (
    Graph,
    Pattern,
    bits,
    connected_components,
    induced_subgraph,
)
from .basic import SMALL_N_ORACLE, _detect_c4_or_triangle_impl, noninduced_c4, p3_structure
from .oracle import brute_force_detect_set
from .result import (
    Certificate,
    DetectionResult,
    absent_result,
    found_result,
)


def _ceil_pow_2_3(n: int) -> int:
    """Smallest T with T^3 >= n^2 (the recursion threshold)."""
    t = max(1, round(n ** (2 / 3)))
    while t**3 < n * n:
        t += 1
    while t > 1 and (t - 1) ** 3 >= n * n:
        t -= 1
    return t


def _greedy_mis(g: Graph, vertices: Optional[list[int]] = None) -> list[int]:
    """Maximal independent set grown in ascending vertex order."""
    out: list[int] = []
    taken_mask = 0
    blocked = 0
    verts = vertices if vertices is not None else range(g.n)
    for v in verts:
        if blocked >> v & 1:
            continue
        out.append(v)
        blocked |= g.mask(v) | (1 << v)
    return out


def _classify_quad(g: Graph, cyc: tuple[int, int, int, int], kind: str) -> DetectionResult:
    """Classify a 4-cycle (cyclic order) into induced C4 / diamond / K4.

    kind selects which non-C4 answer the caller's pair accepts; a quadruple
    whose diagonals make it the other pattern returns None-equivalent by
    raising InternalError (callers only pass quadruples their case analysis
    justifies; the raise flags a broken invariant).
    """
    a, b, c, d = cyc
    d1 = g.has_edge(a, c)
    d2 = g.has_edge(b, d)
    if not d1 and not d2:
        return found_result(g, "C4", cyc)
    if kind == "diamond" and d1 != d2:
        return found_result(g, "diamond", cyc)
    if kind == "K4" and d1 and d2:
        return found_result(g, "K4", cyc)
    raise InternalError(f"quadruple {cyc} does not match pair case {kind}")


# ---------------------------------------------------------------------------
# {C4, diamond}
# ---------------------------------------------------------------------------


def _detect_c4_or_diamond_impl(g: Graph) -> DetectionResult:
    n = g.n
    if n < 4:
        return absent_result()
    mis = _greedy_mis(g)
    t = len(mis)
    in_mis = set(mis)
    idx_of = {v: i for i, v in enumerate(mis)}

    n_i_sets = [set(g.nbrs[v]) for v in mis]
    n_i_of: dict[int, list[int]] = {u: [] for u in range(n) if u not in in_mis}
    for i, v in enumerate(mis):
        for u in g.nbrs[v]:
            n_i_of[u].append(i)

    # Step 1: any two probe vertices share at most one neighbor.
    pair_mark: dict[tuple[int, int], int] = {}
    for u in sorted(n_i_of):
        lst = n_i_of[u]
        for a in range(len(lst)):
            for b in range(a + 1, len(lst)):
                key = (lst[a], lst[b])
                prev = pair_mark.get(key)
                if prev is not None:
                    vi, vj = mis[key[0]], mis[key[1]]
                    if g.has_edge(prev, u):
                        return found_result(g, "diamond", (vi, prev, u, vj))
                    return found_result(g, "C4", (vi, prev, vj, u))
                pair_mark[key] = u

    # Per-neighborhood P3 scan: each N_i decomposes into disjoint cliques.
    cliques: list[tuple[int, ...]] = []
    clique_home: list[int] = []
    cliques_of: dict[int, list[int]] = {u: [] for u in n_i_of}
    clique_of_in: dict[tuple[int, int], int] = {}
    for i, v in enumerate(mis):
        members = sorted(n_i_sets[i])
        sub, old_to_new = induced_subgraph(g, members)
        res = p3_structure(sub)
        if res:
            new_to_old = {x: y for y, x in old_to_new.items()}
            a, mid, c = (new_to_old[x] for x in res.found[1])
            return found_result(g, "diamond", (a, mid, c, v))
        new_to_old = {x: y for y, x in old_to_new.items()}
        for part in res.certificate.parts:
            cid = len(cliques)
            cq = tuple(sorted(new_to_old[x] for x in part))
            cliques.append(cq)
            clique_home.append(i)
            for u in cq:
                cliques_of[u].append(cid)
                clique_of_in[(i, u)] = cid

    # Step 2: at most one edge from any vertex into a foreign neighborhood.
    edge_mark: dict[tuple[int, int], int] = {}
    for u in sorted(n_i_of):
        u_in = set(n_i_of[u])
        for w in g.nbrs[u]:
            if w in in_mis:
                continue
            for j in n_i_of[w]:
                if j in u_in:
                    continue
                prev = edge_mark.get((u, j))
                if prev is not None and prev != w:
                    vj = mis[j]
                    if g.has_edge(prev, w):
                        return found_result(g, "diamond", (vj, prev, w, u))
                    return found_result(g, "C4", (u, prev, vj, w))
                edge_mark[(u, j)] = w

    threshold = _ceil_pow_2_3(n)
    if t > threshold:
        rest = [v for v in range(n) if v not in in_mis]
        sub, old_to_new = induced_subgraph(g, rest)
        res = _detect_c4_or_diamond_impl(sub)
        if res:
            new_to_old = {x: y for y, x in old_to_new.items()}
            name, verts = res.found
            return found_result(g, name, tuple(new_to_old[x] for x in verts))
        return absent_result()

    # Step 3: at most one edge between any two cliques.  Every edge is
    # charged to every clique pair its endpoints span, including edges that
    # themselves lie inside some third clique.
    table: dict[tuple[int, int], tuple[int, int]] = {}
    nc_edge_list: list[tuple[int, int]] = []
    for a, b in g.edges():
        if a in in_mis or b in in_mis:
            continue
        ca_list, cb_list = cliques_of[a], cliques_of[b]
        if not (set(ca_list) & set(cb_list)):
            nc_edge_list.append((a, b))
        for ca in ca_list:
            for cb in cb_list:
                if ca == cb:
                    continue
                shared = set(cliques[ca]) & set(cliques[cb])
                if shared:
                    u = next(iter(shared))
                    if a != u and b != u:
                        vi = mis[clique_home[ca]]
                        return found_result(g, "diamond", (vi, u, a, b))
                    continue
                key = (ca, cb) if ca < cb else (cb, ca)
                edge = (a, b) if ca < cb else (b, a)
                prev = table.get(key)
                if prev is not None and prev != edge:
                    x1, y1 = prev
                    x2, y2 = edge
                    return _classify_quad(g, (x1, y1, y2, x2), "diamond")
                table[key] = edge

    # Step 4: patterns in three cliques, two of them intersecting.
    ncq = len(cliques)
    for (i, j), u in pair_mark.items():
        ca = clique_of_in.get((i, u))
        cb = clique_of_in.get((j, u))
        if ca is None or cb is None:
            continue
        for cc in range(ncq):
            if cc == ca or cc == cb:
                continue
            e1 = table.get((ca, cc) if ca < cc else (cc, ca))
            e2 = table.get((cb, cc) if cb < cc else (cc, cb))
            if e1 is None or e2 is None:
                continue
            a1, w1 = (e1 if ca < cc else (e1[1], e1[0]))
            a2, w2 = (e2 if cb < cc else (e2[1], e2[0]))
            if w1 == w2 and a1 != u and a2 != u:
                if g.has_edge(u, w1):
                    return found_result(g, "diamond", (u, a1, w1, a2))
                return found_result(g, "C4", (u, a1, w1, a2))

    # Step 5: patterns in three pairwise-disjoint cliques.
    foreign: dict[int, dict[int, int]] = {u: {} for u in n_i_of}
    for (ca, cb), (x1, x2) in table.items():
        foreign[x1][cb] = x2
        foreign[x2][ca] = x1
    nc_edges = {(a, b) if a < b else (b, a) for a, b in nc_edge_list}
    for u, v in sorted(nc_edges):
        fu, fv = foreign[u], foreign[v]
        for cid in fu.keys() & fv.keys():
            x, y = fu[cid], fv[cid]
            if x != y and x != v and y != u:
                if not g.has_edge(u, y) and not g.has_edge(v, x):
                    return found_result(g, "C4", (u, x, y, v))

    # Step 6: all four vertices in different cliques, all edges non-clique.
    nc_adj: dict[int, list[int]] = {u: [] for u in n_i_of}
    for u, v in sorted(nc_edges):
        nc_adj[u].append(v)
        nc_adj[v].append(u)
    pair_common: dict[tuple[int, int], list[int]] = {}
    for z in sorted(nc_adj):
        lst = sorted(nc_adj[z])
        for a in range(len(lst)):
            for b in range(a + 1, len(lst)):
                pair_common.setdefault((lst[a], lst[b]), []).append(z)
    for u, w in sorted(nc_edges):
        for z in sorted(nc_adj[u]):
            if z == w or g.has_edge(z, w):
                continue
            key = (z, w) if z < w else (w, z)
            for z2 in pair_common.get(key, ()):
                if z2 == u:
                    continue
                d1 = g.has_edge(u, z2)
                # z-u-w-z2 cycle; z-w is a non-edge by the guard above.
                if d1:
                    return found_result(g, "diamond", (z, u, w, z2))
                return found_result(g, "C4", (z, u, w, z2))
    return absent_result()


def detect_c4_or_diamond(g: Graph) -> DetectionResult:
    """Induced {C4, diamond} detection in O(n^(7/3))."""
    if g.n < SMALL_N_ORACLE:
        return brute_force_detect_set(
            g, [catalog_lookup("C4"), catalog_lookup("diamond")], induced=True
        )
    return _detect_c4_or_diamond_impl(g)


# ---------------------------------------------------------------------------
# {C4, K4}
# ---------------------------------------------------------------------------


def _detect_c4_or_k4_impl(g: Graph) -> DetectionResult:
    n = g.n
    if n < 4:
        return absent_result()
    mis = _greedy_mis(g)
    t = len(mis)
    in_mis = set(mis)
    n_i_sets = [set(g.nbrs[v]) for v in mis]
    n_i_of: dict[int, list[int]] = {u: [] for u in range(n) if u not in in_mis}
    for i, v in enumerate(mis):
        for u in g.nbrs[v]:
            n_i_of[u].append(i)

    def extend_list(lst: list[int], x: int, vi: int, other: int) -> Optional[DetectionResult]:
        """Shared capping logic for the two common-neighbor tables.

        lst holds previous common neighbors of (vi, other); all current
        members are pairwise adjacent.  Returns a result or None; mutates lst.
        """
        for prev in lst:
            if not g.has_edge(prev, x):
                return found_result(g, "C4", (vi, prev, other, x))
        if len(lst) == 2:
            return found_result(g, "K4", (vi, lst[0], lst[1], x))
        lst.append(x)
        return None

    # Step 1: common neighbors of probe pairs, capped at two.
    table1: dict[tuple[int, int], list[int]] = {}
    for u in sorted(n_i_of):
        lst_i = n_i_of[u]
        for a in range(len(lst_i)):
            for b in range(a + 1, len(lst_i)):
                key = (lst_i[a], lst_i[b])
                cell = table1.setdefault(key, [])
                res = extend_list(cell, u, mis[key[0]], mis[key[1]])
                if res is not None:
                    return res

    # Step 2: each probe neighborhood must be triangle- and C4-free.
    internal_edges: list[list[tuple[int, int]]] = []
    for i, v in enumerate(mis):
        members = sorted(n_i_sets[i])
        sub, old_to_new = induced_subgraph(g, members)
        res = _detect_c4_or_triangle_impl(sub)
        new_to_old = {x: y for y, x in old_to_new.items()}
        if res:
            name, verts = res.found
            verts_g = tuple(new_to_old[x] for x in verts)
            if name == "K3":
                return found_result(g, "K4", verts_g + (v,))
            return found_result(g, "C4", verts_g)
        internal_edges.append([(new_to_old[a], new_to_old[b]) for a, b in sub.edges()])

    # Step 3: common neighbors of (probe, outside vertex), capped at two.
    table2: dict[tuple[int, int], list[int]] = {}
    for i in range(t):
        for x in sorted(n_i_sets[i]):
            for w in g.nbrs[x]:
                if w in in_mis or w in n_i_sets[i]:
                    continue
                cell = table2.setdefault((i, w), [])
                if x in cell:
                    continue
                res = extend_list(cell, x, mis[i], w)
                if res is not None:
                    return res

    threshold = _ceil_pow_2_3(n)
    if t > threshold:
        rest = [v for v in range(n) if v not in in_mis]
        sub, old_to_new = induced_subgraph(g, rest)
        res = _detect_c4_or_k4_impl(sub)
        if res:
            new_to_old = {x: y for y, x in old_to_new.items()}
            name, verts = res.found
            return found_result(g, name, tuple(new_to_old[x] for x in verts))
        return absent_result()

    # External neighborhoods: w is external to u when they are adjacent and
    # some probe neighborhood holds u but not w.
    n_i_of_sets = {u: set(lst) for u, lst in n_i_of.items()}
    n_ext: dict[int, set[int]] = {u: set() for u in n_i_of}
    for u in sorted(n_i_of):
        su = n_i_of_sets[u]
        for w in g.nbrs[u]:
            if w in in_mis:
                continue
            if su - n_i_of_sets[w]:
                n_ext[u].add(w)

    # Step 4-1: both patterns inside the union of two probe neighborhoods.
    for i in range(t):
        set_i = n_i_sets[i]
        for j in range(t):
            if i == j:
                continue
            for a in sorted(set_i):
                if a in n_i_sets[j]:
                    continue
                cell = table2.get((j, a))
                if not cell or len(cell) != 2:
                    continue
                b, c = cell
                if b in set_i or c in set_i:
                    continue
                db = table2.get((i, b), [])
                dc = table2.get((i, c), [])
                for dcand in db:
                    if dcand != a and dcand in dc and g.has_edge(a, dcand):
                        return found_result(g, "K4", (a, b, c, dcand))
        for a, d in internal_edges[i]:
            for j in range(t):
                if i == j:
                    continue
                for b in table2.get((j, a), ()):
                    for c in table2.get((j, d), ()):
                        if (
                            b != c
                            and g.has_edge(b, c)
                            and not g.has_edge(a, c)
                            and not g.has_edge(b, d)
                        ):
                            return found_result(g, "C4", (a, b, c, d))

    # Step 4-2: K4 hanging off one vertex through fully external edges.
    for u in sorted(n_ext):
        members = sorted(n_ext[u])
        if len(members) < 2:
            continue
        sub, old_to_new = induced_subgraph(g, members)
        res = _detect_c4_or_triangle_impl(sub)
        if res:
            new_to_old = {x: y for y, x in old_to_new.items()}
            name, verts = res.found
            verts_g = tuple(new_to_old[x] for x in verts)
            if name == "K3":
                return found_result(g, "K4", verts_g + (u,))
            return found_result(g, "C4", verts_g)

    # Step 4-3: C4 through a fully external edge plus one neighborhood.
    for u in sorted(n_ext):
        for w in sorted(n_ext[u]):
            if w < u or u not in n_ext[w]:
                continue
            for i in range(t):
                if u in n_i_sets[i] or w in n_i_sets[i]:
                    continue
                for dcand in table2.get((i, u), ()):
                    for ccand in table2.get((i, w), ()):
                        if (
                            dcand != ccand
                            and g.has_edge(dcand, ccand)
                            and not g.has_edge(u, ccand)
                            and not g.has_edge(w, dcand)
                        ):
                            return found_result(g, "C4", (u, w, ccand, dcand))

    # Step 4-4: C4 whose opposite corners see each other only externally.
    table_ext: dict[tuple[int, int], list[int]] = {}
    for z in sorted(n_ext):
        members = sorted(n_ext[z])
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                w, u = members[a], members[b]
                if g.has_edge(w, u):
                    continue
                cell = table_ext.setdefault((w, u), [])
                hit = None
                for prev in cell:
                    if not g.has_edge(prev, z):
                        hit = prev
                        break
                if hit is not None:
                    return found_result(g, "C4", (w, hit, u, z))
                if len(cell) == 2:
                    return found_result(g, "K4", (w, cell[0], cell[1], z))
                cell.append(z)
    return absent_result()


def detect_c4_or_k4(g: Graph) -> DetectionResult:
    """Induced {C4, K4} detection in O(n^(7/3))."""
    if g.n < SMALL_N_ORACLE:
        return brute_force_detect_set(
            g, [catalog_lookup("C4"), catalog_lookup("K4")], induced=True
        )
    return _detect_c4_or_k4_impl(g)


# ---------------------------------------------------------------------------
# {C4, paw}
# ---------------------------------------------------------------------------


def _paw_clique_neighborhood(g: Graph, v: int, comp: set[int]) -> DetectionResult:
    """Connected component where N(v) is a clique of size >= 2."""
    nv = [u for u in g.nbrs[v] if u in comp]
    nv_set = set(nv)
    s_side: list[int] = []
    t_side: list[int] = []
    for u in sorted(comp):
        if u == v or u in nv_set:
            continue
        hits = [x for x in nv if g.has_edge(u, x)]
        if hits and len(hits) < len(nv):
            x = hits[0]
            y = next(w for w in nv if not g.has_edge(u, w))
            return found_result(g, "paw", (v, x, y, u))
        (s_side if hits else t_side).append(u)
    if t_side:
        t_set = set(t_side)
        for w in s_side:
            tv = next((u for u in g.nbrs[w] if u in t_set), None)
            if tv is not None:
                return found_result(g, "paw", (w, nv[0], nv[1], tv))
        raise InternalError("connected component has vertices isolated from N[v]")
    for a_i, a in enumerate(s_side):
        for b in s_side[a_i + 1:]:
            if g.has_edge(a, b):
                return found_result(g, "paw", (nv[0], a, b, v))
    sub_vertices = sorted(comp)
    sub, old_to_new = induced_subgraph(g, sub_vertices)
    cert_local = Certificate(
        "complete-split",
        (
            tuple(sorted(old_to_new[x] for x in nv)),
            tuple(sorted(old_to_new[x] for x in [v] + s_side)),
        ),
    )
    return absent_result(sub, cert_local)


def _paw_edge_neighborhood(g: Graph, v: int, comp: set[int]) -> DetectionResult:
    """Connected component where N(v) contains an edge: the quadratic core case."""
    nv = sorted(u for u in g.nbrs[v] if u in comp)
    sub, old_to_new = induced_subgraph(g, nv)
    new_to_old = {x: y for y, x in old_to_new.items()}
    res = p3_structure(sub, complemented=True)
    if res:
        p, q, r = (new_to_old[x] for x in res.found[1])
        # co-P3 (p, q, r): p-r is the edge, q sees neither.
        return found_result(g, "paw", (v, p, r, q))
    parts = [tuple(sorted(new_to_old[x] for x in part)) for part in res.certificate.parts]
    big = [p for p in parts if len(p) >= 2]
    if len(big) >= 2:
        (a, b), (c, d) = big[0][:2], big[1][:2]
        return found_result(g, "C4", (a, c, b, d))
    if not big:
        return _paw_clique_neighborhood(g, v, comp)
    part_of = {}
    for pi, p in enumerate(parts):
        for x in p:
            part_of[x] = pi
    nv_set = set(nv)
    big_set = set(big[0])
    isolated_seen = False
    for u in sorted(comp):
        if u == v or u in nv_set:
            continue
        hits = [x for x in nv if g.has_edge(u, x)]
        if len(hits) == len(nv):
            z, w = big[0][0], big[0][1]
            return found_result(g, "C4", (u, z, v, w))
        if hits:
            hit_set = set(hits)
            for x in hits:
                for y in nv:
                    if y not in hit_set and part_of[x] != part_of[y]:
                        return found_result(g, "paw", (v, x, y, u))
            raise InternalError("mixed attachment with no cross-part witness")
        isolated_seen = True
    if isolated_seen:
        raise InternalError("connected component has vertices isolated from N[v]")
    sub_vertices = sorted(comp)
    subc, old_to_new_c = induced_subgraph(g, sub_vertices)
    cert_parts = tuple(
        tuple(sorted(old_to_new_c[x] for x in p)) for p in parts
    ) + ((old_to_new_c[v],),)
    return absent_result(subc, Certificate("complete-multipartite", cert_parts))


def _detect_c4_or_paw_component(g: Graph, comp: list[int]) -> DetectionResult:
    comp_set = set(comp)
    sub, old_to_new = induced_subgraph(g, comp)
    new_to_old = {x: y for y, x in old_to_new.items()}
    quad = noninduced_c4(sub)
    center = None
    if quad:
        u, a, v, b = (new_to_old[x] for x in quad.found[1])
        if not g.has_edge(a, b) and not g.has_edge(u, v):
            return found_result(g, "C4", (u, a, v, b))
        center = u if g.has_edge(a, b) else a
    else:
        for w in sorted(comp):
            nb = [x for x in g.nbrs[w] if x in comp_set]
            done = False
            for ii in range(len(nb)):
                for jj in range(ii + 1, len(nb)):
                    if g.has_edge(nb[ii], nb[jj]):
                        center = w
                        done = True
                        break
                if done:
                    break
            if done:
                break
    if center is None:
        return absent_result()  # component is triangle-free and 4-cycle-free
    return _paw_edge_neighborhood(g, center, comp_set)


def _detect_c4_or_paw_impl(g: Graph) -> DetectionResult:
    comps = connected_components(g)
    certs: list[Optional[Certificate]] = []
    for comp in comps:
        res = _detect_c4_or_paw_component(g, comp)
        if res:
            return res
        certs.append(res.certificate)
    if len(comps) == 1 and certs[0] is not None:
        return absent_result(g, certs[0])
    return absent_result()


def detect_c4_or_paw(g: Graph) -> DetectionResult:
    """Induced {C4, paw} detection in O(n^2)."""
    if g.n < SMALL_N_ORACLE:
        return brute_force_detect_set(
            g, [catalog_lookup("C4"), catalog_lookup("paw")], induced=True
        )
    return _detect_c4_or_paw_impl(g)


# ---------------------------------------------------------------------------
# {C4, co-claw}
# ---------------------------------------------------------------------------


def _strip_universal(g: Graph) -> tuple[Graph, dict[int, int]]:
    live = list(range(g.n))
    while True:
        live_set = set(live)
        stripped = [
            v
            for v in live
            if sum(1 for u in g.nbrs[v] if u in live_set) == len(live) - 1
        ]
        if not stripped:
            break
        gone = set(stripped)
        live = [v for v in live if v not in gone]
    sub, old_to_new = induced_subgraph(g, live)
    return sub, old_to_new


def _detect_c4_or_coclaw_impl(g: Graph) -> DetectionResult:
    sub, old_to_new = _strip_universal(g)
    new_to_old = {x: y for y, x in old_to_new.items()}
    res = _coclaw_stripped(sub)
    if res:
        name, verts = res.found
        return found_result(g, name, tuple(new_to_old[x] for x in verts))
    return absent_result()


def _coclaw_stripped(g: Graph) -> DetectionResult:
    """{C4, co-claw} on a graph with no universal vertex."""
    if g.n < 4:
        return absent_result()
    base = _detect_c4_or_triangle_impl(g)
    if not base:
        return absent_result()
    name, verts = base.found
    if name == "C4":
        return found_result(g, "C4", verts)
    clique = list(verts)
    cmask = set(clique)
    for v in range(g.n):
        if v not in cmask and all(g.has_edge(v, u) for u in clique):
            clique.append(v)
            cmask.add(v)
    outside = [v for v in range(g.n) if v not in cmask]

    # Any outside vertex missing three clique vertices closes a co-claw.
    missed: dict[int, list[int]] = {}
    for u in outside:
        miss = [c for c in clique if not g.has_edge(u, c)]
        if len(miss) >= 3:
            return found_result(g, "co-claw", (miss[0], miss[1], miss[2], u))
        missed[u] = miss

    # Clique vertices with no outside neighbor cannot join any pattern now.
    outside_set = set(outside)
    isolated = [v for v in clique if not any(u in outside_set for u in g.nbrs[v])]
    if isolated:
        sub, old_to_new = induced_subgraph(g, outside)
        r2 = _detect_c4_or_triangle_impl(sub)
        new_to_old = {x: y for y, x in old_to_new.items()}
        if r2:
            nm, vs = r2.found
            vs_g = tuple(new_to_old[x] for x in vs)
            if nm == "C4":
                return found_result(g, "C4", vs_g)
            return found_result(g, "co-claw", vs_g + (isolated[0],))
        keep = [v for v in range(g.n) if v not in set(isolated)]
        sub2, o2n = induced_subgraph(g, keep)
        res = _detect_c4_or_coclaw_impl(sub2)
        if res:
            n2o = {x: y for y, x in o2n.items()}
            nm, vs = res.found
            return found_result(g, nm, tuple(n2o[x] for x in vs))
        return absent_result()

    # Case analysis around an edge outside the clique, if any exists.
    for u in outside:
        for w in g.nbrs[u]:
            if w not in outside_set or w <= u:
                continue
            su, sw = set(missed[u]), set(missed[w])
            across_u = [c for c in missed[u] if c not in sw]
            across_w = [c for c in missed[w] if c not in su]
            if across_u and across_w:
                return found_result(g, "C4", (u, w, across_w[0], across_u[0]))
            if len(su) > len(sw) or (len(su) == len(sw) and not su <= sw):
                u, w = w, u
                su, sw = sw, su
            # Now the set u misses is contained in the set w misses.
            if su == sw and len(su) == 1:
                v1 = missed[u][0]
                z = next(x for x in g.nbrs[v1] if x in outside_set)
                vp = missed[z][0]
                if g.has_edge(z, u):
                    return found_result(g, "C4", (v1, z, u, vp))
                if g.has_edge(z, w):
                    return found_result(g, "C4", (v1, z, w, vp))
                return found_result(g, "co-claw", (u, w, vp, z))
            if su == sw:
                v1, v2 = missed[u]
                v3 = next(c for c in clique if c != v1 and c != v2)
                z = next(x for x in outside if not g.has_edge(x, v3))
                zhit = v1 if g.has_edge(z, v1) else v2
                if g.has_edge(z, u):
                    return found_result(g, "C4", (u, z, zhit, v3))
                if g.has_edge(z, w):
                    return found_result(g, "C4", (w, z, zhit, v3))
                return found_result(g, "co-claw", (u, w, v3, z))
            # su = {v1} strictly inside sw = {v1, v2}.
            v1 = missed[u][0]
            v2 = next(c for c in missed[w] if c != v1)
            for z in g.nbrs[v1]:
                if z not in outside_set:
                    continue
                third = [c for c in missed[z] if c != v2]
                if not third:
                    continue
                v3 = third[0]
                if g.has_edge(z, w):
                    return found_result(g, "C4", (w, z, v1, v3))
                if g.has_edge(z, u):
                    return found_result(g, "C4", (u, z, v1, v3))
                return found_result(g, "co-claw", (u, w, v3, z))
            z1 = next(x for x in g.nbrs[v1] if x in outside_set)
            v3 = next(c for c in clique if c != v1 and c != v2)
            z2 = next(x for x in outside if not g.has_edge(x, v3))
            if g.has_edge(z1, z2):
                return found_result(g, "C4", (z1, z2, v2, v1))
            return found_result(g, "co-claw", (z1, v1, v3, z2))

    # No edges outside the clique: the one remaining co-claw shape pairs a
    # vertex adjacent to both ends of another vertex's missed clique edge.
    for w in outside:
        if len(missed[w]) != 2:
            continue
        c1, c2 = missed[w]
        for u in outside:
            if u != w and g.has_edge(u, c1) and g.has_edge(u, c2):
                return found_result(g, "co-claw", (u, c1, c2, w))
    return absent_result()


def detect_c4_or_coclaw(g: Graph) -> DetectionResult:
    """Induced {C4, co-claw} detection in O(n^2)."""
    if g.n < SMALL_N_ORACLE:
        return brute_force_detect_set(
            g, [catalog_lookup("C4"), catalog_lookup("co-claw")], induced=True
        )
    return _detect_c4_or_coclaw_impl(g)


def detect_c4_or_triangleH(g: Graph, h: Union[Graph, Pattern]) -> DetectionResult:
    """{C4, H} for any 4-vertex H containing a triangle: dispatch by H."""
    hg = h.graph if isinstance(h, Pattern) else h
    if hg.n != 4:
        raise InputError("detect_c4_or_triangleH expects a 4-vertex pattern")
    name = identify_pattern(hg)
    if name == "K4":
        return detect_c4_or_k4(g)
    if name == "diamond":
        return detect_c4_or_diamond(g)
    if name == "paw":
        return detect_c4_or_paw(g)
    if name == "co-claw":
        return detect_c4_or_coclaw(g)
    raise InputError(f"pattern {name} contains no triangle")
