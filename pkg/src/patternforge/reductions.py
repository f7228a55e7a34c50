"""Clique-to-pattern reduction constructors with provenance and witnesses.

Each constructor builds a partitioned host graph whose parts are indexed by
the pattern's vertices, records per-vertex provenance (which pattern vertex,
which source vertex), and states a guarantee linking pattern copies in the
output to clique (or core) copies in the input.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .catalog import cycle_graph, path_graph
from .errors import CapacityError, InputError, InternalError
from .graphs import (
    Graph,
    Pattern,
    PartitionedGraph,
    complement,
    graph_from_edges,
    induced_subgraph,
    is_isomorphic,
)
from .homcore import CCovering, compute_core, find_homomorphism, min_C_covering
from .minors import MinorFunction, max_clique_minor

SENTINEL = None  # origin marker for vertices with no source-graph preimage

EXHAUSTIVE_COLORING_CAP = 1 << 21


@dataclass(frozen=True)
class ReductionParams:
    kind: str
    pattern: Pattern
    t: int
    source: Graph
    minor: Optional[MinorFunction] = None
    covering: Optional[CCovering] = None
    coloring: Optional[tuple[int, ...]] = None
    core: Optional[Pattern] = None
    t_prime: Optional[int] = None
    seed: Optional[int] = None


@dataclass(frozen=True)
class ReductionInstance:
    out: PartitionedGraph
    origin: tuple[tuple[int, Optional[int]], ...]  # (pattern vertex, source vertex)
    params: ReductionParams

    def guarantee(self) -> str:
        p = self.params
        pname = p.pattern.name or f"<{p.pattern.n}-vertex pattern>"
        if p.kind == "psi":
            return (
                f"GUARANTEE: G has a {p.t}-clique <=> G* has a colorful copy of {pname}"
            )
        if p.kind == "core":
            cname = p.core.name or f"<{p.core.n}-vertex core>"
            return (
                f"GUARANTEE: G contains {cname} as a subgraph <=> some instance's "
                f"G* contains {pname} as a subgraph"
            )
        if p.kind == "pathcycle":
            return (
                f"GUARANTEE: G has a {p.t_prime}-clique <=> G* contains {pname} "
                f"as a subgraph"
            )
        return f"GUARANTEE: see construction {p.kind}"


# ---------------------------------------------------------------------------
# Clique -> colorful-pattern construction.
# ---------------------------------------------------------------------------


def build_psi_reduction(g: Graph, h: Pattern, f: MinorFunction) -> ReductionInstance:
    """One copy of V(g) per pattern vertex; edges mirror g across pattern
    edges whose endpoints lie in different minor blocks, and form an identity
    matching across pattern edges inside one block.

    The output has a colorful copy of h exactly when g has a t-clique, where
    t is the block count of f.
    """
    if f.pattern.graph.nbrs != h.graph.nbrs:
        raise InputError("minor function was built for a different pattern")
    if not f.validate():
        raise InputError("invalid minor partition")
    k, n = h.n, g.n
    edges: list[tuple[int, int]] = []

    def vid(hv: int, gv: int) -> int:
        return hv * n + gv

    for u, v in h.graph.edges():
        if f.f[u] == f.f[v]:
            edges.extend((vid(u, w), vid(v, w)) for w in range(n))
        else:
            for a, b in g.edges():
                edges.append((vid(u, a), vid(v, b)))
                edges.append((vid(u, b), vid(v, a)))
    out_graph = graph_from_edges(k * n, edges)
    part_of = tuple(hv for hv in range(k) for _ in range(n))
    origin = tuple((hv, gv) for hv in range(k) for gv in range(n))
    params = ReductionParams(kind="psi", pattern=h, t=f.t, source=g, minor=f)
    return ReductionInstance(PartitionedGraph(out_graph, part_of, k), origin, params)


def extract_clique_psi(inst: ReductionInstance, copy: Sequence[int]) -> tuple[int, ...]:
    """Decode a colorful pattern copy back to a clique of the source graph.

    The copy must hold one output vertex per part with every pattern edge
    realized; anything else is an input error.  Per minor block, all chosen
    vertices must descend from one source vertex, and those block
    representatives must form a clique -- failures there are internal errors.
    """
    p = inst.params
    if p.minor is None:
        raise InputError("instance does not carry a minor partition")
    h = p.pattern.graph
    k = h.n
    if len(copy) != k or len(set(copy)) != k:
        raise InputError("copy must list one vertex per part")
    by_part: dict[int, int] = {}
    for v in copy:
        if not (0 <= v < inst.out.graph.n):
            raise InputError(f"vertex {v} outside the instance")
        part = inst.out.part_of[v]
        if part in by_part:
            raise InputError("copy has two vertices in one part")
        by_part[part] = v
    for u, v in h.edges():
        if not inst.out.graph.has_edge(by_part[u], by_part[v]):
            raise InputError("copy is not a colorful pattern copy")
    reps: dict[int, int] = {}
    for hv in range(k):
        _, gv = inst.origin[by_part[hv]]
        if gv is None:
            raise InternalError("pattern-copy vertex lacks a source preimage")
        block = p.minor.f[hv]
        if block in reps and reps[block] != gv:
            raise InternalError("minor block maps to two source vertices")
        reps[block] = gv
    clique = tuple(reps[b] for b in sorted(reps))
    if len(set(clique)) != p.t:
        raise InternalError("block representatives are not distinct")
    for a, b in itertools.combinations(clique, 2):
        if not p.source.has_edge(a, b):
            raise InternalError("block representatives miss a source edge")
    return clique


# ---------------------------------------------------------------------------
# Core -> pattern construction (color coding).
# ---------------------------------------------------------------------------


def _core_instance(
    g: Graph,
    h: Pattern,
    core: Pattern,
    retraction: tuple[int, ...],
    covering: CCovering,
    colors: Sequence[int],
) -> ReductionInstance:
    """One color-coded instance: copies of color classes for the first
    covering set, single vertices for the rest of the pattern."""
    c = core.n
    first = sorted(covering.sets[0])
    in_first = set(first)
    # The first set's coloring is the retraction restricted to it: a
    # homomorphism into the core is always a valid rainbow coloring, and its
    # edges land on core edges, which the forward direction needs.
    f1 = {v: retraction[v] for v in first}
    classes: list[list[int]] = [[] for _ in range(c)]
    for gv, col in enumerate(colors):
        classes[col].append(gv)

    ids: dict[tuple[int, Optional[int]], int] = {}
    origin: list[tuple[int, Optional[int]]] = []
    part_of: list[int] = []

    def add_vertex(hv: int, gv: Optional[int]) -> int:
        vid = len(origin)
        ids[(hv, gv)] = vid
        origin.append((hv, gv))
        part_of.append(hv)
        return vid

    for hv in range(h.n):
        if hv in in_first:
            for gv in classes[f1[hv]]:
                add_vertex(hv, gv)
        else:
            add_vertex(hv, SENTINEL)

    edges: list[tuple[int, int]] = []
    for u, v in h.graph.edges():
        u_in, v_in = u in in_first, v in in_first
        if u_in and v_in:
            cu, cv = f1[u], f1[v]
            if cu == cv:
                edges.extend(
                    (ids[(u, w)], ids[(v, w)]) for w in classes[cu]
                )
            else:
                for a in classes[cu]:
                    mask_b = g.mask(a)
                    for b in classes[cv]:
                        if mask_b >> b & 1:
                            edges.append((ids[(u, a)], ids[(v, b)]))
        elif u_in:
            vv = ids[(v, SENTINEL)]
            edges.extend((ids[(u, w)], vv) for w in classes[f1[u]])
        elif v_in:
            uu = ids[(u, SENTINEL)]
            edges.extend((uu, ids[(v, w)]) for w in classes[f1[v]])
        else:
            edges.append((ids[(u, SENTINEL)], ids[(v, SENTINEL)]))
    out_graph = graph_from_edges(len(origin), edges)
    params = ReductionParams(
        kind="core",
        pattern=h,
        t=core.n,
        source=g,
        covering=covering,
        coloring=tuple(colors),
        core=core,
    )
    return ReductionInstance(
        PartitionedGraph(out_graph, tuple(part_of), h.n), tuple(origin), params
    )


def build_core_reduction(
    g: Graph,
    h: Pattern,
    mode: str = "exhaustive",
    seed: Optional[int] = None,
    rounds: Optional[int] = None,
) -> list[ReductionInstance]:
    """Color-coded instances reducing core detection to pattern detection.

    In "exhaustive" mode every coloring of V(g) with |core| colors is
    emitted, so: g contains core(h) as a subgraph iff some instance contains
    h as a subgraph.  In "seeded" mode, ceil(c^c * (ln n + ln 100)) random
    colorings (or `rounds` of them) give failure probability <= 1/(100 n).
    """
    if h.n > 12:
        raise CapacityError("core reduction capped at 12 pattern vertices")
    core, retraction = compute_core(h)
    covering = min_C_covering(h, core)
    if covering.size == 0:
        raise InternalError("pattern has no copy of its own core")
    c = core.n
    n = g.n
    if mode == "exhaustive":
        if c**max(n, 1) > EXHAUSTIVE_COLORING_CAP:
            raise CapacityError("exhaustive colorings exceed the cap")
        colorings: Iterable[Sequence[int]] = itertools.product(range(c), repeat=n)
    elif mode == "seeded":
        if rounds is not None and rounds <= 0:
            raise InputError("rounds must be positive")
        if rounds is None:
            rounds = max(1, math.ceil(c**c * (math.log(max(n, 2)) + math.log(100))))
        rng = random.Random(("core-coloring", seed, n, c))
        colorings = [
            tuple(rng.randrange(c) for _ in range(n)) for _ in range(rounds)
        ]
    else:
        raise InputError(f"unknown mode {mode!r}")
    return [
        _core_instance(g, h, core, retraction, covering, colors)
        for colors in colorings
    ]


# ---------------------------------------------------------------------------
# Shrunken construction for complements of paths and even cycles.
# ---------------------------------------------------------------------------


def _path_or_cycle_order(h: Pattern) -> tuple[str, list[int]]:
    """Recognize h as the complement of a path or cycle; return the
    complement's vertex order v_0..v_{k-1}."""
    k = h.n
    comp = complement(h.graph)
    if k >= 2:
        iso = is_isomorphic(comp, path_graph(k))
        if iso is not None:
            order = [0] * k
            for v, pos in enumerate(iso):
                order[pos] = v
            return "path", order
    if k >= 3:
        iso = is_isomorphic(comp, cycle_graph(k))
        if iso is not None:
            order = [0] * k
            for v, pos in enumerate(iso):
                order[pos] = v
            return "cycle", order
    raise InputError("pattern is not the complement of a path or cycle")


def _relabel_for_endpoints(mf: MinorFunction, v_first: int, v_last: int) -> tuple[MinorFunction, int]:
    """Permute block labels so the endpoint blocks carry the top labels.

    Returns the relabeled partition and t' (the clique size the construction
    reduces from): t-1 when both endpoints share a block, t-2 otherwise.
    """
    t = mf.t
    a, b = mf.f[v_first], mf.f[v_last]
    if a == b:
        t_prime = t - 1
        perm = list(range(t))
        perm[a], perm[t - 1] = perm[t - 1], perm[a]
        return mf.relabeled(tuple(perm)), t_prime
    t_prime = t - 2
    rest = [lab for lab in range(t) if lab != a and lab != b]
    perm = [0] * t
    for i, lab in enumerate(rest):
        perm[lab] = i
    perm[a] = t - 2
    perm[b] = t - 1
    return mf.relabeled(tuple(perm)), t_prime


def build_pathcycle_reduction(g: Graph, h: Pattern) -> tuple[ReductionInstance, int]:
    """Shrunken clique-to-subgraph construction for P/C complements.

    Builds the colorful construction from a maximum minor partition, then
    replaces every part whose block label is at least t' by a single vertex
    joined to all neighboring parts.  The output contains h as a subgraph iff
    g has a t'-clique.  Odd-cycle complements are rejected (they are cores;
    use the colorful construction directly), as is the disconnected
    complement of the 4-cycle.
    """
    if h.n > 12:
        raise CapacityError("path/cycle reduction capped at 12 pattern vertices")
    kind, order = _path_or_cycle_order(h)
    k = h.n
    if kind == "cycle":
        if k % 2 == 1:
            raise InputError(
                "complement of an odd cycle is a core; use the colorful construction"
            )
        if k == 4:
            raise InputError(
                "complement of the 4-cycle is disconnected; no minor partition exists"
            )
    if kind == "path" and k < 4:
        raise InputError("path complements need k >= 4")
    t, mf = max_clique_minor(h)
    v_first, v_last = order[0], order[-1]
    mf2, t_prime = _relabel_for_endpoints(mf, v_first, v_last)
    shrink = [hv for hv in range(k) if mf2.f[hv] >= t_prime]
    shrink_set = set(shrink)

    n = g.n
    ids: dict[tuple[int, Optional[int]], int] = {}
    origin: list[tuple[int, Optional[int]]] = []
    part_of: list[int] = []

    def add_vertex(hv: int, gv: Optional[int]) -> int:
        vid = len(origin)
        ids[(hv, gv)] = vid
        origin.append((hv, gv))
        part_of.append(hv)
        return vid

    for hv in range(k):
        if hv in shrink_set:
            add_vertex(hv, SENTINEL)
        else:
            for gv in range(n):
                add_vertex(hv, gv)

    edges: list[tuple[int, int]] = []
    for u, v in h.graph.edges():
        u_shr, v_shr = u in shrink_set, v in shrink_set
        if u_shr and v_shr:
            edges.append((ids[(u, SENTINEL)], ids[(v, SENTINEL)]))
        elif u_shr:
            uu = ids[(u, SENTINEL)]
            edges.extend((uu, ids[(v, w)]) for w in range(n))
        elif v_shr:
            vv = ids[(v, SENTINEL)]
            edges.extend((ids[(u, w)], vv) for w in range(n))
        elif mf2.f[u] == mf2.f[v]:
            edges.extend((ids[(u, w)], ids[(v, w)]) for w in range(n))
        else:
            for a, b in g.edges():
                edges.append((ids[(u, a)], ids[(v, b)]))
                edges.append((ids[(u, b)], ids[(v, a)]))
    out_graph = graph_from_edges(len(origin), edges)
    params = ReductionParams(
        kind="pathcycle",
        pattern=h,
        t=t,
        source=g,
        minor=mf2,
        t_prime=t_prime,
    )
    inst = ReductionInstance(
        PartitionedGraph(out_graph, tuple(part_of), k), tuple(origin), params
    )
    return inst, t_prime


# ---------------------------------------------------------------------------
# Representative choice for set detection.
# ---------------------------------------------------------------------------


def choose_set_representative(patterns: Sequence[Pattern]) -> tuple[Pattern, Pattern]:
    """Pick the pattern whose core drives hardness for the whole set.

    Builds the homomorphism digraph on the set, takes a source strongly
    connected component, verifies its members share one core up to
    isomorphism, and returns the member with the smallest covering number
    together with that shared core.
    """
    if not patterns or len(patterns) > 16:
        raise CapacityError("set representative choice handles 1..16 patterns")
    if any(p.n > 12 for p in patterns):
        raise CapacityError("set members capped at 12 vertices")
    s = len(patterns)
    hom = [[False] * s for _ in range(s)]
    for i in range(s):
        for j in range(s):
            hom[i][j] = (
                i == j or find_homomorphism(patterns[i], patterns[j]) is not None
            )
    reach = [set(j for j in range(s) if hom[i][j]) for i in range(s)]
    changed = True
    while changed:
        changed = False
        for i in range(s):
            for j in list(reach[i]):
                if not reach[j] <= reach[i]:
                    reach[i] |= reach[j]
                    changed = True
    comp_of = [-1] * s
    comps: list[list[int]] = []
    for i in range(s):
        if comp_of[i] >= 0:
            continue
        comp = [j for j in range(s) if j in reach[i] and i in reach[j]]
        cid = len(comps)
        for j in comp:
            comp_of[j] = cid
        comps.append(comp)
    source_comps = []
    for cid, comp in enumerate(comps):
        incoming = any(
            hom[x][comp[0]] and comp_of[x] != cid for x in range(s)
        )
        if not incoming:
            source_comps.append(comp)
    chosen = min(source_comps, key=lambda comp: min(comp))
    cores = {i: compute_core(patterns[i])[0] for i in chosen}
    base = cores[chosen[0]]
    for i in chosen[1:]:
        if is_isomorphic(cores[i].graph, base.graph) is None:
            raise InternalError("source component members have different cores")
    cover_sizes = {
        i: min_C_covering(patterns[i], cores[i]).size for i in chosen
    }
    best = min(chosen, key=lambda i: (cover_sizes[i], i))
    return patterns[best], cores[best]


# ---------------------------------------------------------------------------
# Hyperclique -> induced 4-cycle construction.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hypergraph4P3U:
    """4-partite 3-uniform hypergraph; vertices are (part, index) pairs."""

    sizes: tuple[int, int, int, int]
    triples: frozenset[tuple[tuple[int, int], ...]]

    def __post_init__(self) -> None:
        for tr in self.triples:
            if len(tr) != 3:
                raise InputError("hyperedges must be triples")
            parts = [p for p, _ in tr]
            if len(set(parts)) != 3 or sorted(tr) != list(tr):
                raise InputError("triples must touch three distinct parts, sorted")
            for p, i in tr:
                if not (0 <= p < 4 and 0 <= i < self.sizes[p]):
                    raise InputError(f"hyperedge endpoint ({p},{i}) out of range")

    def has_triple(self, a: tuple[int, int], b: tuple[int, int], c: tuple[int, int]) -> bool:
        return tuple(sorted((a, b, c))) in self.triples

    def hypercliques(self):
        """All quadruples (one vertex per part) whose four triples exist."""
        out = []
        for quad in itertools.product(*(range(s) for s in self.sizes)):
            verts = [(p, quad[p]) for p in range(4)]
            if all(
                self.has_triple(*(verts[p] for p in parts))
                for parts in itertools.combinations(range(4), 3)
            ):
                out.append(quad)
        return out


@dataclass(frozen=True)
class HC4Origin:
    """Per-vertex provenance of the 4-cycle gadget plus its source hypergraph."""

    pairs: tuple[tuple[int, int, int], ...]  # (band, x, y) per output vertex
    hypergraph: Hypergraph4P3U


def build_hyperclique_c4_reduction(hg: Hypergraph4P3U) -> tuple[Graph, HC4Origin]:
    """Band graph on all pairs (x, y) in V_i x V_{i+1}.

    Within a band, two pairs are adjacent when they share the second
    coordinate; across consecutive bands, (x,y) ~ (y,z) exactly when (x,y,z)
    is a hyperedge.  The output has an induced 4-cycle iff the hypergraph
    has a 4-vertex hyperclique.
    """
    sizes = hg.sizes
    if any(s < 1 for s in sizes):
        raise InputError("every part needs at least one vertex")
    offsets = []
    total = 0
    for i in range(4):
        offsets.append(total)
        total += sizes[i] * sizes[(i + 1) % 4]

    def vid(band: int, x: int, y: int) -> int:
        return offsets[band] + x * sizes[(band + 1) % 4] + y

    pairs: list[tuple[int, int, int]] = []
    for band in range(4):
        for x in range(sizes[band]):
            for y in range(sizes[(band + 1) % 4]):
                pairs.append((band, x, y))
    edges: list[tuple[int, int]] = []
    for band in range(4):
        nxt = (band + 1) % 4
        nxt2 = (band + 2) % 4
        for y in range(sizes[nxt]):
            members = [vid(band, x, y) for x in range(sizes[band])]
            edges.extend(itertools.combinations(members, 2))
        for x in range(sizes[band]):
            for y in range(sizes[nxt]):
                for z in range(sizes[nxt2]):
                    if hg.has_triple((band, x), (nxt, y), (nxt2, z)):
                        edges.append((vid(band, x, y), vid(nxt, y, z)))
    return graph_from_edges(total, edges), HC4Origin(tuple(pairs), hg)


def extract_hyperclique(
    out: Graph, origin: HC4Origin, copy: Sequence[int]
) -> tuple[int, int, int, int]:
    """Decode a verified induced 4-cycle back to a hyperclique.

    The four cycle vertices must occupy all four bands (guaranteed by the
    construction; violation is an internal error), chain together through
    matching coordinates, and their four triples are re-verified.
    """
    if len(copy) != 4 or len(set(copy)) != 4:
        raise InputError("copy must list four distinct vertices")
    for v in copy:
        if not (0 <= v < out.n):
            raise InputError(f"vertex {v} outside the gadget graph")
    adjcount = sum(
        1 for a, b in itertools.combinations(copy, 2) if out.has_edge(a, b)
    )
    if adjcount != 4:
        raise InputError("copy is not an induced 4-cycle")
    for v in copy:
        others = [u for u in copy if u != v]
        if sum(1 for u in others if out.has_edge(v, u)) != 2:
            raise InputError("copy is not an induced 4-cycle")
    by_band: dict[int, tuple[int, int]] = {}
    for v in copy:
        band, x, y = origin.pairs[v]
        if band in by_band:
            raise InternalError("induced 4-cycle concentrated in one band")
    # second pass, keeping coordinates
    for v in copy:
        band, x, y = origin.pairs[v]
        by_band[band] = (x, y)
    if len(by_band) != 4:
        raise InternalError("induced 4-cycle misses a band")
    quad = []
    for band in range(4):
        x, y = by_band[band]
        x2, _ = by_band[(band + 1) % 4]
        if y != x2:
            raise InternalError("band coordinates do not chain")
        quad.append(x)
    hg = origin.hypergraph
    for parts in itertools.combinations(range(4), 3):
        verts = [(p, quad[p]) for p in parts]
        if not hg.has_triple(*verts):
            raise InternalError("decoded quadruple misses a hyperedge")
    return tuple(quad)


# ---------------------------------------------------------------------------
# Reduction-instance and hypergraph text formats.
# ---------------------------------------------------------------------------


def write_instance(inst: ReductionInstance) -> str:
    p = inst.params
    g = inst.out.graph
    lines = [f"reduction {p.kind} k={inst.out.k} t={p.t} n={g.n}"]
    for v in range(g.n):
        lines.append(f"part {v} {inst.out.part_of[v]}")
    for v in range(g.n):
        gv = inst.origin[v][1]
        lines.append(f"origin {v} {'*' if gv is None else gv}")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> ReductionInstance:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("reduction "):
        raise InputError("line 1: expected 'reduction <kind> k=.. t=.. n=..'")
    head = lines[0].split()
    kind = head[1]
    fields = dict(tok.split("=", 1) for tok in head[2:])
    try:
        k, t, n = int(fields["k"]), int(fields["t"]), int(fields["n"])
    except (KeyError, ValueError):
        raise InputError("line 1: malformed reduction header") from None
    part_of = [0] * n
    origin: list[tuple[int, Optional[int]]] = [(0, None)] * n
    idx = 1
    for _ in range(n):
        tok = lines[idx].split()
        if tok[0] != "part":
            raise InputError(f"expected part line, got {lines[idx]!r}")
        part_of[int(tok[1])] = int(tok[2])
        idx += 1
    for _ in range(n):
        tok = lines[idx].split()
        if tok[0] != "origin":
            raise InputError(f"expected origin line, got {lines[idx]!r}")
        v = int(tok[1])
        origin[v] = (part_of[v], None if tok[2] == "*" else int(tok[2]))
        idx += 1
    from .graphs import parse_edge_list

    body = "\n".join(lines[idx:])
    g = parse_edge_list(body)
    if g.n != n:
        raise InputError("edge-list body disagrees with header vertex count")
    params = ReductionParams(
        kind=kind,
        pattern=Pattern(graph_from_edges(k, []), None),
        t=t,
        source=graph_from_edges(0, []),
    )
    return ReductionInstance(
        PartitionedGraph(g, tuple(part_of), k), tuple(origin), params
    )


def write_hypergraph(hg: Hypergraph4P3U) -> str:
    lines = [
        "hg 4 3 "
        + " ".join(str(s) for s in hg.sizes)
        + f" {len(hg.triples)}"
    ]
    for tr in sorted(hg.triples):
        lines.append(" ".join(f"{p}:{i}" for p, i in tr))
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph4P3U:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InputError("line 1: empty hypergraph file")
    head = lines[0].split()
    if len(head) != 8 or head[0] != "hg" or head[1] != "4" or head[2] != "3":
        raise InputError("line 1: expected 'hg 4 3 n0 n1 n2 n3 m'")
    try:
        sizes = tuple(int(x) for x in head[3:7])
        m = int(head[7])
    except ValueError:
        raise InputError("line 1: non-integer header field") from None
    triples = set()
    for lineno, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) != 3:
            raise InputError(f"line {lineno}: expected three part:index tokens")
        tr = []
        for tok in toks:
            try:
                p, i = tok.split(":", 1)
                tr.append((int(p), int(i)))
            except ValueError:
                raise InputError(f"line {lineno}: malformed token {tok!r}") from None
        triples.add(tuple(sorted(tr)))
    if len(triples) != m:
        raise InputError(f"header announced {m} hyperedges, found {len(triples)}")
    return Hypergraph4P3U(sizes, frozenset(triples))
