import itertools

import pytest

from patternforge.catalog import catalog_lookup, complement_pattern
from patternforge.errors import CapacityError
from patternforge.generators import all_graphs_up_to_iso, gnp
from patternforge.graphs import (
    Graph,
    Pattern,
    graph_from_edges,
    induced_subgraph,
    is_isomorphic,
)
from patternforge.homcore import (
    chromatic_number,
    compute_core,
    find_C_coloring,
    find_homomorphism,
    is_color_critical,
    is_core,
    min_C_covering,
    subgraph_copy_sets,
)


def _hom_is_valid(src: Graph, dst: Graph, hom) -> bool:
    return all(dst.has_edge(hom[u], hom[v]) for u, v in src.edges())


def test_find_homomorphism_examples():
    c4, k2 = catalog_lookup("C4"), catalog_lookup("K2")
    hom = find_homomorphism(c4, k2)
    assert hom is not None and _hom_is_valid(c4.graph, k2.graph, hom)
    assert find_homomorphism(catalog_lookup("C5"), k2) is None
    assert find_homomorphism(catalog_lookup("K4"), catalog_lookup("K3")) is None


def test_compute_core_examples():
    core, rho = compute_core(catalog_lookup("C4"))
    assert core.n == 2 and core.graph.m == 1
    assert _hom_is_valid(catalog_lookup("C4").graph, core.graph, rho)
    k5 = catalog_lookup("K5")
    core5, _ = compute_core(k5)
    assert core5.n == 5
    cob7 = complement_pattern(catalog_lookup("C7"))
    core7, _ = compute_core(cob7)
    assert core7.n == 7  # complements of odd cycles are their own cores


def test_is_core_examples():
    assert is_core(catalog_lookup("C5"))
    assert not is_core(catalog_lookup("P6"))
    assert is_core(complement_pattern(catalog_lookup("C9")))


@pytest.mark.parametrize("seed", range(25))
def test_core_properties_random(seed):
    g = gnp(3 + seed % 6, (0.2, 0.45, 0.7)[seed % 3], seed)
    core, rho = compute_core(g)
    # the retraction actually lands in the core and preserves edges
    assert _hom_is_valid(g, core.graph, rho)
    # the core admits no homomorphism to any proper induced subgraph
    for v in range(core.n):
        sub, _ = induced_subgraph(core.graph, [u for u in range(core.n) if u != v])
        assert find_homomorphism(core.graph, sub) is None
    # uniqueness up to isomorphism under relabeling of the input
    import random

    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    relabeled = graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    core2, _ = compute_core(relabeled)
    assert is_isomorphic(core.graph, core2.graph) is not None


def test_chromatic_number_examples():
    assert chromatic_number(complement_pattern(catalog_lookup("C7"))) == 4
    assert chromatic_number(catalog_lookup("K6")) == 6
    assert chromatic_number(catalog_lookup("C6")) == 2
    for k in (5, 7, 9, 11):
        assert chromatic_number(complement_pattern(catalog_lookup(f"C{k}"))) == (k + 1) // 2


def test_is_color_critical_examples():
    assert is_color_critical(complement_pattern(catalog_lookup("C5")))
    assert not is_color_critical(catalog_lookup("P4"))
    assert is_color_critical(catalog_lookup("K3"))


def test_color_critical_implies_core():
    for n in range(2, 7):
        for g in all_graphs_up_to_iso(n):
            if is_color_critical(g):
                assert is_core(g), list(g.edges())


def test_capacity_caps():
    big = graph_from_edges(17, [(i, i + 1) for i in range(16)])
    with pytest.raises(CapacityError):
        compute_core(big)
    with pytest.raises(CapacityError):
        chromatic_number(big)


def test_find_C_coloring_examples():
    c5 = catalog_lookup("C5")
    coloring = find_C_coloring(c5, c5)
    assert coloring is not None and sorted(coloring) == [0, 1, 2, 3, 4]
    two_c5 = graph_from_edges(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 1) % 5) for i in range(5)],
    )
    coloring = find_C_coloring(two_c5, c5)
    assert coloring is not None
    assert sorted(coloring[:5]) == [0, 1, 2, 3, 4]
    assert sorted(coloring[5:]) == [0, 1, 2, 3, 4]
    assert find_C_coloring(catalog_lookup("K4"), catalog_lookup("K3")) is None


def test_find_C_coloring_rainbows_every_copy():
    h = graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    k3 = catalog_lookup("K3")
    coloring = find_C_coloring(h, k3)
    assert coloring is not None
    for copy in subgraph_copy_sets(h, k3):
        assert len({coloring[v] for v in copy}) == 3


def _exhaustive_covering_number(h: Graph, c) -> int:
    """Oracle: all assignments of copies to groups, minimizing group count."""
    copies = subgraph_copy_sets(h, c)
    if not copies:
        return 0
    best = len(copies)

    def colorable(groups):
        for members in groups:
            union = frozenset().union(*members)
            sub, _ = induced_subgraph(h, sorted(union))
            if find_C_coloring(sub, c) is None:
                return False
        return True

    def rec(idx, groups):
        nonlocal best
        if len(groups) >= best:
            return
        if idx == len(copies):
            if colorable(groups):
                best = len(groups)
            return
        for gi in range(len(groups)):
            groups[gi].append(copies[idx])
            rec(idx + 1, groups)
            groups[gi].pop()
        groups.append([copies[idx]])
        rec(idx + 1, groups)
        groups.pop()

    rec(0, [])
    return best


@pytest.mark.parametrize(
    "edges,n,core_name",
    [
        ([(0, 1), (1, 2), (2, 3), (3, 0)], 4, "K2"),  # 4-cycle
        ([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)], 6, "K3"),
        ([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)], 6, "C5"),
    ],
)
def test_min_covering_matches_exhaustive_oracle(edges, n, core_name):
    h = graph_from_edges(n, edges)
    c = catalog_lookup(core_name)
    cov = min_C_covering(h, c)
    assert cov.verify(h)
    assert cov.size == _exhaustive_covering_number(h, c)


def test_min_covering_simple_cases():
    c6, k2 = catalog_lookup("C6"), catalog_lookup("K2")
    cov = min_C_covering(c6, k2)
    assert cov.size == 1 and cov.verify(c6)
    c5 = catalog_lookup("C5")
    cov2 = min_C_covering(c5, c5)
    assert cov2.size == 1 and sorted(cov2.sets[0]) == [0, 1, 2, 3, 4]
