import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patternforge.catalog import catalog_lookup, complement_pattern, identify_pattern
from patternforge.errors import InputError
from patternforge.graphs import (
    Graph,
    Pattern,
    PartitionedGraph,
    complement,
    graph_from_edges,
    induced_subgraph,
    is_H_partite,
    is_isomorphic,
    parse_edge_list,
    write_edge_list,
)


def edge_lists(max_n=10):
    return st.integers(2, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]
                ),
                max_size=2 * n,
            ),
        )
    )


def test_graph_from_edges_basics():
    k3 = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert k3.m == 3 and all(k3.degree(v) == 2 for v in range(3))
    c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.m == 4
    assert is_isomorphic(c4, catalog_lookup("C4").graph) is not None


def test_graph_from_edges_rejects_bad_input():
    with pytest.raises(InputError):
        graph_from_edges(2, [(0, 0)])
    with pytest.raises(InputError):
        graph_from_edges(2, [(0, 5)])


@given(edge_lists())
@settings(max_examples=60, deadline=None)
def test_adjacency_invariants(args):
    n, edges = args
    g = graph_from_edges(n, edges)
    for v in range(n):
        assert v not in g.nbrs[v]
        for u in g.nbrs[v]:
            assert 0 <= u < n
            assert v in g.nbrs[u]
            assert g.has_edge(u, v) and g.has_edge(v, u)


@given(edge_lists())
@settings(max_examples=40, deadline=None)
def test_complement_involution(args):
    n, edges = args
    g = graph_from_edges(n, edges)
    assert complement(complement(g)).nbrs == g.nbrs


def test_complement_examples():
    k4 = catalog_lookup("K4").graph
    assert complement(k4).m == 0
    c5 = catalog_lookup("C5").graph
    assert is_isomorphic(c5, complement(c5)) is not None  # self-complementary


def test_induced_subgraph():
    k5 = catalog_lookup("K5").graph
    sub, old_to_new = induced_subgraph(k5, {0, 1, 2})
    assert sub.m == 3 and old_to_new == {0: 0, 1: 1, 2: 2}
    c6 = catalog_lookup("C6").graph
    sub, _ = induced_subgraph(c6, {0, 2, 4})
    assert sub.m == 0
    g = graph_from_edges(5, [(0, 2), (2, 4), (1, 3)])
    same, _ = induced_subgraph(g, range(5))
    assert same.nbrs == g.nbrs


def test_catalog_fixed_patterns():
    assert catalog_lookup("diamond").graph.m == 5
    coclaw = catalog_lookup("co-claw").graph
    assert coclaw.m == 3 and sorted(map(coclaw.degree, range(4))) == [0, 2, 2, 2]
    assert catalog_lookup("C", k=7).graph.m == 7
    assert catalog_lookup("2K2").graph.m == 2
    with pytest.raises(InputError):
        catalog_lookup("frobnitz")
    with pytest.raises(InputError):
        catalog_lookup("C2")
    with pytest.raises(InputError):
        catalog_lookup("C")


@pytest.mark.parametrize(
    "name", ["claw", "paw", "diamond", "P4", "C4", "K4", "P3", "K3"]
)
def test_catalog_co_names_are_complements(name):
    p = catalog_lookup(name)
    co = catalog_lookup(f"co-{name}")
    assert is_isomorphic(co.graph, complement(p.graph)) is not None


def test_identify_pattern_covers_all_four_vertex_graphs():
    seen = set()
    for mask in range(1 << 6):
        pairs = list(itertools.combinations(range(4), 2))
        g = graph_from_edges(4, [pairs[i] for i in range(6) if mask >> i & 1])
        seen.add(identify_pattern(g))
    assert len(seen) == 11


def _iso_by_permutation(g, h):
    if g.n != h.n:
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(
            g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ):
            return True
    return False


@given(edge_lists(max_n=6), edge_lists(max_n=6))
@settings(max_examples=60, deadline=None)
def test_is_isomorphic_matches_permutation_search(a, b):
    g = graph_from_edges(*a)
    h = graph_from_edges(*b)
    assert (is_isomorphic(g, h) is not None) == _iso_by_permutation(g, h)


def test_is_isomorphic_examples():
    p4 = catalog_lookup("P4").graph
    claw = catalog_lookup("claw").graph
    assert is_isomorphic(p4, claw) is None
    mapping = is_isomorphic(p4, p4)
    assert mapping is not None
    assert all(
        p4.has_edge(u, v) == p4.has_edge(mapping[u], mapping[v])
        for u in range(4)
        for v in range(u + 1, 4)
    )


def test_is_H_partite():
    c4 = catalog_lookup("C4")
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    pg = PartitionedGraph(g, (0, 1, 2, 3), 4)
    assert is_H_partite(pg, c4)
    g2 = graph_from_edges(4, [(0, 1), (0, 2)])
    pg2 = PartitionedGraph(g2, (0, 0, 1, 2), 3)
    assert not is_H_partite(pg2, catalog_lookup("K3"))  # intra-part edge
    empty = PartitionedGraph(graph_from_edges(3, []), (0, 1, 2), 3)
    assert is_H_partite(empty, catalog_lookup("K3"))
    with pytest.raises(InputError):
        is_H_partite(pg, catalog_lookup("K3"))


@given(edge_lists())
@settings(max_examples=40, deadline=None)
def test_edge_list_roundtrip(args):
    g = graph_from_edges(*args)
    assert parse_edge_list(write_edge_list(g)).nbrs == g.nbrs


def test_edge_list_errors_carry_line_numbers():
    with pytest.raises(InputError, match="line 3"):
        parse_edge_list("3 2\n0 1\n1 zebra\n")
    with pytest.raises(InputError, match="line 2"):
        parse_edge_list("# comment\nnot a header\n")
    with pytest.raises(InputError, match="line 2"):
        parse_edge_list("3 1\n2 1\n")  # violates u < v


def test_edge_list_comments_and_counts():
    g = parse_edge_list("# triangle\n3 3\n0 1\n# middle\n0 2\n1 2\n")
    assert g.m == 3
    with pytest.raises(InputError):
        parse_edge_list("3 2\n0 1\n")
