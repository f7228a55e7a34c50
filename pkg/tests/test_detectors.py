import itertools

import pytest

from patternforge.catalog import catalog_lookup, complement_pattern
from patternforge.detectors import (
    Certificate,
    brute_force_colorful,
    brute_force_detect,
    brute_force_detect_set,
    detect_c4_or_coclaw,
    detect_c4_or_diamond,
    detect_c4_or_k4,
    detect_c4_or_paw,
    detect_c4_or_triangle,
    detect_c4_or_triangleH,
    detect_h_or_complement,
    detect_k4_or_i4,
    detect_pair_3node,
    found_result,
    noninduced_c4,
    p3_structure,
    split_graph_certificate,
    verify_certificate,
    verify_witness,
)
from patternforge.detectors.basic import _detect_c4_or_triangle_impl
from patternforge.detectors.c4pairs import (
    _detect_c4_or_coclaw_impl,
    _detect_c4_or_diamond_impl,
    _detect_c4_or_k4_impl,
    _detect_c4_or_paw_impl,
)
from patternforge.errors import InputError, InternalError
from patternforge.generators import all_graphs_up_to_iso, gnp, random_tree
from patternforge.graphs import PartitionedGraph, complement, graph_from_edges


PETERSEN = graph_from_edges(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
)


def test_oracle_examples():
    c5 = catalog_lookup("C5")
    assert brute_force_detect(c5.graph, c5, induced=True)
    k5 = catalog_lookup("K5").graph
    c4 = catalog_lookup("C4")
    assert not brute_force_detect(k5, c4, induced=True)
    assert brute_force_detect(k5, c4, induced=False)
    assert brute_force_detect(PETERSEN, c5, induced=True)


def test_oracle_witness_order_matches_pattern():
    res = brute_force_detect(PETERSEN, catalog_lookup("C5"), induced=True)
    verts = res.found[1]
    assert verify_witness(PETERSEN, "C5", verts, induced=True)


def test_colorful_oracle():
    k3 = catalog_lookup("K3")
    g = graph_from_edges(6, [(0, 2), (2, 4), (0, 4), (1, 3)])
    pg = PartitionedGraph(g, (0, 0, 1, 1, 2, 2), 3)
    assert brute_force_colorful(pg, k3)
    empty_part = PartitionedGraph(graph_from_edges(2, []), (0, 0), 2)
    assert not brute_force_colorful(empty_part, catalog_lookup("K2"))


def test_noninduced_c4():
    assert noninduced_c4(catalog_lookup("K4").graph)
    assert not noninduced_c4(random_tree(30, 1))
    assert noninduced_c4(catalog_lookup("diamond").graph)


def test_p3_structure():
    res = p3_structure(catalog_lookup("P4").graph)
    assert res and res.found[0] == "P3"
    two_cliques = graph_from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    res2 = p3_structure(two_cliques)
    assert not res2 and res2.certificate.kind == "disjoint-cliques"
    assert verify_certificate(two_cliques, res2.certificate)
    k23 = graph_from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    res3 = p3_structure(k23, complemented=True)
    assert not res3 and res3.certificate.kind == "complete-multipartite"
    assert verify_certificate(k23, res3.certificate)


def test_witness_self_check_fires():
    g = catalog_lookup("K4").graph
    with pytest.raises(InternalError):
        found_result(g, "C4", (0, 1, 2, 3), induced=True)


@pytest.mark.parametrize(
    "fn,pats",
    [
        (_detect_c4_or_triangle_impl, ("C4", "K3")),
        (_detect_c4_or_diamond_impl, ("C4", "diamond")),
        (_detect_c4_or_k4_impl, ("C4", "K4")),
        (_detect_c4_or_paw_impl, ("C4", "paw")),
        (_detect_c4_or_coclaw_impl, ("C4", "co-claw")),
    ],
)
def test_c4_pair_impls_exhaustive_small(fn, pats):
    pat_objs = [catalog_lookup(p) for p in pats]
    for n in range(1, 7):
        for g in all_graphs_up_to_iso(n):
            want = bool(brute_force_detect_set(g, pat_objs, induced=True))
            assert bool(fn(g)) == want, (pats, list(g.edges()))


def test_detector_examples():
    assert detect_c4_or_triangle(catalog_lookup("C4").graph).found[0] == "C4"
    assert detect_c4_or_triangle(catalog_lookup("paw").graph).found[0] == "K3"
    assert detect_c4_or_diamond(catalog_lookup("diamond").graph)
    assert detect_c4_or_k4(catalog_lookup("K4").graph)
    assert detect_c4_or_paw(catalog_lookup("paw").graph)
    k222 = graph_from_edges(
        6, [(a, b) for a in range(6) for b in range(a + 1, 6) if a % 3 != b % 3]
    )
    res = detect_c4_or_paw(k222)
    assert res and res.found[0] == "C4"
    star = graph_from_edges(6, [(0, i) for i in range(1, 6)])
    assert not detect_c4_or_paw(star)
    coclaw_host = graph_from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert detect_c4_or_coclaw(coclaw_host).found[0] == "co-claw"
    assert not detect_c4_or_k4(graph_from_edges(20, []))


def test_triangleH_dispatch():
    g = gnp(25, 0.5, 3)
    for name in ("K4", "diamond", "paw", "co-claw"):
        res = detect_c4_or_triangleH(g, catalog_lookup(name))
        want = bool(
            brute_force_detect_set(
                g, [catalog_lookup("C4"), catalog_lookup(name)], induced=True
            )
        )
        assert bool(res) == want
    with pytest.raises(InputError):
        detect_c4_or_triangleH(g, catalog_lookup("claw"))


def test_ramsey_detector():
    assert detect_k4_or_i4(graph_from_edges(31, [])).found[0] == "I4"
    k31 = graph_from_edges(31, [(i, j) for i in range(31) for j in range(i + 1, 31)])
    assert detect_k4_or_i4(k31).found[0] == "K4"
    with pytest.raises(InputError):
        detect_k4_or_i4(graph_from_edges(30, []))
    for seed in range(40):
        n = 31 + seed
        g = gnp(n, (0.1, 0.5, 0.9)[seed % 3], seed)
        res = detect_k4_or_i4(g)
        name, verts = res.found
        assert verify_witness(g, name, verts, induced=True)


def test_pair_3node_input_validation():
    g = gnp(10, 0.4, 0)
    with pytest.raises(InputError):
        detect_pair_3node(g, catalog_lookup("K4"), catalog_lookup("K3"))


def test_pair_3node_examples():
    k4 = catalog_lookup("K4").graph
    res = detect_pair_3node(k4, catalog_lookup("K3"), catalog_lookup("I3"))
    assert res.found[0] == "K3"
    empty = graph_from_edges(10, [])
    res2 = detect_pair_3node(empty, catalog_lookup("K3"), catalog_lookup("co-P3"))
    assert not res2


def test_pair_3node_exhaustive_vs_oracle():
    names = ["K3", "I3", "P3", "co-P3"]
    graphs = []
    for n in range(3, 7):
        graphs.extend(all_graphs_up_to_iso(n))
    for seed in range(40):
        graphs.append(gnp(8 + seed % 10, (0.15, 0.5, 0.85)[seed % 3], seed))
    for a, b in itertools.combinations_with_replacement(names, 2):
        pa, pb = catalog_lookup(a), catalog_lookup(b)
        for g in graphs:
            want = bool(brute_force_detect_set(g, [pa, pb], induced=True))
            assert bool(detect_pair_3node(g, pa, pb)) == want, (a, b, list(g.edges()))


def test_h_or_complement_c5_host():
    c5 = catalog_lookup("C5").graph
    assert not detect_h_or_complement(c5, catalog_lookup("C4"))


def test_h_or_complement_split_certificate():
    # a clique joined arbitrarily to an independent set has no C4 and no 2K2
    import random

    rng = random.Random(4)
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    for u in range(5, 10):
        for v in range(5):
            if rng.random() < 0.5:
                edges.append((v, u))
    g = graph_from_edges(10, edges)
    res = detect_h_or_complement(g, catalog_lookup("C4"))
    assert not res
    assert res.certificate is not None and res.certificate.kind == "split-graph"
    assert verify_certificate(g, res.certificate)


def test_h_or_complement_exhaustive_small():
    fams = ["K4", "diamond", "paw", "claw", "C4", "P4"]
    graphs = []
    for n in range(1, 7):
        graphs.extend(all_graphs_up_to_iso(n))
    for fam in fams:
        h = catalog_lookup(fam)
        co = complement_pattern(h)
        pats = [h] if fam == "P4" else [h, co]
        for g in graphs:
            want = bool(brute_force_detect_set(g, pats, induced=True))
            res = detect_h_or_complement(g, h)
            assert bool(res) == want, (fam, list(g.edges()))


def test_split_graph_certificate_recognizer():
    g = graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
    cert = split_graph_certificate(g)
    assert cert is not None and verify_certificate(g, cert)
    c4 = catalog_lookup("C4").graph
    assert split_graph_certificate(c4) is None
    twok2 = catalog_lookup("2K2").graph
    assert split_graph_certificate(twok2) is None


def test_certificate_verifier_rejects_wrong_structures():
    g = catalog_lookup("C4").graph
    bad = Certificate("disjoint-cliques", ((0, 1), (2, 3)))
    assert not verify_certificate(g, bad)  # cross edges exist
    good_parts = Certificate("complete-multipartite", ((0, 2), (1, 3)))
    assert verify_certificate(g, good_parts)
