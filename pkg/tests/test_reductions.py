import itertools

import pytest

from patternforge.catalog import catalog_lookup, complement_pattern
from patternforge.detectors import (
    brute_force_colorful,
    brute_force_detect,
)
from patternforge.errors import InputError, InternalError
from patternforge.generators import gnp, hg_planted, hg_random
from patternforge.graphs import (
    Pattern,
    graph_from_edges,
    is_H_partite,
)
from patternforge.minors import has_clique, max_clique_minor
from patternforge.reductions import (
    Hypergraph4P3U,
    build_core_reduction,
    build_hyperclique_c4_reduction,
    build_pathcycle_reduction,
    build_psi_reduction,
    choose_set_representative,
    extract_clique_psi,
    extract_hyperclique,
    parse_hypergraph,
    parse_instance,
    write_hypergraph,
    write_instance,
)


def test_psi_reduction_triangle_example():
    c4 = catalog_lookup("C4")
    t, mf = max_clique_minor(c4)
    assert t == 3
    g = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
    inst = build_psi_reduction(g, c4, mf)
    assert inst.out.graph.n == 4 * 3
    assert is_H_partite(inst.out, c4)
    res = brute_force_colorful(inst.out, c4)
    assert res
    clique = extract_clique_psi(inst, res.found[1])
    assert sorted(clique) == [0, 1, 2]
    # no triangle in the host: no colorful copy either
    path = graph_from_edges(3, [(0, 1), (1, 2)])
    inst2 = build_psi_reduction(path, c4, mf)
    assert not brute_force_colorful(inst2.out, c4)


def test_psi_degenerate_triangle_pattern():
    k3 = catalog_lookup("K3")
    t, mf = max_clique_minor(k3)
    assert t == 3
    g = gnp(6, 0.8, 7)
    inst = build_psi_reduction(g, k3, mf)
    res = brute_force_colorful(inst.out, k3)
    assert bool(res) == (has_clique(g, 3) is not None)
    if res:
        extract_clique_psi(inst, res.found[1])


def test_extract_rejects_fabricated_copy():
    c4 = catalog_lookup("C4")
    _, mf = max_clique_minor(c4)
    g = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
    inst = build_psi_reduction(g, c4, mf)
    with pytest.raises(InputError):
        extract_clique_psi(inst, (0, 1, 2, 3))  # same part twice
    with pytest.raises(InputError):
        extract_clique_psi(inst, (0, 3, 6, 9))  # not a pattern copy (bad edges?)


def test_psi_roundtrip_small():
    patterns = [catalog_lookup("C4"), catalog_lookup("paw"), catalog_lookup("diamond")]
    minors = {p.name: max_clique_minor(p) for p in patterns}
    for seed in range(40):
        n = 3 + seed % 5
        g = gnp(n, (0.2, 0.5, 0.8)[seed % 3], seed)
        for p in patterns:
            t, mf = minors[p.name]
            inst = build_psi_reduction(g, p, mf)
            lhs = has_clique(g, t) is not None
            res = brute_force_colorful(inst.out, p)
            assert lhs == bool(res), (p.name, seed)
            if res:
                clique = extract_clique_psi(inst, res.found[1])
                assert len(clique) == t


def test_core_reduction_core_pattern_is_identity_like():
    c5 = catalog_lookup("C5")
    g = gnp(5, 0.5, 11)
    instances = build_core_reduction(g, c5, mode="exhaustive")
    lhs = bool(brute_force_detect(g, c5, induced=False))
    rhs = any(
        bool(brute_force_detect(inst.out.graph, c5, induced=False))
        for inst in instances
    )
    assert lhs == rhs


def test_core_reduction_c5_pendant_pattern():
    h = Pattern(
        graph_from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]),
        "C5+pendant",
    )
    host_with = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    host_without = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    found = any(
        bool(brute_force_detect(i.out.graph, h, induced=False))
        for i in build_core_reduction(host_with, h, mode="exhaustive")
    )
    assert found
    found2 = any(
        bool(brute_force_detect(i.out.graph, h, induced=False))
        for i in build_core_reduction(host_without, h, mode="exhaustive")
    )
    assert not found2


def test_core_reduction_seeded_mode():
    c4 = catalog_lookup("C4")
    g = graph_from_edges(4, [(0, 1), (2, 3)])
    instances = build_core_reduction(g, c4, mode="seeded", seed=5)
    assert len(instances) >= 4  # ceil(c^c (ln n + ln 100)) rounds
    assert any(
        bool(brute_force_detect(inst.out.graph, c4, induced=False))
        for inst in instances
    )
    with pytest.raises(InputError):
        build_core_reduction(g, c4, mode="seeded", seed=5, rounds=0)


def test_pathcycle_routing_errors():
    with pytest.raises(InputError):
        build_pathcycle_reduction(gnp(4, 0.5, 0), complement_pattern(catalog_lookup("C7")))
    with pytest.raises(InputError):
        build_pathcycle_reduction(gnp(4, 0.5, 0), complement_pattern(catalog_lookup("C4")))
    with pytest.raises(InputError):
        build_pathcycle_reduction(gnp(4, 0.5, 0), catalog_lookup("claw"))


def test_pathcycle_k5_host_contains_cop6():
    cop6 = complement_pattern(catalog_lookup("P6"))
    k5 = catalog_lookup("K5").graph
    inst, t_prime = build_pathcycle_reduction(k5, cop6)
    assert is_H_partite(inst.out, cop6)
    assert has_clique(k5, t_prime) is not None
    assert bool(brute_force_detect(inst.out.graph, cop6, induced=False))


def test_pathcycle_roundtrip_small():
    for name in ("co-P5", "co-P6", "co-C6"):
        h = catalog_lookup(name)
        for seed in range(25):
            n = 3 + seed % 5
            g = gnp(n, (0.3, 0.6, 0.9)[seed % 3], seed * 3 + 1)
            inst, t_prime = build_pathcycle_reduction(g, h)
            lhs = has_clique(g, t_prime) is not None
            rhs = bool(brute_force_detect(inst.out.graph, h, induced=False))
            assert lhs == rhs, (name, seed, t_prime)


def test_choose_set_representative_examples():
    k3, c5 = catalog_lookup("K3"), catalog_lookup("C5")
    h, core = choose_set_representative([k3, c5])
    assert h.name == "C5" and core.n == 5
    h2, core2 = choose_set_representative([catalog_lookup("K4")])
    assert h2.name == "K4" and core2.n == 4
    c4, p4 = catalog_lookup("C4"), catalog_lookup("P4")
    h3, core3 = choose_set_representative([c4, p4])
    assert core3.n == 2  # both cores are a single edge


def test_set_reduction_roundtrip():
    k3, c5 = catalog_lookup("K3"), catalog_lookup("C5")
    h, core = choose_set_representative([k3, c5])
    host = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    instances = build_core_reduction(host, h, mode="exhaustive")
    assert any(
        bool(brute_force_detect(i.out.graph, k3, induced=False))
        or bool(brute_force_detect(i.out.graph, c5, induced=False))
        for i in instances
    )


def test_hyperclique_single_quad():
    hg = hg_planted((1, 1, 1, 1), 0)
    out, origin = build_hyperclique_c4_reduction(hg)
    res = brute_force_detect(out, catalog_lookup("C4"), induced=True)
    assert res
    assert extract_hyperclique(out, origin, res.found[1]) == (0, 0, 0, 0)
    # drop one triple: the induced 4-cycle disappears
    triples = sorted(hg.triples)[:-1]
    hg2 = Hypergraph4P3U((1, 1, 1, 1), frozenset(triples))
    out2, _ = build_hyperclique_c4_reduction(hg2)
    assert not brute_force_detect(out2, catalog_lookup("C4"), induced=True)


def test_extract_hyperclique_rejects_non_copy():
    hg = hg_planted((2, 2, 2, 2), 3)
    out, origin = build_hyperclique_c4_reduction(hg)
    with pytest.raises(InputError):
        extract_hyperclique(out, origin, (0, 1, 2, 3))


def test_instance_format_roundtrip():
    c4 = catalog_lookup("C4")
    _, mf = max_clique_minor(c4)
    g = gnp(5, 0.5, 2)
    inst = build_psi_reduction(g, c4, mf)
    text = write_instance(inst)
    back = parse_instance(text)
    assert back.out.graph.nbrs == inst.out.graph.nbrs
    assert back.out.part_of == inst.out.part_of
    assert back.origin == inst.origin
    assert write_instance(back) == text  # byte-identical re-serialization


def test_hypergraph_format_roundtrip():
    hg = hg_random((2, 3, 1, 2), 0.5, 9)
    text = write_hypergraph(hg)
    back = parse_hypergraph(text)
    assert back.sizes == hg.sizes and back.triples == hg.triples
    assert write_hypergraph(back) == text
    with pytest.raises(InputError):
        parse_hypergraph("hg 4 3 1 1 1 1 1\n0:0 1:0\n")
