import os
import subprocess
import sys

import pytest

from patternforge.catalog import catalog_lookup
from patternforge.cli import main
from patternforge.generators import (
    all_graphs_up_to_iso,
    gnp,
    hg_planted,
    hg_random,
    planted_clique,
    random_tree,
)
from patternforge.graphs import (
    connected_components,
    graph_from_edges,
    load_graph,
    save_graph,
    write_edge_list,
)
from patternforge.reductions import parse_instance


def test_gnp_reproducible_and_extremes():
    g1 = gnp(30, 0.3, 42)
    g2 = gnp(30, 0.3, 42)
    assert g1.nbrs == g2.nbrs
    assert gnp(10, 0.0, 1).m == 0
    assert gnp(10, 1.0, 1).m == 45
    g3 = gnp(30, 0.3, 43)
    assert g3.nbrs != g1.nbrs


def test_gnp_density_reasonable():
    g = gnp(200, 0.1, 7)
    expect = 0.1 * 199 * 100
    assert 0.6 * expect < g.m < 1.4 * expect


def test_planted_clique():
    g = planted_clique(50, 6, 0.2, 3)
    assert all(g.has_edge(i, j) for i in range(6) for j in range(i + 1, 6))


def test_random_tree():
    t = random_tree(40, 5)
    assert t.m == 39 and len(connected_components(t)) == 1
    assert random_tree(40, 5).nbrs == t.nbrs


def test_hg_generators():
    hg = hg_planted((3, 3, 3, 3), 11)
    assert len(hg.hypercliques()) == 1
    assert hg_random((2, 2, 2, 2), 0.5, 1).triples == hg_random((2, 2, 2, 2), 0.5, 1).triples


def test_graph_counts_up_to_iso():
    assert [len(all_graphs_up_to_iso(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_cli_detect_found_and_absent(tmp_path, capsys):
    c4 = catalog_lookup("C4").graph
    path = tmp_path / "c4.el"
    save_graph(c4, str(path))
    rc = main(["detect", "--graph", str(path), "--pair", "C4", "diamond"])
    out = capsys.readouterr().out
    assert rc == 0 and out.startswith("FOUND C4")
    empty = tmp_path / "empty10.el"
    save_graph(graph_from_edges(10, []), str(empty))
    rc = main(["detect", "--graph", str(empty), "--pattern", "K3", "--mode", "induced"])
    out = capsys.readouterr().out
    assert rc == 1 and out.strip() == "ABSENT"


def test_cli_detect_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.el"
    bad.write_text("3 1\nnot an edge\n")
    rc = main(["detect", "--graph", str(bad), "--pattern", "K3"])
    err = capsys.readouterr().err
    assert rc == 2 and "line 2" in err


def test_cli_detect_oracle_flag(tmp_path, capsys):
    g = gnp(20, 0.4, 9)
    path = tmp_path / "g.el"
    save_graph(g, str(path))
    rc1 = main(["detect", "--graph", str(path), "--pair", "C4", "K4", "--oracle"])
    out1 = capsys.readouterr().out
    rc2 = main(["detect", "--graph", str(path), "--pair", "C4", "K4"])
    out2 = capsys.readouterr().out
    assert (rc1 == 0) == (rc2 == 0)


def test_cli_reduce_psi(tmp_path, capsys):
    g = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
    gpath = tmp_path / "g.el"
    save_graph(g, str(gpath))
    out = tmp_path / "inst.red"
    rc = main(
        ["reduce", "psi", "--graph", str(gpath), "--pattern", "C4", "--out", str(out)]
    )
    printed = capsys.readouterr().out
    assert rc == 0 and "GUARANTEE" in printed
    inst = parse_instance(out.read_text())
    assert inst.out.k == 4 and inst.out.graph.n == 12


def test_cli_reduce_requires_pattern(tmp_path, capsys):
    g = graph_from_edges(3, [(0, 1)])
    gpath = tmp_path / "g.el"
    save_graph(g, str(gpath))
    rc = main(["reduce", "psi", "--graph", str(gpath), "--out", str(tmp_path / "x")])
    assert rc == 2


def test_cli_reduce_hc4(tmp_path, capsys):
    from patternforge.reductions import write_hypergraph

    hg = hg_planted((2, 2, 2, 2), 0)
    hpath = tmp_path / "h.hg"
    hpath.write_text(write_hypergraph(hg))
    out = tmp_path / "out.el"
    rc = main(["reduce", "hc4", "--graph", str(hpath), "--out", str(out)])
    assert rc == 0
    g = load_graph(str(out))
    assert g.n == sum(2 * 2 for _ in range(4))


def test_cli_verify_and_bench(capsys):
    rc = main(["verify", "psi", "--trials", "6", "--nmax", "7", "--seed", "3"])
    out = capsys.readouterr().out
    assert rc == 0 and out.startswith("PASS")
    rc = main(
        ["bench", "noninduced_c4", "--sizes", "64,128", "--model", "gnp:0.05",
         "--trials", "2", "--seed", "1"]
    )
    out = capsys.readouterr().out
    assert rc == 0 and "@slope,noninduced_c4" in out


def test_cli_bench_unknown_detector(capsys):
    with pytest.raises(SystemExit):
        main(["bench", "no_such_detector", "--sizes", "10"])


def test_cli_generate_deterministic(tmp_path, capsys):
    out1, out2 = tmp_path / "a.el", tmp_path / "b.el"
    main(["generate", "gnp", "--n", "25", "--p", "0.3", "--seed", "7", "--out", str(out1)])
    main(["generate", "gnp", "--n", "25", "--p", "0.3", "--seed", "7", "--out", str(out2)])
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    main(["generate", "planted-clique", "--n", "30", "--t", "5", "--p", "0.2",
          "--seed", "1", "--out", str(out1)])
    capsys.readouterr()
    g = load_graph(str(out1))
    assert all(g.has_edge(i, j) for i in range(5) for j in range(i + 1, 5))


def test_console_script_entrypoint(tmp_path):
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    gpath = tmp_path / "c4.el"
    save_graph(g, str(gpath))
    proc = subprocess.run(
        [sys.executable, "-m", "patternforge.cli", "detect", "--graph", str(gpath),
         "--pattern", "C4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("FOUND C4")


def test_threads_env_var(capsys, monkeypatch):
    monkeypatch.setenv("PATTERNFORGE_THREADS", "2")
    rc = main(["verify", "ramsey", "--trials", "8", "--seed", "2"])
    out = capsys.readouterr().out
    assert rc == 0 and out.startswith("PASS")
