"""Command-line front end.

Subcommands: detect, reduce, verify, bench, generate.  Exit codes: 0 a
pattern was found (or the task succeeded), 1 detection came back absent,
2 any input or capacity error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .bench import BENCH_DETECTORS, run_bench
from .catalog import catalog_lookup, complement_pattern, identify_pattern
from .detectors import (
    brute_force_detect,
    brute_force_detect_set,
    detect_c4_or_triangle,
    detect_c4_or_triangleH,
    detect_h_or_complement,
    detect_pair_3node,
)
from .errors import PatternForgeError
from .generators import gnp, hg_planted, hg_random, planted_clique, random_tree
from .graphs import Graph, load_graph, save_graph, write_edge_list
from .minors import max_clique, max_clique_minor
from .reductions import (
    build_core_reduction,
    build_hyperclique_c4_reduction,
    build_pathcycle_reduction,
    build_psi_reduction,
    choose_set_representative,
    parse_hypergraph,
    write_hypergraph,
    write_instance,
)
from .verify import run_suite


def _detect_dispatch(g: Graph, names: list[str], mode: str, force_oracle: bool):
    patterns = [catalog_lookup(nm) for nm in names]
    induced = mode == "induced"
    if force_oracle or not induced:
        return brute_force_detect_set(g, patterns, induced=induced)
    if len(patterns) == 1:
        return brute_force_detect(g, patterns[0], induced=True)
    p1, p2 = patterns
    if p1.n == 3 and p2.n == 3:
        return detect_pair_3node(g, p1, p2)
    if p1.n == 4 and p2.n == 4:
        n1, n2 = identify_pattern(p1.graph), identify_pattern(p2.graph)
        if n2 == identify_pattern(complement_pattern(p1).graph):
            return detect_h_or_complement(g, p1)
        if "C4" in (n1, n2):
            other = p2 if n1 == "C4" else p1
            if max_clique(other) >= 3:
                return detect_c4_or_triangleH(g, other)
    sizes = sorted((p1.n, p2.n))
    if sizes == [3, 4]:
        four, three = (p1, p2) if p1.n == 4 else (p2, p1)
        if identify_pattern(four.graph) == "C4" and identify_pattern(three.graph) == "K3":
            return detect_c4_or_triangle(g)
    return brute_force_detect_set(g, patterns, induced=True)


def _cmd_detect(args) -> int:
    g = load_graph(args.graph)
    names = args.pair if args.pair else [args.pattern]
    res = _detect_dispatch(g, names, args.mode, args.oracle)
    if res:
        name, verts = res.found
        print(f"FOUND {name} {' '.join(map(str, verts))}")
        return 0
    if res.certificate is not None:
        parts = ";".join(",".join(map(str, p)) for p in res.certificate.parts)
        print(f"ABSENT certificate {res.certificate.kind} {parts}")
    else:
        print("ABSENT")
    return 1


def _cmd_reduce(args) -> int:
    if args.kind == "hc4":
        with open(args.graph, "r", encoding="utf-8") as fh:
            hg = parse_hypergraph(fh.read())
        out, origin = build_hyperclique_c4_reduction(hg)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(write_edge_list(out))
        print(
            "GUARANTEE: hypergraph has a 4-vertex hyperclique <=> output has an "
            "induced C4"
        )
        return 0
    g = load_graph(args.graph)
    if args.kind == "psi":
        h = catalog_lookup(args.pattern)
        t, mf = max_clique_minor(h)
        inst = build_psi_reduction(g, h, mf)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(write_instance(inst))
        print(inst.guarantee())
        return 0
    if args.kind == "pathcycle":
        h = catalog_lookup(args.pattern)
        inst, t_prime = build_pathcycle_reduction(g, h)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(write_instance(inst))
        print(inst.guarantee())
        return 0
    if args.kind in ("core", "set"):
        if args.kind == "set":
            patterns = [catalog_lookup(nm) for nm in args.set]
            h, _core = choose_set_representative(patterns)
            print(f"representative pattern: {h.name}")
        else:
            h = catalog_lookup(args.pattern)
        mode = "exhaustive" if args.exhaustive else "seeded"
        instances = build_core_reduction(g, h, mode=mode, seed=args.seed)
        for i, inst in enumerate(instances):
            with open(f"{args.out}.{i}", "w", encoding="utf-8") as fh:
                fh.write(write_instance(inst))
        print(instances[0].guarantee())
        print(f"wrote {len(instances)} instances to {args.out}.0 .. {args.out}.{len(instances)-1}")
        return 0
    raise PatternForgeError(f"unknown reduction kind {args.kind!r}")


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    if args.nmax is not None:
        kwargs["nmax"] = args.nmax
    if args.seed is not None:
        kwargs["seed"] = args.seed
    if args.exhaustive_n is not None:
        kwargs["exhaustive_n"] = args.exhaustive_n
    report = run_suite(args.kind, **kwargs)
    print(report.summary())
    return 0 if report.passed else 1


def _cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    result = run_bench(args.detector, sizes, args.model, args.trials, args.seed)
    for line in result.lines():
        print(line)
    return 0


def _cmd_generate(args) -> int:
    if args.model == "gnp":
        g = gnp(args.n, args.p, args.seed)
    elif args.model == "planted-clique":
        g = planted_clique(args.n, args.t, args.p, args.seed)
    elif args.model == "tree":
        g = random_tree(args.n, args.seed)
    elif args.model in ("hg-random", "hg-planted"):
        sizes = tuple(int(x) for x in args.parts.split(","))
        hg = (
            hg_random(sizes, args.p, args.seed)
            if args.model == "hg-random"
            else hg_planted(sizes, args.seed)
        )
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(write_hypergraph(hg))
        print(f"wrote {args.out}")
        return 0
    else:
        raise PatternForgeError(f"unknown model {args.model!r}")
    save_graph(g, args.out)
    print(f"wrote {args.out} (n={g.n} m={g.m})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="patternforge")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("detect", help="find one pattern (or one of a pair)")
    d.add_argument("--graph", required=True)
    group = d.add_mutually_exclusive_group(required=True)
    group.add_argument("--pair", nargs=2, metavar=("H1", "H2"))
    group.add_argument("--pattern")
    d.add_argument("--mode", choices=["induced", "noninduced"], default="induced")
    d.add_argument("--oracle", action="store_true", help="force brute force")
    d.add_argument("--seed", type=int, default=0)
    d.set_defaults(func=_cmd_detect)

    r = sub.add_parser("reduce", help="build a clique-to-pattern instance")
    r.add_argument("kind", choices=["psi", "core", "pathcycle", "set", "hc4"])
    r.add_argument("--graph", required=True)
    r.add_argument("--pattern")
    r.add_argument("--set", nargs="+")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--exhaustive", action="store_true")
    r.add_argument("--out", required=True)
    r.set_defaults(func=_cmd_reduce)

    v = sub.add_parser("verify", help="run a round-trip / equivalence suite")
    v.add_argument("kind")
    v.add_argument("--trials", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--exhaustive-n", dest="exhaustive_n", type=int)
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bench", help="time a detector and fit its growth")
    b.add_argument("detector", choices=sorted(BENCH_DETECTORS))
    b.add_argument("--sizes", required=True, help="comma-separated n values")
    b.add_argument("--model", default="c4free", help="gnp:<p> or c4free")
    b.add_argument("--trials", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=_cmd_bench)

    gcmd = sub.add_parser("generate", help="write a seeded random instance")
    gcmd.add_argument(
        "model", choices=["gnp", "planted-clique", "tree", "hg-random", "hg-planted"]
    )
    gcmd.add_argument("--n", type=int, default=20)
    gcmd.add_argument("--t", type=int, default=4)
    gcmd.add_argument("--p", type=float, default=0.3)
    gcmd.add_argument("--parts", default="3,3,3,3")
    gcmd.add_argument("--seed", type=int, default=0)
    gcmd.add_argument("--out", required=True)
    gcmd.set_defaults(func=_cmd_generate)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except PatternForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
