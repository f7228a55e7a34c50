"""Round-trip and oracle-equivalence verification suites.

Each suite replays one construction's guarantee against brute force over
many seeded instances and reports mismatches; the CLI and the acceptance
tests both drive these functions.  Trials run through a thread pool when
PATTERNFORGE_THREADS asks for one.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .catalog import catalog_lookup, complement_pattern
from .detectors import (
    brute_force_colorful,
    brute_force_detect,
    brute_force_detect_set,
    detect_c4_or_coclaw,
    detect_c4_or_diamond,
    detect_c4_or_k4,
    detect_c4_or_paw,
    detect_c4_or_triangle,
    detect_h_or_complement,
    detect_k4_or_i4,
    detect_pair_3node,
    noninduced_c4,
    verify_certificate,
    verify_witness,
)
from .errors import InputError
from .graphs import (
    Graph,
    Pattern,
    all_labeled_graphs,
    graph_from_edges,
    is_H_partite,
)
from .generators import all_graphs_up_to_iso, gnp, hg_random, random_tree
from .homcore import compute_core
from .minors import has_clique, max_clique_minor
from .reductions import (
    Hypergraph4P3U,
    build_core_reduction,
    build_hyperclique_c4_reduction,
    build_pathcycle_reduction,
    build_psi_reduction,
    extract_clique_psi,
    extract_hyperclique,
)


@dataclass
class VerificationReport:
    kind: str
    trials: int = 0
    mismatches: list[tuple[object, str]] = field(default_factory=list)
    runtimes: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def merge_timing(self, key: str, dt: float) -> None:
        self.runtimes[key] = self.runtimes.get(key, 0.0) + dt

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.kind}: {self.trials} trials, "
                 f"{len(self.mismatches)} mismatches"]
        for key, dt in sorted(self.runtimes.items()):
            lines.append(f"  time[{key}] = {dt:.2f}s")
        for ident, desc in self.mismatches[:10]:
            lines.append(f"  mismatch {ident}: {desc}")
        return "\n".join(lines)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("PATTERNFORGE_THREADS", "1")))
    except ValueError:
        return 1


def _run_trials(fn: Callable[[object], Optional[tuple[object, str]]], items: Sequence) -> list:
    workers = thread_count()
    if workers == 1:
        results = [fn(item) for item in items]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(fn, items))
    return [r for r in results if r is not None]


DEFAULT_PSI_PATTERNS = ("C4", "diamond", "paw", "C6", "co-C6")


def verify_psi(
    trials: int = 200,
    nmax: int = 9,
    seed: int = 0,
    pattern_names: Sequence[str] = DEFAULT_PSI_PATTERNS,
) -> VerificationReport:
    """Clique existence in g vs colorful-copy existence in the construction."""
    report = VerificationReport("psi")
    patterns = [catalog_lookup(nm) for nm in pattern_names]
    minors = {p.name: max_clique_minor(p) for p in patterns}

    def one(args) -> Optional[tuple[object, str]]:
        i, p = args
        n = 3 + (seed + i) % (nmax - 2)
        density = (0.2, 0.4, 0.6, 0.8)[i % 4]
        g = gnp(n, density, seed * 100003 + i)
        t, mf = minors[p.name]
        inst = build_psi_reduction(g, p, mf)
        if not is_H_partite(inst.out, p):
            return (i, f"{p.name}: output not pattern-partite")
        if inst.out.graph.n != p.n * g.n:
            return (i, f"{p.name}: wrong vertex count")
        lhs = has_clique(g, t) is not None
        res = brute_force_colorful(inst.out, p)
        if lhs != bool(res):
            return (i, f"{p.name}: clique={lhs} colorful={bool(res)} n={n}")
        if res:
            clique = extract_clique_psi(inst, res.found[1])
            if len(clique) != t:
                return (i, f"{p.name}: extracted clique has wrong size")
        return None

    items = [(i, p) for i in range(trials) for p in patterns]
    t0 = time.time()
    report.mismatches = _run_trials(one, items)
    report.trials = len(items)
    report.merge_timing("total", time.time() - t0)
    return report


def _default_core_patterns() -> list[Pattern]:
    """Patterns up to 6 vertices whose core is a proper subgraph."""
    c5_pendant = Pattern(
        graph_from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]),
        "C5+pendant",
    )
    c4_pendants = Pattern(
        graph_from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]),
        "C4+2pendants",
    )
    return [
        catalog_lookup("C4"),
        catalog_lookup("P4"),
        catalog_lookup("C6"),
        catalog_lookup("paw"),
        c4_pendants,
        c5_pendant,
    ]


def verify_core(
    exhaustive_n: int = 5,
    random_trials: int = 100,
    random_n: int = 6,
    seed: int = 0,
    patterns: Optional[Sequence[Pattern]] = None,
    skip_expensive: bool = True,
) -> VerificationReport:
    """Core-subgraph existence vs pattern existence across all instances."""
    report = VerificationReport("core")
    if patterns is None:
        patterns = _default_core_patterns()
        if skip_expensive:
            patterns = [p for p in patterns if compute_core(p)[0].n <= 3]
    cores = {p.name: compute_core(p)[0] for p in patterns}

    hosts: list[tuple[object, Graph]] = []
    for n in range(1, exhaustive_n + 1):
        for gi, g in enumerate(all_labeled_graphs(n)):
            hosts.append((f"x{n}.{gi}", g))
    for i in range(random_trials):
        density = (0.15, 0.35, 0.55, 0.8)[i % 4]
        hosts.append((f"r{i}", gnp(random_n, density, seed * 7919 + i)))

    def one(args) -> Optional[tuple[object, str]]:
        ident, g = args
        for p in patterns:
            core = cores[p.name]
            lhs = bool(brute_force_detect(g, core, induced=False))
            instances = build_core_reduction(g, p, mode="exhaustive")
            rhs = any(
                bool(brute_force_detect(inst.out.graph, p, induced=False))
                for inst in instances
            )
            if lhs != rhs:
                return (ident, f"{p.name}: core={lhs} pattern={rhs}")
        return None

    t0 = time.time()
    report.mismatches = _run_trials(one, hosts)
    report.trials = len(hosts) * len(patterns)
    report.merge_timing("total", time.time() - t0)
    return report


DEFAULT_PATHCYCLE_PATTERNS = ("co-P5", "co-P6", "co-P8", "co-C6", "co-C8")


def verify_pathcycle(
    trials: int = 200,
    nmax: int = 9,
    seed: int = 0,
    pattern_names: Sequence[str] = DEFAULT_PATHCYCLE_PATTERNS,
) -> VerificationReport:
    """t'-clique existence vs subgraph existence in the shrunken construction."""
    report = VerificationReport("pathcycle")
    patterns = [catalog_lookup(nm) for nm in pattern_names]

    def one(args) -> Optional[tuple[object, str]]:
        i, p = args
        n = 3 + (seed + i) % (nmax - 2)
        density = (0.25, 0.5, 0.7, 0.9)[i % 4]
        g = gnp(n, density, seed * 65537 + i)
        inst, t_prime = build_pathcycle_reduction(g, p)
        if not is_H_partite(inst.out, p):
            return (i, f"{p.name}: output not pattern-partite")
        lhs = has_clique(g, t_prime) is not None
        rhs = bool(brute_force_detect(inst.out.graph, p, induced=False))
        if lhs != rhs:
            return (i, f"{p.name}: clique({t_prime})={lhs} subgraph={rhs} n={n}")
        return None

    items = [(i, p) for i in range(trials) for p in patterns]
    t0 = time.time()
    report.mismatches = _run_trials(one, items)
    report.trials = len(items)
    report.merge_timing("total", time.time() - t0)
    return report


def _induced_c4_exists(g: Graph) -> bool:
    """Direct induced-4-cycle check over non-adjacent vertex pairs."""
    for u in range(g.n):
        mu = g.mask(u)
        for v in range(u + 1, g.n):
            if mu >> v & 1:
                continue
            common = mu & g.mask(v)
            x = common
            while x:
                a = (x & -x).bit_length() - 1
                x ^= 1 << a
                if common & ~g.mask(a) & ~(1 << a):
                    return True
    return False


def _hyperclique_exists(hg: Hypergraph4P3U) -> bool:
    return bool(hg.hypercliques())


def verify_hc4(
    trials: int = 200,
    seed: int = 0,
    exhaustive_budget: int = 1 << 13,
    samples_per_shape: int = 1500,
) -> VerificationReport:
    """Induced-4-cycle existence in the gadget vs hyperclique existence.

    Shapes whose full hyperedge-subset space fits the budget are enumerated
    exhaustively; bigger small shapes are sampled; then `trials` random
    hypergraphs with parts up to 5 vertices.
    """
    import random as _random

    report = VerificationReport("hc4")
    cases: list[tuple[object, Hypergraph4P3U]] = []
    shapes = sorted(set(itertools.product((1, 2), repeat=4)))
    rng = _random.Random(("hc4", seed))
    for shape in shapes:
        slots = []
        for parts in itertools.combinations(range(4), 3):
            for idxs in itertools.product(*(range(shape[p]) for p in parts)):
                slots.append(tuple(zip(parts, idxs)))
        nslots = len(slots)
        if 2**nslots <= exhaustive_budget:
            subsets: Iterable[int] = range(2**nslots)
            tag = "ex"
        else:
            subsets = (rng.randrange(2**nslots) for _ in range(samples_per_shape))
            tag = "sa"
        for chosen in subsets:
            triples = frozenset(
                slots[b] for b in range(nslots) if chosen >> b & 1
            )
            cases.append((f"{tag}{shape}:{chosen}", Hypergraph4P3U(shape, triples)))
    for i in range(trials):
        sizes = tuple(rng.randint(1, 5) for _ in range(4))
        density = (0.2, 0.4, 0.6, 0.8)[i % 4]
        cases.append((f"r{i}", hg_random(sizes, density, seed * 31 + i)))

    def one(args) -> Optional[tuple[object, str]]:
        ident, hg = args
        out, origin = build_hyperclique_c4_reduction(hg)
        lhs = _hyperclique_exists(hg)
        rhs = _induced_c4_exists(out)
        if lhs != rhs:
            return (ident, f"hyperclique={lhs} inducedC4={rhs}")
        if rhs:
            res = brute_force_detect(out, catalog_lookup("C4"), induced=True)
            quad = extract_hyperclique(out, origin, res.found[1])
            verts = [(p, quad[p]) for p in range(4)]
            for parts in itertools.combinations(range(4), 3):
                if not hg.has_triple(*(verts[p] for p in parts)):
                    return (ident, "extracted quadruple misses a hyperedge")
        return None

    t0 = time.time()
    report.mismatches = _run_trials(one, cases)
    report.trials = len(cases)
    report.merge_timing("total", time.time() - t0)
    return report


# ---------------------------------------------------------------------------
# Detector equivalence suites.
# ---------------------------------------------------------------------------

PAIR_DETECTORS: dict[str, tuple[Callable[[Graph], object], tuple[str, ...]]] = {
    "detect_c4_or_triangle": (detect_c4_or_triangle, ("C4", "K3")),
    "detect_c4_or_diamond": (detect_c4_or_diamond, ("C4", "diamond")),
    "detect_c4_or_k4": (detect_c4_or_k4, ("C4", "K4")),
    "detect_c4_or_paw": (detect_c4_or_paw, ("C4", "paw")),
    "detect_c4_or_coclaw": (detect_c4_or_coclaw, ("C4", "co-claw")),
}

COMPLEMENT_FAMILIES = ("K4", "diamond", "paw", "claw", "C4", "P4")
THREE_NODE_NAMES = ("K3", "I3", "P3", "co-P3")


def _detector_jobs() -> list[tuple[str, Callable[[Graph], object], tuple[str, ...]]]:
    jobs = []
    for name, (fn, pats) in PAIR_DETECTORS.items():
        jobs.append((name, fn, pats))
    for fam in COMPLEMENT_FAMILIES:
        h = catalog_lookup(fam)
        co = complement_pattern(h)
        pats = (fam,) if fam == "P4" else (fam, co.name)
        jobs.append(
            (f"detect_h_or_complement[{fam}]", lambda g, h=h: detect_h_or_complement(g, h), pats)
        )
    for a, b in itertools.combinations_with_replacement(THREE_NODE_NAMES, 2):
        pa, pb = catalog_lookup(a), catalog_lookup(b)
        jobs.append(
            (
                f"detect_pair_3node[{a},{b}]",
                lambda g, pa=pa, pb=pb: detect_pair_3node(g, pa, pb),
                (a, b),
            )
        )
    return jobs


def _check_result(g: Graph, res, pats: tuple[str, ...]) -> Optional[str]:
    """Existence vs oracle plus witness/certificate re-verification."""
    pat_objs = [catalog_lookup(nm) for nm in pats]
    want = bool(brute_force_detect_set(g, pat_objs, induced=True))
    if bool(res) != want:
        return f"existence {bool(res)} vs oracle {want}"
    if res:
        name, verts = res.found
        if not verify_witness(g, name, verts, induced=True):
            return f"witness {name} {verts} fails re-verification"
    elif res.certificate is not None:
        if not verify_certificate(g, res.certificate):
            return f"certificate {res.certificate.kind} fails re-verification"
    return None


def verify_detectors_exhaustive(n: int = 7) -> VerificationReport:
    """Every paired detector against the oracle on all graphs with n vertices."""
    report = VerificationReport(f"detectors-exhaustive-{n}")
    graphs = all_graphs_up_to_iso(n)
    jobs = _detector_jobs()

    def one(args) -> Optional[tuple[object, str]]:
        gi, g = args
        for name, fn, pats in jobs:
            err = _check_result(g, fn(g), pats)
            if err is not None:
                return (f"{name}:{gi}", err)
        return None

    t0 = time.time()
    report.mismatches = _run_trials(one, list(enumerate(graphs)))
    report.trials = len(graphs) * len(jobs)
    report.merge_timing("total", time.time() - t0)
    return report


def verify_detectors_random(
    trials: int = 500,
    sizes: Sequence[int] = (20, 40, 60),
    densities: Sequence[float] = (0.1, 0.3, 0.5),
    seed: int = 0,
) -> VerificationReport:
    """Every paired detector against the oracle on seeded G(n, p) hosts."""
    report = VerificationReport("detectors-random")
    jobs = _detector_jobs()
    combos = [(n, p) for n in sizes for p in densities]
    cases = []
    for i in range(trials):
        n, p = combos[i % len(combos)]
        cases.append((i, gnp(n, p, seed * 1009 + i)))

    def one(args) -> Optional[tuple[object, str]]:
        i, g = args
        for name, fn, pats in jobs:
            err = _check_result(g, fn(g), pats)
            if err is not None:
                return (f"{name}:{i}", err)
        return None

    t0 = time.time()
    report.mismatches = _run_trials(one, cases)
    report.trials = len(cases) * len(jobs)
    report.merge_timing("total", time.time() - t0)
    return report


def verify_ramsey(trials: int = 500, seed: int = 0) -> VerificationReport:
    """The always-found {K4, I4} detector returns verified witnesses."""
    report = VerificationReport("ramsey")

    def one(i: int) -> Optional[tuple[object, str]]:
        n = 31 + (seed + i) % 70
        p = (0.05, 0.2, 0.5, 0.8, 0.95)[i % 5]
        g = gnp(n, p, seed * 613 + i)
        res = detect_k4_or_i4(g)
        if not res:
            return (i, "no witness returned")
        name, verts = res.found
        if not verify_witness(g, name, verts, induced=True):
            return (i, f"witness {name} {verts} fails re-verification")
        return None

    t0 = time.time()
    report.mismatches = _run_trials(one, list(range(trials)))
    report.trials = trials
    report.merge_timing("total", time.time() - t0)
    return report


def verify_edge_bound(trials: int = 500, seed: int = 0) -> VerificationReport:
    """Whenever {C4, K3} detection reports absence, m <= 3 n^1.5 must hold."""
    report = VerificationReport("edge-bound")

    def one(i: int) -> Optional[tuple[object, str]]:
        kind = i % 3
        n = 20 + (seed + i) % 180
        if kind == 0:
            g = random_tree(n, seed * 11 + i)
        elif kind == 1:
            g = gnp(n, 1.2 / n, seed * 11 + i)
        else:
            g = gnp(n, 3.0 / n, seed * 11 + i)
        res = detect_c4_or_triangle(g)
        if not res and g.m > 3 * n**1.5:
            return (i, f"absent with m={g.m} > 3*n^1.5 (n={n})")
        return None

    t0 = time.time()
    report.mismatches = _run_trials(one, list(range(trials)))
    report.trials = trials
    report.merge_timing("total", time.time() - t0)
    return report


def verify_noninduced_c4(trials: int = 300, seed: int = 0) -> VerificationReport:
    """Quadratic 4-cycle scan against brute force."""
    report = VerificationReport("noninduced-c4")
    c4 = catalog_lookup("C4")

    def one(i: int) -> Optional[tuple[object, str]]:
        n = 4 + (seed + i) % 40
        p = (0.02, 0.08, 0.2, 0.5)[i % 4]
        g = gnp(n, p, seed * 277 + i)
        want = bool(brute_force_detect(g, c4, induced=False))
        res = noninduced_c4(g)
        if bool(res) != want:
            return (i, f"existence {bool(res)} vs oracle {want}")
        if res and not verify_witness(g, "C4", res.found[1], induced=False):
            return (i, "witness fails re-verification")
        return None

    t0 = time.time()
    report.mismatches = _run_trials(one, list(range(trials)))
    report.trials = trials
    report.merge_timing("total", time.time() - t0)
    return report


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "psi": verify_psi,
    "core": verify_core,
    "pathcycle": verify_pathcycle,
    "hc4": verify_hc4,
    "detectors-exhaustive": verify_detectors_exhaustive,
    "detectors-random": verify_detectors_random,
    "ramsey": verify_ramsey,
    "edge-bound": verify_edge_bound,
    "noninduced_c4": verify_noninduced_c4,
}


def run_suite(kind: str, **kwargs) -> VerificationReport:
    for name, (fn, pats) in PAIR_DETECTORS.items():
        if kind == name:
            return _verify_single_detector(name, fn, pats, **kwargs)
    if kind in ("detect_pair_3node", "detect_h_or_complement", "detect_k4_or_i4"):
        if kind == "detect_k4_or_i4":
            return verify_ramsey(
                trials=kwargs.get("trials", 500), seed=kwargs.get("seed", 0)
            )
        jobs = [
            j for j in _detector_jobs() if j[0].startswith(kind)
        ]
        return _verify_job_subset(kind, jobs, **kwargs)
    if kind not in SUITES:
        raise InputError(f"unknown verification suite {kind!r}")
    fn = SUITES[kind]
    import inspect

    accepted = set(inspect.signature(fn).parameters)
    return fn(**{k: v for k, v in kwargs.items() if k in accepted})


def _verify_single_detector(name, fn, pats, trials=200, seed=0, exhaustive_n=None, **_):
    if exhaustive_n:
        report = VerificationReport(f"{name}-exhaustive-{exhaustive_n}")
        cases = list(enumerate(all_graphs_up_to_iso(exhaustive_n)))
    else:
        report = VerificationReport(name)
        cases = []
        for i in range(trials):
            n = (20, 40, 60)[i % 3]
            p = (0.1, 0.3, 0.5)[(i // 3) % 3]
            cases.append((i, gnp(n, p, seed * 31 + i)))

    def one(args):
        i, g = args
        err = _check_result(g, fn(g), pats)
        return (i, err) if err is not None else None

    t0 = time.time()
    report.mismatches = _run_trials(one, cases)
    report.trials = len(cases)
    report.merge_timing("total", time.time() - t0)
    return report


def _verify_job_subset(kind, jobs, trials=200, seed=0, exhaustive_n=None, **_):
    if exhaustive_n:
        report = VerificationReport(f"{kind}-exhaustive-{exhaustive_n}")
        cases = list(enumerate(all_graphs_up_to_iso(exhaustive_n)))
    else:
        report = VerificationReport(kind)
        cases = []
        for i in range(trials):
            n = (20, 40, 60)[i % 3]
            p = (0.1, 0.3, 0.5)[(i // 3) % 3]
            cases.append((i, gnp(n, p, seed * 31 + i)))

    def one(args):
        i, g = args
        for name, fn, pats in jobs:
            err = _check_result(g, fn(g), pats)
            if err is not None:
                return (f"{name}:{i}", err)
        return None

    t0 = time.time()
    report.mismatches = _run_trials(one, cases)
    report.trials = len(cases) * len(jobs)
    report.merge_timing("total", time.time() - t0)
    return report
