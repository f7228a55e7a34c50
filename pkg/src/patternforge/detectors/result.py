"""Detection results: verified witnesses and verified structural certificates.

A witness never leaves this module unchecked: the factory re-verifies that
the listed vertices induce (or contain, in non-induced mode) the named
pattern before the result is constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..catalog import catalog_lookup
from ..errors import InternalError
from ..graphs import Graph, Pattern, bits, induced_subgraph, is_isomorphic


@dataclass(frozen=True)
class Certificate:
    """A structural decomposition proving that neither pattern is present.

    kinds: "disjoint-cliques" (parts are cliques, no cross edges),
    "complete-multipartite" (parts independent, all cross edges),
    "split-graph" (parts[0] clique, parts[1] independent, cross arbitrary),
    "complete-split" (split graph with every cross edge present).
    """

    kind: str
    parts: tuple[tuple[int, ...], ...]


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    all_vs = sorted(v for part in cert.parts for v in part)
    if all_vs != list(range(g.n)):
        return False

    def is_clique(part: Sequence[int]) -> bool:
        return all(g.has_edge(u, v) for i, u in enumerate(part) for v in part[i + 1:])

    def is_independent(part: Sequence[int]) -> bool:
        return not any(g.has_edge(u, v) for i, u in enumerate(part) for v in part[i + 1:])

    def cross_edges(a: Sequence[int], b: Sequence[int]) -> list[bool]:
        return [g.has_edge(u, v) for u in a for v in b]

    if cert.kind == "disjoint-cliques":
        if not all(is_clique(p) for p in cert.parts):
            return False
        return all(
            not any(cross_edges(cert.parts[i], cert.parts[j]))
            for i in range(len(cert.parts))
            for j in range(i + 1, len(cert.parts))
        )
    if cert.kind == "complete-multipartite":
        if not all(is_independent(p) for p in cert.parts):
            return False
        return all(
            all(cross_edges(cert.parts[i], cert.parts[j]))
            for i in range(len(cert.parts))
            for j in range(i + 1, len(cert.parts))
        )
    if cert.kind in ("split-graph", "complete-split"):
        if len(cert.parts) != 2:
            return False
        clique, indep = cert.parts
        if not (is_clique(clique) and is_independent(indep)):
            return False
        if cert.kind == "complete-split":
            return all(cross_edges(clique, indep))
        return True
    return False


@dataclass(frozen=True)
class DetectionResult:
    found: Optional[tuple[str, tuple[int, ...]]] = None
    certificate: Optional[Certificate] = None

    def __bool__(self) -> bool:
        return self.found is not None


def _contains_pattern(sub: Graph, pat: Graph) -> bool:
    """Does sub (|V| = |V(pat)|) contain pat as a spanning subgraph copy?"""
    n = pat.n
    order = sorted(range(n), key=lambda v: -pat.degree(v))
    image = [-1] * n

    def place(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used >> w & 1:
                continue
            ok = all(
                image[u] < 0 or sub.has_edge(w, image[u]) for u in pat.nbrs[v]
            )
            if ok:
                image[v] = w
                if place(idx + 1, used | 1 << w):
                    return True
                image[v] = -1
        return False

    return place(0, 0)


def verify_witness(g: Graph, name: str, vertices: Sequence[int], induced: bool) -> bool:
    pat = catalog_lookup(name).graph
    if len(set(vertices)) != pat.n:
        return False
    if any(not (0 <= v < g.n) for v in vertices):
        return False
    sub, _ = induced_subgraph(g, vertices)
    if induced:
        return is_isomorphic(sub, pat) is not None
    return _contains_pattern(sub, pat)


def found_result(
    g: Graph, name: str, vertices: Sequence[int], induced: bool = True
) -> DetectionResult:
    """Build a FOUND result, re-verifying the witness first."""
    if not verify_witness(g, name, vertices, induced):
        raise InternalError(
            f"witness self-check failed: {name} on {tuple(vertices)}"
        )
    return DetectionResult(found=(name, tuple(vertices)))


def absent_result(
    g: Optional[Graph] = None, certificate: Optional[Certificate] = None
) -> DetectionResult:
    """Build an ABSENT result, re-verifying the certificate if one is given."""
    if certificate is not None:
        if g is None or not verify_certificate(g, certificate):
            raise InternalError(f"certificate self-check failed: {certificate.kind}")
    return DetectionResult(found=None, certificate=certificate)
