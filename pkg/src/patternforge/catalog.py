"""Canonical catalog of small named patterns.

Canonical labelings: P_k is 0..k-1 along the path, C_k is 0..k-1..0 around
the cycle.  'co-X' always means the complement of X on the same labels.
"""

from __future__ import annotations

import re
from typing import Optional

from .errors import InputError
from .graphs import Graph, Pattern, complement, graph_from_edges, is_isomorphic

_FIXED: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "diamond": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "paw": (4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "2K2": (4, [(0, 1), (2, 3)]),
}

# Same graph, several accepted spellings.
_ALIASES = {
    "P2+I1": "co-P3",
    "P2uI1": "co-P3",
    "C3": "K3",
    "co-C4": "2K2",
    "co-2K2": "C4",
    "co-P4": "P4",
    "co-C5": "C5",
    "triangle": "K3",
}

_PARAM_RE = re.compile(r"^(P|C|K|I)_?(\d+)$")


def path_graph(k: int) -> Graph:
    return graph_from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InputError(f"C_{k}: cycles need at least 3 vertices")
    return graph_from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def clique_graph(k: int) -> Graph:
    return graph_from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def empty_graph(k: int) -> Graph:
    return graph_from_edges(k, [])


def _parametric(letter: str, k: int) -> Graph:
    if k < 1:
        raise InputError(f"{letter}_{k}: size must be positive")
    if letter == "P":
        return path_graph(k)
    if letter == "C":
        return cycle_graph(k)
    if letter == "K":
        return clique_graph(k)
    return empty_graph(k)


def catalog_lookup(name: str, k: Optional[int] = None) -> Pattern:
    """Resolve a catalog name ("diamond", "C4", "co-P7", ("C", k=7), ...).

    Unknown names raise InputError; parametric names without an embedded or
    explicit size do too.
    """
    name = name.strip()
    name = _ALIASES.get(name, name)
    co = False
    base = name
    if base.startswith("co-"):
        co = True
        base = base[3:]
        base = _ALIASES.get(base, base)
    if base in _FIXED:
        n, edges = _FIXED[base]
        g = graph_from_edges(n, edges)
    else:
        m = _PARAM_RE.match(base)
        if m:
            letter, digits = m.group(1), int(m.group(2))
            if k is not None and k != digits:
                raise InputError(f"size mismatch: {base} vs k={k}")
            g = _parametric(letter, digits)
        elif base in {"P", "C", "K", "I"}:
            if k is None:
                raise InputError(f"parametric pattern {base!r} needs a size k")
            g = _parametric(base, k)
            base = f"{base}{k}"
        else:
            raise InputError(f"unknown pattern name {name!r}")
    if co:
        g = complement(g)
        canon = f"co-{base}"
        m = _PARAM_RE.match(base)
        if m and m.group(1) in ("K", "I"):
            canon = ("I" if m.group(1) == "K" else "K") + m.group(2)
        canon = _ALIASES.get(canon, canon)
        return Pattern(g, canon)
    return Pattern(g, base)


def pattern_of(g: Graph, name: Optional[str] = None) -> Pattern:
    return Pattern(g, name)


_FOUR_NODE_NAMES = [
    "K4", "I4", "diamond", "co-diamond", "paw", "co-paw",
    "claw", "co-claw", "C4", "2K2", "P4",
]

_THREE_NODE_NAMES = ["K3", "I3", "P3", "co-P3"]


def identify_pattern(g: Graph) -> Optional[str]:
    """Catalog name of a 3- or 4-vertex graph, or None if n is neither."""
    if g.n == 3:
        names = _THREE_NODE_NAMES
    elif g.n == 4:
        names = _FOUR_NODE_NAMES
    else:
        return None
    for name in names:
        if is_isomorphic(g, catalog_lookup(name).graph) is not None:
            return name
    raise AssertionError("unreachable: catalog covers all graphs of this size")


def complement_pattern(p: Pattern) -> Pattern:
    """Complement with the catalog's naming convention applied when known."""
    g = complement(p.graph)
    if p.name is None:
        return Pattern(g)
    if p.name.startswith("co-"):
        return Pattern(g, _ALIASES.get(p.name[3:], p.name[3:]))
    return Pattern(g, _ALIASES.get(f"co-{p.name}", f"co-{p.name}"))
