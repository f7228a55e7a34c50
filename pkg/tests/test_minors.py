import pytest

from patternforge.catalog import catalog_lookup, complement_pattern
from patternforge.errors import CapacityError, InputError
from patternforge.generators import gnp
from patternforge.graphs import graph_from_edges
from patternforge.minors import (
    MinorFunction,
    core_clique_lower_bound,
    eta_path_cycle_formula,
    find_Kt_minor_function,
    has_clique,
    induced_si_bound,
    max_clique,
    max_clique_minor,
)


def test_max_clique_examples():
    assert max_clique(complement_pattern(catalog_lookup("C8"))) == 4
    assert max_clique(catalog_lookup("claw")) == 2
    assert max_clique(catalog_lookup("I5")) == 1


def test_has_clique_witness():
    g = gnp(12, 0.7, 3)
    w = max_clique(g)
    verts = has_clique(g, w)
    assert verts is not None and len(verts) == w
    assert all(g.has_edge(a, b) for i, a in enumerate(verts) for b in verts[i + 1:])
    assert has_clique(g, w + 1) is None
    assert has_clique(g, 0) == ()


def test_find_Kt_minor_function_examples():
    c4 = catalog_lookup("C4")
    mf = find_Kt_minor_function(c4, 3)
    assert mf is not None and mf.validate() and mf.t == 3
    k4 = catalog_lookup("K4")
    mf4 = find_Kt_minor_function(k4, 4)
    assert mf4 is not None and sorted(mf4.f) == [0, 1, 2, 3]
    assert find_Kt_minor_function(catalog_lookup("I3"), 2) is None


def test_minor_function_validation():
    c4 = catalog_lookup("C4")
    bad = MinorFunction(c4, 2, (0, 1, 0, 1))
    # blocks {0,2} and {1,3} are opposite corners: disconnected
    assert not bad.validate()
    good = MinorFunction(c4, 2, (0, 0, 1, 1))
    assert good.validate()


@pytest.mark.parametrize("k", range(2, 13))
def test_eta_matches_formula_paths(k):
    h = complement_pattern(catalog_lookup(f"P{k}"))
    t, mf = max_clique_minor(h)
    assert mf.validate()
    assert t == eta_path_cycle_formula("path", k)


@pytest.mark.parametrize("k", range(3, 13))
def test_eta_matches_formula_cycles(k):
    h = complement_pattern(catalog_lookup(f"C{k}"))
    t, mf = max_clique_minor(h)
    assert mf.validate()
    assert t == eta_path_cycle_formula("cycle", k)


def test_eta_small_exceptions():
    assert eta_path_cycle_formula("path", 4) == 2
    assert eta_path_cycle_formula("cycle", 4) == 2
    assert eta_path_cycle_formula("path", 5) == 3
    assert eta_path_cycle_formula("cycle", 10) == 7
    assert eta_path_cycle_formula("cycle", 9) == 6
    with pytest.raises(InputError):
        eta_path_cycle_formula("path", 1)
    with pytest.raises(InputError):
        eta_path_cycle_formula("wheel", 5)


@pytest.mark.parametrize("seed", range(20))
def test_minor_bounds_random(seed):
    g = gnp(4 + seed % 5, (0.3, 0.6, 0.9)[seed % 3], seed + 50)
    from patternforge.graphs import connected_components

    t, mf = max_clique_minor(g)
    assert mf.validate()
    w = max_clique(g)
    if len(connected_components(g)) == 1:
        assert w <= t <= (g.n + w) // 2
    else:
        assert t <= (g.n + w) // 2


def test_core_clique_lower_bound():
    # 9 vertices, clique 3: complement of C9 is a core with those parameters
    cob9 = complement_pattern(catalog_lookup("C9"))
    assert cob9.n == 9 and max_clique(cob9) == 4
    assert core_clique_lower_bound(cob9) == max(
        _ceil_sqrt((9 + 8) / 2), _ceil_sqrt(9 / 1.95)
    )
    assert core_clique_lower_bound(catalog_lookup("K4")) == 3
    with pytest.raises(InputError):
        core_clique_lower_bound(catalog_lookup("P6"))  # not a core


def _ceil_sqrt(x: float) -> int:
    import math

    s = int(math.isqrt(int(x)))
    while s * s < x:
        s += 1
    return s


def test_lower_bound_arithmetic_examples():
    # k=9, w=3 -> max(ceil(sqrt(7.5)), ceil(sqrt(4.615...))) = 3
    from patternforge.minors import _ceil_sqrt_frac

    assert max(_ceil_sqrt_frac(9 + 6, 2), _ceil_sqrt_frac(20 * 9, 39)) == 3
    # k=4, w=4 -> max(ceil(sqrt(6)), ceil(sqrt(2.05...))) = 3
    assert max(_ceil_sqrt_frac(4 + 8, 2), _ceil_sqrt_frac(20 * 4, 39)) == 3


def test_induced_si_bound():
    assert induced_si_bound(16) == 2
    assert induced_si_bound(1) == 1
    assert induced_si_bound(4000) > 4000 ** 0.25 / 1.39 - 1


def test_minor_capacity():
    big = graph_from_edges(13, [(i, (i + 1) % 13) for i in range(13)])
    with pytest.raises(CapacityError):
        find_Kt_minor_function(big, 3)
