import random
from itertools import combinations_with_replacement, product

import numpy as np
import pytest
from hypothesis import given, settings
from scipy.optimize import linprog

from conftest import NAMED, connected_graphs, two_triangles_with_path
from edgering.cone import (
    as_point_set,
    build_cone,
    contains,
    dilate_points,
    edge_polytope,
    edge_sum,
    ell,
    interior_points,
    rho,
    semigroup_points,
    strictly_contains,
)
from edgering.cycles import odd_cycle_condition
from edgering.errors import GraphError, GuardExceeded
from edgering.families import complete, complete_bipartite, cycle, gmnr, petersen
from edgering.graph import Graph, bridge_edges, independent_sets, neighborhood
from edgering.hilbert import ehrhart_value, h_vector


def lp_cone_oracle(g, x):
    """(in cone, in relative interior) by linear programming over generator weights.

    A point is in the relative interior exactly when it is a combination of all
    generators with strictly positive weights.
    """
    gens = np.array([rho(g, e) for e in g.edges], dtype=float)
    m = len(gens)
    # variables: weights (m) and a common lower bound t; maximise t <= 1
    c = np.zeros(m + 1)
    c[-1] = -1.0
    a_eq = np.hstack([gens.T, np.zeros((g.n, 1))])
    a_ub = np.hstack([-np.eye(m), np.ones((m, 1))])
    res = linprog(
        c, A_ub=a_ub, b_ub=np.zeros(m), A_eq=a_eq, b_eq=np.array(x, dtype=float),
        bounds=[(0, None)] * m + [(None, 1)], method="highs",
    )
    if res.status != 0:
        return False, False
    return True, -res.fun > 1e-7


def compositions(total, parts):
    for x in product(range(total + 1), repeat=parts):
        if sum(x) == total:
            yield x


# --- build_cone / contains -------------------------------------------------


def test_build_cone_examples():
    c4 = build_cone(cycle(4))
    h = c4.independent((1, 3))
    assert h.coeffs == (-1, 1, -1, 1) and h.implicit_equality
    k5 = build_cone(complete(5))
    h = k5.independent((1,))
    assert h.coeffs == (-1, 1, 1, 1, 1) and not h.implicit_equality
    g = gmnr(4, 4, 2)
    cone = build_cone(g)
    for i in (1, 2):
        assert not cone.independent((i,)).implicit_equality


def test_build_cone_counts_and_errors():
    cone = build_cone(complete_bipartite(3, 3))
    assert len(cone.coordinate_halfspaces) == 6 and len(cone.independent_halfspaces) == 14
    with pytest.raises(GraphError):
        build_cone(Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]))


def test_contains_examples():
    cone = build_cone(cycle(4))
    assert contains(cone, (1, 1, 1, 1)) and strictly_contains(cone, (1, 1, 1, 1))
    assert cone.independent((1, 3)).value((2, 1, 1, 0)) == -2
    assert not contains(cone, (2, 1, 1, 0))
    with pytest.raises(ValueError):
        contains(cone, (1, 1, 1))


@pytest.mark.parametrize("name", sorted(NAMED))
def test_generators_on_boundary(name):
    g = NAMED[name]()
    cone = build_cone(g)
    for e in g.edges:
        assert contains(cone, rho(g, e))
        assert not strictly_contains(cone, rho(g, e))


@pytest.mark.parametrize("name", ["C4", "K4", "H1", "K33", "G331"])
def test_contains_matches_lp(name):
    g = NAMED[name]()
    cone = build_cone(g)
    for total in (2, 4, 6):
        for x in compositions(total, g.n):
            inside, interior = lp_cone_oracle(g, x)
            assert contains(cone, x) == inside, x
            assert strictly_contains(cone, x) == interior, x


# --- dilates and interior points ---------------------------------------------


def test_dilate_examples():
    p = edge_polytope(cycle(4))
    assert as_point_set(dilate_points(p, 0)) == {(0, 0, 0, 0)}
    assert as_point_set(dilate_points(p, 1)) == {rho(cycle(4), e) for e in cycle(4).edges}
    k33 = edge_polytope(complete_bipartite(3, 3))
    assert len(dilate_points(k33, 1)) == 9
    assert len(dilate_points(k33, 2)) == 36


def test_interior_examples():
    p = edge_polytope(cycle(4))
    assert as_point_set(interior_points(p, 2)) == {(1, 1, 1, 1)}
    assert len(interior_points(p, 1)) == 0
    assert len(interior_points(edge_polytope(petersen()), 5)) == 1


@pytest.mark.parametrize("name", ["C4", "K4", "H1", "G331"])
def test_enumeration_matches_brute_force(name):
    g = NAMED[name]()
    p = edge_polytope(g)
    cone = p.cone
    for k in range(0, 4):
        brute = {x for x in compositions(2 * k, g.n) if contains(cone, x)}
        assert as_point_set(dilate_points(p, k)) == brute
        if k:
            brute_int = {x for x in brute if strictly_contains(cone, x)}
            assert as_point_set(interior_points(p, k)) == brute_int


def test_enumeration_is_sorted():
    pts = dilate_points(edge_polytope(complete(4)), 2)
    rows = [tuple(r) for r in pts]
    assert rows == sorted(rows)


def test_ell_examples():
    assert ell(edge_polytope(cycle(4))) == 2
    assert ell(edge_polytope(petersen())) == 5
    assert ell(edge_polytope(gmnr(4, 4, 2))) == 4


def test_guards():
    from edgering import config

    old = config.set_guards(config.Guards(max_vertices=16, max_search_edges=16, max_dilate=3))
    try:
        with pytest.raises(GuardExceeded):
            dilate_points(edge_polytope(cycle(4)), 4)
    finally:
        config.set_guards(old)


# --- the semigroup ---------------------------------------------------------


def brute_semigroup(g, k):
    return {edge_sum(g, es) for es in combinations_with_replacement(g.edges, k)}


def test_semigroup_examples(h1):
    p = edge_polytope(cycle(4))
    assert as_point_set(semigroup_points(p, 1)) == {rho(cycle(4), e) for e in cycle(4).edges}
    assert len(semigroup_points(p, 2)) == 9
    assert len(semigroup_points(edge_polytope(h1), 2)) == 14


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_vertices=6))
def test_semigroup_matches_multiset_sums(g):
    p = edge_polytope(g)
    for k in range(4):
        assert as_point_set(semigroup_points(p, k)) == brute_semigroup(g, k)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_vertices=7))
def test_normality_semigroup_equals_dilate(g):
    p = edge_polytope(g)
    normal = odd_cycle_condition(g)
    equal = all(
        as_point_set(semigroup_points(p, k)) == as_point_set(dilate_points(p, k))
        for k in range(p.krull_dim + 1)
    )
    assert equal == normal


def test_non_normal_witness():
    g = two_triangles_with_path()
    p = edge_polytope(g)
    witnesses = []
    for k in range(1, p.krull_dim + 1):
        s = as_point_set(semigroup_points(p, k))
        d = as_point_set(dilate_points(p, k))
        assert s <= d
        witnesses += sorted(d - s)
    assert (1, 1, 1, 1, 1, 1, 0) in witnesses


# --- properties --------------------------------------------------------------


def test_edge_outside_bridge_graph_gives_strict_inequality():
    rnd = random.Random(2024)
    graphs = [NAMED[n]() for n in ("K5", "petersen", "H2", "H3", "G442", "W10")]
    checked = 0
    for g in graphs:
        cone = build_cone(g)
        sets = list(independent_sets(g))
        for _ in range(300):
            t = rnd.choice(sets)
            f = rnd.sample(list(g.edges), rnd.randint(1, g.num_edges))
            bt = set(bridge_edges(g, t))
            nt = neighborhood(g, t)
            if any(e not in bt and set(e) & nt for e in f):
                assert cone.independent(t).value(edge_sum(g, f)) > 0
                checked += 1
    assert checked > 500


NORMAL_GRAPHS = ["C4", "C6", "K4", "K5", "K33", "H1", "H2", "H3", "G442", "G331", "frak_g2", "petersen"]


@pytest.mark.parametrize("name", NORMAL_GRAPHS)
def test_ehrhart_reciprocity(name):
    g = NAMED[name]()
    p = edge_polytope(g)
    hs = h_vector(g)
    sign = (-1) ** hs.polytope_dim
    for k in range(hs.ell, hs.ell + 3):
        assert len(interior_points(p, k)) == sign * ehrhart_value(hs, -k)


@pytest.mark.parametrize("name", NORMAL_GRAPHS)
def test_interior_monotone(name):
    p = edge_polytope(NAMED[name]())
    nonempty = [len(interior_points(p, k)) > 0 for k in range(1, p.krull_dim + 2)]
    first = nonempty.index(True)
    assert all(nonempty[first:])
