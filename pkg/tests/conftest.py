from itertools import combinations

import pytest
from hypothesis import strategies as st

from edgering.families import FamilySpec, build, complete, complete_bipartite, cycle, frak_g, gmnr, petersen, wheel
from edgering.graph import Graph, is_connected


@pytest.fixture
def h1():
    return build(FamilySpec("h1"))


@pytest.fixture
def h2():
    return build(FamilySpec("h2"))


@pytest.fixture
def h3():
    return build(FamilySpec("h3"))


NAMED = {
    "C4": lambda: cycle(4),
    "C6": lambda: cycle(6),
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "K33": lambda: complete_bipartite(3, 3),
    "petersen": petersen,
    "W10": lambda: wheel(9),
    "H1": lambda: build(FamilySpec("h1")),
    "H2": lambda: build(FamilySpec("h2")),
    "H3": lambda: build(FamilySpec("h3")),
    "G442": lambda: gmnr(4, 4, 2),
    "G331": lambda: gmnr(3, 3, 1),
    "frak_g2": lambda: frak_g(2),
}


def two_triangles_with_path() -> Graph:
    """Disjoint triangles 123 and 456 joined by the path 3-7-4; fails the odd cycle condition."""
    return Graph(7, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 7), (4, 7)])


@st.composite
def connected_graphs(draw, min_vertices=2, max_vertices=7):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(1, n + 1), 2))
    # a random spanning tree keeps every sample connected
    tree = [(draw(st.integers(1, v - 1)), v) for v in range(2, n + 1)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    edges = {tuple(sorted(e)) for e in tree + extra}
    g = Graph(n, edges)
    assert is_connected(g)
    return g
