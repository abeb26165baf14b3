"""Seeded random graphs and exhaustive isomorph-free enumeration of small graphs.

Random sampling uses SplitMix64 so that a seed names the same sequence of
graphs in any implementation; the draw order is documented in the README.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

import networkx as nx
import numpy as np

from .errors import GuardExceeded
from .graph import Graph, is_connected

_MASK64 = (1 << 64) - 1
EDGE_PROBABILITIES = (0.3, 0.5, 0.7)
EXHAUSTIVE_MAX_VERTICES = 8


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Float in [0, 1) from the top 53 bits."""
        return (self.next() >> 11) * 2.0**-53

    def below(self, n: int) -> int:
        return self.next() % n


def random_connected_graph(
    rng: SplitMix64, min_vertices: int, max_vertices: int, bipartite: bool = False
) -> Graph:
    """Erdos-Renyi sample conditioned on being connected (rejection sampling)."""
    while True:
        n = min_vertices + rng.below(max_vertices - min_vertices + 1)
        p = EDGE_PROBABILITIES[rng.below(len(EDGE_PROBABILITIES))]
        side = [rng.next() & 1 for _ in range(n)] if bipartite else None
        edges = []
        for u, v in combinations(range(1, n + 1), 2):
            if side is not None and side[u - 1] == side[v - 1]:
                continue
            if rng.uniform() < p:
                edges.append((u, v))
        touched = {x for e in edges for x in e}
        if len(touched) != n:
            continue
        g = Graph(n, edges)
        if is_connected(g):
            return g


def random_graphs(
    seed: int, count: int, min_vertices: int, max_vertices: int, bipartite: bool = False
) -> Iterator[Graph]:
    rng = SplitMix64(seed)
    for _ in range(count):
        yield random_connected_graph(rng, min_vertices, max_vertices, bipartite)


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _permute_bits(masks: np.ndarray, rows: int, cols: int, p: tuple[int, ...], q: tuple[int, ...]) -> np.ndarray:
    out = np.zeros_like(masks)
    for i in range(rows):
        for j in range(cols):
            out |= ((masks >> np.uint32(p[i] * cols + q[j])) & np.uint32(1)) << np.uint32(i * cols + j)
    return out


def _transpose_bits(masks: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros_like(masks)
    for i in range(n):
        for j in range(n):
            out |= ((masks >> np.uint32(i * n + j)) & np.uint32(1)) << np.uint32(j * n + i)
    return out


@lru_cache(maxsize=None)
def _biadjacency_classes(rows: int, cols: int) -> tuple[int, ...]:
    """Least representative of every biadjacency matrix under row/column permutations.

    Square matrices are also identified with their transposes.
    """
    masks = np.arange(1 << (rows * cols), dtype=np.uint32)
    best = masks.copy()
    variants = [masks]
    if rows == cols:
        variants.append(_transpose_bits(masks, rows))
    for base in variants:
        for p in permutations(range(rows)):
            for q in permutations(range(cols)):
                np.minimum(best, _permute_bits(base, rows, cols, p, q), out=best)
    return tuple(int(x) for x in np.unique(best))


def connected_bipartite_graphs(n: int) -> list[Graph]:
    """One connected bipartite graph on exactly n vertices per isomorphism class.

    Part sizes a <= b; part1 = {1..a}. A connected bipartite graph has a unique
    bipartition up to swapping, so classes of biadjacency matrices are exactly
    isomorphism classes.
    """
    if n > EXHAUSTIVE_MAX_VERTICES:
        raise GuardExceeded(f"exhaustive enumeration is limited to {EXHAUSTIVE_MAX_VERTICES} vertices")
    out = []
    for a in range(1, n // 2 + 1):
        b = n - a
        for mask in _biadjacency_classes(a, b):
            edges = [(i + 1, a + j + 1) for i in range(a) for j in range(b) if mask >> (i * b + j) & 1]
            if len({x for e in edges for x in e}) != n:
                continue
            g = Graph(n, edges)
            if is_connected(g):
                out.append(g)
    return out


def _from_networkx(h: nx.Graph) -> Graph:
    index = {v: i + 1 for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(index), [(index[u], index[v]) for u, v in h.edges])


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n <= 7:
        return tuple(
            _from_networkx(h)
            for h in nx.graph_atlas_g()
            if h.number_of_nodes() == n and n >= 2 and nx.is_connected(h)
        )
    # Every connected graph has a vertex whose deletion keeps it connected,
    # so all of them arise by attaching a vertex to a connected graph on n - 1.
    buckets: dict[str, list[nx.Graph]] = {}
    out: list[Graph] = []
    for base in _connected_classes(n - 1):
        for size in range(1, n):
            for nbrs in combinations(range(1, n), size):
                h = base.to_networkx()
                h.add_edges_from((v, n) for v in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                out.append(_from_networkx(h))
    return tuple(out)


def connected_graphs(n: int) -> list[Graph]:
    """One connected graph on exactly n vertices per isomorphism class (n <= 8)."""
    if n > EXHAUSTIVE_MAX_VERTICES:
        raise GuardExceeded(f"exhaustive enumeration is limited to {EXHAUSTIVE_MAX_VERTICES} vertices")
    return list(_connected_classes(n))
