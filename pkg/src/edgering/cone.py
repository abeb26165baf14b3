"""The edge polytope, its cone, and exact lattice-point enumeration of its dilates.

Points are integer vectors of length d with coordinate sum 2k for degree k.
Enumerations return ``numpy`` arrays with one point per row in lexicographic
order. All arithmetic is integral.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import GraphError, GuardExceeded, InternalInconsistency
from .graph import Graph, bipartite_component_count, independent_sets, neighborhood, require_connected

LatticePoint = tuple[int, ...]


def degree(point: Sequence[int]) -> int:
    total = int(sum(point))
    if total % 2:
        raise ValueError(f"coordinate sum {total} is odd")
    return total // 2


def rho(g: Graph, edge: tuple[int, int]) -> LatticePoint:
    """The 0/1 generator e_i + e_j of the edge {i, j}."""
    u, v = edge
    return tuple(1 if w in (u, v) else 0 for w in g.vertices)


def edge_sum(g: Graph, edges: Iterable[tuple[int, int]]) -> LatticePoint:
    """Sum of the generators of ``edges`` (with multiplicity)."""
    out = [0] * g.n
    for u, v in edges:
        out[u - 1] += 1
        out[v - 1] += 1
    return tuple(out)


@dataclass(frozen=True)
class Halfspace:
    """The inequality ``coeffs . x >= 0``.

    ``support`` is ``(i,)`` for the coordinate halfspace of vertex i, or the
    independent set T for the halfspace sum_{N(T)} x - sum_T x >= 0.
    """

    kind: str
    support: tuple[int, ...]
    coeffs: tuple[int, ...]
    implicit_equality: bool

    def value(self, point: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs, point))


@dataclass(frozen=True)
class ConeSystem:
    d: int
    coordinate_halfspaces: tuple[Halfspace, ...]
    independent_halfspaces: tuple[Halfspace, ...]

    @property
    def halfspaces(self) -> tuple[Halfspace, ...]:
        return self.coordinate_halfspaces + self.independent_halfspaces

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.array([h.coeffs for h in self.halfspaces], dtype=np.int64).reshape(-1, self.d)

    @cached_property
    def implicit(self) -> np.ndarray:
        return np.array([h.implicit_equality for h in self.halfspaces], dtype=bool)

    def independent(self, t: Iterable[int]) -> Halfspace:
        key = tuple(sorted(t))
        for h in self.independent_halfspaces:
            if h.support == key:
                return h
        raise KeyError(key)


def build_cone(g: Graph) -> ConeSystem:
    """H-description of the cone over the edge polytope of a connected graph.

    One halfspace per vertex and one per non-empty independent set. A halfspace
    is flagged as an implicit equality when every generator lies on it.
    """
    require_connected(g)
    config.check_vertices(g.n, "build_cone")
    gens = [rho(g, e) for e in g.edges]

    def make(kind: str, support: tuple[int, ...], coeffs: list[int]) -> Halfspace:
        values = [sum(c * x for c, x in zip(coeffs, p)) for p in gens]
        if min(values) < 0:
            raise InternalInconsistency(f"generator violates {kind} halfspace {support}")
        return Halfspace(kind, support, tuple(coeffs), all(v == 0 for v in values))

    coordinate = []
    for i in g.vertices:
        coeffs = [0] * g.n
        coeffs[i - 1] = 1
        coordinate.append(make("vertex", (i,), coeffs))
    independent = []
    for t in independent_sets(g):
        coeffs = [0] * g.n
        for v in neighborhood(g, t):
            coeffs[v - 1] = 1
        for v in t:
            coeffs[v - 1] = -1
        independent.append(make("independent", t, coeffs))
    return ConeSystem(g.n, tuple(coordinate), tuple(independent))


def contains(cone: ConeSystem, point: Sequence[int]) -> bool:
    if len(point) != cone.d:
        raise ValueError(f"point has length {len(point)}, expected {cone.d}")
    return all(h.value(point) >= 0 for h in cone.halfspaces)


def strictly_contains(cone: ConeSystem, point: Sequence[int]) -> bool:
    """Relative-interior membership.

    Implicit equalities must hold with equality, every other inequality strictly.
    """
    if len(point) != cone.d:
        raise ValueError(f"point has length {len(point)}, expected {cone.d}")
    for h in cone.halfspaces:
        value = h.value(point)
        if h.implicit_equality:
            if value != 0:
                return False
        elif value <= 0:
            return False
    return True


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free elimination."""
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col]
                m[i] = [p[col] * a - f * b for a, b in zip(m[i], p)]
        rank += 1
    return rank


@dataclass(frozen=True)
class EdgePolytope:
    graph: Graph
    generators: np.ndarray
    cone: ConeSystem
    polytope_dim: int

    @property
    def d(self) -> int:
        return self.graph.n

    @property
    def krull_dim(self) -> int:
        return self.polytope_dim + 1

    def __hash__(self) -> int:
        return hash(self.graph)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgePolytope) and other.graph == self.graph


@lru_cache(maxsize=256)
def edge_polytope(g: Graph) -> EdgePolytope:
    cone = build_cone(g)
    gens = np.array([rho(g, e) for e in g.edges], dtype=np.int64)
    dim = g.n - bipartite_component_count(g) - 1
    rank = integer_rank([rho(g, e) for e in g.edges])
    if rank != dim + 1:
        raise InternalInconsistency(f"generator rank {rank} but expected dimension {dim + 1}")
    return EdgePolytope(g, gens, cone, dim)


# ---------------------------------------------------------------------------
# enumeration

_ELEMENT_BUDGET = 4_000_000


def _enumerate(cone: ConeSystem, total: int, strict: bool) -> np.ndarray:
    """All x >= 0 with sum ``total`` in the cone (or its relative interior).

    Coordinates are assigned one at a time over a whole frontier of partial
    vectors; a partial vector is dropped as soon as some inequality can no
    longer be met with the remaining budget. Coefficients are in {-1, 0, 1},
    so the best completion puts the whole budget on one coordinate.
    """
    d = cone.d
    a = cone.matrix.astype(np.int16)
    m = a.shape[0]
    implicit = cone.implicit
    nonimplicit = ~implicit
    pos_rem = np.zeros((d + 1, m), dtype=bool)
    neg_rem = np.zeros((d + 1, m), dtype=bool)
    for j in range(d):
        pos_rem[j] = (a[:, j:] > 0).any(axis=1)
        neg_rem[j] = (a[:, j:] < 0).any(axis=1)
    lo = 1 if strict else 0
    if total < lo * d:
        return np.zeros((0, d), dtype=np.int16)
    chunk_rows = max(1, _ELEMENT_BUDGET // (m * (total + 1)))
    found: list[np.ndarray] = []

    def feasible(partial: np.ndarray, remaining: np.ndarray, j: int) -> np.ndarray:
        r = remaining.astype(np.int16)[:, None]
        best = partial + r * pos_rem[j]
        if not strict:
            return (best >= 0).all(axis=1)
        worst = partial - r * neg_rem[j]
        keep = (best[:, nonimplicit] > 0).all(axis=1)
        keep &= (best[:, implicit] >= 0).all(axis=1)
        keep &= (worst[:, implicit] <= 0).all(axis=1)
        return keep

    def descend(x: np.ndarray, partial: np.ndarray, remaining: np.ndarray, j: int) -> None:
        if j == d:
            found.append(x)
            return
        if j == d - 1:
            lows = remaining
            highs = remaining
        else:
            lows = np.full_like(remaining, lo)
            highs = remaining - lo * (d - 1 - j)
        counts = highs - lows + 1
        ok = counts > 0
        if not ok.all():
            x, partial, remaining = x[ok], partial[ok], remaining[ok]
            lows, counts = lows[ok], counts[ok]
        if len(x) == 0:
            return
        rows = np.repeat(np.arange(len(x)), counts)
        starts = np.cumsum(counts) - counts
        values = lows[rows] + (np.arange(len(rows)) - starts[rows])
        new_x = np.concatenate([x[rows], values[:, None].astype(np.int16)], axis=1)
        new_partial = partial[rows] + values[:, None].astype(np.int16) * a[:, j]
        new_remaining = remaining[rows] - values
        keep = feasible(new_partial, new_remaining, j + 1)
        new_x, new_partial, new_remaining = new_x[keep], new_partial[keep], new_remaining[keep]
        for s in range(0, len(new_x), chunk_rows):
            descend(
                new_x[s : s + chunk_rows],
                new_partial[s : s + chunk_rows],
                new_remaining[s : s + chunk_rows],
                j + 1,
            )

    descend(
        np.zeros((1, 0), dtype=np.int16),
        np.zeros((1, m), dtype=np.int16),
        np.array([total], dtype=np.int64),
        0,
    )
    if not found:
        return np.zeros((0, d), dtype=np.int16)
    points = np.concatenate(found, axis=0)
    order = np.lexsort(points.T[::-1])
    return points[order]


def _check_enumeration(p: EdgePolytope, k: int, what: str) -> None:
    if k < 0:
        raise ValueError(f"{what}: degree must be non-negative")
    config.check_vertices(p.d, what)
    config.check_dilate(k, what)


def dilate_points(p: EdgePolytope, k: int) -> np.ndarray:
    """Lattice points of the k-th dilate: x >= 0, sum 2k, inside the cone."""
    _check_enumeration(p, k, "dilate_points")
    return _enumerate(p.cone, 2 * k, strict=False)


def interior_points(p: EdgePolytope, k: int) -> np.ndarray:
    """Lattice points in the relative interior of the k-th dilate."""
    if k < 1:
        raise ValueError("interior_points: k must be at least 1")
    _check_enumeration(p, k, "interior_points")
    return _enumerate(p.cone, 2 * k, strict=True)


def ell(p: EdgePolytope) -> int:
    """Least k >= 1 whose dilate has a relative-interior lattice point."""
    bound = p.krull_dim + 1
    for k in range(1, bound + 1):
        if len(interior_points(p, k)):
            return k
    raise InternalInconsistency(f"no interior lattice point up to degree {bound}")


# ---------------------------------------------------------------------------
# the affine semigroup


class Codec:
    """Packs a non-negative vector into one uint64, ``bits`` bits per coordinate.

    With every coordinate below ``2**bits`` sums of codes never carry, so
    vector addition is integer addition on codes.
    """

    def __init__(self, d: int, max_coord: int):
        self.d = d
        self.bits = max(1, int(max_coord).bit_length())
        if self.bits * d > 64:
            raise GuardExceeded(
                f"{d} coordinates of {self.bits} bits do not fit a 64-bit code"
            )
        self.mask = np.uint64((1 << self.bits) - 1)
        self.shifts = np.array([self.bits * i for i in range(d)], dtype=np.uint64)

    def encode(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=np.uint64).reshape(-1, self.d)
        return np.bitwise_or.reduce(pts << self.shifts, axis=1) if self.d else np.zeros(len(pts), np.uint64)

    def decode(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.uint64)
        return ((codes[:, None] >> self.shifts) & self.mask).astype(np.int16)


def semigroup_levels(
    p: EdgePolytope, top: int, codec: Codec | None = None
) -> tuple[Codec, list[np.ndarray]]:
    """Sorted codes of all sums of exactly k generators, for k = 0..top.

    Level k is the sumset of level k-1 with the generator set. A coordinate of
    a degree-k point is at most k, which fixes the default code width.
    """
    _check_enumeration(p, top, "semigroup_points")
    codec = codec or Codec(p.d, max(top, 1))
    gens = codec.encode(p.generators)
    levels = [np.zeros(1, dtype=np.uint64)]
    for _ in range(top):
        levels.append(np.unique((levels[-1][:, None] + gens[None, :]).ravel()))
    return codec, levels


def semigroup_points(p: EdgePolytope, k: int) -> np.ndarray:
    """Distinct sums of exactly k generators (the degree-k monomials of the edge ring)."""
    codec, levels = semigroup_levels(p, k)
    pts = codec.decode(levels[k])
    return pts[np.lexsort(pts.T[::-1])]


def as_point_set(points: np.ndarray) -> set[LatticePoint]:
    return {tuple(int(x) for x in row) for row in points}
