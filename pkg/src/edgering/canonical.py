"""Canonical-module data and the Gorenstein-type classification of an edge ring."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cone import Codec, edge_polytope, interior_points, semigroup_levels
from .cycles import odd_cycle_condition, phi_bipartite
from .errors import GraphError, InternalInconsistency
from .graph import Graph, bipartition, blocks, is_matching_covered, is_two_connected, require_connected
from .hilbert import HilbertSummary, e_tilde, h_vector


@dataclass(frozen=True)
class CanonicalSummary:
    """Interior lattice points and the minimal generators of the canonical ideal.

    ``interior_counts`` covers degrees ell..krull_dim; ``generators`` holds
    (point, degree) pairs sorted by degree, then lexicographically.
    """

    ell: int
    interior_counts: dict[int, int]
    generators: tuple[tuple[tuple[int, ...], int], ...]
    mu: int
    e_tilde: int

    @property
    def generator_degrees(self) -> list[int]:
        return [deg for _, deg in self.generators]


def canonical_summary(g: Graph, hilbert: HilbertSummary | None = None) -> CanonicalSummary:
    """Minimal generators of the ideal spanned by relative-interior lattice points.

    An interior point v of degree k is a minimal generator unless v - rho(e) is
    an interior point of degree k - 1 for some edge e. Generators live in
    degrees ell..krull_dim.
    """
    require_connected(g)
    if not odd_cycle_condition(g):
        raise GraphError("canonical module data needs a normal edge ring (odd cycle condition fails)")
    hs = hilbert or h_vector(g)
    p = edge_polytope(g)
    top = p.krull_dim
    codec = Codec(p.d, top)
    gens = codec.encode(p.generators)

    counts: dict[int, int] = {}
    found: list[tuple[tuple[int, ...], int]] = []
    by_degree: dict[int, np.ndarray] = {}
    previous = np.zeros(0, dtype=np.uint64)
    for k in range(hs.ell, top + 1):
        pts = interior_points(p, k)
        codes = np.sort(codec.encode(pts))
        counts[k] = len(codes)
        reducible = np.zeros(len(codes), dtype=bool)
        if len(previous):
            for gen in gens:
                # interior points are >= 1 everywhere, so the subtraction never borrows
                reducible |= np.isin(codes - gen, previous, assume_unique=True)
        minimal = codes[~reducible]
        by_degree[k] = minimal
        decoded = codec.decode(minimal)
        order = np.lexsort(decoded.T[::-1])
        found.extend((tuple(int(x) for x in decoded[i]), k) for i in order)
        previous = codes

    if counts[hs.ell] != hs.h_vector[-1]:
        raise InternalInconsistency(
            f"{counts[hs.ell]} interior points in degree {hs.ell} but h_s = {hs.h_vector[-1]}"
        )
    _check_generation(p, codec, by_degree, previous, top, hs.ell)
    mu = len(found)
    et = e_tilde(hs.h_vector)
    if et < mu - 1:
        raise InternalInconsistency(f"e_tilde={et} < mu-1={mu - 1}")
    return CanonicalSummary(hs.ell, counts, tuple(found), mu, et)


def _check_generation(
    p, codec: Codec, by_degree: dict[int, np.ndarray], top_codes: np.ndarray, top: int, ell: int
) -> None:
    """Generators shifted by semigroup elements must give every interior point of degree ``top``."""
    _, levels = semigroup_levels(p, top - ell, codec)
    reached = [
        (by_degree[k][:, None] + levels[top - k][None, :]).ravel()
        for k in by_degree
        if len(by_degree[k])
    ]
    got = np.unique(np.concatenate(reached)) if reached else np.zeros(0, dtype=np.uint64)
    if not np.array_equal(got, np.sort(top_codes)):
        raise InternalInconsistency(
            f"generators reach {len(got)} points in degree {top}, expected {len(top_codes)}"
        )


def is_pseudo_gorenstein(h: Sequence[int]) -> bool:
    return h[-1] == 1


def is_gorenstein(h: Sequence[int]) -> bool:
    return list(h) == list(reversed(h))


def is_almost_gorenstein(c: CanonicalSummary) -> bool:
    return c.e_tilde == c.mu - 1


def is_level(c: CanonicalSummary) -> bool:
    """The canonical module is generated in the single degree ell."""
    return all(deg == c.ell for deg in c.generator_degrees)


def condition_star(h: Sequence[int]) -> bool:
    """h_i = h_{s-i} for every i in 0..floor(s/2) except the pair (h_1, h_{s-1}).

    For s = 1 the only equation, h_0 = h_1, is that exempt pair, so every
    h-vector of socle degree at most 1 satisfies the condition.
    """
    s = len(h) - 1
    return all(h[i] == h[s - i] for i in range(s // 2 + 1) if 1 not in (i, s - i))


@dataclass
class ClassificationReport:
    normal: bool
    hilbert: HilbertSummary
    canonical: CanonicalSummary | None = None
    gorenstein: bool | None = None
    pseudo_gorenstein: bool | None = None
    almost_gorenstein: bool | None = None
    level: bool | None = None
    condition_star: bool | None = None
    bipartite: bool = False
    matching_covered_blocks: list[bool] | None = None
    phi: int | None = None
    degenerate: bool = False
    warnings: list[str] = field(default_factory=list)


def classify(g: Graph, with_canonical: bool = True) -> ClassificationReport:
    """Run every analysis that applies to ``g`` and cross-check the proven implications.

    For bipartite graphs pseudo-Gorensteinness must agree with every block
    being matching-covered; a disagreement raises InternalInconsistency.
    """
    require_connected(g)
    normal = odd_cycle_condition(g)
    hs = h_vector(g)
    report = ClassificationReport(normal=normal, hilbert=hs, degenerate=hs.socle_degree == 0)
    parts = bipartition(g)
    if parts is not None:
        report.bipartite = True
        report.matching_covered_blocks = [is_matching_covered(b.graph) for b in blocks(g)]
        if is_two_connected(g):
            report.phi = phi_bipartite(g, hs.ell)
    if not normal:
        report.warnings.append(
            "odd cycle condition fails: ring is not normal, h_vector is a formal numerator "
            "and Gorenstein-type classifications are suppressed"
        )
        return report

    h = hs.h_vector
    report.gorenstein = is_gorenstein(h)
    report.pseudo_gorenstein = is_pseudo_gorenstein(h)
    report.condition_star = condition_star(h)
    if with_canonical:
        c = canonical_summary(g, hs)
        report.canonical = c
        report.almost_gorenstein = is_almost_gorenstein(c)
        report.level = is_level(c)
    if report.degenerate:
        report.warnings.append("socle degree 0: the edge ring is a polynomial ring")
    _cross_check(report)
    return report


def _cross_check(r: ClassificationReport) -> None:
    s = r.hilbert.socle_degree
    if r.matching_covered_blocks is not None and r.pseudo_gorenstein != all(r.matching_covered_blocks):
        raise InternalInconsistency(
            f"pseudo_gorenstein={r.pseudo_gorenstein} but matching-covered blocks {r.matching_covered_blocks}"
        )
    if r.canonical is None:
        return
    if r.gorenstein != (r.canonical.mu == 1):
        raise InternalInconsistency(f"gorenstein={r.gorenstein} but mu={r.canonical.mu}")
    if r.gorenstein and not (r.almost_gorenstein and r.level):
        raise InternalInconsistency("Gorenstein ring reported as not almost Gorenstein or not level")
    if r.almost_gorenstein and s >= 2 and not r.pseudo_gorenstein:
        raise InternalInconsistency("almost Gorenstein with s >= 2 but h_s != 1")
