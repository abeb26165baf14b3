"""Search for almost-Gorenstein edge rings whose h-vector breaks condition (*)."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .canonical import canonical_summary, condition_star, is_almost_gorenstein
from .cycles import odd_cycle_condition
from .generate import connected_bipartite_graphs, connected_graphs, random_graphs
from .graph import Graph
from .hilbert import h_vector


@dataclass
class Finding:
    index: int
    vertices: int
    edges: list[tuple[int, int]]
    h_vector: list[int]
    mu: int
    e_tilde: int


@dataclass
class ExploreSummary:
    mode: str
    bipartite: bool
    seed: int | None
    examined: int = 0
    normal: int = 0
    failing_star: int = 0
    violations: int = 0
    violation_indices: list[int] = field(default_factory=list)


def candidate_graphs(
    mode: str, bipartite: bool, max_vertices: int, samples: int, seed: int, min_vertices: int = 2
) -> Iterable[Graph]:
    if mode == "exhaustive":
        make = connected_bipartite_graphs if bipartite else connected_graphs
        return (g for n in range(max(2, min_vertices), max_vertices + 1) for g in make(n))
    if mode == "random":
        return random_graphs(seed, samples, max(2, min_vertices), max_vertices, bipartite)
    raise ValueError(f"unknown mode {mode!r}")


def explore(
    mode: str = "random",
    bipartite: bool = False,
    max_vertices: int = 8,
    samples: int = 100,
    seed: int = 0,
    min_vertices: int = 2,
) -> Iterator[Finding | ExploreSummary]:
    """Yield every violating sample in index order, then one summary.

    Only normal rings are examined. The canonical module is computed only for
    h-vectors that already fail condition (*).
    """
    summary = ExploreSummary(mode, bipartite, seed if mode == "random" else None)
    for index, g in enumerate(candidate_graphs(mode, bipartite, max_vertices, samples, seed, min_vertices)):
        summary.examined += 1
        if not odd_cycle_condition(g):
            continue
        summary.normal += 1
        hs = h_vector(g)
        if condition_star(hs.h_vector):
            continue
        summary.failing_star += 1
        c = canonical_summary(g, hs)
        if is_almost_gorenstein(c):
            summary.violations += 1
            summary.violation_indices.append(index)
            yield Finding(index, g.n, list(g.edges), list(hs.h_vector), c.mu, c.e_tilde)
    yield summary


def as_record(item: Finding | ExploreSummary) -> dict:
    if isinstance(item, ExploreSummary):
        return {"summary": asdict(item)}
    return {"finding": asdict(item)}
