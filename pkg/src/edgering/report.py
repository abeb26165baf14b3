"""JSON report assembled from every analysis of one graph."""
from __future__ import annotations

import time
from contextlib import contextmanager
from typing import Iterator, Optional

from pydantic import BaseModel

from .canonical import classify
from .cycles import odd_cycle_condition, phi_bruteforce
from .errors import GuardExceeded
from .graph import (
    Graph,
    bipartition,
    blocks,
    has_perfect_matching,
    is_connected,
    is_hamiltonian,
    is_matching_covered,
    is_regular,
    is_two_connected,
    require_connected,
)

SCHEMA_VERSION = "1.0"


class InputEcho(BaseModel):
    vertices: int
    edges: list[tuple[int, int]]
    family: Optional[str] = None


class Structure(BaseModel):
    connected: bool
    bipartite: bool
    bipartition: Optional[tuple[list[int], list[int]]]
    two_connected: bool
    blocks: list[list[int]]
    regular: bool
    hamiltonian: Optional[bool]


class Normality(BaseModel):
    odd_cycle_condition: bool
    normal: bool


class HilbertFields(BaseModel):
    krull_dim: int
    polytope_dim: int
    hilbert_values: list[int]
    h_vector: list[int]
    socle_degree: int
    a_invariant: int
    ell: int
    cohen_macaulay_assumed: bool


class CanonicalFields(BaseModel):
    mu: int
    e_tilde: int
    interior_counts: dict[int, int]
    generator_degrees: list[int]
    generators: list[list[int]]


class Classification(BaseModel):
    gorenstein: Optional[bool]
    pseudo_gorenstein: Optional[bool]
    almost_gorenstein: Optional[bool]
    level: Optional[bool]
    level_best_effort: bool = True
    condition_star: Optional[bool]
    degenerate: bool


class Certificates(BaseModel):
    has_perfect_matching: bool
    matching_covered: bool
    matching_covered_blocks: Optional[list[bool]]
    phi: Optional[int]
    phi_bruteforce: Optional[int]


class Oracle(BaseModel):
    formula: list[int]
    match: bool


class Report(BaseModel):
    schema_version: str = SCHEMA_VERSION
    input: InputEcho
    structure: Structure
    normality: Normality
    hilbert: HilbertFields
    canonical: Optional[CanonicalFields]
    classification: Classification
    certificates: Certificates
    oracle: Optional[Oracle] = None
    warnings: list[str]
    timing_ms: dict[str, float]


@contextmanager
def _timed(timing: dict[str, float], stage: str) -> Iterator[None]:
    start = time.perf_counter()
    try:
        yield
    finally:
        timing[stage] = round((time.perf_counter() - start) * 1000.0, 3)


def build_report(g: Graph, family: str | None = None, formula: list[int] | None = None) -> Report:
    """Analyse a connected graph end to end.

    ``formula`` is a closed-form h-polynomial to compare against the computed one.
    """
    require_connected(g)
    timing: dict[str, float] = {}
    warnings: list[str] = []

    with _timed(timing, "structure"):
        parts = bipartition(g)
        two_conn = is_two_connected(g)
        try:
            hamiltonian: bool | None = is_hamiltonian(g)
        except GuardExceeded as exc:
            hamiltonian = None
            warnings.append(f"hamiltonicity skipped: {exc}")
        structure = Structure(
            connected=is_connected(g),
            bipartite=parts is not None,
            bipartition=(sorted(parts.part1), sorted(parts.part2)) if parts else None,
            two_connected=two_conn,
            blocks=[list(b.vertices) for b in blocks(g)],
            regular=is_regular(g),
            hamiltonian=hamiltonian,
        )
    with _timed(timing, "normality"):
        occ = odd_cycle_condition(g)
    with _timed(timing, "classification"):
        cls = classify(g)
    warnings.extend(cls.warnings)
    with _timed(timing, "certificates"):
        phi_search = None
        if two_conn:
            try:
                phi_search = phi_bruteforce(g)
            except GuardExceeded as exc:
                warnings.append(f"ear-decomposition search skipped: {exc}")
        certificates = Certificates(
            has_perfect_matching=has_perfect_matching(g),
            matching_covered=is_matching_covered(g),
            matching_covered_blocks=cls.matching_covered_blocks,
            phi=cls.phi,
            phi_bruteforce=phi_search,
        )

    hs = cls.hilbert
    c = cls.canonical
    return Report(
        input=InputEcho(vertices=g.n, edges=list(g.edges), family=family),
        structure=structure,
        normality=Normality(odd_cycle_condition=occ, normal=cls.normal),
        hilbert=HilbertFields(
            krull_dim=hs.krull_dim,
            polytope_dim=hs.polytope_dim,
            hilbert_values=list(hs.hilbert_values),
            h_vector=list(hs.h_vector),
            socle_degree=hs.socle_degree,
            a_invariant=hs.a_invariant,
            ell=hs.ell,
            cohen_macaulay_assumed=hs.cohen_macaulay_assumed,
        ),
        canonical=None
        if c is None
        else CanonicalFields(
            mu=c.mu,
            e_tilde=c.e_tilde,
            interior_counts=dict(c.interior_counts),
            generator_degrees=c.generator_degrees,
            generators=[list(pt) for pt, _ in c.generators],
        ),
        classification=Classification(
            gorenstein=cls.gorenstein,
            pseudo_gorenstein=cls.pseudo_gorenstein,
            almost_gorenstein=cls.almost_gorenstein,
            level=cls.level,
            condition_star=cls.condition_star,
            degenerate=cls.degenerate,
        ),
        certificates=certificates,
        oracle=None if formula is None else Oracle(formula=formula, match=list(hs.h_vector) == formula),
        warnings=warnings,
        timing_ms=timing,
    )


def render_pretty(r: Report) -> str:
    """Plain-text table of the main fields."""
    h = r.hilbert
    c = r.canonical
    k = r.classification
    rows = [
        ("graph", f"{r.input.family or 'file'}: {r.input.vertices} vertices, {len(r.input.edges)} edges"),
        ("bipartite", r.structure.bipartite),
        ("2-connected", r.structure.two_connected),
        ("blocks", len(r.structure.blocks)),
        ("regular", r.structure.regular),
        ("hamiltonian", r.structure.hamiltonian),
        ("normal", r.normality.normal),
        ("Krull dim", h.krull_dim),
        ("h-vector", h.h_vector),
        ("socle degree", h.socle_degree),
        ("a-invariant", h.a_invariant),
        ("ell", h.ell),
        ("mu(omega)", c.mu if c else None),
        ("e~", c.e_tilde if c else None),
        ("Gorenstein", k.gorenstein),
        ("pseudo-Gorenstein", k.pseudo_gorenstein),
        ("almost Gorenstein", k.almost_gorenstein),
        ("level", k.level),
        ("condition (*)", k.condition_star),
        ("matching-covered", r.certificates.matching_covered),
        ("blocks matching-covered", r.certificates.matching_covered_blocks),
        ("phi", r.certificates.phi if r.certificates.phi is not None else r.certificates.phi_bruteforce),
    ]
    if r.oracle is not None:
        rows.append(("closed form", r.oracle.formula))
        rows.append(("closed form matches", r.oracle.match))
    width = max(len(name) for name, _ in rows)
    lines = [f"{name.ljust(width)}  {'-' if value is None else value}" for name, value in rows]
    lines += [f"warning: {w}" for w in r.warnings]
    return "\n".join(lines) + "\n"
