"""Hilbert function, h-vector and derived invariants of an edge ring."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import config
from .cone import edge_polytope, ell as interior_degree, semigroup_levels
from .cycles import odd_cycle_condition
from .errors import GuardExceeded, InternalInconsistency
from .graph import Graph, require_connected


@dataclass(frozen=True)
class HilbertSummary:
    """Hilbert data of the edge ring of a connected graph.

    When ``cohen_macaulay_assumed`` is False the graph is not normal and
    ``h_vector`` is only the formal numerator of the Hilbert series.
    """

    krull_dim: int
    polytope_dim: int
    hilbert_values: tuple[int, ...]
    h_vector: tuple[int, ...]
    socle_degree: int
    a_invariant: int
    ell: int
    cohen_macaulay_assumed: bool


def hilbert_function(g: Graph, top: int) -> list[int]:
    """Number of degree-k monomials of the edge ring for k = 0..top."""
    require_connected(g)
    _, levels = semigroup_levels(edge_polytope(g), top)
    return [len(level) for level in levels]


def numerator_coefficient(values: Sequence[int], dim: int, i: int) -> int:
    """Coefficient of t^i in (1 - t)^dim * sum_k values[k] t^k."""
    return sum((-1) ** (i - j) * comb(dim, i - j) * values[j] for j in range(i + 1))


def h_vector(g: Graph) -> HilbertSummary:
    require_connected(g)
    p = edge_polytope(g)
    dim = p.krull_dim
    ell = interior_degree(p)
    if not odd_cycle_condition(g):
        return _formal_numerator(g, dim, p.polytope_dim, ell)
    socle = dim - ell
    if socle < 0:
        raise InternalInconsistency(f"ell={ell} exceeds Krull dimension {dim}")
    values = hilbert_function(g, socle + 1)
    h = [numerator_coefficient(values, dim, i) for i in range(socle + 2)]
    if h[socle + 1] != 0:
        raise InternalInconsistency(f"h-polynomial does not stop at degree {socle}: {h}")
    if h[socle] == 0:
        raise InternalInconsistency(f"leading coefficient h_{socle} vanishes: {h}")
    if min(h) < 0:
        raise InternalInconsistency(f"negative h-vector entry for a normal edge ring: {h}")
    return HilbertSummary(
        krull_dim=dim,
        polytope_dim=p.polytope_dim,
        hilbert_values=tuple(values),
        h_vector=tuple(h[: socle + 1]),
        socle_degree=socle,
        a_invariant=-ell,
        ell=ell,
        cohen_macaulay_assumed=True,
    )


def _formal_numerator(g: Graph, dim: int, polytope_dim: int, ell: int) -> HilbertSummary:
    """Numerator of the Hilbert series of a non-normal edge ring.

    Hilbert values are added one degree at a time until two consecutive
    numerator coefficients vanish; at most 2 * dim degrees are tried.
    """
    limit = min(2 * dim, config.guards().max_dilate)
    values = hilbert_function(g, limit)
    h: list[int] = []
    for k in range(limit + 1):
        h.append(numerator_coefficient(values, dim, k))
        if k >= 1 and h[-1] == 0 and h[-2] == 0:
            while len(h) > 1 and h[-1] == 0:
                h.pop()
            socle = len(h) - 1
            return HilbertSummary(
                krull_dim=dim,
                polytope_dim=polytope_dim,
                hilbert_values=tuple(values[: socle + 2]),
                h_vector=tuple(h),
                socle_degree=socle,
                a_invariant=socle - dim,
                ell=ell,
                cohen_macaulay_assumed=False,
            )
    raise GuardExceeded(f"formal numerator did not stabilise within degree {limit}")


def e_tilde(h: Sequence[int]) -> int:
    """sum_{j=0}^{s-1} [(h_s + ... + h_{s-j}) - (h_0 + ... + h_j)]."""
    s = len(h) - 1
    return sum(sum(h[s - j :]) - sum(h[: j + 1]) for j in range(s))


# polynomials as ascending coefficient lists


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_eval(coeffs: Sequence[Fraction | int], x: int | Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _binomial_in_k(shift: int, delta: int) -> list[Fraction]:
    """C(k + shift, delta) as a polynomial in k."""
    coeffs = [Fraction(1)]
    for t in range(delta):
        coeffs = [Fraction(0)] + coeffs  # multiply by k
        c = shift - t
        for i in range(len(coeffs) - 1):
            coeffs[i] += c * coeffs[i + 1]
    scale = Fraction(1, _factorial(delta))
    return [c * scale for c in coeffs]


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def ehrhart_polynomial(summary: HilbertSummary) -> list[Fraction]:
    """L(k) = sum_i h_i C(k + delta - i, delta), expanded in powers of k."""
    delta = summary.polytope_dim
    out = [Fraction(0)] * (delta + 1)
    for i, hi in enumerate(summary.h_vector):
        for j, c in enumerate(_binomial_in_k(delta - i, delta)):
            out[j] += hi * c
    return out


def ehrhart_value(summary: HilbertSummary, k: int) -> int:
    """Binomial form of the Ehrhart polynomial evaluated directly at k (any integer)."""
    delta = summary.polytope_dim
    total = Fraction(0)
    for i, hi in enumerate(summary.h_vector):
        total += hi * poly_eval(_binomial_in_k(delta - i, delta), k)
    if total.denominator != 1:
        raise InternalInconsistency(f"Ehrhart value at {k} is not an integer: {total}")
    return int(total)
