"""Named graphs and closed-form h-polynomials for several of them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import GraphError
from .graph import Graph

FAMILY_ARITY = {
    "complete_bipartite": 2,
    "complete": 1,
    "gmnr": 3,
    "frak_g": 1,
    "wheel": 1,
    "cycle": 1,
    "petersen": 0,
    "h1": 0,
    "h2": 0,
    "h3": 0,
}

ALIASES = {"kmn": "complete_bipartite", "k": "complete", "gk": "frak_g"}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        name = ALIASES.get(self.name, self.name)
        object.__setattr__(self, "name", name)
        if name not in FAMILY_ARITY:
            raise GraphError(f"unknown family {self.name!r}")
        if len(self.params) != FAMILY_ARITY[name]:
            raise GraphError(f"{name} takes {FAMILY_ARITY[name]} parameter(s), got {len(self.params)}")
        _validate(name, self.params)

    @property
    def label(self) -> str:
        return f"{self.name}({','.join(map(str, self.params))})" if self.params else self.name


def _validate(name: str, p: tuple[int, ...]) -> None:
    if name == "complete_bipartite" and min(p) < 1:
        raise GraphError("complete_bipartite needs m, n >= 1")
    if name == "complete" and p[0] < 2:
        raise GraphError("complete needs n >= 2")
    if name == "gmnr":
        m, n, r = p
        if m < 3 or n < 3:
            raise GraphError("gmnr needs m >= 3 and n >= 3")
        if not 0 <= r <= min(m, n):
            raise GraphError("gmnr needs 0 <= r <= min(m, n)")
    if name == "frak_g" and p[0] < 1:
        raise GraphError("frak_g needs k >= 1")
    if name == "wheel" and p[0] < 3:
        raise GraphError("wheel needs at least 3 rim vertices")
    if name == "cycle" and p[0] < 3:
        raise GraphError("cycle needs n >= 3")


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts {1..m} and {m+1..m+n}."""
    return build(FamilySpec("complete_bipartite", (m, n)))


def complete(n: int) -> Graph:
    return build(FamilySpec("complete", (n,)))


def gmnr(m: int, n: int, r: int) -> Graph:
    """K_{m,n} minus the matching {i, i+m} for i = 1..r."""
    return build(FamilySpec("gmnr", (m, n, r)))


def frak_g(k: int) -> Graph:
    """k stacked 4-cycles v_i u_i v_{i+1} w_i plus the chord {v_1, v_{k+1}}.

    Labels: v_i = 3i - 2, u_i = 3i - 1, w_i = 3i, and v_{k+1} = 3k + 1.
    """
    return build(FamilySpec("frak_g", (k,)))


def wheel(n: int) -> Graph:
    """Cycle on rim vertices 1..n plus hub n+1 adjacent to all of them."""
    return build(FamilySpec("wheel", (n,)))


def cycle(n: int) -> Graph:
    return build(FamilySpec("cycle", (n,)))


def petersen() -> Graph:
    """Outer 5-cycle 1..5, spokes {i, i+5}, inner pentagram on 6..10."""
    return build(FamilySpec("petersen"))


def build(spec: FamilySpec) -> Graph:
    p = spec.params
    name = spec.name
    if name == "complete_bipartite":
        m, n = p
        return Graph(m + n, [(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)])
    if name == "complete":
        return Graph(p[0], combinations(range(1, p[0] + 1), 2))
    if name == "gmnr":
        m, n, r = p
        removed = {(i, i + m) for i in range(1, r + 1)}
        edges = [(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)]
        return Graph(m + n, [e for e in edges if e not in removed])
    if name == "frak_g":
        k = p[0]
        v = lambda i: 3 * i - 2  # noqa: E731
        edges = [(v(1), v(k + 1))]
        for i in range(1, k + 1):
            u, w = 3 * i - 1, 3 * i
            edges += [(v(i), u), (v(i), w), (u, v(i + 1)), (w, v(i + 1))]
        return Graph(3 * k + 1, edges)
    if name == "wheel":
        n = p[0]
        rim = [(i, i % n + 1) for i in range(1, n + 1)]
        return Graph(n + 1, rim + [(i, n + 1) for i in range(1, n + 1)])
    if name == "cycle":
        n = p[0]
        return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])
    if name == "petersen":
        outer = [(i, i % 5 + 1) for i in range(1, 6)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
        return Graph(10, outer + spokes + inner)
    if name == "h1":
        return Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])
    if name == "h2":
        return Graph(7, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (3, 6), (3, 7), (5, 7)])
    if name == "h3":
        return Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 3), (3, 5), (3, 6)])
    raise GraphError(f"unknown family {name!r}")  # pragma: no cover


# closed forms, coefficient lists in ascending degree


def _trim(coeffs: list[int]) -> list[int]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def h_formula_complete_bipartite(m: int, n: int) -> list[int]:
    return _trim([comb(m - 1, i) * comb(n - 1, i) for i in range(min(m, n) + 1)])


def h_formula_gmnr(m: int, n: int, r: int) -> list[int]:
    coeffs = h_formula_complete_bipartite(m, n) + [0, 0]
    coeffs[1] -= r
    return _trim(coeffs)


def h_formula_frak_g(k: int) -> list[int]:
    return [comb(k, i) for i in range(k + 1)]


def h_formula(spec: FamilySpec) -> list[int] | None:
    """Closed-form h-polynomial when one is known for the family, else None."""
    if spec.name == "complete_bipartite":
        return h_formula_complete_bipartite(*spec.params)
    if spec.name == "gmnr":
        return h_formula_gmnr(*spec.params)
    if spec.name == "frak_g":
        return h_formula_frak_g(*spec.params)
    return None
