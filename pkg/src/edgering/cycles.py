"""Cycle-based certificates: the odd cycle condition and ear decompositions."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from . import config
from .errors import GraphError, InternalInconsistency
from .graph import Graph, connected_components, is_bipartite, is_two_connected


def induced_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Chordless cycles of ``g`` as vertex sequences starting at their least vertex.

    Each cycle is reported once; the second vertex is smaller than the last.
    """
    adj = g.adj
    for s in g.vertices:
        # Extend chordless paths s, p1, ..., pk over vertices larger than s.
        def extend(path: list[int], interior: set[int]) -> Iterator[tuple[int, ...]]:
            last = path[-1]
            for w in sorted(adj[last]):
                if w <= s or w in path:
                    continue
                # w may only touch the path at `last` (and at s, which closes it).
                if adj[w] & interior:
                    continue
                if s in adj[w]:
                    if len(path) >= 2 and path[1] < w:
                        yield tuple(path) + (w,)
                    continue
                interior.add(last)
                path.append(w)
                yield from extend(path, interior)
                path.pop()
                interior.discard(last)

        for p1 in sorted(adj[s]):
            if p1 > s:
                # interior starts empty: s is allowed to touch the path's end only by closing
                yield from extend([s, p1], set())


def odd_induced_cycles(g: Graph) -> list[frozenset[int]]:
    return [frozenset(c) for c in induced_cycles(g) if len(c) % 2 == 1]


def odd_cycle_condition(g: Graph) -> bool:
    """Every two vertex-disjoint odd cycles in a component are joined by an edge.

    Only chordless odd cycles are examined: any odd cycle contains the vertex
    set of a chordless one, so bridging those bridges all pairs.
    """
    config.check_vertices(g.n, "odd_cycle_condition")
    comp_of = {}
    for i, comp in enumerate(connected_components(g)):
        for v in comp:
            comp_of[v] = i
    cycles = odd_induced_cycles(g)
    for a, b in combinations(cycles, 2):
        if a & b:
            continue
        if comp_of[next(iter(a))] != comp_of[next(iter(b))]:
            continue
        if not any(g.adj[v] & b for v in a):
            return False
    return True


def _cycle_vertex_sets(g: Graph) -> dict[int, int]:
    """Bitmask of the vertex set of every cycle, mapped to its length."""
    adj = g.adj
    found: dict[int, int] = {}

    def walk(s: int, u: int, mask: int, length: int) -> None:
        for w in adj[u]:
            if w == s and length >= 3:
                found[mask] = length
            elif w > s and not mask >> w & 1:
                walk(s, w, mask | 1 << w, length + 1)

    for s in g.vertices:
        walk(s, s, 1 << s, 1)
    return found


def _ears_from(g: Graph, covered: int) -> set[tuple[int, int]]:
    """Open ears with at least one new vertex, as (new-vertex mask, parity of length)."""
    adj = g.adj
    out: set[tuple[int, int]] = set()

    def walk(start: int, u: int, inner: int, length: int) -> None:
        for w in adj[u]:
            if covered >> w & 1:
                if w != start:
                    out.add((inner, (length + 1) % 2))
            elif not inner >> w & 1:
                walk(start, w, inner | 1 << w, length + 1)

    for s in g.vertices:
        if not covered >> s & 1:
            continue
        for w in adj[s]:
            if not covered >> w & 1:
                walk(s, w, 1 << w, 1)
    return out


def phi_bruteforce(g: Graph) -> int:
    """Least number of even pieces over all open ear decompositions of ``g``.

    The initial cycle counts as a piece. Single-edge ears between covered
    vertices are odd and never block later ears, so they are postponed and the
    search state is just the covered vertex set.
    """
    config.check_search_edges(g.num_edges, "phi_bruteforce")
    if not is_two_connected(g):
        raise GraphError("phi is only defined for 2-connected graphs")
    full = (1 << (g.n + 1)) - 2

    @lru_cache(maxsize=None)
    def best(covered: int) -> int:
        if covered == full:
            return 0
        options = [(1 - parity) + best(covered | new) for new, parity in _ears_from(g, covered)]
        if not options:
            raise InternalInconsistency("ear search stalled on a 2-connected graph")
        return min(options)

    return min((length % 2 == 0) + best(mask) for mask, length in _cycle_vertex_sets(g).items())


def phi_bipartite(g: Graph, ell: int) -> int:
    """phi of a 2-connected bipartite graph from its interior degree ``ell``: 2*ell - |V| + 1."""
    if not is_bipartite(g):
        raise GraphError("phi_bipartite needs a bipartite graph")
    if not is_two_connected(g):
        raise GraphError("phi is only defined for 2-connected graphs")
    phi = 2 * ell - g.n + 1
    if phi < 1:
        raise InternalInconsistency(f"ell={ell} on {g.n} vertices gives phi={phi} < 1")
    return phi
