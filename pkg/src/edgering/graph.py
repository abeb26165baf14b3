"""Finite simple graphs on the vertex set {1, ..., d} and the predicates used on them."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import networkx as nx

from . import config
from .errors import GraphError, GraphFormatError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph without isolated vertices.

    Vertices are ``1..n``. ``edges`` is stored sorted with ``u < v`` in every pair.
    """

    n: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if n < 1:
            raise GraphError("vertex count must be positive")
        seen: set[Edge] = set()
        for pair in edges:
            u, v = pair
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > n:
                raise GraphError(f"edge {{{u},{v}}} out of range 1..{n}")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge {{{u},{v}}}")
            seen.add((u, v))
        touched = {x for e in seen for x in e}
        missing = sorted(set(range(1, n + 1)) - touched)
        if missing:
            raise GraphError(f"isolated vertex {missing[0]}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """``adj[v]`` is the neighbour set of ``v``; index 0 is an empty placeholder."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks; bit ``v`` stands for vertex ``v``."""
        return tuple(sum(1 << w for w in s) for s in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class Bipartition:
    part1: frozenset[int]
    part2: frozenset[int]


@dataclass(frozen=True)
class Block:
    """A block relabelled to ``1..k``; ``vertices[i]`` is the original label of vertex ``i+1``."""

    graph: Graph
    vertices: tuple[int, ...] = field(default=())

    def original(self, v: int) -> int:
        return self.vertices[v - 1]


# ---------------------------------------------------------------------------
# ingestion


def parse_graph(text: str | bytes) -> Graph:
    """Parse the plain-text graph format.

    Lines starting with ``#`` and blank lines are ignored. The first remaining
    line holds the vertex count ``d``; every further line is ``u v`` with
    ``1 <= u < v <= d``.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError("encoding", f"input is not UTF-8 ({exc})") from None
    d: int | None = None
    edges: list[Edge] = []
    first_seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if d is None:
            if len(tokens) != 1 or not _is_int(tokens[0]):
                raise GraphFormatError("malformed line", f"expected vertex count, got {raw!r}", lineno)
            d = int(tokens[0])
            if d < 1:
                raise GraphFormatError("malformed line", "vertex count must be positive", lineno)
            continue
        if len(tokens) != 2 or not all(_is_int(t) for t in tokens):
            raise GraphFormatError("malformed line", f"expected 'u v', got {raw!r}", lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise GraphFormatError("loop", f"edge {{{u},{v}}}", lineno)
        if not (1 <= u <= d and 1 <= v <= d):
            raise GraphFormatError("vertex out of range", f"edge {{{u},{v}}} with d={d}", lineno)
        if u > v:
            raise GraphFormatError("malformed line", f"expected u < v, got {u} {v}", lineno)
        if (u, v) in first_seen:
            raise GraphFormatError(
                "duplicate edge", f"{{{u},{v}}} already given at line {first_seen[(u, v)]}", lineno
            )
        first_seen[(u, v)] = lineno
        edges.append((u, v))
    if d is None:
        raise GraphFormatError("malformed line", "missing vertex count")
    touched = {x for e in edges for x in e}
    for v in range(1, d + 1):
        if v not in touched:
            raise GraphFormatError("isolated vertex", f"vertex {v} has no incident edge")
    return Graph(d, edges)


def format_graph(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def _is_int(token: str) -> bool:
    return token.lstrip("+-").isdigit()


# ---------------------------------------------------------------------------
# structure


def _components_of(vertices: Iterable[int], adj: tuple[frozenset[int], ...]) -> list[list[int]]:
    allowed = set(vertices)
    comps: list[list[int]] = []
    seen: set[int] = set()
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = []
        queue = deque([s])
        seen.add(s)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by least vertex."""
    return _components_of(g.vertices, g.adj)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("graph must be connected")


def bipartition(g: Graph) -> Bipartition | None:
    """Two-colouring of ``g``, or None if some component holds an odd cycle.

    In each component the least vertex goes to ``part1``.
    """
    colour: dict[int, int] = {}
    for comp in connected_components(g):
        colour[comp[0]] = 0
        queue = deque([comp[0]])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return Bipartition(
        frozenset(v for v, c in colour.items() if c == 0),
        frozenset(v for v, c in colour.items() if c == 1),
    )


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bipartite_component_count(g: Graph) -> int:
    count = 0
    for comp in connected_components(g):
        if is_bipartite(induced_subgraph(g, comp).graph):
            count += 1
    return count


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Block:
    """Induced subgraph relabelled to ``1..k`` in increasing order of the original labels."""
    verts = tuple(sorted(set(vertices)))
    index = {v: i + 1 for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Block(Graph(len(verts), edges), verts)


def blocks(g: Graph) -> list[Block]:
    """Biconnected components; a bridge is a block with a single edge."""
    require_connected(g)
    comps = nx.biconnected_components(g.to_networkx())
    return sorted((induced_subgraph(g, c) for c in comps), key=lambda b: b.vertices)


def is_ordinary(g: Graph, v: int) -> bool:
    """True when deleting ``v`` leaves a connected graph."""
    rest = [w for w in g.vertices if w != v]
    return len(_components_of(rest, g.adj)) <= 1


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(is_ordinary(g, v) for v in g.vertices)


def is_regular(g: Graph) -> bool:
    return len({g.degree(v) for v in g.vertices}) == 1


def is_hamiltonian(g: Graph) -> bool:
    """Exact backtracking search for a Hamilton cycle."""
    config.check_search_edges(g.num_edges, "is_hamiltonian")
    if g.n < 3:
        return False
    if not is_connected(g) or any(g.degree(v) < 2 for v in g.vertices):
        return False
    full = (1 << (g.n + 1)) - 2
    start = 1
    adj = g.adj

    def extend(u: int, visited: int) -> bool:
        if visited == full:
            return start in adj[u]
        for w in sorted(adj[u]):
            if not visited >> w & 1 and extend(w, visited | 1 << w):
                return True
        return False

    return extend(start, 1 << start)


# ---------------------------------------------------------------------------
# independent sets


def independent_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every non-empty independent set exactly once, as sorted tuples.

    Order is depth-first lexicographic: ``(1,), (1, 3), (1, 3, 5), ...``.
    """
    config.check_vertices(g.n, "independent_sets")
    masks = g.adj_mask

    def extend(current: list[int], blocked: int, start: int) -> Iterator[tuple[int, ...]]:
        for v in range(start, g.n + 1):
            if blocked >> v & 1:
                continue
            current.append(v)
            yield tuple(current)
            yield from extend(current, blocked | masks[v], v + 1)
            current.pop()

    yield from extend([], 0, 1)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(not (g.adj[v] & vs) for v in vs)


def neighborhood(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """All vertices adjacent to at least one member of ``vertices``."""
    out: set[int] = set()
    for v in vertices:
        out |= g.adj[v]
    return frozenset(out)


def bridge_edges(g: Graph, t: Iterable[int]) -> list[Edge]:
    """Edges of the bipartite graph joining ``t`` to its neighbourhood."""
    ts = frozenset(t)
    if not is_independent(g, ts):
        raise GraphError(f"{sorted(ts)} is not an independent set")
    return [(u, v) for u, v in g.edges if u in ts or v in ts]


def bridge_graph(g: Graph, t: Iterable[int]) -> Block:
    """The bipartite graph on T and N(T) whose edges join T to N(T).

    Returned relabelled, with the original labels kept in ``Block.vertices``.
    """
    ts = frozenset(t)
    edges = bridge_edges(g, ts)
    verts = tuple(sorted(ts | neighborhood(g, ts)))
    index = {v: i + 1 for i, v in enumerate(verts)}
    return Block(Graph(len(verts), [(index[u], index[v]) for u, v in edges]), verts)


def is_acceptable(g: Graph, parts: Bipartition, t: Iterable[int]) -> bool:
    """Whether ``t`` (inside ``parts.part1``) indexes an acceptable set.

    Both B(T) and the graph left after deleting its vertices must be connected,
    and the latter must keep at least one edge.
    """
    ts = frozenset(t)
    if not ts:
        raise GraphError("acceptable-set candidate must be non-empty")
    if not ts <= parts.part1:
        raise GraphError(f"{sorted(ts)} is not inside part1")
    b = bridge_graph(g, ts)
    if not is_connected(b.graph):
        return False
    rest = set(g.vertices) - set(b.vertices)
    if not rest:
        return False
    if not any(u in rest and v in rest for u, v in g.edges):
        return False
    return len(_components_of(rest, g.adj)) == 1


# ---------------------------------------------------------------------------
# matchings


def _perfect_matching_on(g: Graph, mask: int) -> bool:
    """Exact perfect-matching test on the vertex subset encoded by ``mask``."""
    masks = g.adj_mask

    @lru_cache(maxsize=None)
    def solve(rest: int) -> bool:
        if rest == 0:
            return True
        low = rest & -rest
        v = low.bit_length() - 1
        options = masks[v] & rest
        while options:
            bit = options & -options
            if solve(rest & ~low & ~bit):
                return True
            options ^= bit
        return False

    if bin(mask).count("1") % 2:
        return False
    return solve(mask)


def has_perfect_matching(g: Graph) -> bool:
    config.check_vertices(g.n, "has_perfect_matching")
    return _perfect_matching_on(g, (1 << (g.n + 1)) - 2)


def is_matching_covered(g: Graph) -> bool:
    """Connected, and every edge lies in some perfect matching."""
    config.check_vertices(g.n, "is_matching_covered")
    if not is_connected(g):
        return False
    full = (1 << (g.n + 1)) - 2
    return all(_perfect_matching_on(g, full & ~(1 << u) & ~(1 << v)) for u, v in g.edges)
