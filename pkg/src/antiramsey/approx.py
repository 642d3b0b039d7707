"""Polynomial-time approximations for rainbow-P_3-free coloring.

`greedy_bounded_degree` mints one fresh color per round and floods the
2-neighborhood of the picked edge with a shared token, giving at least
ceil(m / (2*Delta^2)) colors.  `bipartite_star` colors all edges at each
vertex of the larger side with that vertex's own token, giving at least half
the optimum on bipartite graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import EmptyGraphError, NotBipartiteError
from .exact import SearchStats, SolveResult
from .graphs import EdgeColoring, Graph, is_pk_free

SHARED_TOKEN = "c0"


@dataclass(frozen=True)
class Bipartition:
    """Two disjoint vertex sets covering V with every edge crossing."""

    side_a: frozenset[int]
    side_b: frozenset[int]


def bipartition_via_bfs(graph: Graph) -> Bipartition:
    """2-color each component by BFS parity; roots land in side A."""
    side = [-1] * graph.vertex_count
    for root in range(graph.vertex_count):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, _ in graph.adjacency[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    raise NotBipartiteError(f"odd cycle through edge ({v}, {w})")
    return Bipartition(
        side_a=frozenset(v for v in range(graph.vertex_count) if side[v] == 0),
        side_b=frozenset(v for v in range(graph.vertex_count) if side[v] == 1),
    )


def _validate_bipartition(graph: Graph, bp: Bipartition) -> None:
    if bp.side_a & bp.side_b:
        raise NotBipartiteError("sides overlap")
    if bp.side_a | bp.side_b != set(range(graph.vertex_count)):
        raise NotBipartiteError("sides do not cover the vertex set")
    for u, v in graph.edges:
        if (u in bp.side_a) == (v in bp.side_a):
            raise NotBipartiteError(f"edge ({u}, {v}) does not cross the sides")


def greedy_bounded_degree(graph: Graph) -> SolveResult:
    """Greedy coloring: fresh token on the smallest uncolored edge, shared
    token on every uncolored edge touching the closed neighborhoods of its
    endpoints.  Output is always valid; edges given a fresh token are never
    recolored."""
    if graph.edge_count == 0:
        raise EmptyGraphError("greedy coloring needs at least one edge")
    tokens: list[str | None] = [None] * graph.edge_count
    order = sorted(range(graph.edge_count), key=lambda ei: graph.edges[ei])
    fresh_count = 0
    for ei in order:
        if tokens[ei] is not None:
            continue
        fresh_count += 1
        tokens[ei] = f"g{fresh_count}"
        u, v = graph.edges[ei]
        zone = {u, v}
        zone.update(graph.neighbors(u))
        zone.update(graph.neighbors(v))
        for x in zone:
            for _, ej in graph.adjacency[x]:
                if tokens[ej] is None:
                    tokens[ej] = SHARED_TOKEN
    coloring = EdgeColoring(tuple(tokens))  # type: ignore[arg-type]
    assert is_pk_free(graph, coloring, 3)
    return SolveResult(value=len(set(coloring.tokens)), witness=coloring, stats=SearchStats())


def bipartite_star(graph: Graph, bipartition: Bipartition | None = None) -> SolveResult:
    """One color per larger-side vertex: every edge takes the token of its
    endpoint on the side chosen for its component.  Distinct count equals
    the number of non-isolated chosen-side vertices, at least half the
    optimum."""
    bp = bipartition if bipartition is not None else bipartition_via_bfs(graph)
    _validate_bipartition(graph, bp)
    tokens = [""] * graph.edge_count
    for verts, eidxs in graph.connected_components():
        if not eidxs:
            continue
        in_a = [v for v in verts if v in bp.side_a]
        in_b = [v for v in verts if v in bp.side_b]
        chosen = set(in_a if len(in_a) >= len(in_b) else in_b)
        for ei in eidxs:
            u, v = graph.edges[ei]
            owner = u if u in chosen else v
            tokens[ei] = f"v{owner}"
    coloring = EdgeColoring(tuple(tokens))
    assert is_pk_free(graph, coloring, 3)
    return SolveResult(value=len(set(coloring.tokens)), witness=coloring, stats=SearchStats())
