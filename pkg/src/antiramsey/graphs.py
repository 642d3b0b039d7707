"""Graph and edge-coloring data model plus the rainbow-path checker.

The central predicate is :func:`is_pk_free`: an edge coloring is P_k-free when
no simple path with k edges carries k pairwise-distinct colors.  Everything
else in the package (exact search, tree DP, approximation algorithms,
hardness-instance generators) builds on the types and checks defined here.

Graphs are immutable, simple, and undirected.  Edges carry stable dense
indices 0..m-1 in construction order; colorings address edges by index.
Color tokens are opaque strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Union

from .errors import GraphFormatError

Edge = tuple[int, int]


def _normalized(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with stable edge indices.

    Edge endpoints are stored normalized (smaller endpoint first); use
    :meth:`from_edges` to build from arbitrarily oriented pairs.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        seen: set[Edge] = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not normalized (u < v required)")
            if not 0 <= u < self.vertex_count or not v < self.vertex_count:
                raise ValueError(f"edge ({u}, {v}) out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(vertex_count, tuple(_normalized(u, v) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_index(self, u: int, v: int) -> int:
        return self._edge_index[_normalized(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return _normalized(u, v) in self._edge_index

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, (neighbor, edge index) pairs sorted by neighbor."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @cached_property
    def _csr(self) -> tuple[list[int], list[int], list[int]]:
        # Flattened adjacency (starts, neighbors, edge ids) for the hot DFS
        # in the rainbow-path search; avoids tuple indirection per step.
        starts = [0]
        nbrs: list[int] = []
        eids: list[int] = []
        for row in self.adjacency:
            for w, ei in row:
                nbrs.append(w)
                eids.append(ei)
            starts.append(len(nbrs))
        return starts, nbrs, eids

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return max(len(row) for row in self.adjacency)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return tuple(ei for _, ei in self.adjacency[v])

    def connected_components(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Components as (sorted vertices, sorted edge indices), in order of
        smallest contained vertex."""
        seen = [False] * self.vertex_count
        out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        for root in range(self.vertex_count):
            if seen[root]:
                continue
            stack = [root]
            seen[root] = True
            verts = []
            eidx: set[int] = set()
            while stack:
                v = stack.pop()
                verts.append(v)
                for w, ei in self.adjacency[v]:
                    eidx.add(ei)
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append((tuple(sorted(verts)), tuple(sorted(eidx))))
        return out


def path_graph(edge_count: int) -> Graph:
    """Path with `edge_count` edges on vertices 0..edge_count."""
    return Graph(edge_count + 1, tuple((i, i + 1) for i in range(edge_count)))


def cycle_graph(length: int) -> Graph:
    if length < 3:
        raise ValueError("cycle needs length >= 3")
    edges = [(i, i + 1) for i in range(length - 1)] + [(0, length - 1)]
    return Graph.from_edges(length, edges)


def star_graph(leaf_count: int) -> Graph:
    """Star K_{1,leaf_count} with the center at vertex 0."""
    return Graph(leaf_count + 1, tuple((0, i) for i in range(1, leaf_count + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_edges(a + b, edges)


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of color tokens to edge indices (position = index)."""

    tokens: tuple[str, ...]

    def token(self, edge_index: int) -> str:
        return self.tokens[edge_index]

    def as_dict(self) -> dict[int, str]:
        return dict(enumerate(self.tokens))

    @classmethod
    def from_map(cls, graph: Graph, mapping: Mapping[int, str]) -> "EdgeColoring":
        if set(mapping) != set(range(graph.edge_count)):
            raise ValueError("coloring domain must equal the full edge set")
        return cls(tuple(mapping[i] for i in range(graph.edge_count)))

    @classmethod
    def constant(cls, graph: Graph, token: str = "0") -> "EdgeColoring":
        return cls((token,) * graph.edge_count)


@dataclass(frozen=True)
class PartialColoring:
    """Partial assignment of color tokens to edge indices.

    The mapping is stored as given; treat instances as immutable.
    """

    tokens: Mapping[int, str] = field(default_factory=dict)

    def domain(self) -> frozenset[int]:
        return frozenset(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class PrecoloredInstance:
    """Graph whose edges split into fixed-token edges and free edges."""

    graph: Graph
    coloring: PartialColoring

    def __post_init__(self) -> None:
        for ei in self.coloring.tokens:
            if not 0 <= ei < self.graph.edge_count:
                raise ValueError(f"precolored edge index {ei} out of range")

    def uncolored_edges(self) -> tuple[int, ...]:
        dom = self.coloring.domain()
        return tuple(i for i in range(self.graph.edge_count) if i not in dom)


Coloring = Union[EdgeColoring, PartialColoring]


@dataclass(frozen=True)
class SimplePath:
    """Simple path as a vertex sequence in canonical orientation.

    Canonical means the first vertex id is smaller than the last, so each
    undirected path appears exactly once.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise ValueError("a path needs at least one edge")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")
        if self.vertices[0] > self.vertices[-1]:
            raise ValueError("path not in canonical orientation")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def edge_indices(self, graph: Graph) -> tuple[int, ...]:
        vs = self.vertices
        return tuple(graph.edge_index(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


class VertexRole(Enum):
    MONOCHROME = "monochrome"
    RAINBOW = "rainbow"
    MIXED = "mixed"
    ISOLATED = "isolated"


def enumerate_paths(graph: Graph, k: int) -> list[SimplePath]:
    """All simple paths with exactly k edges, canonical, lexicographic order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out: list[SimplePath] = []
    adj = graph.adjacency
    visited = [False] * graph.vertex_count
    path: list[int] = []

    def extend(v: int) -> None:
        if len(path) == k + 1:
            if path[0] < path[-1]:
                out.append(SimplePath(tuple(path)))
            return
        for w, _ in adj[v]:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            extend(w)
            path.pop()
            visited[w] = False

    for start in range(graph.vertex_count):
        visited[start] = True
        path.append(start)
        extend(start)
        path.pop()
        visited[start] = False
    out.sort(key=lambda p: p.vertices)
    return out


def has_path_of_length(graph: Graph, k: int) -> bool:
    """Whether any simple path with exactly k edges exists."""
    return find_rainbow_path(graph, EdgeColoring(tuple(str(i) for i in range(graph.edge_count))), k) is not None


def _color_ids(graph: Graph, coloring: EdgeColoring) -> list[int]:
    if len(coloring.tokens) != graph.edge_count:
        raise ValueError("coloring is not total on the graph")
    ids: dict[str, int] = {}
    out = []
    for tok in coloring.tokens:
        if tok not in ids:
            ids[tok] = len(ids)
        out.append(ids[tok])
    return out


def find_rainbow_path(graph: Graph, coloring: EdgeColoring, k: int) -> tuple[int, ...] | None:
    """A simple path with k edges of pairwise-distinct colors, or None.

    DFS over color-distinct path prefixes: a prefix with a repeated color can
    never extend to a rainbow path, so the search space stays small for
    colorings that are valid or nearly so.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > graph.edge_count:
        return None
    colors = _color_ids(graph, coloring)
    starts, nbrs, eids = graph._csr
    n = graph.vertex_count
    visited = bytearray(n)
    path = [0] * (k + 1)
    used: list[int] = []

    def dfs(v: int, depth: int) -> bool:
        if depth == k:
            return True
        for idx in range(starts[v], starts[v + 1]):
            w = nbrs[idx]
            if visited[w]:
                continue
            c = colors[eids[idx]]
            if c in used:
                continue
            visited[w] = 1
            used.append(c)
            path[depth + 1] = w
            if dfs(w, depth + 1):
                return True
            used.pop()
            visited[w] = 0
        return False

    for s in range(n):
        visited[s] = 1
        path[0] = s
        if dfs(s, 0):
            vs = path[: k + 1]
            if vs[0] > vs[-1]:
                vs.reverse()
            return tuple(vs)
        visited[s] = 0
    return None


def is_pk_free(graph: Graph, coloring: EdgeColoring, k: int) -> bool:
    """True iff no simple path with k edges has k pairwise-distinct colors."""
    return find_rainbow_path(graph, coloring, k) is None


def distinct_color_count(coloring: Coloring) -> int:
    """Number of distinct tokens in a total or partial coloring."""
    if isinstance(coloring, EdgeColoring):
        return len(set(coloring.tokens))
    return len(set(coloring.tokens.values()))


def color_classes_connected(graph: Graph, coloring: EdgeColoring) -> bool:
    """True iff every color class induces a connected edge subgraph."""
    if len(coloring.tokens) != graph.edge_count:
        raise ValueError("coloring is not total on the graph")
    classes: dict[str, list[int]] = {}
    for ei, tok in enumerate(coloring.tokens):
        classes.setdefault(tok, []).append(ei)
    for eidxs in classes.values():
        if not _edge_set_connected(graph, eidxs):
            return False
    return True


def _edge_set_connected(graph: Graph, edge_indices: list[int]) -> bool:
    if len(edge_indices) <= 1:
        return True
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ei in edge_indices:
        u, v = graph.edges[ei]
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    roots = {find(x) for x in parent}
    return len(roots) == 1


def vertex_role(graph: Graph, coloring: EdgeColoring, v: int) -> VertexRole:
    """Classify a vertex by its incident edge colors.

    Degree-1 vertices satisfy both the monochrome and the rainbow condition;
    they report monochrome for determinism.
    """
    if not 0 <= v < graph.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    incident = graph.incident_edges(v)
    if not incident:
        return VertexRole.ISOLATED
    toks = [coloring.tokens[ei] for ei in incident]
    distinct = len(set(toks))
    if distinct == 1:
        return VertexRole.MONOCHROME
    if distinct == len(toks):
        return VertexRole.RAINBOW
    return VertexRole.MIXED


# ---------------------------------------------------------------------------
# Text format
#
#   # comment
#   n <vertex_count>
#   e <u> <v> [token]
#
# Vertices are 0-based decimal; a token marks the edge as precolored.


def parse_graph_text(text: str) -> tuple[Graph, PartialColoring]:
    vertex_count: int | None = None
    edges: list[tuple[int, int]] = []
    tokens: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "n":
            if vertex_count is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'n' line")
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'n <vertex_count>'")
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
        elif kind == "e":
            if vertex_count is None:
                raise GraphFormatError(f"line {lineno}: 'e' line before 'n' line")
            if len(parts) not in (3, 4):
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v> [token]'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad endpoints") from None
            if len(parts) == 4:
                tokens[len(edges)] = parts[3]
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {kind!r}")
    if vertex_count is None:
        raise GraphFormatError("missing 'n' line")
    try:
        graph = Graph.from_edges(vertex_count, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    return graph, PartialColoring(tokens)


def format_graph_text(graph: Graph, coloring: Coloring | None = None) -> str:
    tokens: Mapping[int, str]
    if coloring is None:
        tokens = {}
    elif isinstance(coloring, EdgeColoring):
        tokens = coloring.as_dict()
    else:
        tokens = coloring.tokens
    lines = [f"n {graph.vertex_count}"]
    for i, (u, v) in enumerate(graph.edges):
        if i in tokens:
            tok = tokens[i]
            if not tok or any(ch.isspace() for ch in tok):
                raise ValueError(f"token {tok!r} not writable (empty or whitespace)")
            lines.append(f"e {u} {v} {tok}")
        else:
            lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"
