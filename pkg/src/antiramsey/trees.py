"""Linear-time exact solver for rainbow-P_3-free colorings of forests.

The dynamic program tracks two states per vertex v of a rooted tree:

* mono[v]    -- max distinct colors on subtree(v) edges plus the color class
                of the edge toward the parent, when v is monochrome;
* rainbow[v] -- the same quantity when v's incident edges are pairwise
                distinct.

A rainbow vertex forces all its children monochrome (otherwise some path
through it would be rainbow), so with t = parent-edge color included:

    mono[v]    = 1 + sum over children u of (max(mono[u], rainbow[u]) - 1)
    rainbow[v] = 1 + sum over children u of mono[u]

with mono = rainbow = 1 at leaves.  The root has no parent edge: its mono
value stays as above, its rainbow value drops the leading 1.  The answer for
a tree is max of the two root values; forests sum over components.

`normalize_color_connected` and `improve_to_mono_rainbow` are the
constructive counterparts: they rewrite an arbitrary valid coloring into one
whose color classes are connected, and then into one where every vertex is
monochrome or rainbow, never losing colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidColoringError, NotAForestError
from .exact import SearchStats, SolveResult
from .graphs import (
    EdgeColoring,
    Graph,
    VertexRole,
    color_classes_connected,
    is_pk_free,
    vertex_role,
)


@dataclass
class TreeDpTable:
    """DP state for one tree component rooted at `root`.

    `preferred[v]` records which state attains max(mono[v], rainbow[v])
    (monochrome wins ties), which is all the reconstruction needs.
    """

    root: int
    vertices: tuple[int, ...]
    parent: dict[int, int]  # absent for the root
    children: dict[int, list[int]]
    preorder: tuple[int, ...]
    mono: dict[int, int]
    rainbow: dict[int, int]
    preferred: dict[int, str]  # "mono" | "rainbow"

    @property
    def value(self) -> int:
        if not self.children[self.root] and len(self.vertices) == 1:
            return 0
        root_mono = self.mono[self.root]
        root_rainbow = sum(self.mono[u] for u in self.children[self.root])
        return max(root_mono, root_rainbow)


def _forest_components(graph: Graph) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    comps = graph.connected_components()
    for verts, eidxs in comps:
        if len(eidxs) >= len(verts):
            raise NotAForestError(
                f"component containing vertex {verts[0]} has a cycle"
            )
    return comps


def tree_dp(graph: Graph) -> list[TreeDpTable]:
    """DP tables for every component of a forest, rooted at the smallest
    vertex of each component."""
    tables = []
    for verts, _ in _forest_components(graph):
        tables.append(_dp_for_component(graph, verts))
    return tables


def _dp_for_component(graph: Graph, verts: tuple[int, ...]) -> TreeDpTable:
    root = verts[0]
    parent: dict[int, int] = {}
    children: dict[int, list[int]] = {v: [] for v in verts}
    preorder: list[int] = []
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        preorder.append(v)
        for w in reversed(graph.neighbors(v)):  # ascending preorder
            if w in seen:
                continue
            seen.add(w)
            parent[w] = v
            children[v].append(w)
            stack.append(w)
    for v in children:
        children[v].sort()
    mono: dict[int, int] = {}
    rainbow: dict[int, int] = {}
    preferred: dict[int, str] = {}
    for v in reversed(preorder):
        kids = children[v]
        mono[v] = 1 + sum(max(mono[u], rainbow[u]) - 1 for u in kids)
        rainbow[v] = 1 + sum(mono[u] for u in kids)
        preferred[v] = "mono" if mono[v] >= rainbow[v] else "rainbow"
    return TreeDpTable(
        root=root,
        vertices=verts,
        parent=parent,
        children=children,
        preorder=tuple(preorder),
        mono=mono,
        rainbow=rainbow,
        preferred=preferred,
    )


def carnit(graph: Graph) -> SolveResult:
    """Exact anti-Ramsey value ar(T, P_3) for a forest, with a witness.

    Runs in time linear in the number of vertices; component values sum
    since no path crosses components.
    """
    tables = tree_dp(graph)
    tokens = [""] * graph.edge_count
    counter = _count_from(0)
    total = 0
    for table in tables:
        total += table.value
        _reconstruct(graph, table, tokens, counter)
    witness = EdgeColoring(tuple(tokens))
    assert is_pk_free(graph, witness, 3)
    return SolveResult(value=total, witness=witness, stats=SearchStats())


def _count_from(start: int) -> Iterator[str]:
    i = start
    while True:
        yield f"t{i}"
        i += 1


def _reconstruct(
    graph: Graph, table: TreeDpTable, tokens: list[str], fresh: Iterator[str]
) -> None:
    root = table.root
    kids = table.children[root]
    if not kids:
        return
    root_rainbow = sum(table.mono[u] for u in kids)
    if table.mono[root] >= root_rainbow:
        color = next(fresh)
        for u in kids:
            tokens[graph.edge_index(root, u)] = color
            _color_subtree(graph, table, u, table.preferred[u], color, tokens, fresh)
    else:
        for u in kids:
            color = next(fresh)
            tokens[graph.edge_index(root, u)] = color
            _color_subtree(graph, table, u, "mono", color, tokens, fresh)


def _color_subtree(
    graph: Graph,
    table: TreeDpTable,
    v: int,
    state: str,
    parent_color: str,
    tokens: list[str],
    fresh: Iterator[str],
) -> None:
    # parent edge of v is already colored parent_color
    for u in table.children[v]:
        if state == "mono":
            tokens[graph.edge_index(v, u)] = parent_color
            _color_subtree(graph, table, u, table.preferred[u], parent_color, tokens, fresh)
        else:
            color = next(fresh)
            tokens[graph.edge_index(v, u)] = color
            _color_subtree(graph, table, u, "mono", color, tokens, fresh)


# ---------------------------------------------------------------------------
# Constructive normalization


def _require_valid(graph: Graph, coloring: EdgeColoring) -> None:
    if len(coloring.tokens) != graph.edge_count:
        raise InvalidColoringError("coloring is not total on the graph")
    if not is_pk_free(graph, coloring, 3):
        raise InvalidColoringError("coloring admits a rainbow path of length 3")


def _class_components(
    graph: Graph, tokens: list[str], token: str
) -> list[list[int]]:
    """Connected components (edge-index lists) of one color class."""
    class_edges = [ei for ei, tok in enumerate(tokens) if tok == token]
    adj: dict[int, list[tuple[int, int]]] = {}
    for ei in class_edges:
        u, v = graph.edges[ei]
        adj.setdefault(u, []).append((v, ei))
        adj.setdefault(v, []).append((u, ei))
    seen_edges: set[int] = set()
    comps: list[list[int]] = []
    for ei in class_edges:
        if ei in seen_edges:
            continue
        comp: list[int] = []
        stack = [ei]
        seen_edges.add(ei)
        while stack:
            e = stack.pop()
            comp.append(e)
            for x in graph.edges[e]:
                for _, e2 in adj[x]:
                    if e2 not in seen_edges:
                        seen_edges.add(e2)
                        stack.append(e2)
        comps.append(sorted(comp))
    return comps


def normalize_color_connected(graph: Graph, coloring: EdgeColoring) -> EdgeColoring:
    """Recolor a valid P_3-free forest coloring so color classes connect.

    Within each rooted tree, every component of a color class other than the
    first one met in preorder adopts the color of the edge above it; the
    updates for one color are applied simultaneously and the whole procedure
    iterates to a fixpoint.  The token set (hence the distinct count) and
    validity are preserved.

    A color that is the only one on two whole components of a forest cannot
    be reconnected without changing the token set; such classes are left
    split across components (they are still connected inside each tree).
    """
    tables = tree_dp(graph)  # also validates forest-ness
    _require_valid(graph, coloring)
    parent_edge: dict[int, int] = {}
    pre_index: dict[int, int] = {}
    counter = 0
    for table in tables:
        for v in table.preorder:
            pre_index[v] = counter
            counter += 1
            if v in table.parent:
                parent_edge[v] = graph.edge_index(v, table.parent[v])
    tokens = list(coloring.tokens)
    settled: set[str] = set()  # tokens whose split cannot be repaired
    while True:
        progress = False
        for token in _tokens_by_first_use(tokens):
            if token in settled:
                continue
            comps = _class_components(graph, tokens, token)
            if len(comps) <= 1:
                continue
            comps.sort(key=lambda comp: min(pre_index[x] for e in comp for x in graph.edges[e]))
            updates: list[tuple[list[int], str]] = []
            for comp in comps[1:]:
                top = min(
                    (x for e in comp for x in graph.edges[e]), key=pre_index.__getitem__
                )
                if top not in parent_edge:
                    continue  # tree root: whole-component color, not repairable
                updates.append((comp, tokens[parent_edge[top]]))
            if not updates:
                settled.add(token)
                continue
            for comp, new_token in updates:
                for ei in comp:
                    tokens[ei] = new_token
            progress = True
            break
        if not progress:
            break
    result = EdgeColoring(tuple(tokens))
    assert is_pk_free(graph, result, 3)
    assert set(result.tokens) == set(coloring.tokens)
    return result


def _tokens_by_first_use(tokens: list[str]) -> list[str]:
    seen: list[str] = []
    for tok in tokens:
        if tok not in seen:
            seen.append(tok)
    return seen


def improve_to_mono_rainbow(graph: Graph, coloring: EdgeColoring) -> EdgeColoring:
    """Lift a valid color-connected forest coloring to one where every
    vertex is monochrome or rainbow, gaining a color per rewrite step.

    A mixed vertex u has two neighbors x, y with equal edge colors and a
    third with a different one; the u-x edge together with that color's
    entire portion below x is recolored with a fresh token.  Validity and
    class connectivity are preserved, and the distinct count grows by one
    per step, so the loop ends after at most |E| steps.
    """
    tree_dp(graph)  # forest check
    _require_valid(graph, coloring)
    if not color_classes_connected(graph, coloring):
        raise InvalidColoringError("coloring must have connected color classes")
    tokens = list(coloring.tokens)
    fresh = _fresh_tokens(set(tokens))
    while True:
        current = EdgeColoring(tuple(tokens))
        mixed = next(
            (
                v
                for v in range(graph.vertex_count)
                if vertex_role(graph, current, v) is VertexRole.MIXED
            ),
            None,
        )
        if mixed is None:
            break
        _split_repeated_color(graph, tokens, mixed, next(fresh))
    result = EdgeColoring(tuple(tokens))
    assert is_pk_free(graph, result, 3)
    assert color_classes_connected(graph, result)
    return result


def _fresh_tokens(taken: set[str]) -> Iterator[str]:
    i = 0
    while True:
        cand = f"t{i}"
        if cand not in taken:
            taken.add(cand)
            yield cand
        i += 1


def _split_repeated_color(graph: Graph, tokens: list[str], u: int, new_token: str) -> None:
    incident = graph.incident_edges(u)
    counts: dict[str, int] = {}
    for ei in incident:
        counts[tokens[ei]] = counts.get(tokens[ei], 0) + 1
    x = edge_ux = None
    for w, ei in graph.adjacency[u]:
        if counts[tokens[ei]] >= 2:
            x, edge_ux = w, ei
            break
    assert x is not None and edge_ux is not None
    repeated = tokens[edge_ux]
    # vertices on x's side of the u-x edge
    side = {x}
    stack = [x]
    while stack:
        v = stack.pop()
        for w, _ in graph.adjacency[v]:
            if w != u and w not in side:
                side.add(w)
                stack.append(w)
    tokens[edge_ux] = new_token
    for ei, tok in enumerate(tokens):
        if tok == repeated:
            a, b = graph.edges[ei]
            if a in side and b in side:
                tokens[ei] = new_token
