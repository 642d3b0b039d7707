"""Shared test utilities: independent oracles and instance generators.

The oracles here deliberately avoid the library's solver code paths: the
naive anti-Ramsey oracle enumerates every canonical partition and filters
with the checker; the Hamiltonian-path and SAT oracles are plain brute
force.
"""

from __future__ import annotations

import itertools
import random

from antiramsey import EdgeColoring, Graph, enumerate_paths


def naive_ar(graph: Graph, k: int) -> int:
    """Unpruned maximum over all canonical edge partitions."""
    m = graph.edge_count
    if m == 0:
        return 0
    best = 0
    labels = [0] * m

    def rec(i: int, open_blocks: int) -> None:
        nonlocal best
        if i == m:
            coloring = EdgeColoring(tuple(str(x) for x in labels))
            if naive_is_pk_free(graph, coloring, k):
                best = max(best, open_blocks)
            return
        for lab in range(open_blocks + 1):
            labels[i] = lab
            rec(i + 1, open_blocks + (1 if lab == open_blocks else 0))

    rec(0, 0)
    return best


def naive_is_pk_free(graph: Graph, coloring: EdgeColoring, k: int) -> bool:
    """Double loop over all enumerated paths; independent of the DFS checker."""
    for path in enumerate_paths(graph, k):
        toks = [coloring.tokens[ei] for ei in path.edge_indices(graph)]
        if len(set(toks)) == k:
            return False
    return True


def has_hamiltonian_path(graph: Graph) -> bool:
    n = graph.vertex_count
    if n <= 1:
        return True
    adj = [set(graph.neighbors(v)) for v in range(n)]

    def extend(v: int, visited: set[int]) -> bool:
        if len(visited) == n:
            return True
        for w in adj[v]:
            if w not in visited:
                visited.add(w)
                if extend(w, visited):
                    return True
                visited.remove(w)
        return False

    return any(extend(s, {s}) for s in range(n))


def brute_force_satisfiable(clauses: list[tuple[int, int, int]]) -> dict[int, bool] | None:
    """A satisfying assignment over the occurring variables, or None."""
    variables = sorted({abs(l) for cl in clauses for l in cl})
    for bits in itertools.product([False, True], repeat=len(variables)):
        assignment = dict(zip(variables, bits))
        if all(
            any((l > 0) == assignment[abs(l)] for l in cl) for cl in clauses
        ):
            return assignment
    return None


def random_graph(rng: random.Random, max_vertices: int = 7, max_edges: int = 8) -> Graph:
    n = rng.randint(1, max_vertices)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    m = rng.randint(0, min(max_edges, len(pairs)))
    return Graph.from_edges(n, sorted(pairs[:m]))


def random_connected_graph(
    rng: random.Random, min_vertices: int = 2, max_vertices: int = 6, max_edges: int = 8
) -> Graph:
    n = rng.randint(min_vertices, max_vertices)
    edges = {(min(u, v), max(u, v)) for u, v in ((rng.randrange(v), v) for v in range(1, n))}
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    rng.shuffle(pairs)
    while pairs and len(edges) < min(max_edges, rng.randint(n - 1, max_edges)):
        edges.add(pairs.pop())
    return Graph.from_edges(n, sorted(edges))


def random_tree(rng: random.Random, n: int) -> Graph:
    """Random attachment tree; edge order keeps adjacent edges close."""
    return Graph.from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_degree_bounded_graph(
    rng: random.Random, n: int, max_edges: int, max_degree: int
) -> Graph:
    degree = [0] * n
    edges: set[tuple[int, int]] = set()
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if len(edges) >= max_edges:
            break
        if degree[u] < max_degree and degree[v] < max_degree:
            edges.add((u, v))
            degree[u] += 1
            degree[v] += 1
    return Graph.from_edges(n, sorted(edges))


def all_graphs(n: int, max_edges: int | None = None):
    """Every labeled graph on n vertices (optionally capped in size)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for r in range(len(pairs) + 1):
        if max_edges is not None and r > max_edges:
            break
        for subset in itertools.combinations(pairs, r):
            yield Graph.from_edges(n, subset)


def random_valid_tree_coloring(
    rng: random.Random, graph: Graph, k: int = 3, max_tries: int = 400
) -> EdgeColoring | None:
    """Rejection-sampled valid coloring, biased toward few blocks."""
    from antiramsey import is_pk_free

    m = graph.edge_count
    for _ in range(max_tries):
        labels: list[int] = []
        open_blocks = 0
        for _ in range(m):
            # Chinese-restaurant style bias: mostly reuse open blocks.
            if open_blocks == 0 or rng.random() < 1.5 / (open_blocks + 2):
                labels.append(open_blocks)
                open_blocks += 1
            else:
                labels.append(rng.randrange(open_blocks))
        coloring = EdgeColoring(tuple(str(x) for x in labels))
        if is_pk_free(graph, coloring, k):
            return coloring
    return None


def nonisomorphic_trees_up_to(max_vertices: int) -> list[Graph]:
    """All non-isomorphic trees with <= max_vertices vertices (the single
    vertex included)."""
    import networkx as nx

    out = [Graph(1, ())]
    for n in range(2, max_vertices + 1):
        for t in nx.nonisomorphic_trees(n):
            out.append(Graph.from_edges(n, sorted(tuple(sorted(e)) for e in t.edges())))
    return out
