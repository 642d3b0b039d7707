"""Exact anti-Ramsey solver: canonical set-partition search with pruning.

The search enumerates edge-set partitions encoded as restricted growth
strings (edge 0 opens block 0; edge i may reuse an open block or open block
max+1).  Two prunings keep desk-scale instances fast:

* rainbow pruning -- once a path of length k is fully colored with pairwise
  distinct blocks it can never become valid again, so the subtree dies;
* bound pruning -- a prefix whose open blocks plus remaining edges cannot
  beat the incumbent is skipped, and the block count is capped by the
  structural upper bound (|V| for k=3, otherwise c_k*|V|).

The precolored variant reuses the same machinery: every distinct fixed token
forms an immutable pre-merged block, and a free block may fuse with at most
one fixed class.  Reported values count all distinct colors, fixed tokens
included.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .errors import InstanceTooLargeError
from .graphs import (
    EdgeColoring,
    Graph,
    PrecoloredInstance,
    distinct_color_count,
    enumerate_paths,
    has_path_of_length,
    is_pk_free,
)
from .reductions import colors_per_vertex_coefficient

DEFAULT_MAX_UNCOLORED_EDGES = 16


@dataclass(frozen=True)
class SearchLimits:
    """Size and resource guards for the exact search.

    `workers` only matters with parallel=True; None means one worker per CPU
    (capped at 8).  A node budget forces sequential mode so that the reported
    best-found result stays deterministic.
    """

    max_uncolored_edges: int = DEFAULT_MAX_UNCOLORED_EDGES
    node_budget: int | None = None
    parallel: bool = False
    workers: int | None = None

    def __post_init__(self) -> None:
        if self.max_uncolored_edges < 0:
            raise ValueError("max_uncolored_edges must be >= 0")


@dataclass
class SearchStats:
    nodes: int = 0
    bound_prunes: int = 0
    rainbow_prunes: int = 0

    def add(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.bound_prunes += other.bound_prunes
        self.rainbow_prunes += other.rainbow_prunes

    def as_dict(self) -> dict[str, int]:
        return {
            "nodes": self.nodes,
            "bound_prunes": self.bound_prunes,
            "rainbow_prunes": self.rainbow_prunes,
        }


@dataclass(frozen=True)
class SolveResult:
    """Solver outcome.

    `value` is None only for infeasible precolored instances or when a node
    budget ran out before any completion was found.  When a witness is
    present it is total, valid, and uses exactly `value` distinct colors.
    """

    value: int | None
    witness: EdgeColoring | None
    stats: SearchStats = field(default_factory=SearchStats)
    exhausted: bool = False

    @property
    def feasible(self) -> bool:
        return self.value is not None


def upper_bound(graph: Graph, k: int) -> int:
    """Structural upper bound on ar(G, P_k): |V| for k=3, else c_k*|V|."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if k == 3:
        return graph.vertex_count
    return colors_per_vertex_coefficient(k) * graph.vertex_count


# ---------------------------------------------------------------------------
# Search core


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class _Space:
    """One prepared search: free edges in ascending index order, fixed
    classes pre-merged, and rainbow triggers grouped by the position that
    completes them."""

    k: int
    free_edges: tuple[int, ...]
    fixed_classes: int  # t: number of distinct fixed tokens
    preset: tuple[int, ...]  # per edge id: fixed class or -1
    triggers: tuple[tuple[tuple[int, ...], ...], ...]  # per position
    block_cap: int  # fixed_classes + fresh blocks <= block_cap


def _build_space(
    graph: Graph,
    k: int,
    free_edges: tuple[int, ...],
    fixed_label: dict[int, int],
    fixed_classes: int,
    block_cap: int,
) -> tuple[_Space, bool]:
    """Returns the space plus a flag: True when a fully-fixed rainbow path
    makes the instance infeasible outright."""
    preset = [-1] * graph.edge_count
    for ei, lab in fixed_label.items():
        preset[ei] = lab
    position = {ei: p for p, ei in enumerate(free_edges)}
    triggers: list[list[tuple[int, ...]]] = [[] for _ in free_edges]
    fixed_rainbow = False
    for path in enumerate_paths(graph, k):
        eidx = path.edge_indices(graph)
        free_pos = [position[e] for e in eidx if e in position]
        if free_pos:
            triggers[max(free_pos)].append(eidx)
        else:
            labs = [preset[e] for e in eidx]
            if len(set(labs)) == k:
                fixed_rainbow = True
    space = _Space(
        k=k,
        free_edges=free_edges,
        fixed_classes=fixed_classes,
        preset=tuple(preset),
        triggers=tuple(tuple(ts) for ts in triggers),
        block_cap=block_cap,
    )
    return space, fixed_rainbow


def _gen_prefixes(t: int, length: int) -> list[tuple[int, ...]]:
    """All canonical label prefixes of the given length, in lexicographic
    order.  Label t+j means "fresh block j"; a prefix may open fresh block
    j only after blocks 0..j-1."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], open_blocks: int) -> None:
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for lab in range(t + open_blocks + 1):
            prefix.append(lab)
            rec(prefix, open_blocks + (1 if lab == t + open_blocks else 0))
            prefix.pop()

    rec([], 0)
    return out


def _dfs(
    space: _Space,
    prefix: tuple[int, ...],
    node_budget: int | None,
) -> tuple[int | None, tuple[int, ...] | None, SearchStats, bool]:
    """Depth-first search over canonical completions of `prefix`.

    Returns (best total value, best label string, stats, budget exhausted).
    The first completion reaching the running best in lexicographic DFS
    order is kept, so the reported string is the lexicographically smallest
    optimum of this subtree.
    """
    m = len(space.free_edges)
    t = space.fixed_classes
    k = space.k
    colors = list(space.preset)
    triggers = space.triggers
    free = space.free_edges
    cap = space.block_cap
    stats = SearchStats()
    rgs = [0] * m
    best_val = -1
    best_rgs: tuple[int, ...] | None = None
    exhausted = False

    def path_rainbow_at(p: int) -> bool:
        for path in triggers[p]:
            dup = False
            for i in range(1, k):
                ci = colors[path[i]]
                for j in range(i):
                    if colors[path[j]] == ci:
                        dup = True
                        break
                if dup:
                    break
            if not dup:
                return True
        return False

    # Replay the prefix; a rainbow inside it kills the whole branch.
    open_blocks = 0
    for p, lab in enumerate(prefix):
        colors[free[p]] = lab
        rgs[p] = lab
        if lab == t + open_blocks:
            open_blocks += 1
        if path_rainbow_at(p):
            stats.rainbow_prunes += 1
            return None, None, stats, False

    def rec(p: int, open_blocks: int) -> None:
        nonlocal best_val, best_rgs
        if p == m:
            value = t + open_blocks
            if value > best_val:
                best_val = value
                best_rgs = tuple(rgs)
            return
        remaining = m - p - 1
        if t + open_blocks + 1 + remaining <= best_val:
            stats.bound_prunes += 1
            return
        e = free[p]
        # When reusing an existing block cannot beat the incumbent, only the
        # branch that opens a fresh block is worth exploring.
        first_label = 0
        if t + open_blocks + remaining <= best_val:
            first_label = t + open_blocks
            stats.bound_prunes += 1
        last_label = t + open_blocks if t + open_blocks < cap else t + open_blocks - 1
        for lab in range(first_label, last_label + 1):
            colors[e] = lab
            if path_rainbow_at(p):
                stats.rainbow_prunes += 1
                continue
            stats.nodes += 1
            if node_budget is not None and stats.nodes > node_budget:
                colors[e] = -1
                raise _BudgetExhausted
            rgs[p] = lab
            rec(p + 1, open_blocks + (1 if lab == t + open_blocks else 0))
        colors[e] = -1

    try:
        rec(len(prefix), open_blocks)
    except _BudgetExhausted:
        exhausted = True
    if best_rgs is None:
        return None, None, stats, exhausted
    return best_val, best_rgs, stats, exhausted


def _solve_branch(payload: tuple[_Space, tuple[int, ...]]):
    space, prefix = payload
    return _dfs(space, prefix, None)


def _solve_space(
    space: _Space, limits: SearchLimits
) -> tuple[int | None, tuple[int, ...] | None, SearchStats, bool]:
    """Solve one space, fanning out over top-level prefixes when parallel.

    Workers do not share an incumbent, so each branch's result depends only
    on the branch itself; the merge below is therefore independent of worker
    count and scheduling order.
    """
    m = len(space.free_edges)
    workers = limits.workers
    if workers is None:
        import os

        workers = min(os.cpu_count() or 1, 8)
    use_parallel = (
        limits.parallel and limits.node_budget is None and workers > 1 and m >= 6
    )
    if not use_parallel:
        return _dfs(space, (), limits.node_budget)

    length = 1
    while length < m and len(_gen_prefixes(space.fixed_classes, length)) < 2 * workers:
        length += 1
    prefixes = _gen_prefixes(space.fixed_classes, length)
    stats = SearchStats()
    best_val = -1
    best_rgs: tuple[int, ...] | None = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for value, rgs, branch_stats, _ in pool.map(
            _solve_branch, ((space, pref) for pref in prefixes)
        ):
            stats.add(branch_stats)
            if value is not None and value > best_val:
                best_val = value
                best_rgs = rgs
    if best_rgs is None:
        return None, None, stats, False
    return best_val, best_rgs, stats, False


# ---------------------------------------------------------------------------
# Public operations


def ar_exact(graph: Graph, k: int, limits: SearchLimits | None = None) -> SolveResult:
    """Maximum number of colors in a P_k-free edge coloring of `graph`.

    Connected components are independent (no path spans two components), so
    the optimum is the sum of per-component optima.  The witness is the
    coloring whose restricted growth string over edge indices is
    lexicographically smallest among all optima; its tokens are the block
    labels rendered as decimal strings.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    limits = limits or SearchLimits()
    if graph.edge_count > limits.max_uncolored_edges:
        raise InstanceTooLargeError(
            f"{graph.edge_count} edges exceed the limit of {limits.max_uncolored_edges}"
        )
    stats = SearchStats()
    exhausted = False
    budget_left = limits.node_budget
    # per edge: (component id, local block label); merged into a global
    # restricted growth string at the end
    block_of_edge: dict[int, tuple[int, int]] = {}
    total = 0
    for comp_id, (verts, eidxs) in enumerate(graph.connected_components()):
        if not eidxs:
            continue
        sub_vertices = set(verts)
        comp_ub = len(verts) if k == 3 else colors_per_vertex_coefficient(k) * len(verts)
        comp_graph, local_edges = _component_graph(graph, sub_vertices, eidxs)
        if not has_path_of_length(comp_graph, k):
            # No P_k at all: every coloring is valid, all-distinct is the
            # unique optimum.
            total += len(eidxs)
            for j, ei in enumerate(eidxs):
                block_of_edge[ei] = (comp_id, j)
            continue
        space, _ = _build_space(
            comp_graph,
            k,
            tuple(range(comp_graph.edge_count)),
            {},
            0,
            min(comp_ub, comp_graph.edge_count),
        )
        comp_limits = limits if budget_left is None else replace(limits, node_budget=budget_left)
        value, rgs, comp_stats, comp_exhausted = _solve_space(space, comp_limits)
        stats.add(comp_stats)
        if budget_left is not None:
            budget_left = max(0, budget_left - comp_stats.nodes)
        if comp_exhausted:
            exhausted = True
        if value is None:
            # Only reachable on budget exhaustion before any completion;
            # fall back to the always-valid single-block coloring.
            value, rgs = 1, tuple([0] * comp_graph.edge_count)
        total += value
        for local_pos, lab in enumerate(rgs):
            block_of_edge[local_edges[local_pos]] = (comp_id, lab)
    witness = _relabel_blocks(graph, block_of_edge)
    result = SolveResult(value=total, witness=witness, stats=stats, exhausted=exhausted)
    if not exhausted:
        assert is_pk_free(graph, witness, k)
    return result


def _component_graph(
    graph: Graph, vertices: set[int], eidxs: tuple[int, ...]
) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on a component with locally renumbered vertices; local edge
    index order follows the global one."""
    vmap = {v: i for i, v in enumerate(sorted(vertices))}
    edges = tuple((vmap[graph.edges[ei][0]], vmap[graph.edges[ei][1]]) for ei in eidxs)
    return Graph.from_edges(len(vmap), edges), eidxs


def _relabel_blocks(graph: Graph, block_of_edge: dict[int, tuple[int, int]]) -> EdgeColoring:
    labels: dict[tuple[int, int], int] = {}
    tokens = []
    for ei in range(graph.edge_count):
        key = block_of_edge[ei]
        if key not in labels:
            labels[key] = len(labels)
        tokens.append(str(labels[key]))
    return EdgeColoring(tuple(tokens))


def ar_precolored(
    instance: PrecoloredInstance, k: int, limits: SearchLimits | None = None
) -> SolveResult:
    """Maximum total number of distinct colors over P_k-free extensions.

    Fixed tokens count toward the value.  Each free block may fuse with at
    most one fixed token class or mint a fresh color.  An infeasible
    instance (no valid extension exists) yields value None.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    limits = limits or SearchLimits()
    graph = instance.graph
    free_edges = instance.uncolored_edges()
    if len(free_edges) > limits.max_uncolored_edges:
        raise InstanceTooLargeError(
            f"{len(free_edges)} uncolored edges exceed the limit of "
            f"{limits.max_uncolored_edges}"
        )
    fixed_tokens: list[str] = []
    fixed_label: dict[int, int] = {}
    for ei in sorted(instance.coloring.tokens):
        tok = instance.coloring.tokens[ei]
        if tok not in fixed_tokens:
            fixed_tokens.append(tok)
        fixed_label[ei] = fixed_tokens.index(tok)
    t = len(fixed_tokens)
    cap = min(upper_bound(graph, k), t + len(free_edges))
    space, fixed_rainbow = _build_space(graph, k, free_edges, fixed_label, t, cap)
    if fixed_rainbow:
        return SolveResult(value=None, witness=None, stats=SearchStats())
    value, rgs, stats, exhausted = _solve_space(space, limits)
    if value is None:
        return SolveResult(value=None, witness=None, stats=stats, exhausted=exhausted)
    witness = _precolored_witness(graph, free_edges, fixed_label, fixed_tokens, rgs)
    if not exhausted:
        assert is_pk_free(graph, witness, k)
        assert distinct_color_count(witness) == value
    return SolveResult(value=value, witness=witness, stats=stats, exhausted=exhausted)


def _precolored_witness(
    graph: Graph,
    free_edges: tuple[int, ...],
    fixed_label: dict[int, int],
    fixed_tokens: list[str],
    rgs: tuple[int, ...],
) -> EdgeColoring:
    t = len(fixed_tokens)
    taken = set(fixed_tokens)
    fresh_names: dict[int, str] = {}
    counter = itertools.count()

    def fresh_for(label: int) -> str:
        if label not in fresh_names:
            while True:
                cand = str(next(counter))
                if cand not in taken:
                    break
            fresh_names[label] = cand
        return fresh_names[label]

    tokens = [""] * graph.edge_count
    for ei, lab in fixed_label.items():
        tokens[ei] = fixed_tokens[lab]
    for pos, ei in enumerate(free_edges):
        lab = rgs[pos]
        tokens[ei] = fixed_tokens[lab] if lab < t else fresh_for(lab)
    return EdgeColoring(tuple(tokens))
