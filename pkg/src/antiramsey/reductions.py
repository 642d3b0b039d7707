"""Hardness-instance generators with constructive witnesses and audits.

Three constructions are provided:

* ``mis_to_pk`` -- from an independent-set instance to a rainbow-P_k-free
  coloring instance, for odd k >= 3.  Every source vertex becomes a bundle
  of internally disjoint s-t paths of length k-1; every source edge becomes
  four cross edges between the hubs of its endpoints.
* ``mis_to_3partite`` -- the k=3 variant with 4|V| length-2 paths per vertex
  and two cross edges per source edge; the output is 3-partite.
* ``sat_to_precolored`` -- from a 3-CNF formula to a precolored instance
  whose optimum equals m+2 exactly when the formula is satisfiable.

``mis_coloring`` / ``assignment_to_coloring`` build the witness colorings
certifying the forward directions; ``extract_independent_set`` recovers an
independent set from any valid coloring; ``audit_reduced_coloring`` checks
the structural color budgets that the reverse directions rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    InstanceTooLargeError,
    InvalidColoringError,
    MalformedCnfError,
    NotIndependentError,
    TriviallySatisfiableError,
    UnsatisfyingAssignmentError,
)
from .graphs import (
    EdgeColoring,
    Graph,
    PartialColoring,
    PrecoloredInstance,
    distinct_color_count,
    is_pk_free,
)

SHARED_TOKEN = "c0"
TRUE_TOKEN = "T"
FALSE_TOKEN = "F"

VARIANT_PK = "pk"
VARIANT_3PARTITE = "three_partite_p3"

DEFAULT_VERTEX_CAP = 500_000


def colors_per_vertex_coefficient(k: int) -> int:
    """Coefficient c_k in the bound "valid colorings use <= c_k * |V| colors".

    A rainbow subgraph with one edge per color contains no path with k
    edges, hence (Erdos-Gallai) at most (k-1)|V|/2 edges; c_k = k is a safe
    integer choice and keeps the construction arithmetic simple.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    return k


def family_exclusion_limit(k: int) -> int:
    """Size threshold 4(k^2+1): two adjacent gadgets cannot both carry this
    many pairwise distinct-colored paths in a valid coloring."""
    return 4 * (k * k + 1)


@dataclass(frozen=True)
class ReductionParams:
    """Constants of the path-bundle construction for one odd k."""

    k: int
    family_limit: int
    colors_per_vertex: int

    def __post_init__(self) -> None:
        if self.k < 3 or self.k % 2 == 0:
            raise ValueError("k must be an odd integer >= 3")
        if self.family_limit != family_exclusion_limit(self.k):
            raise ValueError("family_limit must equal 4(k^2+1)")
        if self.colors_per_vertex < max(1, (self.k - 1 + 1) // 2):
            raise ValueError("colors_per_vertex too small for the construction")

    @classmethod
    def for_path_length(cls, k: int) -> "ReductionParams":
        return cls(
            k=k,
            family_limit=family_exclusion_limit(k),
            colors_per_vertex=colors_per_vertex_coefficient(k),
        )


@dataclass(frozen=True)
class VertexGadget:
    """Per-source-vertex record: hub pair and the path bundle (edge indices)."""

    source_vertex: int
    s: int
    t: int
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ReducedMisInstance:
    graph: Graph
    source: Graph
    variant: str
    params: ReductionParams
    gadgets: tuple[VertexGadget, ...]
    cross_edges: tuple[int, ...]

    def gadget(self, source_vertex: int) -> VertexGadget:
        return self.gadgets[source_vertex]

    def paths_per_vertex(self) -> int:
        return len(self.gadgets[0].paths) if self.gadgets else 0


def _build_bundles(
    source: Graph,
    k: int,
    paths_per_vertex: int,
    cross_pair_count: int,
    variant: str,
    params: ReductionParams,
    vertex_cap: int,
) -> ReducedMisInstance:
    n = source.vertex_count
    internals_per_path = k - 2
    total_vertices = 2 * n + n * paths_per_vertex * internals_per_path
    if total_vertices > vertex_cap:
        raise InstanceTooLargeError(
            f"construction would need {total_vertices} vertices (cap {vertex_cap})"
        )
    edges: list[tuple[int, int]] = []
    gadgets: list[VertexGadget] = []
    next_vertex = 2 * n
    for v in range(n):
        s_v, t_v = 2 * v, 2 * v + 1
        paths: list[tuple[int, ...]] = []
        for _ in range(paths_per_vertex):
            chain = [s_v] + list(range(next_vertex, next_vertex + internals_per_path)) + [t_v]
            next_vertex += internals_per_path
            path_edges = []
            for a, b in zip(chain, chain[1:]):
                path_edges.append(len(edges))
                edges.append((a, b) if a < b else (b, a))
            paths.append(tuple(path_edges))
        gadgets.append(VertexGadget(source_vertex=v, s=s_v, t=t_v, paths=tuple(paths)))
    cross: list[int] = []
    for u, v in source.edges:
        s_u, t_u, s_v, t_v = 2 * u, 2 * u + 1, 2 * v, 2 * v + 1
        pairs = [(s_u, t_v), (t_u, s_v), (t_u, t_v), (s_u, s_v)][:cross_pair_count]
        for a, b in pairs:
            cross.append(len(edges))
            edges.append((a, b) if a < b else (b, a))
    graph = Graph.from_edges(next_vertex, edges)
    return ReducedMisInstance(
        graph=graph,
        source=source,
        variant=variant,
        params=params,
        gadgets=tuple(gadgets),
        cross_edges=tuple(cross),
    )


def mis_to_pk(source: Graph, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> ReducedMisInstance:
    """Path-bundle construction for odd k: (f_k+1) * c_k * |V| internally
    disjoint paths of length k-1 per source vertex, four cross edges per
    source edge."""
    params = ReductionParams.for_path_length(k)
    n = source.vertex_count
    paths_per_vertex = (params.family_limit + 1) * params.colors_per_vertex * n
    return _build_bundles(source, k, paths_per_vertex, 4, VARIANT_PK, params, vertex_cap)


def mis_to_3partite(source: Graph, vertex_cap: int = DEFAULT_VERTEX_CAP) -> ReducedMisInstance:
    """3-partite k=3 variant: 4|V| length-2 paths per source vertex, two
    cross edges per source edge; the result has 4|V|^2 + 2|V| vertices with
    parts {s_v}, {t_v}, and the path internals."""
    params = ReductionParams.for_path_length(3)
    n = source.vertex_count
    inst = _build_bundles(source, 3, 4 * n, 2, VARIANT_3PARTITE, params, vertex_cap)
    assert inst.graph.vertex_count == 4 * n * n + 2 * n
    return inst


def _check_independent(source: Graph, vertices: Iterable[int]) -> frozenset[int]:
    vs = frozenset(vertices)
    for v in vs:
        if not 0 <= v < source.vertex_count:
            raise NotIndependentError(f"vertex {v} not in the source graph")
    for u, v in source.edges:
        if u in vs and v in vs:
            raise NotIndependentError(f"edge ({u}, {v}) joins two selected vertices")
    return vs


def _pk_path_tokens(k: int, fresh: list[str], shared_middle: bool) -> list[str]:
    """Token layout along one gadget path of k-1 edges.

    The two middle edges (positions t-1 and t, 0-based, t = (k-1)/2) either
    share one fresh token (selected vertices, k-2 tokens total) or both get
    the shared token (unselected vertices, k-3 tokens total).
    """
    half = (k - 1) // 2
    out = []
    for j in range(k - 1):
        if shared_middle:
            if j < half:
                out.append(fresh[j])
            elif j == half:
                out.append(fresh[half - 1])
            else:
                out.append(fresh[j - 1])
        else:
            if j in (half - 1, half):
                out.append(SHARED_TOKEN)
            elif j < half - 1:
                out.append(fresh[j])
            else:
                out.append(fresh[j - 2])
    return out


def mis_coloring(inst: ReducedMisInstance, independent_set: Iterable[int]) -> EdgeColoring:
    """Witness coloring for a given independent set of the source graph.

    three_partite variant: each path of a selected vertex is monochromatic
    in its own fresh token; everything else shares one token.  pk variant:
    paths of selected vertices use k-2 fresh tokens (middle pair shared),
    paths of unselected vertices use k-3 fresh tokens with both middle edges
    on the shared token.
    """
    selected = _check_independent(inst.source, independent_set)
    k = inst.params.k
    tokens = [SHARED_TOKEN] * inst.graph.edge_count
    for gadget in inst.gadgets:
        v = gadget.source_vertex
        for i, path_edges in enumerate(gadget.paths):
            if inst.variant == VARIANT_3PARTITE:
                if v in selected:
                    tok = f"p{v}.{i}"
                    for ei in path_edges:
                        tokens[ei] = tok
                continue
            if v in selected:
                fresh = [f"p{v}.{i}.{j}" for j in range(k - 2)]
                layout = _pk_path_tokens(k, fresh, shared_middle=True)
            elif k > 3:
                fresh = [f"p{v}.{i}.{j}" for j in range(k - 3)]
                layout = _pk_path_tokens(k, fresh, shared_middle=False)
            else:
                continue  # k == 3, unselected: whole path keeps the shared token
            for ei, tok in zip(path_edges, layout):
                tokens[ei] = tok
    return EdgeColoring(tuple(tokens))


def cycle_middle_pair_coloring(k: int) -> tuple[Graph, EdgeColoring]:
    """Cycle of length 2(k-1) colored with 2(k-2) tokens and no rainbow P_k.

    The cycle splits into two s-t paths of length k-1; each path keeps all
    its edge colors distinct except the two middle edges, which share.  Any
    path of k edges must traverse one of the shared middle pairs.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError("k must be an odd integer >= 3")
    length = 2 * (k - 1)
    from .graphs import cycle_graph

    graph = cycle_graph(length)
    half = (k - 1) // 2
    tokens = [""] * graph.edge_count
    for side in range(2):
        for i in range(1, k):  # 1-based position along this half of the ring
            color = half if i == half + 1 else i
            j = side * (k - 1) + (i - 1)  # ring edge from vertex j to j+1
            tokens[graph.edge_index(j, (j + 1) % length)] = str(side * (k - 1) + color)
    return graph, EdgeColoring(tuple(tokens))


def _gadget_color_count(inst: ReducedMisInstance, coloring: EdgeColoring, gadget: VertexGadget) -> int:
    seen: set[str] = set()
    for path_edges in gadget.paths:
        for ei in path_edges:
            seen.add(coloring.tokens[ei])
    return len(seen)


def _extraction_threshold(inst: ReducedMisInstance) -> int:
    if inst.variant == VARIANT_3PARTITE:
        return 3
    p = inst.params
    n = inst.source.vertex_count
    return (p.k - 3) * ((p.family_limit + 1) * p.colors_per_vertex * n) + p.family_limit


def extract_independent_set(inst: ReducedMisInstance, coloring: EdgeColoring) -> frozenset[int]:
    """Source vertices whose path bundle carries more colors than the
    variant threshold; independent for every valid coloring."""
    if not is_pk_free(inst.graph, coloring, inst.params.k):
        raise InvalidColoringError("coloring admits a rainbow path")
    threshold = _extraction_threshold(inst)
    chosen = frozenset(
        g.source_vertex
        for g in inst.gadgets
        if _gadget_color_count(inst, coloring, g) > threshold
    )
    for u, v in inst.source.edges:
        if u in chosen and v in chosen:
            raise RuntimeError(
                "extraction produced a dependent set from a valid coloring; "
                "this contradicts the construction guarantee"
            )
    return chosen


@dataclass(frozen=True)
class GadgetAuditEntry:
    source_vertex: int
    color_count: int
    ceiling: int

    @property
    def within(self) -> bool:
        return self.color_count <= self.ceiling


@dataclass(frozen=True)
class ReducedColoringAudit:
    valid: bool
    cross_color_count: int
    cross_bound: int
    gadget_entries: tuple[GadgetAuditEntry, ...]
    exclusion_violations: tuple[tuple[int, int], ...]

    @property
    def cross_within(self) -> bool:
        return self.cross_color_count <= self.cross_bound

    @property
    def all_within(self) -> bool:
        return self.cross_within and all(e.within for e in self.gadget_entries)


def audit_reduced_coloring(inst: ReducedMisInstance, coloring: EdgeColoring) -> ReducedColoringAudit:
    """Report-only structural audit of any total coloring of the instance.

    Checks the cross-edge color budget, the per-gadget color ceilings, and
    lists source edges whose two endpoint gadgets both exceed the exclusion
    threshold (necessarily empty when the coloring is valid).
    """
    if len(coloring.tokens) != inst.graph.edge_count:
        raise ValueError("coloring is not total on the instance graph")
    p = inst.params
    n = inst.source.vertex_count
    valid = is_pk_free(inst.graph, coloring, p.k)
    cross_colors = len({coloring.tokens[ei] for ei in inst.cross_edges})
    if inst.variant == VARIANT_3PARTITE:
        cross_bound = 2 * n  # cross edges live on 2n hub vertices
        ceiling = 4 * n
    else:
        cross_bound = 2 * p.colors_per_vertex * n
        ceiling = (p.k - 2) * (p.family_limit + 1) * p.colors_per_vertex * n
    entries = tuple(
        GadgetAuditEntry(
            source_vertex=g.source_vertex,
            color_count=_gadget_color_count(inst, coloring, g),
            ceiling=ceiling,
        )
        for g in inst.gadgets
    )
    if inst.variant == VARIANT_3PARTITE:
        exclusion = 2  # a gadget with >= 3 colors forces its neighbors to <= 2
    else:
        exclusion = _extraction_threshold(inst)
    counts = {e.source_vertex: e.color_count for e in entries}
    violations = tuple(
        (u, v)
        for u, v in inst.source.edges
        if counts[u] > exclusion and counts[v] > exclusion
    )
    return ReducedColoringAudit(
        valid=valid,
        cross_color_count=cross_colors,
        cross_bound=cross_bound,
        gadget_entries=entries,
        exclusion_violations=violations,
    )


# ---------------------------------------------------------------------------
# Annotation sidecar (JSON-serializable provenance for the CLI round trip)


def mis_instance_to_annotation(inst: ReducedMisInstance) -> dict:
    return {
        "variant": inst.variant,
        "params": {
            "k": inst.params.k,
            "family_limit": inst.params.family_limit,
            "colors_per_vertex": inst.params.colors_per_vertex,
        },
        "source": {
            "vertex_count": inst.source.vertex_count,
            "edges": [list(e) for e in inst.source.edges],
        },
        "gadgets": [
            {
                "source_vertex": g.source_vertex,
                "s": g.s,
                "t": g.t,
                "paths": [list(p) for p in g.paths],
            }
            for g in inst.gadgets
        ],
        "cross_edges": list(inst.cross_edges),
    }


def mis_instance_from_annotation(graph: Graph, data: Mapping) -> ReducedMisInstance:
    params = ReductionParams(
        k=data["params"]["k"],
        family_limit=data["params"]["family_limit"],
        colors_per_vertex=data["params"]["colors_per_vertex"],
    )
    source = Graph.from_edges(
        data["source"]["vertex_count"], [tuple(e) for e in data["source"]["edges"]]
    )
    gadgets = tuple(
        VertexGadget(
            source_vertex=g["source_vertex"],
            s=g["s"],
            t=g["t"],
            paths=tuple(tuple(p) for p in g["paths"]),
        )
        for g in data["gadgets"]
    )
    return ReducedMisInstance(
        graph=graph,
        source=source,
        variant=data["variant"],
        params=params,
        gadgets=gadgets,
        cross_edges=tuple(data["cross_edges"]),
    )


# ---------------------------------------------------------------------------
# 3-SAT reduction

Clause = tuple[int, int, int]


def parse_dimacs(text: str) -> list[Clause]:
    """Parse DIMACS CNF restricted to exactly-3-literal clauses."""
    declared_vars = declared_clauses = None
    clauses: list[Clause] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise MalformedCnfError(f"line {lineno}: bad problem line")
            declared_vars, declared_clauses = int(parts[2]), int(parts[3])
            continue
        parts = line.split()
        if parts[-1] != "0":
            raise MalformedCnfError(f"line {lineno}: clause not terminated by 0")
        try:
            lits = tuple(int(x) for x in parts[:-1])
        except ValueError:
            raise MalformedCnfError(f"line {lineno}: bad literal") from None
        if len(lits) != 3 or any(l == 0 for l in lits):
            raise MalformedCnfError(f"line {lineno}: clauses need exactly 3 nonzero literals")
        if declared_vars is not None and any(abs(l) > declared_vars for l in lits):
            raise MalformedCnfError(f"line {lineno}: literal out of declared range")
        clauses.append(lits)  # type: ignore[arg-type]
    if declared_clauses is not None and len(clauses) != declared_clauses:
        raise MalformedCnfError(
            f"declared {declared_clauses} clauses, found {len(clauses)}"
        )
    return clauses


def format_dimacs(clauses: Sequence[Clause]) -> str:
    nvars = max((abs(l) for cl in clauses for l in cl), default=0)
    lines = [f"p cnf {nvars} {len(clauses)}"]
    lines.extend(" ".join(str(l) for l in cl) + " 0" for cl in clauses)
    return "\n".join(lines) + "\n"


def _validate_clauses(clauses: Sequence[Clause]) -> None:
    for cl in clauses:
        if len(cl) != 3 or any(not isinstance(l, int) or l == 0 for l in cl):
            raise MalformedCnfError(f"bad clause {cl!r}")


def normalize_formula(clauses: Sequence[Clause]) -> list[Clause]:
    """Pure-literal elimination to a fixpoint.

    A variable occurring with only one polarity satisfies all its clauses
    for free, so those clauses are dropped; removals cascade.  The result is
    the unique maximal sub-formula in which every occurring variable appears
    both negated and non-negated, and it is equisatisfiable with the input.
    """
    _validate_clauses(clauses)
    remaining = list(clauses)
    while True:
        pos: set[int] = set()
        neg: set[int] = set()
        for cl in remaining:
            for l in cl:
                (pos if l > 0 else neg).add(abs(l))
        pure = pos ^ neg
        if not pure:
            return remaining
        remaining = [
            cl for cl in remaining if not any(abs(l) in pure for l in cl)
        ]


@dataclass(frozen=True)
class ClauseGadget:
    """One clause gadget.

    `literals` is the construction order: for mixed-polarity clauses the two
    majority-polarity literals come first and the odd one out is attached
    through the auxiliary hub.  `ports[i]` is the vertex joining `literals[i]`
    to the hubs; `fixed_edges` carry the truth tokens.
    """

    literals: Clause
    hub: int
    aux_hub: int | None
    ports: tuple[int, int, int]
    free_edges: tuple[int, ...]
    fixed_edges: tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class SatReducedInstance:
    instance: PrecoloredInstance
    formula: tuple[Clause, ...]
    variable_edges: tuple[tuple[int, int], ...]  # (variable, edge index)
    clause_gadgets: tuple[ClauseGadget, ...]

    @property
    def num_clauses(self) -> int:
        return len(self.formula)

    @property
    def num_variables(self) -> int:
        return len(self.variable_edges)

    @property
    def target_value(self) -> int:
        """Distinct-color count achievable iff the formula is satisfiable."""
        return self.num_clauses + 2

    def variable_edge(self, variable: int) -> int:
        for var, ei in self.variable_edges:
            if var == variable:
                return ei
        raise KeyError(variable)


def sat_to_precolored(clauses: Sequence[Clause]) -> SatReducedInstance:
    """Build the precolored instance for a 3-CNF formula.

    The formula is first normalized by pure-literal elimination.  Gadgets:
    every variable contributes one uncolored edge between its two literal
    vertices; a uniform-polarity clause gets a hub with three uncolored
    spokes; a mixed-polarity clause gets a second hub carrying the
    odd-polarity literal plus an uncolored hub-hub edge.  Each port-literal
    edge is fixed to T for non-negated literals and F for negated ones.
    """
    normalized = normalize_formula(clauses)
    if not normalized:
        raise TriviallySatisfiableError(
            "pure-literal elimination satisfied every clause"
        )
    variables = sorted({abs(l) for cl in normalized for l in cl})
    lit_vertex: dict[int, int] = {}
    for i, var in enumerate(variables):
        lit_vertex[var] = 2 * i
        lit_vertex[-var] = 2 * i + 1
    next_vertex = 2 * len(variables)
    edges: list[tuple[int, int]] = []
    fixed: dict[int, str] = {}

    def add_edge(a: int, b: int, token: str | None = None) -> int:
        idx = len(edges)
        edges.append((a, b) if a < b else (b, a))
        if token is not None:
            fixed[idx] = token
        return idx

    variable_edges = tuple(
        (var, add_edge(lit_vertex[var], lit_vertex[-var])) for var in variables
    )
    gadgets: list[ClauseGadget] = []
    for clause in normalized:
        positives = [l for l in clause if l > 0]
        negatives = [l for l in clause if l < 0]
        if not positives or not negatives:
            ordered = tuple(clause)
            hub = next_vertex
            ports = (next_vertex + 1, next_vertex + 2, next_vertex + 3)
            next_vertex += 4
            aux_hub = None
            free = tuple(add_edge(hub, p) for p in ports)
        else:
            majority_positive = len(positives) == 2
            majority = positives if majority_positive else negatives
            minority = negatives if majority_positive else positives
            ordered = (majority[0], majority[1], minority[0])
            hub, aux_hub = next_vertex, next_vertex + 1
            ports = (next_vertex + 2, next_vertex + 3, next_vertex + 4)
            next_vertex += 5
            free = (
                add_edge(hub, ports[0]),
                add_edge(hub, ports[1]),
                add_edge(aux_hub, ports[2]),
                add_edge(hub, aux_hub),
            )
        fixed_list = []
        for i in range(3):
            token = TRUE_TOKEN if ordered[i] > 0 else FALSE_TOKEN
            fixed_list.append((add_edge(ports[i], lit_vertex[ordered[i]], token), token))
        fixed_edges = tuple(fixed_list)
        gadgets.append(
            ClauseGadget(
                literals=ordered,
                hub=hub,
                aux_hub=aux_hub,
                ports=ports,
                free_edges=free,
                fixed_edges=fixed_edges,
            )
        )
    graph = Graph.from_edges(next_vertex, edges)
    assert graph.edge_count <= 7 * len(normalized) + len(variables)
    return SatReducedInstance(
        instance=PrecoloredInstance(graph, PartialColoring(fixed)),
        formula=tuple(normalized),
        variable_edges=variable_edges,
        clause_gadgets=tuple(gadgets),
    )


def _literal_true(literal: int, assignment: Mapping[int, bool]) -> bool:
    value = assignment.get(abs(literal))
    if value is None:
        raise UnsatisfyingAssignmentError(f"variable {abs(literal)} unassigned")
    return value if literal > 0 else not value


def assignment_to_coloring(
    inst: SatReducedInstance, assignment: Mapping[int, bool]
) -> EdgeColoring:
    """Witness coloring with exactly m+2 tokens for a satisfying assignment.

    Variable edges carry T/F per the assignment.  In each clause gadget the
    spoke toward the first satisfying literal (in construction order) gets
    that clause's fresh token; the remaining free edges copy the satisfying
    literal's truth token, which blocks every rainbow path through the hub.
    """
    tokens: dict[int, str] = {}
    for var, ei in inst.variable_edges:
        tokens[ei] = TRUE_TOKEN if assignment.get(var) else FALSE_TOKEN
    for ci, gadget in enumerate(inst.clause_gadgets):
        sat_index = next(
            (i for i, lit in enumerate(gadget.literals) if _literal_true(lit, assignment)),
            None,
        )
        if sat_index is None:
            raise UnsatisfyingAssignmentError(
                f"clause {gadget.literals} not satisfied"
            )
        fill = TRUE_TOKEN if gadget.literals[sat_index] > 0 else FALSE_TOKEN
        # free_edges[i] is the spoke toward literal i; in mixed gadgets
        # free_edges[3] is the hub-hub edge.
        for j, ei in enumerate(gadget.free_edges):
            tokens[ei] = f"n{ci + 1}" if j == sat_index else fill
        for ei, tok in gadget.fixed_edges:
            tokens[ei] = tok
    coloring = EdgeColoring.from_map(inst.instance.graph, tokens)
    assert distinct_color_count(coloring) == inst.target_value
    return coloring
