import itertools
import random

import pytest

from antiramsey import (
    EdgeColoring,
    Graph,
    InstanceTooLargeError,
    InvalidColoringError,
    MalformedCnfError,
    NotIndependentError,
    PartialColoring,
    ReductionParams,
    TriviallySatisfiableError,
    UnsatisfyingAssignmentError,
    ar_precolored,
    assignment_to_coloring,
    audit_reduced_coloring,
    cycle_middle_pair_coloring,
    distinct_color_count,
    extract_independent_set,
    family_exclusion_limit,
    is_pk_free,
    mis_coloring,
    mis_instance_from_annotation,
    mis_instance_to_annotation,
    mis_to_3partite,
    mis_to_pk,
    normalize_formula,
    sat_to_precolored,
)
from antiramsey.reductions import format_dimacs, parse_dimacs

from helpers import all_graphs, brute_force_satisfiable


def independent_sets(g: Graph):
    for r in range(g.vertex_count + 1):
        for subset in itertools.combinations(range(g.vertex_count), r):
            s = set(subset)
            if all(not (u in s and v in s) for u, v in g.edges):
                yield s


class TestParams:
    def test_family_limit_formula(self):
        assert family_exclusion_limit(3) == 40
        assert family_exclusion_limit(5) == 104

    def test_validation(self):
        with pytest.raises(ValueError):
            ReductionParams.for_path_length(4)
        with pytest.raises(ValueError):
            ReductionParams(k=3, family_limit=41, colors_per_vertex=3)
        p = ReductionParams.for_path_length(5)
        assert (p.family_limit, p.colors_per_vertex) == (104, 5)


class TestThreePartiteConstruction:
    def test_single_edge_sizes(self):
        inst = mis_to_3partite(Graph.from_edges(2, [(0, 1)]))
        assert inst.graph.vertex_count == 4 * 4 + 2 * 2
        assert inst.graph.edge_count == 34
        assert len(inst.cross_edges) == 2
        assert all(len(g.paths) == 8 for g in inst.gadgets)
        assert all(len(p) == 2 for g in inst.gadgets for p in g.paths)

    def test_vertex_count_formula(self):
        for n in range(1, 4):
            for g in all_graphs(n):
                inst = mis_to_3partite(g)
                assert inst.graph.vertex_count == 4 * n * n + 2 * n

    def test_three_partiteness(self):
        inst = mis_to_3partite(Graph.from_edges(3, [(0, 1), (1, 2)]))
        s_part = {g.s for g in inst.gadgets}
        t_part = {g.t for g in inst.gadgets}
        internal = set(range(inst.graph.vertex_count)) - s_part - t_part
        for u, v in inst.graph.edges:
            for part in (s_part, t_part, internal):
                assert not (u in part and v in part)

    def test_paths_internally_disjoint(self):
        inst = mis_to_3partite(Graph.from_edges(2, [(0, 1)]))
        for g in inst.gadgets:
            internals = []
            for p in g.paths:
                (u1, v1), (u2, v2) = (inst.graph.edges[p[0]], inst.graph.edges[p[1]])
                shared = {u1, v1} & {u2, v2} - {g.s, g.t}
                internals.extend(shared)
            assert len(internals) == len(set(internals)) == len(g.paths)


class TestPkConstruction:
    def test_single_edge_counts(self):
        inst = mis_to_pk(Graph.from_edges(2, [(0, 1)]), 3)
        assert inst.paths_per_vertex() == (40 + 1) * 3 * 2
        assert all(len(p) == 2 for g in inst.gadgets for p in g.paths)
        assert len(inst.cross_edges) == 4

    def test_k5_path_length(self):
        inst = mis_to_pk(Graph.from_edges(2, [(0, 1)]), 5, vertex_cap=10_000)
        assert all(len(p) == 4 for g in inst.gadgets for p in g.paths)

    def test_rejects_even_k(self):
        with pytest.raises(ValueError):
            mis_to_pk(Graph.from_edges(2, [(0, 1)]), 4)

    def test_vertex_cap(self):
        with pytest.raises(InstanceTooLargeError):
            mis_to_pk(Graph.from_edges(2, [(0, 1)]), 3, vertex_cap=100)


class TestMisColoring:
    def test_rejects_dependent_set(self):
        inst = mis_to_3partite(Graph.from_edges(2, [(0, 1)]))
        with pytest.raises(NotIndependentError):
            mis_coloring(inst, {0, 1})

    def test_empty_set_single_token(self):
        inst = mis_to_3partite(Graph.from_edges(2, [(0, 1)]))
        col = mis_coloring(inst, set())
        assert distinct_color_count(col) == 1
        assert is_pk_free(inst.graph, col, 3)

    def test_three_partite_counts_and_validity(self):
        src = Graph.from_edges(3, [(0, 1)])
        inst = mis_to_3partite(src)
        n = 3
        for chosen in ({0}, {1}, {2}, {0, 2}, {1, 2}):
            col = mis_coloring(inst, chosen)
            assert is_pk_free(inst.graph, col, 3)
            assert distinct_color_count(col) == 4 * n * len(chosen) + 1

    def test_pk_k3_validity(self):
        inst = mis_to_pk(Graph.from_edges(2, [(0, 1)]), 3)
        col = mis_coloring(inst, {1})
        assert is_pk_free(inst.graph, col, 3)

    def test_pk_token_budget(self):
        src = Graph.from_edges(2, [(0, 1)])
        inst = mis_to_pk(src, 3)
        p = inst.paths_per_vertex()
        col = mis_coloring(inst, {0})
        # selected vertex: k-2 = 1 token per path; other vertex all shared
        assert distinct_color_count(col) == p + 1


class TestExtraction:
    def test_round_trip_all_small_sources(self):
        for n in range(1, 4):
            for src in all_graphs(n):
                inst = mis_to_3partite(src)
                for chosen in independent_sets(src):
                    col = mis_coloring(inst, chosen)
                    assert extract_independent_set(inst, col) == frozenset(chosen)

    def test_all_shared_extracts_empty(self):
        inst = mis_to_3partite(Graph.from_edges(2, [(0, 1)]))
        col = EdgeColoring(("c0",) * inst.graph.edge_count)
        assert extract_independent_set(inst, col) == frozenset()

    def test_rejects_invalid_coloring(self):
        inst = mis_to_3partite(Graph.from_edges(2, [(0, 1)]))
        rainbow = EdgeColoring(tuple(str(i) for i in range(inst.graph.edge_count)))
        with pytest.raises(InvalidColoringError):
            extract_independent_set(inst, rainbow)

    def test_solver_coloring_extracts_independent(self):
        # any valid coloring, not only constructed witnesses
        rng = random.Random(301)
        src = Graph.from_edges(3, [(0, 1), (1, 2)])
        inst = mis_to_3partite(src)
        tokens = ["c0"] * inst.graph.edge_count
        gadget = inst.gadgets[0]
        for i, p in enumerate(gadget.paths):
            for ei in p:
                tokens[ei] = f"q{i}"
        col = EdgeColoring(tuple(tokens))
        assert is_pk_free(inst.graph, col, 3)
        chosen = extract_independent_set(inst, col)
        assert all(not (u in chosen and v in chosen) for u, v in src.edges)


class TestAudit:
    def test_witness_passes(self):
        src = Graph.from_edges(2, [(0, 1)])
        inst = mis_to_3partite(src)
        audit = audit_reduced_coloring(inst, mis_coloring(inst, {0}))
        assert audit.valid
        assert audit.all_within
        assert audit.exclusion_violations == ()

    def test_all_shared_trivially_ok(self):
        inst = mis_to_3partite(Graph.from_edges(2, [(0, 1)]))
        audit = audit_reduced_coloring(inst, EdgeColoring(("z",) * inst.graph.edge_count))
        assert audit.valid
        assert audit.cross_color_count == 1
        assert all(e.color_count == 1 for e in audit.gadget_entries)

    def test_corrupted_coloring_flagged(self):
        src = Graph.from_edges(2, [(0, 1)])
        inst = mis_to_3partite(src)
        tokens = list(mis_coloring(inst, {0}).tokens)
        # paint the other gadget's paths with distinct colors too: adjacent
        # source vertices may not both be colorful
        for i, p in enumerate(inst.gadgets[1].paths):
            for ei in p:
                tokens[ei] = f"bad{i}"
        audit = audit_reduced_coloring(inst, EdgeColoring(tuple(tokens)))
        assert not audit.valid
        assert audit.exclusion_violations == ((0, 1),)

    def test_pk_witness_passes(self):
        inst = mis_to_pk(Graph.from_edges(2, [(0, 1)]), 3)
        audit = audit_reduced_coloring(inst, mis_coloring(inst, {0}))
        assert audit.valid and audit.all_within and not audit.exclusion_violations


class TestCycleHelper:
    @pytest.mark.parametrize("k", [3, 5, 7])
    def test_counts_and_validity(self, k):
        g, col = cycle_middle_pair_coloring(k)
        assert g.vertex_count == 2 * (k - 1)
        assert distinct_color_count(col) == 2 * (k - 2)
        assert is_pk_free(g, col, k)

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            cycle_middle_pair_coloring(4)


class TestAnnotationRoundTrip:
    def test_three_partite(self):
        inst = mis_to_3partite(Graph.from_edges(3, [(0, 1), (1, 2)]))
        data = mis_instance_to_annotation(inst)
        back = mis_instance_from_annotation(inst.graph, data)
        assert back == inst

    def test_pk(self):
        inst = mis_to_pk(Graph.from_edges(2, [(0, 1)]), 3)
        back = mis_instance_from_annotation(inst.graph, mis_instance_to_annotation(inst))
        assert back == inst


class TestNormalizeFormula:
    def test_pure_literal_cascade(self):
        # removing the z3-satisfied clause makes y pure, then everything goes
        clauses = [(1, 2, 3), (-1, 2, 2)]
        assert normalize_formula(clauses) == []

    def test_fixpoint_formula_unchanged(self):
        clauses = [(1, 1, 1), (-1, -1, -1)]
        assert normalize_formula(clauses) == clauses

    def test_tautological_clause_survives(self):
        clauses = [(1, -1, 1)]
        assert normalize_formula(clauses) == clauses

    def test_malformed(self):
        with pytest.raises(MalformedCnfError):
            normalize_formula([(1, 0, 2)])


class TestSatToPrecolored:
    def test_trivially_sat(self):
        with pytest.raises(TriviallySatisfiableError):
            sat_to_precolored([(1, 2, 3)])

    def test_uniform_pair_shape(self):
        inst = sat_to_precolored([(1, 1, 1), (-1, -1, -1)])
        assert inst.num_clauses == 2 and inst.num_variables == 1
        assert inst.instance.graph.edge_count == 13
        assert all(g.aux_hub is None for g in inst.clause_gadgets)
        tokens = set(inst.instance.coloring.tokens.values())
        assert tokens == {"T", "F"}

    def test_mixed_pair_shape(self):
        inst = sat_to_precolored([(1, 2, -3), (-1, -2, 3)])
        assert inst.instance.graph.edge_count == 17 <= 7 * 2 + 3
        assert all(g.aux_hub is not None for g in inst.clause_gadgets)
        # odd-polarity literal rides the auxiliary hub
        first = inst.clause_gadgets[0]
        assert first.literals == (1, 2, -3)
        assert inst.instance.coloring.tokens[first.fixed_edges[2][0]] == "F"

    def test_edge_budget(self):
        rng = random.Random(401)
        for _ in range(15):
            clauses = [
                tuple(rng.choice([1, -1]) * rng.randint(1, 4) for _ in range(3))
                for _ in range(rng.randint(1, 5))
            ]
            try:
                inst = sat_to_precolored(clauses)
            except TriviallySatisfiableError:
                continue
            m, n = inst.num_clauses, inst.num_variables
            assert inst.instance.graph.edge_count <= 7 * m + n

    def test_duplicate_literals_allowed(self):
        inst = sat_to_precolored([(2, 2, 2), (-2, -2, 1), (-1, -1, -2)])
        assert inst.num_clauses >= 1

    def test_precolored_tokens_match_polarity(self):
        inst = sat_to_precolored([(1, 1, 1), (-1, -1, -1)])
        for gadget in inst.clause_gadgets:
            for (ei, tok), lit in zip(gadget.fixed_edges, gadget.literals):
                assert tok == ("T" if lit > 0 else "F")


class TestAssignmentToColoring:
    def test_witness_valid_with_m_plus_2(self):
        clauses = [(1, 2, -3), (-1, -2, 3)]
        inst = sat_to_precolored(clauses)
        col = assignment_to_coloring(inst, {1: True, 2: False, 3: False})
        assert is_pk_free(inst.instance.graph, col, 3)
        assert distinct_color_count(col) == inst.target_value == 4

    def test_respects_precolored(self):
        inst = sat_to_precolored([(1, 1, 2), (-1, -2, -2)])
        col = assignment_to_coloring(inst, {1: True, 2: False})
        for ei, tok in inst.instance.coloring.tokens.items():
            assert col.tokens[ei] == tok

    def test_first_satisfying_literal_gets_fresh_token(self):
        inst = sat_to_precolored([(1, 1, 2), (-1, -2, -2)])
        col = assignment_to_coloring(inst, {1: True, 2: False})
        # first clause is uniform positive and satisfied via its first literal
        gadget = inst.clause_gadgets[0]
        assert gadget.aux_hub is None
        assert col.tokens[gadget.free_edges[0]] == "n1"

    def test_rejects_unsatisfying(self):
        inst = sat_to_precolored([(1, 1, 1), (-1, -1, -1)])
        with pytest.raises(UnsatisfyingAssignmentError):
            assignment_to_coloring(inst, {})

    def test_random_satisfiable_formulas(self):
        rng = random.Random(907)
        done = 0
        while done < 12:
            clauses = [
                tuple(rng.choice([1, -1]) * rng.randint(1, 4) for _ in range(3))
                for _ in range(rng.randint(1, 4))
            ]
            try:
                inst = sat_to_precolored(clauses)
            except TriviallySatisfiableError:
                continue
            assignment = brute_force_satisfiable(list(inst.formula))
            if assignment is None:
                continue
            col = assignment_to_coloring(inst, assignment)
            assert is_pk_free(inst.instance.graph, col, 3)
            assert distinct_color_count(col) == inst.num_clauses + 2
            done += 1

    def test_solver_confirms_target(self):
        inst = sat_to_precolored([(1, 1, 1), (-1, -1, -1), (1, -1, 1)])
        res = ar_precolored(inst.instance, 3)
        satisfiable = brute_force_satisfiable(list(inst.formula)) is not None
        assert (res.value == inst.target_value) == satisfiable


class TestDimacs:
    def test_round_trip(self):
        clauses = [(1, -2, 3), (-1, 2, -3)]
        assert parse_dimacs(format_dimacs(clauses)) == clauses

    def test_parse_with_comments(self):
        text = "c header\np cnf 3 1\n1 -2 3 0\n"
        assert parse_dimacs(text) == [(1, -2, 3)]

    def test_rejects_wrong_arity(self):
        with pytest.raises(MalformedCnfError):
            parse_dimacs("p cnf 3 1\n1 -2 0\n")

    def test_rejects_missing_terminator(self):
        with pytest.raises(MalformedCnfError):
            parse_dimacs("p cnf 3 1\n1 -2 3\n")

    def test_rejects_out_of_range_literal(self):
        with pytest.raises(MalformedCnfError):
            parse_dimacs("p cnf 2 1\n1 -2 3 0\n")

    def test_rejects_clause_count_mismatch(self):
        with pytest.raises(MalformedCnfError):
            parse_dimacs("p cnf 3 2\n1 -2 3 0\n")
