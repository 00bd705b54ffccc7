import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bfs_components, bfs_two_colorable
from wordrep.errors import NotNormalizableError, PreconditionError, SpecError
from wordrep.graph import (
    CirculantSpec,
    Graph,
    build_circulant,
    canonical_jump,
    cartesian_product,
    check_isomorphism_by_map,
    complete_graph,
    component_decomposition,
    cycle_graph,
    five_regular_spec,
    graph_to_dot,
    is_bipartite_circulant,
    is_connected_circulant,
    normalize_to_unit_jump,
    path_graph,
    periodic_cycles,
)


def all_specs(max_n, max_jumps=3):
    for n in range(2, max_n + 1):
        top = n // 2
        for k in range(1, max_jumps + 1):
            for jumps in itertools.combinations(range(1, top + 1), k):
                yield CirculantSpec(n, jumps)


class TestSpecValidation:
    def test_rejects_bad_specs(self):
        for n, jumps in [(6, ()), (6, (0, 1)), (6, (4,)), (6, (2, 2)), (1, (1,)), (8, (3, 2))]:
            with pytest.raises(SpecError):
                CirculantSpec(n, jumps)

    def test_half_jump_allowed(self):
        spec = CirculantSpec(8, (4,))
        assert spec.degree() == 1

    def test_degree_formula(self):
        assert CirculantSpec(8, (2, 3, 4)).degree() == 5
        assert CirculantSpec(9, (2, 3, 4)).degree() == 6

    def test_five_regular_spec(self):
        assert five_regular_spec(5, 2, 4) == CirculantSpec(10, (2, 4, 5))
        for bad in [(5, 4, 2), (5, 0, 2), (5, 2, 5), (2, 1, 1)]:
            with pytest.raises(SpecError):
                five_regular_spec(*bad)

    def test_canonical_jump(self):
        assert canonical_jump(8, 10) == 2
        assert canonical_jump(-3, 10) == 3
        with pytest.raises(SpecError):
            canonical_jump(10, 10)


class TestBuildCirculant:
    def test_complete_graph_example(self):
        assert build_circulant(CirculantSpec(6, (1, 2, 3))) == complete_graph(6)

    def test_four_cycle_example(self):
        assert build_circulant(CirculantSpec(4, (1,))) == cycle_graph(4)

    def test_five_regular_example(self):
        g = build_circulant(CirculantSpec(8, (2, 3, 4)))
        assert all(g.degree(v) == 5 for v in range(8))
        assert g.edge_count == 20

    def test_degrees_match_formula(self):
        for spec in all_specs(20):
            g = build_circulant(spec)
            assert all(g.degree(v) == spec.degree() for v in range(spec.n_vertices)), spec

    def test_rotation_is_automorphism(self):
        # vertex transitivity: every shift preserves adjacency
        for spec in [CirculantSpec(12, (2, 3)), CirculantSpec(40, (3, 8, 20)), CirculantSpec(7, (1, 2))]:
            g = build_circulant(spec)
            n = spec.n_vertices
            for s in range(1, n):
                assert all(
                    g.adjacent((u + s) % n, (v + s) % n) for u, v in g.edges
                ), (spec, s)


class TestStructurePredicates:
    def test_connectivity_examples(self):
        assert not is_connected_circulant(CirculantSpec(12, (2, 4, 6)))
        assert is_connected_circulant(CirculantSpec(10, (2, 5)))
        assert is_connected_circulant(CirculantSpec(6, (1,)))

    def test_connectivity_against_bfs(self):
        for spec in all_specs(30):
            g = build_circulant(spec)
            comps = bfs_components(g.n, g.edges)
            assert is_connected_circulant(spec) == (len(comps) == 1), spec

    def test_component_decomposition_examples(self):
        assert component_decomposition(CirculantSpec(12, (2, 4, 6))) == (
            2,
            CirculantSpec(6, (1, 2, 3)),
        )
        spec = CirculantSpec(10, (1, 5))
        assert component_decomposition(spec) == (1, spec)
        assert component_decomposition(CirculantSpec(18, (3, 6, 9))) == (
            3,
            CirculantSpec(6, (1, 2, 3)),
        )

    def test_component_decomposition_against_bfs(self):
        for spec in all_specs(24):
            d, reduced = component_decomposition(spec)
            g = build_circulant(spec)
            comps = bfs_components(g.n, g.edges)
            assert len(comps) == d, spec
            assert d * reduced.n_vertices == spec.n_vertices
            # each component is carried onto the reduced circulant by index/d
            h = build_circulant(reduced)
            comp0 = sorted(c for c in comps if 0 in c)[0]
            vmap = {v: v // d for v in sorted(comp0)}
            for u, v in itertools.combinations(sorted(comp0), 2):
                assert g.adjacent(u, v) == h.adjacent(vmap[u], vmap[v]), (spec, u, v)

    def test_bipartite_examples(self):
        assert is_bipartite_circulant(CirculantSpec(10, (1, 3, 5)))
        assert not is_bipartite_circulant(CirculantSpec(10, (2, 5)))
        assert is_bipartite_circulant(CirculantSpec(6, (1,)))

    def test_bipartite_requires_connected(self):
        with pytest.raises(PreconditionError):
            is_bipartite_circulant(CirculantSpec(12, (2, 4, 6)))

    def test_bipartite_against_bfs(self):
        for spec in all_specs(30):
            if not is_connected_circulant(spec):
                continue
            g = build_circulant(spec)
            assert is_bipartite_circulant(spec) == bfs_two_colorable(g.n, g.edges), spec


class TestPeriodicCycles:
    def test_examples(self):
        assert periodic_cycles(CirculantSpec(12, (2, 4, 6)), 4) == (3, 4, False)
        assert periodic_cycles(CirculantSpec(10, (1, 5)), 1) == (10, 1, False)
        got = periodic_cycles(CirculantSpec(10, (1, 5)), 5)
        assert got == (2, 5, True) and got.degenerate

    def test_jump_must_belong(self):
        with pytest.raises(ValueError):
            periodic_cycles(CirculantSpec(10, (1, 5)), 3)

    def test_against_walk_enumeration(self):
        for spec in all_specs(24):
            n = spec.n_vertices
            for r in spec.jumps:
                length, count, _ = periodic_cycles(spec, r)
                cycles = set()
                for s in range(n):
                    cyc = []
                    v = s
                    while True:
                        cyc.append(v)
                        v = (v + r) % n
                        if v == s:
                            break
                    cycles.add(frozenset(cyc))
                assert len(cycles) == count, (spec, r)
                assert all(len(c) == length for c in cycles), (spec, r)


class TestCartesianProduct:
    def test_square(self):
        square = cartesian_product(path_graph(2), path_graph(2))
        # row-major labels trace the 4-cycle as 0-1-3-2
        assert check_isomorphism_by_map(square, cycle_graph(4), (0, 1, 3, 2))

    def test_prism_over_c5(self):
        prism = cartesian_product(complete_graph(2), cycle_graph(5))
        assert prism.n == 10 and prism.edge_count == 15
        assert all(prism.degree(v) == 3 for v in range(10))

    def test_torus_3x3(self):
        t = cartesian_product(cycle_graph(3), cycle_graph(3))
        assert t.n == 9 and t.edge_count == 18
        assert all(t.degree(v) == 4 for v in range(9))

    @given(st.integers(2, 5), st.integers(2, 5), st.data())
    @settings(max_examples=30, deadline=None)
    def test_edge_count_formula(self, n1, n2, data):
        pairs1 = list(itertools.combinations(range(n1), 2))
        pairs2 = list(itertools.combinations(range(n2), 2))
        e1 = data.draw(st.sets(st.sampled_from(pairs1)) if pairs1 else st.just(set()))
        e2 = data.draw(st.sets(st.sampled_from(pairs2)) if pairs2 else st.just(set()))
        g1, g2 = Graph(n1, e1), Graph(n2, e2)
        p = cartesian_product(g1, g2)
        assert p.edge_count == len(e1) * n2 + len(e2) * n1

    def test_row_major_encoding(self):
        p = cartesian_product(path_graph(2), cycle_graph(3))
        # (u, v) -> u*3 + v; P2 edge joins (0,v)-(1,v)
        for v in range(3):
            assert p.adjacent(v, 3 + v)


class TestNormalization:
    def test_spec_example(self):
        x, vmap = normalize_to_unit_jump(5, 4, 3)
        assert x == 2
        g1 = build_circulant(CirculantSpec(10, (3, 4, 5)))
        g2 = build_circulant(CirculantSpec(10, (1, 2, 5)))
        assert check_isomorphism_by_map(g1, g2, vmap)

    def test_unit_jump_identity(self):
        x, vmap = normalize_to_unit_jump(4, 3, 1)
        assert x == 3
        assert vmap == tuple(range(8))

    def test_not_normalizable(self):
        with pytest.raises(NotNormalizableError):
            normalize_to_unit_jump(6, 4, 2)

    def test_all_normalizable_maps_check_out(self):
        from math import gcd

        for n in range(3, 16):
            for a in range(1, n):
                for b in range(a + 1, n):
                    if gcd(a, 2 * n) != 1 and gcd(b, 2 * n) != 1:
                        continue
                    x, vmap = normalize_to_unit_jump(n, a, b)
                    assert 1 < x < n
                    g1 = build_circulant(CirculantSpec(2 * n, (a, b, n)))
                    g2 = build_circulant(CirculantSpec(2 * n, tuple(sorted((1, x, n)))))
                    assert check_isomorphism_by_map(g1, g2, vmap), (n, a, b)


class TestIsomorphismByMap:
    def test_identity_on_k4(self):
        k4 = complete_graph(4)
        assert check_isomorphism_by_map(k4, k4, (0, 1, 2, 3))

    def test_bad_map_on_c4(self):
        c4 = cycle_graph(4)
        assert not check_isomorphism_by_map(c4, c4, (0, 2, 1, 3))

    def test_usage_errors(self):
        with pytest.raises(ValueError):
            check_isomorphism_by_map(complete_graph(3), complete_graph(4), (0, 1, 2))
        with pytest.raises(ValueError):
            check_isomorphism_by_map(complete_graph(3), complete_graph(3), (0, 0, 2))


class TestDotExport:
    def test_k6_edge_count_and_determinism(self):
        g = build_circulant(CirculantSpec(6, (1, 2, 3)))
        dot = graph_to_dot(g)
        assert dot == graph_to_dot(build_circulant(CirculantSpec(6, (1, 2, 3))))
        assert dot.count(" -- ") == 15
        lines = [l for l in dot.splitlines() if " -- " in l]
        assert lines == sorted(lines)
        assert dot.startswith("graph g {") and dot.rstrip().endswith("}")
