from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from hypercode.codes import OccurrenceLog, Pattern, generated_complex
from hypercode.errors import CompositionError, ConfigError, LevelRangeError
from hypercode.hyperstructure import BuildConfig, build_hyperstructure, canonical_form
from hypercode.topology import (
    NerveConfig,
    compose_bonds,
    delta_correspondence,
    gluing_graph,
    level_complex,
    max_cliques,
    nerve,
)

from oracles import betti_naive


def _log(bins, n):
    return OccurrenceLog(n, tuple((t, Pattern.of(s)) for t, s in enumerate(bins)))


def _form_id(hs, level, form):
    for b in hs.level(level):
        if canonical_form(hs, level, b.id) == form:
            return b.id
    raise AssertionError(form)


class TestLevelComplex:
    def test_triad_level1_three_triangles(self, triad):
        k = level_complex(triad, 1)
        assert k.maximal_simplices == frozenset({(0, 1, 2), (3, 4, 5), (6, 7, 8)})
        assert betti_naive(sorted(k.maximal_simplices), 2) == (3, 0, 0)

    def test_triad_level2_hollow_triangle(self, triad):
        k = level_complex(triad, 2)
        assert len(k.vertex_labels) == 3
        assert all(len(s) == 2 for s in k.maximal_simplices)
        assert len(k.maximal_simplices) == 3
        assert betti_naive(sorted(k.maximal_simplices), 1) == (1, 1)

    def test_single_bond_edge(self):
        hs = build_hyperstructure(_log([{0, 1}], 2))
        k = level_complex(hs, 1)
        assert k.maximal_simplices == frozenset({(0, 1)})

    def test_matches_generated_complex(self, triad):
        supports = [Pattern(b.constituents) for b in triad.level(1)]
        assert level_complex(triad, 1) == generated_complex(supports, triad.n)

    def test_isolated_vertex_at_level2(self):
        # {4,5} never co-fires with anything: isolated vertex upstairs
        bins = [{0, 1}, {2, 3}, {4, 5}, {0, 1, 2, 3}]
        hs = build_hyperstructure(_log(bins, 6))
        k = level_complex(hs, 2)
        singletons = {s for s in k.maximal_simplices if len(s) == 1}
        assert len(singletons) == 1

    def test_range_error(self, triad):
        with pytest.raises(LevelRangeError):
            level_complex(triad, 3)


class TestCorrespondence:
    def test_triad_tabulated_boundary(self, triad):
        corr = delta_correspondence(triad, 1)
        assert corr.from_level == 2 and corr.to_level == 1
        assert set(corr.map) == {b.id for b in triad.level(2)}
        for bid, image in corr.map.items():
            assert image == frozenset(triad.bond(2, bid).constituents)
            assert len(image) == 2

    def test_k1_range_error(self):
        hs = build_hyperstructure(_log([{0, 1}], 2))
        with pytest.raises(LevelRangeError):
            delta_correspondence(hs, 1)

    def test_no_pruned_references(self):
        bins = [{0, 1}, {2, 3}, {0, 1}, {2, 3}, {0, 1, 2, 3}, {4, 5}]
        hs = build_hyperstructure(_log(bins, 6), BuildConfig(min_count=2))
        for i in range(1, hs.k):
            ids_below = {b.id for b in hs.level(i)}
            for image in delta_correspondence(hs, i).map.values():
                assert image <= ids_below


class TestGluingGraph:
    def test_triad_level2_is_k3(self, triad):
        g = gluing_graph(triad, 2, 1)
        assert len(g.vertices) == 3
        assert len(g.edges) == 3
        # every overlap is a single shared level-1 bond
        assert all(len(ov) == 1 for ov in g.edges.values())

    def test_triad_level1_disjoint(self, triad):
        g = gluing_graph(triad, 1, 0)
        assert g.edges == {}

    def test_single_vertex(self):
        hs = build_hyperstructure(_log([{0, 1}], 2))
        g = gluing_graph(hs, 1, 0)
        assert g.vertices == (0,) and g.edges == {}

    def test_dot_export(self, triad):
        dot = gluing_graph(triad, 2, 1).to_dot()
        assert dot.startswith("graph gluing_2_1 {")
        assert "--" in dot

    def test_range_error(self, triad):
        with pytest.raises(LevelRangeError):
            gluing_graph(triad, 2, 2)


class TestCompose:
    def test_overlapping_supports(self):
        bins = [{0, 1, 2}, {2, 3, 4}]
        hs = build_hyperstructure(_log(bins, 5))
        comp = compose_bonds(hs, 1, [0, 1], 0)
        assert comp.union == (0, 1, 2, 3, 4)
        assert comp.overlaps == ((2,),)

    def test_single_id_identity(self, triad):
        comp = compose_bonds(triad, 1, [0], 0)
        assert set(comp.union) == set(triad.bond(1, 0).constituents)
        assert comp.overlaps == ()

    def test_disjoint_error(self, triad):
        a = _form_id(triad, 1, "{0,1,2}")
        b = _form_id(triad, 1, "{3,4,5}")
        with pytest.raises(CompositionError) as err:
            compose_bonds(triad, 1, [a, b], 0)
        assert str(a) in str(err.value) and str(b) in str(err.value)

    def test_triad_level2_chain(self, triad):
        ab = _form_id(triad, 2, "{{0,1,2},{3,4,5}}")
        bc = _form_id(triad, 2, "{{3,4,5},{6,7,8}}")
        ac = _form_id(triad, 2, "{{0,1,2},{6,7,8}}")
        comp = compose_bonds(triad, 2, [ab, bc, ac], 1)
        assert set(comp.union) == {b.id for b in triad.level(1)}
        assert len(comp.overlaps) == 2


class TestNerve:
    def test_triad_pairwise(self, triad):
        k = nerve(triad)
        assert len(k.vertex_labels) == 6
        level2 = {i for i, (lvl, _) in enumerate(k.vertex_labels) if lvl == 2}
        maximal = set(k.maximal_simplices)
        assert tuple(sorted(level2)) in maximal
        assert sum(1 for s in maximal if len(s) == 1) == 3
        assert betti_naive(sorted(maximal), 2) == (4, 0, 0)

    def test_triad_connected_same(self, triad):
        assert nerve(triad, NerveConfig(rule="connected")) == nerve(triad)

    def test_empty(self):
        hs = build_hyperstructure(OccurrenceLog(3, ()))
        k = nerve(hs)
        assert k.vertex_labels == () and k.maximal_simplices == frozenset()

    def test_vertex_count_is_bond_count(self, triad):
        k = nerve(triad)
        assert len(k.vertex_labels) == sum(len(l) for l in triad.levels)

    def test_include_levels(self, triad):
        k = nerve(triad, NerveConfig(include_levels=frozenset({1})))
        assert len(k.vertex_labels) == 3
        assert all(len(s) == 1 for s in k.maximal_simplices)

    def test_flag_complex_property(self):
        # every edge of every maximal simplex is a gluing edge and every
        # maximal clique appears
        bins = [{0, 1, 2}, {2, 3}, {3, 4, 5}, {0, 5}]
        hs = build_hyperstructure(_log(bins, 6))
        k = nerve(hs, NerveConfig(include_levels=frozenset({1})))
        g = gluing_graph(hs, 1, 0)
        edges = set(g.edges)
        for s in k.maximal_simplices:
            labels = [k.vertex_labels[v][1] for v in s]
            for x in range(len(labels)):
                for y in range(x + 1, len(labels)):
                    pair = (min(labels[x], labels[y]), max(labels[x], labels[y]))
                    assert pair in edges
        adjacency = {v: g.neighbors(v) for v in g.vertices}
        budget = 10**6
        for clique in max_cliques(g.vertices, adjacency, budget):
            s = tuple(sorted(clique))
            assert any(set(s) <= {k.vertex_labels[v][1] for v in m}
                       for m in k.maximal_simplices
                       if all(k.vertex_labels[v][0] == 1 for v in m))

    def test_connected_rule_downward_closure(self):
        bins = [{0, 1, 2}, {2, 3}, {3, 4, 5}, {6, 7}]
        hs = build_hyperstructure(_log(bins, 8))
        k = nerve(hs, NerveConfig(rule="connected", include_levels=frozenset({1})))
        rng = random.Random(7)
        maximal = sorted(k.maximal_simplices)
        faces = {s for m in maximal for s in _random_faces(m, rng)}
        for f in faces:
            assert any(set(f) <= set(m) for m in maximal)

    def test_bad_rule(self, triad):
        with pytest.raises(ConfigError):
            nerve(triad, NerveConfig(rule="chain"))

    def test_clique_budget(self):
        from hypercode.errors import CliqueBudgetError

        bins = [{0, 1}, {2, 3}]
        hs = build_hyperstructure(_log(bins, 4))
        with pytest.raises(CliqueBudgetError):
            nerve(hs, NerveConfig(clique_budget=1))


def _random_faces(simplex, rng, count=5):
    out = []
    for _ in range(count):
        size = rng.randint(1, len(simplex))
        out.append(tuple(sorted(rng.sample(list(simplex), size))))
    return out


@given(st.lists(st.sets(st.integers(0, 5), max_size=4), min_size=1, max_size=10))
@settings(max_examples=40, deadline=None)
def test_gluing_graph_invariants(bins):
    hs = build_hyperstructure(_log(bins, 6))
    for i in range(1, hs.k + 1):
        for j in range(i):
            g = gluing_graph(hs, i, j)
            for (a, b), overlap in g.edges.items():
                assert a < b
                assert overlap
