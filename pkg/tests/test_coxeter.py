from fractions import Fraction as F

import pytest

from reptile_lab import fixtures
from reptile_lab.angles import AngleForm, parse_angle
from reptile_lab.coxeter import (CoxeterDiagram, DiagramConstraints, NotAGroupError,
                                 PartitionConstraints, all_edges, burnside_count,
                                 classify_graph, coloring_automorphisms,
                                 enumerate_diagrams, enumerate_edge_partitions,
                                 is_group, is_rich, label_subgraph, orbits,
                                 pair_orbit_bound, subgroups_upto_two_generators,
                                 triangle_type_of)


def pi_form(q):
    return AngleForm.pi_multiple(F(q))


def all_same_k5():
    labels = {e: parse_angle("alpha") for e in all_edges(5)}
    return CoxeterDiagram(list("uvwxy"), labels)


def distinct_k5():
    labels = {e: pi_form(F(i + 1, 23)) for i, e in enumerate(all_edges(5))}
    return CoxeterDiagram(list("uvwxy"), labels)


class TestAutomorphisms:
    def test_distinct_labels_trivial(self):
        assert distinct_k5().automorphisms() == [tuple(range(5))]

    def test_all_same_full_group(self):
        assert len(all_same_k5().automorphisms()) == 120

    def test_fixture_orders(self):
        exp = fixtures.load("expectations")["aut_orders"]
        for key, order in exp.items():
            assert len(fixtures.diagram(key).automorphisms()) == order, key


class TestOrbits:
    def test_monochromatic_triangles_one_orbit(self):
        d = all_same_k5()
        t = d.triangle_type((0, 1, 2))
        assert len(orbits(d, "triangles", t)) == 1

    def test_case_a_4_mixed_triangles(self):
        d = fixtures.diagram("case-a-4")
        t = triangle_type_of([d.relations.normalize(parse_angle(s))
                              for s in ("alpha", "beta", "gamma")])
        assert len(orbits(d, "triangles", t)) == 4
        assert is_rich(d, t)

    def test_not_rich(self):
        d = all_same_k5()
        assert not is_rich(d, d.triangle_type((0, 1, 2)))


class TestBurnside:
    def test_symmetric_group_on_three(self):
        from itertools import permutations
        group = list(permutations(range(3)))
        assert burnside_count(group, [0, 1, 2], lambda g, x: g[x]) == 1

    def test_transposition_on_pairs(self):
        group = [tuple(range(5)), (1, 0, 2, 3, 4)]
        pairs = [frozenset(e) for e in all_edges(5)]
        act = lambda g, s: frozenset(g[x] for x in s)
        assert burnside_count(group, pairs, act) == 7

    def test_identity_only(self):
        group = [tuple(range(4))]
        assert burnside_count(group, list(range(9)), lambda g, x: x) == 9

    def test_non_group_rejected(self):
        with pytest.raises(NotAGroupError):
            burnside_count([(1, 0, 2, 3, 4)], [0], lambda g, x: x)

    def test_pair_orbit_bound(self):
        assert pair_orbit_bound(5) == 7
        assert pair_orbit_bound(4) == 4
        with pytest.raises(ValueError):
            pair_orbit_bound(1)

    def test_exhaustive_bound_on_five_points(self):
        pairs = [frozenset(e) for e in all_edges(5)]
        act = lambda g, s: frozenset(g[x] for x in s)
        tight = False
        for group in subgroups_upto_two_generators(5):
            if len(group) == 1:
                continue
            cnt = burnside_count(sorted(group), pairs, act)
            assert cnt <= 7
            if cnt == 7 and len(group) == 2:
                tight = True
        assert tight

    def test_group_validation(self):
        assert is_group([tuple(range(3)), (1, 2, 0), (2, 0, 1)])
        assert not is_group([(1, 2, 0)])


class TestSubgraphClassification:
    def test_catalog_names(self):
        assert classify_graph([]) == "empty"
        assert classify_graph([(0, 1), (2, 3)]) == "P2+P2"
        assert classify_graph([(0, 1), (1, 2), (2, 3)]) == "P4"
        assert classify_graph([(0, 1), (0, 2), (0, 3), (1, 4)]) == "fork"

    def test_two_indivisible_b_alpha_is_k4(self):
        d = fixtures.diagram("two-indivisible-b")
        assert label_subgraph(d, parse_angle("alpha")) == "K4"

    def test_ab_class_f_alpha(self):
        ab = fixtures.load("ab_pairs")["f"]
        order = {v: i for i, v in enumerate("uvwxy")}
        edges = [tuple(sorted((order[a], order[b]))) for a, b in ab["alpha"]]
        assert classify_graph(edges) == "P2+P2"

    def test_empty_label(self):
        d = fixtures.diagram("quarter-1")
        assert label_subgraph(d, parse_angle("8/9 pi")) == "empty"

    def test_quarter_fixtures_alpha_shape(self):
        for key in ("quarter-1", "quarter-3"):
            assert label_subgraph(fixtures.diagram(key), parse_angle("1/4 pi")) == "P2+P2"
        assert label_subgraph(fixtures.diagram("quarter-2"), parse_angle("1/4 pi")) == "P2+P3"


class TestEnumeration:
    def test_k3_single_letter(self):
        alphabet = [parse_angle("alpha")]
        found = enumerate_diagrams(3, alphabet, DiagramConstraints())
        assert len(found) == 1

    def test_no_two_isomorphic(self, case_a_diagrams):
        keys = [d.canonical_key() for d in case_a_diagrams]
        assert len(keys) == len(set(keys))
        # canonical form is stable under re-canonicalization
        for d in case_a_diagrams:
            rebuilt = CoxeterDiagram.from_fixture(d.to_fixture())
            assert rebuilt.canonical_key() == d.canonical_key()

    def test_fixture_round_trip(self):
        d = fixtures.diagram("fifth-2")
        again = CoxeterDiagram.from_fixture(d.to_fixture())
        assert again.canonical_key() == d.canonical_key()
        assert again.labels == d.labels


class TestPartitions:
    def test_monochromatic_satisfies_single_type(self):
        res = enumerate_edge_partitions(5, PartitionConstraints(one_type_at_least=4))
        assert len(res) >= 1
        assert tuple([0] * 10) in res

    def test_two_types_trivial_empty(self):
        res = enumerate_edge_partitions(
            5, PartitionConstraints(two_types_each_at_least=4,
                                    trivial_automorphisms=True))
        assert res == []

    def test_k4_variant_empty(self):
        res = enumerate_edge_partitions(
            4, PartitionConstraints(two_types_each_at_least=3,
                                    trivial_automorphisms=True))
        assert res == []

    def test_coloring_automorphisms(self):
        mono = tuple([0] * 10)
        assert len(coloring_automorphisms(mono, 5)) == 120
