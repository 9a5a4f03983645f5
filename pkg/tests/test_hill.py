from fractions import Fraction as F

import pytest

from reptile_lab.gram import EuclideanSimplex
from reptile_lab.hill import (LatticeTile, PairingError, compatibility_graph,
                              congruent, generate_h1_tiling, generate_h2_h1_tiles,
                              hill_simplex, pair_h2_tiling, pair_union_simplex,
                              tile_volume, tiling_from_json, tiling_report,
                              tiling_to_json, tiling_to_off, _signed_perms)

H = F(1, 2)


class TestBaseSimplices:
    def test_h0_3_vertices(self):
        s = hill_simplex(3, 0)
        assert s.vertices == ((F(0),) * 3, (H, F(0), F(0)), (H, H, F(0)), (H, H, H))

    def test_h1_2_vertices(self):
        s = hill_simplex(2, 1)
        assert s.vertices == ((F(0), F(0)), (F(1), F(0)), (H, H))

    def test_volume_ratios(self):
        for d in (2, 3, 4, 5):
            v0 = hill_simplex(d, 0).volume()
            v1 = hill_simplex(d, 1).volume()
            v2 = hill_simplex(d, 2).volume()
            assert v2 == 2 * v1 == 4 * v0
            assert tile_volume(d) == v1

    def test_bad_index(self):
        with pytest.raises(ValueError):
            hill_simplex(3, 3)


class TestTilings:
    @pytest.mark.parametrize("d,m", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2),
                                     (3, 3), (4, 2)])
    def test_h1_counts_volume_congruence(self, d, m):
        tiles = generate_h1_tiling(d, m)
        base = hill_simplex(d, 1)
        rep = tiling_report(tiles, base)
        assert rep.tile_count == m ** d
        assert rep.total_volume == base.volume() * m ** d
        assert rep.all_congruent

    def test_single_tile(self):
        tiles = generate_h1_tiling(2, 1)
        assert len(tiles) == 1
        assert congruent(tiles[0].simplex(), hill_simplex(2, 1))

    def test_distance_multisets_match(self):
        tiles = generate_h1_tiling(3, 2)
        def dists(t):
            vs = t.vertices()
            return sorted(sum((a - b) ** 2 for a, b in zip(u, v))
                          for i, u in enumerate(vs) for v in vs[i + 1:])
        ref = dists(tiles[0])
        assert all(dists(t) == ref for t in tiles)

    def test_pairwise_congruent_sample(self):
        tiles = generate_h1_tiling(3, 2)
        for t in tiles[1:]:
            assert congruent(tiles[0].simplex(), t.simplex())


class TestCompatibility:
    def test_full_cube_components_are_four_cycles(self):
        for d in (2, 3, 4):
            tiles = [LatticeTile(tuple(1 for _ in range(d)), sp)
                     for sp in _signed_perms(d)]
            graph = compatibility_graph(tiles)
            assert set(graph.component_sizes()) == {4}
            for comp in graph.components:
                inside = [e for e in graph.edges if e[0] in comp]
                assert len(inside) == 4  # 4 vertices, 4 edges: a cycle
                degrees = {}
                for a, b in inside:
                    degrees[a] = degrees.get(a, 0) + 1
                    degrees[b] = degrees.get(b, 0) + 1
                assert set(degrees.values()) == {2}

    def test_restricted_components_even(self):
        for d, m in ((2, 2), (3, 2), (3, 3)):
            tiles = generate_h2_h1_tiles(d, m)
            graph = compatibility_graph(tiles)
            assert all(len(c) in (2, 4) for c in graph.components)

    def test_single_tile_no_edges(self):
        tiles = generate_h1_tiling(2, 1)
        graph = compatibility_graph(tiles)
        assert graph.edges == []


class TestPairing:
    @pytest.mark.parametrize("d,m", [(2, 1), (2, 2), (3, 2), (3, 3), (4, 2), (4, 3)])
    def test_pairing(self, d, m):
        pairs = pair_h2_tiling(d, m)
        assert len(pairs) == m ** d
        vol = sum((u.volume() for _, _, u in pairs), F(0))
        assert vol == hill_simplex(d, 2).volume() * m ** d

    def test_union_simplex_structure(self):
        t1 = LatticeTile((1, 1, 1), ((1, 0), (1, 1)))
        t2 = LatticeTile((1, 1, 1), ((1, 0), (1, 2)))
        assert t1.compatible_with(t2)
        union = pair_union_simplex(t1, t2)
        assert congruent(union, hill_simplex(3, 2))

    def test_incompatible_rejected(self):
        t1 = LatticeTile((1, 1, 1), ((1, 0), (1, 1)))
        t3 = LatticeTile((1, 1, 1), ((1, 0), (-1, 1)))
        assert not t1.compatible_with(t3)
        with pytest.raises(PairingError):
            pair_union_simplex(t1, t3)


class TestCongruence:
    def test_mirror_image(self):
        s = hill_simplex(3, 1)
        mirror = EuclideanSimplex(tuple(tuple(-c if i == 0 else c
                                              for i, c in enumerate(v))
                                        for v in s.vertices))
        assert congruent(s, mirror)

    def test_scaled_not_congruent(self):
        s = hill_simplex(3, 0)
        half = EuclideanSimplex(tuple(tuple(c / 2 for c in v) for v in s.vertices))
        assert not congruent(s, half)

    def test_dimension_mismatch(self):
        assert not congruent(hill_simplex(2, 0), hill_simplex(3, 0))


class TestExport:
    def test_json_round_trip(self):
        tiles = generate_h1_tiling(3, 2)
        data = tiling_to_json(tiles)
        assert data["tiles"][0]["vertices"][0][0].count("/") <= 1
        back = tiling_from_json(data)
        assert back == tiles

    def test_off_export(self):
        tiles = generate_h1_tiling(3, 1)
        text = tiling_to_off(tiles)
        assert text.startswith("OFF\n")
        with pytest.raises(ValueError):
            tiling_to_off(generate_h1_tiling(4, 2))
