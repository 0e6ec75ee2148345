import itertools
import json
import random

import pytest

from helpers import (inclusion_exclusion_euler, nerve_oracle_homology,
                     random_cover, union_find_components)
from motivic_kit.hypercube import (ChainMap, CStar, CubeDiagram, KSVertex,
                                   Product, Shift, Twist, ZeroMotive,
                                   build_kappa, compose_edge_labels,
                                   cover_cube_diagram, ks_hocolim,
                                   psi, psi_edge, psi_inverse,
                                   punctured_cube_hocolim)
from motivic_kit.qlinalg import (ChainComplex, QMatrix, matmul,
                                 single_degree_complex)


class TestPsi:
    def test_empty_subset(self):
        assert psi(3, set()) == (0, 0, 0)

    def test_singleton(self):
        assert psi(2, {0}) == (1, 0)

    def test_bijection(self):
        n = 3
        seen = set()
        for r in range(n + 1):
            for combo in itertools.combinations(range(n), r):
                v = psi(n, combo)
                assert psi_inverse(v) == frozenset(combo)
                seen.add(v)
        assert len(seen) == 2 ** n

    def test_edge_case_split(self):
        labels = psi_edge(3, {0}, {0, 1})
        assert labels == ("id1", "tau", "id0")

    def test_functoriality_on_chain(self):
        first = psi_edge(2, set(), {0})
        second = psi_edge(2, {0}, {0, 1})
        assert compose_edge_labels(first, second) == psi_edge(2, set(), {0, 1})

    def test_bad_subset_rejected(self):
        with pytest.raises(ValueError):
            psi(2, {5})


def two_patch_cover():
    return cover_cube_diagram([["a", "b"], ["b", "c"]])


class TestCubeDiagram:
    def test_missing_vertex_rejected(self):
        cube, _ = two_patch_cover()
        partial = dict(cube.vertices)
        del partial[frozenset({0, 1})]
        with pytest.raises(ValueError):
            CubeDiagram(2, partial, cube.edges)

    def test_noncommuting_square_rejected(self):
        # three scalar vertices; one path scaled by 2, the other by 3
        one = single_degree_complex(1)
        vertices = {frozenset(s): one
                    for r in range(1, 4)
                    for s in itertools.combinations(range(3), r)}
        edges = {}
        for big in vertices:
            for el in big:
                small = big - {el}
                if not small:
                    continue
                scale = 2 if (big == frozenset({0, 1, 2}) and el == 2) else 1
                edges[(big, small)] = ChainMap(one, one,
                                               {0: QMatrix(1, 1, [scale])})
        with pytest.raises(ValueError):
            CubeDiagram(3, vertices, edges)

    def test_chain_map_must_commute(self):
        src = ChainComplex(0, 1, {0: 1, 1: 1}, {1: QMatrix(1, 1, [1])})
        tgt = ChainComplex(0, 1, {0: 1, 1: 1}, {1: QMatrix(1, 1, [2])})
        with pytest.raises(ValueError):
            ChainMap(src, tgt, {0: QMatrix(1, 1, [1]),
                                1: QMatrix(1, 1, [1])})

    def test_json_round_trip(self):
        cube, _ = two_patch_cover()
        data = json.loads(json.dumps(cube.to_json(), sort_keys=True))
        back = CubeDiagram.from_json(data)
        assert back.vertices == cube.vertices
        for key in cube.edges:
            assert back.edges[key] == cube.edges[key]


class TestPuncturedHocolim:
    def test_single_vertex_is_the_complex_itself(self):
        cube, _ = cover_cube_diagram([["a", "b", "c"]])
        tot = punctured_cube_hocolim(cube)
        assert tot.dims == {0: 3}
        assert tot.homology_dims() == {0: 3}

    def test_two_patch_totals(self):
        cube, union = two_patch_cover()
        tot = punctured_cube_hocolim(cube)
        assert tot.dims == {0: 4, 1: 1}
        # block layout: {0} then {1}; Čech signs by omitted position
        assert tot.differentials[1] == QMatrix(4, 1, [0, -1, 1, 0])
        assert tot.homology_dims() == {0: 3, 1: 0}
        assert len(union) == 3

    def test_two_patch_matches_hand_built_pushout_cone(self):
        cube, _ = two_patch_cover()
        tot = punctured_cube_hocolim(cube)
        cone = ChainComplex(0, 1, {0: 4, 1: 1},
                            {1: QMatrix(4, 1, [0, -1, 1, 0])})
        for n in (0, 1):
            assert tot.dim(n) == cone.dim(n)
        assert tot.homology_dims() == cone.homology_dims()

    def test_euler_additivity(self):
        cube, _ = cover_cube_diagram([["a", "b"], ["b", "c"], ["a", "c", "d"]])
        tot = punctured_cube_hocolim(cube)
        alternating = sum((-1) ** (len(s) - 1)
                          * cube.vertices[s].euler_characteristic()
                          for s in cube.vertices)
        assert tot.euler_characteristic() == alternating

    def test_graded_vertices_sign_interplay(self):
        # two-term acyclic complexes at every vertex, identity edges: the
        # construction only succeeds if vertical and horizontal pieces
        # anticommute, which pins the (-1)^p sign
        two_term = ChainComplex(0, 1, {0: 1, 1: 1}, {1: QMatrix(1, 1, [1])})
        subsets = [frozenset({0}), frozenset({1}), frozenset({0, 1})]
        vertices = {s: two_term for s in subsets}
        ident = {0: QMatrix.identity(1), 1: QMatrix.identity(1)}
        edges = {(frozenset({0, 1}), frozenset({0})):
                 ChainMap(two_term, two_term, ident),
                 (frozenset({0, 1}), frozenset({1})):
                 ChainMap(two_term, two_term, ident)}
        cube = CubeDiagram(2, vertices, edges)
        tot = punctured_cube_hocolim(cube)
        assert tot.dims == {0: 2, 1: 3, 2: 1}
        for n in range(tot.lo + 2, tot.hi + 1):
            assert matmul(tot.differentials[n - 1],
                          tot.differentials[n]).is_zero()
        alternating = sum((-1) ** (len(s) - 1)
                          * cube.vertices[s].euler_characteristic()
                          for s in cube.vertices)
        assert tot.euler_characteristic() == alternating
        # each vertex is acyclic, so the colimit is too
        assert all(v == 0 for v in tot.homology_dims().values())

    def test_randomized_cover_oracles(self):
        rng = random.Random(2026)
        for trial in range(25):
            comps = random_cover(rng)
            cube, union = cover_cube_diagram(comps)
            tot = punctured_cube_hocolim(cube)
            hom = tot.homology_dims()
            assert hom[0] == union_find_components(comps)
            assert hom.get(1, 0) == nerve_oracle_homology(comps, 1)
            assert tot.euler_characteristic() == \
                inclusion_exclusion_euler(comps)
            for n in range(tot.lo + 2, tot.hi + 1):
                assert matmul(tot.differentials[n - 1],
                              tot.differentials[n]).is_zero()


def four_point_ambient_setup():
    cube, _ = two_patch_cover()
    ambient = single_degree_complex(4)  # points a, b, c, d
    pts = ["a", "b", "c", "d"]
    comps = [["a", "b"], ["b", "c"]]
    singles = {}
    for s in cube.subsets():
        if len(s) != 1:
            continue
        comp = comps[next(iter(s))]
        m = QMatrix(4, len(comp),
                    [1 if pts[i] == p else 0 for i in range(4) for p in comp])
        singles[s] = ChainMap(cube.vertices[s], ambient, {0: m})
    return ambient, cube, singles


class TestKsHocolim:
    def test_empty_cover_returns_ambient(self):
        ambient = single_degree_complex(4)
        empty = CubeDiagram(0, {}, {})
        cone = ks_hocolim(ambient, empty, {})
        assert cone.homology_dims() == ambient.homology_dims()

    def test_four_points_minus_three(self):
        ambient, cube, singles = four_point_ambient_setup()
        cone = ks_hocolim(ambient, cube, singles)
        hom = cone.homology_dims()
        assert hom[0] == 1 and hom[1] == 0

    def test_identity_cover_is_acyclic(self):
        cube, _ = cover_cube_diagram([["a", "b", "c"]])
        ambient = single_degree_complex(3)
        s0 = frozenset({0})
        singles = {s0: ChainMap(cube.vertices[s0], ambient,
                                {0: QMatrix.identity(3)})}
        cone = ks_hocolim(ambient, cube, singles)
        assert all(v == 0 for v in cone.homology_dims().values())

    def test_incompatible_maps_rejected(self):
        cube, _ = cover_cube_diagram([["a"], ["a"]])
        ambient = single_degree_complex(2)
        singles = {
            frozenset({0}): ChainMap(cube.vertices[frozenset({0})], ambient,
                                     {0: QMatrix(2, 1, [1, 0])}),
            frozenset({1}): ChainMap(cube.vertices[frozenset({1})], ambient,
                                     {0: QMatrix(2, 1, [0, 1])}),
        }
        with pytest.raises(ValueError):
            ks_hocolim(ambient, cube, singles)

    def test_cone_dd_zero(self):
        ambient, cube, singles = four_point_ambient_setup()
        cone = ks_hocolim(ambient, cube, singles)
        for n in range(cone.lo + 2, cone.hi + 1):
            assert matmul(cone.differentials[n - 1],
                          cone.differentials[n]).is_zero()


class TestKappa:
    def test_no_components(self):
        d = build_kappa([], "Xbar", 2)
        names = [name for name, _ in d.rows()]
        assert names == ["l", "u"]
        assert d.twist == -2 and d.shift == -4

    def test_two_components(self):
        d = build_kappa(["A", "B"], "Xbar", 1)
        vm = d.vertex_map()
        inner = [v for v in vm if v.tag == "inner"]
        assert len(inner) == 3
        assert vm[KSVertex.lower()] == CStar(("Xbar",))
        assert vm[KSVertex.upper()] == ZeroMotive()
        assert vm[KSVertex.inner((0, 1))] == CStar(("A", "B"))

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            build_kappa(["A", "A"], "X", 1)

    def test_cross_with(self):
        d = build_kappa(["A"], "Xbar", 1).cross_with("Y")
        vm = d.vertex_map()
        assert vm[KSVertex.lower()] == Product(CStar(("Xbar",)), "Y")
        assert vm[KSVertex.upper()] == ZeroMotive()  # zero absorbs the factor

    def test_annotation(self):
        d = build_kappa(["A"], "X", 3)
        assert "(-3)" in d.annotation() and "[-6]" in d.annotation()


class TestFormalMotive:
    def test_twists_add(self):
        e = Twist(Twist(CStar(("X",)), 1), 2).normalized()
        assert e == Twist(CStar(("X",)), 3)

    def test_shifts_add(self):
        e = Shift(Shift(CStar(("X",)), -2), -2).normalized()
        assert e == Shift(CStar(("X",)), -4)

    def test_twist_shift_commute(self):
        a = Twist(Shift(CStar(("X",)), 2), 1).normalized()
        b = Shift(Twist(CStar(("X",)), 1), 2).normalized()
        assert a == b

    def test_zero_twist_dropped(self):
        assert Twist(CStar(("X",)), 0).normalized() == CStar(("X",))

    def test_zero_absorbs(self):
        assert Twist(ZeroMotive(), 5).normalized() == ZeroMotive()
        assert Product(ZeroMotive(), "Y").normalized() == ZeroMotive()

    def test_rendering(self):
        assert str(Shift(Twist(CStar(("A", "B")), -1), -2)) == \
            "C_*(A&B)(-1)[-2]"
