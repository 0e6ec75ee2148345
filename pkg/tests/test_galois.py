import json
from importlib import resources

import pytest

from motivic_kit.artin import graph_matrix, morphism_from_setmap
from motivic_kit.finsets import FinSet, SetMap
from motivic_kit.galois import (FiniteGroup, GSet, all_gset_actions,
                                cyclic_group, equivariant_set_maps,
                                fixed_coalgebra_morphisms, klein_four_group,
                                regular_gset, sub_gset, symmetric_group,
                                trivial_gset)

FIXTURE_NAMES = ["c2", "c3", "c4", "v4", "c5", "c6", "s3"]


def load_group(name: str) -> FiniteGroup:
    path = resources.files("motivic_kit").joinpath(f"data/groups/{name}.json")
    return FiniteGroup.from_json(json.loads(path.read_text()))


class TestFiniteGroup:
    def test_fixtures_load_and_validate(self):
        orders = {"c2": 2, "c3": 3, "c4": 4, "v4": 4, "c5": 5, "c6": 6,
                  "s3": 6}
        for name in FIXTURE_NAMES:
            g = load_group(name)
            assert g.order == orders[name]

    def test_fixtures_match_constructors(self):
        assert load_group("c4") == cyclic_group(4)
        assert load_group("v4") == klein_four_group()
        assert load_group("s3") == symmetric_group(3)

    def test_non_associative_rejected(self):
        # a Latin square that is not a group table
        table = [[0, 1, 2, 3, 4],
                 [1, 0, 3, 4, 2],
                 [2, 4, 0, 1, 3],
                 [3, 2, 4, 0, 1],
                 [4, 3, 1, 2, 0]]
        with pytest.raises(ValueError):
            FiniteGroup(table)

    def test_no_identity_rejected(self):
        with pytest.raises(ValueError):
            FiniteGroup([[1, 1], [1, 1]])

    def test_identity_need_not_be_element_zero(self):
        g = FiniteGroup([[1, 0], [0, 1]])  # element 1 is the identity
        assert g.identity == 1

    def test_inverses(self):
        g = load_group("s3")
        for a in g.elements():
            assert g.mul(a, g.inv(a)) == g.identity

    def test_generating_set(self):
        g = load_group("c6")
        gens = g.generating_set()
        assert g._closure(gens) == set(range(6))
        assert len(gens) <= 2


class TestGSet:
    def test_identity_must_act_trivially(self):
        c2 = cyclic_group(2)
        s = FinSet(2)
        swap = SetMap(s, s, [1, 0])
        with pytest.raises(ValueError):
            GSet(c2, s, [swap, swap])

    def test_homomorphism_enforced(self):
        c4 = cyclic_group(4)
        s = FinSet(2)
        ident = SetMap(s, s, [0, 1])
        swap = SetMap(s, s, [1, 0])
        # the generator squares to swap, not to the identity
        with pytest.raises(ValueError):
            GSet(c4, s, [ident, swap, swap, swap])

    def test_regular_action(self):
        g = load_group("s3")
        x = regular_gset(g)
        assert x.carrier.size == 6

    def test_json_round_trip(self):
        x = regular_gset(cyclic_group(3))
        assert GSet.from_json(x.to_json()) == x

    def test_all_actions_counts(self):
        # homomorphisms C2 -> Sym(3): identity plus the three transpositions
        assert len(all_gset_actions(cyclic_group(2), 3)) == 4
        # homomorphisms C3 -> Sym(3): identity plus the two 3-cycles
        assert len(all_gset_actions(cyclic_group(3), 3)) == 3


class TestEquivariantMaps:
    def test_trivial_group_gives_all_maps(self):
        e = FiniteGroup([[0]])
        x = trivial_gset(e, FinSet(2))
        y = trivial_gset(e, FinSet(3))
        assert len(equivariant_set_maps(x, y)) == 9

    def test_regular_to_trivial(self):
        c2 = cyclic_group(2)
        x = regular_gset(c2)
        y = trivial_gset(c2, FinSet(2))
        maps = equivariant_set_maps(x, y)
        assert len(maps) == 2
        assert all(len(set(f.values)) == 1 for f in maps)  # constants

    def test_regular_to_regular(self):
        c2 = cyclic_group(2)
        x = regular_gset(c2)
        assert len(equivariant_set_maps(x, x)) == 2

    def test_group_mismatch(self):
        x = regular_gset(cyclic_group(2))
        y = regular_gset(cyclic_group(3))
        with pytest.raises(ValueError):
            equivariant_set_maps(x, y)


class TestDescent:
    def test_trivial_group_gives_all_graphs(self):
        e = FiniteGroup([[0]])
        x = trivial_gset(e, FinSet(2))
        y = trivial_gset(e, FinSet(2))
        assert len(fixed_coalgebra_morphisms(x, y)) == 4

    def test_c2_regular_to_trivial(self):
        c2 = cyclic_group(2)
        x = regular_gset(c2)
        y = trivial_gset(c2, FinSet(2))
        fixed = fixed_coalgebra_morphisms(x, y)
        assert len(fixed) == 2
        graphs = {graph_matrix(f) for f in equivariant_set_maps(x, y)}
        assert {c.matrix for c in fixed} == graphs

    def test_descent_bijection_sample(self):
        # a cross-section of fixture groups and small actions
        for name in ["c2", "c3", "v4", "s3"]:
            g = load_group(name)
            actions = (all_gset_actions(g, 1) + all_gset_actions(g, 2)
                       + all_gset_actions(g, 3))
            for x in actions[:4]:
                for y in actions[:4]:
                    fixed = {c.matrix for c in fixed_coalgebra_morphisms(x, y)}
                    graphs = {graph_matrix(f)
                              for f in equivariant_set_maps(x, y)}
                    assert fixed == graphs

    def test_descent_size_four_carrier(self):
        c2 = cyclic_group(2)
        s4 = FinSet(4)
        # swap two pairs
        act = SetMap(s4, s4, [1, 0, 3, 2])
        x = GSet(c2, s4, [SetMap(s4, s4, range(4)), act])
        y = regular_gset(c2)
        fixed = {c.matrix for c in fixed_coalgebra_morphisms(x, y)}
        graphs = {graph_matrix(f) for f in equivariant_set_maps(x, y)}
        assert fixed == graphs

    def test_descent_size_four_regular_actions(self):
        # order-4 groups acting on themselves, against small targets
        for g in (cyclic_group(4), klein_four_group()):
            x = regular_gset(g)
            for y in (trivial_gset(g, FinSet(2)), x):
                fixed = {c.matrix for c in fixed_coalgebra_morphisms(x, y)}
                graphs = {graph_matrix(f)
                          for f in equivariant_set_maps(x, y)}
                assert fixed == graphs

    def test_subgroup_restriction_enlarges(self):
        s3 = load_group("s3")
        x = regular_gset(s3)
        y = trivial_gset(s3, FinSet(2))
        full_maps = equivariant_set_maps(x, y)
        full_fixed = fixed_coalgebra_morphisms(x, y)
        # restrict to the cyclic subgroup generated by any non-identity element
        for g in range(1, 6):
            xs = sub_gset(x, [g])
            ys = sub_gset(y, [g])
            sub_maps = equivariant_set_maps(xs, ys)
            sub_fixed = fixed_coalgebra_morphisms(xs, ys)
            assert {f.values for f in full_maps} <= {f.values for f in sub_maps}
            assert {c.matrix for c in full_fixed} <= \
                {c.matrix for c in sub_fixed}
            assert {c.matrix for c in sub_fixed} == \
                {graph_matrix(f) for f in sub_maps}

    def test_fixed_morphisms_are_valid_morphisms(self):
        c3 = cyclic_group(3)
        x = regular_gset(c3)
        y = trivial_gset(c3, FinSet(2))
        for c in fixed_coalgebra_morphisms(x, y):
            f = equivariant_set_maps(x, y)
            assert c.matrix in {morphism_from_setmap(m).matrix for m in f}
