import math
from itertools import permutations

import pytest

from quorder import (
    GroupAutomorphism,
    NotAGroup,
    NotAnAutomorphism,
    NotAPermutation,
    ResourceLimit,
    closure,
    cyclic_group,
    direct_product,
    fixed_point_witness,
    group_from_table,
    is_cyclic,
    is_semiregular,
    scaling_automorphism,
    symmetric_group,
)
from quorder.groups import compose, identity_perm, invert, orbits, perm_order

Z3_TABLE = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]

# 5-element loop (latin square with identity 0) that is not associative:
# (1*1)*2 = 0*2 = 2 but 1*(1*2) = 1*3 = 4
NONASSOC_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


class TestGroupFromTable:
    def test_cyclic_3_table_is_valid(self):
        g = group_from_table(Z3_TABLE, identity=0)
        assert g.size == 3
        assert g.mul(1, 2) == 0

    def test_non_bijective_row_rejected(self):
        with pytest.raises(NotAGroup, match="row 1"):
            group_from_table([[0, 1], [1, 1]], identity=0)

    def test_identity_failure_rejected(self):
        with pytest.raises(NotAGroup, match="identity"):
            group_from_table([[1, 0], [0, 1]], identity=0)

    def test_associativity_failure_rejected(self):
        with pytest.raises(NotAGroup, match="associativity"):
            group_from_table(NONASSOC_LOOP, identity=0)

    def test_s3_built_from_permutation_composition(self):
        # independent construction: compose the six permutations of 3 points
        elems = sorted(permutations(range(3)))
        index = {p: i for i, p in enumerate(elems)}
        table = [[index[compose(p, q)] for q in elems] for p in elems]
        g = group_from_table(table, identity=index[(0, 1, 2)])
        assert g.size == 6
        assert not g.is_abelian()
        assert g.table == symmetric_group(3).table

    def test_translations_are_bijections(self):
        for g in (cyclic_group(4), symmetric_group(3)):
            n = g.size
            for a in range(n):
                assert sorted(g.mul(a, x) for x in range(n)) == list(range(n))
                assert sorted(g.mul(x, a) for x in range(n)) == list(range(n))


class TestCyclicGroup:
    def test_trivial(self):
        g = cyclic_group(1)
        assert g.size == 1 and g.identity == 0

    def test_z3_table(self):
        assert cyclic_group(3).table == tuple(tuple(r) for r in Z3_TABLE)

    def test_z4_is_abelian(self):
        assert cyclic_group(4).is_abelian()

    def test_inverses(self):
        g = cyclic_group(5)
        assert g.inverses == (0, 4, 3, 2, 1)


class TestDirectProduct:
    def test_klein_four_self_inverse(self):
        g = direct_product(cyclic_group(2), cyclic_group(2))
        assert g.size == 4
        assert all(g.mul(x, x) == g.identity for x in range(4))

    def test_identity_factor(self):
        g = direct_product(cyclic_group(1), cyclic_group(3))
        assert g.table == cyclic_group(3).table

    def test_z2_x_z3_is_cyclic_of_order_6(self):
        g = direct_product(cyclic_group(2), cyclic_group(3))
        # element (1, 1) packs to 1*3 + 1 = 4
        assert g.element_order(4) == 6

    def test_encoding_is_row_major(self):
        g = direct_product(cyclic_group(2), cyclic_group(3))
        # (1, 2) * (1, 2) = (0, 1): 5 * 5 = 1
        assert g.mul(5, 5) == 1


class TestClosure:
    def test_identity_only(self):
        g = closure([identity_perm(3)], 3)
        assert g.order == 1

    def test_three_cycle(self):
        g = closure([(1, 2, 0)], 3)
        assert g.order == 3

    def test_two_reflections_generate_sym3(self):
        # x -> -x and x -> 2 - x mod 3
        neg = tuple((-x) % 3 for x in range(3))
        two_minus = tuple((2 - x) % 3 for x in range(3))
        g = closure([neg, two_minus], 3)
        assert g.order == 6
        assert g.elements == frozenset(permutations(range(3)))

    def test_contains_generators_and_is_fixed_point(self):
        gens = [(1, 0, 2, 3), (0, 2, 1, 3)]
        g = closure(gens, 4)
        assert all(tuple(x) in g.elements for x in gens)
        again = closure(g.elements, 4)
        assert again.elements == g.elements

    def test_order_divides_degree_factorial(self):
        for gens, degree in [([(1, 2, 0)], 3), ([(1, 0, 3, 2), (2, 3, 0, 1)], 4)]:
            g = closure(gens, degree)
            assert math.factorial(degree) % g.order == 0

    def test_rejects_non_permutation(self):
        with pytest.raises(NotAPermutation):
            closure([(0, 0, 1)], 3)

    def test_resource_limit(self):
        with pytest.raises(ResourceLimit):
            closure([(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)], 5, max_size=10)


class TestIsCyclic:
    def test_order_one(self):
        assert is_cyclic(closure([], 3))

    def test_four_cycle(self):
        assert is_cyclic(closure([(1, 2, 3, 0)], 4))

    def test_sym3_not_cyclic(self):
        g = closure(list(permutations(range(3))), 3)
        assert g.order == 6
        assert max(perm_order(p) for p in g.elements) == 3
        assert not is_cyclic(g)


class TestIsSemiregular:
    def test_order_one_any_degree(self):
        assert is_semiregular(closure([], 5))

    def test_double_transposition(self):
        assert is_semiregular(closure([(1, 0, 3, 2)], 4))

    def test_fixed_point_breaks_semiregularity(self):
        g = closure([(1, 0, 2)], 3)
        assert not is_semiregular(g)
        perm, point = fixed_point_witness(g)
        assert perm[point] == point and perm != identity_perm(3)

    def test_formulations_agree(self):
        groups = [
            closure([], 4),
            closure([(1, 0, 2)], 3),
            closure([(1, 2, 0)], 3),
            closure([(1, 0, 3, 2)], 4),
            closure(list(permutations(range(3))), 3),
            closure([(1, 2, 3, 0)], 4),
        ]
        for g in groups:
            by_orbits = all(len(o) == g.order for o in orbits(g))
            by_fixed_points = fixed_point_witness(g) is None
            divisibility = g.degree % g.order == 0 if by_orbits else True
            assert by_orbits == by_fixed_points == is_semiregular(g)
            assert divisibility


class TestAutomorphisms:
    def test_doubling_on_z5(self):
        g = cyclic_group(5)
        phi = GroupAutomorphism(g, (0, 2, 4, 1, 3))
        assert phi(1) == 2
        assert scaling_automorphism(g, 2).map == phi.map

    def test_non_bijective_rejected(self):
        with pytest.raises(NotAnAutomorphism):
            GroupAutomorphism(cyclic_group(3), (0, 0, 1))

    def test_non_homomorphism_rejected(self):
        with pytest.raises(NotAnAutomorphism):
            GroupAutomorphism(cyclic_group(4), (0, 2, 1, 3))

    def test_scaling_by_non_unit_rejected(self):
        with pytest.raises(NotAnAutomorphism):
            scaling_automorphism(cyclic_group(4), 2)


class TestPermHelpers:
    def test_compose_applies_right_first(self):
        p = (1, 2, 0)
        q = (0, 2, 1)
        assert compose(p, q) == (1, 0, 2)

    def test_invert(self):
        p = (2, 0, 1)
        assert compose(p, invert(p)) == identity_perm(3)

    def test_perm_order(self):
        assert perm_order((1, 2, 0, 4, 3)) == 6
