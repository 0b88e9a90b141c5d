import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quorder import (
    NotAQuandle,
    NotInvertible,
    affine_quandle,
    conj_quandle,
    core_quandle,
    cyclic_group,
    dihedral_quandle,
    direct_product,
    dual_quandle,
    generalized_alexander_quandle,
    inner_group,
    is_involutory,
    is_latin,
    is_semi_latin,
    is_subquandle,
    is_trivial_quandle,
    left_translation,
    orbits,
    product_quandle,
    quandle_from_table,
    right_translation,
    scaling_automorphism,
    stabilizer_elements,
    symmetric_group,
    trivial_quandle,
)
from quorder.groups import identity_perm, is_cyclic

# the order-3 quandle with orbit decomposition {0,1} | {2}, written 0-indexed
THREE_ELT = [[0, 0, 1], [1, 1, 0], [2, 2, 2]]


def three_element_quandle():
    return quandle_from_table(THREE_ELT)


class TestValidation:
    def test_three_element_table_is_valid(self):
        q = three_element_quandle()
        assert q.size == 3

    def test_trivial_table_is_valid(self):
        quandle_from_table([[0, 0, 0], [1, 1, 1], [2, 2, 2]])

    def test_idempotency_violation(self):
        with pytest.raises(NotAQuandle) as exc:
            quandle_from_table([[1, 0], [0, 1]])
        assert exc.value.axiom == "idempotency"
        assert exc.value.witness == (0, 0)

    def test_column_bijectivity_violation(self):
        with pytest.raises(NotAQuandle) as exc:
            quandle_from_table([[0, 0, 0], [1, 1, 0], [2, 2, 2]])
        assert exc.value.axiom == "right-bijectivity"

    def test_distributivity_violation(self):
        # diagonal idempotent, all columns permutations, but (0*2)*0 != (0*0)*(2*0)
        bad = [[0, 2, 0], [2, 1, 1], [1, 0, 2]]
        with pytest.raises(NotAQuandle) as exc:
            quandle_from_table(bad)
        assert exc.value.axiom == "right-distributivity"


class TestFamilies:
    def test_trivial_tables(self):
        assert trivial_quandle(2).table == ((0, 0), (1, 1))
        assert trivial_quandle(3).table == ((0, 0, 0), (1, 1, 1), (2, 2, 2))
        assert trivial_quandle(1).table == ((0,),)

    def test_dihedral_3_table(self):
        assert dihedral_quandle(3).table == ((0, 2, 1), (2, 1, 0), (1, 0, 2))

    def test_dihedral_1(self):
        assert dihedral_quandle(1).table == ((0,),)

    def test_dihedral_is_involutory(self):
        for n in range(1, 7):
            assert is_involutory(dihedral_quandle(n))

    def test_affine_5_2_first_row(self):
        q = affine_quandle(5, 2)
        assert q.table[0] == (0, 4, 3, 2, 1)

    def test_affine_alpha_1_is_trivial(self):
        assert affine_quandle(6, 1).table == trivial_quandle(6).table

    def test_affine_non_unit_rejected(self):
        with pytest.raises(NotInvertible):
            affine_quandle(4, 2)

    def test_conj_of_abelian_is_trivial(self):
        for g in (cyclic_group(3), cyclic_group(5), direct_product(cyclic_group(2), cyclic_group(2))):
            assert conj_quandle(g).table == trivial_quandle(g.size).table

    def test_conj_s3_orbit_sizes(self):
        q = conj_quandle(symmetric_group(3))
        assert sorted(len(o) for o in orbits(q)) == [1, 2, 3]

    def test_conj_of_trivial_group(self):
        assert conj_quandle(cyclic_group(1)).size == 1

    def test_core_z3_equals_dihedral(self):
        assert core_quandle(cyclic_group(3)).table == dihedral_quandle(3).table

    def test_core_z2_is_trivial(self):
        assert core_quandle(cyclic_group(2)).table == trivial_quandle(2).table

    def test_core_zn_equals_dihedral_up_to_8(self):
        for n in range(1, 9):
            assert core_quandle(cyclic_group(n)).table == dihedral_quandle(n).table

    def test_alexander_z5_doubling_equals_affine(self):
        g = cyclic_group(5)
        q = generalized_alexander_quandle(g, scaling_automorphism(g, 2))
        assert q.table == affine_quandle(5, 2).table

    def test_alexander_identity_automorphism_is_trivial(self):
        g = cyclic_group(4)
        q = generalized_alexander_quandle(g, scaling_automorphism(g, 1))
        assert q.table == trivial_quandle(4).table

    def test_alexander_z4_negation_equals_dihedral(self):
        g = cyclic_group(4)
        q = generalized_alexander_quandle(g, scaling_automorphism(g, 3))
        assert q.table == dihedral_quandle(4).table


class TestProduct:
    def test_product_of_trivial_and_dihedral_is_valid(self):
        q = product_quandle([trivial_quandle(2), dihedral_quandle(3)])
        assert q.size == 6

    def test_single_factor_is_identity(self):
        q = dihedral_quandle(4)
        assert product_quandle([q]).table == q.table

    def test_product_of_trivials_is_trivial(self):
        q = product_quandle([trivial_quandle(2), trivial_quandle(3)])
        assert q.table == trivial_quandle(6).table

    def test_conj_respects_products(self):
        for g, h in [
            (cyclic_group(2), cyclic_group(3)),
            (cyclic_group(3), symmetric_group(3)),
        ]:
            lhs = conj_quandle(direct_product(g, h))
            rhs = product_quandle([conj_quandle(g), conj_quandle(h)])
            assert lhs.table == rhs.table

    def test_empty_product_rejected(self):
        with pytest.raises(ValueError):
            product_quandle([])


class TestDual:
    def test_trivial_is_self_dual(self):
        for n in (1, 2, 4):
            assert dual_quandle(trivial_quandle(n)).table == trivial_quandle(n).table

    def test_involutory_dihedral_is_self_dual(self):
        assert dual_quandle(dihedral_quandle(3)).table == dihedral_quandle(3).table

    def test_right_cancellation(self):
        for q in (dihedral_quandle(5), affine_quandle(5, 2), three_element_quandle()):
            dual = dual_quandle(q)
            n = q.size
            for s in range(n):
                assert dual.op(s, s) == s
                for r in range(n):
                    assert dual.op(q.op(s, r), r) == s
                    assert q.op(dual.op(s, r), r) == s


class TestTranslations:
    def test_trivial_right_translation_is_identity(self):
        q = trivial_quandle(3)
        for s in range(3):
            assert right_translation(q, s).map == identity_perm(3)

    def test_trivial_left_translation_is_constant(self):
        q = trivial_quandle(3)
        assert left_translation(q, 1).map == (1, 1, 1)

    def test_dihedral_right_translation(self):
        assert right_translation(dihedral_quandle(3), 0).map == (0, 2, 1)

    def test_translation_metadata(self):
        q = dihedral_quandle(3)
        t = right_translation(q, 1)
        assert t.kind == "right" and t.base == 1 and t(0) == 2


class TestInnerGroup:
    def test_trivial_inner_group_is_trivial(self):
        for n in (1, 3, 5):
            assert inner_group(trivial_quandle(n)).order == 1

    def test_dihedral_3_inner_group(self):
        g = inner_group(dihedral_quandle(3))
        assert g.order == 6
        assert not is_cyclic(g)

    def test_three_element_inner_group_and_orbits(self):
        q = three_element_quandle()
        g = inner_group(q)
        assert g.order == 2
        assert orbits(q) == ((0, 1), (2,))


class TestPredicates:
    def test_dihedral_3(self):
        q = dihedral_quandle(3)
        assert is_latin(q)
        assert is_involutory(q)
        assert orbits(q) == ((0, 1, 2),)

    def test_trivial_3(self):
        q = trivial_quandle(3)
        assert not is_semi_latin(q)
        assert stabilizer_elements(q) == (0, 1, 2)
        assert is_trivial_quandle(q)

    def test_three_element_stabilizers(self):
        q = three_element_quandle()
        assert stabilizer_elements(q) == (0, 1)
        assert not is_trivial_quandle(q)

    def test_latin_iff_semi_latin(self, labeled_catalog):
        # injective self-maps of a finite carrier are bijective
        quandles = [
            affine_quandle(5, 2),
            conj_quandle(symmetric_group(3)),
        ] + [q for qs in labeled_catalog.values() for q in qs]
        for q in quandles:
            assert is_latin(q) == is_semi_latin(q)
            if is_latin(q):
                assert is_semi_latin(q)

    def test_subquandles_of_three_element(self):
        q = three_element_quandle()
        assert is_subquandle(q, {2})
        assert is_subquandle(q, {0, 1})
        assert not is_subquandle(q, {0, 2})
        with pytest.raises(ValueError):
            is_subquandle(q, {5})


@settings(max_examples=60, deadline=None)
@given(n=st.integers(min_value=1, max_value=12), alpha=st.integers(min_value=-12, max_value=12))
def test_affine_construction_matches_gcd(n, alpha):
    import math

    if math.gcd(alpha, n) == 1:
        q = affine_quandle(n, alpha)
        assert q.size == n
    else:
        with pytest.raises(NotInvertible):
            affine_quandle(n, alpha)


@settings(max_examples=40, deadline=None)
@given(st.permutations(list(range(5))))
def test_dual_of_dual_roundtrips(perm):
    # build a quandle by relabeling a latin one; double dual must return it
    base = affine_quandle(5, 2)
    table = tuple(
        tuple(perm[base.op(perm.index(i), perm.index(j))] for j in range(5))
        for i in range(5)
    )
    q = quandle_from_table(table)
    assert dual_quandle(dual_quandle(q)).table == q.table
