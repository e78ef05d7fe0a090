import os

from django.test import SimpleTestCase

from psum.exceptions import CayleyTableError, GroupError
from psum.groups import (
    AbelianGroupSpec, CayleyGroup, CyclicGroup, abelian_group_count,
    builtin_group, cayley_op, element_add, enumerate_abelian_groups,
    load_cayley_file, load_cayley_text, parse_builtin, parse_group_label,
)

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def create_sym3():
    return builtin_group('sym', 3)


def transpositions(group):
    return [i for i in group.nonidentity() if group.neg(i) == i]


class AbelianEnumerationTest(SimpleTestCase):

    def test_order_eight(self):
        names = [spec.name for spec in enumerate_abelian_groups(8)]
        self.assertEqual(names, ['Z8', 'Z2+Z4', 'Z2+Z2+Z2'])

    def test_trivial_group(self):
        groups = enumerate_abelian_groups(1)
        self.assertEqual(len(groups), 1)
        self.assertEqual(groups[0].order, 1)
        self.assertEqual(groups[0].table, ((0,),))

    def test_order_twelve(self):
        specs = enumerate_abelian_groups(12)
        self.assertEqual(len(specs), 2)
        self.assertEqual({spec.factors for spec in specs},
                         {(4, 3), (2, 2, 3)})

    def test_counts_match_enumeration(self):
        for n in range(1, 33):
            specs = enumerate_abelian_groups(n)
            self.assertEqual(len(specs), abelian_group_count(n))
            self.assertEqual(len(set(specs)), len(specs))
            self.assertTrue(all(spec.order == n for spec in specs))

    def test_non_canonical_factors_rejected(self):
        with self.assertRaises(GroupError):
            AbelianGroupSpec([4, 2])
        with self.assertRaises(GroupError):
            AbelianGroupSpec([6])

    def test_from_moduli_is_canonical(self):
        self.assertEqual(AbelianGroupSpec.from_moduli([4, 6]),
                         AbelianGroupSpec([2, 4, 3]))


class ElementArithmeticTest(SimpleTestCase):

    def test_inverse_pair_in_z25(self):
        spec = AbelianGroupSpec.from_moduli([25])
        self.assertTrue(element_add(spec.element(13), spec.element(12)).is_zero)

    def test_partial_sum_in_z25(self):
        spec = AbelianGroupSpec.from_moduli([25])
        self.assertEqual(element_add(spec.element(1), spec.element(3)),
                         spec.element(4))

    def test_inverse_pair_in_z2_z4(self):
        spec = AbelianGroupSpec([2, 4])
        total = spec.element(1, 3) + spec.element(1, 1)
        self.assertTrue(total.is_zero)

    def test_mixed_groups_rejected(self):
        with self.assertRaises(GroupError):
            AbelianGroupSpec([5]).element(1) + AbelianGroupSpec([7]).element(1)

    def test_table_agrees_with_elements(self):
        spec = AbelianGroupSpec([2, 2, 3])
        for i in range(spec.order):
            for j in range(spec.order):
                expected = spec.element_at(i) + spec.element_at(j)
                self.assertEqual(spec.table[i][j], expected.index)

    def test_cyclic_indices_are_residues(self):
        z = CyclicGroup(25)
        self.assertEqual(z.op(13, 12), 0)
        self.assertEqual(z.neg(5), 20)
        self.assertEqual(z.sum([1, 3, 4, 20, 10, 12]), 0)


class CayleyTableTest(SimpleTestCase):

    def test_sym3(self):
        sym3 = create_sym3()
        self.assertEqual(sym3.order, 6)
        self.assertFalse(sym3.is_abelian)
        for t in transpositions(sym3):
            self.assertEqual(cayley_op(sym3, t, t), 0)
        r, r2 = [i for i in sym3.nonidentity() if sym3.neg(i) != i]
        self.assertEqual(cayley_op(sym3, r, r2), 0)

    def test_identity_law(self):
        group = builtin_group('dihedral', 4)
        for j in range(group.order):
            self.assertEqual(cayley_op(group, 0, j), j)

    def test_cyclic_matches_abelian_arithmetic(self):
        group = builtin_group('cyclic', 5)
        self.assertEqual(group.table, CyclicGroup(5).table)
        self.assertEqual(group.table, AbelianGroupSpec([5]).table)

    def test_dihedral_is_nonabelian_of_order_eight(self):
        group = builtin_group('dihedral', 4)
        self.assertEqual(group.order, 8)
        self.assertFalse(group.is_abelian)

    def test_quaternion(self):
        group = parse_builtin('quaternion')
        self.assertEqual(group.order, 8)
        self.assertFalse(group.is_abelian)
        self.assertEqual(len(transpositions(group)), 1)

    def test_fixture_matches_builtin(self):
        self.assertEqual(load_cayley_file(fixture_path('sym3.tbl')),
                         create_sym3())

    def test_round_trip_through_text(self):
        sym3 = create_sym3()
        self.assertEqual(load_cayley_text(sym3.to_text()), sym3)

    def test_abelian_group_exported_as_table(self):
        for factors in ((2, 4), (3, 3), (2, 2, 3), (4, 3)):
            spec = AbelianGroupSpec(factors)
            exported = spec.as_cayley()
            self.assertEqual(exported.name, spec.name)
            self.assertEqual(exported.label(spec.order - 1),
                             spec.label(spec.order - 1))
            reloaded = load_cayley_text(exported.to_text(), name=spec.name)
            self.assertTrue(reloaded.is_abelian)
            self.assertEqual(reloaded, exported)
            # index i of the table is element_at(i) of the spec
            for i in range(spec.order):
                for j in range(spec.order):
                    total = spec.element_at(i) + spec.element_at(j)
                    self.assertEqual(reloaded.op(i, j), spec.index_of(total))

    def test_commutator_subgroup(self):
        sym3 = create_sym3()
        self.assertEqual(len(sym3.commutator_subgroup), 3)
        self.assertEqual(CyclicGroup(12).commutator_subgroup, {0})

    def test_not_latin(self):
        with self.assertRaises(CayleyTableError):
            CayleyGroup([[0, 1], [1, 1]])

    def test_identity_not_first(self):
        with self.assertRaises(CayleyTableError) as ctx:
            CayleyGroup([[1, 0], [0, 1]])
        self.assertEqual(ctx.exception.triple[0], 0)

    def test_non_associative_latin_square(self):
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with self.assertRaises(CayleyTableError) as ctx:
            CayleyGroup(table)
        self.assertEqual(len(ctx.exception.triple), 3)

    def test_order_limit(self):
        with self.assertRaises(GroupError):
            builtin_group('sym', 5, max_order=64)

    def test_malformed_text(self):
        with self.assertRaises(CayleyTableError):
            load_cayley_text('3\n0 1 2\n1 2 0\n')


class GroupLabelTest(SimpleTestCase):

    def test_cyclic_label(self):
        group, keyed = parse_group_label('Z25')
        self.assertEqual(group, CyclicGroup(25))
        self.assertIsNone(keyed)

    def test_product_label(self):
        spec, keyed = parse_group_label('Z4xZ2')
        self.assertEqual(spec, AbelianGroupSpec([2, 4]))
        self.assertEqual(keyed, [1, 0])

    def test_composite_factor_rejected(self):
        with self.assertRaises(GroupError):
            parse_group_label('Z6xZ2')

    def test_garbage_rejected(self):
        with self.assertRaises(GroupError):
            parse_group_label('S3')
