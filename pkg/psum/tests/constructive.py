import itertools

from django.test import SimpleTestCase, tag

from psum.constructive import (
    check_zero_sum_hypotheses, order_small_abelian, order_small_general,
    zero_sum_index,
)
from psum.exceptions import HypothesisError
from psum.groups import (
    AbelianGroupSpec, CyclicGroup, builtin_group, enumerate_abelian_groups,
)
from psum.orderings import SubsetCandidate, is_simple, partial_sums


def create_candidate(n, items):
    z = CyclicGroup(n)
    return SubsetCandidate(z, [z.residue(x) for x in items])


def zero_sum_subsets(group, max_size):
    """Zero-sum sets without inverse pairs, by size."""
    units = []
    for x in group.nonidentity():
        y = group.neg(x)
        if x == y:
            units.append((x,))
        elif x < y:
            units.append((x, y))
    for choice in itertools.product(*((None,) + unit for unit in units)):
        items = [x for x in choice if x is not None]
        if 0 < len(items) <= max_size and group.sum(items) == 0:
            yield SubsetCandidate(group, items)


class ZeroSumIndexTest(SimpleTestCase):

    def test_two_triples(self):
        index = zero_sum_index(create_candidate(13, [1, 3, 9, 2, 5, 6]))
        self.assertEqual(sorted(map(sorted, index.triples)),
                         [[1, 3, 9], [2, 5, 6]])
        self.assertEqual(index.quads, [])
        self.assertEqual(index.disjoint_triples(),
                         [(frozenset({1, 3, 9}), frozenset({2, 5, 6}))])
        self.assertEqual(index.structure_violations(), [])

    def test_empty_index(self):
        self.assertFalse(zero_sum_index(create_candidate(13, [1, 2, 4])))

    def test_too_large(self):
        with self.assertRaises(HypothesisError):
            zero_sum_index(create_candidate(31, range(1, 11)))


class OrderSmallAbelianTest(SimpleTestCase):

    def test_six_elements_two_triples(self):
        ordering, label = order_small_abelian(
            create_candidate(13, [1, 3, 9, 2, 5, 6]))
        self.assertEqual(ordering.items, (1, 3, 2, 9, 5, 6))
        self.assertEqual(partial_sums(ordering).sums, (1, 4, 6, 2, 7, 0))
        self.assertEqual(label.branch, 'thm8/|A|=6')

    def test_base_cycle_part(self):
        ordering, label = order_small_abelian(
            create_candidate(25, [1, 3, 4, -5, 10, 12]))
        self.assertEqual(ordering.items, (1, 4, 3, 20, 10, 12))
        self.assertEqual(str(label), 'thm8/|A|=6')

    def test_small_sets_keep_ambient_order(self):
        ordering, label = order_small_abelian(
            create_candidate(11, [5, 1, 3, 2]))
        self.assertEqual(ordering.items, (1, 2, 3, 5))
        self.assertEqual(label.branch, 'thm8/|A|≤5')

    def test_no_zero_sum_subset(self):
        # no three or four of these cancel mod 101
        candidate = create_candidate(101, [1, 2, 4, 8, 16, 70])
        ordering, label = order_small_abelian(candidate)
        self.assertEqual(label.branch, 'no-zero-sum-subset')
        self.assertEqual(ordering.items, candidate.items)
        self.assertTrue(is_simple(ordering))

    def test_hypotheses(self):
        with self.assertRaises(HypothesisError):
            check_zero_sum_hypotheses(create_candidate(7, [1, 2]))
        with self.assertRaises(HypothesisError):
            check_zero_sum_hypotheses(create_candidate(7, [1, 6]))
        sym3 = builtin_group('sym', 3)
        with self.assertRaises(HypothesisError):
            check_zero_sum_hypotheses(SubsetCandidate(sym3, [3, 4]))

    def test_noncyclic_group(self):
        spec = AbelianGroupSpec([2, 2, 3])
        for candidate in zero_sum_subsets(spec, 9):
            ordering, label = order_small_abelian(candidate)
            self.assertTrue(is_simple(ordering), (candidate, label))

    @tag('slow')
    def test_no_case_gap_up_to_order_13(self):
        for n in range(1, 14):
            for spec in enumerate_abelian_groups(n):
                for candidate in zero_sum_subsets(spec, 9):
                    ordering, label = order_small_abelian(
                        candidate, fallback=False)
                    self.assertTrue(is_simple(ordering), (candidate, label))
                    self.assertEqual(sorted(ordering.items),
                                     list(candidate.items))

    @tag('slow')
    def test_nine_element_sets(self):
        for n in (19, 23):
            for candidate in zero_sum_subsets(CyclicGroup(n), 9):
                if len(candidate) < 9:
                    continue
                ordering, label = order_small_abelian(
                    candidate, fallback=False)
                self.assertTrue(is_simple(ordering), (candidate, label))
                self.assertTrue(label.branch.startswith(
                    ('thm9', 'no-zero-sum-subset')), label)

    def assertNineBranch(self, items, branch, triples, quads):
        # every subset sum stays below 257, so zero sums are exact
        candidate = create_candidate(257, items)
        index = zero_sum_index(candidate)
        self.assertEqual((len(index.triples), len(index.quads)),
                         (triples, quads))
        ordering, label = order_small_abelian(candidate, fallback=False)
        self.assertTrue(is_simple(ordering), (items, label))
        self.assertEqual(sorted(ordering.items), list(candidate.items))
        self.assertTrue(label.branch.startswith(branch), label)

    def test_nine_one_triple(self):
        self.assertNineBranch([1, 2, 4, 8, 16, 32, 64, -3, -124],
                              'thm9/no-quad/one-triple', 1, 0)

    def test_nine_disjoint_triples(self):
        self.assertNineBranch([1, 2, 4, 8, 16, 32, -3, -12, -48],
                              'thm9/no-quad/Casea', 3, 0)

    def test_nine_intersecting_triples(self):
        self.assertNineBranch([1, 2, 5, 6, 20, 40, 80, -7, -147],
                              'thm9/no-quad/Caseb', 2, 0)

    def test_nine_one_quad_no_triple(self):
        self.assertNineBranch([1, 2, 4, 8, 16, 32, 64, -7, -120],
                              'thm9/Case1.1', 0, 1)

    def test_nine_quad_and_triple_meeting_once(self):
        self.assertNineBranch([1, 2, 5, 6, 8, 40, 80, -11, -131],
                              'thm9/Case1.2', 1, 1)

    def test_nine_quad_and_triple_meeting_twice(self):
        self.assertNineBranch([1, 2, 8, 10, 20, 40, 80, -11, -150],
                              'thm9/Case1.3', 1, 1)


class OrderSmallGeneralTest(SimpleTestCase):

    def test_sym3_all_nonidentity(self):
        sym3 = builtin_group('sym', 3)
        ordering, label = order_small_general(
            SubsetCandidate(sym3, sym3.nonidentity()))
        self.assertTrue(is_simple(ordering))
        self.assertTrue(label.branch.startswith('thm5/|A|=5'))

    def test_one_inverse_pair(self):
        ordering, label = order_small_general(create_candidate(7, [2, 5, 3]))
        self.assertEqual(ordering.items, (2, 3, 5))
        self.assertEqual(partial_sums(ordering).sums, (2, 5, 3))
        self.assertEqual(label.branch, 'thm5/|A|=3/p=1')

    def test_two_elements(self):
        ordering, label = order_small_general(create_candidate(9, [4, 5]))
        self.assertEqual(ordering.items, (4, 5))
        self.assertEqual(label.branch, 'thm5/|A|≤2')

    def test_too_large(self):
        with self.assertRaises(HypothesisError):
            order_small_general(create_candidate(13, range(1, 7)))

    def test_every_small_set_of_small_groups(self):
        groups = [spec for n in range(1, 13)
                  for spec in enumerate_abelian_groups(n)]
        groups += [builtin_group('sym', 3), builtin_group('dihedral', 4),
                   builtin_group('dihedral', 5), builtin_group('dihedral', 6),
                   builtin_group('quaternion'), builtin_group('alt', 4),
                   builtin_group('dicyclic', 3)]
        for group in groups:
            for k in range(1, 6):
                for items in itertools.combinations(group.nonidentity(), k):
                    ordering, _ = order_small_general(
                        SubsetCandidate(group, items), fallback=False)
                    self.assertTrue(is_simple(ordering), (group, items))
