import itertools

from django.test import SimpleTestCase, tag

from psum.exceptions import GroupError, OrderingError
from psum.groups import CyclicGroup, builtin_group
from psum.orderings import (
    NotFound, Ordering, SubsetCandidate, find_simple_ordering, is_simple,
    is_zero_free, partial_sums, some_ordering_sums_to_zero,
)


def create_ordering(n, items):
    z = CyclicGroup(n)
    return Ordering(z, [z.residue(x) for x in items])


def create_candidate(group, items):
    if isinstance(group, int):
        group = CyclicGroup(group)
        items = [group.residue(x) for x in items]
    return SubsetCandidate(group, items)


class PartialSumTest(SimpleTestCase):

    def test_base_cycle_sums(self):
        trace = partial_sums(create_ordering(25, [1, 3, 4, -5, 10, 12]))
        self.assertEqual(trace.sums, (1, 4, 8, 3, 13, 0))
        self.assertTrue(trace.is_distinct)
        self.assertFalse(trace.avoids_identity)

    def test_repeated_sums(self):
        trace = partial_sums(create_ordering(25, [1, 4, -5, 3, 10, 12]))
        self.assertEqual(trace.sums, (1, 5, 0, 3, 13, 0))
        self.assertFalse(trace.is_distinct)

    def test_empty_ordering(self):
        self.assertEqual(len(partial_sums(create_ordering(5, []))), 0)

    def test_is_simple(self):
        self.assertTrue(is_simple(create_ordering(25, [1, 3, 4, -5, 10, 12])))
        self.assertFalse(is_simple(
            create_ordering(25, [1, 4, -5, 3, 10, 12])))
        self.assertTrue(is_simple(create_ordering(7, [3])))

    def test_zero_free(self):
        self.assertTrue(is_zero_free(create_ordering(5, [1, 2])))
        self.assertFalse(is_zero_free(create_ordering(7, [1, 2, 4])))

    def test_nonabelian_sums_left_to_right(self):
        sym3 = builtin_group('sym', 3)
        a, b = 1, 2
        trace = partial_sums(Ordering(sym3, [a, b]))
        self.assertEqual(trace.sums, (a, sym3.table[a][b]))
        self.assertNotEqual(sym3.table[a][b], sym3.table[b][a])


class OrderingValidationTest(SimpleTestCase):

    def test_identity_rejected(self):
        with self.assertRaises(OrderingError):
            create_ordering(5, [0, 1])

    def test_repeat_rejected(self):
        with self.assertRaises(OrderingError):
            create_ordering(5, [1, 1])

    def test_out_of_range(self):
        with self.assertRaises(GroupError):
            Ordering(CyclicGroup(5), [7])

    def test_candidate_flags(self):
        candidate = create_candidate(25, [1, 3, 4, -5, 10, 12])
        self.assertEqual(candidate.items, (1, 3, 4, 10, 12, 20))
        self.assertTrue(candidate.sum_is_zero)
        self.assertFalse(candidate.contains_inverse_pair)
        self.assertTrue(create_candidate(7, [2, 5, 3]).contains_inverse_pair)

    def test_involution_is_not_an_inverse_pair(self):
        self.assertFalse(create_candidate(8, [4, 1]).contains_inverse_pair)


class FindSimpleOrderingTest(SimpleTestCase):

    def test_small_cyclic(self):
        found = find_simple_ordering(create_candidate(6, [1, 2, 3]))
        self.assertEqual(found.items, (1, 2, 3))
        self.assertEqual(partial_sums(found).sums, (1, 3, 0))

    def test_sym3_has_simple_ordering(self):
        sym3 = builtin_group('sym', 3)
        found = find_simple_ordering(
            SubsetCandidate(sym3, sym3.nonidentity()))
        self.assertTrue(found)
        self.assertTrue(is_simple(found))

    def test_sym3_has_no_zero_free_ordering(self):
        sym3 = builtin_group('sym', 3)
        found = find_simple_ordering(
            SubsetCandidate(sym3, sym3.nonidentity()), zero_free=True)
        self.assertIsInstance(found, NotFound)
        self.assertFalse(found)
        self.assertEqual(found.search_space, 120)
        self.assertGreater(found.nodes, 0)

    def test_zero_sum_set_is_never_zero_free(self):
        found = find_simple_ordering(create_candidate(7, [1, 2, 4]),
                                     zero_free=True)
        self.assertFalse(found)

    def test_zero_free_when_sum_nonzero(self):
        found = find_simple_ordering(create_candidate(5, [1, 2]),
                                     zero_free=True)
        self.assertEqual(found.items, (1, 2))

    def test_whole_cyclic_group_of_odd_order(self):
        # the nonidentity elements of Z_n sum to 0 for odd n
        found = find_simple_ordering(create_candidate(9, range(1, 9)))
        self.assertTrue(is_simple(found))


class SomeOrderingSumsToZeroTest(SimpleTestCase):

    def test_abelian_is_the_plain_sum(self):
        self.assertTrue(some_ordering_sums_to_zero(
            create_candidate(7, [1, 2, 4])))
        self.assertFalse(some_ordering_sums_to_zero(
            create_candidate(7, [1, 2])))

    def test_sym3_outside_commutator_coset(self):
        sym3 = builtin_group('sym', 3)
        self.assertFalse(some_ordering_sums_to_zero(
            SubsetCandidate(sym3, sym3.nonidentity())))

    def test_sym3_order_dependent_sum(self):
        sym3 = builtin_group('sym', 3)
        transposition = [i for i in sym3.nonidentity() if sym3.neg(i) == i]
        rotations = [i for i in sym3.nonidentity() if sym3.neg(i) != i]
        candidate = SubsetCandidate(sym3, transposition[:2] + rotations)
        self.assertTrue(some_ordering_sums_to_zero(candidate))


def every_subset(group):
    for k in range(1, group.order):
        for items in itertools.combinations(group.nonidentity(), k):
            yield SubsetCandidate(group, items)


class ExhaustiveOrderingTest(SimpleTestCase):

    def test_pruned_search_matches_every_permutation(self):
        for v in range(2, 9):
            z = CyclicGroup(v)
            for candidate in every_subset(z):
                orderings = [Ordering(z, p)
                             for p in itertools.permutations(candidate.items)]
                for zero_free, check in ((False, is_simple),
                                         (True, is_zero_free)):
                    found = find_simple_ordering(candidate,
                                                 zero_free=zero_free)
                    self.assertEqual(bool(found), any(map(check, orderings)),
                                     (candidate, zero_free))
                    if found:
                        self.assertTrue(check(found))

    @tag('slow')
    def test_reversal_of_zero_sum_orderings(self):
        for v in range(2, 10):
            z = CyclicGroup(v)
            for candidate in every_subset(z):
                if not candidate.sum_is_zero:
                    continue
                for items in itertools.permutations(candidate.items):
                    ordering = Ordering(z, items)
                    self.assertEqual(is_simple(ordering.reversed()),
                                     is_simple(ordering), ordering)
