"""
Search-free simple orderings for small sets.

``order_small_abelian`` covers zero-sum sets without inverse pairs of size
at most 9 in abelian groups, ``order_small_general`` covers any set of
size at most 5 in any group. Both follow a fixed case tree: the zero-sum
3- and 4-subsets of A decide the branch, each branch names the roles its
elements play (``a_1 .. a_k``) and the ordering it produces.

A branch is stated for "some" labeling of A meeting its role pattern.
The labeling is made concrete by enumerating role-consistent labelings in
ambient order; every output is checked with ``is_simple`` before it is
returned.
"""

import itertools
import logging
from collections import namedtuple

from psum import constants
from psum.exceptions import HypothesisError, InternalCaseGap
from psum.orderings import (
    Ordering, find_simple_ordering, is_simple_sequence,
)

LOGGER = logging.getLogger(__name__)


class CaseLabel(namedtuple('CaseLabel', 'theorem branch')):

    def __str__(self):
        return self.branch


class ZeroSumSubsetIndex:
    """All zero-sum 3- and 4-subsets of A."""

    def __init__(self, ambient, items, triples, quads):
        self.ambient = ambient
        self.items = frozenset(items)
        self.triples = triples
        self.quads = quads

    def __bool__(self):
        return bool(self.triples or self.quads)

    def complement(self, subset):
        return self.items - subset

    def disjoint_triples(self):
        return [(t, u) for t, u in itertools.combinations(self.triples, 2)
                if not t & u]

    def structure_violations(self):
        """Intersection patterns excluded when A has no inverse pair.

        Zero-sum quads meet in 1 or 2 elements, zero-sum triples in 0 or 1,
        a quad and a triple in 1 or 2.
        """
        violations = []
        for q, r in itertools.combinations(self.quads, 2):
            if len(q & r) not in (1, 2):
                violations.append(('quad-quad', q, r))
        for t, u in itertools.combinations(self.triples, 2):
            if len(t & u) not in (0, 1):
                violations.append(('triple-triple', t, u))
        for q in self.quads:
            for t in self.triples:
                if len(q & t) not in (1, 2):
                    violations.append(('quad-triple', q, t))
        return violations


def zero_sum_index(candidate):
    ambient = candidate.ambient
    if len(candidate) > constants.CONSTRUCTIVE_ABELIAN_LIMIT:
        raise HypothesisError(
            'zero-sum indexing is exhaustive only up to {} elements'.format(
                constants.CONSTRUCTIVE_ABELIAN_LIMIT))
    table = ambient.table

    def zero_subsets(size):
        return [frozenset(c)
                for c in itertools.combinations(candidate.items, size)
                if _sum(table, c) == 0]

    return ZeroSumSubsetIndex(ambient, candidate.items,
                              zero_subsets(3), zero_subsets(4))


def _sum(table, items):
    total = 0
    for a in items:
        total = table[total][a]
    return total


def _sorted_subsets(subsets):
    return sorted(subsets, key=sorted)


class _Labels:
    """One labeling ``a_1 .. a_k`` of A; positions are 1-based."""

    def __init__(self, table, elements):
        self.table = table
        self.a = tuple(elements)

    def zero(self, *positions):
        return _sum(self.table, [self.a[p - 1] for p in positions]) == 0

    def order(self, *positions):
        return tuple(self.a[p - 1] for p in positions)

    def shifted(self, step):
        """The labeling ``b_i = a_{i+step}``, subscripts taken modulo k."""
        return _Labels(self.table, self.a[step:] + self.a[:step])


def _role_labelings(items, roles):
    """Labelings of ``items`` placing each role subset on its positions.

    ``roles`` is a list of ``(subset, positions)``. Elements and positions
    are matched by their membership pattern across the roles; labelings
    are produced in ambient order within each pattern class.
    """
    k = len(items)
    position_classes = {}
    for p in range(1, k + 1):
        signature = tuple(p in positions for _, positions in roles)
        position_classes.setdefault(signature, []).append(p)
    element_classes = {}
    for x in sorted(items):
        signature = tuple(x in subset for subset, _ in roles)
        element_classes.setdefault(signature, []).append(x)
    if sorted(position_classes) != sorted(element_classes) or any(
            len(position_classes[s]) != len(element_classes[s])
            for s in position_classes):
        return
    signatures = sorted(position_classes, key=lambda s: position_classes[s])
    for choice in itertools.product(*(
            itertools.permutations(element_classes[s]) for s in signatures)):
        a = [None] * k
        for s, elements in zip(signatures, choice):
            for p, x in zip(position_classes[s], elements):
                a[p - 1] = x
        yield a


def _first_simple(ambient, attempts, theorem):
    """Run ``attempts`` until one yields a simple ordering.

    ``attempts`` yields ``(labeling, branch_fn)`` pairs; a branch function
    maps a labeling to ``(positions_or_elements, branch)`` or ``None``.
    """
    table = ambient.table
    tried = 0
    last_branch = None
    for labels, branch_fn in attempts:
        outcome = branch_fn(labels)
        if outcome is None:
            continue
        items, branch = outcome
        last_branch = branch
        tried += 1
        if is_simple_sequence(table, items):
            if tried > 1:
                LOGGER.info(
                    'branch %s needed labeling #%d on %s %s', branch, tried,
                    ambient.name, [ambient.label(x) for x in labels.a])
            return Ordering(ambient, items), CaseLabel(theorem, branch)
    raise InternalCaseGap(
        'no labeling produced a simple ordering (last branch {})'.format(
            last_branch), branch=last_branch)


def _attempts(items, roles, branch_fn, table):
    for a in _role_labelings(items, roles):
        yield _Labels(table, a), branch_fn


# |A| <= 8

def _six(lab):
    return lab.order(1, 2, 4, 3, 5, 6), 'thm8/|A|=6'


def _seven_one_triple(lab):
    return lab.order(1, 2, 4, 3, 5, 6, 7), 'thm8/|A|=7/one-triple'


def _seven_two_triples(lab):
    if not lab.zero(1, 5, 7):
        return (lab.order(1, 2, 4, 3, 6, 5, 7),
                'thm8/|A|=7/two-triples/a1+a5+a7≠0')
    return (lab.order(1, 4, 2, 3, 5, 6, 7),
            'thm8/|A|=7/two-triples/a1+a5+a7=0')


def _eight_quad_triple(lab):
    if not lab.zero(2, 3, 6):
        return (lab.order(1, 2, 3, 6, 4, 5, 7, 8),
                'thm8/|A|=8/Case1/quad-and-triple/a2+a3+a6≠0')
    return (lab.order(1, 2, 3, 7, 4, 5, 6, 8),
            'thm8/|A|=8/Case1/quad-and-triple/a2+a3+a6=0')


def _eight_quad_only(lab):
    if not lab.zero(3, 4, 5, 6):
        return (lab.order(1, 2, 3, 5, 4, 6, 7, 8),
                'thm8/|A|=8/Case1/no-triple/a3+a4+a5+a6≠0')
    return (lab.order(1, 2, 3, 5, 4, 7, 6, 8),
            'thm8/|A|=8/Case1/no-triple/a3+a4+a5+a6=0')


def _eight_two_triples(lab):
    if not lab.zero(1, 4, 8):
        return (lab.order(1, 4, 2, 3, 5, 6, 7, 8),
                'thm8/|A|=8/Case2/two-triples/a1+a4+a8≠0')
    return (lab.order(1, 4, 2, 3, 5, 6, 8, 7),
            'thm8/|A|=8/Case2/two-triples/a1+a4+a8=0')


def _eight_one_triple(lab):
    return lab.order(1, 2, 4, 3, 5, 6, 7, 8), 'thm8/|A|=8/Case2/one-triple'


def _plan_six(index, items, table):
    for t in _sorted_subsets(index.triples):
        yield from _attempts(items, [(t, (1, 2, 3))], _six, table)


def _plan_seven(index, items, table):
    triples = _sorted_subsets(index.triples)
    if len(triples) == 1:
        yield from _attempts(items, [(triples[0], (1, 2, 3))],
                             _seven_one_triple, table)
        return
    for t1, t2 in itertools.permutations(triples, 2):
        if len(t1 & t2) != 1:
            LOGGER.warning('case anomaly: zero-sum triples %s and %s of a '
                           '7-set meet in %d elements', sorted(t1),
                           sorted(t2), len(t1 & t2))
            continue
        yield from _attempts(items, [(t1, (1, 2, 3)), (t2, (3, 4, 5))],
                             _seven_two_triples, table)


def _plan_eight(index, items, table):
    quads = _sorted_subsets(index.quads)
    triples = _sorted_subsets(index.triples)
    if quads and triples:
        for q in quads:
            for t in triples:
                # A \ Q sums to zero too and meets T in 3 - |Q & T| elements
                q2 = q if len(q & t) == 2 else index.complement(q)
                yield from _attempts(
                    items, [(q2, (1, 2, 3, 4)), (t, (3, 4, 5))],
                    _eight_quad_triple, table)
    elif quads:
        for q in quads:
            yield from _attempts(items, [(q, (1, 2, 3, 4))],
                                 _eight_quad_only, table)
    elif len(triples) == 1:
        yield from _attempts(items, [(triples[0], (1, 2, 3))],
                             _eight_one_triple, table)
    else:
        for t1, t2 in itertools.permutations(triples, 2):
            if len(t1 & t2) == 1:
                yield from _attempts(
                    items, [(t1, (1, 2, 3)), (t2, (3, 4, 5))],
                    _eight_two_triples, table)


# |A| = 9

def _nine_one_triple(lab):
    return (lab.order(1, 2, 4, 3, 5, 6, 7, 8, 9),
            'thm9/no-quad/one-triple')


def _nine_case_a(lab):
    if not lab.zero(3, 5, 7):
        return (lab.order(1, 2, 4, 3, 5, 7, 6, 8, 9),
                'thm9/no-quad/Casea/a3+a5+a7≠0')
    return (lab.order(1, 2, 4, 3, 6, 7, 5, 8, 9),
            'thm9/no-quad/Casea/a3+a5+a7=0')


def _nine_case_b(lab):
    if not lab.zero(1, 8, 9):
        return (lab.order(1, 2, 4, 3, 6, 5, 7, 8, 9),
                'thm9/no-quad/Caseb/a1+a8+a9≠0')
    return (lab.order(1, 2, 4, 3, 6, 5, 8, 7, 9),
            'thm9/no-quad/Caseb/a1+a8+a9=0')


def _nine_case_1_1(lab):
    return (lab.order(1, 2, 3, 5, 4, 6, 7, 8, 9), 'thm9/Case1.1')


def _nine_case_1_2(lab):
    if lab.zero(1, 2, 9):
        return (lab.order(1, 2, 5, 4, 7, 6, 8, 9, 3),
                'thm9/Case1.2/ΣT_2=0')
    if lab.zero(1, 8, 9):
        return (lab.order(1, 2, 3, 5, 4, 8, 6, 7, 9),
                'thm9/Case1.2/ΣT_3=0')
    if not lab.zero(2, 3, 5):
        return (lab.order(1, 2, 3, 5, 4, 7, 6, 8, 9),
                'thm9/Case1.2/ΣT_2≠0/ΣT_3≠0/a2+a3+a5≠0')
    return (lab.order(1, 2, 3, 6, 4, 7, 5, 8, 9),
            'thm9/Case1.2/ΣT_2≠0/ΣT_3≠0/a2+a3+a5=0')


def _nine_case_1_3(lab):
    if not lab.zero(2, 4, 6):
        return (lab.order(1, 5, 3, 2, 4, 6, 7, 8, 9),
                'thm9/Case1.3/a2+a4+a6≠0')
    return (lab.order(1, 5, 3, 2, 4, 7, 6, 8, 9),
            'thm9/Case1.3/a2+a4+a6=0')


def _nine_case_2(lab):
    if lab.zero(2, 4, 7):
        return (lab.order(1, 2, 3, 7, 4, 5, 6, 8, 9), 'thm9/Case2/ΣT_1=0')
    if lab.zero(3, 4, 7):
        t3 = lab.zero(1, 3, 5)
        q4 = lab.zero(4, 6, 7, 8)
        if not t3 and not q4:
            return (lab.order(1, 3, 5, 4, 7, 6, 8, 9, 2),
                    'thm9/Case2/ΣT_2=0/ΣT_3≠0/ΣQ_4≠0')
        if not t3:
            return (lab.order(1, 3, 5, 4, 7, 6, 9, 8, 2),
                    'thm9/Case2/ΣT_2=0/ΣT_3≠0/ΣQ_4=0')
        return (lab.order(1, 2, 3, 5, 4, 7, 6, 8, 9),
                'thm9/Case2/ΣT_2=0/ΣT_3=0')
    if lab.zero(1, 6, 8, 9):
        if not lab.zero(1, 3, 7):
            return (lab.order(1, 3, 7, 4, 5, 6, 8, 9, 2),
                    'thm9/Case2/ΣQ_3=0/a1+a3+a7≠0')
        return (lab.order(1, 4, 7, 3, 5, 6, 8, 9, 2),
                'thm9/Case2/ΣQ_3=0/a1+a3+a7=0')
    if not lab.zero(3, 5, 7):
        return (lab.order(1, 2, 4, 7, 3, 5, 6, 8, 9),
                'thm9/Case2/ΣT_4≠0')
    if not lab.zero(1, 6, 9):
        return (lab.order(1, 2, 7, 4, 3, 5, 8, 6, 9),
                'thm9/Case2/ΣT_4=0/ΣT_5≠0')
    return (lab.order(1, 2, 7, 4, 3, 5, 9, 6, 8),
            'thm9/Case2/ΣT_4=0/ΣT_5=0')


def _nine_case_3_two_quads(lab):
    t1 = lab.zero(4, 6, 8)
    t2 = lab.zero(3, 4, 5)
    t3 = lab.zero(2, 3, 5)
    t4 = lab.zero(1, 3, 5)
    t5 = lab.zero(1, 7, 9)
    if t1:
        if t2 or t3:
            return (lab.order(2, 1, 4, 6, 3, 5, 8, 7, 9),
                    'thm9/Case3/two-quads/ΣT_1=0/ΣT_2=0∨ΣT_3=0')
        t6 = lab.zero(1, 7, 8)
        if t4:
            return (lab.order(2, 1, 4, 5, 3, 7, 9, 6, 8),
                    'thm9/Case3/two-quads/ΣT_1=0/ΣT_4=0')
        if t6:
            return (lab.order(2, 1, 3, 5, 4, 6, 9, 7, 8),
                    'thm9/Case3/two-quads/ΣT_1=0/ΣT_4≠0/ΣT_6=0')
        return (lab.order(1, 2, 3, 5, 4, 6, 9, 7, 8),
                'thm9/Case3/two-quads/ΣT_1=0/ΣT_6≠0')
    if t2:
        if not t5:
            return (lab.order(1, 3, 2, 5, 4, 6, 8, 7, 9),
                    'thm9/Case3/two-quads/ΣT_2=0/ΣT_5≠0')
        return (lab.order(2, 3, 1, 5, 4, 6, 8, 7, 9),
                'thm9/Case3/two-quads/ΣT_2=0/ΣT_5=0')
    t7 = lab.zero(2, 7, 9)
    if t3 and t7:
        return (lab.order(1, 2, 7, 3, 5, 4, 6, 8, 9),
                'thm9/Case3/two-quads/ΣT_3=0/ΣT_7=0')
    if (t3 and not t7) or (t5 and not t4):
        return (lab.order(2, 1, 3, 5, 4, 6, 8, 7, 9),
                'thm9/Case3/two-quads/ΣT_3=0∧ΣT_7≠0∨ΣT_5=0∧ΣT_4≠0')
    if t5 and t4:
        return (lab.order(3, 2, 1, 5, 4, 6, 8, 7, 9),
                'thm9/Case3/two-quads/ΣT_5=0/ΣT_4=0')
    if not t3 and not t5:
        return (lab.order(1, 2, 3, 5, 4, 6, 8, 7, 9),
                'thm9/Case3/two-quads/ΣT_3≠0/ΣT_5≠0')
    return None


def _nine_case_3_three_quads(lab):
    if not (lab.zero(1, 3, 5) or lab.zero(4, 6, 8) or lab.zero(2, 7, 9)):
        return (lab.order(2, 1, 3, 5, 4, 6, 8, 7, 9),
                'thm9/Case3/three-quads/no-triple')
    # the other two triples reduce to T_1 = {a1, a3, a5} by a_i -> a_{i+3}
    shift = next(step for step in (0, 3, 6)
                 if lab.shifted(step).zero(1, 3, 5))
    lab = lab.shifted(shift)
    prefix = 'thm9/Case3/three-quads/rot{}/ΣT_1=0'.format(shift)
    if lab.zero(2, 7, 9):
        return (lab.order(2, 1, 4, 5, 3, 7, 9, 6, 8), prefix + '/ΣT_3=0')
    if lab.zero(4, 5, 8):
        if not lab.zero(3, 7, 8):
            return (lab.order(3, 1, 6, 5, 4, 2, 9, 7, 8),
                    prefix + '/ΣT_4=0/a3+a7+a8≠0')
        return (lab.order(2, 1, 3, 6, 4, 5, 9, 7, 8),
                prefix + '/ΣT_4=0/a3+a7+a8=0')
    return (lab.order(2, 1, 3, 6, 4, 5, 8, 7, 9),
            prefix + '/ΣT_3≠0/ΣT_4≠0')


def _plan_nine(index, items, table):
    quads = _sorted_subsets(index.quads)
    triples = _sorted_subsets(index.triples)
    if not quads:
        for t1 in triples:
            others = [t for t in triples if t != t1]
            if not others:
                yield from _attempts(items, [(t1, (1, 2, 3))],
                                     _nine_one_triple, table)
            elif any(not t1 & t for t in others):
                for t2 in others:
                    if not t1 & t2:
                        yield from _attempts(
                            items, [(t1, (1, 2, 3)), (t2, (4, 5, 6))],
                            _nine_case_a, table)
            else:
                for t2 in others:
                    yield from _attempts(
                        items, [(t1, (1, 2, 3)), (t2, (3, 4, 5))],
                        _nine_case_b, table)
        return

    if len(quads) == 1:
        q1 = quads[0]
        if not triples:
            yield from _attempts(items, [(q1, (1, 2, 3, 4))],
                                 _nine_case_1_1, table)
            return
        meeting_once = [t for t in triples if len(q1 & t) == 1]
        if meeting_once:
            for t1 in meeting_once:
                yield from _attempts(
                    items, [(q1, (1, 2, 3, 4)), (t1, (4, 5, 6))],
                    _nine_case_1_2, table)
        else:
            for t1 in triples:
                yield from _attempts(
                    items, [(q1, (1, 2, 3, 4)), (t1, (3, 4, 5))],
                    _nine_case_1_3, table)
        return

    pairs_meeting_twice = [(q1, q2) for q1, q2
                           in itertools.permutations(quads, 2)
                           if len(q1 & q2) == 2]
    if pairs_meeting_twice:
        for q1, q2 in pairs_meeting_twice:
            yield from _attempts(
                items, [(q1, (1, 2, 3, 4)), (q2, (3, 4, 5, 6))],
                _nine_case_2, table)
        return

    if len(quads) == 2:
        for q1, q2 in itertools.permutations(quads, 2):
            yield from _attempts(
                items, [(q1, (1, 2, 3, 4)), (q2, (4, 5, 6, 7))],
                _nine_case_3_two_quads, table)
    elif len(quads) == 3:
        for q1, q2, q3 in itertools.permutations(quads, 3):
            yield from _attempts(
                items,
                [(q1, (1, 2, 3, 4)), (q2, (4, 5, 6, 7)), (q3, (1, 7, 8, 9))],
                _nine_case_3_three_quads, table)
    else:
        LOGGER.warning('case anomaly: %d zero-sum quads meeting pairwise '
                       'in one element', len(quads))


_PLANS = {6: _plan_six, 7: _plan_seven, 8: _plan_eight, 9: _plan_nine}


def check_zero_sum_hypotheses(candidate):
    ambient = candidate.ambient
    if not ambient.is_abelian:
        raise HypothesisError('{} is not abelian'.format(ambient.name))
    if candidate.contains_inverse_pair:
        raise HypothesisError('{!r} contains an inverse pair'.format(candidate))
    if not candidate.sum_is_zero:
        raise HypothesisError('{!r} does not sum to zero'.format(candidate))
    if len(candidate) > constants.CONSTRUCTIVE_ABELIAN_LIMIT:
        raise HypothesisError('|A| = {} exceeds {}'.format(
            len(candidate), constants.CONSTRUCTIVE_ABELIAN_LIMIT))


def _fallback(candidate, gap):
    LOGGER.warning('constructive gap on %r (%s); falling back to search',
                   candidate, gap)
    found = find_simple_ordering(candidate)
    if not found:
        raise InternalCaseGap(
            'no simple ordering exists for {!r}'.format(candidate),
            branch=gap.branch)
    return found, CaseLabel('fallback', 'fallback/{}'.format(gap.branch))


def order_small_abelian(candidate, fallback=True):
    """Simple ordering of a zero-sum set with no inverse pair, |A| <= 9.

    Returns ``(Ordering, CaseLabel)``. With ``fallback`` an internal case
    gap is logged and answered by the exhaustive search; without it the
    ``InternalCaseGap`` propagates.
    """
    check_zero_sum_hypotheses(candidate)
    ambient = candidate.ambient
    k = len(candidate)
    if k <= 5:
        return (Ordering(ambient, candidate.items),
                CaseLabel('thm8', 'thm8/|A|≤5'))
    index = zero_sum_index(candidate)
    if not index:
        return (Ordering(ambient, candidate.items),
                CaseLabel('trivial', 'no-zero-sum-subset'))
    for violation in index.structure_violations():
        LOGGER.warning('case anomaly on %r: %s', candidate, violation[0])
    theorem = 'thm9' if k == 9 else 'thm8'
    try:
        return _first_simple(
            ambient, _PLANS[k](index, candidate.items, ambient.table), theorem)
    except InternalCaseGap as gap:
        if not fallback:
            raise
        return _fallback(candidate, gap)


# |A| <= 5 in any group

def _p_count(ambient, items):
    members = set(items)
    return sum(1 for x in items
               if ambient.neg(x) != x and ambient.neg(x) in members
               and x < ambient.neg(x))


def _star(ambient, a):
    a1, a2, a3, a4, a5 = a
    if ambient.sum((a3, a5, a4)) != 0:
        return (a2, a1, a3, a5, a4), 'a3+a5+a4≠0'
    return (a5, a3, a2, a4, a1), 'a3+a5+a4=0'


def _five_without_pairs(ambient, a, depth=0):
    a1, a2, a3, a4, a5 = a

    def zero(*xs):
        return ambient.sum(xs) == 0

    if not (zero(a2, a3, a4, a5) or zero(a3, a4, a5) or zero(a2, a3, a4)):
        return (a1, a2, a3, a4, a5), 'thm5/|A|=5/p=0/direct'
    if zero(a2, a3, a4, a5):
        if not zero(a1, a3, a4):
            return (a2, a1, a3, a4, a5), 'thm5/|A|=5/p=0/a2+a3+a4+a5=0'
        items, tail = _star(ambient, a)
        return items, 'thm5/|A|=5/p=0/a2+a3+a4+a5=0/a1+a3+a4=0/' + tail
    if zero(a3, a4, a5):
        if not zero(a1, a3, a4, a2):
            return (a5, a1, a3, a4, a2), 'thm5/|A|=5/p=0/a3+a4+a5=0'
        items, tail = _star(ambient, (a5, a1, a3, a4, a2))
        return items, 'thm5/|A|=5/p=0/a3+a4+a5=0/relabel/' + tail
    if depth:
        return None
    # a2 + a3 + a4 = 0: relabel so that it becomes a3' + a4' + a5'
    outcome = _five_without_pairs(ambient, (a1, a5, a2, a3, a4), depth + 1)
    if outcome is None:
        return None
    items, branch = outcome
    return items, branch + '/from-a2+a3+a4=0'


def _general_branch(ambient, k, p):
    neg = ambient.neg
    op = ambient.op

    def branch(lab):
        a = lab.a
        if k == 3:
            if p == 0:
                return a, 'thm5/|A|=3/p=0'
            return (a[0], a[2], a[1]), 'thm5/|A|=3/p=1'
        if k == 4:
            if p == 0:
                if ambient.sum(a[1:]) != 0:
                    return a, 'thm5/|A|=4/p=0/a2+a3+a4≠0'
                return (a[1], a[0], a[2], a[3]), 'thm5/|A|=4/p=0/a2+a3+a4=0'
            if p == 1:
                return (a[2], a[0], a[3], a[1]), 'thm5/|A|=4/p=1'
            return (a[0], a[2], a[1], a[3]), 'thm5/|A|=4/p=2'
        if p == 0:
            return _five_without_pairs(ambient, a)
        if p == 1:
            a1, _, a3, a4, a5 = a
            signed = [e for e in (a1, neg(a1))
                      if ambient.sum((e, a3, a4)) == 0]
            if not signed:
                return (a5, a1, a3, a4, neg(a1)), 'thm5/|A|=5/p=1/±a1+a3+a4≠0'
            e = signed[0]
            eps = '+' if e == a1 else '-'
            if op(a5, a4) != e:
                return ((a3, e, a5, a4, neg(e)),
                        'thm5/|A|=5/p=1/ε={}/a5+a4≠εa1'.format(eps))
            return ((e, a5, a3, a4, neg(e)),
                    'thm5/|A|=5/p=1/ε={}/a5+a4=εa1'.format(eps))
        a1, a2, a3, a4, a5 = a
        if ambient.sum((a1, a3, a2, a4)) != 0:
            return (a5, a1, a3, a2, a4), 'thm5/|A|=5/p=2/a1+a3-a1-a3≠0'
        if ambient.sum((a3, a2, a5)) != 0:
            return ((a4, a1, a3, a2, a5),
                    'thm5/|A|=5/p=2/a1+a3-a1-a3=0/a3-a1+a5≠0')
        return ((a4, a2, a3, a1, a5),
                'thm5/|A|=5/p=2/a1+a3-a1-a3=0/a3-a1+a5=0')

    return branch


def _pair_labelings(ambient, items, p):
    """Labelings with ``a_2 = -a_1`` (p >= 1) and ``a_4 = -a_3`` (p = 2)."""
    for a in itertools.permutations(items):
        if p >= 1 and a[1] != ambient.neg(a[0]):
            continue
        if p == 2 and a[3] != ambient.neg(a[2]):
            continue
        yield a


def order_small_general(candidate, fallback=True):
    """Simple ordering of any set of at most 5 nonidentity elements.

    Works in any finite group; inverse pairs are allowed and select the
    branch through their number ``p``.
    """
    ambient = candidate.ambient
    k = len(candidate)
    if k > constants.CONSTRUCTIVE_GENERAL_LIMIT:
        raise HypothesisError('|A| = {} exceeds {}'.format(
            k, constants.CONSTRUCTIVE_GENERAL_LIMIT))
    if k <= 2:
        return (Ordering(ambient, candidate.items),
                CaseLabel('thm5', 'thm5/|A|≤2'))
    p = _p_count(ambient, candidate.items)
    table = ambient.table
    attempts = ((_Labels(table, a), _general_branch(ambient, k, p))
                for a in _pair_labelings(ambient, candidate.items, p))
    try:
        return _first_simple(ambient, attempts, 'thm5')
    except InternalCaseGap as gap:
        if not fallback:
            raise
        return _fallback(candidate, gap)
