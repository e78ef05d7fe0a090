import logging
from collections import namedtuple

from django.conf import settings

from psum import constants
from psum.constructive import order_small_abelian, order_small_general
from psum.exceptions import HypothesisError, InternalCaseGap, OrderingError
from psum.management.base import PsumCommand
from psum.orderings import (
    SubsetCandidate, find_simple_ordering, is_simple, is_zero_free,
    partial_sums,
)
from psum.serializers import OrderOutcomeSerializer
from psum.utils import parse_subset, resolve_group

LOGGER = logging.getLogger(__name__)

OrderOutcome = namedtuple(
    'OrderOutcome', 'candidate result zero_free strategy branch')


def constructive_ordering(candidate):
    """``(Ordering, CaseLabel)`` from the theorem that covers ``candidate``.

    ``None`` when no constructive theorem applies.
    """
    ambient = candidate.ambient
    if (ambient.is_abelian and candidate.sum_is_zero
            and not candidate.contains_inverse_pair
            and len(candidate) <= constants.CONSTRUCTIVE_ABELIAN_LIMIT):
        return order_small_abelian(candidate, fallback=False)
    if len(candidate) <= constants.CONSTRUCTIVE_GENERAL_LIMIT:
        return order_small_general(candidate, fallback=False)
    return None


class Command(PsumCommand):

    help = """
        Find a simple ordering of a set of group elements and print its
        partial sums. Exits with 2 when an exhaustive search finds none.
    """

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--group', help='e.g. Z25 or Z4xZ2')
        parser.add_argument(
            '--cayley', help='Cayley table file or built-in such as sym3')
        parser.add_argument(
            '--set', required=True, dest='subset',
            help='"1,3,-5", "(1,0),(0,1)", labels, or all-nonidentity')
        parser.add_argument('--zero-free', action='store_true',
                            help='partial sums must also avoid 0')
        parser.add_argument('--constructive-only', action='store_true',
                            help='fail rather than search')

    def find(self, candidate, zero_free, constructive_only):
        try:
            constructive = constructive_ordering(candidate)
        except InternalCaseGap as gap:
            LOGGER.warning('constructive gap %s on %r', gap.branch, candidate)
            if constructive_only:
                raise
            constructive = None
        if constructive is not None:
            ordering, label = constructive
            if not zero_free or is_zero_free(ordering):
                return OrderOutcome(candidate, ordering, zero_free,
                                    constants.STRATEGY_CONSTRUCTIVE,
                                    label.branch)
            if constructive_only:
                raise HypothesisError(
                    'the constructive ordering of {!r} is not zero-free'
                    .format(candidate))
        elif constructive_only:
            raise HypothesisError(
                'no constructive theorem covers {!r}'.format(candidate))
        found = find_simple_ordering(candidate, zero_free=zero_free)
        return OrderOutcome(candidate, found, zero_free,
                            constants.STRATEGY_BRUTE_FORCE if found else None,
                            None)

    def run(self, *args, **options):
        ambient, keyed = resolve_group(
            options['group'], options['cayley'],
            max_order=settings.PSUM_MAX_CAYLEY_ORDER)
        items = parse_subset(ambient, options['subset'], keyed)
        if len(set(items)) != len(items):
            raise OrderingError('the set lists an element twice')
        candidate = SubsetCandidate(ambient, items)
        if not len(candidate):
            raise OrderingError('the set is empty')
        zero_free = options['zero_free']
        outcome = self.find(candidate, zero_free,
                            options['constructive_only'])

        result = outcome.result
        if result:
            audit = is_zero_free(result) if zero_free else is_simple(result)
            if not audit:
                raise OrderingError(
                    '{!r} failed its own check'.format(result))

        lines = [
            'group: {}'.format(ambient.name),
            'subset: {}'.format(' '.join(candidate.labels())),
        ]
        if result:
            lines += [
                'ordering: {}'.format(' '.join(result.labels())),
                'partial sums: {}'.format(
                    ' '.join(partial_sums(result).labels())),
                'strategy: {}{}'.format(
                    outcome.strategy,
                    ' ({})'.format(outcome.branch) if outcome.branch else ''),
            ]
        else:
            lines.append(
                'no {} ordering: {} orderings exhausted ({} nodes)'.format(
                    'zero-free simple' if zero_free else 'simple',
                    result.search_space, result.nodes))
        self.emit(OrderOutcomeSerializer(outcome).data, lines)
        if not result:
            self.not_found('no ordering exists')
