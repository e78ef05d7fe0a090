"""
Partial sums of orderings and the exhaustive simple-ordering search.

An ordering ``(a_1, ..., a_k)`` of distinct nonidentity elements has the
partial sums ``s_j = a_1 + ... + a_j`` accumulated left to right; it is
simple when the ``s_j`` are pairwise distinct, zero-free when moreover no
``s_j`` is the identity.
"""

import logging
from math import factorial

from psum.exceptions import OrderingError

LOGGER = logging.getLogger(__name__)


class Ordering:
    """A sequence of distinct nonidentity element indices of ``ambient``."""

    __slots__ = ('ambient', 'items')

    def __init__(self, ambient, items):
        items = tuple(ambient.check_index(i) for i in items)
        if 0 in items:
            raise OrderingError('an ordering cannot contain the identity')
        if len(set(items)) != len(items):
            raise OrderingError(
                'ordering {} repeats an element'.format(items))
        self.ambient = ambient
        self.items = items

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __eq__(self, other):
        return (isinstance(other, Ordering) and self.ambient == other.ambient
                and self.items == other.items)

    def __hash__(self):
        return hash(self.items)

    def __bool__(self):
        return True

    def labels(self):
        return [self.ambient.label(i) for i in self.items]

    def reversed(self):
        return Ordering(self.ambient, reversed(self.items))

    def __repr__(self):
        return 'Ordering({}: {})'.format(
            self.ambient.name, ', '.join(self.labels()))


class PartialSumTrace:

    __slots__ = ('ambient', 'sums')

    def __init__(self, ambient, sums):
        self.ambient = ambient
        self.sums = tuple(sums)

    def __len__(self):
        return len(self.sums)

    @property
    def is_distinct(self):
        return len(set(self.sums)) == len(self.sums)

    @property
    def avoids_identity(self):
        return 0 not in self.sums

    def labels(self):
        return [self.ambient.label(s) for s in self.sums]

    def __repr__(self):
        return 'PartialSumTrace({})'.format(', '.join(self.labels()))


class SubsetCandidate:
    """A set of distinct nonidentity elements, kept in ambient order.

    ``total`` is the ambient-order sum, which is the sum for abelian
    groups and one fixed reading of it otherwise.
    """

    __slots__ = ('ambient', 'items', 'total', 'contains_inverse_pair')

    def __init__(self, ambient, items):
        items = tuple(sorted({ambient.check_index(i) for i in items}))
        if 0 in items:
            raise OrderingError('a candidate set cannot contain the identity')
        self.ambient = ambient
        self.items = items
        self.total = ambient.sum(items)
        members = set(items)
        self.contains_inverse_pair = any(
            ambient.neg(x) != x and ambient.neg(x) in members for x in items)

    @property
    def sum_is_zero(self):
        return self.total == 0

    @property
    def mask(self):
        return sum(1 << i for i in self.items)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def labels(self):
        return [self.ambient.label(i) for i in self.items]

    def __repr__(self):
        return 'SubsetCandidate({}: {{{}}})'.format(
            self.ambient.name, ', '.join(self.labels()))


class NotFound:
    """Certificate that an exhaustive search found no admissible ordering."""

    __slots__ = ('candidate', 'zero_free', 'nodes')

    def __init__(self, candidate, zero_free, nodes):
        self.candidate = candidate
        self.zero_free = zero_free
        self.nodes = nodes

    @property
    def search_space(self):
        return factorial(len(self.candidate))

    def __bool__(self):
        return False

    def __repr__(self):
        return 'NotFound({!r}, zero_free={}, orderings={})'.format(
            self.candidate, self.zero_free, self.search_space)


def partial_sums(ordering):
    table = ordering.ambient.table
    sums = []
    total = 0
    for a in ordering.items:
        total = table[total][a]
        sums.append(total)
    return PartialSumTrace(ordering.ambient, sums)


def is_simple(ordering):
    return partial_sums(ordering).is_distinct


def is_zero_free(ordering):
    trace = partial_sums(ordering)
    return trace.is_distinct and trace.avoids_identity


def is_simple_sequence(table, items, zero_free=False):
    """``is_simple`` on raw indices, for hot loops."""
    seen = {0} if zero_free else set()
    total = 0
    for a in items:
        total = table[total][a]
        if total in seen:
            return False
        seen.add(total)
    return True


def some_ordering_sums_to_zero(candidate):
    """Whether the elements of ``candidate`` sum to 0 in some order.

    In an abelian group this is ``sum_is_zero``. Otherwise all orders sum
    into one coset of the commutator subgroup, and only when that coset
    is G' itself are the orders searched.
    """
    ambient = candidate.ambient
    if ambient.is_abelian or candidate.sum_is_zero:
        return candidate.sum_is_zero
    if candidate.total not in ambient.commutator_subgroup:
        return False
    table, items = ambient.table, candidate.items
    full = (1 << len(items)) - 1
    dead = set()

    def reach(mask, total):
        if mask == full:
            return total == 0
        if (mask, total) in dead:
            return False
        for idx, a in enumerate(items):
            if not mask >> idx & 1 and reach(mask | 1 << idx, table[total][a]):
                return True
        dead.add((mask, total))
        return False

    return reach(0, 0)


def _depth_first(table, items, zero_free):
    k = len(items)
    used = [False] * k
    seen = {0} if zero_free else set()
    path = []
    nodes = 0

    def extend(total):
        nonlocal nodes
        if len(path) == k:
            return True
        row = table[total]
        for idx in range(k):
            if used[idx]:
                continue
            nodes += 1
            s = row[items[idx]]
            # a repeated sum stays repeated in every extension
            if s in seen:
                continue
            used[idx] = True
            seen.add(s)
            path.append(items[idx])
            if extend(s):
                return True
            used[idx] = False
            seen.discard(s)
            path.pop()
        return False

    found = extend(0)
    return (tuple(path) if found else None), nodes


def find_simple_ordering(candidate, zero_free=False):
    """First simple ordering of ``candidate`` in ambient depth-first order.

    With ``zero_free`` the partial sums must also avoid the identity.
    Returns an ``Ordering`` or a ``NotFound`` certificate.
    """
    path, nodes = _depth_first(candidate.ambient.table, candidate.items,
                               zero_free)
    if path is None:
        LOGGER.debug('no %s ordering of %r after %d nodes',
                     'zero-free simple' if zero_free else 'simple',
                     candidate, nodes)
        return NotFound(candidate, zero_free, nodes)
    return Ordering(candidate.ambient, path)
