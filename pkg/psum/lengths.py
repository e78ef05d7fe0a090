"""
Edge lengths of subgraphs of K_v.

The length of an edge ``[x, y]`` of K_v is ``min(|x - y|, v - |x - y|)``.
This module checks the known necessary conditions for a list of lengths
to be realized by a cycle, a Hamiltonian path or a near 1-factor, and
searches for a realization.
"""

import itertools
import logging
import re
from collections import Counter
from functools import reduce
from math import gcd

from sympy import divisors

from psum import constants
from psum.exceptions import LengthListError
from psum.heffter import Cycle

LOGGER = logging.getLogger(__name__)

LENGTH_LIST = re.compile(r'^\s*(?P<v>\d+)\s*:(?P<entries>.*)$')
ENTRY = re.compile(r'^(?P<value>-?\d+)(?:\^(?P<mult>\d+))?$')


def edge_length(v, x, y):
    if not (0 <= x < v and 0 <= y < v):
        raise LengthListError('vertices {} and {} are not in Z_{}'.format(
            x, y, v))
    if x == y:
        raise LengthListError('loop at vertex {}'.format(x))
    d = abs(x - y)
    return min(d, v - d)


class LengthList:
    """A multiset of lengths in ``1 .. v // 2``."""

    def __init__(self, v, entries, elements=None):
        if v < 2:
            raise LengthListError('v must be at least 2, got {}'.format(v))
        entries = Counter(entries)
        for a, m in entries.items():
            if not 1 <= a <= v // 2:
                raise LengthListError(
                    'length {} is outside 1..{}'.format(a, v // 2))
            if m < 1:
                raise LengthListError(
                    'multiplicity of {} must be positive'.format(a))
        self.v = v
        self.entries = entries
        # residues as written, when parsed from Z_v elements
        self.elements = tuple(elements) if elements is not None else None

    @classmethod
    def from_elements(cls, v, elements):
        """Lengths of nonzero elements of Z_v; ``x`` and ``-x`` agree."""
        if v < 2:
            raise LengthListError('v must be at least 2, got {}'.format(v))
        lengths = []
        for x in elements:
            x %= v
            if not x:
                raise LengthListError('0 is not a length of Z_{}'.format(v))
            lengths.append(min(x, v - x))
        return cls(v, lengths, elements=[x % v for x in elements])

    @classmethod
    def parse(cls, text):
        """``"11: 1^2 2 3 5^2"``; entries are normalized residues of Z_v."""
        match = LENGTH_LIST.match(text)
        if not match:
            raise LengthListError(
                'expected "v: a^m a^m ...", got {!r}'.format(text))
        v = int(match.group('v'))
        elements = []
        for token in match.group('entries').replace(',', ' ').split():
            entry = ENTRY.match(token)
            if not entry:
                raise LengthListError('bad entry {!r}'.format(token))
            elements.extend(
                [int(entry.group('value'))] * int(entry.group('mult') or 1))
        if not elements:
            raise LengthListError('empty length list')
        return cls.from_elements(v, elements)

    @property
    def size(self):
        return sum(self.entries.values())

    def __len__(self):
        return self.size

    @property
    def values(self):
        return sorted(self.entries)

    def expanded(self):
        return [a for a in self.values for _ in range(self.entries[a])]

    @property
    def gcd(self):
        return reduce(gcd, self.values, self.v)

    def multiples(self, d):
        return sum(m for a, m in self.entries.items() if a % d == 0)

    def __eq__(self, other):
        return (isinstance(other, LengthList) and self.v == other.v
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.v, tuple(sorted(self.entries.items()))))

    def __str__(self):
        parts = []
        for a in self.values:
            m = self.entries[a]
            parts.append(str(a) if m == 1 else '{}^{}'.format(a, m))
        return '{}: {}'.format(self.v, ' '.join(parts))

    def __repr__(self):
        return 'LengthList({})'.format(self)


def cycle_edges(vertices):
    return [(vertices[i], vertices[(i + 1) % len(vertices)])
            for i in range(len(vertices))]


def path_edges(vertices):
    return list(zip(vertices, vertices[1:]))


def lengths_of_subgraph(v, edges):
    return LengthList(v, (edge_length(v, x % v, y % v) for x, y in edges))


class SignAssignment:
    """Signs ``e_i`` for an ordering ``a_i`` of a list of Z_v values."""

    def __init__(self, v, values, signs):
        if len(values) != len(signs):
            raise LengthListError('{} values but {} signs'.format(
                len(values), len(signs)))
        self.v = v
        self.values = tuple(values)
        self.signs = tuple(signs)

    def __bool__(self):
        return True

    def terms(self):
        return [e * a for e, a in zip(self.signs, self.values)]

    @property
    def total(self):
        return sum(self.terms()) % self.v

    def partial_sums(self):
        return [s % self.v for s in itertools.accumulate(self.terms())]

    def __str__(self):
        text = ''
        for term in self.terms():
            if text:
                text += '+' if term > 0 else '-'
            elif term < 0:
                text += '-'
            text += str(abs(term))
        return text


class SearchExhausted:
    """No witness exists; ``nodes`` branches were explored."""

    __slots__ = ('length_list', 'target', 'nodes')

    def __init__(self, length_list, target, nodes=0):
        self.length_list = length_list
        self.target = target
        self.nodes = nodes

    def __bool__(self):
        return False

    def __repr__(self):
        return 'SearchExhausted({}, {}, nodes={})'.format(
            self.length_list, self.target, self.nodes)


def _first_divisor_over(length_list, bound, proper=False):
    for d in divisors(length_list.v):
        if proper and d == 1:
            continue
        if not bound(d, length_list.multiples(d)):
            return d
    return None


def bhr_violation(length_list):
    """First divisor ``d`` of v with more than ``v - d`` multiples in L."""
    v = length_list.v
    return _first_divisor_over(length_list, lambda d, n: n <= v - d)


def check_bhr(length_list):
    return bhr_violation(length_list) is None


def mpp_violation(length_list):
    v = length_list.v
    if v % 2 == 0 or length_list.size != (v - 1) // 2:
        raise LengthListError(
            'the near 1-factor condition needs v odd and |L| = (v-1)/2')
    return _first_divisor_over(length_list, lambda d, n: 2 * n <= v - d)


def check_mpp(length_list):
    return mpp_violation(length_list) is None


def check_signed_sum(length_list):
    """Signs making ``sum(e_i a_i) = 0 mod v``, or ``SearchExhausted``.

    The first sign is fixed to ``+``: negating every sign preserves a zero
    sum.
    """
    v = length_list.v
    values = length_list.expanded()
    if not values:
        return SignAssignment(v, values, ())
    if len(values) <= constants.SIGNED_SUM_ENUMERATION_LIMIT:
        nodes = 0
        for tail in itertools.product((1, -1), repeat=len(values) - 1):
            nodes += 1
            signs = (1,) + tail
            if sum(e * a for e, a in zip(signs, values)) % v == 0:
                return SignAssignment(v, values, signs)
        return SearchExhausted(length_list, 'signed_sum', nodes)
    return _signed_sum_halves(length_list, values)


def _signed_sum_halves(length_list, values):
    v = length_list.v
    half = len(values) // 2
    left, right = values[:half], values[half:]
    reached = {}
    for tail in itertools.product((1, -1), repeat=len(left) - 1):
        signs = (1,) + tail
        reached.setdefault(
            sum(e * a for e, a in zip(signs, left)) % v, signs)
    nodes = len(reached)
    for signs in itertools.product((1, -1), repeat=len(right)):
        nodes += 1
        need = -sum(e * a for e, a in zip(signs, right)) % v
        if need in reached:
            return SignAssignment(v, values, reached[need] + signs)
    return SearchExhausted(length_list, 'signed_sum', nodes)


def reduce_by_gcd(length_list):
    """``(reduced list, d)`` with ``d = gcd(v, a_1, ..., a_t)``."""
    d = length_list.gcd
    if d == 1:
        return length_list, 1
    return LengthList(length_list.v // d,
                      {a // d: m for a, m in length_list.entries.items()}), d


def divisor_count_violation(length_list, require_coprime=True):
    """First divisor ``d > 1`` of v with ``n_d * v > k * (v - d)``.

    ``n_d`` counts the multiples of ``d`` in L. The bound is a necessary
    condition for a k-cycle only once L has been reduced to
    ``gcd(v, L) = 1``.
    """
    if require_coprime and length_list.gcd != 1:
        raise LengthListError(
            'gcd(v, L) = {}; reduce the list first'.format(length_list.gcd))
    v, k = length_list.v, length_list.size
    return _first_divisor_over(length_list, lambda d, n: n * v <= k * (v - d),
                               proper=True)


def check_divisor_count(length_list, require_coprime=True):
    return divisor_count_violation(length_list, require_coprime) is None


def uniform_list_cycle(v, a, k):
    """The cycle ``(0, a, 2a, ...)`` when ``a`` has order ``k`` in Z_v."""
    if not 1 <= a <= v // 2:
        raise LengthListError('length {} is outside 1..{}'.format(a, v // 2))
    length_list = LengthList(v, {a: k}) if k >= 1 else None
    if k < 3 or k != v // gcd(v, a):
        return SearchExhausted(length_list, constants.TARGET_CYCLE)
    return Cycle(v, (i * a for i in range(k)))


def lift_cycle(cycle, d):
    """Scale a cycle of K_{v/d} to the cycle of K_v with lengths times d."""
    return Cycle(cycle.v * d, (x * d for x in cycle.vertices))


class Realization:
    """A subgraph of K_v: a vertex sequence, or pairs for a near 1-factor."""

    def __init__(self, target, v, vertices=(), pairs=()):
        self.target = target
        self.v = v
        self.vertices = tuple(vertices)
        self.pairs = tuple(pairs)

    def __bool__(self):
        return True

    def edges(self):
        if self.target == constants.TARGET_CYCLE:
            return cycle_edges(self.vertices)
        if self.target == constants.TARGET_PATH:
            return path_edges(self.vertices)
        return list(self.pairs)

    def lengths(self):
        return lengths_of_subgraph(self.v, self.edges())

    def as_cycle(self):
        return Cycle(self.v, self.vertices)

    def __str__(self):
        if self.target == constants.TARGET_FACTOR:
            return ' '.join('[{},{}]'.format(x, y) for x, y in self.pairs)
        return '({})'.format(','.join(str(x) for x in self.vertices))


def _steps(v, a):
    return (a,) if 2 * a == v else (a, -a)


class _Search:

    def __init__(self, length_list):
        self.length_list = length_list
        self.v = length_list.v
        self.remaining = Counter(length_list.entries)
        self.nodes = 0

    def available(self):
        # each distinct value once per depth
        return [a for a in sorted(self.remaining) if self.remaining[a] > 0]

    def take(self, a):
        self.remaining[a] -= 1

    def give(self, a):
        self.remaining[a] += 1


def _realize_walk(length_list, closed):
    """Cycle (``closed``) or Hamiltonian path from vertex 0.

    A cycle contains an edge of the least length ``m``; translating and
    reflecting puts it first as ``0 -> m``. A path is reflected so its
    first step is positive.
    """
    search = _Search(length_list)
    v = search.v
    k = length_list.size
    target_vertices = k if closed else k + 1
    vertices = [0]
    visited = {0}

    def extend():
        if len(vertices) == target_vertices:
            if not closed:
                return True
            closing = edge_length(v, vertices[-1], 0)
            return search.remaining[closing] == 1
        first = len(vertices) == 1
        candidates = search.available()
        if first and closed:
            candidates = candidates[:1]
        for a in candidates:
            search.take(a)
            for step in ((a,) if first else _steps(v, a)):
                search.nodes += 1
                y = (vertices[-1] + step) % v
                if y in visited:
                    continue
                vertices.append(y)
                visited.add(y)
                if extend():
                    return True
                visited.discard(y)
                vertices.pop()
            search.give(a)
        return False

    if extend():
        target = constants.TARGET_CYCLE if closed else constants.TARGET_PATH
        return Realization(target, v, vertices=vertices)
    return search


def _realize_factor(length_list):
    """Near 1-factor leaving vertex 0 uncovered."""
    search = _Search(length_list)
    v = search.v
    matched = [False] * v
    matched[0] = True
    pairs = []

    def extend():
        if len(pairs) == length_list.size:
            return True
        u = matched.index(False)
        matched[u] = True
        for a in search.available():
            search.take(a)
            for step in _steps(v, a):
                search.nodes += 1
                w = (u + step) % v
                if matched[w]:
                    continue
                matched[w] = True
                pairs.append((u, w))
                if extend():
                    return True
                pairs.pop()
                matched[w] = False
            search.give(a)
        matched[u] = False
        return False

    if extend():
        return Realization(constants.TARGET_FACTOR, v, pairs=pairs)
    return search


def realize(length_list, target=constants.TARGET_CYCLE):
    """A subgraph of K_v with edge lengths exactly L, or ``SearchExhausted``.

    Targets: ``cycle`` (3 <= k <= v), ``hamiltonian_path`` (k = v - 1) and
    ``near_one_factor`` (v odd, k = (v - 1) / 2). Cycles are searched on
    the gcd-reduced list and lifted back.
    """
    target = constants.TARGET_ALIASES.get(target, target)
    v, k = length_list.v, length_list.size
    if target == constants.TARGET_CYCLE:
        if not 3 <= k <= v:
            raise LengthListError(
                'a cycle of K_{} needs 3..{} lengths, got {}'.format(v, v, k))
        reduced, d = reduce_by_gcd(length_list)
        if d > 1 and reduced.size > reduced.v:
            # a cycle with these lengths stays in one coset of dZ_v
            return SearchExhausted(length_list, target)
        if d > 1:
            LOGGER.debug('realizing %s through %s', length_list, reduced)
            found = realize(reduced, target)
            if not found:
                return SearchExhausted(length_list, target, found.nodes)
            lifted = lift_cycle(found.as_cycle(), d)
            witness = Realization(target, v, vertices=lifted.vertices)
        else:
            found = _realize_walk(length_list, closed=True)
            witness = found if isinstance(found, Realization) else None
    elif target == constants.TARGET_PATH:
        if k != v - 1:
            raise LengthListError(
                'a Hamiltonian path of K_{} needs {} lengths, got {}'.format(
                    v, v - 1, k))
        found = _realize_walk(length_list, closed=False)
        witness = found if isinstance(found, Realization) else None
    elif target == constants.TARGET_FACTOR:
        if v % 2 == 0 or k != (v - 1) // 2:
            raise LengthListError(
                'a near 1-factor needs v odd and (v-1)/2 lengths')
        found = _realize_factor(length_list)
        witness = found if isinstance(found, Realization) else None
    else:
        raise LengthListError('unknown target {!r}; choose one of {}'.format(
            target, ', '.join(constants.TARGETS)))
    if witness is None:
        return SearchExhausted(length_list, target, found.nodes)
    if witness.lengths() != length_list:
        raise LengthListError('realization {} has lengths {}'.format(
            witness, witness.lengths()))
    return witness


def bhr_signed_sequence(path, elements=None):
    """Signed steps of a Hamiltonian path from 0 as a ``SignAssignment``.

    ``elements`` is the list of Z_v values the steps are read against; by
    default the edge lengths. The partial sums are the path's vertices
    after 0, hence exactly Z_v minus 0.
    """
    v = path.v
    remaining = Counter(e % v for e in elements) if elements else None
    values, signs = [], []
    for x, y in path_edges(path.vertices):
        step = (y - x) % v
        if remaining is None:
            a = min(step, v - step)
        elif remaining[step]:
            a = step
        elif remaining[(v - step) % v]:
            a = (v - step) % v
        else:
            raise LengthListError(
                'step {} of {} is not in the list'.format(step, path))
        if remaining is not None:
            remaining[a] -= 1
        values.append(a)
        signs.append(1 if a == step else -1)
    return SignAssignment(v, values, signs)


class ConditionRow:

    def __init__(self, condition, passed, detail=''):
        self.condition = condition
        self.passed = passed
        self.detail = detail

    def to_dict(self):
        return {'condition': self.condition, 'passed': self.passed,
                'detail': self.detail}


def condition_report(length_list):
    """Every necessary condition that applies to L, one row each."""
    v, k = length_list.v, length_list.size
    rows = []
    signed = check_signed_sum(length_list)
    rows.append(ConditionRow(
        'signed_sum', bool(signed),
        '{} = 0 mod {}'.format(signed, v) if signed else 'no signs work'))
    reduced, d = reduce_by_gcd(length_list)
    rows.append(ConditionRow(
        'gcd_reduction', True,
        'd = {}, reduced to {}'.format(d, reduced) if d > 1 else 'd = 1'))
    if reduced.size <= reduced.v:
        divisor = divisor_count_violation(reduced)
        rows.append(ConditionRow(
            'divisor_count', divisor is None,
            'violated at d = {}'.format(divisor) if divisor else ''))
    if k == v - 1:
        divisor = bhr_violation(length_list)
        rows.append(ConditionRow(
            'bhr', divisor is None,
            'violated at d = {}'.format(divisor) if divisor else ''))
    if v % 2 and k == (v - 1) // 2:
        divisor = mpp_violation(length_list)
        rows.append(ConditionRow(
            'mpp', divisor is None,
            'violated at d = {}'.format(divisor) if divisor else ''))
    if len(length_list.entries) == 1:
        a = length_list.values[0]
        order = v // gcd(v, a)
        rows.append(ConditionRow(
            'uniform', order == k,
            'order of {} in Z_{} is {}'.format(a, v, order)))
    return rows
