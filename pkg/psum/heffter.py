"""
Heffter systems and the cyclic cycle systems they generate.

A Heffter system D(v, k) partitions a half-set of Z_v into zero-sum parts
of size k. A simple ordering of each part yields a base cycle whose
vertices are the partial sums; the base cycles together have every
nonzero residue exactly once as a difference, so their translates
decompose K_v.
"""

import logging
from collections import Counter

import networkx as nx

from psum import constants
from psum.constructive import order_small_abelian
from psum.exceptions import HypothesisError, OrderingError
from psum.groups import CyclicGroup
from psum.orderings import (
    NotFound, Ordering, SubsetCandidate, find_simple_ordering, is_simple,
    partial_sums,
)

LOGGER = logging.getLogger(__name__)

STRATEGY_GIVEN = 'given'


class Violation:
    """First broken invariant of a Heffter system or cycle system."""

    __slots__ = ('reason', 'elements', 'part')

    def __init__(self, reason, elements=(), part=None):
        self.reason = reason
        self.elements = tuple(elements)
        self.part = part

    def __bool__(self):
        return False

    def to_dict(self):
        return {'reason': self.reason, 'elements': list(self.elements),
                'part': self.part}

    def __str__(self):
        where = '' if self.part is None else ' in part {}'.format(self.part)
        return '{}{}: {}'.format(self.reason, where,
                                 ' '.join(str(e) for e in self.elements))


class HeffterSystem:
    """A validated D(v, k); parts are residues, in the order given."""

    def __init__(self, v, k, parts):
        self.v = v
        self.k = k
        self.parts = tuple(tuple(part) for part in parts)

    @property
    def half_set(self):
        return sorted(x for part in self.parts for x in part)

    def signed_parts(self):
        """Parts with residues above v/2 written as negatives."""
        return [[x if x <= self.v // 2 else x - self.v for x in part]
                for part in self.parts]

    def to_text(self):
        lines = ['{} {}'.format(self.v, self.k)]
        lines.extend(' '.join(str(x) for x in part)
                     for part in self.signed_parts())
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        return (isinstance(other, HeffterSystem) and self.v == other.v
                and self.k == other.k
                and sorted(map(sorted, self.parts))
                == sorted(map(sorted, other.parts)))

    def __repr__(self):
        return 'HeffterSystem(v={}, k={}, parts={})'.format(
            self.v, self.k, [sorted(p) for p in self.parts])


def validate_heffter(v, k, parts):
    """``HeffterSystem`` when the parts form D(v, k), else a ``Violation``."""
    if v < 3 or v % 2 == 0:
        return Violation('v must be odd and at least 3', (v,))
    if k < 3:
        return Violation('parts must have at least 3 elements', (k,))
    if (v - 1) % (2 * k):
        return Violation('2k must divide v - 1', (v, k))
    expected = (v - 1) // (2 * k)
    if len(parts) != expected:
        return Violation('expected {} parts'.format(expected), (len(parts),))
    residues = []
    for index, part in enumerate(parts):
        part = [x % v for x in part]
        if len(part) != k:
            return Violation('part has {} elements, expected {}'.format(
                len(part), k), part, index)
        residues.append(part)
    seen = {}
    for index, part in enumerate(residues):
        for x in part:
            if x == 0:
                return Violation('zero in part', (x,), index)
            if x in seen:
                return Violation('repeated element', (x,), index)
            if (v - x) in seen:
                return Violation('inverse pair', (v - x, x), index)
            seen[x] = index
    for index, part in enumerate(residues):
        if sum(part) % v:
            return Violation('part sum is {} mod {}'.format(
                sum(part) % v, v), part, index)
    return HeffterSystem(v, k, residues)


class Cycle:
    """A cycle on residues mod v; equal cycles share a canonical form."""

    __slots__ = ('v', 'vertices')

    def __init__(self, v, vertices):
        vertices = tuple(x % v for x in vertices)
        if len(vertices) < 3:
            raise OrderingError('a cycle needs at least 3 vertices')
        if len(set(vertices)) != len(vertices):
            raise OrderingError('cycle {} repeats a vertex'.format(vertices))
        self.v = v
        self.vertices = vertices

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def edges(self):
        vs = self.vertices
        return [(vs[h], vs[(h + 1) % len(vs)]) for h in range(len(vs))]

    def canonical(self):
        vs = self.vertices
        k = len(vs)
        start = vs.index(min(vs))
        forward = tuple(vs[(start + i) % k] for i in range(k))
        backward = tuple(vs[(start - i) % k] for i in range(k))
        return min(forward, backward, key=lambda c: c[1])

    def translate(self, c):
        return Cycle(self.v, (x + c for x in self.vertices))

    def __eq__(self, other):
        return (isinstance(other, Cycle) and self.v == other.v
                and self.canonical() == other.canonical())

    def __hash__(self):
        return hash((self.v, self.canonical()))

    def __str__(self):
        return '({})'.format(','.join(str(x) for x in self.vertices))

    def __repr__(self):
        return 'Cycle(v={}, {})'.format(self.v, self)


class DifferenceList(Counter):
    """The multiset of ``±(c_{h+1} - c_h)`` over the edges of a cycle."""

    def __init__(self, v, values=()):
        super().__init__(values)
        self.v = v

    def signed(self):
        """One ``min(d, v - d)`` per edge, sorted."""
        halves = []
        for d, m in sorted(self.items()):
            if d <= self.v - d:
                halves.extend([d] * (m if 2 * d != self.v else m // 2))
        return sorted(halves)


def difference_list(cycle):
    v = cycle.v
    values = []
    for x, y in cycle.edges():
        values.append((y - x) % v)
        values.append((x - y) % v)
    return DifferenceList(v, values)


def ordering_to_cycle(ordering):
    """The cycle of partial sums of a simple zero-sum ordering of Z_v."""
    ambient = ordering.ambient
    if not isinstance(ambient, CyclicGroup):
        raise OrderingError('cycles are built from orderings of Z_v')
    trace = partial_sums(ordering)
    if not trace.is_distinct:
        raise OrderingError('{!r} is not simple'.format(ordering))
    if trace.sums[-1] != 0:
        raise OrderingError('{!r} does not sum to zero'.format(ordering))
    return Cycle(ambient.order, trace.sums)


class BaseCycles:
    """Base cycles of a Heffter system, one per part."""

    def __init__(self, system, orderings, cycles, strategies):
        self.system = system
        self.orderings = list(orderings)
        self.cycles = list(cycles)
        self.strategies = list(strategies)

    def __bool__(self):
        return True

    def __iter__(self):
        return iter(self.cycles)

    def __len__(self):
        return len(self.cycles)

    def differences(self):
        total = DifferenceList(self.system.v)
        for cycle in self.cycles:
            total.update(difference_list(cycle))
        return total


def _order_part(ambient, part, prefer_given):
    if prefer_given:
        given = Ordering(ambient, part)
        if is_simple(given):
            return given, STRATEGY_GIVEN
    candidate = SubsetCandidate(ambient, part)
    if len(candidate) <= constants.CONSTRUCTIVE_ABELIAN_LIMIT:
        ordering, label = order_small_abelian(candidate)
        return ordering, label.branch
    found = find_simple_ordering(candidate)
    if not found:
        return found, None
    return found, constants.STRATEGY_BRUTE_FORCE


def build_base_cycles(system, prefer_given=True):
    """``BaseCycles`` for ``system`` or the ``NotFound`` of a failing part.

    A part already written as a simple ordering keeps its order when
    ``prefer_given`` is set. A part with no simple ordering at all would
    refute the zero-sum conjecture and is logged as an error.
    """
    ambient = CyclicGroup(system.v)
    orderings, cycles, strategies = [], [], []
    for index, part in enumerate(system.parts):
        ordering, strategy = _order_part(ambient, part, prefer_given)
        if isinstance(ordering, NotFound):
            LOGGER.error(
                'part %d of D(%d,%d) has no simple ordering: Z_%d %s; this is '
                'a counterexample to the zero-sum conjecture', index,
                system.v, system.k, system.v, sorted(part))
            return ordering
        orderings.append(ordering)
        cycles.append(ordering_to_cycle(ordering))
        strategies.append(strategy)
    base = BaseCycles(system, orderings, cycles, strategies)
    if base.differences() != Counter(range(1, system.v)):
        raise OrderingError(
            'base cycles of {!r} do not cover Z_v \\ {{0}} exactly'.format(
                system))
    return base


class CycleSystem:

    def __init__(self, v, cycles, edges_covered, translation_closed):
        self.v = v
        self.cycles = list(cycles)
        self.edges_covered = edges_covered
        self.translation_closed = translation_closed

    @property
    def is_decomposition(self):
        return self.edges_covered == self.v * (self.v - 1) // 2

    def __bool__(self):
        return True

    def __len__(self):
        return len(self.cycles)


def develop_system(base, v):
    """All translates of ``base`` under Z_v, checked edge by edge.

    Returns a ``CycleSystem`` when every edge of K_v lies in exactly one
    cycle, otherwise a ``Violation`` naming the first bad edge.
    """
    cycles = [cycle.translate(i) for cycle in base for i in range(v)]
    cover = nx.MultiGraph()
    cover.add_nodes_from(range(v))
    for cycle in cycles:
        cover.add_edges_from(cycle.edges())
    for x, y in nx.complete_graph(v).edges():
        count = cover.number_of_edges(x, y)
        if count == 0:
            return Violation('uncovered edge', (x, y))
        if count > 1:
            return Violation('edge covered {} times'.format(count), (x, y))
    members = set(cycles)
    closed = all(cycle.translate(1) in members for cycle in cycles)
    return CycleSystem(v, cycles, cover.number_of_edges(), closed)


def find_heffter_system(v, k):
    """First D(v, k) found by backtracking, or ``NotFound``.

    Parts are built one at a time from the smallest unused absolute value,
    taken positive; further absolute values ascend, ``+`` before ``-``,
    and the last element of a part is forced by its zero sum.
    """
    if v % 2 == 0 or k < 3 or (v - 1) % (2 * k):
        raise HypothesisError(
            'D(v,k) needs v odd, k >= 3 and 2k dividing v - 1; got '
            'v={}, k={}'.format(v, k))
    half = (v - 1) // 2
    used = [False] * (half + 1)
    parts = []
    nodes = 0

    def absolute(x):
        return min(x, v - x)

    def fill(part, total, last):
        nonlocal nodes
        if len(part) == k - 1:
            x = (-total) % v
            a = absolute(x)
            if x and a > last and not used[a]:
                used[a] = True
                parts.append(part + [x])
                if complete():
                    return True
                parts.pop()
                used[a] = False
            return False
        for a in range(last + 1, half + 1):
            if used[a]:
                continue
            for x in (a, v - a):
                nodes += 1
                used[a] = True
                if fill(part + [x], (total + x) % v, a):
                    return True
                used[a] = False
        return False

    def complete():
        if all(used[1:]):
            return True
        first = used.index(False, 1)
        used[first] = True
        if fill([first], first, first):
            return True
        used[first] = False
        return False

    if complete():
        return HeffterSystem(v, k, parts)
    LOGGER.info('no D(%d,%d) after %d nodes', v, k, nodes)
    return NotFound(SubsetCandidate(CyclicGroup(v), range(1, half + 1)),
                    False, nodes)


def read_heffter_text(text):
    """Parse ``v k`` then one part per line; ``#`` starts a comment.

    Returns ``(v, k, parts)`` unvalidated.
    """
    rows = []
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            rows.append(line.replace(',', ' ').split())
    if not rows or len(rows[0]) != 2:
        raise OrderingError('first line must be "v k"')
    try:
        v, k = (int(x) for x in rows[0])
        parts = [[int(x) for x in row] for row in rows[1:]]
    except ValueError as err:
        raise OrderingError('not an integer: {}'.format(err))
    return v, k, parts


def load_heffter_file(path):
    with open(path, encoding='utf-8') as handle:
        return read_heffter_text(handle.read())


def format_cycles(cycles):
    return '\n'.join(
        '({})'.format(','.join(str(x) for x in cycle.canonical()))
        for cycle in cycles) + '\n'
