"""
Finite groups in additive notation.

Every ambient group exposes its elements as the indices ``0 .. order - 1``
with ``0`` the identity, and an addition table over those indices. The
search code only ever works with indices; the classes here translate
between indices and the user-facing element notation.

``AbelianGroupSpec`` is the primary decomposition Z_{p1^e1} + ... of an
abelian group, with elements ordered lexicographically by coordinates.
``CyclicGroup`` is Z_n with index = residue. ``CayleyGroup`` is any finite
group given by its table.
"""

import itertools
import logging
import re
from functools import cached_property, total_ordering
from math import prod

import numpy as np
from sympy import factorint
from sympy.combinatorics.named_groups import (
    AlternatingGroup, DihedralGroup, SymmetricGroup,
)
from sympy.utilities.iterables import partitions

from psum import constants
from psum.exceptions import CayleyTableError, GroupError

LOGGER = logging.getLogger(__name__)


class FiniteGroup:
    """Shared surface of all ambient groups."""

    name = ''

    @property
    def order(self):
        raise NotImplementedError

    @property
    def table(self):
        raise NotImplementedError

    @property
    def is_abelian(self):
        raise NotImplementedError

    def label(self, index):
        return str(index)

    def op(self, i, j):
        return self.table[i][j]

    @cached_property
    def inverses(self):
        table = self.table
        return tuple(row.index(0) for row in table)

    def neg(self, i):
        return self.inverses[i]

    def sum(self, items):
        """Left-to-right sum ``((a1 + a2) + a3) + ...``."""
        table = self.table
        total = 0
        for item in items:
            total = table[total][item]
        return total

    def nonidentity(self):
        return range(1, self.order)

    @cached_property
    def commutator_subgroup(self):
        """Indices of G' = <-x - y + x + y>; every ordering of a set sums
        into the same coset of it."""
        table, neg = self.table, self.neg
        members = {0}
        frontier = {
            table[table[table[neg(x)][neg(y)]][x]][y]
            for x in range(self.order) for y in range(self.order)}
        while frontier - members:
            members |= frontier
            frontier = {table[x][y] for x in members for y in members}
        return frozenset(members)

    def check_index(self, i):
        if not isinstance(i, (int, np.integer)) or not 0 <= i < self.order:
            raise GroupError(
                '{} is not an element index of {} (order {})'.format(
                    i, self.name, self.order))
        return int(i)

    def __str__(self):
        return self.name


def _encode(coords, factors):
    index = 0
    for c, n in zip(coords, factors):
        index = index * n + c
    return index


def _decode(index, factors):
    coords = []
    for n in reversed(factors):
        index, c = divmod(index, n)
        coords.append(c)
    return tuple(reversed(coords))


def _primary_key(q):
    (p, e), = factorint(q).items()
    return (p, e)


class AbelianGroupSpec(FiniteGroup):
    """Z_{n_1} + ... + Z_{n_r} with prime-power n_i in canonical order.

    Canonical order sorts the factors by prime, then by exponent, so two
    specs are equal exactly when they describe isomorphic groups.
    """

    def __init__(self, factors=()):
        factors = tuple(int(n) for n in factors)
        for n in factors:
            if n < 2 or len(factorint(n)) != 1:
                raise GroupError(
                    '{} is not a prime power >= 2'.format(n))
        if list(factors) != sorted(factors, key=_primary_key):
            raise GroupError(
                'factors {} are not in canonical order'.format(factors))
        self.factors = factors

    @classmethod
    def from_moduli(cls, moduli):
        """Canonical spec of Z_{m_1} + ... + Z_{m_r} for arbitrary m_i."""
        factors = []
        for m in moduli:
            m = abs(int(m))
            if m == 0:
                raise GroupError('infinite cyclic factors are not supported')
            factors.extend(p ** e for p, e in factorint(m).items())
        return cls(sorted(factors, key=_primary_key))

    @property
    def order(self):
        return prod(self.factors)

    @property
    def name(self):
        if not self.factors:
            return 'Z1'
        return '+'.join('Z{}'.format(n) for n in self.factors)

    @property
    def is_abelian(self):
        return True

    @cached_property
    def table(self):
        n = self.order
        mods = np.array(self.factors or (1,), dtype=np.int64)
        coords = np.array(
            [_decode(i, self.factors) or (0,) for i in range(n)],
            dtype=np.int64)
        weights = np.array(
            [prod(self.factors[k + 1:]) for k in range(len(mods))],
            dtype=np.int64)
        sums = (coords[:, None, :] + coords[None, :, :]) % mods
        return tuple(tuple(row) for row in (sums @ weights).tolist())

    def element(self, *coords):
        return GroupElement(self, coords)

    def element_at(self, index):
        return GroupElement(self, _decode(self.check_index(index),
                                          self.factors))

    def index_of(self, element):
        if element.spec != self:
            raise GroupError('{} is not an element of {}'.format(
                element, self.name))
        return _encode(element.coords, self.factors)

    def elements(self):
        return [self.element_at(i) for i in range(self.order)]

    def label(self, index):
        coords = _decode(index, self.factors)
        if len(coords) == 1:
            return str(coords[0])
        return '({})'.format(','.join(map(str, coords)))

    def as_cayley(self):
        return CayleyGroup(self.table, name=self.name,
                           labels=[self.label(i) for i in range(self.order)])

    def __eq__(self, other):
        return (isinstance(other, AbelianGroupSpec)
                and self.factors == other.factors)

    def __hash__(self):
        return hash(('abelian', self.factors))

    def __repr__(self):
        return 'AbelianGroupSpec({})'.format(self.factors)

    def __reduce__(self):
        return (AbelianGroupSpec, (self.factors,))


@total_ordering
class GroupElement:
    """Value-semantic element of an ``AbelianGroupSpec``."""

    __slots__ = ('spec', 'coords')

    def __init__(self, spec, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(spec.factors):
            raise GroupError('{} has {} coordinates, {} expects {}'.format(
                coords, len(coords), spec.name, len(spec.factors)))
        self.spec = spec
        self.coords = tuple(c % n for c, n in zip(coords, spec.factors))

    def _check(self, other):
        if not isinstance(other, GroupElement) or other.spec != self.spec:
            raise GroupError('cannot combine {!r} with {!r}'.format(
                self, other))

    def __add__(self, other):
        self._check(other)
        return GroupElement(self.spec, [
            a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return GroupElement(self.spec, [-c for c in self.coords])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.spec == other.spec
                and self.coords == other.coords)

    def __lt__(self, other):
        self._check(other)
        return self.coords < other.coords

    def __hash__(self):
        return hash((self.spec, self.coords))

    @property
    def index(self):
        return self.spec.index_of(self)

    @property
    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        return self.spec.label(self.index)

    def __repr__(self):
        return '{}[{}]'.format(self.spec.name, ','.join(map(str, self.coords)))


def element_add(g, h):
    return g + h


class CyclicGroup(FiniteGroup):
    """Z_n with element index equal to the residue."""

    def __init__(self, n):
        n = int(n)
        if n < 1:
            raise GroupError('cyclic group order must be >= 1, got {}'.format(n))
        self.n = n

    @property
    def order(self):
        return self.n

    @property
    def name(self):
        return 'Z{}'.format(self.n)

    @property
    def is_abelian(self):
        return True

    @property
    def spec(self):
        return AbelianGroupSpec.from_moduli([self.n])

    def op(self, i, j):
        return (i + j) % self.n

    def neg(self, i):
        return -i % self.n

    def sum(self, items):
        return sum(items) % self.n

    @cached_property
    def table(self):
        n = self.n
        return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))

    def residue(self, value):
        return int(value) % self.n

    def __eq__(self, other):
        return isinstance(other, CyclicGroup) and self.n == other.n

    def __hash__(self):
        return hash(('cyclic', self.n))

    def __repr__(self):
        return 'CyclicGroup({})'.format(self.n)

    def __reduce__(self):
        return (CyclicGroup, (self.n,))


class CayleyGroup(FiniteGroup):
    """A finite group given by its addition table over ``0 .. n - 1``.

    The table is validated on construction: identity at index 0, Latin
    square, associativity (every triple up to
    ``ASSOCIATIVITY_EXHAUSTIVE_LIMIT``, a fixed sample above), two-sided
    inverses.
    """

    def __init__(self, table, name='', labels=None,
                 max_order=constants.MAX_CAYLEY_ORDER):
        array = np.asarray(table, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] != array.shape[1] \
                or array.shape[0] < 1:
            raise CayleyTableError(
                'a Cayley table must be a non-empty square, got shape {}'
                .format(array.shape))
        if array.shape[0] > max_order:
            raise GroupError('order {} exceeds the table limit {}'.format(
                array.shape[0], max_order))
        _validate_table(array)
        self._array = array
        self.name = name or 'G{}'.format(array.shape[0])
        if labels is not None and len(labels) != array.shape[0]:
            raise GroupError('{} labels for a group of order {}'.format(
                len(labels), array.shape[0]))
        self.labels = tuple(labels) if labels is not None else None

    @property
    def order(self):
        return self._array.shape[0]

    @cached_property
    def table(self):
        return tuple(tuple(row) for row in self._array.tolist())

    @cached_property
    def is_abelian(self):
        return bool((self._array == self._array.T).all())

    def label(self, index):
        if self.labels:
            return self.labels[index]
        return str(index)

    def index_of_label(self, text):
        if self.labels and text in self.labels:
            return self.labels.index(text)
        return self.check_index(int(text))

    def to_text(self):
        lines = [str(self.order)]
        lines.extend(' '.join(map(str, row)) for row in self.table)
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        return (isinstance(other, CayleyGroup)
                and self.table == other.table)

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return 'CayleyGroup({}, order={})'.format(self.name, self.order)


def _validate_table(t):
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise CayleyTableError('table entries must lie in 0..{}'.format(n - 1))
    identity = np.arange(n)
    for i in range(n):
        if t[0, i] != i or t[i, 0] != i:
            raise CayleyTableError(
                'element 0 is not the identity: 0+{0} or {0}+0 differs from '
                '{0}'.format(i), triple=(0, i, 0))
    for i in range(n):
        if not (np.sort(t[i]) == identity).all():
            raise CayleyTableError(
                'row {} is not a permutation'.format(i), triple=(i,))
        if not (np.sort(t[:, i]) == identity).all():
            raise CayleyTableError(
                'column {} is not a permutation'.format(i), triple=(i,))

    if n <= constants.ASSOCIATIVITY_EXHAUSTIVE_LIMIT:
        left = t[t]
        right = t[identity[:, None, None], t[None, :, :]]
        bad = np.argwhere(left != right)
    else:
        rng = np.random.default_rng(0)
        sample = rng.integers(
            0, n, size=(constants.ASSOCIATIVITY_SAMPLE_SIZE, 3))
        i, j, k = sample.T
        mask = t[t[i, j], k] != t[i, t[j, k]]
        bad = sample[mask]
    if len(bad):
        i, j, k = (int(x) for x in bad[0])
        raise CayleyTableError(
            'associativity fails for ({0}+{1})+{2} != {0}+({1}+{2})'.format(
                i, j, k), triple=(i, j, k))

    for i in range(n):
        j = int(np.argwhere(t[i] == 0)[0][0])
        if t[j, i] != 0:
            raise CayleyTableError(
                '{} has no two-sided inverse'.format(i), triple=(i, j))


def cayley_op(group, i, j):
    return group.table[group.check_index(i)][group.check_index(j)]


def load_cayley_text(text, name='', max_order=constants.MAX_CAYLEY_ORDER):
    """Parse the text table format: ``n`` then ``n`` rows of indices."""
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise CayleyTableError('empty Cayley table file')
    try:
        n = int(lines[0][0])
        rows = [[int(x) for x in line] for line in lines[1:]]
    except ValueError as e:
        raise CayleyTableError('malformed Cayley table: {}'.format(e))
    if len(lines[0]) != 1 or len(rows) != n or any(
            len(row) != n for row in rows):
        raise CayleyTableError(
            'expected {0} rows of {0} entries after the order line'.format(n))
    return CayleyGroup(rows, name=name, max_order=max_order)


def load_cayley_file(path, max_order=constants.MAX_CAYLEY_ORDER):
    with open(path) as f:
        text = f.read()
    name = re.sub(r'\.[^.]*$', '', path.replace('\\', '/').split('/')[-1])
    return load_cayley_text(text, name=name, max_order=max_order)


def _permutation_label(perm):
    if perm.is_Identity:
        return '0'
    return ''.join(
        '({})'.format(' '.join(map(str, cycle))) for cycle in perm.cyclic_form)


def _from_permutations(perms, name, max_order):
    perms = sorted(perms, key=lambda p: p.array_form)
    if len(perms) > max_order:
        raise GroupError('order {} exceeds the table limit {}'.format(
            len(perms), max_order))
    position = {tuple(p.array_form): i for i, p in enumerate(perms)}
    table = [[position[tuple((p * q).array_form)] for q in perms]
             for p in perms]
    return CayleyGroup(table, name=name, max_order=max_order,
                       labels=[_permutation_label(p) for p in perms])


def _dicyclic(n, name, max_order):
    # a^i x^j, 0 <= i < 2n, j in {0, 1}; x^2 = a^n, x a = a^-1 x
    if n < 2:
        raise GroupError('dicyclic groups need n >= 2, got {}'.format(n))
    m = 2 * n
    if 2 * m > max_order:
        raise GroupError('order {} exceeds the table limit {}'.format(
            2 * m, max_order))
    elements = [(i, j) for j in (0, 1) for i in range(m)]
    position = {e: k for k, e in enumerate(elements)}

    def mul(x, y):
        (i, j), (k, l) = x, y
        if j == 0:
            return ((i + k) % m, l)
        if l == 0:
            return ((i - k) % m, 1)
        return ((i - k + n) % m, 0)

    table = [[position[mul(x, y)] for y in elements] for x in elements]
    labels = ['0' if e == (0, 0) else 'a^{}{}'.format(e[0], ' x' * e[1])
              for e in elements]
    return CayleyGroup(table, name=name, labels=labels, max_order=max_order)


def builtin_group(tag, parameter=None, max_order=constants.MAX_CAYLEY_ORDER):
    """Build a named group as a Cayley table.

    ``cyclic n``, ``sym n``, ``alt n``, ``dihedral n`` (order 2n),
    ``quaternion`` (order 8) and ``dicyclic n`` (order 4n).
    """
    if tag not in constants.BUILTIN_GROUPS:
        raise GroupError('unknown built-in group {!r}; choose one of {}'.format(
            tag, ', '.join(constants.BUILTIN_GROUPS)))
    if tag == 'quaternion':
        return _dicyclic(2, 'quaternion', max_order)
    if parameter is None:
        raise GroupError('built-in group {!r} needs a parameter'.format(tag))
    n = int(parameter)
    name = '{}{}'.format(tag, n)
    if tag == 'dicyclic':
        return _dicyclic(n, name, max_order)
    if tag == 'cyclic':
        if n > max_order:
            raise GroupError('order {} exceeds the table limit {}'.format(
                n, max_order))
        return CayleyGroup(CyclicGroup(n).table, name=name,
                           max_order=max_order)
    factories = {
        'sym': SymmetricGroup,
        'alt': AlternatingGroup,
        'dihedral': DihedralGroup,
    }
    if n < 1:
        raise GroupError('{} needs a positive parameter'.format(tag))
    group = factories[tag](n)
    if group.order() > max_order:
        raise GroupError('order {} exceeds the table limit {}'.format(
            group.order(), max_order))
    return _from_permutations(list(group.generate()), name, max_order)


BUILTIN_PATTERN = re.compile(
    r'^(?P<tag>{})(?P<n>\d*)$'.format('|'.join(constants.BUILTIN_GROUPS)))


def parse_builtin(text, max_order=constants.MAX_CAYLEY_ORDER):
    match = BUILTIN_PATTERN.match(text.strip().lower())
    if not match:
        raise GroupError('unknown built-in group {!r}'.format(text))
    n = match.group('n')
    return builtin_group(match.group('tag'), int(n) if n else None,
                         max_order=max_order)


def abelian_group_count(order):
    """Number of isomorphism classes: product of p(e) over p^e || order."""
    return prod(
        sum(1 for _ in partitions(e)) for e in factorint(order).values())


def enumerate_abelian_groups(order):
    """One ``AbelianGroupSpec`` per isomorphism class of the given order.

    Per prime, exponent partitions are taken in sympy's order (the cyclic
    factor first); primes combine as a cartesian product.
    """
    if order < 1:
        raise GroupError('group order must be >= 1, got {}'.format(order))
    per_prime = []
    for p, e in sorted(factorint(order).items()):
        options = []
        for partition in partitions(e):
            exponents = sorted(
                itertools.chain.from_iterable(
                    [k] * m for k, m in partition.items()))
            options.append([p ** k for k in exponents])
        per_prime.append(options)
    return [AbelianGroupSpec(list(itertools.chain.from_iterable(choice)))
            for choice in itertools.product(*per_prime)]


GROUP_LABEL = re.compile(r'^(?:z_?\d+)(?:\s*(?:x|\+|⊕)\s*z_?\d+)*$')


def parse_group_label(text):
    """``Z25`` -> CyclicGroup(25); ``Z4xZ2`` / ``Z2+Z4`` -> AbelianGroupSpec.

    A multi-factor label returns the spec together with the permutation
    that maps label coordinates to canonical coordinates.
    """
    label = text.strip().lower().replace(' ', '')
    if not GROUP_LABEL.match(label):
        raise GroupError('cannot parse group {!r}; use e.g. Z25 or Z4xZ2'
                         .format(text))
    moduli = [int(m) for m in re.findall(r'\d+', label)]
    if len(moduli) == 1:
        return CyclicGroup(moduli[0]), None
    for m in moduli:
        if m < 2 or len(factorint(m)) != 1:
            raise GroupError(
                'write multi-factor groups in primary form (prime-power '
                'factors), {} is not a prime power'.format(m))
    keyed = sorted(range(len(moduli)), key=lambda i: _primary_key(moduli[i]))
    spec = AbelianGroupSpec([moduli[i] for i in keyed])
    return spec, keyed
