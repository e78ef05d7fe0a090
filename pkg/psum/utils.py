"""Parsing of command-line group and subset arguments."""

import os
import re

from psum import constants
from psum.exceptions import GroupError, OrderingError
from psum.groups import (
    AbelianGroupSpec, CyclicGroup, load_cayley_file, parse_builtin,
    parse_group_label,
)

ALL_NONIDENTITY = ('all', 'all-nonidentity')
TUPLE_OR_INT = re.compile(r'\(([^)]*)\)|(-?\d+)')


def load_group_source(source, max_order=constants.MAX_CAYLEY_ORDER):
    """A Cayley table file when ``source`` is a path, else a built-in name."""
    if os.path.exists(source):
        return load_cayley_file(source, max_order=max_order)
    name = os.path.basename(source)
    if name.endswith('.tbl'):
        name = name[:-len('.tbl')]
    return parse_builtin(name, max_order=max_order)


def resolve_group(group=None, cayley=None,
                  max_order=constants.MAX_CAYLEY_ORDER):
    """``(ambient, keyed)`` for ``--group`` or ``--cayley``.

    ``keyed`` maps canonical coordinates to the coordinates of a
    multi-factor ``--group`` label, ``None`` otherwise.
    """
    if bool(group) == bool(cayley):
        raise GroupError('give exactly one of --group and --cayley')
    if cayley:
        return load_group_source(cayley, max_order), None
    return parse_group_label(group)


def _abelian_index(spec, coords, keyed):
    if len(coords) != len(spec.factors):
        raise OrderingError('{} needs {} coordinates, got {}'.format(
            spec.name, len(spec.factors), coords))
    if keyed is not None:
        coords = [coords[i] for i in keyed]
    coords = [c % n for c, n in zip(coords, spec.factors)]
    return spec.index_of(spec.element(*coords))


def parse_subset(ambient, text, keyed=None):
    """Element indices from ``"1,3,-5"``, ``"(1,2),(0,3)"`` or labels.

    ``all-nonidentity`` selects every nonidentity element. Residues of a
    cyclic group may be negative.
    """
    text = text.strip()
    if text.lower() in ALL_NONIDENTITY:
        return list(ambient.nonidentity())
    if isinstance(ambient, CyclicGroup):
        try:
            return [ambient.residue(int(token))
                    for token in re.split(r'[\s,]+', text) if token]
        except ValueError as err:
            raise OrderingError('bad element in {!r}: {}'.format(text, err))
    if isinstance(ambient, AbelianGroupSpec):
        items = []
        for coords, single in TUPLE_OR_INT.findall(text):
            if single:
                raise OrderingError(
                    'write elements of {} as coordinate tuples like (1,2)'
                    .format(ambient.name))
            items.append(_abelian_index(
                ambient, [int(c) for c in coords.split(',')], keyed))
        return items
    items = []
    for token in text.split(','):
        token = token.strip()
        if not token:
            continue
        try:
            items.append(ambient.index_of_label(token))
        except ValueError:
            raise OrderingError('{!r} is not an element of {}'.format(
                token, ambient.name))
    return items
