"""
Batch verification of the partial-sum conjectures over families of groups.

One group is one unit of work. Inside a group the qualifying subsets are
streamed in the order of an integer cursor, so a run can stop on its
budget and resume from a checkpoint at subset granularity.
"""

import hashlib
import json
import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from math import prod

from psum import constants
from psum.constructive import order_small_abelian, order_small_general
from psum.exceptions import (
    CheckpointError, GroupError, HypothesisError, InternalCaseGap,
)
from psum.groups import CyclicGroup, enumerate_abelian_groups
from psum.orderings import (
    SubsetCandidate, find_simple_ordering, is_simple, is_zero_free,
    some_ordering_sums_to_zero,
)

LOGGER = logging.getLogger(__name__)

FAMILIES = (constants.FAMILY_ABELIAN, constants.FAMILY_CYCLIC,
            constants.FAMILY_CAYLEY)
MODES = (constants.MODE_EXISTENCE, constants.MODE_STORE_WITNESSES)


def requires_zero_free(conjecture):
    return conjecture == constants.CONJECTURE_ALSPACH


def admits(conjecture, candidate):
    """Whether ``candidate`` meets the hypotheses of ``conjecture``."""
    if not len(candidate):
        return False
    if conjecture == constants.CONJECTURE_ALSPACH:
        return not some_ordering_sums_to_zero(candidate)
    if conjecture == constants.CONJECTURE_ZERO_SUM:
        return candidate.sum_is_zero and not candidate.contains_inverse_pair
    return True


class Witness:

    __slots__ = ('group_id', 'items', 'ordering', 'strategy', 'branch')

    def __init__(self, group_id, items, ordering, strategy, branch=None):
        self.group_id = group_id
        self.items = tuple(items)
        self.ordering = tuple(ordering)
        self.strategy = strategy
        self.branch = branch

    @property
    def mask(self):
        return '{:x}'.format(sum(1 << i for i in self.items))

    def __bool__(self):
        return True

    def to_dict(self):
        return {'group': self.group_id, 'mask': self.mask,
                'ordering': list(self.ordering), 'strategy': self.strategy,
                'branch': self.branch}


class Counterexample:
    """A qualifying subset for which the exhaustive search came up empty."""

    __slots__ = ('group_id', 'items', 'labels', 'search_space', 'nodes')

    def __init__(self, group_id, items, labels, search_space, nodes):
        self.group_id = group_id
        self.items = tuple(items)
        self.labels = tuple(labels)
        self.search_space = search_space
        self.nodes = nodes

    @classmethod
    def from_not_found(cls, group_id, not_found):
        candidate = not_found.candidate
        return cls(group_id, candidate.items, candidate.labels(),
                   not_found.search_space, not_found.nodes)

    @classmethod
    def from_dict(cls, data):
        return cls(data['group'], data['subset'], data['labels'],
                   data['search_space'], data['nodes'])

    def __bool__(self):
        return False

    def to_dict(self):
        return {'group': self.group_id, 'subset': list(self.items),
                'labels': list(self.labels),
                'search_space': self.search_space, 'nodes': self.nodes}

    def __repr__(self):
        return 'Counterexample({}: {{{}}})'.format(
            self.group_id, ', '.join(self.labels))


def check_subset(conjecture, group_id, candidate):
    """Witness or Counterexample for one subset that passed ``admits``."""
    if not admits(conjecture, candidate):
        raise HypothesisError('{!r} does not meet the {} hypotheses'.format(
            candidate, conjecture))
    ambient = candidate.ambient
    zero_free = requires_zero_free(conjecture)
    constructive = None
    try:
        if (conjecture == constants.CONJECTURE_ZERO_SUM and ambient.is_abelian
                and len(candidate) <= constants.CONSTRUCTIVE_ABELIAN_LIMIT):
            constructive = order_small_abelian(candidate, fallback=False)
        elif len(candidate) <= constants.CONSTRUCTIVE_GENERAL_LIMIT:
            constructive = order_small_general(candidate, fallback=False)
    except InternalCaseGap as gap:
        LOGGER.warning('constructive gap %s on %r; searching instead',
                       gap.branch, candidate)
    if constructive is not None:
        ordering, label = constructive
        accepted = is_zero_free(ordering) if zero_free else is_simple(ordering)
        if accepted:
            return Witness(group_id, candidate.items, ordering.items,
                           constants.STRATEGY_CONSTRUCTIVE, label.branch)
    found = find_simple_ordering(candidate, zero_free=zero_free)
    if not found:
        return Counterexample.from_not_found(group_id, found)
    return Witness(group_id, candidate.items, found.items,
                   constants.STRATEGY_BRUTE_FORCE)


class SubsetSpace:
    """Mixed-radix cursor over the candidate subsets of one group.

    For ``zero_sum`` every inverse pair ``{x, -x}`` is a radix-3 digit
    (neither, x, -x) and every involution a radix-2 digit, so inverse pairs
    are never generated. Otherwise every nonidentity element is a radix-2
    digit. Cursor 0 is the empty set and is skipped.
    """

    def __init__(self, conjecture, group):
        self.group = group
        self.units = []
        if conjecture == constants.CONJECTURE_ZERO_SUM:
            for x in group.nonidentity():
                y = group.neg(x)
                if x == y:
                    self.units.append((x,))
                elif x < y:
                    self.units.append((x, y))
        else:
            self.units = [(x,) for x in group.nonidentity()]
        self.size = prod(len(unit) + 1 for unit in self.units)

    def __len__(self):
        return self.size

    def subset(self, cursor):
        items = []
        for unit in self.units:
            cursor, digit = divmod(cursor, len(unit) + 1)
            if digit:
                items.append(unit[digit - 1])
        return items

    def walk(self, start=1):
        for cursor in range(max(start, 1), self.size):
            yield cursor, self.subset(cursor)


class GroupReport:
    """Running tallies for one group of a family."""

    def __init__(self, index, group_id, order, examined=0, witnesses=0,
                 constructive=0, brute_force=0, counterexamples=(),
                 stored=(), cursor=1, complete=False, elapsed=0.0):
        self.index = index
        self.group_id = group_id
        self.order = order
        self.examined = examined
        self.witnesses = witnesses
        self.constructive = constructive
        self.brute_force = brute_force
        self.counterexamples = list(counterexamples)
        self.stored = list(stored)
        self.cursor = cursor
        self.complete = complete
        self.elapsed = elapsed

    def record(self, outcome):
        self.examined += 1
        if outcome:
            self.witnesses += 1
            if outcome.strategy == constants.STRATEGY_CONSTRUCTIVE:
                self.constructive += 1
            else:
                self.brute_force += 1
        else:
            self.counterexamples.append(outcome)

    def to_dict(self, timing=False):
        data = {
            'index': self.index,
            'group': self.group_id,
            'order': self.order,
            'examined': self.examined,
            'witnesses': self.witnesses,
            'constructive': self.constructive,
            'brute_force': self.brute_force,
            'counterexamples': [c.to_dict() for c in self.counterexamples],
            'cursor': self.cursor,
            'complete': self.complete,
        }
        if self.stored:
            data['stored'] = list(self.stored)
        if timing:
            data['elapsed'] = self.elapsed
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(
            data['index'], data['group'], data['order'],
            examined=data['examined'], witnesses=data['witnesses'],
            constructive=data['constructive'],
            brute_force=data['brute_force'],
            counterexamples=[Counterexample.from_dict(c)
                             for c in data['counterexamples']],
            stored=data.get('stored', ()), cursor=data['cursor'],
            complete=data['complete'], elapsed=data.get('elapsed', 0.0))


class VerificationReport:

    def __init__(self, job, groups):
        self.job = job
        self.groups = sorted(groups, key=lambda g: g.index)

    @classmethod
    def merged(cls, job, *reports):
        groups = {}
        for report in reports:
            for group in report.groups:
                groups[group.index] = group
        return cls(job, groups.values())

    @property
    def counterexamples(self):
        return [c for g in self.groups for c in g.counterexamples]

    @property
    def complete(self):
        return all(g.complete for g in self.groups)

    @property
    def examined(self):
        return sum(g.examined for g in self.groups)

    @property
    def elapsed(self):
        return sum(g.elapsed for g in self.groups)


class VerificationJob:
    """A conjecture checked over one family of groups.

    ``limit`` is the largest order for the abelian and cyclic families;
    the cayley family takes its groups from ``groups``, a list of
    ``(group_id, CayleyGroup)``.
    """

    def __init__(self, conjecture, family, limit=None, groups=(),
                 subset_size_limit=None, mode=constants.MODE_EXISTENCE,
                 max_order=32):
        if conjecture not in dict(constants.CONJECTURES):
            raise GroupError('unknown conjecture {!r}'.format(conjecture))
        if family not in FAMILIES:
            raise GroupError('unknown group family {!r}'.format(family))
        if mode not in MODES:
            raise GroupError('unknown mode {!r}'.format(mode))
        if family == constants.FAMILY_CAYLEY:
            if not groups:
                raise GroupError('the cayley family needs at least one table')
            if limit is not None:
                groups = [(i, g) for i, g in groups if g.order <= limit]
        elif limit is None or limit < 1:
            raise GroupError('the {} family needs an order limit'.format(
                family))
        elif limit > max_order:
            raise GroupError(
                'order limit {} exceeds the configured maximum {}'.format(
                    limit, max_order))
        self.conjecture = conjecture
        self.family = family
        self.limit = limit
        self.subset_size_limit = subset_size_limit
        self.mode = mode
        self._groups = list(groups)

    def members(self):
        """``(group_id, group)`` pairs in family order."""
        if self.family == constants.FAMILY_CAYLEY:
            return list(self._groups)
        if self.family == constants.FAMILY_CYCLIC:
            return [(g.name, g) for g in
                    (CyclicGroup(n) for n in range(1, self.limit + 1))]
        return [(spec.name, spec) for n in range(1, self.limit + 1)
                for spec in enumerate_abelian_groups(n)]

    def describe(self):
        data = {
            'conjecture': self.conjecture,
            'family': self.family,
            'limit': self.limit,
            'subset_size_limit': self.subset_size_limit,
            'mode': self.mode,
        }
        if self.family == constants.FAMILY_CAYLEY:
            data['groups'] = [
                [group_id, hashlib.sha256(
                    repr(group.table).encode()).hexdigest()]
                for group_id, group in self._groups]
        return data

    @property
    def job_hash(self):
        text = json.dumps(self.describe(), sort_keys=True,
                          separators=(',', ':'))
        return hashlib.sha256(text.encode()).hexdigest()

    @property
    def family_label(self):
        if self.family == constants.FAMILY_CAYLEY:
            return 'cayley_list({})'.format(
                ', '.join(i for i, _ in self._groups))
        return '{}_up_to({})'.format(self.family, self.limit)


class Checkpoint:
    """Single JSON file holding the job hash and every group's tallies."""

    def __init__(self, path):
        self.path = path

    def load(self, job):
        if not self.path or not os.path.exists(self.path):
            return {}
        with open(self.path, encoding='utf-8') as handle:
            text = handle.read()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise CheckpointError(
                'checkpoint {} is corrupt at byte {}: {}'.format(
                    self.path, err.pos, err.msg), offset=err.pos)
        if not isinstance(data, dict) or 'job_hash' not in data:
            raise CheckpointError(
                'checkpoint {} has no job hash'.format(self.path), offset=0)
        if data['job_hash'] != job.job_hash:
            raise CheckpointError(
                'checkpoint {} belongs to another job'.format(self.path))
        groups = {}
        for entry in data.get('groups', []):
            report = GroupReport.from_dict(entry)
            groups[report.index] = report
        LOGGER.info('resuming from %s: %d groups started, %d complete',
                    self.path, len(groups),
                    sum(1 for g in groups.values() if g.complete))
        return groups

    def save(self, job, groups):
        if not self.path:
            return
        data = {
            'job_hash': job.job_hash,
            'job': job.describe(),
            'groups': [g.to_dict(timing=True) for g in
                       sorted(groups.values(), key=lambda g: g.index)],
        }
        directory = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix='.tmp')
        with os.fdopen(fd, 'w', encoding='utf-8') as handle:
            json.dump(data, handle, sort_keys=True)
        os.replace(tmp, self.path)


def verify_group(conjecture, group, report, subset_size_limit=None,
                 mode=constants.MODE_EXISTENCE, deadline=None,
                 progress=None, progress_every=500):
    """Advance ``report`` over the subsets of ``group`` from its cursor.

    Stops at ``deadline`` (a ``time.time()`` value) with ``complete``
    left false. ``progress`` is called with the report every
    ``progress_every`` examined subsets.
    """
    if report.complete:
        return report
    started = time.time()
    space = SubsetSpace(conjecture, group)
    since_progress = 0
    for cursor, items in space.walk(report.cursor):
        if deadline is not None and time.time() >= deadline:
            report.cursor = cursor
            break
        if subset_size_limit is not None and len(items) > subset_size_limit:
            continue
        candidate = SubsetCandidate(group, items)
        if not admits(conjecture, candidate):
            continue
        outcome = check_subset(conjecture, report.group_id, candidate)
        report.record(outcome)
        if outcome and mode == constants.MODE_STORE_WITNESSES:
            report.stored.append(outcome.to_dict())
        since_progress += 1
        if progress is not None and since_progress >= progress_every:
            report.cursor = cursor + 1
            report.elapsed += time.time() - started
            started = time.time()
            progress(report)
            since_progress = 0
    else:
        report.cursor = space.size
        report.complete = True
    report.elapsed += time.time() - started
    return report


def _verify_unit(args):
    conjecture, group, report, subset_size_limit, mode, deadline = args
    return verify_group(conjecture, group, report, subset_size_limit, mode,
                        deadline)


def run_verification(job, workers=1, budget=None, checkpoint=None,
                     checkpoint_every=500):
    """Run ``job`` and return its ``VerificationReport``.

    ``checkpoint`` is a file path; an existing file for the same job is
    resumed. The report does not depend on ``workers``.
    """
    store = Checkpoint(checkpoint)
    groups = store.load(job)
    deadline = time.time() + budget if budget is not None else None
    pending = []
    for index, (group_id, group) in enumerate(job.members()):
        report = groups.get(index)
        if report is None:
            report = groups[index] = GroupReport(index, group_id, group.order)
        if not report.complete:
            pending.append((group, report))

    def save(_report=None):
        store.save(job, groups)

    if workers > 1 and len(pending) > 1:
        units = [(job.conjecture, group, report, job.subset_size_limit,
                  job.mode, deadline) for group, report in pending]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for report in executor.map(_verify_unit, units):
                groups[report.index] = report
                _log_group(report)
                save()
    else:
        for group, report in pending:
            LOGGER.info('verifying %s on %s', job.conjecture,
                        report.group_id)
            verify_group(job.conjecture, group, report,
                         job.subset_size_limit, job.mode, deadline,
                         progress=save, progress_every=checkpoint_every)
            _log_group(report)
            save()
            if not report.complete:
                break
    return VerificationReport(job, groups.values())


def _log_group(report):
    if report.complete:
        LOGGER.info('%s: %d subsets, %d counterexamples', report.group_id,
                    report.examined, len(report.counterexamples))
    else:
        LOGGER.info('%s: budget exhausted at cursor %d', report.group_id,
                    report.cursor)
