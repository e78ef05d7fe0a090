import logging

from django.conf import settings
from django.db import DatabaseError

from psum import constants
from psum.exceptions import GroupError
from psum.management.base import PsumCommand
from psum.models import VerificationRun
from psum.serializers import (
    VerificationReportSerializer, VerificationRunSerializer, report_timing,
)
from psum.utils import load_group_source
from psum.verifier import VerificationJob, run_verification

LOGGER = logging.getLogger(__name__)

CONJECTURE_NAMES = {
    'alspach': constants.CONJECTURE_ALSPACH,
    'adms': constants.CONJECTURE_ADMS,
    'zero-sum': constants.CONJECTURE_ZERO_SUM,
    'zero_sum': constants.CONJECTURE_ZERO_SUM,
}


class Command(PsumCommand):

    help = """
        Check a partial-sum conjecture on every qualifying subset of every
        group in a family. Exits with 2 when a counterexample is found.
        Without a family flag the abelian groups up to the published
        verified order are used.
    """

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('conjecture', choices=sorted(CONJECTURE_NAMES))
        family = parser.add_mutually_exclusive_group()
        family.add_argument('--abelian-up-to', type=int, metavar='N')
        family.add_argument('--cyclic-up-to', type=int, metavar='N')
        family.add_argument(
            '--cayley', action='append', metavar='SOURCE',
            help='Cayley table file or built-in name; repeatable')
        parser.add_argument('--limit-order', type=int, metavar='N',
                            help='skip groups of larger order')
        parser.add_argument('--subset-size-limit', type=int, metavar='K')
        parser.add_argument('--store-witnesses', action='store_true')
        parser.add_argument('--no-record', action='store_true',
                            help='do not store the run in the database')
        parser.add_argument('--list-runs', action='store_true',
                            help='print recorded runs of this job and exit')

    def build_job(self, conjecture, options):
        limit = options['limit_order']
        mode = (constants.MODE_STORE_WITNESSES if options['store_witnesses']
                else constants.MODE_EXISTENCE)
        common = dict(subset_size_limit=options['subset_size_limit'],
                      mode=mode, max_order=settings.PSUM_MAX_VERIFY_ORDER)
        if options['cayley']:
            groups = []
            for source in options['cayley']:
                group = load_group_source(
                    source, max_order=settings.PSUM_MAX_CAYLEY_ORDER)
                groups.append((group.name, group))
            return VerificationJob(conjecture, constants.FAMILY_CAYLEY,
                                   limit=limit, groups=groups, **common)
        if options['cyclic_up_to'] is not None:
            family, n = constants.FAMILY_CYCLIC, options['cyclic_up_to']
        else:
            family = constants.FAMILY_ABELIAN
            n = options['abelian_up_to']
            if n is None:
                n = settings.PSUM_VERIFIED_RANGES.get(
                    (conjecture, constants.FAMILY_ABELIAN))
                if n is None:
                    raise GroupError(
                        'no default range for {}; pass a family flag'.format(
                            conjecture))
        if limit is not None:
            n = min(n, limit)
        return VerificationJob(conjecture, family, limit=n, **common)

    def list_runs(self, job):
        runs = VerificationRun.objects.for_job(job.job_hash)
        data = VerificationRunSerializer(runs, many=True).data
        lines = ['run {} {} {}: {} counterexamples{}'.format(
            run.pk, run.date_created.isoformat(), run.family,
            run.counterexample_count, '' if run.complete else ' (partial)')
            for run in runs] or ['no recorded runs']
        self.emit({'runs': data}, lines)

    def record(self, report, data):
        try:
            run = VerificationRun.objects.record(report, data)
        except DatabaseError as e:
            LOGGER.warning('run not recorded (%s); run migrate first', e)
            return None
        LOGGER.info('recorded run %d', run.pk)
        return run

    def run(self, *args, **options):
        conjecture = CONJECTURE_NAMES[options['conjecture']]
        job = self.build_job(conjecture, options)
        if options['list_runs']:
            self.list_runs(job)
            return

        report = run_verification(
            job,
            workers=max(1, options['workers']),
            budget=options['budget'],
            checkpoint=options['checkpoint'],
            checkpoint_every=settings.PSUM_CHECKPOINT_EVERY,
        )
        data = VerificationReportSerializer(report).data
        if not options['no_record']:
            self.record(report, data)

        lines = ['{} on {}'.format(conjecture, job.family_label)]
        for group in report.groups:
            lines.append(
                '{:<16} order {:>3}  examined {:>8}  witnesses {:>8} '
                '(constructive {}, brute force {})  counterexamples {}{}'
                .format(group.group_id, group.order, group.examined,
                        group.witnesses, group.constructive,
                        group.brute_force, len(group.counterexamples),
                        '' if group.complete else '  [stopped]'))
        for c in report.counterexamples:
            lines.append(
                'counterexample in {}: {{{}}} ({} orderings exhausted)'
                .format(c.group_id, ', '.join(c.labels), c.search_space))
        lines.append('{} subsets, {} counterexamples{}'.format(
            report.examined, len(report.counterexamples),
            '' if report.complete else
            '; budget exhausted, resume with --checkpoint'))
        self.emit(data, lines, timing=report_timing(report))
        if report.counterexamples:
            self.not_found('{} counterexample(s) found'.format(
                len(report.counterexamples)))
