import logging

from django.core.management.base import CommandError

from psum.heffter import (
    Violation, build_base_cycles, develop_system, find_heffter_system,
    format_cycles, load_heffter_file, validate_heffter,
)
from psum.management.base import PsumCommand
from psum.serializers import (
    BaseCyclesSerializer, DecompositionSerializer, HeffterSystemSerializer,
    NotFoundSerializer, ViolationSerializer,
)

LOGGER = logging.getLogger(__name__)

VALIDATE = 'validate'
BUILD = 'build'
DEVELOP = 'develop'


class Command(PsumCommand):

    help = """
        Validate a Heffter system D(v,k), build its base cycles from simple
        orderings of its parts, or develop them into a cyclic cycle system
        of K_v. The system comes from a file ("v k" then one part per line)
        or from --find v k.
    """

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=(VALIDATE, BUILD, DEVELOP))
        parser.add_argument('file', nargs='?')
        parser.add_argument('--find', nargs=2, type=int, metavar=('V', 'K'),
                            help='search for a D(v,k) instead of reading one')
        parser.add_argument('--search', action='store_true',
                            help='ignore the order parts are written in')
        parser.add_argument('--cycles-out', metavar='PATH',
                            help='write the developed cycles, one per line')

    def load_system(self, options):
        if options['find']:
            v, k = options['find']
            found = find_heffter_system(v, k)
            if not found:
                self.emit({'status': 'not_found', 'v': v, 'k': k,
                           'certificate': NotFoundSerializer(found).data},
                          ['no D({},{}) exists'.format(v, k)])
                self.not_found('no Heffter system found')
            return found
        if not options['file']:
            raise CommandError('give a system file or --find v k')
        v, k, parts = load_heffter_file(options['file'])
        system = validate_heffter(v, k, parts)
        if not system:
            self.report_violation(system)
        return system

    def report_violation(self, violation):
        self.emit({'status': 'violation',
                   'violation': ViolationSerializer(violation).data},
                  ['violation: {}'.format(violation)])
        self.not_found('not a Heffter system')

    def run(self, *args, **options):
        system = self.load_system(options)
        system_lines = ['D({},{}):'.format(system.v, system.k)] + [
            '  {}'.format(' '.join(str(x) for x in part))
            for part in system.signed_parts()]
        if options['action'] == VALIDATE:
            self.emit({'status': 'valid',
                       'system': HeffterSystemSerializer(system).data},
                      system_lines + ['valid'])
            return

        base = build_base_cycles(system, prefer_given=not options['search'])
        if not base:
            self.emit({'status': 'not_found',
                       'certificate': NotFoundSerializer(base).data},
                      system_lines + ['a part has no simple ordering'])
            self.not_found('no base cycles')
        base_lines = ['base cycles:'] + [
            '  {}  from {}  [{}]'.format(
                cycle, ' '.join(str(x) for x in ordering.items), strategy)
            for cycle, ordering, strategy
            in zip(base.cycles, base.orderings, base.strategies)]
        if options['action'] == BUILD:
            self.emit({'status': 'built',
                       'base': BaseCyclesSerializer(base).data},
                      system_lines + base_lines)
            return

        developed = develop_system(base.cycles, system.v)
        if isinstance(developed, Violation):
            self.report_violation(developed)
        if options['cycles_out']:
            with open(options['cycles_out'], 'w', encoding='utf-8') as out:
                out.write(format_cycles(developed.cycles))
        self.emit(
            dict(status='decomposition', **DecompositionSerializer(
                developed, context={'base': base}).data),
            system_lines + base_lines + [
                '{} cycles of length {} cover {} of {} edges of K_{} '
                'exactly once{}'.format(
                    len(developed), len(base.cycles[0]) if base.cycles else 0,
                    developed.edges_covered,
                    system.v * (system.v - 1) // 2, system.v,
                    '; closed under +1' if developed.translation_closed
                    else '')])
