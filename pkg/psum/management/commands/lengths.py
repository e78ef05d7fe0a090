from psum import constants
from psum.exceptions import LengthListError
from psum.lengths import (
    LengthList, bhr_signed_sequence, condition_report, reduce_by_gcd,
    realize,
)
from psum.management.base import PsumCommand
from psum.serializers import (
    ConditionRowSerializer, LengthListSerializer, RealizationSerializer,
    SearchExhaustedSerializer, SignAssignmentSerializer,
)

CHECK = 'check'
REALIZE = 'realize'
REDUCE = 'reduce'

TARGET_CHOICES = sorted(set(constants.TARGETS) | set(constants.TARGET_ALIASES))


def _condition_lines(rows):
    return ['  {:<14} {:<5} {}'.format(
        row.condition, 'pass' if row.passed else 'FAIL', row.detail).rstrip()
        for row in rows]


class Command(PsumCommand):

    help = """
        Edge-length lists "v: a^m a^m ..." of K_v: check the necessary
        conditions, reduce by gcd(v, L), or realize the list as a cycle,
        Hamiltonian path or near 1-factor. realize exits with 2 when an
        exhaustive search finds no realization.
    """

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('action', choices=(CHECK, REALIZE, REDUCE))
        parser.add_argument('length_list', metavar='LIST',
                            help='e.g. "11: 1^2 2 3 5^2"')
        parser.add_argument('--target', choices=TARGET_CHOICES,
                            default=constants.TARGET_CYCLE)

    def run(self, *args, **options):
        length_list = LengthList.parse(options['length_list'])
        action = options['action']
        if action == REDUCE:
            reduced, d = reduce_by_gcd(length_list)
            self.emit({'list': LengthListSerializer(length_list).data,
                       'gcd': d,
                       'reduced': LengthListSerializer(reduced).data},
                      [str(reduced)])
            return

        rows = condition_report(length_list)
        conditions = ConditionRowSerializer(rows, many=True).data
        if action == CHECK:
            self.emit({'list': LengthListSerializer(length_list).data,
                       'conditions': conditions},
                      [str(length_list)] + _condition_lines(rows))
            return

        target = constants.TARGET_ALIASES.get(options['target'],
                                              options['target'])
        witness = realize(length_list, target)
        data = {'list': LengthListSerializer(length_list).data,
                'target': target, 'conditions': conditions}
        if not witness:
            passed = all(row.passed for row in rows)
            data.update(status='not_found',
                        certificate=SearchExhaustedSerializer(witness).data,
                        conditions_passed=passed)
            self.emit(data, [
                'no {} of K_{} has lengths {} ({} nodes searched)'.format(
                    target.replace('_', ' '), length_list.v, length_list,
                    witness.nodes),
                'all checked necessary conditions pass' if passed
                else 'a necessary condition fails:',
            ] + _condition_lines(rows))
            self.not_found('no realization')

        if witness.lengths() != length_list:
            raise LengthListError(
                '{} failed its own check'.format(witness))
        data.update(status='found',
                    witness=RealizationSerializer(witness).data)
        lines = [str(witness)]
        if target == constants.TARGET_PATH:
            signed = bhr_signed_sequence(witness, length_list.elements)
            data['signed_sequence'] = SignAssignmentSerializer(signed).data
            lines.append('signed steps {} with partial sums {}'.format(
                signed, ' '.join(str(s) for s in signed.partial_sums())))
        self.emit(data, lines)
