from django.conf import settings

from psum.groups import abelian_group_count, enumerate_abelian_groups
from psum.management.base import PsumCommand


class Command(PsumCommand):

    help = "List the abelian groups of each order, one per isomorphism class"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--up-to', type=int,
                            default=settings.PSUM_MAX_VERIFY_ORDER)

    def run(self, *args, **options):
        orders = []
        lines = []
        for n in range(1, options['up_to'] + 1):
            names = [spec.name for spec in enumerate_abelian_groups(n)]
            count = abelian_group_count(n)
            orders.append({'order': n, 'count': count, 'groups': names})
            lines.append('{:>3} {:>2}: {}'.format(n, count, ' | '.join(names)))
        self.emit({'orders': orders}, lines)
