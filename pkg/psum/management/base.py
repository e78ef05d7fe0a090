import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from psum import constants
from psum.exceptions import PsumError

LOGGER = logging.getLogger(__name__)

FORMAT_TEXT = 'text'
FORMAT_JSON = 'json'


class PsumCommand(BaseCommand):
    """Shared flags, output rendering and exit codes.

    Subclasses implement ``run`` and return normally on success. Library
    errors exit with 1; a certified absence (``NotFound``, a
    counterexample, a violation) is printed first and then exits with 2.
    """

    def add_arguments(self, parser):
        parser.add_argument(
            '--format', choices=(FORMAT_TEXT, FORMAT_JSON),
            default=FORMAT_TEXT, dest='output_format')
        parser.add_argument(
            '--workers', type=int, default=settings.PSUM_WORKERS,
            help='worker processes (default: PSUM_WORKERS)')
        parser.add_argument(
            '--budget', type=float, default=settings.PSUM_BUDGET,
            help='wall-clock budget in seconds (default: PSUM_BUDGET)')
        parser.add_argument(
            '--checkpoint', default=None,
            help='checkpoint file; resumed when it exists')

    def handle(self, *args, **options):
        self.output_format = options['output_format']
        try:
            self.run(*args, **options)
        except PsumError as e:
            LOGGER.debug('command failed', exc_info=True)
            raise CommandError(str(e), returncode=constants.EXIT_ERROR)

    def run(self, *args, **options):
        raise NotImplementedError

    @property
    def as_json(self):
        return self.output_format == FORMAT_JSON

    def emit(self, data, lines=(), timing=None):
        """Print ``data`` as JSON or ``lines`` as text.

        ``timing`` is only ever rendered under the top-level ``timing`` key
        so the rest of the JSON stays identical across runs.
        """
        if self.as_json:
            if timing is not None:
                data = dict(data)
                data['timing'] = timing
            self.stdout.write(JSONRenderer().render(data).decode('utf-8'))
        else:
            for line in lines:
                self.stdout.write(line)

    def not_found(self, message):
        raise CommandError(message, returncode=constants.EXIT_NOT_FOUND)
