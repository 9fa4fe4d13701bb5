import argparse
import json
import time

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import DomainError, ParseError
from core.rationals import format_rational, parse_rational


PARSE_ERROR_STATUS = 2
DOMAIN_ERROR_STATUS = 3


def rational_argument(text):
    """argparse type for "p/q" values; failures become usage errors"""
    try:
        return parse_rational(text)
    except ParseError as error:
        raise argparse.ArgumentTypeError(str(error))


def render_json(document):
    return json.dumps(document, sort_keys=True, ensure_ascii=False)


def echo_value(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    try:
        return format_rational(value)
    except (TypeError, ValueError):
        return str(value)


class JSONCommand(BaseCommand):
    """
    Base class of the engine's commands.

    Subclasses implement `compute(**options)` returning a JSON-ready payload
    and list in `echo_options` the options that identify the invocation.
    The document written to stdout is
        {"command": ..., "payload": ..., "timing": {...}}
    """
    echo_options = ()
    accepts_jobs = False

    def add_arguments(self, parser):
        if self.accepts_jobs:
            parser.add_argument(
                '--jobs', type=int, default=1,
                help='worker processes (overridden by W22_JOBS)')

    def compute(self, **options):
        raise NotImplementedError('subclasses of JSONCommand must provide compute()')

    def jobs(self, options):
        if settings.W22_JOBS:
            return settings.W22_JOBS
        return max(1, options.get('jobs') or 1)

    def command_echo(self, options):
        return {
            'name': self.__module__.rsplit('.', 1)[-1],
            'options': {
                name: echo_value(options.get(name))
                for name in self.echo_options
            },
        }

    def handle(self, *args, **options):
        started = time.perf_counter()
        try:
            payload = self.compute(**options)
        except ParseError as error:
            raise CommandError(str(error), returncode=PARSE_ERROR_STATUS)
        except DomainError as error:
            raise CommandError(str(error), returncode=DOMAIN_ERROR_STATUS)
        elapsed = time.perf_counter() - started
        document = {
            'command': self.command_echo(options),
            'payload': payload,
            'timing': {'elapsed_ms': round(elapsed * 1000, 3)},
        }
        self.stdout.write(render_json(document))
