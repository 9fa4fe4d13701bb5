from characters.growth import PRESETS, growth_diagnostic, preset_coefficients
from characters.serializers import DEFAULT_GROWTH_ORDER, read_coefficients
from core.commands import JSONCommand
from core.exceptions import ParseError


class Command(JSONCommand):
    help = 'Polynomial versus exp(k·sqrt(n)) growth of a coefficient sequence'
    echo_options = ('kind', 'series_file', 'order')

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--kind', choices=sorted(PRESETS),
                            help='built-in series')
        source.add_argument('--series-file', dest='series_file',
                            help='JSON list of coefficients or a series record')
        parser.add_argument('--order', type=int, default=None,
                            help='truncation order (default {order} for presets)'.format(
                                order=DEFAULT_GROWTH_ORDER))

    def compute(self, **options):
        order = options['order']
        if options['kind']:
            coeffs = preset_coefficients(
                options['kind'], DEFAULT_GROWTH_ORDER if order is None else order)
        else:
            try:
                with open(options['series_file'], encoding='utf-8') as handle:
                    coeffs = read_coefficients(handle.read())
            except OSError as error:
                raise ParseError('cannot read {path}: {error}'.format(
                    path=options['series_file'], error=error.strerror))
            if order is not None:
                coeffs = coeffs[:order + 1]
        record = growth_diagnostic(coeffs).to_record()
        record['source'] = options['kind'] or 'file'
        return record
