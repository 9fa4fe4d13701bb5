from characters.serializers import (
    CHARACTER_KINDS, character_payload, character_series,
)
from core.commands import JSONCommand, rational_argument


class Command(JSONCommand):
    help = 'q-character of the vacuum module, a Verma module or a generic Virasoro vacuum'
    echo_options = ('kind', 'c', 'h1', 'h2', 'terms')

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--kind', choices=CHARACTER_KINDS, required=True)
        parser.add_argument('--c', type=rational_argument, required=True)
        parser.add_argument('--h1', type=rational_argument, default='0')
        parser.add_argument('--h2', type=rational_argument, default='0')
        parser.add_argument('--terms', type=int, default=20,
                            help='truncation order N')

    def compute(self, **options):
        series = character_series(options['kind'], options['c'], options['h1'],
                                  options['h2'], options['terms'])
        return character_payload(options['kind'], series)
