from core.commands import JSONCommand, rational_argument
from griess.classification import classify
from griess.serializers import classification_payload, read_algebra


class Command(JSONCommand):
    help = 'Semisimple or radical: the dichotomy for a two-dimensional Griess algebra'
    echo_options = ('input', 'c')

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--input', required=True,
                            help='JSON record of structure constants and form')
        parser.add_argument('--c', type=rational_argument, required=True,
                            help='central charge as p/q (nonzero)')

    def compute(self, **options):
        algebra = read_algebra(options['input'])
        return classification_payload(algebra, classify(algebra, options['c']))
