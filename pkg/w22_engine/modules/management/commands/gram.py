from core.commands import JSONCommand, rational_argument
from modules.serializers import GramMatrixSerializer, require_vacuum_weight
from modules.shapovalov import gram
from modules.verma import HighestWeight


class Command(JSONCommand):
    help = 'Gram matrix of the Shapovalov form with determinant and radical'
    echo_options = ('c', 'h1', 'h2', 'level', 'vacuum')
    accepts_jobs = True

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--c', type=rational_argument, required=True)
        parser.add_argument('--h1', type=rational_argument, default='0')
        parser.add_argument('--h2', type=rational_argument, default='0')
        parser.add_argument('--level', type=int, required=True)
        parser.add_argument('--vacuum', action='store_true')

    def compute(self, **options):
        weight = HighestWeight(options['c'], options['h1'], options['h2'])
        require_vacuum_weight(weight, options['vacuum'])
        matrix = gram(weight, options['level'], options['vacuum'],
                      jobs=self.jobs(options))
        return GramMatrixSerializer(matrix).data
