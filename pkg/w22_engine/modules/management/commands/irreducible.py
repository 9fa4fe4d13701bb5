from core.commands import JSONCommand, rational_argument
from modules.shapovalov import verma_irreducible
from modules.verma import HighestWeight


class Command(JSONCommand):
    help = 'Decides irreducibility of the Verma module V(c, h1, h2)'
    echo_options = ('c', 'h1', 'h2')

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--c', type=rational_argument, required=True)
        parser.add_argument('--h1', type=rational_argument, default='0')
        parser.add_argument('--h2', type=rational_argument, required=True)

    def compute(self, **options):
        weight = HighestWeight(options['c'], options['h1'], options['h2'])
        record = verma_irreducible(weight).to_record()
        record['weight'] = weight.to_record()
        return record
