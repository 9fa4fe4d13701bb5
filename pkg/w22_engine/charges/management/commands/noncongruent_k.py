from charges.minimal import MinimalPair, noncongruent_multiple
from core.commands import JSONCommand


class Command(JSONCommand):
    help = 'Least k with k·c_{s,t} outside the minimal series, with certificate'
    echo_options = ('s', 't')

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--s', type=int, required=True)
        parser.add_argument('--t', type=int, required=True)

    def compute(self, **options):
        pair = MinimalPair(options['s'], options['t'])
        return noncongruent_multiple(pair).to_record()
