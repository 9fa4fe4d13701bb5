from core.commands import JSONCommand
from core.exceptions import DomainError
from modules.serializers import basis_payload
from modules.verma import basis, graded_dim


class Command(JSONCommand):
    help = 'Ordered PBW basis of one level of a Verma module or the vacuum quotient'
    echo_options = ('level', 'vacuum')

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--level', type=int, required=True)
        parser.add_argument('--vacuum', action='store_true',
                            help='parts >= 2 (vacuum quotient)')

    def compute(self, **options):
        level, vacuum = options['level'], options['vacuum']
        if level < 0:
            raise DomainError('level must be nonnegative')
        return {
            'level': level,
            'vacuum': vacuum,
            'dimension': graded_dim(level, vacuum),
            'basis': basis_payload(basis(level, vacuum)),
        }
