from charges.minimal import solve_sum_one
from charges.serializers import solutions_payload
from core.commands import JSONCommand


class Command(JSONCommand):
    help = 'Solves c1 + c2 = 1 in minimal-model central charges'
    echo_options = ('bound',)
    accepts_jobs = True

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--bound', type=int, default=200,
                            help='largest t of the first pair (at least 4)')

    def compute(self, **options):
        solutions = solve_sum_one(options['bound'], jobs=self.jobs(options))
        return solutions_payload(options['bound'], solutions)
