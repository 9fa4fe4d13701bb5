from core.commands import JSONCommand, rational_argument
from griess.pipeline import characterization_pipeline
from griess.serializers import read_algebra


class Command(JSONCommand):
    help = 'Decision trace of the L(1/2,0)⊗L(1/2,0) characterization'
    echo_options = ('input', 'c', 'c_tilde', 'dim_v1', 'dim_v2')

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--input', required=True,
                            help='JSON record of the Griess algebra V2')
        parser.add_argument('--c', type=rational_argument, default='1')
        parser.add_argument('--c-tilde', dest='c_tilde', type=rational_argument,
                            default='1', help='effective central charge')
        parser.add_argument('--dim-v1', dest='dim_v1', type=int, default=0)
        parser.add_argument('--dim-v2', dest='dim_v2', type=int, default=2)

    def compute(self, **options):
        algebra = read_algebra(options['input'])
        result = characterization_pipeline(
            options['c'], options['c_tilde'], options['dim_v1'], options['dim_v2'],
            algebra)
        return result.to_record()
