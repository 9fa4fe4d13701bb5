from charges.curve import curve_orbit
from charges.serializers import orbit_payload
from core.commands import JSONCommand


class Command(JSONCommand):
    help = 'Rational points of x + 1/x + y + 1/y = 25/6 and the admissible ones'

    def compute(self, **options):
        return orbit_payload(curve_orbit())
