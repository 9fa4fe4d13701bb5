from charges.curve import curve_orbit
from charges.minimal import is_minimal_charge, noncongruent_multiple, solve_sum_one
from charges.serializers import (
    BoundQuerySerializer, ChargeQuerySerializer, EmptyQuerySerializer,
    PairQuerySerializer, orbit_payload, solutions_payload,
)
from core.rationals import format_rational
from core.views import ComputationView


class MinimalChargeView(ComputationView):
    query_serializer_class = ChargeQuerySerializer

    def compute(self, params):
        pair = is_minimal_charge(params['c'])
        return {
            'c': format_rational(params['c']),
            'pair': pair.to_record() if pair else None,
        }


class SolveSumOneView(ComputationView):
    """Pairs of minimal charges adding up to 1"""
    query_serializer_class = BoundQuerySerializer

    def compute(self, params):
        return solutions_payload(params['bound'], solve_sum_one(params['bound']))


class OrbitView(ComputationView):
    query_serializer_class = EmptyQuerySerializer

    def compute(self, params):
        return orbit_payload(curve_orbit())


class NoncongruentView(ComputationView):
    query_serializer_class = PairQuerySerializer

    def compute(self, params):
        return noncongruent_multiple(params['pair']).to_record()
