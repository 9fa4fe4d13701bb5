from characters.growth import growth_diagnostic, preset_coefficients
from characters.serializers import (
    CharacterQuerySerializer, GrowthPresetQuerySerializer,
    GrowthSeriesSerializer, character_payload, character_series,
)
from core.views import ComputationView, PostedComputationView


class CharacterView(ComputationView):
    query_serializer_class = CharacterQuerySerializer

    def compute(self, params):
        series = character_series(params['kind'], params['c'], params['h1'],
                                  params['h2'], params['terms'])
        return character_payload(params['kind'], series)


class GrowthPresetView(ComputationView):
    """Growth diagnostic of one of the built-in series"""
    query_serializer_class = GrowthPresetQuerySerializer

    def compute(self, params):
        coeffs = preset_coefficients(params['preset'], params['order'])
        record = growth_diagnostic(coeffs).to_record()
        record['preset'] = params['preset']
        return record


class GrowthSeriesView(PostedComputationView):
    """Growth diagnostic of posted coefficients"""
    query_serializer_class = GrowthSeriesSerializer

    def compute(self, params):
        return growth_diagnostic(params['coeffs']).to_record()
