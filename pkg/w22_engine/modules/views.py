from core.views import ComputationView
from modules.serializers import (
    GramMatrixSerializer, GramQuerySerializer, LevelQuerySerializer,
    WeightQuerySerializer, basis_payload, require_vacuum_weight,
)
from modules.shapovalov import gram, verma_irreducible
from modules.verma import HighestWeight, basis, graded_dim


class BasisView(ComputationView):
    query_serializer_class = LevelQuerySerializer

    def compute(self, params):
        monomials = basis(params['level'], params['vacuum'])
        return {
            'level': params['level'],
            'vacuum': params['vacuum'],
            'dimension': graded_dim(params['level'], params['vacuum']),
            'basis': basis_payload(monomials),
        }


class GramView(ComputationView):
    """Gram matrix of the Shapovalov form at one level"""
    query_serializer_class = GramQuerySerializer

    def compute(self, params):
        weight = HighestWeight(params['c'], params['h1'], params['h2'])
        require_vacuum_weight(weight, params['vacuum'])
        return GramMatrixSerializer(
            gram(weight, params['level'], params['vacuum'])).data


class IrreducibleView(ComputationView):
    query_serializer_class = WeightQuerySerializer

    def compute(self, params):
        weight = HighestWeight(params['c'], params['h1'], params['h2'])
        record = verma_irreducible(weight).to_record()
        record['weight'] = weight.to_record()
        return record
