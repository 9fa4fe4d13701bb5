from algebra.enveloping import normal_order, render_word
from algebra.lie import bracket
from algebra.serializers import (
    BracketQuerySerializer, CombinationSerializer, WordQuerySerializer,
)
from core.views import ComputationView


class BracketView(ComputationView):
    """[a, b] for two generators"""
    query_serializer_class = BracketQuerySerializer

    def compute(self, params):
        result = bracket(params['a'], params['b'])
        return {
            'a': str(params['a']),
            'b': str(params['b']),
            'bracket': CombinationSerializer(result).data,
        }


class NormalOrderView(ComputationView):
    """PBW normal form of a word"""
    query_serializer_class = WordQuerySerializer

    def compute(self, params):
        return {
            'word': render_word(params['word']),
            'normal_form': CombinationSerializer(normal_order(params['word'])).data,
        }
