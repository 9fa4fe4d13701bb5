import json

from rest_framework import serializers

from algebra.series import QSeries
from characters.characters import (
    generic_virasoro_character, vacuum_character_w22, verma_character,
)
from characters.growth import PRESETS
from core.exceptions import ParseError
from core.fields import RationalField
from core.rationals import parse_rational
from modules.verma import HighestWeight


CHARACTER_KINDS = ('vacuum', 'verma', 'virasoro-generic')
DEFAULT_GROWTH_ORDER = 400


class CharacterQuerySerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=CHARACTER_KINDS)
    c = RationalField()
    h1 = RationalField(required=False, default=0)
    h2 = RationalField(required=False, default=0)
    terms = serializers.IntegerField(min_value=0, max_value=5000, default=20)


class GrowthPresetQuerySerializer(serializers.Serializer):
    preset = serializers.ChoiceField(choices=sorted(PRESETS))
    order = serializers.IntegerField(min_value=0, max_value=5000,
                                     default=DEFAULT_GROWTH_ORDER)


class GrowthSeriesSerializer(serializers.Serializer):
    coeffs = serializers.ListField(child=serializers.IntegerField(min_value=0))


def character_series(kind, c, h1, h2, terms):
    if kind == 'vacuum':
        return vacuum_character_w22(c, terms)
    if kind == 'verma':
        return verma_character(HighestWeight(c, h1, h2), terms)
    return generic_virasoro_character(c, terms)


def character_payload(kind, series):
    record = series.to_record()
    record['kind'] = kind
    return record


def read_coefficients(text):
    """Coefficients from a JSON list or a series record"""
    try:
        document = json.loads(text)
    except ValueError as error:
        raise ParseError('series file is not JSON: {error}'.format(error=error))
    if isinstance(document, dict):
        series = QSeries.from_record(document)
        return series.integer_coefficients()
    if not isinstance(document, list):
        raise ParseError('series file must hold a list or a series record')
    values = [parse_rational(value) for value in document]
    if any(value.denominator != 1 for value in values):
        raise ParseError('growth is measured on integer coefficients')
    return [int(value) for value in values]
