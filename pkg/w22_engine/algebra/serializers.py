from rest_framework import serializers

from algebra.enveloping import parse_word, render_word
from algebra.lie import parse_generator
from core.exceptions import ParseError
from core.rationals import format_rational


class GeneratorField(serializers.Field):
    default_error_messages = {'invalid': '"{value}" is not a generator.'}

    def to_internal_value(self, data):
        try:
            return parse_generator(str(data))
        except ParseError:
            self.fail('invalid', value=data)

    def to_representation(self, value):
        return str(value)


class WordField(serializers.Field):
    default_error_messages = {'invalid': '"{value}" is not a word of generators.'}

    def to_internal_value(self, data):
        try:
            return parse_word(str(data))
        except ParseError:
            self.fail('invalid', value=data)

    def to_representation(self, value):
        return render_word(value)


class BracketQuerySerializer(serializers.Serializer):
    a = GeneratorField()
    b = GeneratorField()


class WordQuerySerializer(serializers.Serializer):
    word = WordField()


class CombinationSerializer(serializers.BaseSerializer):
    """LieCombination or UEAElement as an ordered list of [term, "p/q"] pairs"""

    def to_representation(self, combination):
        return [
            [render_word(term) if isinstance(term, tuple) else str(term),
             format_rational(combination[term])]
            for term in combination
        ]
