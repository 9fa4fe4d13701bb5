from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from core.exceptions import ParseError
from core.rationals import format_rational, parse_rational


class RationalField(serializers.Field):
    """Exact rational carried as a "p/q" string"""
    default_error_messages = {
        'invalid': _('"{value}" is not a rational of the form p/q.'),
    }

    def to_internal_value(self, data):
        try:
            return parse_rational(data)
        except ParseError:
            self.fail('invalid', value=data)

    def to_representation(self, value):
        return format_rational(value)


class RationalListField(serializers.ListField):
    child = RationalField()
