import json

from rest_framework import serializers

from core.exceptions import ParseError, W22Error
from core.fields import RationalField
from griess.algebras import CommAlgebra2, radical


class GriessAlgebraField(serializers.Field):
    """A CommAlgebra2 given by its JSON record"""

    def to_internal_value(self, data):
        if not isinstance(data, dict):
            raise serializers.ValidationError('expected a Griess algebra record.')
        try:
            return CommAlgebra2.from_record(data)
        except W22Error as error:
            raise serializers.ValidationError(str(error))

    def to_representation(self, value):
        return value.to_record()


class ClassifySerializer(serializers.Serializer):
    algebra = GriessAlgebraField()
    c = RationalField()


class PipelineSerializer(serializers.Serializer):
    algebra = GriessAlgebraField()
    c = RationalField(required=False, default=1)
    c_tilde = RationalField(required=False, default=1)
    dim_v1 = serializers.IntegerField(min_value=0, default=0)
    dim_v2 = serializers.IntegerField(min_value=0, default=2)


def read_algebra(path):
    try:
        with open(path, encoding='utf-8') as handle:
            record = json.load(handle)
    except OSError as error:
        raise ParseError('cannot read {path}: {error}'.format(
            path=path, error=error.strerror))
    except ValueError as error:
        raise ParseError('{path} is not JSON: {error}'.format(path=path, error=error))
    if not isinstance(record, dict):
        raise ParseError('{path} must hold a Griess algebra record'.format(path=path))
    return CommAlgebra2.from_record(record)


def classification_payload(algebra, verdict):
    return {
        'algebra': algebra.to_record(),
        'radical': radical(algebra).to_record(),
        'verdict': verdict.to_record(),
    }
