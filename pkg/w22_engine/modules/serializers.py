from rest_framework import serializers

from core.exceptions import DomainError
from core.fields import RationalField
from core.rationals import format_rational
from modules.shapovalov import det_gram, radical_basis


class WeightQuerySerializer(serializers.Serializer):
    c = RationalField()
    h1 = RationalField(required=False, default=0)
    h2 = RationalField(required=False, default=0)


class LevelQuerySerializer(serializers.Serializer):
    level = serializers.IntegerField(min_value=0, max_value=12)
    vacuum = serializers.BooleanField(required=False, default=False)


class GramQuerySerializer(WeightQuerySerializer, LevelQuerySerializer):
    pass


class ModuleVectorSerializer(serializers.BaseSerializer):
    def to_representation(self, vector):
        return vector.to_record()


class GramMatrixSerializer(serializers.BaseSerializer):
    """Gram matrix together with its determinant and radical"""

    def to_representation(self, matrix):
        record = matrix.to_record()
        record['determinant'] = format_rational(det_gram(matrix))
        record['radical'] = ModuleVectorSerializer(
            radical_basis(matrix), many=True).data
        return record


def basis_payload(monomials):
    return [monomial.to_record() for monomial in monomials]


def require_vacuum_weight(weight, vacuum):
    if vacuum and not weight.is_vacuum:
        raise DomainError('the vacuum quotient needs h1 = h2 = 0')
    if vacuum and weight.c == 0:
        raise DomainError('c = 0: the irreducible vacuum module L(0,0,0) is one-dimensional')
