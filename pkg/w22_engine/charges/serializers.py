from rest_framework import serializers

from charges.curve import admissible_points
from charges.minimal import MinimalPair
from core.exceptions import DomainError
from core.fields import RationalField
from core.rationals import format_rational


RANK_ZERO_NOTE = ('uniqueness is checked up to the bound; beyond it the curve '
                  'has rank 0 over Q and its 16 rational points are listed by '
                  'the orbit command')


class ChargeQuerySerializer(serializers.Serializer):
    c = RationalField()


class BoundQuerySerializer(serializers.Serializer):
    bound = serializers.IntegerField(min_value=4, max_value=2000)


class PairQuerySerializer(serializers.Serializer):
    s = serializers.IntegerField()
    t = serializers.IntegerField()

    def validate(self, data):
        try:
            data['pair'] = MinimalPair(data['s'], data['t'])
        except DomainError as error:
            raise serializers.ValidationError(str(error))
        return data


class EmptyQuerySerializer(serializers.Serializer):
    pass


def solutions_payload(bound, solutions):
    return {
        'bound': bound,
        'solutions': [[first.to_record(), second.to_record()]
                      for first, second in solutions],
        'charges': [[format_rational(first.charge), format_rational(second.charge)]
                    for first, second in solutions],
        'completeness': RANK_ZERO_NOTE,
    }


def orbit_payload(points):
    return {
        'points': [point.to_record() for point in points],
        'total': len(points),
        'finite': sum(1 for point in points if point.is_finite),
        'admissible': [
            {'point': point.to_record(),
             'pairs': [first.to_record(), second.to_record()]}
            for point, first, second in admissible_points(points)
        ],
    }
