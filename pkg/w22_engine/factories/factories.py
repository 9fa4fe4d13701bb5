from fractions import Fraction

import factory

from griess.algebras import CommAlgebra2
from modules.verma import HighestWeight


WEIGHT_DATA = {
    'c': Fraction(1),
    'h1': Fraction(3, 7),
    'h2': Fraction(5, 11),
}

HALF = Fraction(1, 2)


class HighestWeightFactory(factory.Factory):
    class Meta:
        model = HighestWeight

    c = WEIGHT_DATA['c']
    h1 = WEIGHT_DATA['h1']
    h2 = WEIGHT_DATA['h2']

    class Params:
        vacuum = factory.Trait(h1=Fraction(0), h2=Fraction(0))
        degenerate = factory.Trait(h2=Fraction(-1, 8))


class IsingSquareGriessFactory(factory.Factory):
    """
    Two orthogonal idempotents f₁, f₂ = ω¹/2, ω²/2 with (fᵢ,fᵢ) = cᵢ/4.
    The charges default to the Ising pair c₁ = c₂ = 1/2.
    """
    class Meta:
        model = CommAlgebra2

    class Params:
        c1 = HALF
        c2 = HALF

    labels = ('f1', 'f2')
    products = {(0, 0): (1, 0), (0, 1): (0, 0), (1, 1): (0, 1)}
    form = factory.LazyAttribute(
        lambda o: ((Fraction(o.c1) / 4, 0), (0, Fraction(o.c2) / 4)))


class RadicalGriessFactory(factory.Factory):
    """Identity u and a nilpotent v with v² = 0, normalized for c = 1"""
    class Meta:
        model = CommAlgebra2

    labels = ('u', 'v')
    products = {(0, 0): (1, 0), (0, 1): (0, 1), (1, 1): (0, 0)}
    form = ((Fraction(1, 4), HALF), (HALF, 0))


class SplitGriessFactory(factory.Factory):
    """Identity u and an idempotent v ≠ u: the splitting is (v, u − v)"""
    class Meta:
        model = CommAlgebra2

    class Params:
        overlap = Fraction(1, 4)

    labels = ('u', 'v')
    products = {(0, 0): (1, 0), (0, 1): (0, 1), (1, 1): (0, 1)}
    form = factory.LazyAttribute(lambda o: ((1, o.overlap), (o.overlap, o.overlap)))
