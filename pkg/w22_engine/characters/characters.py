"""
q-characters q^(λ − c/24) Σ dim M_{λ+n} qⁿ of the modules the engine knows.
"""
from fractions import Fraction

from algebra.series import inv_product
from charges.minimal import MinimalChargeError, is_minimal_charge
from core.exceptions import DomainError


def vacuum_character_w22(c, order):
    """Character of L(c,0,0): q^(−c/24) / ∏_{n≥2}(1−qⁿ)² (needs c ≠ 0)"""
    c = Fraction(c)
    if c == 0:
        raise DomainError('c = 0: L(0,0,0) is the trivial module, its character is 1')
    return inv_product(2, 2, order).shift(-c / 24)


def generic_virasoro_character(c, order):
    """
    Character of the Virasoro vacuum module L(c,0) off the minimal series:
    q^(−c/24) / ∏_{n≥2}(1−qⁿ).
    """
    c = Fraction(c)
    pair = is_minimal_charge(c)
    if pair is not None:
        raise MinimalChargeError(c, pair)
    return inv_product(2, 1, order).shift(-c / 24)


def verma_character(weight, order):
    """Character of V(c,h₁,h₂): q^(h₁ − c/24) / ∏_{n≥1}(1−qⁿ)²"""
    return inv_product(1, 2, order).shift(weight.h1 - weight.c / 24)


def effective_central_charge(c, lowest_weights):
    lowest_weights = [Fraction(weight) for weight in lowest_weights]
    if not lowest_weights:
        raise DomainError('the effective central charge needs at least one lowest weight')
    return Fraction(c) - 24 * min(lowest_weights)
