"""
The dichotomy for a VOA of CFT type whose V₂ is a two-dimensional Griess
algebra: either V₂ is semisimple and V ≅ L(c₁,0)⊗L(c₂,0), or V₂ has a
one-dimensional radical and V ≅ L(c,0,0) over W(2,2).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from core.exceptions import ConsistencyError, DomainError
from core.rationals import format_rational, is_integral
from griess.algebras import GriessAxiomError, idempotent_decomposition, radical


logger = logging.getLogger(__name__)

SEMISIMPLE = 'semisimple'
RADICAL = 'radical'

ISING_WEIGHTS = (Fraction(0), Fraction(1, 2), Fraction(1, 16))


@dataclass(frozen=True)
class GriessVerdict:
    kind: str
    c: Fraction
    charges: tuple = ()
    idempotents: tuple = ()
    nilpotent: tuple = None
    scale: Fraction = Fraction(1)

    @property
    def label(self):
        if self.kind == SEMISIMPLE:
            return 'Semisimple({c1},{c2})'.format(
                c1=self.charges[0], c2=self.charges[1])
        return 'Radical({c})'.format(c=self.c)

    def to_record(self):
        record = {
            'kind': self.kind,
            'label': self.label,
            'c': format_rational(self.c),
            'scale': format_rational(self.scale),
        }
        if self.kind == SEMISIMPLE:
            record['charges'] = [format_rational(value) for value in self.charges]
            record['idempotents'] = [[format_rational(value) for value in vector]
                                     for vector in self.idempotents]
        else:
            record['nilpotent'] = [format_rational(value) for value in self.nilpotent]
        return record


def _scale(algebra, c):
    """λ with λ·(ω,ω) = c for ω = 2u"""
    omega = tuple(2 * value for value in algebra.unit)
    norm = algebra.pairing(omega, omega)
    if norm == 0:
        raise GriessAxiomError('nondegenerate form', '(ω,ω) = 0 for ω = 2·identity')
    scale = c / norm
    if scale != 1:
        logger.info('rescaling the form by %s so that (ω,ω) = %s',
                    format_rational(scale), format_rational(c))
    return omega, scale


def classify(algebra, c):
    c = Fraction(c)
    if c == 0:
        raise DomainError('the classification needs a nonzero central charge')
    if algebra.form_determinant() == 0:
        raise GriessAxiomError('nondegenerate form', 'the form has a kernel')
    omega, scale = _scale(algebra, c)
    nilpotent = radical(algebra)
    if nilpotent.dimension == 0:
        idempotents = idempotent_decomposition(algebra)
        charges = tuple(scale * algebra.pairing(
            tuple(2 * value for value in p), tuple(2 * value for value in p))
            for p in idempotents)
        if sum(charges) != c:
            raise ConsistencyError('c1 + c2 = {total}, expected {c}'.format(
                total=sum(charges), c=c))
        return GriessVerdict(SEMISIMPLE, c, charges=charges,
                             idempotents=idempotents, scale=scale)
    x = nilpotent.vector
    overlap = scale * algebra.pairing(omega, x)
    if overlap == 0:
        raise GriessAxiomError('nondegenerate form', 'the radical is orthogonal to ω')
    x = tuple(value * c / overlap for value in x)
    return GriessVerdict(RADICAL, c, nilpotent=x, scale=scale)


def ising_square_modules():
    """All irreducible L(1/2,0)⊗L(1/2,0)-modules as weight pairs"""
    return list(product(ISING_WEIGHTS, repeat=2))


def ising_module_filter():
    """Weight pairs whose conformal weights add up to an integer"""
    return [pair for pair in ising_square_modules() if is_integral(sum(pair))]
