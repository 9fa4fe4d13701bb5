"""
The Lie algebra W(2,2).

Generators L_m, W_m (m ∈ ℤ) and a central C with

    [L_m, L_n] = (m−n) L_{m+n} + (m³−m)/12 δ_{m+n,0} C
    [L_m, W_n] = (m−n) W_{m+n} + (m³−m)/12 δ_{m+n,0} C
    [W_m, W_n] = 0
"""
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from core.exceptions import DomainError, ParseError
from core.rationals import format_rational


FAMILIES = ('C', 'W', 'L')
FAMILY_RANK = {family: rank for rank, family in enumerate(FAMILIES)}


@dataclass(frozen=True)
class GeneratorMode:
    family: str
    mode: int = 0

    def __post_init__(self):
        if self.family not in FAMILY_RANK:
            raise DomainError('unknown generator family {family!r}'.format(
                family=self.family))
        if self.family == 'C' and self.mode != 0:
            raise DomainError('the central element carries no mode')

    @property
    def is_central(self):
        return self.family == 'C'

    @property
    def is_lowering(self):
        return not self.is_central and self.mode < 0

    @property
    def is_raising(self):
        return not self.is_central and self.mode > 0

    def pbw_key(self):
        """Sort key of the PBW order: C, then W's, then L's, modes ascending"""
        return FAMILY_RANK[self.family], self.mode

    def __str__(self):
        if self.is_central:
            return 'C'
        return '{family}({mode})'.format(family=self.family, mode=self.mode)


def L(mode):
    return GeneratorMode('L', mode)


def W(mode):
    return GeneratorMode('W', mode)


C = GeneratorMode('C')


def parse_generator(text):
    """Reads "L(m)", "W(m)" or "C"."""
    text = text.strip()
    if text == 'C':
        return C
    try:
        family, rest = text[0], text[1:]
        if family not in ('L', 'W') or rest[0] != '(' or rest[-1] != ')':
            raise ValueError(text)
        return GeneratorMode(family, int(rest[1:-1]))
    except (IndexError, ValueError):
        raise ParseError('"{text}" is not a generator such as L(-2), W(3) or C'.format(
            text=text))


class LieCombination(Mapping):
    """Finite linear combination of generators; zero terms are never stored"""

    def __init__(self, terms=None):
        self._terms = {}
        for generator, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient:
                self._terms[generator] = coefficient

    def __getitem__(self, generator):
        return self._terms[generator]

    def __iter__(self):
        return iter(sorted(self._terms, key=GeneratorMode.pbw_key))

    def __len__(self):
        return len(self._terms)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        terms = dict(self._terms)
        for generator, coefficient in other.items():
            terms[generator] = terms.get(generator, 0) + coefficient
        return LieCombination(terms)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return LieCombination(
            {generator: coefficient * scalar
             for generator, coefficient in self._terms.items()})

    __rmul__ = __mul__

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join(
            '{coefficient} * {generator}'.format(
                coefficient=format_rational(self[generator]),
                generator=generator)
            for generator in self)


def _central_term(m, n):
    if m + n != 0:
        return Fraction(0)
    return Fraction(m ** 3 - m, 12)


def bracket(a, b):
    """[a, b] for two generators, exactly as the defining relations read"""
    if a.is_central or b.is_central:
        return LieCombination()
    if a.family == 'W' and b.family == 'W':
        return LieCombination()
    if a.family == 'W':
        return -bracket(b, a)
    m, n = a.mode, b.mode
    return LieCombination({
        GeneratorMode(b.family, m + n): m - n,
        C: _central_term(m, n),
    })


def bracket_combinations(x, y):
    """Bilinear extension of `bracket` to combinations"""
    result = LieCombination()
    for a, alpha in x.items():
        for b, beta in y.items():
            result = result + bracket(a, b) * (alpha * beta)
    return result


def as_combination(generator):
    return LieCombination({generator: 1})


def adjoint(a):
    """Formal adjoint of the invariant form: L_m ↦ L_{−m}, W_m ↦ W_{−m}, C ↦ C"""
    if a.is_central:
        return a
    return GeneratorMode(a.family, -a.mode)


def adjoint_combination(x):
    return LieCombination({adjoint(a): k for a, k in x.items()})


def jacobiator(a, b, c):
    """[a,[b,c]] + [b,[c,a]] + [c,[a,b]]; zero for every triple"""
    x, y, z = as_combination(a), as_combination(b), as_combination(c)
    return (bracket_combinations(x, bracket(b, c)) +
            bracket_combinations(y, bracket(c, a)) +
            bracket_combinations(z, bracket(a, b)))


def generators_in_window(bound):
    """Every generator with |mode| ≤ bound, C included"""
    modes = range(-bound, bound + 1)
    return ([C] + [W(m) for m in modes] + [L(m) for m in modes])
