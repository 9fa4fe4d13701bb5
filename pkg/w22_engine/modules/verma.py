"""
Verma modules V(c, h₁, h₂) of W(2,2) and the vacuum quotient.

A vector is a combination of PBW monomials

    W_{−m₁}…W_{−m_s} L_{−n₁}…L_{−n_t} · 1,   m₁ ≥ … ≥ m_s,  n₁ ≥ … ≥ n_t

applied to the highest-weight vector 1. In the Verma module parts are ≥ 1.
In the vacuum quotient V(c,0,0)/⟨L₋₁1, W₋₁1⟩ parts are ≥ 2: a lowering
letter of mode −1 never joins a monomial, it is commuted to the right until
it reaches 1, where it acts by zero.
"""
import logging
from collections import defaultdict
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy.functions.combinatorial.numbers import partition
from sympy.utilities.iterables import partitions

from algebra.enveloping import render_word
from algebra.lie import L, W, bracket
from core.exceptions import DomainError
from core.rationals import format_rational


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HighestWeight:
    c: Fraction
    h1: Fraction = Fraction(0)
    h2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ('c', 'h1', 'h2'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def is_vacuum(self):
        return self.h1 == 0 and self.h2 == 0

    def to_record(self):
        return {name: format_rational(getattr(self, name))
                for name in ('c', 'h1', 'h2')}


def _is_partition(parts):
    return all(part >= 1 for part in parts) and list(parts) == sorted(parts, reverse=True)


@dataclass(frozen=True)
class BasisMonomial:
    w_parts: tuple = ()
    l_parts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'w_parts', tuple(int(p) for p in self.w_parts))
        object.__setattr__(self, 'l_parts', tuple(int(p) for p in self.l_parts))
        if not (_is_partition(self.w_parts) and _is_partition(self.l_parts)):
            raise DomainError('monomial parts must be weakly decreasing positive integers')

    @property
    def w_degree(self):
        return sum(self.w_parts)

    @property
    def l_degree(self):
        return sum(self.l_parts)

    @property
    def level(self):
        return self.w_degree + self.l_degree

    @property
    def is_vacuum(self):
        return not self.w_parts and not self.l_parts

    @property
    def has_ones(self):
        return 1 in self.w_parts or 1 in self.l_parts

    def letters(self):
        return (tuple(W(-m) for m in self.w_parts) +
                tuple(L(-n) for n in self.l_parts))

    def split(self):
        """(first letter, remaining monomial)"""
        if self.w_parts:
            return W(-self.w_parts[0]), BasisMonomial(self.w_parts[1:], self.l_parts)
        return L(-self.l_parts[0]), BasisMonomial((), self.l_parts[1:])

    def w_part(self):
        return BasisMonomial(self.w_parts, ())

    def l_part(self):
        return BasisMonomial((), self.l_parts)

    def sort_key(self):
        """W-degree descending, then partitions compared with larger parts first"""
        return (-self.w_degree,
                tuple(-p for p in self.w_parts),
                tuple(-p for p in self.l_parts))

    def to_record(self):
        return {'w': list(self.w_parts), 'l': list(self.l_parts)}

    @classmethod
    def from_record(cls, record):
        return cls(tuple(record.get('w', ())), tuple(record.get('l', ())))

    def __str__(self):
        return render_word(self.letters()) + ('' if self.is_vacuum else '·1')


VACUUM = BasisMonomial()


def smallest_part(exclude_ones):
    return 2 if exclude_ones else 1


def partitions_of(n, least_part=1):
    """Partitions of n with all parts ≥ least_part, larger parts first"""
    if n == 0:
        return [()]
    found = []
    for multiplicities in partitions(n):
        if min(multiplicities) < least_part:
            continue
        parts = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        found.append(tuple(parts))
    return sorted(found, key=lambda parts: tuple(-p for p in parts))


def basis(n, exclude_ones=False):
    """
    Ordered basis of the level-n subspace.

    Monomials come in blocks S_{d,n−d} of W-degree d, d descending; inside a
    block W partitions come first-larger, then L partitions first-larger.
    """
    least = smallest_part(exclude_ones)
    monomials = []
    for d in range(n, -1, -1):
        for w_parts in partitions_of(d, least):
            for l_parts in partitions_of(n - d, least):
                monomials.append(BasisMonomial(w_parts, l_parts))
    return tuple(monomials)


def _count_partitions(n, least_part):
    if n == 0:
        return 1
    if least_part == 1:
        return int(partition(n))
    return int(partition(n)) - int(partition(n - 1))


def graded_dim(n, exclude_ones=False):
    """|basis(n)|, counted as Σ_d p(d)·p(n−d) over the allowed partitions"""
    least = smallest_part(exclude_ones)
    return sum(_count_partitions(d, least) * _count_partitions(n - d, least)
               for d in range(n + 1))


class ModuleVector(Mapping):
    """Finite combination of basis monomials of one module"""

    def __init__(self, weight, terms=None, exclude_ones=False):
        self.weight = weight
        self.exclude_ones = exclude_ones
        self._terms = {}
        for monomial, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if not coefficient:
                continue
            if exclude_ones and monomial.has_ones:
                raise DomainError(
                    '{monomial} is not a vacuum-quotient monomial'.format(
                        monomial=monomial))
            self._terms[monomial] = coefficient

    @classmethod
    def highest_weight_vector(cls, weight, exclude_ones=False):
        return cls(weight, {VACUUM: 1}, exclude_ones)

    @classmethod
    def monomial(cls, weight, monomial, exclude_ones=False):
        return cls(weight, {monomial: 1}, exclude_ones)

    def __getitem__(self, monomial):
        return self._terms[monomial]

    def __iter__(self):
        return iter(sorted(self._terms, key=lambda m: (m.level, m.sort_key())))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return (self.weight == other.weight and
                self.exclude_ones == other.exclude_ones and
                self._terms == other._terms)

    __hash__ = None

    def _check_compatible(self, other):
        if self.weight != other.weight or self.exclude_ones != other.exclude_ones:
            raise DomainError('vectors belong to different modules')

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self._terms)
        for monomial, coefficient in other.items():
            terms[monomial] = terms.get(monomial, 0) + coefficient
        return ModuleVector(self.weight, terms, self.exclude_ones)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return ModuleVector(
            self.weight,
            {m: k * scalar for m, k in self._terms.items()},
            self.exclude_ones)

    __rmul__ = __mul__

    @property
    def is_zero(self):
        return not self._terms

    def levels(self):
        return sorted({monomial.level for monomial in self._terms})

    @property
    def level(self):
        """Level of a homogeneous vector"""
        levels = self.levels()
        if len(levels) != 1:
            raise DomainError('vector is not homogeneous')
        return levels[0]

    def coefficient(self, monomial):
        return self._terms.get(monomial, Fraction(0))

    def to_record(self):
        return [[monomial.to_record(), format_rational(self[monomial])]
                for monomial in self]

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join('{k} * {m}'.format(k=format_rational(self[m]), m=m)
                          for m in self)


class VermaModule(object):
    """
    Action of W(2,2) on one highest-weight module.

    A generator g acting on x·m (x the first letter of the monomial) is
    rewritten as x·(g·m) + [g, x]·m unless g is a lowering letter that may
    stand first, in which case it joins the monomial. Every recursive call
    shortens the monomial or acts with a lowering letter on a monomial, so
    the recursion ends. Results are memoised per (generator, monomial).
    """

    def __init__(self, weight, exclude_ones=False):
        if exclude_ones and not weight.is_vacuum:
            raise DomainError('the vacuum quotient needs h1 = h2 = 0')
        self.weight = weight
        self.exclude_ones = exclude_ones
        self.degenerate_vacuum = exclude_ones and weight.c == 0
        if self.degenerate_vacuum:
            logger.warning(
                'c = 0 vacuum: the parts-≥2 monomials span the quotient but '
                'the irreducible quotient L(0,0,0) is one-dimensional')
        self._actions = {}

    def _scalar(self, generator):
        if generator.is_central:
            return self.weight.c
        return self.weight.h1 if generator.family == 'L' else self.weight.h2

    def _may_lead(self, generator, monomial):
        if not generator.is_lowering:
            return False
        if self.exclude_ones and generator.mode == -1:
            return False
        if monomial.is_vacuum:
            return True
        first, _ = monomial.split()
        return generator.pbw_key() <= first.pbw_key()

    @staticmethod
    def _prepend(generator, monomial):
        if generator.family == 'W':
            return BasisMonomial((-generator.mode,) + monomial.w_parts,
                                 monomial.l_parts)
        return BasisMonomial((), (-generator.mode,) + monomial.l_parts)

    def act(self, generator, monomial):
        """generator · monomial as a dict of monomials"""
        key = (generator, monomial)
        if key not in self._actions:
            self._actions[key] = self._compute_action(generator, monomial)
        return self._actions[key]

    def _compute_action(self, generator, monomial):
        if generator.is_central or (generator.mode == 0 and monomial.is_vacuum):
            scalar = self._scalar(generator)
            return {monomial: scalar} if scalar else {}
        if monomial.is_vacuum and generator.is_raising:
            return {}
        if self._may_lead(generator, monomial):
            return {self._prepend(generator, monomial): Fraction(1)}
        if monomial.is_vacuum:
            # a mode −1 letter in the vacuum quotient
            return {}
        first, rest = monomial.split()
        result = defaultdict(Fraction)
        for inner, alpha in self.act(generator, rest).items():
            for outer, beta in self.act(first, inner).items():
                result[outer] += alpha * beta
        for letter, structure_constant in bracket(generator, first).items():
            for outer, beta in self.act(letter, rest).items():
                result[outer] += structure_constant * beta
        return {m: k for m, k in result.items() if k}

    def apply(self, generator, vector):
        terms = defaultdict(Fraction)
        for monomial, coefficient in vector.items():
            for image, factor in self.act(generator, monomial).items():
                terms[image] += coefficient * factor
        return ModuleVector(self.weight, terms, self.exclude_ones)

    def apply_word(self, word, vector):
        """Applies a word, rightmost letter first"""
        for letter in reversed(word):
            vector = self.apply(letter, vector)
        return vector


@lru_cache(maxsize=128)
def verma_module(weight, exclude_ones=False):
    return VermaModule(weight, exclude_ones)


def apply(generator, vector):
    """generator · vector inside the module the vector belongs to"""
    return verma_module(vector.weight, vector.exclude_ones).apply(generator, vector)


def apply_word(word, vector):
    return verma_module(vector.weight, vector.exclude_ones).apply_word(word, vector)
