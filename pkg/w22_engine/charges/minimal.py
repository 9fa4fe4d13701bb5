"""
Minimal-model central charges c_{s,t} = 1 − 6(s−t)²/(st).

c = c_{s,t} with r = t/s is the quadratic 6r² − (13 − c)r + 6 = 0, so the
decision whether c is a minimal charge needs one exact square root and no
search.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sympy import divisors

from core.exceptions import ConsistencyError, DomainError
from core.rationals import format_rational, rational_sqrt


logger = logging.getLogger(__name__)

SMALLEST_SEARCH_BOUND = 4


@dataclass(frozen=True, order=True)
class MinimalPair:
    s: int
    t: int

    def __post_init__(self):
        if not (1 < self.s < self.t) or gcd(self.s, self.t) != 1:
            raise DomainError(
                '({s},{t}) is not a coprime pair with 1 < s < t'.format(
                    s=self.s, t=self.t))

    @property
    def charge(self):
        return minimal_charge(self)

    def to_record(self):
        return [self.s, self.t]

    def __str__(self):
        return '({s},{t})'.format(s=self.s, t=self.t)


class MinimalChargeError(DomainError):
    def __init__(self, c, pair):
        super(MinimalChargeError, self).__init__(
            'c = {c} is the minimal-model charge c_{pair}'.format(
                c=format_rational(c), pair=pair))
        self.pair = pair

    def details(self):
        return {'s': self.pair.s, 't': self.pair.t}


def _numerator_form(s, t):
    """st·c_{s,t} = 13st − 6s² − 6t²"""
    return 13 * s * t - 6 * s * s - 6 * t * t


def minimal_charge(pair):
    return Fraction(_numerator_form(pair.s, pair.t), pair.s * pair.t)


def is_minimal_charge(c):
    """The pair (s,t) with c = c_{s,t}, or None"""
    b = 13 - Fraction(c)
    root = rational_sqrt(b * b - 144)
    if root is None:
        return None
    ratio = (b + root) / 12
    if ratio <= 1 or ratio.denominator == 1:
        return None
    return MinimalPair(ratio.denominator, ratio.numerator)


def minimal_pairs(bound):
    """Every MinimalPair with t ≤ bound, by t then s"""
    return [MinimalPair(s, t)
            for t in range(3, bound + 1)
            for s in range(2, t)
            if gcd(s, t) == 1]


@dataclass(frozen=True)
class NoncongruentCertificate:
    pair: MinimalPair
    k: int
    modulus: int
    examined: tuple
    collisions: tuple

    def to_record(self):
        return {
            'pair': self.pair.to_record(),
            'charge': format_rational(self.pair.charge),
            'k': self.k,
            'modulus': self.modulus,
            'examined': [
                {'pair': candidate.to_record(),
                 'charge': format_rational(candidate.charge)}
                for candidate in self.examined
            ],
            'collisions': [
                {'k': k, 'pair': candidate.to_record()}
                for k, candidate in self.collisions
            ],
        }


def _check_collision(pair, candidate, k):
    s, t = pair.s, pair.t
    s1, t1 = candidate.s, candidate.t
    if s * t * _numerator_form(s1, t1) != s1 * t1 * k * _numerator_form(s, t):
        raise ConsistencyError(
            'collision {k}·c_{pair} = c_{candidate} fails its integer form'.format(
                k=k, pair=pair, candidate=candidate))


def noncongruent_multiple(pair):
    """
    Least k ≥ 1 with k·c_{s,t} outside the minimal series.

    k·c_{s,t} = c_{s₁,t₁} forces s₁ and t₁ to divide 6st, so the candidates
    are the coprime divisor pairs of 6st and the forbidden multipliers are
    the positive integral ratios c_{s₁,t₁}/c_{s,t}.
    """
    charge = minimal_charge(pair)
    if charge == 0:
        raise DomainError('c_{pair} = 0 has no noncongruent multiple'.format(pair=pair))
    modulus = 6 * pair.s * pair.t
    factors = [int(d) for d in divisors(modulus) if d > 1]
    examined = tuple(MinimalPair(s1, t1)
                     for s1 in factors for t1 in factors
                     if s1 < t1 and gcd(s1, t1) == 1)
    collisions = []
    for candidate in examined:
        ratio = candidate.charge / charge
        if ratio > 0 and ratio.denominator == 1:
            _check_collision(pair, candidate, int(ratio))
            collisions.append((int(ratio), candidate))
    forbidden = {k for k, _ in collisions}
    k = 1
    while k in forbidden:
        k += 1
    return NoncongruentCertificate(pair, k, modulus, examined, tuple(collisions))


def _sum_one_partners(pairs):
    solutions = []
    for first in pairs:
        second = is_minimal_charge(1 - first.charge)
        if second is not None:
            solutions.append(tuple(sorted((first, second))))
    return solutions


def solve_sum_one(bound, jobs=1):
    """All (p₁, p₂) with c_{p₁} + c_{p₂} = 1 and t₁ ≤ bound, p₁ ≤ p₂"""
    if bound < SMALLEST_SEARCH_BOUND:
        raise DomainError('the search bound must be at least {least}'.format(
            least=SMALLEST_SEARCH_BOUND))
    candidates = minimal_pairs(bound)
    logger.info('c1 + c2 = 1 search: bound %s, %s pairs', bound, len(candidates))
    if jobs > 1:
        chunks = [candidates[start::jobs] for start in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            found = [solution
                     for chunk in executor.map(_sum_one_partners, chunks)
                     for solution in chunk]
    else:
        found = _sum_one_partners(candidates)
    solutions = sorted(set(found))
    for first, second in solutions:
        if first.charge + second.charge != 1:
            raise ConsistencyError('{first} + {second} does not sum to 1'.format(
                first=first, second=second))
    return solutions
