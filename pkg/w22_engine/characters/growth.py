"""
Finite-order growth diagnostic for q-series coefficients.

A coefficient sequence either grows at most like Anᵅ or like exp(k√n).
Neither is decidable from finitely many terms, so the diagnostic looks at
local slopes on a geometric grid of checkpoints nᵢ ≈ start·2^(i/steps):

    exponent track  Δlog aₙ / Δlog n   settles at α for polynomial growth
    sqrt track      Δlog aₙ / Δ√n      settles at k for exp(k√n) growth

and reports which of the two settles over the last `window` slopes.
Logarithms are taken with mpmath at a fixed mantissa size; slopes are kept
as exact rationals of those binary values so the classification itself is
exact.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from django.conf import settings

from algebra.series import eta, inv_product
from characters.characters import vacuum_character_w22
from core.exceptions import DomainError


logger = logging.getLogger(__name__)

POLYNOMIAL = 'polynomial_consistent'
SUPERPOLYNOMIAL = 'superpolynomial_consistent'
INCONCLUSIVE = 'inconclusive'


@dataclass(frozen=True)
class GrowthThresholds:
    min_coefficients: int = 32
    window: int = 4
    polynomial_spread: Fraction = Fraction(1, 4)
    superpolynomial_spread: Fraction = Fraction(1, 10)
    grid_start: int = 8
    grid_steps: int = 4
    precision: int = 64

    @classmethod
    def from_settings(cls):
        config = settings.GROWTH_DIAGNOSTIC
        return cls(
            min_coefficients=config['MIN_COEFFICIENTS'],
            window=config['WINDOW'],
            polynomial_spread=Fraction(config['POLYNOMIAL_SPREAD']),
            superpolynomial_spread=Fraction(config['SUPERPOLYNOMIAL_SPREAD']),
            grid_start=config['GRID_START'],
            grid_steps=config['GRID_STEPS'],
            precision=config['PRECISION'],
        )

    def to_record(self):
        return {
            'min_coefficients': self.min_coefficients,
            'window': self.window,
            'polynomial_spread': str(self.polynomial_spread),
            'superpolynomial_spread': str(self.superpolynomial_spread),
            'grid_start': self.grid_start,
            'grid_steps': self.grid_steps,
            'precision': self.precision,
        }


def _to_fraction(value):
    mantissa, exponent = value.man_exp
    sign = -1 if value < 0 else 1
    return sign * Fraction(int(mantissa)) * Fraction(2) ** int(exponent)


def _render(value):
    return mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, 12)


@dataclass(frozen=True)
class GrowthReport:
    checkpoints: tuple
    exponent_track: tuple
    sqrt_track: tuple
    classification: str
    thresholds: GrowthThresholds = field(default_factory=GrowthThresholds)

    @property
    def window(self):
        """n-range of the slopes the classification looked at"""
        used = self.checkpoints[-(self.thresholds.window + 1):]
        return used[0], used[-1]

    def to_record(self):
        with mpmath.workprec(self.thresholds.precision):
            return {
                'checkpoints': list(self.checkpoints),
                'exponent_track': [_render(v) for v in self.exponent_track],
                'sqrt_track': [_render(v) for v in self.sqrt_track],
                'classification': self.classification,
                'window': list(self.window),
                'thresholds': self.thresholds.to_record(),
            }


def checkpoint_grid(top, thresholds):
    """round(start·2^(i/steps)) for i = 0, 1, ... up to top, duplicates dropped"""
    grid = []
    step = 0
    while True:
        point = int(mpmath.nint(
            thresholds.grid_start * mpmath.power(2, mpmath.mpf(step) / thresholds.grid_steps)))
        if point > top:
            return grid
        if not grid or point != grid[-1]:
            grid.append(point)
        step += 1


def _spread(values):
    return max(values) - min(values)


def classify_tracks(exponent_track, sqrt_track, thresholds):
    window = thresholds.window
    exponents, roots = exponent_track[-window:], sqrt_track[-window:]
    if _spread(exponents) < thresholds.polynomial_spread:
        return POLYNOMIAL
    if min(roots) > 0 and _spread(roots) < thresholds.superpolynomial_spread * max(roots):
        return SUPERPOLYNOMIAL
    return INCONCLUSIVE


def growth_diagnostic(coeffs, thresholds=None):
    """Classifies the growth of a coefficient list a₀, a₁, ..., a_N"""
    thresholds = thresholds or GrowthThresholds.from_settings()
    coeffs = [int(value) for value in coeffs]
    if len(coeffs) < thresholds.min_coefficients:
        raise DomainError('too few coefficients: {count} < {least}'.format(
            count=len(coeffs), least=thresholds.min_coefficients))
    grid = checkpoint_grid(len(coeffs) - 1, thresholds)
    if len(grid) < thresholds.window + 1:
        raise DomainError('too few checkpoints for a window of {window}'.format(
            window=thresholds.window))
    if not any(coeffs[grid[0]:]):
        raise DomainError('the coefficient tail is identically zero')
    for n in grid:
        if coeffs[n] <= 0:
            raise DomainError(
                'coefficient {n} is not positive; growth is measured on '
                'eventually positive sequences'.format(n=n))
    with mpmath.workprec(thresholds.precision):
        logs = [mpmath.log(coeffs[n]) for n in grid]
        exponent_track, sqrt_track = [], []
        for i in range(1, len(grid)):
            rise = logs[i] - logs[i - 1]
            exponent_track.append(_to_fraction(
                rise / (mpmath.log(grid[i]) - mpmath.log(grid[i - 1]))))
            sqrt_track.append(_to_fraction(
                rise / (mpmath.sqrt(grid[i]) - mpmath.sqrt(grid[i - 1]))))
    classification = classify_tracks(exponent_track, sqrt_track, thresholds)
    logger.debug('growth of %s coefficients: %s', len(coeffs), classification)
    return GrowthReport(tuple(grid), tuple(exponent_track), tuple(sqrt_track),
                        classification, thresholds)


def _eta_times_w22_vacuum(order):
    return (eta(order) * vacuum_character_w22(1, order)).integer_coefficients()


def _no_ones_partitions(order):
    return inv_product(2, 1, order).integer_coefficients()


def _polynomial_control(order):
    return [n * n + 1 for n in range(order + 1)]


PRESETS = {
    'eta-times-w22-vacuum': _eta_times_w22_vacuum,
    'no-ones-partitions': _no_ones_partitions,
    'polynomial-control': _polynomial_control,
}


def preset_coefficients(name, order):
    try:
        builder = PRESETS[name]
    except KeyError:
        raise DomainError('unknown series preset "{name}"'.format(name=name))
    return builder(order)
