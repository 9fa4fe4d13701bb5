"""
The curve x + 1/x + y + 1/y = 25/6, i.e. 6xy² + 6x²y + 6x + 6y = 25xy.

Two minimal charges with c₁ + c₂ = 1 give the point (s₁/t₁, s₂/t₂) on it.
Points live on P¹ × P¹; with x = x₀/x₁ and y = y₀/y₁ the curve reads

    6x₀²y₀y₁ + 6x₁²y₀y₁ + 6y₀²x₀x₁ + 6y₁²x₀x₁ = 25x₀x₁y₀y₁
"""
from dataclasses import dataclass
from fractions import Fraction

from charges.minimal import MinimalPair
from core.exceptions import ConsistencyError, DomainError
from core.rationals import format_rational


class _Infinity(object):
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_Infinity, cls).__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'INFINITY'

    def __str__(self):
        return '∞'

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

SEEDS = (
    (Fraction(3, 4), Fraction(3, 4)),
    (Fraction(1), Fraction(2, 3)),
    (Fraction(-1), Fraction(6)),
    (Fraction(0), Fraction(0)),
)


def _homogeneous(value):
    if value is INFINITY:
        return Fraction(1), Fraction(0)
    return Fraction(value), Fraction(1)


def _invert(value):
    if value is INFINITY:
        return Fraction(0)
    if value == 0:
        return INFINITY
    return 1 / value


def _render(value):
    return str(INFINITY) if value is INFINITY else format_rational(value)


@dataclass(frozen=True)
class CurvePoint:
    x: object
    y: object

    @property
    def is_finite(self):
        """Finite in x + 1/x + y + 1/y: no coordinate is 0 or ∞"""
        return all(value is not INFINITY and value != 0
                   for value in (self.x, self.y))

    def satisfies_affine_equation(self):
        x, y = self.x, self.y
        return 6 * x * y * y + 6 * x * x * y + 6 * x + 6 * y == 25 * x * y

    def satisfies_bihomogeneous_equation(self):
        x0, x1 = _homogeneous(self.x)
        y0, y1 = _homogeneous(self.y)
        left = (6 * x0 * x0 * y0 * y1 + 6 * x1 * x1 * y0 * y1 +
                6 * y0 * y0 * x0 * x1 + 6 * y1 * y1 * x0 * x1)
        return left == 25 * x0 * x1 * y0 * y1

    def is_on_curve(self):
        if self.is_finite and not self.satisfies_affine_equation():
            return False
        return self.satisfies_bihomogeneous_equation()

    def images(self):
        """Images under x ↦ 1/x, y ↦ 1/y and the swap"""
        return (CurvePoint(_invert(self.x), self.y),
                CurvePoint(self.x, _invert(self.y)),
                CurvePoint(self.y, self.x))

    def sort_key(self):
        return (not self.is_finite,
                self.x is INFINITY, 0 if self.x is INFINITY else self.x,
                self.y is INFINITY, 0 if self.y is INFINITY else self.y)

    def to_record(self):
        return {
            'x': _render(self.x),
            'y': _render(self.y),
            'finite': self.is_finite,
            'on_curve': self.is_on_curve(),
        }


def orbit(point):
    """Orbit of one point under the group of the three symmetries"""
    seen = {point}
    frontier = [point]
    while frontier:
        current = frontier.pop()
        for image in current.images():
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return seen


def curve_orbit(seeds=SEEDS):
    """The 12 finite and 4 boundary points, each checked on the curve"""
    points = set()
    for x, y in seeds:
        points |= orbit(CurvePoint(x, y))
    for point in points:
        if not point.is_on_curve():
            raise ConsistencyError('{x}, {y} is not on the curve'.format(
                x=_render(point.x), y=_render(point.y)))
    return sorted(points, key=CurvePoint.sort_key)


def _as_minimal_pair(value):
    if value is INFINITY or value <= 0:
        return None
    try:
        return MinimalPair(value.numerator, value.denominator)
    except DomainError:
        return None


def admissible_points(points):
    """Points (s₁/t₁, s₂/t₂) whose coordinates both come from MinimalPairs"""
    admissible = []
    for point in points:
        first, second = _as_minimal_pair(point.x), _as_minimal_pair(point.y)
        if first is not None and second is not None:
            admissible.append((point, first, second))
    return admissible
