"""
Truncated q-series q^offset · Σ aₙ qⁿ with exact rational coefficients.

A series of order N knows its coefficients for n ≤ N only; beyond that they
are unknown, not zero. Arithmetic silently keeps the smallest order of its
operands, and asking for a coefficient past the order is an error.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from core.exceptions import DomainError, ParseError, TruncationError
from core.rationals import format_rational, is_integral, parse_rational


class SeriesOffsetError(DomainError):
    """Offsets of the operands differ by a non-integer"""

    def __init__(self, first, second):
        super(SeriesOffsetError, self).__init__(
            'offsets {first} and {second} lie in different q-cosets'.format(
                first=format_rational(first), second=format_rational(second)))


def _integral(values):
    return all(value.denominator == 1 for value in values)


def _cauchy(first, second, order):
    if _integral(first) and _integral(second):
        left = [int(value) for value in first]
        right = [int(value) for value in second]
    else:
        left, right = list(first), list(second)
    product = []
    for n in range(order + 1):
        total = 0
        for k in range(n + 1):
            if left[k] and right[n - k]:
                total += left[k] * right[n - k]
        product.append(Fraction(total))
    return product


@dataclass(frozen=True)
class QSeries:
    offset: Fraction
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError('a series needs at least its constant coefficient')
        object.__setattr__(self, 'offset', Fraction(self.offset))
        object.__setattr__(
            self, 'coeffs', tuple(Fraction(value) for value in self.coeffs))

    @classmethod
    def from_polynomial(cls, coeffs, order, offset=0):
        """An exactly known polynomial, padded with zeros up to `order`"""
        padded = list(coeffs[:order + 1])
        padded += [0] * (order + 1 - len(padded))
        return cls(offset, tuple(padded))

    @classmethod
    def constant(cls, value, order, offset=0):
        return cls.from_polynomial([value], order, offset)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def coefficient(self, n):
        """Coefficient of q^(offset + n)"""
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise TruncationError(n, self.order)
        return self.coeffs[n]

    def truncate(self, order):
        if order > self.order:
            raise TruncationError(order, self.order)
        return QSeries(self.offset, self.coeffs[:order + 1])

    def shift(self, exponent):
        """Multiplies by q^exponent for any rational exponent"""
        return QSeries(self.offset + Fraction(exponent), self.coeffs)

    def integer_coefficients(self):
        if not all(is_integral(value) for value in self.coeffs):
            raise DomainError('series has non-integral coefficients')
        return [int(value) for value in self.coeffs]

    def _aligned(self, other):
        """Both coefficient lists re-indexed from the smaller offset"""
        distance = other.offset - self.offset
        if distance.denominator != 1:
            raise SeriesOffsetError(self.offset, other.offset)
        if distance < 0:
            right, left = other._aligned(self)[1:]
            return other.offset, left, right
        shift = int(distance)
        order = min(self.order, other.order + shift)
        left = list(self.coeffs[:order + 1])
        right = [Fraction(0)] * min(shift, order + 1)
        right += list(other.coeffs[:order + 1 - len(right)])
        return self.offset, left, right

    def __add__(self, other):
        offset, left, right = self._aligned(other)
        return QSeries(offset, tuple(a + b for a, b in zip(left, right)))

    def __neg__(self):
        return QSeries(self.offset, tuple(-value for value in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            order = min(self.order, other.order)
            return QSeries(self.offset + other.offset,
                           tuple(_cauchy(self.coeffs, other.coeffs, order)))
        scalar = Fraction(other)
        return QSeries(self.offset, tuple(scalar * value for value in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError('series powers must be nonnegative integers')
        result = QSeries.constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def dominated_by(self, other):
        """True if every known coefficient of self is ≤ the matching one of other"""
        _, left, right = self._aligned(other)
        return all(a <= b for a, b in zip(left, right))

    def to_record(self):
        return {
            'offset': format_rational(self.offset),
            'coeffs': [format_rational(value) for value in self.coeffs],
            'order': self.order,
        }

    @classmethod
    def from_record(cls, record):
        try:
            series = cls(parse_rational(record['offset']),
                         tuple(parse_rational(v) for v in record['coeffs']))
        except (KeyError, TypeError) as error:
            raise ParseError('malformed series record: {error}'.format(error=error))
        if 'order' in record and int(record['order']) != series.order:
            raise ParseError('series record order does not match its coefficients')
        return series

    def __str__(self):
        terms = ['{a}·q^{n}'.format(a=format_rational(value), n=n)
                 for n, value in enumerate(self.coeffs) if value]
        return 'q^({offset})·({body} + O(q^{next}))'.format(
            offset=format_rational(self.offset),
            body=' + '.join(terms) or '0', next=self.order + 1)


def inv_product(parts_min, exponent, order):
    """
    1/∏_{n≥parts_min}(1−qⁿ)^exponent up to q^order.

    The coefficient of qᵏ counts the `exponent`-coloured multipartitions of k
    with every part at least `parts_min`.
    """
    if parts_min < 1 or exponent < 1:
        raise DomainError('inv_product needs parts_min ≥ 1 and exponent ≥ 1')
    if order < 0:
        raise DomainError('series order must be nonnegative')
    counts = [1] + [0] * order
    for part in range(parts_min, order + 1):
        for _ in range(exponent):
            for k in range(part, order + 1):
                counts[k] += counts[k - part]
    return QSeries(0, tuple(counts))


def euler_product(order):
    """∏_{n≥1}(1−qⁿ) up to q^order (pentagonal-number signs)"""
    if order < 0:
        raise DomainError('series order must be nonnegative')
    counts = [1] + [0] * order
    for part in range(1, order + 1):
        for k in range(order, part - 1, -1):
            counts[k] -= counts[k - part]
    return QSeries(0, tuple(counts))


def eta(order):
    """Dedekind eta: q^(1/24)·∏_{n≥1}(1−qⁿ)"""
    return euler_product(order).shift(Fraction(1, 24))


def eta_power(exponent, order):
    """η^exponent for an integer exponent ≥ 0"""
    if not isinstance(exponent, int) or exponent < 0:
        raise DomainError('only nonnegative integer powers of eta are supported')
    return eta(order) ** exponent


def binomial_geometric(m, order):
    """1/(1−q)^(m+1) = Σ C(m+n, m) qⁿ"""
    if m < 0:
        raise DomainError('binomial_geometric needs m ≥ 0')
    return QSeries(0, tuple(comb(m + n, m) for n in range(order + 1)))


def tensor_character(*characters):
    """Character of a tensor product: the product of the characters"""
    if not characters:
        raise DomainError('tensor_character needs at least one factor')
    result = characters[0]
    for factor in characters[1:]:
        result = result * factor
    return result
