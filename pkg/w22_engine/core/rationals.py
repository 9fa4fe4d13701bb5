import re
from fractions import Fraction

from sympy import integer_nthroot

from core.exceptions import ParseError


RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')


def parse_rational(text):
    """Reads "p/q" (or a bare integer "p") into a reduced Fraction.

    Decimal notation is rejected so that every value entering the engine
    is exact.
    """
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return Fraction(text)
    match = RATIONAL_PATTERN.match(str(text))
    if match is None:
        raise ParseError(
            '"{text}" is not a rational of the form p/q'.format(text=text))
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ParseError('"{text}" has a zero denominator'.format(text=text))
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value):
    value = Fraction(value)
    return '{p}/{q}'.format(p=value.numerator, q=value.denominator)


def is_integral(value):
    return Fraction(value).denominator == 1


def integer_sqrt(n):
    """Returns the nonnegative integer root of n, or None if n is no square"""
    if n < 0:
        return None
    root, exact = integer_nthroot(n, 2)
    return int(root) if exact else None


def rational_sqrt(value):
    """Exact nonnegative square root of a rational, or None"""
    value = Fraction(value)
    numerator = integer_sqrt(value.numerator)
    denominator = integer_sqrt(value.denominator)
    if numerator is None or denominator is None:
        return None
    return Fraction(numerator, denominator)
