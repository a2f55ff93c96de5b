"""
Exact rational scalars.

The base field is the rationals, represented by sympy's ``QQ`` domain.
Its elements are always reduced with a positive denominator.
"""
import math
import re
from fractions import Fraction

from sympy.polys.domains import QQ

from .exceptions import ExpressionSyntaxError

Rational = QQ.dtype

ZERO = QQ(0)

_RATIONAL_LITERAL = re.compile(r'^\s*([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*$')


def to_rational(value):
    """Coerce ints, Fractions, "p/q" strings and QQ elements into QQ."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError('booleans are not rational literals')
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    return QQ.convert(value)


def parse_rational(text):
    match = _RATIONAL_LITERAL.match(text)
    if match is None:
        raise ExpressionSyntaxError(f'not a rational literal: {text!r}', position=0)
    sign, numerator, denominator = match.groups()
    denominator = int(denominator) if denominator is not None else 1
    if denominator == 0:
        raise ExpressionSyntaxError(f'zero denominator in {text!r}', position=text.index('/'))
    value = QQ(int(numerator), denominator)
    return -value if sign == '-' else value


def format_rational(value):
    value = to_rational(value)
    if value.denominator == 1:
        return str(int(value.numerator))
    return f'{int(value.numerator)}/{int(value.denominator)}'


def floor(value):
    value = to_rational(value)
    return int(value.numerator) // int(value.denominator)


def is_integer(value):
    return to_rational(value).denominator == 1


def factorial_q(n):
    return QQ(math.factorial(n))
