"""
Deterministic text for canonical forms.

Diagonal terms come first in ascending grade, written ``b(H)*I^k``,
``b(H)`` or ``b(H)*D^k``; matrix terms follow as ``c*e(i,j)`` in
lexicographic order. The output parses back to the same operator.
"""
from kernel.hpoly import HPoly
from kernel.scalars import format_rational


def _power_word(letter, power):
    if power == 0:
        return ''
    return letter if power == 1 else f'{letter}^{power}'


def _shift_word(grade):
    return _power_word('I' if grade > 0 else 'D', abs(grade))


def _monomial(coefficient, power, tail):
    """Signed (negative, body) for coefficient * H^power * tail."""
    negative = coefficient < 0
    magnitude = -coefficient if negative else coefficient
    factors = []
    if power:
        factors.append('H' if power == 1 else f'H^{power}')
    if tail:
        factors.append(tail)
    if magnitude != 1 or not factors:
        factors.insert(0, format_rational(magnitude))
    return negative, '*'.join(factors)


def _coefficient_terms(poly, tail):
    monomials = [
        (coefficient, power)
        for power, coefficient in zip(range(poly.degree, -1, -1), poly.coeffs)
        if coefficient
    ]
    if not tail or len(monomials) == 1:
        return [_monomial(coefficient, power, tail) for coefficient, power in monomials]
    return [(False, f'({poly.as_text()})*{tail}')]


def _join(terms):
    if not terms:
        return '0'
    pieces = []
    for position, (negative, body) in enumerate(terms):
        if position == 0:
            pieces.append(f'-{body}' if negative else body)
        else:
            pieces.append(f'- {body}' if negative else f'+ {body}')
    return ' '.join(pieces)


def pretty_print(a):
    terms = []
    for grade, poly in a.diag:
        terms.extend(_coefficient_terms(poly, _shift_word(grade)))
    for (i, j), value in a.mat:
        terms.append(_monomial(value, 0, f'e({i},{j})'))
    return _join(terms)


def b1_text(element):
    """An element of B1 as a sum of b(H)*D^k, where I is read as D^-1."""
    terms = []
    for grade, poly in element.terms:
        terms.extend(_coefficient_terms(poly, _power_word('D', -grade)))
    return _join(terms)


def polynomial_text(p):
    """A polynomial in x, highest degree first: ``1/3*x^3 - x``."""
    return HPoly(tuple(p.all_coeffs())).as_text(symbol='x')
