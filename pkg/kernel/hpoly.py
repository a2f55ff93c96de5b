"""
Polynomials in the symbol H over the rationals.

Coefficients are kept in sympy's dense univariate (``dup``) layout: a tuple
of QQ elements, highest degree first, with no leading zeros. The dense
toolkit from ``sympy.polys`` does all of the arithmetic.
"""
from dataclasses import dataclass

from sympy.polys.domains import QQ
from sympy.polys.densearith import dup_add, dup_sub, dup_mul, dup_neg, dup_mul_ground, dup_pow
from sympy.polys.densebasic import dup_strip
from sympy.polys.densetools import dup_shift, dup_eval

from .scalars import to_rational, format_rational


@dataclass(frozen=True)
class HPoly:
    """An element of K[H]; ``coeffs`` is highest-degree first."""

    coeffs: tuple = ()

    def __post_init__(self):
        stripped = tuple(dup_strip([to_rational(c) for c in self.coeffs]))
        object.__setattr__(self, 'coeffs', stripped)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((QQ(1),))

    @classmethod
    def constant(cls, value):
        return cls((to_rational(value),))

    @classmethod
    def H(cls):
        return cls((QQ(1), QQ(0)))

    @classmethod
    def from_ascending(cls, coefficients):
        return cls(tuple(reversed([to_rational(c) for c in coefficients])))

    def ascending(self):
        return list(reversed(self.coeffs))

    @property
    def degree(self):
        """Degree in H; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_term(self):
        return self.coeffs[-1] if self.coeffs else QQ(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        return HPoly(tuple(dup_add(list(self.coeffs), list(other.coeffs), QQ)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return HPoly(tuple(dup_sub(list(self.coeffs), list(other.coeffs), QQ)))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return HPoly(tuple(dup_neg(list(self.coeffs), QQ)))

    def __mul__(self, other):
        if isinstance(other, HPoly):
            return HPoly(tuple(dup_mul(list(self.coeffs), list(other.coeffs), QQ)))
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return HPoly(tuple(dup_pow(list(self.coeffs), exponent, QQ)))

    def scale(self, value):
        return HPoly(tuple(dup_mul_ground(list(self.coeffs), to_rational(value), QQ)))

    def shift(self, k):
        """Return f(H + k); k may be any rational."""
        if k == 0 or self.is_constant:
            return self
        return HPoly(tuple(dup_shift(list(self.coeffs), to_rational(k), QQ)))

    def eval(self, c):
        return dup_eval(list(self.coeffs), to_rational(c), QQ)

    __call__ = eval

    def __repr__(self):
        return f'HPoly({self.as_text()!r})'

    def as_text(self, symbol='H'):
        """Readable form, highest degree first, e.g. ``H^2 - 1/2*H + 3``."""
        if self.is_zero:
            return '0'
        parts = []
        for power, coefficient in zip(range(self.degree, -1, -1), self.coeffs):
            if not coefficient:
                continue
            negative = coefficient < 0
            magnitude = -coefficient if negative else coefficient
            if power == 0:
                body = format_rational(magnitude)
            else:
                monomial = symbol if power == 1 else f'{symbol}^{power}'
                body = monomial if magnitude == 1 else f'{format_rational(magnitude)}*{monomial}'
            if not parts:
                parts.append(f'-{body}' if negative else body)
            else:
                parts.append(f'- {body}' if negative else f'+ {body}')
        return ' '.join(parts)


def _coerce(value):
    return value if isinstance(value, HPoly) else HPoly.constant(value)


def hpoly_shift(f, k):
    return f.shift(k)


def hpoly_eval(f, c):
    return f.eval(c)
