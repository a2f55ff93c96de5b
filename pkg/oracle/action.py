"""
The faithful action of the algebra on K[x], truncated to degree N.

Matrices are written in the divided-power basis x^[s] = x^s / s!, where
e_ij is exactly the elementary matrix E_ij. Column s of a truncated matrix
is exact only when nothing is pushed past degree N; such columns are
recorded in ``valid_columns`` and every comparison is restricted to them.
"""
from collections import defaultdict
from dataclasses import dataclass
import logging

from django.conf import settings
from sympy import Poly
from sympy.polys.domains import QQ

from kernel import linalg
from kernel.exceptions import TruncationCapExceeded, TruncationError
from kernel.scalars import factorial_q, ZERO
from operators.canonical import act_on_divided_power, as_x_poly, max_positive_grade, op_mul, x
from operators.generators import GeneratorKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedAction:
    size: int
    matrix: object
    valid_columns: frozenset

    def column(self, s):
        return [row[s] for row in linalg.entries(self.matrix)]

    def dump(self):
        """Row-major dump, one row per line, exact "p/q" entries."""
        return '\n'.join(' '.join(row) for row in linalg.as_strings(self.matrix))


@dataclass(frozen=True)
class ProductCheck:
    ok: bool
    size: int
    columns_checked: int
    first_mismatch: object = None

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {
            'ok': self.ok,
            'size': self.size,
            'columns_checked': self.columns_checked,
            'first_mismatch': self.first_mismatch,
        }


def _check_size(size):
    if size < 0:
        raise TruncationError(f'truncation size must be non-negative, got {size}')
    if size > settings.INTDIFF_MAX_DEGREE:
        raise TruncationCapExceeded(
            f'truncation size {size} exceeds the cap {settings.INTDIFF_MAX_DEGREE}',
            cap=settings.INTDIFF_MAX_DEGREE,
        )


def action_matrix(a, size):
    _check_size(size)
    entries = {}
    for s in range(size + 1):
        for t, value in act_on_divided_power(a, s).items():
            if t <= size:
                entries[(t, s)] = value
    reach = max_positive_grade(a)
    valid = frozenset(s for s in range(size + 1) if s + reach <= size)
    return TruncatedAction(size, linalg.sparse(entries, (size + 1, size + 1)).to_dense(), valid)


def check_product(a, b, size):
    reach = max_positive_grade(a) + max_positive_grade(b)
    joint = [s for s in range(size + 1) if s + reach <= size]
    if not joint:
        raise TruncationError(
            f'no column survives a combined grade shift of {reach} at size {size}',
            size=size,
        )
    left, right = action_matrix(a, size), action_matrix(b, size)
    product = action_matrix(op_mul(a, b), size)
    expected = linalg.entries(linalg.mul(left.matrix, right.matrix))
    actual = linalg.entries(product.matrix)
    for s in joint:
        if any(expected[t][s] != actual[t][s] for t in range(size + 1)):
            logger.error(f'Oracle mismatch in column {s} at size {size}: {a!r} * {b!r}')
            return ProductCheck(False, size, len(joint), first_mismatch=s)
    return ProductCheck(True, size, len(joint))


def zero_certificate_bound(a):
    max_column = max([j for (_, j), _ in a.mat], default=0)
    max_degree = max([poly.degree for _, poly in a.diag], default=0)
    max_grade = max([abs(grade) for grade, _ in a.diag], default=0)
    return max_column + max_degree + max_grade + 2


def is_zero_certified(a):
    """
    Decide a == 0 from the action on x^[0], ..., x^[N0].

    Within grade i the coefficient of x^[s+i] in a x^[s] is
    b_i(s+i+1) + lambda_{s+i,s}; past the matrix support it is a polynomial
    in s, so N0 points beyond that support force b_i = 0.
    """
    bound = zero_certificate_bound(a)
    return all(not act_on_divided_power(a, s) for s in range(bound + 1))


def to_monomial_basis(action):
    """Rewrite a truncated action in the basis x^s (x^s = s! x^[s])."""
    n = action.size + 1
    scale = linalg.block_diag(*[linalg.scalar(1, factorial_q(s)) for s in range(n)])
    unscale = linalg.block_diag(*[linalg.scalar(1, 1 / factorial_q(s)) for s in range(n)])
    return TruncatedAction(
        action.size, linalg.chain(unscale, action.matrix, scale), action.valid_columns
    )


def _letter_on_basis(letter, s):
    kind = letter.kind
    if kind is GeneratorKind.X:
        return {s + 1: QQ(s + 1)}
    if kind is GeneratorKind.DEL:
        return {s - 1: QQ(1)} if s > 0 else {}
    if kind is GeneratorKind.INT:
        return {s + 1: QQ(1)}
    if kind is GeneratorKind.H:
        return {s: QQ(s + 1)}
    return {letter.i: QQ(1)} if letter.j == s else {}


def _letters_on_vector(letters, vector):
    for letter in reversed(letters):
        image = defaultdict(lambda: ZERO)
        for s, coefficient in vector.items():
            for t, value in _letter_on_basis(letter, s).items():
                image[t] += coefficient * value
        vector = {t: value for t, value in image.items() if value}
    return vector


def apply_word(word, p):
    """Act on p letter by letter, without normalizing the word."""
    p = as_x_poly(p)
    start = {s: c * factorial_q(s) for (s,), c in p.as_dict(native=True).items()}
    total = defaultdict(lambda: ZERO)
    for coefficient, letters in word:
        for t, value in _letters_on_vector(tuple(letters), start).items():
            total[t] += QQ.convert(coefficient) * value
    terms = {(t,): value / factorial_q(t) for t, value in total.items() if value}
    return Poly.from_dict(terms, x, domain=QQ) if terms else Poly(0, x, domain=QQ)