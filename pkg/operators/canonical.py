"""
Canonical forms of polynomial integro-differential operators.

Every operator is stored uniquely as

    a = sum_i b_i(H) v_i + sum_{i,j >= 0} lambda_ij e_ij

with v_i = I^i for i > 0, v_0 = 1 and v_i = D^|i| for i < 0, the
polynomial coefficients written on the left. Both parts are kept sparse:
no zero polynomial and no zero scalar is ever stored.
"""
from collections import defaultdict
from dataclasses import dataclass
import logging

from sympy import Poly, Symbol
from sympy.polys.domains import QQ

from kernel.hpoly import HPoly
from kernel.scalars import to_rational, factorial_q, ZERO

logger = logging.getLogger(__name__)

x = Symbol('x')


@dataclass(frozen=True)
class CanonicalOperator:
    diag: tuple = ()
    mat: tuple = ()

    @classmethod
    def from_parts(cls, diag=None, mat=None):
        diag_items = sorted(
            (int(grade), poly) for grade, poly in (diag or {}).items() if not poly.is_zero
        )
        mat_items = sorted(
            ((int(i), int(j)), to_rational(value))
            for (i, j), value in (mat or {}).items() if value
        )
        for (i, j), _ in mat_items:
            if i < 0 or j < 0:
                raise ValueError(f'e({i},{j}) has a negative index')
        return cls(tuple(diag_items), tuple(mat_items))

    @property
    def diagonal(self):
        return dict(self.diag)

    @property
    def matrix(self):
        return dict(self.mat)

    @property
    def is_zero(self):
        return not self.diag and not self.mat

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other):
        return op_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return op_sub(self, _coerce(other))

    def __rsub__(self, other):
        return op_sub(_coerce(other), self)

    def __neg__(self):
        return op_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, CanonicalOperator):
            return op_mul(self, other)
        return op_scale(self, other)

    def __rmul__(self, other):
        return op_scale(self, other)

    def __pow__(self, exponent):
        result = identity()
        for _ in range(exponent):
            result = op_mul(result, self)
        return result

    def __repr__(self):
        diag = ', '.join(f'{grade}: {poly.as_text()}' for grade, poly in self.diag)
        mat = ', '.join(f'e({i},{j}): {value}' for (i, j), value in self.mat)
        return f'CanonicalOperator(diag={{{diag}}}, mat={{{mat}}})'


def _coerce(value):
    if isinstance(value, CanonicalOperator):
        return value
    return h_poly(HPoly.constant(value))


def zero():
    return CanonicalOperator()


def identity():
    return CanonicalOperator.from_parts({0: HPoly.one()})


def h_poly(f, grade=0):
    """The operator f(H) v_grade."""
    return CanonicalOperator.from_parts({grade: f})


def v(i):
    return h_poly(HPoly.one(), i)


def make_eij(i, j):
    if i < 0 or j < 0:
        raise ValueError(f'e({i},{j}) needs natural indices')
    return CanonicalOperator.from_parts(mat={(i, j): QQ(1)})


def op_add(a, b):
    diag = defaultdict(HPoly.zero, a.diag)
    for grade, poly in b.diag:
        diag[grade] = diag[grade] + poly
    mat = defaultdict(lambda: ZERO, a.mat)
    for key, value in b.mat:
        mat[key] += value
    return CanonicalOperator.from_parts(diag, mat)


def op_scale(a, value):
    value = to_rational(value)
    if not value:
        return zero()
    return CanonicalOperator.from_parts(
        {grade: poly.scale(value) for grade, poly in a.diag},
        {key: coefficient * value for key, coefficient in a.mat},
    )


def op_sub(a, b):
    return op_add(a, op_scale(b, -1))


def _shift_products(i, j):
    """
    v_i v_j = v_{i+j} - sum of e_pq over the returned (p, q).

    Only I^i D^m (i, m > 0) produces a correction; it comes from the
    telescoping identity 1 - I^m D^m = e_00 + ... + e_{m-1,m-1}.
    """
    if i <= 0 or j >= 0:
        return i + j, ()
    m = -j
    if i >= m:
        return i - m, tuple((k + i - m, k) for k in range(m))
    return i - m, tuple((k, k + m - i) for k in range(i))


def _v_times_e(i, p):
    """Row index of v_i e_pq, or None when the product vanishes."""
    row = p + i
    return row if row >= 0 else None


def _e_times_v(q, j):
    """Column index of e_pq v_j, or None when the product vanishes."""
    col = q - j
    return col if col >= 0 else None


def op_mul(a, b):
    diag = defaultdict(HPoly.zero)
    mat = defaultdict(lambda: ZERO)

    for i, left in a.diag:
        for j, right in b.diag:
            # v_i f(H) = f(H - i) v_i
            product = left * right.shift(-i)
            grade, corrections = _shift_products(i, j)
            diag[grade] = diag[grade] + product
            for p, q in corrections:
                mat[(p, q)] -= product.eval(p + 1)

        for (p, q), value in b.mat:
            row = _v_times_e(i, p)
            if row is not None:
                # f(H) e_rq = f(r + 1) e_rq
                mat[(row, q)] += value * left.eval(row + 1)

    for (p, q), value in a.mat:
        for j, right in b.diag:
            col = _e_times_v(q, j)
            if col is not None:
                # e_pq f(H) = f(q + 1) e_pq
                mat[(p, col)] += value * right.eval(q + 1)

        for (r, s), other in b.mat:
            if q == r:
                mat[(p, s)] += value * other

    return CanonicalOperator.from_parts(diag, mat)


def commutator(a, b):
    return op_sub(op_mul(a, b), op_mul(b, a))


def grade_of_entry(i, j):
    # e_ij = I^i e_00 D^j
    return i - j


def grades(a):
    return sorted({grade for grade, _ in a.diag} | {grade_of_entry(i, j) for (i, j), _ in a.mat})


def grade_component(a, i):
    return CanonicalOperator.from_parts(
        {grade: poly for grade, poly in a.diag if grade == i},
        {(p, q): value for (p, q), value in a.mat if grade_of_entry(p, q) == i},
    )


def max_positive_grade(a):
    return max([0, *grades(a)])


def is_in_F(a):
    return not a.diag


def in_D1(a):
    """Membership in the commutative subalgebra K[H] + span{e_ii}."""
    return all(grade == 0 for grade, _ in a.diag) and all(i == j for (i, j), _ in a.mat)


def act_on_divided_power(a, s):
    """
    Coordinates of a * x^[s] in the divided-power basis x^[t] = x^t / t!.

    b_i(H) v_i sends x^[s] to b_i(s + i + 1) x^[s + i]; e_pq sends it to
    x^[p] when q = s.
    """
    result = defaultdict(lambda: ZERO)
    for grade, poly in a.diag:
        target = s + grade
        if target >= 0:
            result[target] += poly.eval(target + 1)
    for (p, q), value in a.mat:
        if q == s:
            result[p] += value
    return {t: value for t, value in result.items() if value}


def as_x_poly(p):
    if isinstance(p, Poly):
        return Poly(p.as_expr(), x, domain=QQ)
    return Poly(p, x, domain=QQ)


def apply(a, p):
    """Act with a on a polynomial in x (a sympy expression or Poly); returns a Poly."""
    p = as_x_poly(p)
    image = defaultdict(lambda: ZERO)
    for (s,), coefficient in p.as_dict(native=True).items():
        # x^s = s! x^[s]
        weight = coefficient * factorial_q(s)
        for t, value in act_on_divided_power(a, s).items():
            image[t] += weight * value
    terms = {(t,): value / factorial_q(t) for t, value in image.items() if value}
    return Poly.from_dict(terms, x, domain=QQ) if terms else Poly(0, x, domain=QQ)
