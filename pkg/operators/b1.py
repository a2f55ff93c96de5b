"""
The quotient by the ideal F: the skew Laurent polynomial algebra
B1 = K[H][D, D^-1; tau] with tau(H) = H + 1.

Elements are stored as {grade i: b_i(H)} meaning sum b_i(H) v_i, where the
image of I is D^-1, so v_i is D^-i for every integer i.
"""
from collections import defaultdict
from dataclasses import dataclass

from kernel.hpoly import HPoly


@dataclass(frozen=True)
class B1Element:
    terms: tuple = ()

    @classmethod
    def from_dict(cls, terms):
        return cls(tuple(sorted((int(grade), poly) for grade, poly in terms.items() if not poly.is_zero)))

    @property
    def as_dict(self):
        return dict(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        total = defaultdict(HPoly.zero, self.terms)
        for grade, poly in other.terms:
            total[grade] = total[grade] + poly
        return B1Element.from_dict(total)

    def __mul__(self, other):
        return b1_mul(self, other)


def b1_mul(p, q):
    # D^{+-1} alpha = tau^{+-1}(alpha) D^{+-1}, i.e. v_i f(H) = f(H - i) v_i
    product = defaultdict(HPoly.zero)
    for i, left in p.terms:
        for j, right in q.terms:
            product[i + j] = product[i + j] + left * right.shift(-i)
    return B1Element.from_dict(product)


def project_to_B1(a):
    return B1Element.from_dict(dict(a.diag))


def b1_monomial(f, grade):
    return B1Element.from_dict({grade: f})
