"""
Normalization of words in the generators x, D, I, H, e_ij.

A word is a finite signed sum of generator products,
``[(coefficient, (g1, g2, ...)), ...]``; the empty product is 1.
"""
from kernel.hpoly import HPoly
from kernel.scalars import to_rational

from .canonical import h_poly, identity, make_eij, op_add, op_mul, op_scale, v, zero
from .generators import GeneratorKind


def generator_operator(generator):
    kind = generator.kind
    if kind is GeneratorKind.X:
        # x = I H = (H - 1) I
        return h_poly(HPoly.H() - 1, 1)
    if kind is GeneratorKind.DEL:
        return v(-1)
    if kind is GeneratorKind.INT:
        return v(1)
    if kind is GeneratorKind.H:
        return h_poly(HPoly.H())
    return make_eij(generator.i, generator.j)


def normalize_product(letters):
    result = identity()
    for letter in letters:
        result = op_mul(result, generator_operator(letter))
    return result


def normalize_word(word):
    total = zero()
    for coefficient, letters in word:
        term = normalize_product(letters)
        total = op_add(total, op_scale(term, to_rational(coefficient)))
    return total


def word_from_letters(letters, coefficient=1):
    return [(to_rational(coefficient), tuple(letters))]
