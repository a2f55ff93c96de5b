from sympy import Poly
from sympy.polys.domains import QQ

from kernel.exceptions import ExpressionSyntaxError
from kernel.hpoly import HPoly
from operators.canonical import h_poly, op_add, op_mul, op_scale, x, zero
from operators.generators import Generator, X
from operators.words import generator_operator

from .grammar import Atom, Paren, Power, Product, Sum, parse


def eval_ast(node):
    """Canonical form of a parsed expression."""
    if isinstance(node, Atom):
        if isinstance(node.value, Generator):
            return generator_operator(node.value)
        return h_poly(HPoly.constant(node.value))
    if isinstance(node, Paren):
        return eval_ast(node.expr)
    if isinstance(node, Power):
        return eval_ast(node.base) ** node.exponent
    if isinstance(node, Product):
        result = eval_ast(node.factors[0])
        for factor in node.factors[1:]:
            result = op_mul(result, eval_ast(factor))
        return result
    if isinstance(node, Sum):
        total = zero()
        for sign, term in node.terms:
            total = op_add(total, op_scale(eval_ast(term), sign))
        return total
    raise TypeError(f'not an expression node: {node!r}')


def evaluate(text):
    return eval_ast(parse(text))


def eval_polynomial(node):
    """Evaluate a parsed expression in the commutative ring QQ[x]; only x and rationals may occur."""
    if isinstance(node, Atom):
        if node.value == X:
            return Poly(x, x, domain=QQ)
        if isinstance(node.value, Generator):
            raise ExpressionSyntaxError(
                f'{node.value} is not allowed in a polynomial', position=node.position
            )
        return Poly(QQ.to_sympy(node.value), x, domain=QQ)
    if isinstance(node, Paren):
        return eval_polynomial(node.expr)
    if isinstance(node, Power):
        return eval_polynomial(node.base) ** node.exponent
    if isinstance(node, Product):
        result = eval_polynomial(node.factors[0])
        for factor in node.factors[1:]:
            result = result * eval_polynomial(factor)
        return result
    if isinstance(node, Sum):
        total = Poly(0, x, domain=QQ)
        for sign, term in node.terms:
            total = total + eval_polynomial(term) * sign
        return total
    raise TypeError(f'not an expression node: {node!r}')


def evaluate_polynomial(text):
    return eval_polynomial(parse(text))
