"""
Parser for operator expressions.

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := 'x' | 'd' | 'i' | 'H' | 'e' '(' nat ',' nat ')' | rational | '(' expr ')'

'd' or 'D' is the derivative and 'i' or 'I' the integral; the printer writes
the uppercase forms. Products keep their left-to-right order.
"""
from dataclasses import dataclass
import re
from typing import NamedTuple

from kernel.exceptions import ExpressionSyntaxError
from kernel.scalars import parse_rational
from operators.generators import DEL, HGEN, INT, X, Eij

_TOKEN = re.compile(r'''
    (?P<space>\s+)
  | (?P<rational>\d+(?:\s*/\s*\d+)?)
  | (?P<letter>[xdiDIHe])
  | (?P<op>[-+*^(),])
  | (?P<bad>.)
''', re.VERBOSE)

_LETTERS = {'x': X, 'd': DEL, 'D': DEL, 'i': INT, 'I': INT, 'H': HGEN}


class Token(NamedTuple):
    kind: str
    value: str
    position: int


@dataclass(frozen=True)
class Atom:
    """A generator letter or a rational literal."""

    value: object
    position: int = 0


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int
    position: int = 0


@dataclass(frozen=True)
class Product:
    factors: tuple
    position: int = 0


@dataclass(frozen=True)
class Sum:
    """Signed terms, ``((sign, node), ...)`` with sign +1 or -1."""

    terms: tuple
    position: int = 0


@dataclass(frozen=True)
class Paren:
    expr: object
    position: int = 0


def tokenize(text):
    tokens = []
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        if kind == 'space':
            continue
        if kind == 'bad':
            raise ExpressionSyntaxError(
                f'unexpected character {match.group()!r}', position=match.start()
            )
        value = match.group()
        tokens.append(Token(value if kind == 'op' else kind, value, match.start()))
    tokens.append(Token('end', '', len(text)))
    return tokens


class Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1
        return token

    def expect(self, kind):
        token = self.current
        if token.kind != kind:
            found = token.value or 'end of input'
            raise ExpressionSyntaxError(f'expected {kind!r}, found {found!r}', position=token.position)
        return self.advance()

    def natural(self):
        token = self.expect('rational')
        if '/' in token.value:
            raise ExpressionSyntaxError(f'expected a natural number, found {token.value!r}', position=token.position)
        return int(token.value)

    def parse(self):
        tree = self.expr()
        if self.current.kind != 'end':
            raise ExpressionSyntaxError(
                f'unexpected {self.current.value!r}', position=self.current.position
            )
        return tree

    def expr(self):
        position = self.current.position
        sign = 1
        if self.current.kind in ('+', '-'):
            sign = -1 if self.advance().kind == '-' else 1
        terms = [(sign, self.term())]
        while self.current.kind in ('+', '-'):
            sign = -1 if self.advance().kind == '-' else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms), position)

    def term(self):
        position = self.current.position
        factors = [self.factor()]
        while self.current.kind == '*':
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors), position)

    def factor(self):
        position = self.current.position
        base = self.atom()
        if self.current.kind == '^':
            self.advance()
            return Power(base, self.natural(), position)
        return base

    def atom(self):
        token = self.current
        if token.kind == 'rational':
            self.advance()
            try:
                value = parse_rational(token.value)
            except ExpressionSyntaxError as exc:
                raise ExpressionSyntaxError(exc.message, position=token.position)
            return Atom(value, token.position)
        if token.kind == 'letter':
            self.advance()
            if token.value == 'e':
                self.expect('(')
                i = self.natural()
                self.expect(',')
                j = self.natural()
                self.expect(')')
                return Atom(Eij(i, j), token.position)
            return Atom(_LETTERS[token.value], token.position)
        if token.kind == '(':
            self.advance()
            inner = self.expr()
            self.expect(')')
            return Paren(inner, token.position)
        found = token.value or 'end of input'
        raise ExpressionSyntaxError(f'expected an operand, found {found!r}', position=token.position)


def parse(text):
    return Parser(text).parse()
