from dataclasses import dataclass
from enum import Enum


class GeneratorKind(str, Enum):
    X = 'x'
    DEL = 'd'
    INT = 'i'
    H = 'H'
    E = 'e'


@dataclass(frozen=True)
class Generator:
    """A letter of a word in the generators of the algebra."""

    kind: GeneratorKind
    i: int = 0
    j: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'kind', GeneratorKind(self.kind))
        if self.kind is GeneratorKind.E and (self.i < 0 or self.j < 0):
            raise ValueError(f'e({self.i},{self.j}) needs natural indices')

    def __str__(self):
        if self.kind is GeneratorKind.E:
            return f'e({self.i},{self.j})'
        return self.kind.value


X = Generator(GeneratorKind.X)
DEL = Generator(GeneratorKind.DEL)
INT = Generator(GeneratorKind.INT)
HGEN = Generator(GeneratorKind.H)


def Eij(i, j):
    return Generator(GeneratorKind.E, i, j)
