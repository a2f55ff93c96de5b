from dataclasses import dataclass

from .scalars import to_rational, floor, format_rational, ZERO


@dataclass(frozen=True, order=True)
class WeightClass:
    """A coset λ + ℤ, named by its representative in [0, 1)."""

    representative: object = ZERO

    def __post_init__(self):
        value = to_rational(self.representative)
        if not (0 <= value < 1):
            raise ValueError(f'class representative {value} outside [0, 1)')
        object.__setattr__(self, 'representative', value)

    @property
    def is_integral(self):
        return self.representative == 0

    def offset_of(self, weight):
        """The integer k with weight = representative + k."""
        weight = to_rational(weight)
        if weight_class_of(weight) != self:
            raise ValueError(f'{format_rational(weight)} is not in class {self}')
        return floor(weight - self.representative)

    def __str__(self):
        return format_rational(self.representative)


def weight_class_of(weight):
    weight = to_rational(weight)
    return WeightClass(weight - floor(weight))


def same_class(first, second):
    return (to_rational(first) - to_rational(second)).denominator == 1
