"""
Finite windows of generalized weight modules.

A module with base weight lam is stored on the integer window [lo, hi]:
index i carries the weight space M^{lam+i} together with

    N_i  the nilpotent part of H - (lam + i), shape (d_i, d_i)
    D_i  the action of D (the derivative), M^{lam+i} -> M^{lam+i-1}, shape (d_{i-1}, d_i)
    U_i  the action of I (the integral),   M^{lam+i} -> M^{lam+i+1}, shape (d_{i+1}, d_i)

A Genuine lower edge means the module is zero below lo, so D_lo is the
map onto the zero space (shape (0, d_lo)). A Truncated edge is a cut of
the window and the map across it is unknown (None).
"""
from dataclasses import dataclass, replace
from enum import Enum
import logging

from kernel import linalg
from kernel.exceptions import InvalidModule, MismatchedModules, WindowTooSmall
from kernel.scalars import format_rational, to_rational
from kernel.weights import weight_class_of

logger = logging.getLogger(__name__)


class Boundary(str, Enum):
    GENUINE = 'genuine'
    TRUNCATED = 'truncated'


@dataclass(frozen=True)
class WeightSpace:
    dim: int
    N: object
    D: object = None
    U: object = None


@dataclass(frozen=True)
class LabeledWeightSpace:
    """A weight space tagged with its weight, the unit consumed by ``coset_split``."""

    weight: object
    dim: int
    N: object
    D: object = None
    U: object = None


@dataclass(frozen=True)
class WeightWindowModule:
    base_weight: object
    lo: int
    hi: int
    spaces: tuple
    lower: Boundary = Boundary.TRUNCATED
    upper: Boundary = Boundary.TRUNCATED

    def __post_init__(self):
        object.__setattr__(self, 'base_weight', to_rational(self.base_weight))
        object.__setattr__(self, 'lower', Boundary(self.lower))
        object.__setattr__(self, 'upper', Boundary(self.upper))
        if self.hi < self.lo:
            raise ValueError(f'empty window [{self.lo}, {self.hi}]')
        if len(self.spaces) != self.hi - self.lo + 1:
            raise ValueError(f'window [{self.lo}, {self.hi}] needs {self.hi - self.lo + 1} spaces')

    @property
    def weight_class(self):
        return weight_class_of(self.base_weight)

    @property
    def indices(self):
        return range(self.lo, self.hi + 1)

    def space(self, i):
        return self.spaces[i - self.lo]

    def dim(self, i):
        """Dimension at index i; zero outside the window."""
        return self.space(i).dim if self.lo <= i <= self.hi else 0

    def dims(self):
        return [space.dim for space in self.spaces]

    def N(self, i):
        return self.space(i).N

    def D(self, i):
        return self.space(i).D

    def U(self, i):
        return self.space(i).U

    def weight(self, i):
        return self.base_weight + i

    def index_of(self, weight):
        """Window index of an absolute weight in the class of this module."""
        offset = to_rational(weight) - self.base_weight
        if offset.denominator != 1:
            raise MismatchedModules(
                f'weight {format_rational(weight)} is not in class {self.weight_class}'
            )
        return int(offset.numerator)

    def below(self, i):
        """U_{i-1}, the map into index i from below, or None when unknown."""
        if i > self.lo:
            return self.U(i - 1)
        if self.lower is Boundary.GENUINE:
            return linalg.zeros(self.dim(i), 0)
        return None

    def projector(self, i):
        """P_i = 1 - U_{i-1} D_i, the action of e_00 on index i, or None when unknown."""
        D, U = self.D(i), self.below(i)
        if D is None or U is None:
            return None
        return linalg.sub(linalg.eye(self.dim(i)), linalg.mul(U, D))

    def interior(self):
        """Indices whose maps in both directions are known."""
        return [i for i in self.indices if self.D(i) is not None and self.U(i) is not None]

    def support(self):
        return [self.weight(i) for i in self.indices if self.dim(i)]

    def max_block(self):
        """Largest nilpotency index of N over the window."""
        largest = 0
        for i in self.indices:
            N, k = self.N(i), 0
            current = linalg.eye(self.dim(i))
            while k < self.dim(i) and not linalg.is_zero(current):
                current, k = linalg.mul(current, N), k + 1
            largest = max(largest, k)
        return largest

    def require_width(self, needed=None):
        needed = 2 * self.max_block() + 3 if needed is None else needed
        width = len(self.interior())
        if width < needed:
            raise WindowTooSmall(
                f'interior width {width} is below the required {needed}',
                interior_width=width,
                required=needed,
            )
        return width

    def validate(self):
        """Every violated module relation on the window, as readable strings."""
        violations = []
        for i in self.indices:
            violations.extend(self._shape_violations(i))
        if violations:
            return violations
        for i in self.indices:
            violations.extend(self._relation_violations(i))
        return violations

    def is_valid(self):
        return not self.validate()

    def ensure_valid(self):
        violations = self.validate()
        if violations:
            logger.error(f'Invalid module window: {violations[0]} ({len(violations)} violations)')
            raise InvalidModule(violations=violations)
        return self

    def _shape_violations(self, i):
        space, d = self.space(i), self.dim(i)
        found = []
        if space.dim < 0:
            found.append(f'index {i}: negative dimension')
        if linalg.shape(space.N) != (d, d):
            found.append(f'index {i}: N has shape {linalg.shape(space.N)}, expected {(d, d)}')
        expected_D = (self.dim(i - 1), d)
        if space.D is None:
            if i > self.lo or self.lower is Boundary.GENUINE:
                found.append(f'index {i}: D is missing')
        elif linalg.shape(space.D) != expected_D:
            found.append(f'index {i}: D has shape {linalg.shape(space.D)}, expected {expected_D}')
        expected_U = (self.dim(i + 1), d)
        if space.U is None:
            if i < self.hi or self.upper is Boundary.GENUINE:
                found.append(f'index {i}: U is missing')
        elif linalg.shape(space.U) != expected_U:
            found.append(f'index {i}: U has shape {linalg.shape(space.U)}, expected {expected_U}')
        if i == self.lo and self.lower is Boundary.TRUNCATED and space.D is not None:
            found.append(f'index {i}: D crosses a truncated edge')
        if i == self.hi and self.upper is Boundary.TRUNCATED and space.U is not None:
            found.append(f'index {i}: U crosses a truncated edge')
        return found

    def _relation_violations(self, i):
        d, N, D, U = self.dim(i), self.N(i), self.D(i), self.U(i)
        found = []
        if not linalg.is_nilpotent(N):
            found.append(f'index {i}: N is not nilpotent')
        if U is not None:
            # D I = 1; across a genuine upper edge the space above is zero
            D_above = self.D(i + 1) if i < self.hi else linalg.zeros(d, 0)
            if not linalg.equal(linalg.mul(D_above, U), linalg.eye(d)):
                found.append(f'index {i}: D_{i + 1} U_{i} is not the identity')
            if i < self.hi and not linalg.equal(linalg.mul(self.N(i + 1), U), linalg.mul(U, N)):
                found.append(f'index {i}: U does not commute with N')
        if D is not None and i > self.lo:
            if not linalg.equal(linalg.mul(self.N(i - 1), D), linalg.mul(D, N)):
                found.append(f'index {i}: D does not commute with N')
        P = self.projector(i)
        if P is not None:
            if self.weight(i) != 1:
                if not linalg.is_zero(P):
                    found.append(f'index {i}: 1 - I D is nonzero away from weight 1')
            else:
                if not linalg.equal(linalg.mul(P, P), P):
                    found.append(f'index {i}: 1 - I D is not idempotent')
                if not (linalg.is_zero(linalg.mul(N, P)) and linalg.is_zero(linalg.mul(P, N))):
                    found.append(f'index {i}: H does not act on im(1 - I D) by 1')
        return found

    def rebase(self, base_weight):
        """The same module described from another base weight in its class."""
        base_weight = to_rational(base_weight)
        k = base_weight - self.base_weight
        if k.denominator != 1:
            raise MismatchedModules(
                f'cannot rebase from {format_rational(self.base_weight)} '
                f'to {format_rational(base_weight)}: different classes'
            )
        k = int(k.numerator)
        return replace(self, base_weight=base_weight, lo=self.lo - k, hi=self.hi - k)

    def extend_below(self, lo):
        """Pad a genuine lower edge with zero spaces down to index lo."""
        if lo >= self.lo:
            return self
        if self.lower is not Boundary.GENUINE:
            raise MismatchedModules(f'cannot extend a truncated lower edge below {self.lo}')
        padding = []
        for i in range(lo, self.lo):
            up = linalg.zeros(self.dim(self.lo), 0) if i == self.lo - 1 else linalg.zeros(0, 0)
            padding.append(WeightSpace(0, linalg.zeros(0, 0), linalg.zeros(0, 0), up))
        return replace(self, lo=lo, spaces=tuple(padding) + self.spaces)

    def restrict(self, lo, hi):
        """The sub-window [lo, hi]; new cuts are Truncated."""
        if lo < self.lo or hi > self.hi or hi < lo:
            raise WindowTooSmall(f'[{lo}, {hi}] is not inside [{self.lo}, {self.hi}]')
        spaces = list(self.spaces[lo - self.lo:hi - self.lo + 1])
        lower, upper = self.lower, self.upper
        if lo > self.lo:
            spaces[0] = replace(spaces[0], D=None)
            lower = Boundary.TRUNCATED
        if hi < self.hi:
            spaces[-1] = replace(spaces[-1], U=None)
            upper = Boundary.TRUNCATED
        return replace(self, lo=lo, hi=hi, spaces=tuple(spaces), lower=lower, upper=upper)

    def weight_spaces(self):
        return [
            LabeledWeightSpace(self.weight(i), space.dim, space.N, space.D, space.U)
            for i, space in zip(self.indices, self.spaces)
        ]

    def __repr__(self):
        return (
            f'WeightWindowModule(base={format_rational(self.base_weight)}, '
            f'window=[{self.lo}, {self.hi}], dims={self.dims()})'
        )


def align(A, B):
    """
    Put A and B on one base weight and one window.

    Genuine lower edges are padded with zero spaces first; the common
    window is the intersection of what remains.
    """
    if A.weight_class != B.weight_class:
        raise MismatchedModules(f'classes {A.weight_class} and {B.weight_class} differ')
    B = B.rebase(A.base_weight)
    lo = min(A.lo, B.lo)
    if A.lower is Boundary.GENUINE:
        A = A.extend_below(lo)
    if B.lower is Boundary.GENUINE:
        B = B.extend_below(lo)
    lo, hi = max(A.lo, B.lo), min(A.hi, B.hi)
    if hi < lo:
        raise WindowTooSmall(f'windows [{A.lo}, {A.hi}] and [{B.lo}, {B.hi}] do not overlap')
    return A.restrict(lo, hi), B.restrict(lo, hi)
