"""
Submodules of windowed modules, the submodule FM and its complement.
"""
from dataclasses import dataclass
import logging

from kernel import linalg
from kernel.exceptions import InfeasibleSystem, WindowTooSmall

from .window import Boundary, WeightSpace, WeightWindowModule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Submodule:
    """A family of subspaces, one per window index, given by independent columns."""

    module: WeightWindowModule
    bases: tuple

    @classmethod
    def from_spans(cls, module, spans):
        """Build from spanning columns, ``{index: matrix}``; missing indices are zero."""
        bases = tuple(
            linalg.column_space(spans[i]) if i in spans else linalg.zeros(module.dim(i), 0)
            for i in module.indices
        )
        return cls(module, bases)

    @classmethod
    def zero(cls, module):
        return cls.from_spans(module, {})

    @classmethod
    def whole(cls, module):
        return cls.from_spans(module, {i: linalg.eye(module.dim(i)) for i in module.indices})

    def basis(self, i):
        if self.module.lo <= i <= self.module.hi:
            return self.bases[i - self.module.lo]
        return linalg.zeros(0, 0)

    def dim(self, i):
        return self.basis(i).shape[1]

    def dims(self):
        return [self.dim(i) for i in self.module.indices]

    @property
    def is_zero(self):
        return not any(self.dims())

    def contains(self, other):
        return all(
            linalg.rank(linalg.hstack(self.basis(i), other.basis(i))) == self.dim(i)
            for i in self.module.indices
        )

    def meets_trivially(self, other):
        return all(
            linalg.rank(linalg.hstack(self.basis(i), other.basis(i))) == self.dim(i) + other.dim(i)
            for i in self.module.indices
        )

    def closure_violations(self):
        """Interior indices where N, D or I leaves the family."""
        M, found = self.module, []
        for i in M.interior():
            B = self.basis(i)
            if linalg.solve_in_span(B, linalg.mul(M.N(i), B)) is None:
                found.append(f'index {i}: not closed under N')
            if i > M.lo and linalg.solve_in_span(self.basis(i - 1), linalg.mul(M.D(i), B)) is None:
                found.append(f'index {i}: not closed under D')
            if i < M.hi and linalg.solve_in_span(self.basis(i + 1), linalg.mul(M.U(i), B)) is None:
                found.append(f'index {i}: not closed under I')
        return found

    def is_closed(self):
        return not self.closure_violations()

    def to_module(self):
        """The submodule as a module in its own right, in the coordinates of ``bases``."""
        M = self.module
        coordinates = {i: linalg.left_inverse(self.basis(i)) for i in M.indices}
        spaces = []
        for i, space in zip(M.indices, M.spaces):
            B, k = self.basis(i), self.dim(i)
            N = linalg.chain(coordinates[i], space.N, B)
            D = U = None
            if space.D is not None:
                D = linalg.chain(coordinates[i - 1], space.D, B) if i > M.lo else linalg.zeros(0, k)
            if space.U is not None:
                U = linalg.chain(coordinates[i + 1], space.U, B) if i < M.hi else linalg.zeros(0, k)
            spaces.append(WeightSpace(k, N, D, U))
        return WeightWindowModule(M.base_weight, M.lo, M.hi, tuple(spaces), M.lower, M.upper)


@dataclass(frozen=True)
class SplitReport:
    multiplicity: int
    interior: tuple
    fm_dims: tuple
    complement_dims: tuple

    def to_dict(self):
        return {
            'multiplicity': self.multiplicity,
            'interior': list(self.interior),
            'fm_dims': list(self.fm_dims),
            'complement_dims': list(self.complement_dims),
        }


def weight_one_index(M):
    """Window index of weight 1, or None when the class of M does not contain 1."""
    if not M.weight_class.is_integral:
        return None
    return M.index_of(1)


def compute_FM(M):
    """
    The submodule FM: im(1 - I D) at weight 1 and its images under powers of I.

    FM is zero unless the class of M contains 1; its rank at weight 1 is the
    multiplicity of K[x] in M.
    """
    i1 = weight_one_index(M)
    if i1 is None:
        return Submodule.zero(M)
    if i1 < M.lo and M.lower is Boundary.GENUINE:
        return Submodule.zero(M)
    if not (M.lo <= i1 <= M.hi):
        raise WindowTooSmall(f'weight 1 (index {i1}) lies outside the window [{M.lo}, {M.hi}]')
    P = M.projector(i1)
    if P is None:
        raise WindowTooSmall(f'weight 1 sits on the truncated edge {M.lo}; 1 - I D is unknown there')
    spans = {i1: linalg.column_space(P)}
    for i in range(i1 + 1, M.hi + 1):
        spans[i] = linalg.mul(M.U(i - 1), spans[i - 1])
    FM = Submodule.from_spans(M, spans)
    logger.debug(f'FM of {M!r}: rank {FM.dim(i1)} at weight 1')
    return FM


def split_complement(M):
    """
    The complement C of FM in M, closed under N, D and I.

    Such a complement is unique. FM vanishes below weight 1, so C is all of
    M there; closure under I then forces C to contain I(C) one weight up,
    and I is injective with dim I(C) = dim M - dim FM at every weight from 1
    on. At weight 1 this is im(I), the kernel of 1 - I D. The family is
    still checked against the module relations before it is returned.
    """
    violations = M.validate()
    if violations:
        logger.error(f'Split of {M!r} refused: {violations[0]}')
        raise InfeasibleSystem('window data is not a module', violations=violations)
    M.require_width()
    FM = compute_FM(M)
    i1 = weight_one_index(M)

    spans = {}
    for i in M.indices:
        if i1 is None or i < i1:
            spans[i] = linalg.eye(M.dim(i))
        elif i == M.lo:
            spans[i] = linalg.zeros(M.dim(i), 0)
        else:
            spans[i] = linalg.mul(M.U(i - 1), spans[i - 1])
    C = Submodule.from_spans(M, spans)

    problems = C.closure_violations()
    for i in M.interior():
        if C.dim(i) + FM.dim(i) != M.dim(i) or linalg.rank(linalg.hstack(C.basis(i), FM.basis(i))) != M.dim(i):
            problems.append(f'index {i}: C and FM do not span M')
    if problems:
        logger.error(f'No complement of FM in {M!r}: {problems[0]}')
        raise InfeasibleSystem('FM has no equivariant complement on this window', violations=problems)

    report = SplitReport(
        multiplicity=FM.dim(i1) if i1 is not None and M.lo <= i1 <= M.hi else 0,
        interior=tuple(M.interior()),
        fm_dims=tuple(FM.dims()),
        complement_dims=tuple(C.dims()),
    )
    logger.debug(f'Split {M!r}: FM dims {report.fm_dims}, complement dims {report.complement_dims}')
    return C, report
