"""
Classification of windowed modules: Jordan types, the decomposition
report, isomorphism tests and uniserial chains.
"""
from dataclasses import dataclass
import logging

from kernel import linalg
from kernel.exceptions import InvalidModule, NotNilpotent

from .submodules import Submodule, compute_FM, weight_one_index

logger = logging.getLogger(__name__)


def _partition_from_ranks(ranks):
    """ranks[k] = rank of the k-th power; returns block sizes, largest first."""
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    sizes = []
    for k in range(len(ranks) - 1, 0, -1):
        sizes.extend([k] * (at_least[k - 1] - at_least[k]))
    return tuple(sizes)


def jordan_type(N):
    """Block sizes of a nilpotent matrix, largest first."""
    rows, cols = linalg.shape(N)
    if rows != cols:
        raise NotNilpotent(f'a {rows}x{cols} matrix is not square')
    if not linalg.is_nilpotent(N):
        raise NotNilpotent()
    return _partition_from_ranks([linalg.rank(linalg.power(N, k)) for k in range(rows + 1)])


def quotient_jordan_type(N, F):
    """Jordan type of the map induced by N on the quotient by the N-stable span of F."""
    f = F.shape[1]
    n = N.shape[0] - f
    ranks = [linalg.rank(linalg.hstack(linalg.power(N, k), F)) - f for k in range(n + 1)]
    if ranks[-1]:
        raise NotNilpotent('the induced map on the quotient is not nilpotent')
    return _partition_from_ranks(ranks)


@dataclass(frozen=True)
class DecompositionReport:
    """K[x]^s plus the multiset of M(n, lam) factors, lam taken modulo Z."""

    multiplicity: int = 0
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, 'factors', tuple(sorted(self.factors, key=lambda f: (-f[0], f[1])))
        )

    def merge(self, other):
        return DecompositionReport(self.multiplicity + other.multiplicity, self.factors + other.factors)

    @property
    def length(self):
        return self.multiplicity + sum(n for n, _ in self.factors)

    @property
    def summands(self):
        return self.multiplicity + len(self.factors)

    def to_dict(self):
        return {
            's': self.multiplicity,
            'factors': [{'n': n, 'class': str(weight_class)} for n, weight_class in self.factors],
        }


def decompose(M):
    M.ensure_valid()
    M.require_width()
    FM = compute_FM(M)
    i1 = weight_one_index(M)
    s = FM.dim(i1) if i1 is not None and M.lo <= i1 <= M.hi else 0

    types = {i: quotient_jordan_type(M.N(i), FM.basis(i)) for i in M.interior()}
    distinct = set(types.values())
    if len(distinct) > 1:
        raise InvalidModule(
            'the quotient by FM has different Jordan types across the window',
            violations=[f'index {i}: {list(partition)}' for i, partition in types.items()],
        )
    partition = distinct.pop() if distinct else ()
    report = DecompositionReport(s, tuple((n, M.weight_class) for n in partition))
    logger.debug(f'Decomposition of {M!r}: {report.to_dict()}')
    return report


def is_isomorphic(A, B):
    return decompose(A) == decompose(B)


def module_length(M):
    return decompose(M).length


def submodule_chain(M):
    """
    The full chain of submodules of an indecomposable M, smallest first.

    For M(n, lam) the submodules are ker N^k, k = 0..n; K[x] is simple.
    Returns None when M is decomposable.
    """
    report = decompose(M)
    if report.summands > 1:
        return None
    if report.summands == 0:
        return [Submodule.zero(M)]
    if report.multiplicity:
        return [Submodule.zero(M), Submodule.whole(M)]
    n = report.factors[0][0]
    chain = [
        Submodule.from_spans(M, {i: linalg.nullspace(linalg.power(M.N(i), k)) for i in M.indices})
        for k in range(n + 1)
    ]
    for smaller, larger in zip(chain, chain[1:]):
        if not larger.is_closed() or not larger.contains(smaller) or smaller.contains(larger):
            logger.error(f'Chain of {M!r} breaks between {smaller.dims()} and {larger.dims()}')
            return None
    return chain


def is_uniserial(M):
    return submodule_chain(M) is not None
