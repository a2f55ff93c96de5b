"""
Constructors for windowed modules: K[x], M(n, lam), direct sums, coset
splitting and random changes of basis.
"""
from collections import defaultdict
from functools import reduce
import logging
import random

from kernel import linalg
from kernel.exceptions import InvalidModule, MismatchedModules, ModuleSpecError
from kernel.scalars import format_rational, to_rational
from kernel.weights import weight_class_of

from .window import Boundary, WeightSpace, WeightWindowModule

logger = logging.getLogger(__name__)


def make_M(n, lam, lo, hi):
    """
    M(n, lam) = B1 / B1 (H - lam)^n on the window [lo, hi].

    Index i has basis D^{-i} (H - lam)^j for j < n; H - (lam + i) sends the
    j-th vector to the (j+1)-th, and D, I only move the index.
    """
    if n < 1:
        raise ModuleSpecError(f'M(n, lam) needs n >= 1, got {n}')
    if lo >= hi:
        raise ModuleSpecError(f'window [{lo}, {hi}] is empty or a single weight')
    block, identity = linalg.jordan_block(n), linalg.eye(n)
    spaces = tuple(
        WeightSpace(
            n,
            block,
            identity if i > lo else None,
            identity if i < hi else None,
        )
        for i in range(lo, hi + 1)
    )
    return WeightWindowModule(to_rational(lam), lo, hi, spaces)


def make_Kx(hi, lo=1):
    """
    K[x] on the window [lo, hi] with base weight 0.

    x^[s] spans the weight s + 1 space; indices below 1 are zero. The lower
    edge is genuine whenever the window reaches weight 1.
    """
    if hi < 1:
        raise ModuleSpecError(f'K[x] needs hi >= 1, got {hi}')
    if lo >= hi:
        raise ModuleSpecError(f'window [{lo}, {hi}] is empty or a single weight')

    def dim(i):
        return 1 if i >= 1 else 0

    genuine = lo <= 1

    def down(i):
        if i == lo and not genuine:
            return None
        return linalg.eye(1) if i >= 2 else linalg.zeros(dim(i - 1), dim(i))

    def up(i):
        if i == hi:
            return None
        return linalg.eye(1) if i >= 1 else linalg.zeros(dim(i + 1), dim(i))

    spaces = tuple(
        WeightSpace(dim(i), linalg.zeros(dim(i), dim(i)), down(i), up(i))
        for i in range(lo, hi + 1)
    )
    lower = Boundary.GENUINE if genuine else Boundary.TRUNCATED
    return WeightWindowModule(0, lo, hi, spaces, lower=lower)


def _sum_maps(first, second):
    if first is None or second is None:
        return None
    return linalg.block_diag(first, second)


def _conservative(first, second):
    if first is Boundary.GENUINE and second is Boundary.GENUINE:
        return Boundary.GENUINE
    return Boundary.TRUNCATED


def direct_sum(*modules):
    """Blockwise direct sum of modules sharing a class and a window."""
    if not modules:
        raise MismatchedModules('direct sum of no modules')
    return reduce(_direct_sum_pair, modules)


def _direct_sum_pair(A, B):
    if A.weight_class != B.weight_class:
        raise MismatchedModules(
            f'cannot add modules on classes {A.weight_class} and {B.weight_class}'
        )
    B = B.rebase(A.base_weight)
    if (A.lo, A.hi) != (B.lo, B.hi):
        raise MismatchedModules(
            f'windows [{A.lo}, {A.hi}] and [{B.lo}, {B.hi}] differ',
        )
    lower = _conservative(A.lower, B.lower)
    upper = _conservative(A.upper, B.upper)
    spaces = []
    for i, a, b in zip(A.indices, A.spaces, B.spaces):
        down = _sum_maps(a.D, b.D)
        if i == A.lo and lower is Boundary.TRUNCATED:
            down = None
        top = _sum_maps(a.U, b.U)
        if i == A.hi and upper is Boundary.TRUNCATED:
            top = None
        spaces.append(WeightSpace(a.dim + b.dim, linalg.block_diag(a.N, b.N), down, top))
    return WeightWindowModule(A.base_weight, A.lo, A.hi, tuple(spaces), lower, upper)


def coset_split(weight_spaces):
    """
    Group labelled weight spaces by their class modulo Z.

    Within a class the weights must be consecutive. An edge is genuine when
    the edge space carries the map across it.
    """
    by_class = defaultdict(list)
    for space in weight_spaces:
        by_class[weight_class_of(space.weight)].append(space)

    modules = []
    for weight_class in sorted(by_class):
        spaces = sorted(by_class[weight_class], key=lambda space: to_rational(space.weight))
        base = weight_class.representative
        offsets = [int(to_rational(space.weight) - base) for space in spaces]
        if offsets != list(range(offsets[0], offsets[0] + len(offsets))):
            raise InvalidModule(
                f'weights of class {weight_class} are not consecutive',
                violations=[format_rational(space.weight) for space in spaces],
            )
        lower = Boundary.GENUINE if spaces[0].D is not None else Boundary.TRUNCATED
        upper = Boundary.GENUINE if spaces[-1].U is not None else Boundary.TRUNCATED
        module = WeightWindowModule(
            base,
            offsets[0],
            offsets[-1],
            tuple(WeightSpace(space.dim, space.N, space.D, space.U) for space in spaces),
            lower,
            upper,
        )
        logger.debug(f'Coset {weight_class}: window [{module.lo}, {module.hi}], dims {module.dims()}')
        modules.append(module)
    return modules


def random_invertible(rng, n, bound=2):
    """A random unit lower times unit upper triangular integer matrix."""
    if n == 0:
        return linalg.eye(0)
    lower = [[1 if r == c else (rng.randint(-bound, bound) if r > c else 0) for c in range(n)] for r in range(n)]
    upper = [[1 if r == c else (rng.randint(-bound, bound) if r < c else 0) for c in range(n)] for r in range(n)]
    return linalg.mul(linalg.matrix(lower, (n, n)), linalg.matrix(upper, (n, n)))


def random_scramble(M, seed=0):
    """An isomorphic copy of M under a random change of basis in every weight space."""
    rng = random.Random(seed)
    T = {i: random_invertible(rng, M.dim(i)) for i in M.indices}
    T_inv = {i: linalg.inverse(T[i]) for i in M.indices}

    def basis_change(i):
        # the zero space outside the window
        return T[i] if i in T else linalg.eye(0)

    spaces = []
    for i, space in zip(M.indices, M.spaces):
        N = linalg.chain(T[i], space.N, T_inv[i])
        D = None if space.D is None else linalg.chain(basis_change(i - 1), space.D, T_inv[i])
        U = None if space.U is None else linalg.chain(basis_change(i + 1), space.U, T_inv[i])
        spaces.append(WeightSpace(space.dim, N, D, U))
    return WeightWindowModule(M.base_weight, M.lo, M.hi, tuple(spaces), M.lower, M.upper)
