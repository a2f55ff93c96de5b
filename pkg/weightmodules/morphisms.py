"""
Module morphisms between windowed modules and the linear system whose
solutions are exactly the equivariant families of maps.
"""
from collections import defaultdict
from dataclasses import dataclass
import logging

from kernel import linalg
from kernel.exceptions import InfeasibleSystem, MismatchedModules
from kernel.hpoly import HPoly
from operators.b1 import b1_monomial, b1_mul

from .constructors import make_M
from .window import align

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModuleMorphism:
    """phi_i : A^{lam+i} -> B^{lam+i} for every index of the shared window."""

    source: object
    target: object
    maps: tuple

    def at(self, i):
        return self.maps[i - self.source.lo]

    def compose(self, other):
        """self after other."""
        return ModuleMorphism(
            other.source,
            self.target,
            tuple(linalg.mul(f, g) for f, g in zip(self.maps, other.maps)),
        )

    @property
    def is_zero(self):
        return all(linalg.is_zero(phi) for phi in self.maps)


def morphism_violations(phi):
    A, B = phi.source, phi.target
    if (A.base_weight, A.lo, A.hi) != (B.base_weight, B.lo, B.hi):
        return ['source and target are not aligned']
    found = []
    for i in A.indices:
        f = phi.at(i)
        if linalg.shape(f) != (B.dim(i), A.dim(i)):
            found.append(f'index {i}: map has shape {linalg.shape(f)}')
            continue
        if not linalg.equal(linalg.mul(B.N(i), f), linalg.mul(f, A.N(i))):
            found.append(f'index {i}: does not commute with N')
        if i > A.lo and A.D(i) is not None and B.D(i) is not None:
            if not linalg.equal(linalg.mul(B.D(i), f), linalg.mul(phi.at(i - 1), A.D(i))):
                found.append(f'index {i}: does not commute with D')
        if i < A.hi and A.U(i) is not None and B.U(i) is not None:
            if not linalg.equal(linalg.mul(B.U(i), f), linalg.mul(phi.at(i + 1), A.U(i))):
                found.append(f'index {i}: does not commute with I')
    return found


def is_module_morphism(phi):
    return not morphism_violations(phi)


def is_isomorphism(phi):
    return is_module_morphism(phi) and all(
        linalg.shape(f)[0] == linalg.shape(f)[1] and linalg.rank(f) == linalg.shape(f)[0]
        for f in phi.maps
    )


class _EquivarianceSystem:
    """Unknowns are the entries of every phi_i, numbered index by index."""

    def __init__(self, A, B):
        self.A, self.B = A, B
        self.offsets = {}
        count = 0
        for i in A.indices:
            self.offsets[i] = count
            count += B.dim(i) * A.dim(i)
        self.size = count
        self.rows = []

    def var(self, i, r, c):
        return self.offsets[i] + r * self.A.dim(i) + c

    def _commutation(self, left, i, right, j):
        """Rows of left * phi_i - phi_j * right = 0."""
        L, R = linalg.entries(left), linalg.entries(right)
        rows, cols = linalg.shape(left)[0], linalg.shape(right)[1]
        for r in range(rows):
            for c in range(cols):
                row = defaultdict(int)
                for k, value in enumerate(L[r]):
                    if value:
                        row[self.var(i, k, c)] += value
                for k in range(len(R)):
                    if R[k][c]:
                        row[self.var(j, r, k)] -= R[k][c]
                row = {var: value for var, value in row.items() if value}
                if row:
                    self.rows.append(row)

    def build(self):
        A, B = self.A, self.B
        for i in A.indices:
            self._commutation(B.N(i), i, A.N(i), i)
            if i > A.lo:
                self._commutation(B.D(i), i, A.D(i), i - 1)
            if i < A.hi:
                self._commutation(B.U(i), i, A.U(i), i + 1)
        return self

    def matrix(self):
        entries = {(r, var): value for r, row in enumerate(self.rows) for var, value in row.items()}
        return linalg.sparse(entries, (len(self.rows), self.size))

    def morphism(self, vector):
        maps = []
        for i in self.A.indices:
            rows, cols = self.B.dim(i), self.A.dim(i)
            maps.append(linalg.matrix(
                [[vector[self.var(i, r, c)] for c in range(cols)] for r in range(rows)],
                (rows, cols),
            ))
        return ModuleMorphism(self.A, self.B, tuple(maps))


def _aligned_system(A, B):
    A, B = align(A, B)
    needed = 2 * max(A.max_block(), B.max_block()) + 3
    A.require_width(needed)
    B.require_width(needed)
    return _EquivarianceSystem(A, B).build()


def hom_window(A, B):
    """Dimension of the space of equivariant families A -> B on the common window."""
    if A.weight_class != B.weight_class:
        logger.debug(f'Hom({A!r}, {B!r}) = 0: disjoint supports')
        return 0
    system = _aligned_system(A, B)
    if not system.size:
        return 0
    dim = system.size - linalg.rank(system.matrix())
    logger.debug(f'Hom({A!r}, {B!r}): {system.size} unknowns, {len(system.rows)} equations, dim {dim}')
    return dim


def hom_window_basis(A, B):
    if A.weight_class != B.weight_class:
        return []
    system = _aligned_system(A, B)
    if not system.size:
        return []
    kernel = linalg.entries(linalg.nullspace(system.matrix()))
    columns = len(kernel[0]) if kernel else 0
    return [system.morphism([row[c] for row in kernel]) for c in range(columns)]


def _vectorize(f):
    return [value for row in linalg.entries(f) for value in row]


def _span_matrix(vectors, length):
    """Columns are the given vectors."""
    if not vectors:
        return linalg.zeros(length, 0)
    return linalg.transpose(linalg.matrix(vectors, (len(vectors), length)))


def is_local_endomorphism_basis(basis, index=None):
    """
    Witness that the span E of ``basis`` is a local algebra.

    At one window index, let J be the maps in E raising the filtration
    M >= NM >= N^2 M >= ... by one step. J is a nilpotent ideal; E is local
    when E contains the identity and J has codimension one.
    """
    if not basis:
        return False
    M = basis[0].source
    if any((phi.source.base_weight, phi.source.lo, phi.source.hi) != (M.base_weight, M.lo, M.hi) for phi in basis):
        raise MismatchedModules('endomorphisms of different modules')
    if index is None:
        interior = [i for i in M.interior() if M.dim(i)]
        if not interior:
            return False
        index = interior[len(interior) // 2]
    d = M.dim(index)
    if not d:
        return False
    local_maps = [phi.at(index) for phi in basis]
    E = _span_matrix([_vectorize(f) for f in local_maps], d * d)
    if linalg.solve_in_span(E, _span_matrix([_vectorize(linalg.eye(d))], d * d)) is None:
        return False

    N = M.N(index)
    conditions = []
    for k in range(d):
        image = linalg.column_space(linalg.power(N, k + 1))
        annihilator = linalg.transpose(linalg.nullspace(linalg.transpose(image))) if image.shape[1] else linalg.eye(d)
        # rows of annihilator * f * N^k, one column per basis element
        blocks = [_vectorize(linalg.chain(annihilator, f, linalg.power(N, k))) for f in local_maps]
        conditions.extend(zip(*blocks))
    system = linalg.matrix([list(row) for row in conditions], (len(conditions), len(local_maps)))
    codimension = len(local_maps) - linalg.nullspace(system).shape[1]
    return linalg.rank(E) == len(local_maps) and codimension == 1


def shift_isomorphism(n, lam, k, lo=None, hi=None):
    """
    M(n, lam) -> M(n, lam + k) induced by 1 |-> D^k on B1.

    The basis vector D^{-i} (H - lam)^j goes to D^{-i} (H - lam)^j D^k,
    whose B1 coordinates are read off in the target basis.
    """
    lo = -(2 * n + 3) if lo is None else lo
    hi = 2 * n + 3 if hi is None else hi
    source = make_M(n, lam, lo, hi)
    target = make_M(n, source.base_weight + k, lo - k, hi - k).rebase(source.base_weight)
    shift = b1_monomial(HPoly.one(), -k)

    maps = []
    for i in source.indices:
        weight = source.weight(i)
        columns = []
        for j in range(n):
            # D^{-i} (H - lam)^j = (H - lam - i)^j D^{-i}
            vector = b1_monomial((HPoly.H() - weight) ** j, i)
            image = b1_mul(vector, shift).as_dict
            coefficient = image.get(i - k, HPoly.zero())
            if set(image) - {i - k}:
                raise InfeasibleSystem(f'image of index {i} leaves grade {i - k}')
            # target basis (H - weight)^t D^{k-i}
            coordinates = coefficient.shift(weight).ascending()
            if any(coordinates[n:]):
                raise InfeasibleSystem(f'image of index {i} is not reduced modulo (H - mu)^{n}')
            columns.append((coordinates + [0] * n)[:n])
        maps.append(linalg.transpose(linalg.matrix(columns, (n, n))))

    phi = ModuleMorphism(source, target, tuple(maps))
    if not is_isomorphism(phi):
        logger.error(f'Shift map M({n}, {lam}) -> M({n}, {lam}+{k}) is not an isomorphism')
        raise InfeasibleSystem('shift map is not a module isomorphism', violations=morphism_violations(phi))
    return phi
