"""
Exact rational matrices.

Thin helpers over sympy's ``DomainMatrix`` on the field QQ. Maps between
weight spaces are stored with shape (target_dim, source_dim) and act on
column vectors. Every helper accepts zero-sized matrices, which occur
whenever a weight space is empty.
"""
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .scalars import to_rational, format_rational


def matrix(rows, shape=None):
    rows = [[to_rational(entry) for entry in row] for row in rows]
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    if len(rows) != shape[0] or any(len(row) != shape[1] for row in rows):
        raise ValueError(f'rows do not match shape {shape}')
    return DomainMatrix(rows, shape, QQ)


def sparse(entries, shape):
    """Build a sparse matrix from ``{(row, col): value}``."""
    dod = {}
    for (row, col), value in entries.items():
        value = to_rational(value)
        if value:
            dod.setdefault(row, {})[col] = value
    return DomainMatrix(dod, shape, QQ)


def zeros(rows, cols):
    return DomainMatrix.zeros((rows, cols), QQ).to_dense()


def eye(n):
    return DomainMatrix.eye(n, QQ).to_dense()


def scalar(n, value):
    return eye(n) * to_rational(value) if n else zeros(0, 0)


def jordan_block(n):
    """Nilpotent Jordan block: e_j -> e_{j+1}, last basis vector -> 0."""
    rows = [[1 if r == c + 1 else 0 for c in range(n)] for r in range(n)]
    return matrix(rows, (n, n))


def shape(A):
    return tuple(A.shape)


def entries(A):
    rows, cols = A.shape
    if rows == 0:
        return []
    if cols == 0:
        return [[] for _ in range(rows)]
    return A.to_dense().to_list()


def as_strings(A):
    return [[format_rational(value) for value in row] for row in entries(A)]


def mul(A, B):
    if A.shape[1] != B.shape[0]:
        raise ValueError(f'cannot multiply {A.shape} by {B.shape}')
    if 0 in (A.shape[0], A.shape[1], B.shape[1]):
        return zeros(A.shape[0], B.shape[1])
    return A.to_dense() * B.to_dense()


def chain(*matrices):
    """Product of the matrices from left to right."""
    result = matrices[0]
    for factor in matrices[1:]:
        result = mul(result, factor)
    return result


def add(A, B):
    if A.shape != B.shape:
        raise ValueError(f'cannot add {A.shape} and {B.shape}')
    if 0 in A.shape:
        return zeros(*A.shape)
    return A.to_dense() + B.to_dense()


def sub(A, B):
    if A.shape != B.shape:
        raise ValueError(f'cannot subtract {B.shape} from {A.shape}')
    if 0 in A.shape:
        return zeros(*A.shape)
    return A.to_dense() - B.to_dense()


def scale(A, value):
    if 0 in A.shape:
        return zeros(*A.shape)
    return A.to_dense() * to_rational(value)


def power(A, k):
    if A.shape[0] != A.shape[1]:
        raise ValueError(f'cannot take powers of a {A.shape} matrix')
    if not A.shape[0]:
        return zeros(0, 0)
    return A.to_dense() ** k


def transpose(A):
    if 0 in A.shape:
        return zeros(A.shape[1], A.shape[0])
    return A.to_dense().transpose()


def is_zero(A):
    return 0 in A.shape or A.is_zero_matrix


def equal(A, B):
    return tuple(A.shape) == tuple(B.shape) and entries(A) == entries(B)


def rank(A):
    if 0 in A.shape:
        return 0
    _, pivots = A.rref()
    return len(pivots)


def nullspace(A):
    """Basis of the kernel of A, returned as the columns of a matrix."""
    rows, cols = A.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0 or A.is_zero_matrix:
        return eye(cols)
    basis = A.nullspace()
    if basis.shape[0] == 0:
        return zeros(cols, 0)
    return transpose(basis.to_dense())


def column_space(A):
    """Basis of the image of A, returned as the columns of a matrix."""
    rows, cols = A.shape
    if rows == 0 or cols == 0 or A.is_zero_matrix:
        return zeros(rows, 0)
    _, pivots = A.rref()
    return A.to_dense().extract(list(range(rows)), list(pivots))


def hstack(*matrices):
    rows = matrices[0].shape[0]
    blocks = [M.to_dense() for M in matrices if M.shape[1]]
    if any(M.shape[0] != rows for M in matrices):
        raise ValueError('hstack needs equal row counts')
    if not blocks:
        return zeros(rows, 0)
    if rows == 0:
        return zeros(0, sum(M.shape[1] for M in blocks))
    return blocks[0].hstack(*blocks[1:]) if len(blocks) > 1 else blocks[0]


def vstack(*matrices):
    cols = matrices[0].shape[1]
    blocks = [M.to_dense() for M in matrices if M.shape[0]]
    if any(M.shape[1] != cols for M in matrices):
        raise ValueError('vstack needs equal column counts')
    if not blocks:
        return zeros(0, cols)
    if cols == 0:
        return zeros(sum(M.shape[0] for M in blocks), 0)
    return blocks[0].vstack(*blocks[1:]) if len(blocks) > 1 else blocks[0]


def block_diag(*blocks):
    rows = sum(B.shape[0] for B in blocks)
    cols = sum(B.shape[1] for B in blocks)
    values = {}
    row_offset = col_offset = 0
    for B in blocks:
        for r, row in enumerate(entries(B)):
            for c, value in enumerate(row):
                if value:
                    values[(row_offset + r, col_offset + c)] = value
        row_offset += B.shape[0]
        col_offset += B.shape[1]
    return sparse(values, (rows, cols)).to_dense()


def inverse(A):
    if A.shape[0] != A.shape[1]:
        raise ValueError(f'cannot invert a {A.shape} matrix')
    if A.shape[0] == 0:
        return zeros(0, 0)
    return A.to_dense().inv()


def left_inverse(B):
    """A left inverse of a matrix with independent columns."""
    if B.shape[1] == 0:
        return zeros(0, B.shape[0])
    Bt = transpose(B)
    return mul(inverse(mul(Bt, B)), Bt)


def solve_in_span(B, v):
    """Coordinates x with B x = v, or None when v is outside the column span of B."""
    if B.shape[1] == 0:
        return zeros(0, v.shape[1]) if is_zero(v) else None
    x = mul(left_inverse(B), v)
    return x if equal(mul(B, x), v) else None


def is_nilpotent(N):
    # N^(2^k) with 2^k >= n
    result, exponent = N, 1
    while exponent < N.shape[0]:
        result, exponent = mul(result, result), 2 * exponent
    return is_zero(result)
