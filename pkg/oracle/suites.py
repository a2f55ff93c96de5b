"""
Batch checks of the operator arithmetic against the polynomial action.

Each suite returns a JSON-friendly summary; failures are listed, never
raised, so a sweep always reports how far it got.
"""
import logging
import random

from sympy import Poly
from sympy.polys.domains import QQ

from kernel import linalg
from kernel.hpoly import HPoly
from kernel.scalars import factorial_q
from operators.canonical import (
    apply, commutator, h_poly, identity, make_eij, op_mul, op_sub, v, x, zero,
)
from operators.generators import DEL, HGEN, INT, X, Eij
from operators.words import normalize_word

from .action import action_matrix, apply_word, check_product, is_zero_certified, to_monomial_basis

logger = logging.getLogger(__name__)

LETTERS = (X, DEL, INT, HGEN)


def random_word(rng, max_length=10, max_coefficient=3, max_index=5, max_terms=3):
    word = []
    for _ in range(rng.randint(1, max_terms)):
        letters = []
        for _ in range(rng.randint(0, max_length)):
            if rng.random() < 0.2:
                letters.append(Eij(rng.randint(0, max_index), rng.randint(0, max_index)))
            else:
                letters.append(rng.choice(LETTERS))
        word.append((rng.randint(-max_coefficient, max_coefficient), tuple(letters)))
    return word


def random_operator(rng, **bounds):
    return normalize_word(random_word(rng, **bounds))


def random_polynomial(rng, max_degree=40, max_coefficient=3):
    degree = rng.randint(0, max_degree)
    coefficients = {(s,): QQ(rng.randint(-max_coefficient, max_coefficient)) for s in range(degree + 1)}
    return Poly.from_dict(coefficients, x, domain=QQ)


def _outcome(name, checked, failures, **extra):
    return {'suite': name, 'checked': checked, 'passed': not failures, 'failures': failures, **extra}


def displayed_right_rule_holds(i, j):
    """Whether e_ij D = D e_{i,j+1}; the product rule forces e_ij D = e_{i,j+1} instead."""
    return op_mul(make_eij(i, j), v(-1)) == op_mul(v(-1), make_eij(i, j + 1))


def relation_suite(max_index=8):
    """Defining relations and the multiplication table as identities of canonical forms."""
    H = h_poly(HPoly.H())
    D, I = v(-1), v(1)
    e00 = make_eij(0, 0)
    projector = identity() - op_mul(I, D)
    checks = [
        ('D*I = 1', op_mul(D, I), identity()),
        ('[H,I] = I', commutator(H, I), I),
        ('[H,D] = -D', commutator(H, D), -D),
        ('H(1-ID) = 1-ID', op_mul(H, projector), projector),
        ('(1-ID)H = 1-ID', op_mul(projector, H), projector),
        ('I*D = 1 - e(0,0)', op_mul(I, D), identity() - e00),
        ('I*H = (H-1)*I', op_mul(I, H), op_mul(H - 1, I)),
        ('H*D = D*(H-1)', op_mul(H, D), op_mul(D, H - 1)),
    ]
    for i in range(max_index + 1):
        eii = make_eij(i, i)
        checks.append((f'H*e({i},{i})', op_mul(H, eii), eii * (i + 1)))
        checks.append((f'e({i},{i})*H', op_mul(eii, H), eii * (i + 1)))
        for j in range(max_index + 1):
            eij = make_eij(i, j)
            checks.append((f'I*e({i},{j})', op_mul(I, eij), make_eij(i + 1, j)))
            checks.append((f'D*e({i},{j})', op_mul(D, eij), make_eij(i - 1, j) if i else zero()))
            checks.append((f'e({i},{j})*I', op_mul(eij, I), make_eij(i, j - 1) if j else zero()))
            checks.append((f'e({i},{j})*D', op_mul(eij, D), make_eij(i, j + 1)))
            checks.append((
                f'e({i},{j}) = I^{i}D^{j} - I^{i + 1}D^{j + 1}',
                eij,
                normalize_word([
                    (1, (INT,) * i + (DEL,) * j),
                    (-1, (INT,) * (i + 1) + (DEL,) * (j + 1)),
                ]),
            ))
            for k in range(max_index + 1):
                for l in range(max_index + 1):
                    expected = make_eij(i, l) if j == k else zero()
                    checks.append((f'e({i},{j})*e({k},{l})', op_mul(eij, make_eij(k, l)), expected))
    failures = [name for name, actual, expected in checks if actual != expected]
    displayed = sum(
        displayed_right_rule_holds(i, j)
        for i in range(max_index + 1) for j in range(max_index + 1)
    )
    return _outcome('relations', len(checks), failures, displayed_right_rule_matches=displayed)


def matrix_unit_suite(max_index=6):
    """e_ij acts as (j!/i!) E_ij in the monomial basis."""
    size = max_index + 1
    failures = []
    checked = 0
    for i in range(max_index + 1):
        for j in range(max_index + 1):
            monomial = to_monomial_basis(action_matrix(make_eij(i, j), size))
            expected = linalg.sparse({(i, j): factorial_q(j) / factorial_q(i)}, (size + 1, size + 1))
            checked += 1
            if not linalg.equal(monomial.matrix, expected.to_dense()):
                failures.append(f'e({i},{j})')
    return _outcome('matrix-units', checked, failures)


def product_sweep(seed=0, trials=1000, size=40):
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        a, b = random_operator(rng), random_operator(rng)
        result = check_product(a, b, size)
        if not result:
            failures.append({'trial': trial, 'column': result.first_mismatch})
    logger.debug(f'Product sweep seed={seed}: {trials} trials, {len(failures)} failures')
    return _outcome('products', trials, failures)


def soundness_sweep(seed=0, trials=200, max_degree=40):
    """Normalizing a word and then acting agrees with acting letter by letter."""
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        word = random_word(rng)
        p = random_polynomial(rng, max_degree)
        if apply(normalize_word(word), p) != apply_word(word, p):
            failures.append({'trial': trial})
    return _outcome('soundness', trials, failures)


def zero_suite(seed=0, trials=200):
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        a = random_operator(rng)
        if not is_zero_certified(op_sub(a, a)) or is_zero_certified(a) != a.is_zero:
            failures.append({'trial': trial})
    return _outcome('zero-certificate', trials, failures)
