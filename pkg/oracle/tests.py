import random

from django.test import SimpleTestCase, override_settings
from sympy import Poly
from sympy.polys.domains import QQ

from calculator.evaluation import evaluate
from kernel import linalg
from kernel.exceptions import TruncationCapExceeded, TruncationError
from kernel.hpoly import HPoly
from operators.canonical import h_poly, identity, make_eij, op_add, op_scale, op_sub, v, x, zero
from operators.generators import DEL, INT, X

from .action import (
    action_matrix, apply_word, check_product, is_zero_certified, to_monomial_basis,
)
from .suites import (
    displayed_right_rule_holds, matrix_unit_suite, product_sweep, random_operator, relation_suite,
    soundness_sweep, zero_suite,
)
from .tasks import run_product_sweep, run_relation_suite


class ActionMatrixTests(SimpleTestCase):
    def test_derivative_is_the_superdiagonal(self):
        action = action_matrix(v(-1), 2)
        self.assertEqual(action.dump(), '0 1 0\n0 0 1\n0 0 0')
        self.assertEqual(action.valid_columns, frozenset({0, 1, 2}))

    def test_H_is_diagonal(self):
        action = action_matrix(h_poly(HPoly.H()), 3)
        expected = linalg.matrix([[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]])
        self.assertTrue(linalg.equal(action.matrix, expected))

    def test_integral_loses_the_last_column(self):
        action = action_matrix(v(1), 3)
        self.assertEqual(action.valid_columns, frozenset({0, 1, 2}))
        self.assertEqual(action.column(0), [0, 1, 0, 0])

    def test_matrix_unit_in_monomial_basis(self):
        monomial = to_monomial_basis(action_matrix(make_eij(1, 2), 3))
        expected = linalg.sparse({(1, 2): 2}, (4, 4)).to_dense()
        self.assertTrue(linalg.equal(monomial.matrix, expected))

    def test_additive_on_valid_columns(self):
        rng = random.Random(4)
        checked = 0
        for _ in range(30):
            a, b = random_operator(rng, max_length=6), random_operator(rng, max_length=6)
            c = rng.randint(-3, 3)
            total = action_matrix(op_add(a, op_scale(b, c)), 30)
            left, right = action_matrix(a, 30), action_matrix(b, 30)
            for s in sorted(total.valid_columns & left.valid_columns & right.valid_columns):
                self.assertEqual(
                    total.column(s),
                    [p + c * q for p, q in zip(left.column(s), right.column(s))],
                )
                checked += 1
        self.assertGreater(checked, 0)

    @override_settings(INTDIFF_MAX_DEGREE=10)
    def test_cap(self):
        action_matrix(v(1), 10)
        with self.assertRaises(TruncationCapExceeded):
            action_matrix(v(1), 11)

    def test_negative_size(self):
        with self.assertRaises(TruncationError):
            action_matrix(v(1), -1)


class ProductCheckTests(SimpleTestCase):
    def test_agreeing_product(self):
        result = check_product(evaluate('x'), evaluate('d'), 10)
        self.assertTrue(result.ok)
        self.assertEqual(result.columns_checked, 10)
        self.assertIsNone(result.first_mismatch)

    def test_matrix_units(self):
        self.assertTrue(check_product(make_eij(2, 1), make_eij(1, 3), 6))
        self.assertTrue(check_product(make_eij(2, 1), v(-1), 6))

    def test_generator_pairs(self):
        self.assertTrue(check_product(evaluate('d'), evaluate('i'), 20))
        self.assertTrue(check_product(make_eij(0, 1), make_eij(1, 2), 20))

    def test_no_surviving_columns(self):
        with self.assertRaises(TruncationError):
            check_product(evaluate('x^3'), evaluate('i^3'), 5)


class ZeroCertificateTests(SimpleTestCase):
    def test_zero(self):
        self.assertTrue(is_zero_certified(zero()))
        self.assertTrue(is_zero_certified(op_sub(evaluate('i*d'), identity() - make_eij(0, 0))))

    def test_nonzero(self):
        self.assertFalse(is_zero_certified(make_eij(3, 5)))
        self.assertFalse(is_zero_certified(h_poly(HPoly.H() - 4)))
        self.assertFalse(is_zero_certified(evaluate('d^7')))

    def test_cancellation_between_parts_is_not_zero(self):
        # (H - 1) kills x^[0], e(0,0) does not
        self.assertFalse(is_zero_certified(evaluate('H - 1 + e(0,0)')))


class WordActionTests(SimpleTestCase):
    def test_letter_by_letter(self):
        p = Poly(1 + x, x, domain=QQ)
        self.assertEqual(apply_word([(1, (INT, DEL))], p), Poly(x, x, domain=QQ))
        self.assertEqual(apply_word([(2, (X, DEL))], x ** 3), Poly(6 * x ** 3, x, domain=QQ))


class SuiteTests(SimpleTestCase):
    def test_relations(self):
        outcome = relation_suite(max_index=8)
        self.assertTrue(outcome['passed'], outcome['failures'])
        self.assertEqual(outcome['displayed_right_rule_matches'], 0)

    def test_right_rule_is_never_the_displayed_one(self):
        self.assertFalse(displayed_right_rule_holds(0, 0))
        self.assertFalse(displayed_right_rule_holds(3, 1))

    def test_matrix_units(self):
        outcome = matrix_unit_suite(max_index=6)
        self.assertTrue(outcome['passed'], outcome['failures'])
        self.assertEqual(outcome['checked'], 49)

    def test_product_sweep(self):
        outcome = product_sweep(seed=0, trials=1000, size=40)
        self.assertTrue(outcome['passed'], outcome['failures'])
        self.assertEqual(outcome['checked'], 1000)

    def test_soundness(self):
        outcome = soundness_sweep(seed=0, trials=200)
        self.assertTrue(outcome['passed'], outcome['failures'])

    def test_zero_certificates(self):
        outcome = zero_suite(seed=0, trials=200)
        self.assertTrue(outcome['passed'], outcome['failures'])

    def test_sweeps_are_deterministic(self):
        self.assertEqual(product_sweep(seed=4, trials=20, size=30), product_sweep(seed=4, trials=20, size=30))


class TaskTests(SimpleTestCase):
    def test_relation_task(self):
        outcome = run_relation_suite.apply(kwargs={'max_index': 3}).get()
        self.assertTrue(outcome['passed'])

    @override_settings(INTDIFF_RANDOM_TRIALS=15, INTDIFF_DEFAULT_SEED=9)
    def test_product_task_reads_defaults_from_settings(self):
        outcome = run_product_sweep.apply(kwargs={'size': 30}).get()
        self.assertEqual(outcome['checked'], 15)
        self.assertTrue(outcome['passed'])
