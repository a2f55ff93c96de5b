from fractions import Fraction

from django.test import SimpleTestCase
from sympy.polys.domains import QQ

from . import linalg
from .exceptions import ExpressionSyntaxError, InvalidModule, ModuleSpecError
from .hpoly import HPoly, hpoly_eval, hpoly_shift
from .scalars import factorial_q, floor, format_rational, is_integer, parse_rational, to_rational
from .weights import WeightClass, same_class, weight_class_of

H = HPoly.H()


class ScalarTests(SimpleTestCase):
    def test_factorials(self):
        self.assertEqual([factorial_q(n) for n in range(6)], [QQ(1), QQ(1), QQ(2), QQ(6), QQ(24), QQ(120)])

    def test_parse_rational_reduces(self):
        self.assertEqual(parse_rational('6/4'), QQ(3, 2))
        self.assertEqual(parse_rational('-3'), QQ(-3))
        self.assertEqual(parse_rational(' 2 / 6 '), QQ(1, 3))

    def test_zero_denominator_is_a_syntax_error(self):
        with self.assertRaises(ExpressionSyntaxError) as caught:
            parse_rational('1/0')
        self.assertEqual(caught.exception.position, 1)

    def test_format_rational(self):
        self.assertEqual(format_rational(QQ(-3, 6)), '-1/2')
        self.assertEqual(format_rational(4), '4')

    def test_to_rational_accepts_fractions(self):
        self.assertEqual(to_rational(Fraction(5, 10)), QQ(1, 2))
        with self.assertRaises(TypeError):
            to_rational(True)

    def test_floor_of_negative_fraction(self):
        self.assertEqual(floor(QQ(-1, 2)), -1)
        self.assertEqual(floor(QQ(7, 2)), 3)
        self.assertTrue(is_integer(QQ(4, 2)))


class HPolyTests(SimpleTestCase):
    def test_powers(self):
        f = H * QQ(1, 2) - 3
        self.assertEqual(f ** 0, HPoly.one())
        self.assertEqual(f ** 3, f * f * f)
        self.assertEqual(HPoly.zero() ** 0, HPoly.one())
        self.assertTrue((HPoly.zero() ** 2).is_zero)

    def test_shift_examples(self):
        self.assertEqual(hpoly_shift(H, 1), H + 1)
        self.assertEqual(hpoly_shift(H ** 2 - 1, -2), H ** 2 - 4 * H + 3)
        f = H ** 3 - H * QQ(1, 2)
        self.assertEqual(hpoly_shift(f, 0), f)

    def test_eval_examples(self):
        self.assertEqual(hpoly_eval(H - 1, 1), 0)
        self.assertEqual(hpoly_eval(H ** 2, QQ(3, 2)), QQ(9, 4))
        lam = QQ(2, 3)
        self.assertEqual(hpoly_eval((H - lam) ** 3, lam), 0)

    def test_shift_composes_and_commutes_with_eval(self):
        f = HPoly.from_ascending([1, -2, 0, 5])
        for a in range(-3, 4):
            for b in range(-3, 4):
                self.assertEqual(f.shift(a).shift(b), f.shift(a + b))
            for c in (QQ(0), QQ(1, 3), QQ(-4)):
                self.assertEqual(f.shift(a).eval(c), f.eval(c + a))

    def test_rational_shift(self):
        self.assertEqual((H - QQ(1, 2)).shift(QQ(1, 2)), H)

    def test_zero_polynomial(self):
        zero = H - H
        self.assertTrue(zero.is_zero)
        self.assertEqual(zero.degree, -1)
        self.assertEqual(zero.as_text(), '0')

    def test_as_text(self):
        self.assertEqual((H ** 2 - H * QQ(1, 2) + 3).as_text(), 'H^2 - 1/2*H + 3')
        self.assertEqual((-H + 1).as_text(), '-H + 1')
        self.assertEqual((H ** 3).as_text(symbol='x'), 'x^3')


class WeightClassTests(SimpleTestCase):
    def test_representatives(self):
        self.assertEqual(weight_class_of(QQ(7, 2)), WeightClass(QQ(1, 2)))
        self.assertEqual(weight_class_of(-3), WeightClass(0))
        self.assertEqual(weight_class_of(QQ(5, 3)), WeightClass(QQ(2, 3)))
        self.assertEqual(weight_class_of(QQ(-1, 3)), WeightClass(QQ(2, 3)))

    def test_classes_agree_exactly_on_integer_differences(self):
        values = [QQ(k, 6) for k in range(-12, 13)]
        for a in values:
            for b in values:
                self.assertEqual(weight_class_of(a) == weight_class_of(b), same_class(a, b))

    def test_offset_of(self):
        half = WeightClass(QQ(1, 2))
        self.assertEqual(half.offset_of(QQ(-3, 2)), -2)
        with self.assertRaises(ValueError):
            half.offset_of(1)

    def test_representative_must_lie_in_unit_interval(self):
        with self.assertRaises(ValueError):
            WeightClass(1)


class LinalgTests(SimpleTestCase):
    def test_powers(self):
        J = linalg.jordan_block(3)
        self.assertTrue(linalg.equal(linalg.power(J, 0), linalg.eye(3)))
        self.assertTrue(linalg.equal(linalg.power(J, 2), linalg.mul(J, J)))
        self.assertTrue(linalg.is_zero(linalg.power(J, 3)))
        self.assertEqual(linalg.shape(linalg.power(linalg.zeros(0, 0), 4)), (0, 0))
        with self.assertRaises(ValueError):
            linalg.power(linalg.zeros(2, 3), 2)

    def test_rank_and_nullspace(self):
        A = linalg.matrix([[1, 2, 3], [2, 4, 6]])
        self.assertEqual(linalg.rank(A), 1)
        kernel = linalg.nullspace(A)
        self.assertEqual(linalg.shape(kernel), (3, 2))
        self.assertTrue(linalg.is_zero(linalg.mul(A, kernel)))

    def test_zero_sized_matrices(self):
        empty = linalg.zeros(0, 3)
        self.assertEqual(linalg.rank(empty), 0)
        self.assertEqual(linalg.shape(linalg.mul(linalg.zeros(2, 0), empty)), (2, 3))
        self.assertEqual(linalg.shape(linalg.nullspace(empty)), (3, 3))
        self.assertEqual(linalg.shape(linalg.column_space(linalg.zeros(2, 2))), (2, 0))
        self.assertTrue(linalg.is_nilpotent(linalg.zeros(0, 0)))

    def test_jordan_block_is_nilpotent(self):
        J = linalg.jordan_block(4)
        self.assertTrue(linalg.is_nilpotent(J))
        self.assertEqual([linalg.rank(linalg.power(J, k)) for k in range(5)], [4, 3, 2, 1, 0])
        self.assertFalse(linalg.is_nilpotent(linalg.eye(2)))

    def test_solve_in_span(self):
        B = linalg.matrix([[1], [1]])
        self.assertIsNotNone(linalg.solve_in_span(B, linalg.matrix([[3], [3]])))
        self.assertIsNone(linalg.solve_in_span(B, linalg.matrix([[1], [0]])))

    def test_block_diag_and_stacking(self):
        D = linalg.block_diag(linalg.eye(1), linalg.jordan_block(2), linalg.zeros(0, 1))
        self.assertEqual(linalg.shape(D), (3, 4))
        stacked = linalg.hstack(linalg.eye(2), linalg.zeros(2, 0), linalg.eye(2))
        self.assertEqual(linalg.shape(stacked), (2, 4))
        self.assertEqual(linalg.as_strings(linalg.scale(linalg.eye(2), QQ(1, 2))), [['1/2', '0'], ['0', '1/2']])


class ExceptionTests(SimpleTestCase):
    def test_usage_and_computation_codes(self):
        self.assertTrue(ModuleSpecError.is_usage_error)
        self.assertFalse(InvalidModule.is_usage_error)
        error = InvalidModule(violations=['index 0: N is not nilpotent'])
        self.assertEqual(error.to_dict()['error'], 'invalid-module')
        self.assertEqual(error.to_dict()['violations'], ['index 0: N is not nilpotent'])
