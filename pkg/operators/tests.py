import random

from django.test import SimpleTestCase
from rest_framework import status
from rest_framework.test import APIClient, APISimpleTestCase
from sympy import Poly
from sympy.polys.domains import QQ

from calculator.evaluation import evaluate
from kernel.hpoly import HPoly
from oracle.suites import random_operator

from .b1 import b1_monomial, b1_mul, project_to_B1
from .canonical import (
    CanonicalOperator, apply, commutator, grade_component, grades, h_poly, identity, in_D1,
    is_in_F, make_eij, op_add, op_mul, op_scale, v, x, zero,
)
from .generators import DEL, INT, X, Eij
from .words import normalize_word, word_from_letters

H = HPoly.H()


def poly(expr):
    return Poly(expr, x, domain=QQ)


class CanonicalFormTests(SimpleTestCase):
    def test_from_parts_drops_zeros(self):
        a = CanonicalOperator.from_parts({0: HPoly.zero(), 2: H}, {(1, 1): QQ(0), (0, 3): QQ(2)})
        self.assertEqual(a.diagonal, {2: H})
        self.assertEqual(a.matrix, {(0, 3): QQ(2)})
        self.assertTrue(CanonicalOperator.from_parts({1: HPoly.zero()}).is_zero)

    def test_negative_matrix_index_is_rejected(self):
        with self.assertRaises(ValueError):
            make_eij(-1, 0)
        with self.assertRaises(ValueError):
            Eij(0, -2)

    def test_equal_operators_have_equal_forms(self):
        self.assertEqual(evaluate('i*d + e(0,0)'), identity())
        self.assertEqual(evaluate('2*e(1,2) - e(1,2)'), make_eij(1, 2))


class MultiplicationTests(SimpleTestCase):
    def test_integral_is_a_section_of_the_derivative(self):
        self.assertEqual(op_mul(v(-1), v(1)), identity())
        self.assertEqual(op_mul(v(1), v(-1)), identity() - make_eij(0, 0))

    def test_higher_shift_products(self):
        # I^2 D^3 = D - e(0,1) - e(1,2) and I^3 D^2 = I - e(1,0) - e(2,1)
        lhs = op_mul(v(2), v(-3))
        self.assertEqual(lhs.diagonal, {-1: HPoly.one()})
        self.assertEqual(lhs.matrix, {(0, 1): QQ(-1), (1, 2): QQ(-1)})
        lhs = op_mul(v(3), v(-2))
        self.assertEqual(lhs.diagonal, {1: HPoly.one()})
        self.assertEqual(lhs.matrix, {(1, 0): QQ(-1), (2, 1): QQ(-1)})

    def test_euler_operator(self):
        self.assertEqual(evaluate('x*d'), h_poly(H - 1))
        self.assertEqual(evaluate('d*x'), h_poly(H))
        self.assertEqual(op_mul(v(1), h_poly(H)), op_mul(h_poly(H - 1), v(1)))

    def test_matrix_units_multiply_like_elementary_matrices(self):
        self.assertEqual(op_mul(make_eij(1, 2), make_eij(2, 0)), make_eij(1, 0))
        self.assertTrue(op_mul(make_eij(1, 2), make_eij(1, 0)).is_zero)

    def test_shifts_move_matrix_units(self):
        self.assertEqual(op_mul(v(1), make_eij(2, 3)), make_eij(3, 3))
        self.assertEqual(op_mul(v(-1), make_eij(2, 3)), make_eij(1, 3))
        self.assertTrue(op_mul(v(-1), make_eij(0, 3)).is_zero)
        self.assertEqual(op_mul(make_eij(2, 3), v(1)), make_eij(2, 2))
        self.assertTrue(op_mul(make_eij(2, 0), v(1)).is_zero)

    def test_right_derivative_raises_column_index(self):
        for i in range(4):
            for j in range(4):
                self.assertEqual(op_mul(make_eij(i, j), v(-1)), make_eij(i, j + 1))

    def test_H_acts_on_matrix_units_by_scalars(self):
        for i in range(5):
            for j in range(5):
                eij = make_eij(i, j)
                self.assertEqual(op_mul(h_poly(H), eij), op_scale(eij, i + 1))
                self.assertEqual(op_mul(eij, h_poly(H)), op_scale(eij, j + 1))
                self.assertEqual(commutator(h_poly(H), eij), op_scale(eij, i - j))

    def test_associativity_on_random_operators(self):
        rng = random.Random(7)
        for _ in range(40):
            a, b, c = (random_operator(rng, max_length=5) for _ in range(3))
            self.assertEqual(op_mul(op_mul(a, b), c), op_mul(a, op_mul(b, c)))

    def test_distributivity_on_random_operators(self):
        rng = random.Random(11)
        for _ in range(40):
            a, b, c = (random_operator(rng, max_length=5) for _ in range(3))
            self.assertEqual(op_mul(a, op_add(b, c)), op_add(op_mul(a, b), op_mul(a, c)))

    def test_F_is_a_two_sided_ideal(self):
        rng = random.Random(3)
        for _ in range(40):
            a = random_operator(rng, max_length=5)
            f = op_add(
                op_scale(make_eij(rng.randint(0, 4), rng.randint(0, 4)), rng.randint(1, 5)),
                make_eij(rng.randint(0, 4), rng.randint(0, 4)),
            )
            self.assertTrue(is_in_F(op_mul(a, f)))
            self.assertTrue(is_in_F(op_mul(f, a)))


class DiagonalSubalgebraTests(SimpleTestCase):
    def test_matrix_units_factor_through_e00(self):
        e00 = make_eij(0, 0)
        for i in range(6):
            for j in range(6):
                self.assertEqual(op_mul(op_mul(v(i), e00), v(-j)), make_eij(i, j))

    def test_shifts_kill_low_diagonal_units(self):
        for i in range(6):
            for j in range(6):
                ejj = make_eij(j, j)
                self.assertEqual(op_mul(ejj, v(i)).is_zero, j < i)
                self.assertEqual(op_mul(v(-i), ejj).is_zero, j < i)

    def test_kernel_on_D1_is_exactly_the_low_units(self):
        rng = random.Random(13)
        for _ in range(60):
            i = rng.randint(0, 5)
            b = HPoly(tuple(rng.randint(-2, 2) for _ in range(rng.randint(0, 3))))
            d = h_poly(b)
            for j in range(6):
                d = op_add(d, op_scale(make_eij(j, j), rng.randint(-1, 1)))
            self.assertTrue(in_D1(d))
            killed = b.is_zero and all(not d.matrix.get((j, j)) for j in range(i, 6))
            self.assertEqual(op_mul(d, v(i)).is_zero, killed)
            self.assertEqual(op_mul(v(-i), d).is_zero, killed)


class WordTests(SimpleTestCase):
    def test_x_is_shifted_integral(self):
        self.assertEqual(normalize_word(word_from_letters([X])), h_poly(H - 1, 1))

    def test_idempotent_projector(self):
        word = word_from_letters([INT, DEL, INT, DEL])
        self.assertEqual(normalize_word(word), identity() - make_eij(0, 0))

    def test_matrix_units_from_shifts(self):
        for i in range(4):
            for j in range(4):
                word = [
                    (1, (INT,) * i + (DEL,) * j),
                    (-1, (INT,) * (i + 1) + (DEL,) * (j + 1)),
                ]
                self.assertEqual(normalize_word(word), make_eij(i, j))

    def test_empty_word_sum_is_zero(self):
        self.assertEqual(normalize_word([]), zero())
        self.assertEqual(normalize_word(word_from_letters([])), identity())


class GradingTests(SimpleTestCase):
    def test_components(self):
        a = evaluate('x + d + e(2,0) + H')
        self.assertEqual(grades(a), [-1, 0, 1, 2])
        self.assertEqual(grade_component(a, 1), evaluate('x'))
        self.assertEqual(grade_component(a, 2), make_eij(2, 0))
        self.assertEqual(grade_component(a, 0), h_poly(H))
        self.assertTrue(grade_component(a, 5).is_zero)

    def test_components_sum_back(self):
        rng = random.Random(5)
        for _ in range(30):
            a = random_operator(rng, max_length=6)
            total = zero()
            for k in grades(a):
                total = op_add(total, grade_component(a, k))
            self.assertEqual(total, a)

    def test_grading_is_multiplicative(self):
        rng = random.Random(9)
        for _ in range(20):
            a, b = random_operator(rng, max_length=4), random_operator(rng, max_length=4)
            product = op_mul(a, b)
            for k in set(grades(product)) | {i + j for i in grades(a) for j in grades(b)}:
                expected = zero()
                for i in grades(a):
                    expected = op_add(expected, op_mul(grade_component(a, i), grade_component(b, k - i)))
                self.assertEqual(grade_component(product, k), expected)

    def test_derivative_square_component(self):
        a = evaluate('d^2 + H + e(1,3)')
        self.assertEqual(grade_component(a, -2), evaluate('d^2 + e(1,3)'))

    def test_membership(self):
        self.assertTrue(is_in_F(make_eij(1, 2)))
        self.assertTrue(is_in_F(evaluate('1 - i*d')))
        self.assertFalse(is_in_F(evaluate('x')))
        self.assertTrue(in_D1(evaluate('H^2 + 3*e(1,1)')))
        self.assertFalse(in_D1(make_eij(1, 2)))
        self.assertFalse(in_D1(evaluate('i')))


class B1Tests(SimpleTestCase):
    def test_projection_kills_F(self):
        self.assertTrue(project_to_B1(make_eij(3, 4)).is_zero)
        self.assertEqual(project_to_B1(evaluate('i*d')), b1_monomial(HPoly.one(), 0))
        self.assertEqual(project_to_B1(evaluate('x')), b1_monomial(H - 1, 1))

    def test_derivative_is_invertible_in_the_quotient(self):
        D, I = b1_monomial(HPoly.one(), -1), b1_monomial(HPoly.one(), 1)
        self.assertEqual(b1_mul(D, I), b1_monomial(HPoly.one(), 0))
        self.assertEqual(b1_mul(I, D), b1_monomial(HPoly.one(), 0))

    def test_twisted_commutation(self):
        D = b1_monomial(HPoly.one(), -1)
        self.assertEqual(b1_mul(D, b1_monomial(H, 0)), b1_monomial(H + 1, -1))

    def test_projection_is_a_ring_map(self):
        rng = random.Random(13)
        for _ in range(40):
            a, b = random_operator(rng, max_length=6), random_operator(rng, max_length=6)
            self.assertEqual(project_to_B1(op_mul(a, b)), b1_mul(project_to_B1(a), project_to_B1(b)))


class ActionTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(apply(v(1), x ** 2), poly(x ** 3 / 3))
        self.assertEqual(apply(make_eij(1, 2), x ** 2 / 2), poly(x))
        self.assertEqual(apply(h_poly(H), x ** 3), poly(4 * x ** 3))
        self.assertEqual(apply(evaluate('x'), x ** 2), poly(x ** 3))
        self.assertEqual(apply(v(-1), x ** 3), poly(3 * x ** 2))

    def test_derivative_of_constant_vanishes(self):
        self.assertTrue(apply(v(-1), 7).is_zero)

    def test_e00_evaluates_at_zero(self):
        self.assertEqual(apply(make_eij(0, 0), 5 + x - x ** 4), poly(5))

    def test_action_respects_products(self):
        rng = random.Random(17)
        p = poly(3 * x ** 5 - x ** 2 + QQ.to_sympy(QQ(1, 2)))
        for _ in range(30):
            a, b = random_operator(rng, max_length=5), random_operator(rng, max_length=5)
            self.assertEqual(apply(op_mul(a, b), p), apply(a, apply(b, p)))


class OperatorAPITests(APISimpleTestCase):
    def setUp(self):
        self.client = APIClient()

    def post(self, name, payload):
        return self.client.post(f'/api/v1/operators/{name}/', payload, format='json')

    def test_normalize(self):
        response = self.post('normalize', {'expr': 'i*d*i*d'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json(), {'canonical': '1 - e(0,0)'})

    def test_multiply(self):
        response = self.post('multiply', {'left': 'd', 'right': 'x'})
        self.assertEqual(response.json(), {'canonical': 'H'})

    def test_apply(self):
        response = self.post('apply', {'expr': 'i', 'polynomial': 'x^2'})
        self.assertEqual(response.json(), {'result': '1/3*x^3'})

    def test_membership(self):
        response = self.post('in-f', {'expr': 'e(1,2)'})
        self.assertEqual(response.json(), {'in_F': True, 'in_D1': False})

    def test_b1(self):
        response = self.post('b1', {'expr': 'x'})
        self.assertEqual(response.json(), {'b1': '(H - 1)*D^-1'})

    def test_syntax_error_is_a_bad_request(self):
        response = self.post('normalize', {'expr': 'i*'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertTrue(response.json()['error'])

    def test_truncation_cap_is_unprocessable(self):
        response = self.post('oracle', {'left': 'x', 'size': 10 ** 6})
        self.assertEqual(response.status_code, status.HTTP_422_UNPROCESSABLE_ENTITY)
        self.assertEqual(response.json()['error_code'], 'truncation-cap')
