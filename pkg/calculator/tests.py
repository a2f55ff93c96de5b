from io import StringIO
import json
import os
import random
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings
from sympy import Poly
from sympy.polys.domains import QQ

from kernel.exceptions import ExpressionSyntaxError
from operators.b1 import project_to_B1
from operators.canonical import identity, make_eij, x, zero
from oracle.suites import random_operator
from weightmodules.constructors import make_Kx
from weightmodules.schema import dump_module

from .evaluation import evaluate, evaluate_polynomial
from .grammar import Atom, Paren, Power, Product, Sum, parse, tokenize
from .printing import b1_text, polynomial_text, pretty_print
from .runner import EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE, run_command


class GrammarTests(SimpleTestCase):
    def test_tokens_keep_positions(self):
        tokens = tokenize('x + e(1,2)')
        self.assertEqual([token.position for token in tokens], [0, 2, 4, 5, 6, 7, 8, 9, 10])
        self.assertEqual(tokens[-1].kind, 'end')

    def test_tree_shapes(self):
        self.assertIsInstance(parse('x*d'), Product)
        self.assertIsInstance(parse('e(1,2)^2'), Power)
        self.assertIsInstance(parse('(x)'), Paren)
        self.assertIsInstance(parse('1/2'), Atom)
        tree = parse('-x + d')
        self.assertIsInstance(tree, Sum)
        self.assertEqual([sign for sign, _ in tree.terms], [-1, 1])

    def test_error_positions(self):
        cases = {
            'x + * d': 4,
            'e(1/2,0)': 2,
            'x $ d': 2,
            '(x + d': 6,
            'x^': 2,
            'x d': 2,
            '3*1/0': 2,
        }
        for text, position in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(ExpressionSyntaxError) as caught:
                    parse(text)
                self.assertEqual(caught.exception.position, position)


class EvaluationTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(evaluate('d*i'), identity())
        self.assertEqual(evaluate('D*I'), identity())
        self.assertEqual(evaluate('(i*d)^2'), evaluate('i*d'))
        self.assertEqual(evaluate('-x + x'), zero())
        self.assertEqual(evaluate('e(0,0)*d'), make_eij(0, 1))
        self.assertEqual(evaluate('i^2*d^2'), identity() - make_eij(0, 0) - make_eij(1, 1))

    def test_polynomials(self):
        self.assertEqual(evaluate_polynomial('x^2 - 1/2'), Poly(x ** 2 - QQ.to_sympy(QQ(1, 2)), x, domain=QQ))
        self.assertEqual(evaluate_polynomial('(1 + x)^2'), Poly((1 + x) ** 2, x, domain=QQ))
        self.assertTrue(evaluate_polynomial('x - x').is_zero)

    def test_operators_are_not_polynomials(self):
        with self.assertRaises(ExpressionSyntaxError) as caught:
            evaluate_polynomial('x + d*x')
        self.assertEqual(caught.exception.position, 4)


class PrintingTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(pretty_print(zero()), '0')
        self.assertEqual(pretty_print(evaluate('i*d')), '1 - e(0,0)')
        self.assertEqual(pretty_print(evaluate('x')), '(H - 1)*I')
        self.assertEqual(pretty_print(evaluate('H^2*D^2')), 'H^2*D^2')
        self.assertEqual(pretty_print(evaluate('3 - 1/2*e(1,0)')), '3 - 1/2*e(1,0)')
        self.assertEqual(pretty_print(evaluate('i - 2*d')), '-2*D + I')

    def test_round_trip(self):
        rng = random.Random(0)
        for _ in range(500):
            a = random_operator(rng)
            self.assertEqual(evaluate(pretty_print(a)), a)

    def test_b1_text(self):
        self.assertEqual(b1_text(project_to_B1(evaluate('x'))), '(H - 1)*D^-1')
        self.assertEqual(b1_text(project_to_B1(evaluate('i*d'))), '1')
        self.assertEqual(b1_text(project_to_B1(evaluate('d'))), 'D')
        self.assertEqual(b1_text(project_to_B1(make_eij(2, 2))), '0')

    def test_polynomial_text(self):
        self.assertEqual(polynomial_text(Poly(x ** 3 / 3 - x, x, domain=QQ)), '1/3*x^3 - x')
        self.assertEqual(polynomial_text(Poly(0, x, domain=QQ)), '0')


class RunnerTests(SimpleTestCase):
    def run_json(self, *argv):
        code, report = run_command(argv)
        return code, json.loads(report)

    def test_norm(self):
        self.assertEqual(run_command(['norm', 'i*d*i*d']), (EXIT_OK, '{"canonical": "1 - e(0,0)"}'))

    def test_operator_commands(self):
        self.assertEqual(self.run_json('mul', 'd', 'x'), (EXIT_OK, {'canonical': 'H'}))
        self.assertEqual(self.run_json('apply', 'i', 'x^2'), (EXIT_OK, {'result': '1/3*x^3'}))
        self.assertEqual(self.run_json('apply', 'e(1,2)', '1/2*x^2'), (EXIT_OK, {'result': 'x'}))
        self.assertEqual(
            self.run_json('grade', 'x + d', '1'),
            (EXIT_OK, {'grade': 1, 'component': '(H - 1)*I'}),
        )
        self.assertEqual(
            self.run_json('grade', 'x + d'),
            (EXIT_OK, {'components': {'-1': 'D', '1': '(H - 1)*I'}}),
        )
        self.assertEqual(self.run_json('inF', 'e(1,2)'), (EXIT_OK, {'in_F': True, 'in_D1': False}))
        self.assertEqual(self.run_json('b1', 'x'), (EXIT_OK, {'b1': '(H - 1)*D^-1'}))

    def test_oracle(self):
        code, report = self.run_json('oracle', 'x', 'd', '--size', '10')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report['ok'])
        code, report = self.run_json('oracle', 'd', '--size', '2')
        self.assertEqual(report['matrix'], ['0 1 0', '0 0 1', '0 0 0'])

    @override_settings(INTDIFF_MAX_DEGREE=5)
    def test_oracle_cap(self):
        code, report = self.run_json('oracle', 'x', '--size', '6')
        self.assertEqual(code, EXIT_COMPUTATION)
        self.assertEqual(report['error'], 'truncation-cap')

    def test_modules(self):
        self.assertEqual(self.run_json('mod', 'hom', 'M(2,0)', 'M(3,0)'), (EXIT_OK, {'dim': 2, 'window_dim': 2}))
        code, report = self.run_json('mod', 'ext', 'M(2,0)', 'M(3,0)')
        self.assertEqual((report['computed'], report['paper_claim']), (2, 1))
        code, report = self.run_json('mod', 'decompose', 'M(3,1/2)+M(1,1/2)')
        self.assertEqual(report['factors'], [{'n': 3, 'class': '1/2'}, {'n': 1, 'class': '1/2'}])
        code, report = self.run_json('mod', 'uniserial', 'M(3,0)')
        self.assertEqual(report['chain_length'], 4)
        code, report = self.run_json('mod', 'make', 'M(1,0)', '--scramble', '--seed', '3')
        self.assertTrue(report['valid'])

    def test_mixed_classes_cannot_be_summed(self):
        code, report = self.run_json('mod', 'decompose', 'Kx+M(3,1/2)+M(1,1/2)')
        self.assertEqual(code, EXIT_COMPUTATION)
        self.assertEqual(report['error'], 'mismatched-modules')

    def test_split(self):
        code, report = self.run_json('mod', 'split', 'Kx+M(2,0)', '--window', '7')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report['multiplicity'], 1)
        self.assertEqual(report['decomposition'], {'s': 1, 'factors': [{'n': 2, 'class': '0'}]})

    def test_module_from_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'kx.json')
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(dump_module(make_Kx(5, -5)))
            code, report = self.run_json('mod', 'decompose', path)
        self.assertEqual((code, report['s']), (EXIT_OK, 1))

    def test_usage_errors(self):
        for argv in (['norm', 'x +'], ['frobnicate'], [], ['mod', 'ext', 'Kx+M(1,0)', 'M(1,0)'], ['mod', 'hom', 'M(0,1)', 'Kx']):
            with self.subTest(argv=argv):
                self.assertEqual(run_command(argv)[0], EXIT_USAGE)

    def test_computation_errors(self):
        code, report = self.run_json('mod', 'decompose', 'M(2,0)', '--lo', '-1', '--hi', '1')
        self.assertEqual(code, EXIT_COMPUTATION)
        self.assertEqual(report['error'], 'window-too-small')

    def test_pretty_output(self):
        code, report = run_command(['norm', 'x', '--pretty'])
        self.assertEqual(report, '{\n  "canonical": "(H - 1)*I"\n}')

    def test_deterministic(self):
        argv = ['mod', 'make', 'Kx+M(2,0)', '--scramble', '--seed', '11']
        self.assertEqual(run_command(argv), run_command(argv))

    def test_selftest(self):
        code, report = self.run_json(
            'selftest', '--trials', '5', '--size', '20', '--max-index', '2', '--module-trials', '3',
        )
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report['passed'])
        self.assertEqual(len(report['suites']), 7)


class CommandTests(SimpleTestCase):
    def test_writes_the_report(self):
        out = StringIO()
        call_command('intdiff', 'norm', 'i*d', stdout=out)
        self.assertEqual(json.loads(out.getvalue()), {'canonical': '1 - e(0,0)'})

    def test_exit_status(self):
        with self.assertRaises(CommandError) as caught:
            call_command('intdiff', 'norm', 'x +', stdout=StringIO())
        self.assertEqual(caught.exception.returncode, EXIT_USAGE)
