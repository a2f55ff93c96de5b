"""
The ``intdiff`` command line.

``run_command(argv)`` returns ``(exit_code, report)`` where the report is a
JSON document: 0 on success, 1 for a computation error, 2 for a usage or
parse error. Reports contain no timings, so equal inputs give equal bytes.
"""
import argparse
import json
import logging
import os

from django.conf import settings

from kernel.exceptions import EngineError, UsageError
from oracle import tasks as oracle_tasks
from weightmodules import tasks as module_tasks
from weightmodules.homological import parse_module_spec
from weightmodules.schema import load_module

from . import reports
from .evaluation import evaluate, evaluate_polynomial

logger = logging.getLogger('intdiff')

EXIT_OK, EXIT_COMPUTATION, EXIT_USAGE = 0, 1, 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common_options():
    common = _ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None, help='random seed (default INTDIFF_DEFAULT_SEED)')
    common.add_argument('--lo', type=int, default=None, help='lowest weight offset of module windows')
    common.add_argument('--hi', type=int, default=None, help='highest weight offset of module windows')
    common.add_argument('--window', type=int, default=None, help='symmetric window [-N, N]')
    output = common.add_mutually_exclusive_group()
    output.add_argument('--json', dest='pretty', action='store_false', help='compact JSON (default)')
    output.add_argument('--pretty', dest='pretty', action='store_true', help='indented JSON')
    common.set_defaults(pretty=False)
    return common


def build_parser():
    common = _common_options()
    parser = _ArgumentParser(prog='intdiff', add_help=False)
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_ArgumentParser)

    def command(name, *arguments, help=None):
        sub = commands.add_parser(name, parents=[common], add_help=False, help=help)
        for argument in arguments:
            sub.add_argument(argument)
        return sub

    command('norm', 'expr', help='canonical form of an expression')
    command('mul', 'left', 'right', help='canonical form of a product')
    command('apply', 'expr', 'polynomial', help='act on a polynomial in x')
    grade = command('grade', 'expr', help='graded components')
    grade.add_argument('component', nargs='?', type=int, default=None)
    command('inF', 'expr', help='membership in the ideal F')
    command('b1', 'expr', help='image in the quotient B1')
    oracle = command('oracle', 'left', help='truncated action and product check')
    oracle.add_argument('right', nargs='?', default=None)
    oracle.add_argument('--size', type=int, default=None, help='truncation degree N')
    oracle.add_argument('--dump', action='store_true', help='include the matrix dump')

    module = commands.add_parser('mod', add_help=False, help='module computations')
    actions = module.add_subparsers(dest='action', required=True, parser_class=_ArgumentParser)
    for name, operands in (
        ('make', ('module',)),
        ('decompose', ('module',)),
        ('hom', ('source', 'target')),
        ('ext', ('source', 'target')),
        ('split', ('module',)),
        ('uniserial', ('module',)),
    ):
        sub = actions.add_parser(name, parents=[common], add_help=False)
        for operand in operands:
            sub.add_argument(operand)
        if name == 'make':
            sub.add_argument('--scramble', action='store_true', help='random change of basis (uses --seed)')

    selftest = command('selftest', help='relation, oracle and module suites')
    selftest.add_argument('--trials', type=int, default=None, help='random product pairs')
    selftest.add_argument('--size', type=int, default=None, help='oracle truncation degree')
    selftest.add_argument('--max-index', type=int, default=8)
    selftest.add_argument('--module-trials', type=int, default=50)
    return parser


def _seed(options):
    return settings.INTDIFF_DEFAULT_SEED if options.seed is None else options.seed


def _window(options):
    lo, hi = options.lo, options.hi
    if options.window is not None:
        lo = -options.window if lo is None else lo
        hi = options.window if hi is None else hi
    return lo, hi


def _is_file(text):
    return text.endswith('.json') or os.path.isfile(text)


def resolve_module(text, options):
    """A module from a JSON file, a spec, or specs joined by '+'."""
    if _is_file(text):
        return load_module(text)
    return reports.build_from_specs(text, *_window(options))


def _classified(text):
    if _is_file(text) or '+' in text:
        return None
    return parse_module_spec(text)


def _norm(options):
    return reports.canonical_report(evaluate(options.expr))


def _mul(options):
    return reports.product_report(evaluate(options.left), evaluate(options.right))


def _apply(options):
    return reports.apply_report(evaluate(options.expr), evaluate_polynomial(options.polynomial))


def _grade(options):
    return reports.grade_report(evaluate(options.expr), options.component)


def _in_f(options):
    return reports.membership_report(evaluate(options.expr))


def _b1(options):
    return reports.b1_report(evaluate(options.expr))


def _oracle(options):
    right = None if options.right is None else evaluate(options.right)
    return reports.oracle_report(evaluate(options.left), right, options.size, options.dump)


def _module(options):
    action = options.action
    if action == 'ext':
        return reports.ext_report(_classified(options.source), _classified(options.target))
    if action == 'hom':
        return reports.hom_report(
            resolve_module(options.source, options),
            resolve_module(options.target, options),
            _classified(options.source),
            _classified(options.target),
        )
    M = resolve_module(options.module, options)
    if action == 'make':
        return reports.make_report(M, _seed(options) if options.scramble else None)
    if action == 'decompose':
        return reports.decompose_report(M)
    if action == 'split':
        return reports.split_report(M)
    return reports.uniserial_report(M)


def _selftest(options):
    seed = _seed(options)
    trials = settings.INTDIFF_RANDOM_TRIALS if options.trials is None else options.trials
    size = settings.INTDIFF_ORACLE_DEGREE if options.size is None else options.size
    runs = [
        (oracle_tasks.run_relation_suite, {'max_index': options.max_index}),
        (oracle_tasks.run_matrix_unit_suite, {'max_index': 6}),
        (oracle_tasks.run_product_sweep, {'seed': seed, 'trials': trials, 'size': size}),
        (oracle_tasks.run_soundness_sweep, {'seed': seed}),
        (oracle_tasks.run_zero_suite, {'seed': seed}),
        (module_tasks.run_splitting_sweep, {'seed': seed, 'trials': options.module_trials}),
        (module_tasks.run_indecomposability_suite, {'max_n': 5}),
    ]
    suites = [task.apply(kwargs=kwargs).get() for task, kwargs in runs]
    return {'seed': seed, 'passed': all(suite['passed'] for suite in suites), 'suites': suites}


HANDLERS = {
    'norm': _norm,
    'mul': _mul,
    'apply': _apply,
    'grade': _grade,
    'inF': _in_f,
    'b1': _b1,
    'oracle': _oracle,
    'mod': _module,
    'selftest': _selftest,
}


def render(report, pretty=False):
    return json.dumps(report, sort_keys=True, indent=2 if pretty else None)


def run_command(argv):
    """Run one command; returns (exit code, JSON report)."""
    argv = list(argv)
    pretty = '--pretty' in argv
    try:
        options = build_parser().parse_args(argv)
        pretty = options.pretty
        report = HANDLERS[options.command](options)
    except EngineError as exc:
        code = EXIT_USAGE if exc.is_usage_error else EXIT_COMPUTATION
        logger.warning(f'intdiff {" ".join(argv)} failed: {exc.default_code}: {exc.message}')
        return code, render(exc.to_dict(), pretty)
    failed = report.get('passed') is False or report.get('ok') is False
    return (EXIT_COMPUTATION if failed else EXIT_OK), render(report, pretty)
