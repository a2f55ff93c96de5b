"""
JSON-ready reports shared by the command line and the HTTP API.
"""
from django.conf import settings

from kernel.exceptions import UsageError
from oracle.action import action_matrix, check_product
from operators.b1 import project_to_B1
from operators.canonical import apply, grade_component, grades, in_D1, is_in_F, op_mul
from weightmodules.constructors import direct_sum, random_scramble
from weightmodules.decomposition import decompose, submodule_chain
from weightmodules.homological import ModuleSpec, ext_dim, hom_dim, parse_module_spec
from weightmodules.morphisms import hom_window
from weightmodules.schema import module_to_dict
from weightmodules.submodules import split_complement

from .printing import b1_text, polynomial_text, pretty_print


def canonical_report(a):
    return {'canonical': pretty_print(a)}


def product_report(left, right):
    return canonical_report(op_mul(left, right))


def apply_report(a, p):
    return {'result': polynomial_text(apply(a, p))}


def grade_report(a, component=None):
    if component is not None:
        return {'grade': component, 'component': pretty_print(grade_component(a, component))}
    return {'components': {str(k): pretty_print(grade_component(a, k)) for k in grades(a)}}


def membership_report(a):
    return {'in_F': is_in_F(a), 'in_D1': in_D1(a)}


def b1_report(a):
    return {'b1': b1_text(project_to_B1(a))}


def oracle_report(left, right=None, size=None, dump=False):
    size = settings.INTDIFF_ORACLE_DEGREE if size is None else size
    if right is None:
        action = action_matrix(left, size)
        return {
            'size': size,
            'valid_columns': sorted(action.valid_columns),
            'matrix': action.dump().splitlines(),
        }
    report = check_product(left, right, size).to_dict()
    if dump:
        report['matrix'] = action_matrix(op_mul(left, right), size).dump().splitlines()
    return report


def build_from_specs(text, lo=None, hi=None):
    """Specs joined by '+' on one class, all on one window of weight offsets."""
    specs = [parse_module_spec(part) for part in text.split('+')]
    lo = min(spec.default_window()[0] for spec in specs) if lo is None else lo
    hi = max(spec.default_window()[1] for spec in specs) if hi is None else hi
    return direct_sum(*(spec.build(lo, hi) for spec in specs))


def make_report(M, scramble_seed=None):
    if scramble_seed is not None:
        M = random_scramble(M, scramble_seed)
    return {'module': module_to_dict(M), 'dims': M.dims(), 'valid': M.is_valid()}


def decompose_report(M):
    report = decompose(M)
    return {**report.to_dict(), 'length': report.length}


def split_report(M):
    _, report = split_complement(M)
    return {**report.to_dict(), 'decomposition': decompose(M).to_dict()}


def uniserial_report(M):
    chain = submodule_chain(M)
    return {
        'uniserial': chain is not None,
        'chain': None if chain is None else [submodule.dims() for submodule in chain],
        'chain_length': None if chain is None else len(chain),
    }


def hom_report(A, B, source_spec=None, target_spec=None):
    """Window dimension always; the closed formula too when both sides are classified specs."""
    window = hom_window(A, B)
    if isinstance(source_spec, ModuleSpec) and isinstance(target_spec, ModuleSpec):
        return {'dim': hom_dim(source_spec, target_spec), 'window_dim': window}
    return {'dim': window, 'window_dim': window}


def ext_report(source_spec, target_spec):
    if not (isinstance(source_spec, ModuleSpec) and isinstance(target_spec, ModuleSpec)):
        raise UsageError('Ext is computed between classified modules, "Kx" or "M(n,lam)"')
    return ext_dim(source_spec, target_spec).to_dict()
