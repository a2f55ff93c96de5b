"""
JSON documents for windowed modules.

    {"base_weight": "1/2", "lo": -3, "hi": 3,
     "boundary": {"lo": "truncated", "hi": "truncated"},
     "spaces": [{"dim": 2, "N": [["0", "0"], ["1", "0"]], "D": null, "U": [...]}, ...]}

Matrix entries are exact "p/q" strings, rows first. Shapes follow from the
dimensions, so empty matrices need no extra bookkeeping.
"""
import json
import logging

from jsonschema import Draft7Validator

from kernel import linalg
from kernel.exceptions import ExpressionSyntaxError, ModuleSpecError
from kernel.scalars import format_rational, parse_rational

from .window import Boundary, WeightSpace, WeightWindowModule

logger = logging.getLogger(__name__)

_RATIONAL = {'type': 'string', 'pattern': r'^-?\d+(/\d+)?$'}
_MATRIX = {'type': 'array', 'items': {'type': 'array', 'items': _RATIONAL}}
_EDGE = {'enum': [Boundary.GENUINE.value, Boundary.TRUNCATED.value]}

MODULE_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'WeightWindowModule',
    'type': 'object',
    'required': ['base_weight', 'lo', 'hi', 'boundary', 'spaces'],
    'additionalProperties': False,
    'properties': {
        'base_weight': _RATIONAL,
        'lo': {'type': 'integer'},
        'hi': {'type': 'integer'},
        'boundary': {
            'type': 'object',
            'required': ['lo', 'hi'],
            'additionalProperties': False,
            'properties': {'lo': _EDGE, 'hi': _EDGE},
        },
        'spaces': {
            'type': 'array',
            'minItems': 1,
            'items': {
                'type': 'object',
                'required': ['dim', 'N', 'D', 'U'],
                'additionalProperties': False,
                'properties': {
                    'dim': {'type': 'integer', 'minimum': 0},
                    'N': _MATRIX,
                    'D': {'oneOf': [_MATRIX, {'type': 'null'}]},
                    'U': {'oneOf': [_MATRIX, {'type': 'null'}]},
                },
            },
        },
    },
}

_validator = Draft7Validator(MODULE_SCHEMA)


def _matrix_to_json(A):
    return None if A is None else linalg.as_strings(A)


def module_to_dict(M):
    return {
        'base_weight': format_rational(M.base_weight),
        'lo': M.lo,
        'hi': M.hi,
        'boundary': {'lo': M.lower.value, 'hi': M.upper.value},
        'spaces': [
            {
                'dim': space.dim,
                'N': _matrix_to_json(space.N),
                'D': _matrix_to_json(space.D),
                'U': _matrix_to_json(space.U),
            }
            for space in M.spaces
        ],
    }


def _matrix_from_json(rows, shape, where):
    if rows is None:
        return None
    if 0 in shape:
        if len(rows) != shape[0] or any(rows):
            raise ModuleSpecError(f'{where}: expected an empty matrix of shape {shape}')
        return linalg.zeros(*shape)
    try:
        return linalg.matrix([[parse_rational(entry) for entry in row] for row in rows], shape)
    except (ValueError, ExpressionSyntaxError) as exc:
        raise ModuleSpecError(f'{where}: {exc}')


def module_from_dict(document):
    errors = sorted(_validator.iter_errors(document), key=lambda error: list(error.path))
    if errors:
        first = errors[0]
        where = '/'.join(str(part) for part in first.path) or '<root>'
        logger.warning(f'Module document rejected at {where}: {first.message}')
        raise ModuleSpecError(
            f'{where}: {first.message}',
            violations=[error.message for error in errors],
        )
    lo, hi = document['lo'], document['hi']
    spaces = document['spaces']
    if len(spaces) != hi - lo + 1:
        raise ModuleSpecError(f'window [{lo}, {hi}] needs {hi - lo + 1} spaces, got {len(spaces)}')

    dims = [space['dim'] for space in spaces]

    def dim(i):
        return dims[i - lo] if lo <= i <= hi else 0

    built = []
    for i, space in zip(range(lo, hi + 1), spaces):
        d = space['dim']
        built.append(WeightSpace(
            d,
            _matrix_from_json(space['N'], (d, d), f'spaces/{i - lo}/N'),
            _matrix_from_json(space['D'], (dim(i - 1), d), f'spaces/{i - lo}/D'),
            _matrix_from_json(space['U'], (dim(i + 1), d), f'spaces/{i - lo}/U'),
        ))
    boundary = document['boundary']
    return WeightWindowModule(
        parse_rational(document['base_weight']), lo, hi, tuple(built),
        Boundary(boundary['lo']), Boundary(boundary['hi']),
    )


def dump_module(M):
    return json.dumps(module_to_dict(M), indent=2, sort_keys=True)


def load_module(path):
    try:
        with open(path, encoding='utf-8') as handle:
            document = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise ModuleSpecError(f'cannot read module file {path}: {exc}', path=str(path))
    return module_from_dict(document)
