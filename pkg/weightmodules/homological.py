"""
Hom and Ext between the classified modules K[x] and M(n, lam).

Specs are written "Kx" or "M(n,lam)" with lam a rational literal.
"""
from dataclasses import dataclass
import logging
import re

from kernel import linalg
from kernel.exceptions import ExpressionSyntaxError, ModuleSpecError
from kernel.scalars import ZERO, floor, format_rational, parse_rational
from kernel.weights import weight_class_of

from .constructors import make_Kx, make_M

logger = logging.getLogger(__name__)

_KX = re.compile(r'^\s*K\s*\[?\s*x\s*\]?\s*$')
_M = re.compile(r'^\s*M\s*\(\s*(\d+)\s*,\s*([^()]+?)\s*\)\s*$')


@dataclass(frozen=True)
class ModuleSpec:
    """K[x] when ``n`` is None, otherwise M(n, weight)."""

    n: int = None
    weight: object = ZERO

    @property
    def is_kx(self):
        return self.n is None

    @property
    def weight_class(self):
        return weight_class_of(self.weight)

    def default_window(self):
        """Offsets from the class representative: [-(2n+3), 2n+3], with n = 1 for K[x]."""
        n = 1 if self.is_kx else self.n
        return -(2 * n + 3), 2 * n + 3

    def build(self, lo=None, hi=None):
        """
        The module on a window of weights rep + lo .. rep + hi, where rep is the
        class representative of the weight.
        """
        default_lo, default_hi = self.default_window()
        lo = default_lo if lo is None else lo
        hi = default_hi if hi is None else hi
        if self.is_kx:
            return make_Kx(hi, lo)
        shift = floor(self.weight)
        return make_M(self.n, self.weight, lo - shift, hi - shift)

    def __str__(self):
        if self.is_kx:
            return 'Kx'
        return f'M({self.n},{format_rational(self.weight)})'


def parse_module_spec(text):
    if _KX.match(text):
        return ModuleSpec()
    match = _M.match(text)
    if match is None:
        raise ModuleSpecError(f'expected "Kx" or "M(n,lam)", got {text!r}', spec=text)
    n = int(match.group(1))
    if n < 1:
        raise ModuleSpecError(f'M(n,lam) needs n >= 1, got {n}', spec=text)
    try:
        weight = parse_rational(match.group(2))
    except ExpressionSyntaxError as exc:
        raise ModuleSpecError(f'bad weight in {text!r}: {exc.message}', spec=text)
    return ModuleSpec(n, weight)


def _as_spec(value):
    return value if isinstance(value, ModuleSpec) else parse_module_spec(value)


def hom_dim(A, B):
    """dim Hom(A, B) for classified modules."""
    A, B = _as_spec(A), _as_spec(B)
    if A.is_kx and B.is_kx:
        return 1
    if A.is_kx or B.is_kx:
        return 0
    if A.weight_class != B.weight_class:
        return 0
    return min(A.n, B.n)


@dataclass(frozen=True)
class ExtReport:
    computed: int
    claimed: int
    reason: str

    @property
    def agrees(self):
        return self.computed == self.claimed

    def to_dict(self):
        return {
            'computed': self.computed,
            'paper_claim': self.claimed,
            'agrees': self.agrees,
            'reason': self.reason,
        }


def stated_ext_dim(A, B):
    """The dimension of Ext^1(A, B) as published: K for one class, zero otherwise."""
    if A.is_kx or B.is_kx:
        return 0
    return 1 if A.weight_class == B.weight_class else 0


def ext_dim(A, B):
    """
    dim Ext^1(A, B) from the projective resolution 0 -> I1 (H - lam)^n -> I1 -> M(n, lam) -> 0.

    K[x] is projective, so Ext^1(K[x], -) = 0. Otherwise Ext^1 is the
    cokernel of (H - lam)^n on the weight lam space of B, with lam = 0 for
    the integral class.
    """
    A, B = _as_spec(A), _as_spec(B)
    claim = stated_ext_dim(A, B)
    if A.is_kx:
        return ExtReport(0, claim, 'kx-projective')
    if A.weight_class != B.weight_class:
        return ExtReport(0, claim, 'disjoint-classes')

    lam = ZERO if A.weight_class.is_integral else A.weight
    representative = B.weight_class.representative
    offset = floor(lam - representative)
    lo, hi = B.default_window()
    module = B.build(min(lo, offset - 1), max(hi, offset + 1))
    index = module.index_of(lam)
    N = module.N(index)
    computed = module.dim(index) - linalg.rank(linalg.power(N, A.n))
    logger.debug(f'Ext({A}, {B}): cokernel of N^{A.n} on weight {format_rational(lam)} has dim {computed}')
    return ExtReport(computed, claim, 'weight-space-cokernel')
