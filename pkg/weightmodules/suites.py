"""
Randomised round trips through the module engine: build a classified
direct sum, scramble it, split it and decompose it again.
"""
import logging
import random

from kernel.scalars import to_rational

from .constructors import direct_sum, random_scramble
from .decomposition import DecompositionReport, decompose
from .homological import ModuleSpec
from .submodules import split_complement

logger = logging.getLogger(__name__)

CLASSES = ('0', '1/2', '1/3', '2/3')


def random_construction(rng, max_kx=2, max_n=4, max_factors=3):
    """Specs of a random direct sum on one class, never empty."""
    while True:
        s = rng.randint(0, max_kx)
        representative = to_rational('0' if s else rng.choice(CLASSES))
        factors = [
            ModuleSpec(rng.randint(1, max_n), representative + rng.randint(-2, 2))
            for _ in range(rng.randint(0, max_factors))
        ]
        if s or factors:
            return [ModuleSpec()] * s + factors


def expected_report(specs):
    factors = tuple((spec.n, spec.weight_class) for spec in specs if not spec.is_kx)
    return DecompositionReport(sum(spec.is_kx for spec in specs), factors)


def build_sum(specs, lo=-6, hi=6):
    return direct_sum(*(spec.build(lo, hi) for spec in specs))


def splitting_sweep(seed=0, trials=200):
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        specs = random_construction(rng)
        M = random_scramble(build_sum(specs), seed=rng.randrange(2 ** 32))
        C, report = split_complement(M)
        found = decompose(M)
        expected = expected_report(specs)
        if found != expected or report.multiplicity != expected.multiplicity:
            failures.append({
                'trial': trial,
                'construction': [str(spec) for spec in specs],
                'found': found.to_dict(),
            })
    logger.debug(f'Splitting sweep seed={seed}: {trials} trials, {len(failures)} failures')
    return {'suite': 'splitting', 'checked': trials, 'passed': not failures, 'failures': failures}


def indecomposability_suite(max_n=5, weights=('0', '1/2', '7/3')):
    failures = []
    checked = 0
    for n in range(1, max_n + 1):
        for weight in weights:
            spec = ModuleSpec(n, to_rational(weight))
            checked += 1
            report = decompose(spec.build())
            if report != DecompositionReport(0, ((n, spec.weight_class),)):
                failures.append(str(spec))
    return {'suite': 'indecomposability', 'checked': checked, 'passed': not failures, 'failures': failures}
