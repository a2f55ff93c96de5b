from celery import shared_task
from django.conf import settings
import logging

from .suites import matrix_unit_suite, product_sweep, relation_suite, soundness_sweep, zero_suite

logger = logging.getLogger(__name__)


def _log_outcome(outcome):
    if outcome['passed']:
        logger.info(f"Suite {outcome['suite']} passed: {outcome['checked']} checks")
    else:
        logger.error(
            f"Suite {outcome['suite']} failed {len(outcome['failures'])} of {outcome['checked']} checks"
        )
    return outcome


@shared_task
def run_relation_suite(max_index=8):
    """
    Check the defining relations and the multiplication table up to max_index
    """
    logger.info(f"Starting relation suite up to index {max_index}")
    return _log_outcome(relation_suite(max_index))


@shared_task
def run_matrix_unit_suite(max_index=6):
    return _log_outcome(matrix_unit_suite(max_index))


@shared_task
def run_product_sweep(seed=None, trials=None, size=40):
    """
    Compare random products against the truncated action on K[x]
    """
    seed = settings.INTDIFF_DEFAULT_SEED if seed is None else seed
    trials = settings.INTDIFF_RANDOM_TRIALS if trials is None else trials
    logger.info(f"Starting product sweep: seed={seed}, trials={trials}, size={size}")
    return _log_outcome(product_sweep(seed, trials, size))


@shared_task
def run_soundness_sweep(seed=None, trials=200):
    seed = settings.INTDIFF_DEFAULT_SEED if seed is None else seed
    return _log_outcome(soundness_sweep(seed, trials))


@shared_task
def run_zero_suite(seed=None, trials=200):
    seed = settings.INTDIFF_DEFAULT_SEED if seed is None else seed
    return _log_outcome(zero_suite(seed, trials))
