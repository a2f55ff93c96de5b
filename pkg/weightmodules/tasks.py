from celery import shared_task
from django.conf import settings
import logging

from .suites import indecomposability_suite, splitting_sweep

logger = logging.getLogger(__name__)


@shared_task
def run_splitting_sweep(seed=None, trials=200):
    """
    Split and decompose random scrambled direct sums
    """
    seed = settings.INTDIFF_DEFAULT_SEED if seed is None else seed
    logger.info(f"Starting splitting sweep: seed={seed}, trials={trials}")
    outcome = splitting_sweep(seed, trials)
    if not outcome['passed']:
        logger.error(f"Splitting sweep failed {len(outcome['failures'])} of {trials} trials")
    return outcome


@shared_task
def run_indecomposability_suite(max_n=5):
    return indecomposability_suite(max_n)
