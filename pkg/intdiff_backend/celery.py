import os
from celery import Celery
from celery.schedules import crontab

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'intdiff_backend.settings')

app = Celery('intdiff_backend')

# Using a string here means the worker doesn't have to serialize
# the configuration object to child processes.
app.config_from_object('django.conf:settings', namespace='CELERY')

# Load task modules from all registered Django apps.
app.autodiscover_tasks()

# Nightly regression sweep of the operator arithmetic against the oracle
app.conf.beat_schedule = {
    'nightly-relation-suite': {
        'task': 'oracle.tasks.run_relation_suite',
        'schedule': crontab(hour=2, minute=0),
        'kwargs': {'max_index': 8},
    },
    'nightly-product-sweep': {
        'task': 'oracle.tasks.run_product_sweep',
        'schedule': crontab(hour=2, minute=30),
        'kwargs': {'seed': 0},
    },
}

app.conf.timezone = 'UTC'
