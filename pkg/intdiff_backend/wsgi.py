"""
WSGI entry point for the intdiff API (served by gunicorn in production).
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'intdiff_backend.settings')

application = get_wsgi_application()
