"""
WSGI config for the w22_engine project.

It exposes the WSGI callable as a module-level variable named ``application``.
"""

import os

from django.core.wsgi import get_wsgi_application


os.environ.setdefault("DJANGO_SETTINGS_MODULE", "w22_engine.settings")

application = get_wsgi_application()
