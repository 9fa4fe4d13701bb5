"""
Django settings for the w22_engine project.

Every value can be overridden from the environment or a `.env` file through
python-decouple. The project keeps no database; the apps are pure
computations exposed as management commands and read-only JSON endpoints.
"""

import os

from decouple import config, Csv


# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='w22-engine-development-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1', cast=Csv())


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'core',
    'algebra',
    'modules',
    'characters',
    'charges',
    'griess',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'w22_engine.urls'

WSGI_APPLICATION = 'w22_engine.wsgi.application'


# Nothing is persisted
DATABASES = {}


LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'DEFAULT_PARSER_CLASSES': (
        'rest_framework.parsers.JSONParser',
    ),
    'DEFAULT_AUTHENTICATION_CLASSES': (),
    'DEFAULT_PERMISSION_CLASSES': (
        'rest_framework.permissions.AllowAny',
    ),
    'UNAUTHENTICATED_USER': None,
}


# Worker processes for Gram matrices and searches; overrides --jobs when set
W22_JOBS = config('W22_JOBS', default=0, cast=int)

# Thresholds of the finite-order growth diagnostic
GROWTH_DIAGNOSTIC = {
    'MIN_COEFFICIENTS': config('GROWTH_MIN_COEFFICIENTS', default=32, cast=int),
    'WINDOW': config('GROWTH_WINDOW', default=4, cast=int),
    'POLYNOMIAL_SPREAD': config('GROWTH_POLYNOMIAL_SPREAD', default='1/4'),
    'SUPERPOLYNOMIAL_SPREAD': config('GROWTH_SUPERPOLYNOMIAL_SPREAD', default='1/10'),
    'GRID_START': config('GROWTH_GRID_START', default=8, cast=int),
    'GRID_STEPS': config('GROWTH_GRID_STEPS', default=4, cast=int),
    'PRECISION': config('GROWTH_PRECISION', default=64, cast=int),
}

# Sizes used by the characterization pipeline
CHARACTERIZATION = {
    'SERIES_ORDER': config('PIPELINE_SERIES_ORDER', default=400, cast=int),
    'SEARCH_BOUND': config('PIPELINE_SEARCH_BOUND', default=200, cast=int),
}


# stdout carries the JSON documents of the commands, logs go to stderr
LOG_LEVEL = config('LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {'handlers': ['console'], 'level': LOG_LEVEL}
        for app in ('core', 'algebra', 'modules', 'characters', 'charges', 'griess')
    },
}
