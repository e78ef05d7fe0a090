"""
Django settings for the psumtoolkit project.

The project has no web surface: Django supplies configuration, the ORM
for the verification run store and the management-command front door.
"""

import environ
import os

env = environ.Env(DEBUG=(bool, False),)
# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(
    os.path.abspath(__file__))))

# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',
    'psum',
]

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
}

# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

FIXTURE_DIRS = [
    os.path.join(BASE_DIR, 'psum', 'tests', 'fixtures'),
]

# Search and verification limits

PSUM_WORKERS = env.int('PSUM_WORKERS', default=1)

# Wall-clock budget in seconds for `verify`; None means unbounded.
PSUM_BUDGET = env.float('PSUM_BUDGET', default=None)

PSUM_MAX_VERIFY_ORDER = env.int('PSUM_MAX_VERIFY_ORDER', default=32)

PSUM_MAX_CAYLEY_ORDER = env.int('PSUM_MAX_CAYLEY_ORDER', default=64)

PSUM_CHECKPOINT_EVERY = env.int('PSUM_CHECKPOINT_EVERY', default=500)

# Largest group orders the published computer checks reached.
PSUM_VERIFIED_RANGES = {
    ('zero_sum', 'abelian'): 27,
    ('adms', 'abelian'): 23,
    ('adms', 'cyclic'): 25,
    ('alspach', 'abelian'): 21,
    ('adms', 'all'): 19,
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'psum': {
            'handlers': ['console'],
            'level': env('PSUM_LOG_LEVEL', default='INFO'),
            'propagate': False,
        },
    },
}
