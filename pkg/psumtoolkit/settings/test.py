import environ
from psumtoolkit.settings.dev import *  # noqa

env = environ.Env(DEBUG=(bool, False),)

DATABASES = {
    'default': env.db('TEST_DATABASE_URL', default='sqlite://:memory:'),
}

LOGGING['loggers']['psum']['level'] = env(  # noqa
    'PSUM_LOG_LEVEL', default='ERROR')
