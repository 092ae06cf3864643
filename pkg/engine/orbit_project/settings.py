import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get('SECRET_KEY', 'dev-secret-key-orbit-engine-not-for-deployment')

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',
    'fti',
]

# ─────────────────────────────────────────────────────────────────────
# ENGINE
# ─────────────────────────────────────────────────────────────────────

FTI_ENGINE = {
    'CACHE_DIR': os.environ.get('FTI_CACHE_DIR', str(BASE_DIR / '.fti-cache')),
    'THREADS': int(os.environ.get('FTI_THREADS', '1')),
    'MEM_CAP': int(os.environ.get('FTI_MEM_CAP', '2000000')),
    # Coefficients iterating a larger orbit than this are only computed with --slow
    'SLOW_ORBIT_SIZE': int(os.environ.get('FTI_SLOW_ORBIT_SIZE', '400000')),
    'MEMBERSHIP_BUDGET': int(os.environ.get('FTI_MEMBERSHIP_BUDGET', '20000000')),
    'SAMPLE_MARGIN': float(os.environ.get('FTI_SAMPLE_MARGIN', '1e-3')),
    'RUN_SLOW_TESTS': os.environ.get('FTI_SLOW_TESTS', 'False').lower() == 'true',
}

# Database: the orbit cache. SQLite inside the cache directory by default.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': Path(FTI_ENGINE['CACHE_DIR']) / 'orbitcache.sqlite3',
    }
}

import dj_database_url
if 'DATABASE_URL' in os.environ:
    DATABASES['default'] = dj_database_url.config(conn_max_age=600)

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
    'COMPACT_JSON': True,
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
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'fti': {
            'handlers': ['console'],
            'level': os.environ.get('FTI_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
