import os
from dotenv import load_dotenv
from pathlib import Path


load_dotenv()
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv(
    'DJANGO_SECRET_KEY',
    'django-insecure-lengthlab-local-experiments-only'
)

DEBUG = os.getenv('DEBUG', 'false').lower() == 'true'

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'core',
    'groups',
    'gstar',
    'lengths',
    'cayley',
    'genericity',
]

# Experiments never touch the ORM; SQLite only keeps the system checks happy.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('DB_NAME', str(BASE_DIR / 'db.sqlite3')),
    }
}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value not in (None, '') else default


# Budgets for every search in the library
LENGTHLAB = {
    'BALL_CAP': _env_int('LENGTHLAB_BALL_CAP', 250000),
    'MAX_RADIUS': _env_int('LENGTHLAB_MAX_RADIUS', 16),
    'DIJKSTRA_NODE_CAP': _env_int('LENGTHLAB_DIJKSTRA_NODE_CAP', 500000),
    'RAMP_CAP_LIMIT': _env_int('LENGTHLAB_RAMP_CAP_LIMIT', 40),
    'RAMP_INDEX_CAP': _env_int('LENGTHLAB_RAMP_INDEX_CAP', 20000),
    'GENERATION_RADIUS': _env_int('LENGTHLAB_GENERATION_RADIUS', 6),
    'MOSS_VERTEX_CAP': _env_int('LENGTHLAB_MOSS_VERTEX_CAP', 12000),
    'MOSS_NEIGHBOR_CAP': _env_int('LENGTHLAB_MOSS_NEIGHBOR_CAP', 3),
    'SUBSET_CAP': _env_int('LENGTHLAB_SUBSET_CAP', 65536),
    'SEARCH_RADIUS': _env_int('LENGTHLAB_SEARCH_RADIUS', 6),
    'SAMPLE_SIZE': _env_int('LENGTHLAB_SAMPLE_SIZE', 100),
    'SHOW_PROGRESS': os.getenv('LENGTHLAB_SHOW_PROGRESS', 'false').lower() == 'true',
    'ARTIFACTS_DIR': os.getenv(
        'LENGTHLAB_ARTIFACTS_DIR', str(BASE_DIR / 'artifacts')
    ),
}

# Logging Configuration
LOG_FORMAT = os.getenv('LOG_FORMAT', 'text')
LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()
LOG_FILE = os.getenv('LOG_FILE', '')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'text': {
            'format': '%(asctime)s - %(levelname)s - [%(name)s] - %(message)s',
        },
        'json': {
            '()': 'pythonjsonlogger.json.JsonFormatter',
            'fmt': '%(asctime)s %(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'json' if LOG_FORMAT == 'json' else 'text',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
}

if LOG_FILE:
    # LOG_FILE names a file under logs/
    logs_dir = os.path.join(BASE_DIR, 'logs')
    os.makedirs(logs_dir, exist_ok=True)
    LOGGING['handlers']['file'] = {
        'class': 'logging.FileHandler',
        'filename': os.path.join(logs_dir, LOG_FILE),
        'encoding': 'utf-8',
        'formatter': 'json' if LOG_FORMAT == 'json' else 'text',
    }
    LOGGING['root']['handlers'].append('file')
