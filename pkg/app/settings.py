"""
Django settings for the paclab project.

Numerical defaults shared by the management commands and the API live in the
PACLAB dict at the bottom of this file. Every key can be overridden through an
environment variable named PACLAB_<KEY>.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'SECRET_KEY',
    'paclab-dev-0k4@t7z!c2v8b^y1m3x&u6q9w5e0r#l2n8p4s7d1f3g6h9j',
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('DEBUG', '1') == '1'

ALLOWED_HOSTS = [
    host for host in os.environ.get('ALLOWED_HOSTS', '').split(',') if host
]


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'rest_framework',
    'rest_framework.authtoken',
    'channel',
    'codec',
    'decoders',
    'spectrum',
    'construct',
    'sim',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'app.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'app.wsgi.application'


# Database
# postgres when DB_HOST is given (docker-compose), a local sqlite file otherwise

if os.environ.get('DB_HOST'):
    DATABASES = {
        'default': {
            'ENGINE': 'django.db.backends.postgresql',
            'HOST': os.environ.get('DB_HOST'),
            'NAME': os.environ.get('DB_NAME'),
            'USER': os.environ.get('DB_USER'),
            'PASSWORD': os.environ.get('DB_PASS'),
        }
    }
else:
    DATABASES = {
        'default': {
            'ENGINE': 'django.db.backends.sqlite3',
            'NAME': os.path.join(BASE_DIR, 'db.sqlite3'),
        }
    }

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'


# Password validation
# https://docs.djangoproject.com/en/4.2/ref/settings/#auth-password-validators

AUTH_PASSWORD_VALIDATORS = [
    {
        'NAME': 'django.contrib.auth.password_validation.UserAttributeSimilarityValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.MinimumLengthValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.CommonPasswordValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.NumericPasswordValidator',
    },
]


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (CSS, JavaScript, Images)

STATIC_URL = '/static/'


# Logging

LOG_LEVEL = os.environ.get('PACLAB_LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app_name: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for app_name in (
            'channel', 'codec', 'decoders', 'spectrum', 'construct', 'sim',
        )
    },
}


# Numerical defaults

def _env(key, default, cast):
    value = os.environ.get('PACLAB_' + key)
    return default if value is None else cast(value)


PACLAB = {
    'LLR_CLAMP': _env('LLR_CLAMP', 1e6, float),
    'NOISELESS_LLR': _env('NOISELESS_LLR', 1.0, float),
    'FANO_DELTA': _env('FANO_DELTA', 2.0, float),
    'FANO_MAX_VISITS': _env('FANO_MAX_VISITS', 1_000_000, int),
    'MIN_FRAME_ERRORS': _env('MIN_FRAME_ERRORS', 100, int),
    'MAX_FRAMES': _env('MAX_FRAMES', 10_000_000, int),
    'SIM_CHUNK_FRAMES': _env('SIM_CHUNK_FRAMES', 256, int),
    'SIM_WORKERS': _env('SIM_WORKERS', 1, int),
    'PSCS_LIST_SIZE': _env('PSCS_LIST_SIZE', 20000, int),
    'PSCS_SEARCH_SIZE': _env('PSCS_SEARCH_SIZE', 400, int),
    'DEFAULT_CONV_POLY': _env('DEFAULT_CONV_POLY', '3211', str),
}
