"""
Django settings for test_project project.

kgraph only needs the application registry, the template engine and
the logging configuration: there is no database, no URL and no
middleware.
"""

from __future__ import unicode_literals

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.realpath(os.path.dirname(os.path.dirname(__file__)))

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = "kgraph-test-project-not-secret"

DEBUG = "DEBUG" in os.environ

# Application definition

# A dedicated place to register kgraph applications
# Do not change the order.
KGRAPH_APPS = (
    "kgraph.lib",
    "kgraph.parameters",
    "kgraph.core",
    "kgraph.zmodule",
    "kgraph.afcore",
    "kgraph.ktheory",
)

INSTALLED_APPS = KGRAPH_APPS

DATABASES = {}

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "debug": DEBUG,
        },
    },
]

# Internationalization

LANGUAGE_CODE = "en-us"

USE_I18N = True

# kgraph settings

# Overrides of the registered global parameters, per application:
# KGRAPH_PARAMETERS = {
#     "zmodule": {"membership_extra_steps": 128},
#     "ktheory": {"limit_window": 4},
# }
KGRAPH_PARAMETERS = {}

# Logging configuration

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "kgraph": {
            "format": "%(name)s: %(levelname)s %(message)s"
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "kgraph"
        },
    },
    "loggers": {
        "kgraph": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False
        },
    }
}
