# -*- coding: utf-8 -*-

"""Core config."""

from __future__ import unicode_literals

from django.apps import AppConfig
from django.utils.translation import gettext_lazy


def load_core_settings():
    """Register core parameters."""
    from kgraph.parameters import tools as param_tools
    from . import constants

    param_tools.registry.add(
        "core", constants.DEFAULT_PARAMETERS, gettext_lazy("Core"))


class CoreConfig(AppConfig):
    """App configuration."""

    name = "kgraph.core"
    verbose_name = "kgraph core"

    def ready(self):
        load_core_settings()

        # Import these to force registration of checks
        from . import checks  # NOQA:F401
