# -*- coding: utf-8 -*-

"""afcore config."""

from __future__ import unicode_literals

from django.apps import AppConfig
from django.utils.translation import gettext_lazy


class AFCoreConfig(AppConfig):
    """App configuration."""

    name = "kgraph.afcore"
    verbose_name = "AF core approximants"

    def ready(self):
        from kgraph.parameters import tools as param_tools
        from . import constants, suites

        param_tools.registry.add(
            "afcore", constants.DEFAULT_PARAMETERS, gettext_lazy("AF core"))
        suites.register()
