# -*- coding: utf-8 -*-

"""zmodule config."""

from __future__ import unicode_literals

from django.apps import AppConfig
from django.utils.translation import gettext_lazy


class ZModuleConfig(AppConfig):
    """App configuration."""

    name = "kgraph.zmodule"
    verbose_name = "Levelled integer modules"

    def ready(self):
        from kgraph.parameters import tools as param_tools
        from . import constants, suites

        param_tools.registry.add(
            "zmodule", constants.DEFAULT_PARAMETERS,
            gettext_lazy("Levelled modules"))
        suites.register()
