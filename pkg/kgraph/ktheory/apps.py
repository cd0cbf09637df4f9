# -*- coding: utf-8 -*-

"""ktheory config."""

from __future__ import unicode_literals

from django.apps import AppConfig
from django.utils.translation import gettext_lazy


class KTheoryConfig(AppConfig):
    """App configuration."""

    name = "kgraph.ktheory"
    verbose_name = "K-groups, induced maps and direct limits"

    def ready(self):
        from kgraph.parameters import tools as param_tools
        from . import constants

        param_tools.registry.add(
            "ktheory", constants.DEFAULT_PARAMETERS, gettext_lazy("K-theory"))
