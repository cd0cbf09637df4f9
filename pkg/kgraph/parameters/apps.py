# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from django.apps import AppConfig


class ParametersConfig(AppConfig):
    name = "kgraph.parameters"
    verbose_name = "Global parameters"
