# -*- coding: utf-8 -*-

"""kgraph - K-theory of graph C*-algebras, computed exactly."""

from __future__ import unicode_literals

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version(__name__)
except PackageNotFoundError:
    # package is not installed
    pass
