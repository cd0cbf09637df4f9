# -*- coding: utf-8 -*-

from __future__ import unicode_literals

# Import these to force registration of checks
from . import settings_checks  # NOQA:F401
