# -*- coding: utf-8 -*-

"""afcore constants."""

from __future__ import unicode_literals

DEFECT = "defect"
FULL = "full"

DEFAULT_PARAMETERS = {
    "max_cutoff": 4,
}
