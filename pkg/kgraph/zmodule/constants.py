# -*- coding: utf-8 -*-

"""zmodule constants."""

from __future__ import unicode_literals

YES = "yes"
NO = "no"
UNKNOWN = "unknown"

SUPPORT_LEAVES_S = "support-leaves-S"
FORCED_CYCLE = "forced-cycle"

DEFAULT_PARAMETERS = {
    "membership_extra_steps": 64,
}
