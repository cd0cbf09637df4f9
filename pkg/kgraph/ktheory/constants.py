# -*- coding: utf-8 -*-

"""ktheory constants."""

from __future__ import unicode_literals

RELATIVE_SET_RELATIONS = "relative-set"
ALL_VERTICES_RELATIONS = "all-vertices"

RELATION_CHOICES = (RELATIVE_SET_RELATIONS, ALL_VERTICES_RELATIONS)

DEFAULT_PARAMETERS = {
    "limit_window": 3,
}
