# -*- coding: utf-8 -*-

"""Core constants."""

from __future__ import unicode_literals

SINK = "sink"
REGULAR = "regular"
INFINITE_EMITTER = "infinite-emitter"

VERTEX_KINDS = (SINK, REGULAR, INFINITE_EMITTER)

# Base identifiers of the vertex and edge created by add_head
HEAD_VERTEX = "omega"
HEAD_EDGE = "theta"

INFINITE_FLAG = "inf"

DEFAULT_PARAMETERS = {
    "check_cases": 100,
    "check_seed": 0,
    "max_vertices": 5,
    "max_edges": 8,
    "level_range": 4,
    "coefficient_range": 5,
}
