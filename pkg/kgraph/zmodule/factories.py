# -*- coding: utf-8 -*-

"""Factories for random vectors."""

from __future__ import unicode_literals

import random

import factory

from kgraph.core.factories import BouquetFactory
from kgraph.parameters import tools as param_tools
from .vectors import Level0Vector, LevelledVector


def _core_parameter(name):
    return factory.LazyFunction(
        lambda: param_tools.get_global_parameter(name, app="core"))


def _draw_levelled(o):
    vertices = sorted(o.vertices if o.vertices is not None
                      else o.graph.vertices)
    data = {}
    if not vertices:
        return data
    for _ in range(o.rng.randint(0, o.terms)):
        vertex = o.rng.choice(vertices)
        level = o.rng.randint(o.min_level, o.max_level)
        value = o.rng.randint(-o.coefficient_range, o.coefficient_range)
        data[(vertex, level)] = data.get((vertex, level), 0) + value
    return data


def _draw_level0(o):
    vertices = sorted(o.vertices if o.vertices is not None
                      else o.graph.vertices)
    data = {}
    if not vertices:
        return data
    for _ in range(o.rng.randint(0, o.terms)):
        vertex = o.rng.choice(vertices)
        value = o.rng.randint(-o.coefficient_range, o.coefficient_range)
        data[vertex] = data.get(vertex, 0) + value
    return data


class LevelledVectorFactory(factory.Factory):
    """A random ``LevelledVector``.

    ``vertices`` restricts the support (pass the regular set to draw
    an element of W); levels default to ``[-level_range,
    level_range]``.
    """

    class Meta(object):
        model = LevelledVector

    class Params:
        rng = factory.LazyFunction(random.Random)
        vertices = None
        terms = 6
        level_range = _core_parameter("level_range")
        min_level = factory.LazyAttribute(lambda o: -o.level_range)
        max_level = factory.LazyAttribute(lambda o: o.level_range)
        coefficient_range = _core_parameter("coefficient_range")

    graph = factory.LazyFunction(BouquetFactory)
    coefficients = factory.LazyAttribute(_draw_levelled)


class Level0VectorFactory(factory.Factory):
    """A random ``Level0Vector``."""

    class Meta(object):
        model = Level0Vector

    class Params:
        rng = factory.LazyFunction(random.Random)
        vertices = None
        terms = 4
        coefficient_range = _core_parameter("coefficient_range")

    graph = factory.LazyFunction(BouquetFactory)
    coefficients = factory.LazyAttribute(_draw_level0)
