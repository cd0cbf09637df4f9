# -*- coding: utf-8 -*-

"""Factories for core objects (graphs and chains)."""

from __future__ import unicode_literals

import random

import factory

from kgraph.parameters import tools as param_tools
from .graphs import Chain, Edge, Graph, RelativeGraph


def _core_parameter(name):
    return factory.LazyFunction(
        lambda: param_tools.get_global_parameter(name, app="core"))


class GraphFactory(factory.Factory):
    """A factory to create Graph instances."""

    class Meta(object):
        model = Graph

    vertices = ("v", )
    edges = ()
    infinite_emitters = ()


class BouquetFactory(GraphFactory):
    """The O_n pattern: one vertex carrying ``loops`` loops."""

    class Params:
        loops = 2

    edges = factory.LazyAttribute(
        lambda o: [Edge("e{}".format(i + 1), "v", "v")
                   for i in range(o.loops)])


def _draw_graph(o):
    rng = o.rng
    size = rng.randint(1, o.max_vertices)
    vertices = ["v{}".format(i) for i in range(size)]
    # v0 never receives an edge when a source is required
    targets = vertices[1:] if o.with_source and size > 1 else vertices
    if o.with_source and size == 1:
        return vertices, [], []
    edges = []
    pairs = {}
    for i in range(rng.randint(0, o.max_edges)):
        origin = rng.choice(vertices)
        terminus = rng.choice(targets)
        count = pairs.get((origin, terminus), 0)
        if o.max_multiplicity is not None and count >= o.max_multiplicity:
            continue
        pairs[(origin, terminus)] = count + 1
        edges.append(Edge("e{}".format(i), origin, terminus))
    flags = [v for v in vertices if rng.random() < o.flag_probability]
    return vertices, edges, flags


class RandomGraphFactory(GraphFactory):
    """A random graph drawn from ``rng``.

    Sizes are bounded by the ``core`` parameters ``max_vertices`` and
    ``max_edges`` unless given explicitly.
    """

    class Params:
        rng = factory.LazyFunction(random.Random)
        max_vertices = _core_parameter("max_vertices")
        max_edges = _core_parameter("max_edges")
        max_multiplicity = None
        flag_probability = 0.0
        with_source = False
        draw = factory.LazyAttribute(_draw_graph)

    vertices = factory.LazyAttribute(lambda o: o.draw[0])
    edges = factory.LazyAttribute(lambda o: o.draw[1])
    infinite_emitters = factory.LazyAttribute(lambda o: o.draw[2])


def line_stage(size):
    """Stage ``size`` of the two-sided line through an infinite emitter.

    Vertices are -size..size; every nonzero vertex carries a loop and
    an edge pointing one step towards 0; vertex 0 is an infinite
    emitter with an edge to every other vertex. The relative set is
    every nonzero vertex.
    """
    vertices = [str(n) for n in range(-size, size + 1)]
    edges = []
    for n in range(1, size + 1):
        for signed in (n, -n):
            toward = signed - 1 if signed > 0 else signed + 1
            edges.append(Edge("loop.{}".format(signed), str(signed),
                              str(signed)))
            edges.append(Edge("down.{}".format(signed), str(signed),
                              str(toward)))
            edges.append(Edge("out.{}".format(signed), "0", str(signed)))
    graph = Graph(vertices, edges, ["0"])
    relative = [v for v in vertices if v != "0"]
    return RelativeGraph(graph, relative)


class ChainFactory(factory.Factory):
    """A factory to create Chain instances."""

    class Meta(object):
        model = Chain

    stages = factory.LazyFunction(
        lambda: [RelativeGraph(GraphFactory())])


class LineChainFactory(ChainFactory):
    """Stages 1..length of the two-sided line example."""

    class Params:
        length = 8

    stages = factory.LazyAttribute(
        lambda o: [line_stage(n) for n in range(1, o.length + 1)])


class ConstantChainFactory(ChainFactory):
    """The same relative graph repeated ``length`` times."""

    class Params:
        stage = factory.LazyFunction(lambda: RelativeGraph(BouquetFactory()))
        length = 4

    stages = factory.LazyAttribute(lambda o: [o.stage] * o.length)


class IsolatedVerticesChainFactory(ChainFactory):
    """Toeplitz stages; stage n has n isolated vertices."""

    class Params:
        length = 5

    stages = factory.LazyAttribute(
        lambda o: [
            RelativeGraph.toeplitz(
                Graph(["x{}".format(i) for i in range(n)]))
            for n in range(1, o.length + 1)])
