# -*- coding: utf-8 -*-

"""Internal library for core: vertex classification, path
combinatorics, relative sets and graph surgery."""

from __future__ import unicode_literals

import collections
import logging

from kgraph.lib.exceptions import BadRequest, PreconditionError
from . import constants
from .graphs import Edge, Graph, IncidenceMatrix, Path

logger = logging.getLogger("kgraph.core")

VertexClass = collections.namedtuple("VertexClass", ["kind", "source"])


def classify_vertex(graph, vertex):
    """Classify a vertex.

    :param ``Graph`` graph: the graph
    :param str vertex: a declared vertex
    :return: a ``VertexClass`` (kind is one of sink, regular or
             infinite-emitter; source is reported independently)
    """
    graph.check_vertex(vertex)
    if graph.is_flagged(vertex):
        kind = constants.INFINITE_EMITTER
    elif graph.out_edges(vertex):
        kind = constants.REGULAR
    else:
        kind = constants.SINK
    return VertexClass(kind, graph.is_source(vertex))


def regular_set(graph):
    """Return the set S of regular (non-singular) vertices."""
    return frozenset(
        v for v in graph.vertices
        if classify_vertex(graph, v).kind == constants.REGULAR)


def incidence(graph):
    """Return the incidence matrix M of graph: M(x, y) = |xE^1y|."""
    index = dict((v, i) for i, v in enumerate(graph.vertices))
    rows = [[0] * len(graph.vertices) for _ in graph.vertices]
    for edge in graph.edges:
        rows[index[edge.origin]][index[edge.terminus]] += 1
    return IncidenceMatrix(graph.vertices, rows, graph.infinite_emitters)


def matrix_power(matrix, exponent):
    """Return M^j; entry (x, y) counts paths of length j from x to y.

    :param ``IncidenceMatrix`` matrix: the matrix
    :param int exponent: j >= 0
    """
    if exponent < 0:
        raise PreconditionError("negative power {}".format(exponent))
    result = IncidenceMatrix.identity(matrix.vertices, matrix.infinite_rows)
    base = matrix
    while exponent:
        if exponent & 1:
            result = result.multiply(base)
        exponent >>= 1
        if exponent:
            base = base.multiply(base)
    return result


def enumerate_paths(graph, origin, length, terminus=None):
    """List the paths of given length starting at origin.

    :param ``Graph`` graph: the graph
    :param str origin: first vertex
    :param int length: number of edges (>= 0)
    :param str terminus: keep only paths ending there (optional)
    :return: a list of ``Path``, in lexicographic order of edge ids
    """
    if length < 0:
        raise PreconditionError("negative path length {}".format(length))
    graph.check_vertex(origin)
    if terminus is not None:
        graph.check_vertex(terminus)
    paths = [Path.from_vertex(origin)]
    for _ in range(length):
        paths = [path.extend(edge)
                 for path in paths
                 for edge in graph.out_edges(path.terminus)]
    if terminus is not None:
        paths = [path for path in paths if path.terminus == terminus]
    return paths


def count_paths_into(graph, vertex, length):
    """Return |F^j y|, the number of paths of given length ending at vertex."""
    power = matrix_power(incidence(graph), length)
    return sum(power.column(vertex).values())


def relative_set(ambient, subgraph):
    """Return S_F for a subgraph F of E.

    S_F is the set of vertices of F that are regular in E and whose
    listed out-edges in F are exactly their out-edges in E.
    """
    if not subgraph.is_subgraph_of(ambient):
        raise BadRequest("the second graph is not a subgraph of the first")
    result = set()
    for vertex in subgraph.vertices:
        if not ambient.is_regular(vertex):
            continue
        inner = set(e.id for e in subgraph.out_edges(vertex))
        outer = set(e.id for e in ambient.out_edges(vertex))
        if inner == outer:
            result.add(vertex)
    return frozenset(result)


def add_head(graph, vertex):
    """Attach a fresh head ω -θ-> vertex at a source.

    :param ``Graph`` graph: the graph
    :param str vertex: a source of graph
    :return: a new ``Graph``
    """
    graph.check_vertex(vertex)
    if not graph.is_source(vertex):
        raise PreconditionError("vertex {} is not a source".format(vertex))
    omega = graph.fresh_identifier(constants.HEAD_VERTEX)
    taken = (frozenset(graph.vertices) | frozenset(e.id for e in graph.edges) |
             frozenset([omega]))
    theta = graph.fresh_identifier(constants.HEAD_EDGE, taken=taken)
    logger.debug("attaching head %s -%s-> %s", omega, theta, vertex)
    return Graph(
        graph.vertices + (omega, ),
        graph.edges + (Edge(theta, omega, vertex), ),
        graph.infinite_emitters
    )


def add_heads(graph, depth=1):
    """Attach a chain of ``depth`` heads to every source of graph.

    Afterwards every original vertex receives paths of every length up
    to ``depth``.
    """
    if depth < 0:
        raise PreconditionError("negative depth {}".format(depth))
    for source in graph.sources():
        top = source
        for _ in range(depth):
            before = set(graph.vertices)
            graph = add_head(graph, top)
            top = (set(graph.vertices) - before).pop()
    return graph
