# -*- coding: utf-8 -*-

"""
:mod:`formats` --- Graph, chain and matrix files
-------------------------------------------------

All files are UTF-8 and line oriented; ``#`` starts a comment.

Graph file::

    vertex <id> [inf]
    edge <id> <origin> <terminus>

Chain file: repeated ``stage`` blocks. Each block adds ``vertex`` and
``edge`` lines to what the previous stages declared and may contain
``saturate <vertex>`` lines, which put the vertex into the relative
set of this stage and of every later one.

Matrix file: ``rows cols`` on the first line, then the entries in
row-major order, separated by whitespace.
"""

from __future__ import unicode_literals

import logging

from kgraph.lib.exceptions import AdmissibilityError, BadRequest, ParseError
from . import constants
from .graphs import Chain, Edge, Graph, RelativeGraph

logger = logging.getLogger("kgraph.core")


def _tokenize(text):
    """Yield (lineno, tokens) for every non-empty line."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        yield lineno, line.split()


class _Declarations(object):
    """Accumulate vertex/edge declarations with their line numbers.

    A vertex is declared once per scope (a graph file or a chain
    stage). A later stage may declare it again only to add the
    ``inf`` flag.
    """

    def __init__(self):
        self.vertices = {}
        self.edges = {}
        self.flags = set()
        self.scope = set()

    def new_scope(self):
        self.scope = set()

    def vertex(self, lineno, tokens):
        if len(tokens) not in (2, 3):
            raise ParseError(lineno, "expected 'vertex <id> [inf]'")
        vid = tokens[1]
        flagged = len(tokens) == 3
        if flagged and tokens[2] != constants.INFINITE_FLAG:
            raise ParseError(
                lineno, "unknown vertex flag '{}'".format(tokens[2]))
        if vid in self.scope or (
                vid in self.vertices and (not flagged or vid in self.flags)):
            raise ParseError(lineno, "duplicate vertex {}".format(vid))
        self.scope.add(vid)
        self.vertices.setdefault(vid, lineno)
        if flagged:
            self.flags.add(vid)

    def edge(self, lineno, tokens):
        if len(tokens) != 4:
            raise ParseError(
                lineno, "expected 'edge <id> <origin> <terminus>'")
        eid = tokens[1]
        if eid in self.edges:
            raise ParseError(lineno, "duplicate edge {}".format(eid))
        self.edges[eid] = (lineno, Edge(*tokens[1:]))

    def build(self):
        for eid in sorted(self.edges, key=lambda e: self.edges[e][0]):
            lineno, edge = self.edges[eid]
            for end in (edge.origin, edge.terminus):
                if end not in self.vertices:
                    raise ParseError(
                        lineno, "edge {} references undeclared vertex {}"
                        .format(eid, end))
        return Graph(
            self.vertices, [edge for _, edge in self.edges.values()],
            self.flags)


def parse_graph(text):
    """Parse the content of a graph file.

    :param str text: file content
    :rtype: ``Graph``
    """
    decls = _Declarations()
    for lineno, tokens in _tokenize(text):
        if tokens[0] == "vertex":
            decls.vertex(lineno, tokens)
        elif tokens[0] == "edge":
            decls.edge(lineno, tokens)
        else:
            raise ParseError(
                lineno, "unknown directive '{}'".format(tokens[0]))
    graph = decls.build()
    logger.debug("parsed graph: %d vertices, %d edges, %d flagged",
                 len(graph.vertices), len(graph.edges),
                 len(graph.infinite_emitters))
    return graph


def _vertex_lines(graph, vertices):
    lines = []
    for vertex in vertices:
        if graph.is_flagged(vertex):
            lines.append("vertex {} {}".format(
                vertex, constants.INFINITE_FLAG))
        else:
            lines.append("vertex {}".format(vertex))
    return lines


def _edge_lines(edges):
    return ["edge {} {} {}".format(*edge) for edge in edges]


def serialize_graph(graph):
    """Emit the graph file format for graph."""
    lines = _vertex_lines(graph, graph.vertices) + _edge_lines(graph.edges)
    return "\n".join(lines) + "\n"


def parse_chain(text):
    """Parse the content of a chain file.

    Admissibility is enforced by ``Chain``; errors carry the 1-based
    stage index.

    :param str text: file content
    :rtype: ``Chain``
    """
    decls = None
    saturated = set()
    stages = []

    def close_stage():
        graph = decls.build()
        stage = len(stages) + 1
        for vertex in sorted(saturated):
            if vertex not in graph:
                raise AdmissibilityError(
                    stage, "vertex {}".format(vertex),
                    "saturated vertex is not declared")
        try:
            stages.append(RelativeGraph(graph, saturated))
        except BadRequest as inst:
            raise AdmissibilityError(stage, "relative set", str(inst))

    for lineno, tokens in _tokenize(text):
        directive = tokens[0]
        if directive == "stage":
            if len(tokens) != 1:
                raise ParseError(lineno, "expected 'stage'")
            if decls is not None:
                close_stage()
                decls.new_scope()
            else:
                decls = _Declarations()
            continue
        if decls is None:
            raise ParseError(lineno, "'{}' outside of a stage".format(
                directive))
        if directive == "vertex":
            decls.vertex(lineno, tokens)
        elif directive == "edge":
            decls.edge(lineno, tokens)
        elif directive == "saturate":
            if len(tokens) != 2:
                raise ParseError(lineno, "expected 'saturate <vertex>'")
            saturated.add(tokens[1])
        else:
            raise ParseError(
                lineno, "unknown directive '{}'".format(directive))
    if decls is None:
        raise ParseError(1, "a chain needs at least one stage")
    close_stage()
    chain = Chain(stages)
    logger.debug("parsed chain: %d stages", len(chain))
    return chain


def serialize_chain(chain):
    """Emit the chain file format; each block lists only what is new."""
    lines = []
    previous = None
    for stage in chain:
        graph = stage.graph
        lines.append("stage")
        if previous is None:
            vertices = graph.vertices
            edges = graph.edges
            saturated = stage.relative_vertices
        else:
            pgraph = previous.graph
            vertices = [
                v for v in graph.vertices
                if v not in pgraph or
                (graph.is_flagged(v) and not pgraph.is_flagged(v))]
            edges = [e for e in graph.edges if not pgraph.has_edge(e.id)]
            saturated = [v for v in stage.relative_vertices
                         if v not in previous.relative_set]
        lines += _vertex_lines(graph, vertices)
        lines += _edge_lines(edges)
        lines += ["saturate {}".format(v) for v in saturated]
        previous = stage
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    """Parse the content of a matrix file.

    :param str text: file content
    :return: the rows (lists of int) and the column count, which an
        empty row list cannot carry
    """
    values = []
    header = None
    for lineno, tokens in _tokenize(text):
        try:
            numbers = [int(token) for token in tokens]
        except ValueError:
            raise ParseError(lineno, "expected integers")
        if header is None:
            if len(numbers) != 2 or min(numbers) < 0:
                raise ParseError(lineno, "expected '<rows> <cols>'")
            header = numbers
            continue
        for number in numbers:
            values.append((lineno, number))
    if header is None:
        raise ParseError(1, "missing '<rows> <cols>' header")
    rows, cols = header
    if len(values) != rows * cols:
        lineno = values[-1][0] if values else 1
        raise ParseError(lineno, "expected {} entries, found {}".format(
            rows * cols, len(values)))
    numbers = [number for _, number in values]
    return [numbers[i * cols:(i + 1) * cols] for i in range(rows)], cols
