# -*- coding: utf-8 -*-

"""Directed multigraphs, paths, relative graphs and chains.

Every object defined here is immutable once built: collections are
stored as tuples/frozensets and the constructors validate everything.
Vertex and edge identifiers are opaque strings; vertices are always
ordered lexicographically by identifier.
"""

from __future__ import unicode_literals

import collections

from kgraph.lib.exceptions import (
    AdmissibilityError, BadRequest, Conflict, NotFound
)

Edge = collections.namedtuple("Edge", ["id", "origin", "terminus"])


class Graph(object):
    """A finite directed multigraph with infinite-emitter flags.

    :param vertices: iterable of vertex identifiers
    :param edges: iterable of ``Edge`` (or ``(id, origin, terminus)``)
    :param infinite_emitters: vertices emitting infinitely many edges
        in the ambient graph
    """

    def __init__(self, vertices, edges=(), infinite_emitters=()):
        vertices = list(vertices)
        seen = set()
        for vertex in vertices:
            if vertex in seen:
                raise Conflict("duplicate vertex {}".format(vertex))
            seen.add(vertex)
        self._vertices = tuple(sorted(vertices))
        self._vertex_set = frozenset(vertices)

        by_id = {}
        for edge in edges:
            edge = Edge(*edge)
            if edge.id in by_id:
                raise Conflict("duplicate edge {}".format(edge.id))
            for end in (edge.origin, edge.terminus):
                if end not in self._vertex_set:
                    raise NotFound(
                        "edge {} references undeclared vertex {}".format(
                            edge.id, end))
            by_id[edge.id] = edge
        self._edges = tuple(by_id[eid] for eid in sorted(by_id))
        self._edge_map = by_id

        flags = frozenset(infinite_emitters)
        for vertex in flags:
            if vertex not in self._vertex_set:
                raise NotFound("flagged vertex {} is not declared".format(
                    vertex))
        self._infinite_emitters = flags

        out_edges = dict((v, []) for v in self._vertices)
        in_edges = dict((v, []) for v in self._vertices)
        for edge in self._edges:
            out_edges[edge.origin].append(edge)
            in_edges[edge.terminus].append(edge)
        self._out = dict((v, tuple(e)) for v, e in out_edges.items())
        self._in = dict((v, tuple(e)) for v, e in in_edges.items())

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def infinite_emitters(self):
        return self._infinite_emitters

    def __contains__(self, vertex):
        return vertex in self._vertex_set

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._vertices == other._vertices and
            self._edges == other._edges and
            self._infinite_emitters == other._infinite_emitters
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._vertices, self._edges, self._infinite_emitters))

    def __repr__(self):
        return "<Graph: {} vertices, {} edges>".format(
            len(self._vertices), len(self._edges))

    def check_vertex(self, vertex):
        """Raise ``NotFound`` if vertex is not declared."""
        if vertex not in self._vertex_set:
            raise NotFound("unknown vertex {}".format(vertex))

    def edge(self, edge_id):
        try:
            return self._edge_map[edge_id]
        except KeyError:
            raise NotFound("unknown edge {}".format(edge_id))

    def has_edge(self, edge_id):
        return edge_id in self._edge_map

    def out_edges(self, vertex):
        """Listed edges e with o(e) = vertex, ordered by identifier."""
        self.check_vertex(vertex)
        return self._out[vertex]

    def in_edges(self, vertex):
        """Listed edges e with t(e) = vertex, ordered by identifier."""
        self.check_vertex(vertex)
        return self._in[vertex]

    def is_flagged(self, vertex):
        self.check_vertex(vertex)
        return vertex in self._infinite_emitters

    def is_regular(self, vertex):
        """Finite nonempty listed out-degree and no infinite flag."""
        return bool(self.out_edges(vertex)) and not self.is_flagged(vertex)

    def is_source(self, vertex):
        return not self.in_edges(vertex)

    def sources(self):
        return tuple(v for v in self._vertices if not self._in[v])

    def fresh_identifier(self, base, taken=None):
        """Return an identifier not used by any vertex or edge."""
        if taken is None:
            taken = self._vertex_set | frozenset(self._edge_map)
        if base not in taken:
            return base
        counter = 1
        while "{}{}".format(base, counter) in taken:
            counter += 1
        return "{}{}".format(base, counter)

    def is_subgraph_of(self, other):
        """Id-wise inclusion of vertices and edges."""
        if not self._vertex_set <= other._vertex_set:
            return False
        for edge in self._edges:
            if other._edge_map.get(edge.id) != edge:
                return False
        return True


class Path(object):
    """A composable sequence of edges (a vertex is a path of length 0)."""

    def __init__(self, edges, vertex=None):
        edges = tuple(Edge(*edge) for edge in edges)
        for first, second in zip(edges, edges[1:]):
            if first.terminus != second.origin:
                raise BadRequest(
                    "edges {} and {} are not composable".format(
                        first.id, second.id))
        if not edges and vertex is None:
            raise BadRequest("an empty path needs a vertex")
        if edges and vertex is not None and vertex != edges[0].origin:
            raise BadRequest("vertex {} is not the origin of the path".format(
                vertex))
        self.edges = edges
        self.origin = edges[0].origin if edges else vertex
        self.terminus = edges[-1].terminus if edges else vertex

    @classmethod
    def from_vertex(cls, vertex):
        return cls((), vertex=vertex)

    def __len__(self):
        return len(self.edges)

    @property
    def length(self):
        return len(self.edges)

    def extend(self, edge):
        """Return the path followed by edge."""
        return Path(self.edges + (edge, ), vertex=self.origin)

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return (self.edges, self.origin) == (other.edges, other.origin)

    def __hash__(self):
        return hash((self.edges, self.origin))

    def __repr__(self):
        if not self.edges:
            return "<Path: {}>".format(self.origin)
        return "<Path: {}>".format(" ".join(e.id for e in self.edges))


class IncidenceMatrix(object):
    """Square matrix of edge (or path) counts indexed by vertices.

    ``matrix[x, y]`` is the number of listed edges from x to y (for a
    power, the number of paths of that length).
    """

    def __init__(self, vertices, rows, infinite_rows=()):
        self.vertices = tuple(vertices)
        self.rows = tuple(tuple(row) for row in rows)
        self.infinite_rows = frozenset(infinite_rows)
        self._index = dict((v, i) for i, v in enumerate(self.vertices))

    def index(self, vertex):
        try:
            return self._index[vertex]
        except KeyError:
            raise NotFound("unknown vertex {}".format(vertex))

    def __getitem__(self, key):
        x, y = key
        return self.rows[self.index(x)][self.index(y)]

    def __eq__(self, other):
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        return (self.vertices, self.rows) == (other.vertices, other.rows)

    def __hash__(self):
        return hash((self.vertices, self.rows))

    def __repr__(self):
        return "<IncidenceMatrix: {}x{}>".format(
            len(self.vertices), len(self.vertices))

    def row(self, vertex):
        """Row of vertex as a dict (zero entries omitted)."""
        return dict(
            (y, value) for y, value in zip(self.vertices,
                                           self.rows[self.index(vertex)])
            if value)

    def column(self, vertex):
        """Column of vertex as a dict (zero entries omitted)."""
        j = self.index(vertex)
        return dict(
            (x, row[j]) for x, row in zip(self.vertices, self.rows)
            if row[j])

    def multiply(self, other):
        size = len(self.vertices)
        rows = []
        for i in range(size):
            left = self.rows[i]
            rows.append([
                sum(left[k] * other.rows[k][j] for k in range(size) if left[k])
                for j in range(size)
            ])
        return IncidenceMatrix(self.vertices, rows, self.infinite_rows)

    @classmethod
    def identity(cls, vertices, infinite_rows=()):
        vertices = tuple(vertices)
        rows = [[int(i == j) for j in range(len(vertices))]
                for i in range(len(vertices))]
        return cls(vertices, rows, infinite_rows)


class RelativeGraph(object):
    """A graph together with the vertices where the full Cuntz-Krieger
    relation is imposed.

    :param graph: a ``Graph``
    :param relative_set: vertices of S_F; defaults to the regular set
    """

    def __init__(self, graph, relative_set=None):
        self.graph = graph
        if relative_set is None:
            relative_set = [v for v in graph.vertices if graph.is_regular(v)]
        relative_set = frozenset(relative_set)
        for vertex in sorted(relative_set):
            graph.check_vertex(vertex)
            if graph.is_flagged(vertex):
                raise BadRequest(
                    "vertex {} is an infinite emitter and cannot be "
                    "saturated".format(vertex))
            if not graph.out_edges(vertex):
                raise BadRequest(
                    "vertex {} emits no edge and cannot be saturated".format(
                        vertex))
        self.relative_set = relative_set

    @classmethod
    def toeplitz(cls, graph):
        """The relative graph with S_F = ∅."""
        return cls(graph, ())

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def relative_vertices(self):
        """S_F, sorted."""
        return tuple(sorted(self.relative_set))

    @property
    def defect_vertices(self):
        """F^0 \\ S_F, sorted."""
        return tuple(
            v for v in self.graph.vertices if v not in self.relative_set)

    def __eq__(self, other):
        if not isinstance(other, RelativeGraph):
            return NotImplemented
        return (self.graph, self.relative_set) == (
            other.graph, other.relative_set)

    def __hash__(self):
        return hash((self.graph, self.relative_set))

    def __repr__(self):
        return "<RelativeGraph: {!r}, S_F={}>".format(
            self.graph, list(self.relative_vertices))


class Chain(object):
    """An admissible nested sequence of relative graphs F_1 ⊆ ... ⊆ F_N.

    Admissibility: vertices, edges, flags and relative sets never
    shrink, and no later stage adds an out-edge at a vertex that is
    already saturated.
    """

    def __init__(self, stages):
        self.stages = tuple(stages)
        if not self.stages:
            raise BadRequest("a chain needs at least one stage")
        for index in range(1, len(self.stages)):
            self._check_step(index)

    def _check_step(self, index):
        previous, current = self.stages[index - 1], self.stages[index]
        stage = index + 1
        pgraph, cgraph = previous.graph, current.graph
        for vertex in pgraph.vertices:
            if vertex not in cgraph:
                raise AdmissibilityError(
                    stage, "vertex {}".format(vertex), "vertex removed")
        for edge in pgraph.edges:
            if not cgraph.has_edge(edge.id):
                raise AdmissibilityError(
                    stage, "edge {}".format(edge.id), "edge removed")
            if cgraph.edge(edge.id) != edge:
                raise AdmissibilityError(
                    stage, "edge {}".format(edge.id), "edge endpoints changed")
        for vertex in sorted(pgraph.infinite_emitters):
            if not cgraph.is_flagged(vertex):
                raise AdmissibilityError(
                    stage, "vertex {}".format(vertex),
                    "infinite-emitter flag removed")
        for vertex in previous.relative_vertices:
            if vertex not in current.relative_set:
                raise AdmissibilityError(
                    stage, "vertex {}".format(vertex),
                    "vertex left the relative set")
            before = set(e.id for e in pgraph.out_edges(vertex))
            after = set(e.id for e in cgraph.out_edges(vertex))
            if before != after:
                added = sorted(after - before)
                raise AdmissibilityError(
                    stage, "vertex {}".format(vertex),
                    "out-edge {} added at a saturated vertex".format(
                        added[0]))

    def __len__(self):
        return len(self.stages)

    def __iter__(self):
        return iter(self.stages)

    def __getitem__(self, index):
        return self.stages[index]

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.stages == other.stages

    def __hash__(self):
        return hash(self.stages)

    def __repr__(self):
        return "<Chain: {} stages>".format(len(self.stages))
