# -*- coding: utf-8 -*-

"""
:mod:`vectors` --- Sparse integer vectors over a graph
------------------------------------------------------

``LevelledVector`` is an element of V = C_c(E⁰ × ℤ, ℤ), stored as a
support map ``{(vertex, level): coefficient}``; ``Level0Vector`` is an
element of V₀ = C_c(E⁰, ℤ). Zero coefficients are never stored and
instances never change after construction.
"""

from __future__ import unicode_literals

from kgraph.lib.exceptions import BadRequest


class _SparseVector(object):
    """Shared storage and arithmetic."""

    def __init__(self, graph, coefficients=None):
        self.graph = graph
        data = {}
        for key, value in dict(coefficients or {}).items():
            self._check_key(key)
            value = int(value)
            if value:
                data[key] = value
        self._data = data

    def _check_key(self, key):
        raise NotImplementedError

    def _same_space(self, other):
        if not isinstance(other, type(self)):
            raise BadRequest("cannot combine {} with {}".format(
                type(self).__name__, type(other).__name__))
        if self.graph is not other.graph and self.graph != other.graph:
            raise BadRequest("vectors live over different graphs")

    def _new(self, data):
        return type(self)(self.graph, data)

    def items(self):
        """(key, coefficient) pairs, sorted by key."""
        return sorted(self._data.items())

    def keys(self):
        return sorted(self._data)

    @property
    def support(self):
        return tuple(sorted(self._data))

    def __getitem__(self, key):
        return self._data.get(key, 0)

    def __len__(self):
        return len(self._data)

    def __bool__(self):
        return bool(self._data)

    __nonzero__ = __bool__

    def __add__(self, other):
        self._same_space(other)
        data = dict(self._data)
        for key, value in other._data.items():
            data[key] = data.get(key, 0) + value
        return self._new(data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new(dict((k, -v) for k, v in self._data.items()))

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return self._new(dict((k, scalar * v) for k, v in self._data.items()))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.graph == other.graph and self._data == other._data

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self._data.items()))


class Level0Vector(_SparseVector):
    """A finitely supported function E⁰ -> ℤ.

    :param graph: the ``Graph``
    :param coefficients: mapping vertex -> int
    """

    def _check_key(self, key):
        self.graph.check_vertex(key)

    @classmethod
    def delta(cls, graph, vertex, coefficient=1):
        return cls(graph, {vertex: coefficient})

    @classmethod
    def zero(cls, graph):
        return cls(graph)

    @classmethod
    def from_sequence(cls, graph, vertices, values):
        """Build from values listed along vertices."""
        return cls(graph, dict(zip(vertices, values)))

    def as_sequence(self, vertices):
        return tuple(self[v] for v in vertices)

    def vertices(self):
        return set(self._data)

    def lies_in(self, vertices):
        """Whether the support is contained in vertices (W₀ for S)."""
        return set(self._data) <= set(vertices)

    def __repr__(self):
        terms = ["{}:{}".format(v, c) for v, c in self.items()]
        return "<Level0Vector: {}>".format(" ".join(terms) or "0")


class LevelledVector(_SparseVector):
    """A finitely supported function E⁰ × ℤ -> ℤ.

    :param graph: the ``Graph``
    :param coefficients: mapping (vertex, level) -> int
    """

    def _check_key(self, key):
        vertex, level = key
        self.graph.check_vertex(vertex)
        if not isinstance(level, int):
            raise BadRequest("level {!r} is not an integer".format(level))

    @classmethod
    def delta(cls, graph, vertex, level, coefficient=1):
        return cls(graph, {(vertex, level): coefficient})

    @classmethod
    def zero(cls, graph):
        return cls(graph)

    @classmethod
    def from_slices(cls, graph, slices):
        """Assemble a vector from ``{level: Level0Vector}``."""
        data = {}
        for level, vector in slices.items():
            for vertex, value in vector.items():
                data[(vertex, level)] = value
        return cls(graph, data)

    def levels(self):
        """Sorted levels carrying a nonzero coefficient."""
        return sorted(set(level for _, level in self._data))

    @property
    def min_level(self):
        levels = self.levels()
        return levels[0] if levels else None

    @property
    def max_level(self):
        levels = self.levels()
        return levels[-1] if levels else None

    def slice(self, level):
        """f_i: the level-i slice as a ``Level0Vector``."""
        return Level0Vector(self.graph, dict(
            (vertex, value) for (vertex, lvl), value in self._data.items()
            if lvl == level))

    def vertices(self):
        return set(vertex for vertex, _ in self._data)

    def lies_in(self, vertices):
        """Whether the support is contained in vertices × ℤ."""
        return self.vertices() <= set(vertices)

    def __repr__(self):
        terms = ["{}@{}:{}".format(v, n, c) for (v, n), c in self.items()]
        return "<LevelledVector: {}>".format(" ".join(terms) or "0")
