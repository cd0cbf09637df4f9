# -*- coding: utf-8 -*-

"""
:mod:`defects` --- Finite-dimensional approximants of the AF core
-----------------------------------------------------------------

C_k(F, S_F) is a direct sum of matrix blocks, one for every class
[ζ_j ξ_y] (a *defect* element, j < k and y outside S_F) and one for
every class [ζ_k s_y] (a *full* element). The block size is the
number of paths of length j (resp. k) ending at y. Classes are formal
symbols; only their integer combinations are computed.
"""

from __future__ import unicode_literals

import collections

from kgraph.core.lib import incidence, matrix_power
from kgraph.lib.exceptions import PreconditionError, VerificationError
from kgraph.zmodule.operators import beta0, one_minus_alpha_beta
from kgraph.zmodule.vectors import Level0Vector, LevelledVector
from . import constants

DefectBasisElement = collections.namedtuple(
    "DefectBasisElement", ["kind", "level", "vertex"])


def defect(level, vertex):
    return DefectBasisElement(constants.DEFECT, level, vertex)


def full(level, vertex):
    return DefectBasisElement(constants.FULL, level, vertex)


def render_element(element):
    """``ξ(y)@j`` for defect elements, ``s(y)@k`` for full ones."""
    if element.kind == constants.DEFECT:
        return "ξ({})@{}".format(element.vertex, element.level)
    return "s({})@{}".format(element.vertex, element.level)


def _check_cutoff(cutoff, minimum=1):
    if cutoff < minimum:
        raise PreconditionError(
            "cutoff must be at least {} (got {})".format(minimum, cutoff))


class DefectCombination(object):
    """An integer combination of basis classes of C_k(F, S_F).

    :param f: the ``RelativeGraph``
    :param int cutoff: k
    :param coefficients: mapping ``DefectBasisElement`` -> int
    """

    def __init__(self, f, cutoff, coefficients=None):
        self.relative_graph = f
        self.cutoff = cutoff
        data = {}
        for element, value in dict(coefficients or {}).items():
            element = DefectBasisElement(*element)
            self._check_element(element)
            if value:
                data[element] = value
        self._data = data

    def _check_element(self, element):
        f, k = self.relative_graph, self.cutoff
        f.graph.check_vertex(element.vertex)
        if element.kind == constants.DEFECT:
            if not 0 <= element.level < k:
                raise PreconditionError(
                    "defect level {} outside [0, {})".format(
                        element.level, k))
            if element.vertex in f.relative_set:
                raise PreconditionError(
                    "no defect class at saturated vertex {}".format(
                        element.vertex))
        elif element.kind == constants.FULL:
            if element.level != k:
                raise PreconditionError(
                    "full class at level {} instead of {}".format(
                        element.level, k))
        else:
            raise PreconditionError("unknown class kind {}".format(
                element.kind))

    def items(self):
        return sorted(self._data.items())

    def __getitem__(self, element):
        return self._data.get(DefectBasisElement(*element), 0)

    def __bool__(self):
        return bool(self._data)

    __nonzero__ = __bool__

    def __add__(self, other):
        if (other.relative_graph, other.cutoff) != (
                self.relative_graph, self.cutoff):
            raise PreconditionError(
                "combinations over different approximants")
        data = dict(self._data)
        for element, value in other._data.items():
            data[element] = data.get(element, 0) + value
        return DefectCombination(self.relative_graph, self.cutoff, data)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return DefectCombination(
            self.relative_graph, self.cutoff,
            dict((e, scalar * v) for e, v in self._data.items()))

    def __eq__(self, other):
        if not isinstance(other, DefectCombination):
            return NotImplemented
        return (self.relative_graph == other.relative_graph and
                self.cutoff == other.cutoff and self._data == other._data)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __str__(self):
        if not self._data:
            return "0"
        return " ".join("{:+d}·{}".format(value, render_element(element))
                        for element, value in self.items())

    def __repr__(self):
        return "<DefectCombination: {}>".format(self)


def path_powers(f, upto):
    """[M_F^0, ..., M_F^upto]."""
    matrix = incidence(f.graph)
    result = [matrix_power(matrix, 0)]
    for _ in range(upto):
        result.append(result[-1].multiply(matrix))
    return result


def ck_blocks(f, cutoff):
    """Blocks of C_k(F, S_F) with their sizes.

    :param f: the ``RelativeGraph``
    :param int cutoff: k >= 1
    :return: a sorted list of (``DefectBasisElement``, size)
    """
    _check_cutoff(cutoff)
    return blocks_at(f, cutoff, path_powers(f, cutoff))


def blocks_at(f, cutoff, powers):
    """Blocks of C_k from precomputed powers (k = 0 allowed)."""
    result = []
    for level in range(cutoff):
        for vertex in f.defect_vertices:
            size = sum(powers[level].column(vertex).values())
            result.append((defect(level, vertex), size))
    for vertex in f.vertices:
        size = sum(powers[cutoff].column(vertex).values())
        result.append((full(cutoff, vertex), size))
    return sorted(result)


def ck_dimension(f, cutoff):
    """Σ size² over the blocks of C_k(F, S_F)."""
    return sum(size * size for _, size in ck_blocks(f, cutoff))


def expand_class(vertex, level, f, cutoff):
    """Expansion of [ζ_n s_x] in C_k(F, S_F).

    Coefficient M_F^{j-n}(x, y) on [ζ_j ξ_y] (n <= j < k, y outside
    S_F) and M_F^{k-n}(x, y) on [ζ_k s_y].
    """
    _check_cutoff(cutoff)
    f.graph.check_vertex(vertex)
    if not 0 <= level <= cutoff:
        raise PreconditionError("level {} outside [0, {}]".format(
            level, cutoff))
    powers = path_powers(f, cutoff - level)
    data = {}
    for j in range(level, cutoff):
        row = powers[j - level].row(vertex)
        for y in f.defect_vertices:
            data[defect(j, y)] = row.get(y, 0)
    for y, value in powers[cutoff - level].row(vertex).items():
        data[full(cutoff, y)] = value
    return DefectCombination(f, cutoff, data)


def _check_range(g, f, cutoff):
    _check_cutoff(cutoff)
    for vertex, level in g.keys():
        f.graph.check_vertex(vertex)
        if not 0 <= level <= cutoff:
            raise PreconditionError(
                "support at level {} outside [0, {}]".format(level, cutoff))


def phi_eval(g, f, cutoff):
    """Φ(g) = Σ g(x, i)·[ζ_i s_x] expanded in C_k(F, S_F).

    :param ``LevelledVector`` g: supported on F⁰ × [0, k]
    :rtype: ``DefectCombination``
    """
    _check_range(g, f, cutoff)
    result = DefectCombination(f, cutoff)
    for (vertex, level), value in g.items():
        result = result + expand_class(vertex, level, f, cutoff).scale(value)
    return result


def _partial_sums(g, f, cutoff):
    """p_j = Σ_{i ≤ j} A^{j-i} g_i for 0 <= j <= k (A = M_Fᵗ)."""
    graph = f.graph
    result = []
    previous = Level0Vector.zero(graph)
    for level in range(cutoff + 1):
        pushed = {}
        for vertex, value in previous.items():
            for edge in graph.out_edges(vertex):
                pushed[edge.terminus] = pushed.get(edge.terminus, 0) + value
        current = g.slice(level) + Level0Vector(graph, pushed)
        result.append(current)
        previous = current
    return result


def kernel_conditions(g, f, cutoff):
    """Whether p_j(y) = 0 for y outside S_F and j < k, and p_k = 0.

    Equivalent to ``phi_eval(g, f, cutoff)`` being zero.
    """
    _check_range(g, f, cutoff)
    sums = _partial_sums(g, f, cutoff)
    for level in range(cutoff):
        if not sums[level].lies_in(f.relative_set):
            return False
    return not sums[cutoff]


def build_h(g, f, cutoff):
    """Solve (1 - αβ)h = g with h supported on S_F × [0, k).

    h_0 = g_0 and h_i = g_i + β₀(h_{i-1}); the result is checked by
    evaluating (1 - αβ)h.

    :raises VerificationError: when g violates the kernel conditions
    """
    _check_range(g, f, cutoff)
    graph = f.graph
    slices = {}
    previous = Level0Vector.zero(graph)
    for level in range(cutoff):
        current = g.slice(level) + beta0(previous, f.relative_set)
        if not current.lies_in(f.relative_set):
            raise VerificationError(
                "h_{} leaves the relative set".format(level))
        slices[level] = current
        previous = current
    h = LevelledVector.from_slices(graph, slices)
    if one_minus_alpha_beta(h, f.relative_set) != g:
        raise VerificationError("(1 - αβ)h differs from g")
    return h
