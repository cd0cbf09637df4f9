# -*- coding: utf-8 -*-

"""Operators on the levelled modules: α, β, β₀, eᵢ, qᵢ, E, φ and the
telescoping identities built from them.

``relative_set`` arguments name the vertices playing the role of S;
they default to the regular set of the vector's graph.
"""

from __future__ import unicode_literals

from kgraph.core.lib import regular_set
from kgraph.lib.exceptions import PreconditionError
from .vectors import Level0Vector, LevelledVector


def _domain(graph, relative_set):
    if relative_set is None:
        return regular_set(graph)
    return frozenset(relative_set)


def _check_support(vector, domain):
    outside = sorted(vector.vertices() - set(domain))
    if outside:
        raise PreconditionError(
            "support meets vertex {} outside the relative set".format(
                outside[0]))


def shift(f, j):
    """α^j: (α^j f)(x, n) = f(x, n - j)."""
    return LevelledVector(f.graph, dict(
        ((vertex, level + j), value)
        for (vertex, level), value in f.items()))


def beta0(x, relative_set=None):
    """β₀(δ_v) = Σ_{e ∈ vE¹} δ_{t(e)}, for x supported on S."""
    graph = x.graph
    _check_support(x, _domain(graph, relative_set))
    data = {}
    for vertex, value in x.items():
        for edge in graph.out_edges(vertex):
            data[edge.terminus] = data.get(edge.terminus, 0) + value
    return Level0Vector(graph, data)


def beta(f, relative_set=None):
    """β acts levelwise as β₀, for f supported on S × ℤ."""
    graph = f.graph
    _check_support(f, _domain(graph, relative_set))
    data = {}
    for (vertex, level), value in f.items():
        for edge in graph.out_edges(vertex):
            key = (edge.terminus, level)
            data[key] = data.get(key, 0) + value
    return LevelledVector(graph, data)


def e_proj(f, i):
    """eᵢ: keep level i only."""
    return LevelledVector(f.graph, dict(
        (key, value) for key, value in f.items() if key[1] == i))


def q_proj(f, i):
    """qᵢ = Σ_{j ≤ i} eⱼ: keep levels up to i."""
    return LevelledVector(f.graph, dict(
        (key, value) for key, value in f.items() if key[1] <= i))


def total(f):
    """E(f) = Σᵢ fᵢ."""
    data = {}
    for (vertex, _), value in f.items():
        data[vertex] = data.get(vertex, 0) + value
    return Level0Vector(f.graph, data)


def embed(x):
    """φ(x): x placed at level 0."""
    return LevelledVector(x.graph, dict(
        ((vertex, 0), value) for vertex, value in x.items()))


def one_minus_alpha_beta(h, relative_set=None):
    """(1 - αβ)h, the generators of I."""
    return h - shift(beta(h, relative_set), 1)


def one_minus_alpha_inverse(g):
    """(1 - α⁻¹)g."""
    return g - shift(g, -1)


def telescope(f):
    """T(f) = -Σ_{j<0} α^{-j} q_j f + Σ_{j≥0} α^{-j} (1 - q_j) f.

    Both sums are finite: q_j f vanishes below the lowest level of f
    and (1 - q_j) f vanishes from its highest level on.
    (1 - α⁻¹)(T f) = f - φ(E f).
    """
    result = LevelledVector.zero(f.graph)
    if not f:
        return result
    for j in range(f.min_level, 0):
        result = result - shift(q_proj(f, j), -j)
    for j in range(0, f.max_level):
        result = result + shift(f - q_proj(f, j), -j)
    return result


def solve_telescoping(r):
    """The finitely supported g with (1 - α⁻¹)g = r.

    g_n = Σ_{i ≥ n} r_i; it exists only when E(r) = 0.
    """
    if total(r):
        raise PreconditionError(
            "no finitely supported solution: E(r) = {!r}".format(total(r)))
    graph = r.graph
    if not r:
        return LevelledVector.zero(graph)
    slices = {}
    running = Level0Vector.zero(graph)
    for level in range(r.max_level, r.min_level, -1):
        running = running + r.slice(level)
        slices[level] = running
    return LevelledVector.from_slices(graph, slices)
