# -*- coding: utf-8 -*-

"""Seeded property suites for the levelled modules."""

from __future__ import unicode_literals

from kgraph.core.factories import RandomGraphFactory
from kgraph.core.graphs import RelativeGraph
from kgraph.core.lib import regular_set
from kgraph.lib.suites import SuiteResult, registry
from kgraph.ktheory.lib import b_matrix
from kgraph.ktheory.smith import kernel_basis
from . import operators as ops
from .factories import Level0VectorFactory, LevelledVectorFactory
from .membership import is_in_I
from .vectors import Level0Vector


def draw_graph(rng, graph=None):
    """The given graph, or a random one drawn from rng."""
    if graph is not None:
        return graph
    return RandomGraphFactory(rng=rng)


def draw_kernel_vector(rng, graph):
    """A random element of ker(1 - β₀) ⊆ W₀."""
    relative = RelativeGraph(graph)
    basis = kernel_basis(b_matrix(relative))
    values = [0] * len(relative.relative_vertices)
    for vector in basis:
        coeff = rng.randint(-2, 2)
        values = [a + coeff * b for a, b in zip(values, vector)]
    return Level0Vector.from_sequence(
        graph, relative.relative_vertices, values)


def check_telescope(rng, cases, graph=None):
    """f - φ(E f) = (1 - α⁻¹)(T f)."""
    result = SuiteResult("zmodule.telescope")
    for _ in range(cases):
        g = draw_graph(rng, graph)
        f = LevelledVectorFactory(rng=rng, graph=g)
        lhs = f - ops.embed(ops.total(f))
        rhs = ops.one_minus_alpha_inverse(ops.telescope(f))
        result.record(lhs == rhs, "f={!r}".format(f))
    return result


def check_kernel_lift(rng, cases, graph=None):
    """g + φ(E h) ∈ I whenever (1 - α⁻¹)g = (1 - αβ)h and
    β₀(E h) = E h."""
    result = SuiteResult("zmodule.kernel-lift")
    for _ in range(cases):
        g = draw_graph(rng, graph)
        domain = sorted(regular_set(g))
        x = draw_kernel_vector(rng, g)
        h = LevelledVectorFactory(rng=rng, graph=g, vertices=domain)
        h = h - ops.embed(ops.total(h)) + ops.embed(x)
        r = ops.one_minus_alpha_beta(h)
        lifted = ops.solve_telescoping(r) + ops.embed(ops.total(h))
        answer = is_in_I(lifted)
        result.record(answer.is_yes, "h={!r}: {}".format(h, answer))
    return result


def check_intertwining(rng, cases, graph=None):
    """(α⁻¹ - β)φ(x) = (1 - αβ)α⁻¹φ(x), hence (1 - β)φ(x) and
    (1 - α⁻¹)φ(x) agree modulo I."""
    result = SuiteResult("zmodule.intertwining")
    for _ in range(cases):
        g = draw_graph(rng, graph)
        domain = sorted(regular_set(g))
        x = Level0VectorFactory(rng=rng, graph=g, vertices=domain)
        phi = ops.embed(x)
        lhs = ops.shift(phi, -1) - ops.beta(phi)
        rhs = ops.one_minus_alpha_beta(ops.shift(phi, -1))
        difference = (phi - ops.beta(phi)) - ops.one_minus_alpha_inverse(phi)
        ok = lhs == rhs and is_in_I(difference).is_yes
        result.record(ok, "x={!r}".format(x))
    return result


def _operator_identities(g, f, w, x, i, j):
    """Yield (name, holds) for every operator identity."""
    yield "αβ=βα", ops.shift(ops.beta(w), 1) == ops.beta(ops.shift(w, 1))
    yield "α(W)⊆W", ops.shift(w, j).lies_in(regular_set(g))
    yield "eβ=βe", (ops.e_proj(ops.beta(w), i) ==
                    ops.beta(ops.e_proj(w, i)))
    yield "qβ=βq", (ops.q_proj(ops.beta(w), i) ==
                    ops.beta(ops.q_proj(w, i)))
    yield "α^j e_i=e_{i+j} α^j", (ops.shift(ops.e_proj(f, i), j) ==
                                  ops.e_proj(ops.shift(f, j), i + j))
    yield "Eα=E", ops.total(ops.shift(f, j)) == ops.total(f)
    yield "Eβ=β₀E", ops.total(ops.beta(w)) == ops.beta0(ops.total(w))
    yield "φβ₀=βφ", ops.embed(ops.beta0(x)) == ops.beta(ops.embed(x))
    yield "Eφ=1", ops.total(ops.embed(x)) == x
    yield "α^j α^-j=1", ops.shift(ops.shift(f, j), -j) == f
    partial = ops.e_proj(f, i)
    for level in f.levels():
        if level < i:
            partial = partial + ops.e_proj(f, level)
    yield "q_i=Σe_j", ops.q_proj(f, i) == partial
    yield "e_i²=e_i", ops.e_proj(ops.e_proj(f, i), i) == ops.e_proj(f, i)
    yield "q_i²=q_i", ops.q_proj(ops.q_proj(f, i), i) == ops.q_proj(f, i)


def check_operators(rng, cases, graph=None):
    """Algebraic identities between α, β, β₀, eᵢ, qᵢ, E and φ."""
    result = SuiteResult("zmodule.operators")
    for _ in range(cases):
        g = draw_graph(rng, graph)
        domain = sorted(regular_set(g))
        f = LevelledVectorFactory(rng=rng, graph=g)
        w = LevelledVectorFactory(rng=rng, graph=g, vertices=domain)
        x = Level0VectorFactory(rng=rng, graph=g, vertices=domain)
        i, j = rng.randint(-4, 4), rng.randint(-4, 4)
        failed = [name for name, holds in
                  _operator_identities(g, f, w, x, i, j) if not holds]
        result.record(not failed, "{} (f={!r}, w={!r}, x={!r}, i={}, j={})"
                      .format(", ".join(failed), f, w, x, i, j))
    return result


def register():
    registry.add("zmodule.telescope", check_telescope)
    registry.add("zmodule.kernel-lift", check_kernel_lift)
    registry.add("zmodule.intertwining", check_intertwining)
    registry.add("zmodule.operators", check_operators)
