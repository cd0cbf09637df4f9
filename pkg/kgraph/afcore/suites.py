# -*- coding: utf-8 -*-

"""Seeded property suites for the AF core approximants."""

from __future__ import unicode_literals

from kgraph.core.factories import RandomGraphFactory
from kgraph.core.graphs import RelativeGraph
from kgraph.core.lib import count_paths_into, incidence, matrix_power
from kgraph.lib.exceptions import VerificationError
from kgraph.lib.suites import SuiteResult, registry
from kgraph.parameters import tools as param_tools
from kgraph.zmodule.factories import LevelledVectorFactory
from kgraph.zmodule.membership import is_in_I
from kgraph.zmodule.operators import one_minus_alpha_beta
from . import constants
from .bratteli import bratteli
from .defects import (
    build_h, ck_blocks, expand_class, full, kernel_conditions, phi_eval
)


def draw_relative_graph(rng, graph=None, max_vertices=None):
    """A relative graph whose relative set is a random part of the
    regular set."""
    if graph is None:
        kwargs = {"rng": rng}
        if max_vertices is not None:
            kwargs["max_vertices"] = max_vertices
        graph = RandomGraphFactory(**kwargs)
    relative = [v for v in graph.vertices
                if graph.is_regular(v) and rng.random() < 0.5]
    return RelativeGraph(graph, relative)


def draw_cutoff(rng):
    return rng.randint(
        1, param_tools.get_global_parameter("max_cutoff", app="afcore"))


def draw_kernel_candidate(rng, f, cutoff):
    """Half of the time (1 - αβ)h for h on S_F × [0, k), else a random
    vector on F⁰ × [0, k]."""
    if rng.random() < 0.5:
        h = LevelledVectorFactory(
            rng=rng, graph=f.graph, vertices=f.relative_vertices,
            min_level=0, max_level=cutoff - 1)
        return one_minus_alpha_beta(h, f.relative_set)
    return LevelledVectorFactory(
        rng=rng, graph=f.graph, min_level=0, max_level=cutoff,
        coefficient_range=2)


def check_kernel_conditions(rng, cases, graph=None):
    """Φ(g) = 0 exactly when the kernel conditions hold; then build_h
    inverts 1 - αβ and g ∈ I."""
    result = SuiteResult("afcore.kernel-conditions")
    for _ in range(cases):
        f = draw_relative_graph(rng, graph, max_vertices=4)
        cutoff = draw_cutoff(rng)
        g = draw_kernel_candidate(rng, f, cutoff)
        in_kernel = kernel_conditions(g, f, cutoff)
        ok = in_kernel == (not phi_eval(g, f, cutoff))
        if ok and in_kernel:
            try:
                h = build_h(g, f, cutoff)
            except VerificationError:
                ok = False
            else:
                answer = is_in_I(g, relative_set=f.relative_set)
                ok = answer.is_yes and answer.witness == h
        result.record(ok, "f={!r}, k={}, g={!r}".format(f, cutoff, g))
    return result


def check_bratteli(rng, cases, graph=None):
    """Propagated Bratteli sizes match the blocks of every C_k."""
    result = SuiteResult("afcore.bratteli")
    for _ in range(cases):
        f = draw_relative_graph(rng, graph)
        kmax = draw_cutoff(rng)
        diagram = bratteli(f, kmax)
        ok = diagram.is_consistent()
        for k in range(1, kmax + 1):
            blocks = ck_blocks(f, k)
            power = matrix_power(incidence(f.graph), k)
            defects = sum(size for element, size in blocks
                          if element.kind == constants.DEFECT)
            paths = sum(sum(row) for row in power.rows)
            expected = sum(count_paths_into(f.graph, y, j)
                           for j in range(k) for y in f.defect_vertices)
            ok = (ok and diagram.layers[k] == blocks and
                  sum(size for _, size in blocks) == paths + defects and
                  defects == expected)
            for y in f.vertices:
                expansion = expand_class(y, 0, f, k)
                ok = ok and all(
                    expansion[full(k, z)] == power[y, z]
                    for z in f.vertices)
        result.record(ok, "f={!r}, kmax={}".format(f, kmax))
    return result


def register():
    registry.add("afcore.kernel-conditions", check_kernel_conditions)
    registry.add("afcore.bratteli", check_bratteli)
