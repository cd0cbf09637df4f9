# -*- coding: utf-8 -*-

"""Tests for the operators on V and V₀."""

from __future__ import unicode_literals

from hypothesis import given, settings, strategies as st

from kgraph.core.factories import BouquetFactory
from kgraph.core.formats import parse_graph
from kgraph.lib.exceptions import PreconditionError
from kgraph.lib.tests import KGraphTestCase
from .. import operators as ops
from ..vectors import Level0Vector, LevelledVector

# u -> v, a loop at v and v -> w; the regular set is {u, v}
GRAPH = parse_graph(
    "vertex u\nvertex v\nvertex w\nedge a u v\nedge l v v\nedge b v w\n")

REGULAR = ("u", "v")


def levelled(vertices=GRAPH.vertices):
    return st.dictionaries(
        st.tuples(st.sampled_from(vertices), st.integers(-4, 4)),
        st.integers(-5, 5), max_size=6,
    ).map(lambda data: LevelledVector(GRAPH, data))


def level0(vertices=GRAPH.vertices):
    return st.dictionaries(
        st.sampled_from(vertices), st.integers(-5, 5), max_size=3,
    ).map(lambda data: Level0Vector(GRAPH, data))


def delta(vertex, level, coefficient=1):
    return LevelledVector.delta(GRAPH, vertex, level, coefficient)


class VectorTestCase(KGraphTestCase):

    def test_zero_coefficients_dropped(self):
        vector = LevelledVector(GRAPH, {("u", 0): 0, ("v", 1): 2})
        self.assertEqual(vector.support, (("v", 1), ))
        self.assertEqual(len(vector - vector), 0)

    def test_slices(self):
        vector = delta("u", 0) + delta("v", 0, 3) + delta("w", 2)
        self.assertEqual(vector.levels(), [0, 2])
        self.assertEqual(vector.slice(0), Level0Vector(GRAPH, {"u": 1, "v": 3}))
        self.assertEqual(
            LevelledVector.from_slices(
                GRAPH, dict((n, vector.slice(n)) for n in vector.levels())),
            vector)
        self.assertFalse(vector.lies_in(REGULAR))

    def test_arithmetic(self):
        vector = 2 * delta("u", 0) - delta("u", 0)
        self.assertVectorEqual(vector, {("u", 0): 1})
        self.assertVectorEqual(-vector, {("u", 0): -1})

    def test_mixed_spaces(self):
        with self.assertRaises(Exception):
            delta("u", 0) + Level0Vector.delta(GRAPH, "u")
        other = LevelledVector.delta(BouquetFactory(), "v", 0)
        with self.assertRaises(Exception):
            delta("v", 0) + other


class ShiftTestCase(KGraphTestCase):

    def test_shift(self):
        self.assertEqual(ops.shift(delta("v", 0), 1), delta("v", 1))

    @given(levelled(), st.integers(-6, 6))
    def test_group_action(self, f, j):
        self.assertEqual(ops.shift(f, 0), f)
        self.assertEqual(ops.shift(ops.shift(f, j), -j), f)
        self.assertEqual(ops.total(ops.shift(f, j)), ops.total(f))


class BetaTestCase(KGraphTestCase):

    def test_beta(self):
        self.assertEqual(
            ops.beta(delta("v", 0)), delta("v", 0) + delta("w", 0))
        self.assertEqual(
            ops.beta(LevelledVector.zero(GRAPH)), LevelledVector.zero(GRAPH))

    def test_beta0_o2(self):
        graph = BouquetFactory(loops=2)
        self.assertEqual(
            ops.beta0(Level0Vector.delta(graph, "v")),
            Level0Vector.delta(graph, "v", 2))

    def test_support_outside_regular_set(self):
        with self.assertRaises(PreconditionError):
            ops.beta(delta("w", 0))
        with self.assertRaises(PreconditionError):
            ops.beta0(Level0Vector.delta(GRAPH, "w"))
        with self.assertRaises(PreconditionError):
            ops.beta(delta("u", 0), relative_set=["v"])

    @given(levelled(REGULAR), st.integers(-4, 4))
    def test_commutations(self, w, i):
        self.assertEqual(ops.shift(ops.beta(w), 1),
                         ops.beta(ops.shift(w, 1)))
        self.assertEqual(ops.e_proj(ops.beta(w), i),
                         ops.beta(ops.e_proj(w, i)))
        self.assertEqual(ops.q_proj(ops.beta(w), i),
                         ops.beta(ops.q_proj(w, i)))
        self.assertEqual(ops.total(ops.beta(w)), ops.beta0(ops.total(w)))

    @given(level0(REGULAR))
    def test_embed_intertwines(self, x):
        self.assertEqual(ops.embed(ops.beta0(x)), ops.beta(ops.embed(x)))


class ProjectionTestCase(KGraphTestCase):

    def test_e_proj(self):
        self.assertEqual(ops.e_proj(delta("v", 2), 2), delta("v", 2))
        self.assertFalse(ops.e_proj(delta("v", 2), 1))

    @given(levelled(), st.integers(-5, 5))
    def test_q_proj(self, f, i):
        expected = LevelledVector.zero(GRAPH)
        for level in range(-4, i + 1):
            expected = expected + ops.e_proj(f, level)
        self.assertEqual(ops.q_proj(f, i), expected)
        self.assertEqual(ops.q_proj(ops.q_proj(f, i), i), ops.q_proj(f, i))
        self.assertEqual(ops.e_proj(ops.e_proj(f, i), i), ops.e_proj(f, i))
        if f:
            self.assertEqual(ops.q_proj(f, f.max_level), f)


class TotalTestCase(KGraphTestCase):

    def test_total(self):
        self.assertEqual(
            ops.total(delta("v", 3) + delta("v", -1)),
            Level0Vector.delta(GRAPH, "v", 2))

    def test_embed(self):
        self.assertEqual(
            ops.embed(Level0Vector.delta(GRAPH, "v")), delta("v", 0))

    @given(level0())
    def test_total_embed(self, x):
        self.assertEqual(ops.total(ops.embed(x)), x)


class TelescopeTestCase(KGraphTestCase):

    def test_level_zero_delta(self):
        f = delta("v", 0)
        self.assertFalse(ops.telescope(f))
        self.assertFalse(f - ops.embed(ops.total(f)))

    def test_level_one_delta(self):
        self.assertEqual(
            ops.one_minus_alpha_inverse(ops.telescope(delta("v", 1))),
            delta("v", 1) - delta("v", 0))

    @settings(max_examples=200)
    @given(levelled())
    def test_identity(self, f):
        self.assertEqual(
            ops.one_minus_alpha_inverse(ops.telescope(f)),
            f - ops.embed(ops.total(f)))

    def test_solve_telescoping(self):
        self.assertEqual(
            ops.solve_telescoping(delta("v", 1) - delta("v", 0)),
            delta("v", 1))
        zero = LevelledVector.zero(GRAPH)
        self.assertEqual(ops.solve_telescoping(zero), zero)

    def test_solve_telescoping_obstruction(self):
        with self.assertRaises(PreconditionError):
            ops.solve_telescoping(delta("v", 1))

    @given(levelled())
    def test_solve_inverts(self, f):
        r = f - ops.embed(ops.total(f))
        self.assertEqual(
            ops.one_minus_alpha_inverse(ops.solve_telescoping(r)), r)
