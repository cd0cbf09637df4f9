# -*- coding: utf-8 -*-

"""Tests for the finite-dimensional approximants."""

from __future__ import unicode_literals

from kgraph.core.factories import BouquetFactory
from kgraph.core.graphs import RelativeGraph
from kgraph.lib.exceptions import PreconditionError, VerificationError
from kgraph.lib.suites import registry
from kgraph.lib.tests import KGraphTestCase
from kgraph.zmodule.membership import is_in_I
from kgraph.zmodule.vectors import LevelledVector
from .. import defects
from ..defects import DefectCombination, defect, full

SINK_EDGE = "vertex v\nvertex w\nedge e v w\n"


class BlocksTestCase(KGraphTestCase):

    def setUp(self):
        self.sink = RelativeGraph(self.graph(SINK_EDGE))

    def test_toeplitz_loop(self):
        f = RelativeGraph.toeplitz(BouquetFactory(loops=1))
        self.assertEqual(
            defects.ck_blocks(f, 2),
            [(defect(0, "v"), 1), (defect(1, "v"), 1), (full(2, "v"), 1)])
        self.assertEqual(defects.ck_dimension(f, 2), 3)

    def test_o2(self):
        f = RelativeGraph(BouquetFactory(loops=2))
        self.assertEqual(defects.ck_blocks(f, 1), [(full(1, "v"), 2)])
        self.assertEqual(defects.ck_dimension(f, 2), 16)

    def test_sink(self):
        self.assertEqual(
            defects.ck_blocks(self.sink, 1),
            [(defect(0, "w"), 1), (full(1, "v"), 0), (full(1, "w"), 1)])

    def test_cutoff(self):
        with self.assertRaises(PreconditionError) as ctx:
            defects.ck_blocks(self.sink, 0)
        self.assertEqual(
            str(ctx.exception), "cutoff must be at least 1 (got 0)")

    def test_render_element(self):
        self.assertEqual(defects.render_element(defect(3, "y")), "ξ(y)@3")
        self.assertEqual(defects.render_element(full(2, "y")), "s(y)@2")


class ExpandClassTestCase(KGraphTestCase):

    def setUp(self):
        self.sink = RelativeGraph(self.graph(SINK_EDGE))

    def test_sink(self):
        self.assertEqual(
            str(defects.expand_class("v", 0, self.sink, 1)), "+1·s(w)@1")
        self.assertEqual(
            str(defects.expand_class("w", 0, self.sink, 1)), "+1·ξ(w)@0")
        self.assertEqual(
            str(defects.expand_class("w", 1, self.sink, 1)), "+1·s(w)@1")

    def test_toeplitz_loop(self):
        f = RelativeGraph.toeplitz(BouquetFactory(loops=1))
        self.assertEqual(
            str(defects.expand_class("v", 0, f, 2)),
            "+1·ξ(v)@0 +1·ξ(v)@1 +1·s(v)@2")
        self.assertEqual(
            str(defects.expand_class("v", 1, f, 2)), "+1·ξ(v)@1 +1·s(v)@2")

    def test_o2_counts_paths(self):
        f = RelativeGraph(BouquetFactory(loops=2))
        expansion = defects.expand_class("v", 0, f, 3)
        self.assertEqual(expansion[full(3, "v")], 8)

    def test_level_out_of_range(self):
        with self.assertRaises(PreconditionError):
            defects.expand_class("v", 2, self.sink, 1)


class DefectCombinationTestCase(KGraphTestCase):

    def setUp(self):
        self.sink = RelativeGraph(self.graph(SINK_EDGE))

    def test_validation(self):
        cases = [
            (("defect", 1, "w"), "defect level 1 outside [0, 1)"),
            (("defect", 0, "v"), "no defect class at saturated vertex v"),
            (("full", 0, "w"), "full class at level 0 instead of 1"),
            (("bogus", 1, "w"), "unknown class kind bogus"),
        ]
        for element, msg in cases:
            with self.assertRaises(PreconditionError) as ctx:
                DefectCombination(self.sink, 1, {element: 1})
            self.assertEqual(str(ctx.exception), msg)

    def test_arithmetic(self):
        first = DefectCombination(self.sink, 1, {("defect", 0, "w"): 2})
        second = DefectCombination(
            self.sink, 1, {("defect", 0, "w"): 2, ("full", 1, "v"): -1})
        self.assertEqual(str(second - first), "-1·s(v)@1")
        self.assertFalse(first - first)
        self.assertEqual(str(DefectCombination(self.sink, 1)), "0")
        self.assertEqual(first.scale(3)[defect(0, "w")], 6)

    def test_different_approximants(self):
        first = DefectCombination(self.sink, 1)
        with self.assertRaises(PreconditionError):
            first + DefectCombination(self.sink, 2)


class KernelTestCase(KGraphTestCase):

    def setUp(self):
        self.graph_ = self.graph(SINK_EDGE)
        self.sink = RelativeGraph(self.graph_)

    def vector(self, data):
        return LevelledVector(self.graph_, data)

    def test_phi_eval(self):
        g = self.vector({("v", 0): 1, ("w", 0): 2})
        self.assertEqual(
            str(defects.phi_eval(g, self.sink, 1)),
            "+2·ξ(w)@0 +1·s(w)@1")

    def test_kernel_element(self):
        g = self.vector({("v", 0): 1, ("w", 1): -1})
        self.assertFalse(defects.phi_eval(g, self.sink, 1))
        self.assertTrue(defects.kernel_conditions(g, self.sink, 1))
        h = defects.build_h(g, self.sink, 1)
        self.assertEqual(h, LevelledVector.delta(self.graph_, "v", 0))
        answer = is_in_I(g)
        self.assertTrue(answer.is_yes)
        self.assertEqual(answer.witness, h)

    def test_defect_condition_violated(self):
        g = self.vector({("w", 0): 1})
        self.assertFalse(defects.kernel_conditions(g, self.sink, 1))
        with self.assertRaises(VerificationError) as ctx:
            defects.build_h(g, self.sink, 1)
        self.assertEqual(
            str(ctx.exception), "h_0 leaves the relative set")

    def test_top_condition_violated(self):
        g = self.vector({("v", 0): 1})
        self.assertFalse(defects.kernel_conditions(g, self.sink, 1))
        with self.assertRaises(VerificationError) as ctx:
            defects.build_h(g, self.sink, 1)
        self.assertEqual(str(ctx.exception), "(1 - αβ)h differs from g")

    def test_support_range(self):
        g = self.vector({("v", 2): 1})
        with self.assertRaises(PreconditionError) as ctx:
            defects.phi_eval(g, self.sink, 1)
        self.assertEqual(
            str(ctx.exception), "support at level 2 outside [0, 1]")
        with self.assertRaises(PreconditionError):
            defects.kernel_conditions(self.vector({("v", -1): 1}),
                                      self.sink, 1)

    def test_o2_kernel(self):
        """(1 - αβ)δ(v, 0) in O_2 is killed by Φ at every cutoff."""
        graph = BouquetFactory(loops=2)
        f = RelativeGraph(graph)
        g = LevelledVector(graph, {("v", 0): 1, ("v", 1): -2})
        for cutoff in (1, 2, 3):
            self.assertTrue(defects.kernel_conditions(g, f, cutoff))
            self.assertFalse(defects.phi_eval(g, f, cutoff))

    def test_suite(self):
        result = registry.run("afcore.kernel-conditions", 500, 2)
        self.assertTrue(result.ok, result.failures[:3])
        self.assertEqual(result.passed, 500)
