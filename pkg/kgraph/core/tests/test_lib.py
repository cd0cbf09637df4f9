# -*- coding: utf-8 -*-

"""Tests for classification, path combinatorics and graph surgery."""

from __future__ import unicode_literals

import random

from testfixtures import LogCapture

from kgraph.lib.exceptions import BadRequest, PreconditionError
from kgraph.lib.tests import KGraphTestCase
from .. import constants, lib
from ..factories import BouquetFactory, RandomGraphFactory, line_stage
from ..graphs import Edge, Graph


class ClassifyTestCase(KGraphTestCase):

    def test_isolated_vertex(self):
        vclass = lib.classify_vertex(Graph(["v"]), "v")
        self.assertEqual(vclass.kind, constants.SINK)
        self.assertTrue(vclass.source)

    def test_loop(self):
        vclass = lib.classify_vertex(BouquetFactory(loops=1), "v")
        self.assertEqual(vclass.kind, constants.REGULAR)
        self.assertFalse(vclass.source)

    def test_flagged(self):
        graph = self.graph(
            "vertex v inf\n" +
            "".join("edge e{} v v\n".format(i) for i in range(6)))
        vclass = lib.classify_vertex(graph, "v")
        self.assertEqual(vclass.kind, constants.INFINITE_EMITTER)

    def test_regular_set(self):
        self.assertEqual(
            lib.regular_set(BouquetFactory(loops=3)), frozenset(["v"]))
        self.assertEqual(lib.regular_set(Graph(["v"])), frozenset())
        graph = line_stage(3).graph
        self.assertEqual(
            lib.regular_set(graph),
            frozenset(["-3", "-2", "-1", "1", "2", "3"]))


class PathCountTestCase(KGraphTestCase):

    def test_powers(self):
        power = lib.matrix_power(lib.incidence(BouquetFactory(loops=1)), 5)
        self.assertEqual(power["v", "v"], 1)
        power = lib.matrix_power(lib.incidence(BouquetFactory(loops=2)), 3)
        self.assertEqual(power["v", "v"], 8)
        graph = Graph(["v", "w"], [("e", "v", "w")])
        power = lib.matrix_power(lib.incidence(graph), 2)
        self.assertEqual(power.rows, ((0, 0), (0, 0)))
        power = lib.matrix_power(lib.incidence(graph), 0)
        self.assertEqual(power.rows, ((1, 0), (0, 1)))

    def test_negative_power(self):
        with self.assertRaises(PreconditionError):
            lib.matrix_power(lib.incidence(Graph(["v"])), -1)

    def test_enumerate_paths(self):
        paths = lib.enumerate_paths(Graph(["x"]), "x", 0)
        self.assertEqual([p.origin for p in paths], ["x"])
        self.assertEqual(paths[0].length, 0)
        paths = lib.enumerate_paths(BouquetFactory(loops=2), "v", 2)
        self.assertEqual(
            [[e.id for e in p.edges] for p in paths],
            [["e1", "e1"], ["e1", "e2"], ["e2", "e1"], ["e2", "e2"]])
        graph = Graph(["v", "w"], [("e", "v", "w")])
        self.assertEqual(lib.enumerate_paths(graph, "w", 1), [])
        self.assertEqual(len(lib.enumerate_paths(graph, "v", 1, "w")), 1)
        self.assertEqual(lib.enumerate_paths(graph, "v", 1, "v"), [])

    def test_count_paths_into(self):
        graph = Graph(["u", "v", "w"], [
            ("a", "u", "w"), ("b", "v", "w"), ("c", "v", "w")])
        self.assertEqual(lib.count_paths_into(graph, "w", 1), 3)
        self.assertEqual(lib.count_paths_into(graph, "w", 0), 1)
        self.assertEqual(lib.count_paths_into(graph, "u", 1), 0)

    def test_power_matches_enumeration(self):
        """Path-count oracle on 200 random graphs, lengths up to 4."""
        rng = random.Random("path-count")
        for _ in range(200):
            graph = RandomGraphFactory(rng=rng, max_vertices=6, max_edges=7)
            matrix = lib.incidence(graph)
            for length in range(5):
                power = lib.matrix_power(matrix, length)
                for x in graph.vertices:
                    paths = lib.enumerate_paths(graph, x, length)
                    for y in graph.vertices:
                        expected = len(
                            [p for p in paths if p.terminus == y])
                        self.assertEqual(power[x, y], expected)


class RelativeSetTestCase(KGraphTestCase):

    def test_same_graph(self):
        graph = Graph(["v", "w"], [("e", "v", "w"), ("l", "v", "v")])
        self.assertEqual(
            lib.relative_set(graph, graph), lib.regular_set(graph))

    def test_missing_out_edge(self):
        self.assertEqual(
            lib.relative_set(BouquetFactory(loops=2),
                             BouquetFactory(loops=1)),
            frozenset())

    def test_missing_in_edge_only(self):
        ambient = Graph(
            ["u", "v", "w"], [("a", "u", "v"), ("b", "v", "w")])
        subgraph = Graph(["v", "w"], [("b", "v", "w")])
        self.assertEqual(
            lib.relative_set(ambient, subgraph), frozenset(["v"]))

    def test_not_a_subgraph(self):
        with self.assertRaises(BadRequest):
            lib.relative_set(BouquetFactory(loops=1), BouquetFactory(loops=2))


class AddHeadTestCase(KGraphTestCase):

    def test_isolated_vertex(self):
        with LogCapture("kgraph.core") as log:
            graph = lib.add_head(Graph(["v"]), "v")
        self.assertEqual(graph.vertices, ("omega", "v"))
        self.assertEqual(graph.edges, (Edge("theta", "omega", "v"), ))
        log.check(
            ("kgraph.core", "DEBUG", "attaching head omega -theta-> v"))

    def test_twice(self):
        graph = lib.add_head(Graph(["v"]), "v")
        self.assertTrue(graph.is_source("omega"))
        graph = lib.add_head(graph, "omega")
        self.assertEqual(graph.vertices, ("omega", "omega1", "v"))
        self.assertEqual(graph.edge("theta1"),
                         Edge("theta1", "omega1", "omega"))

    def test_not_a_source(self):
        with self.assertRaises(PreconditionError):
            lib.add_head(BouquetFactory(loops=1), "v")

    def test_original_data_unchanged(self):
        graph = Graph(["v", "w"], [("e", "v", "w")], ["w"])
        headed = lib.add_head(graph, "v")
        self.assertTrue(graph.is_subgraph_of(headed))
        self.assertEqual(headed.infinite_emitters, frozenset(["w"]))

    def test_add_heads(self):
        graph = Graph(["u", "v"], [("a", "u", "v")])
        headed = lib.add_heads(graph, depth=3)
        self.assertEqual(len(headed.vertices), 5)
        self.assertEqual(headed.sources(), ("omega2", ))
        for length in range(4):
            self.assertTrue(lib.count_paths_into(headed, "u", length))
        loop = BouquetFactory(loops=1)
        self.assertEqual(lib.add_heads(loop), loop)
