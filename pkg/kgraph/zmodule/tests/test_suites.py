# -*- coding: utf-8 -*-

"""Run the levelled module suites with larger case counts."""

from __future__ import unicode_literals

import random

from kgraph.core.factories import BouquetFactory
from kgraph.lib.suites import registry
from kgraph.lib.tests import KGraphTestCase
from ..operators import beta0
from ..suites import draw_kernel_vector


class SuitesTestCase(KGraphTestCase):

    def test_registered(self):
        for name in ("zmodule.intertwining", "zmodule.kernel-lift",
                     "zmodule.operators", "zmodule.telescope"):
            self.assertIn(name, registry.names())

    def test_telescope(self):
        result = registry.run("zmodule.telescope", 1000, 1)
        self.assertTrue(result.ok, result.failures[:3])
        self.assertEqual(result.passed, 1000)

    def test_kernel_lift(self):
        result = registry.run("zmodule.kernel-lift", 500, 1)
        self.assertTrue(result.ok, result.failures[:3])

    def test_intertwining_and_operators(self):
        for name in ("zmodule.intertwining", "zmodule.operators"):
            result = registry.run(name, 200, 3)
            self.assertTrue(result.ok, result.failures[:3])

    def test_fixed_graph(self):
        graph = BouquetFactory(loops=3)
        result = registry.run("zmodule.kernel-lift", 50, 0, graph=graph)
        self.assertEqual(
            str(result), "zmodule.kernel-lift: 50 passed, 0 failed")

    def test_kernel_vector(self):
        rng = random.Random(5)
        graph = BouquetFactory(loops=1)
        for _ in range(10):
            x = draw_kernel_vector(rng, graph)
            self.assertEqual(beta0(x), x)
