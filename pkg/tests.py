# coding: utf-8
from __future__ import unicode_literals

import os
import unittest

from kgraph.lib.sysutils import exec_cmd

DATADIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "test_data")


class CommandLineTest(unittest.TestCase):
    """Run the installed script on the sample files."""

    def kgraph_admin(self, args):
        return exec_cmd("kgraph-admin.py {}".format(args), cwd=DATADIR)

    def test_k(self):
        code, output = self.kgraph_admin("k o3.graph")
        self.assertEqual(code, 0)
        self.assertEqual(
            output, "K0 = Z/2\n  generator (order 2): +1·d(v)\nK1 = 0\n")

    def test_all_vertices(self):
        code, output = self.kgraph_admin("k sink-edge.graph --all-vertices")
        self.assertEqual(code, 0)
        self.assertEqual(output, "K0 = 0\nK1 = 0\n")

    def test_limit(self):
        code, output = self.kgraph_admin("limit line.chain")
        self.assertEqual(code, 0)
        self.assertTrue(output.endswith(
            "K1 = Z\n  generator: +1·d(1) -1·d(-1)\nstabilized: yes\n"))

    def test_snf(self):
        code, output = self.kgraph_admin("snf matrix.txt")
        self.assertEqual(code, 0)
        self.assertIn("invariant factors: 2 4", output)

    def test_missing_file(self):
        code, output = self.kgraph_admin("k nope.graph")
        self.assertEqual(code, 2)
        self.assertTrue(output.startswith("error: cannot read nope.graph"))


if __name__ == "__main__":
    unittest.main()
