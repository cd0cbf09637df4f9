# -*- coding: utf-8 -*-

"""Tests for finitely generated abelian groups and induced maps."""

from __future__ import unicode_literals

from testfixtures import LogCapture

from kgraph.core.factories import BouquetFactory
from kgraph.lib.exceptions import VerificationError
from kgraph.lib.tests import KGraphTestCase
from ..groups import (
    FgAbelianGroup, GroupHom, inclusion_matrix, render_combination,
    render_structure
)
from ..lib import kgroups
from ..smith import IntMatrix


class RenderTestCase(KGraphTestCase):

    def test_combination(self):
        self.assertEqual(
            render_combination((2, 0, -1), ("a", "b", "c")),
            "+2·d(a) -1·d(c)")
        self.assertEqual(
            render_combination((1, 1), ("b", "a")), "+1·d(a) +1·d(b)")
        self.assertEqual(render_combination((0, 0), ("a", "b")), "0")

    def test_structure(self):
        self.assertEqual(render_structure(0, ()), "0")
        self.assertEqual(render_structure(1, ()), "Z")
        self.assertEqual(render_structure(0, (3, )), "Z/3")
        self.assertEqual(
            render_structure(2, (2, 6)), "Z^2 (+) Z/2 (+) Z/6")


class FgAbelianGroupTestCase(KGraphTestCase):

    def test_cokernel(self):
        group = FgAbelianGroup.cokernel(
            IntMatrix([[2, 0], [0, 3]], row_labels=("a", "b")))
        self.assertEqual(str(group), "Z/6")
        self.assertEqual(group.order, 6)
        self.assertTrue(group.is_zero((2, 3)))
        self.assertFalse(group.is_zero((1, 0)))

    def test_cokernel_with_free_part(self):
        group = FgAbelianGroup.cokernel(
            IntMatrix([[2], [0]], row_labels=("a", "b")))
        self.assertEqual(group.invariants, (1, (2, )))
        self.assertIsNone(group.order)
        self.assertEqual(group.render_generators(), [
            "generator: +1·d(b)", "generator (order 2): +1·d(a)"])

    def test_coordinates(self):
        group = kgroups(BouquetFactory(loops=4)).k0
        self.assertEqual(group.generators, ((1, ), ))
        self.assertEqual(group.coordinates((1, )), (1, ))
        self.assertEqual(group.coordinates((2, )), (2, ))
        self.assertEqual(group.coordinates((3, )), (0, ))

    def test_torsion_generator_is_smallest_unit_multiple(self):
        for value in (-5, 5):
            group = FgAbelianGroup.cokernel(
                IntMatrix([[value]], row_labels=("v", )))
            self.assertEqual(group.generators, ((1, ), ))
        group = FgAbelianGroup.cokernel(
            IntMatrix([[2, 0], [0, 3]], row_labels=("a", "b")))
        self.assertEqual(group.generators, ((1, 1), ))

    def test_free(self):
        group = FgAbelianGroup.free([(1, -1, 0)], ("a", "b", "c"))
        self.assertEqual(str(group), "Z")
        self.assertTrue(group.contains((2, -2, 0)))
        self.assertFalse(group.contains((1, 0, 0)))
        self.assertEqual(group.coordinates((-3, 3, 0)), (3, ))
        trivial = FgAbelianGroup.free([], ("a", ))
        self.assertTrue(trivial.is_trivial())
        self.assertEqual(trivial.order, 1)

    def test_subquotient(self):
        group = FgAbelianGroup.subquotient(
            [(1, 0)], [(2, 0), (0, 1)], ("a", "b"))
        self.assertEqual(str(group), "Z/2")
        group = FgAbelianGroup.subquotient(
            [(1, 0)], [(1, 0)], ("a", "b"))
        self.assertTrue(group.is_trivial())

    def test_same_subgroup(self):
        relations = [(0, 2)]
        first = FgAbelianGroup.subquotient(
            [(1, 0)], relations, ("a", "b"))
        second = FgAbelianGroup.subquotient(
            [(-1, 2)], relations, ("a", "b"))
        third = FgAbelianGroup.subquotient(
            [(2, 0)], relations, ("a", "b"))
        self.assertTrue(first.same_subgroup(second))
        self.assertTrue(first.is_isomorphic(third))
        self.assertFalse(first.same_subgroup(third))

    def test_render(self):
        group = kgroups(BouquetFactory(loops=3)).k0
        self.assertEqual(
            group.render("K0"), "K0 = Z/2\n  generator (order 2): +1·d(v)")


class GroupHomTestCase(KGraphTestCase):

    def test_identity(self):
        group = kgroups(BouquetFactory(loops=1)).k0
        hom = GroupHom(group, group, inclusion_matrix(("v", ), ("v", )))
        self.assertEqual(hom.matrix, IntMatrix([[1]]))
        self.assertTrue(hom.is_isomorphism)
        self.assertEqual(hom.apply((5, )), (5, ))

    def test_quotient_map(self):
        source = kgroups(BouquetFactory(loops=1)).k0
        target = kgroups(BouquetFactory(loops=3)).k0
        hom = GroupHom(source, target, inclusion_matrix(("v", ), ("v", )))
        self.assertTrue(hom.surjective)
        self.assertFalse(hom.injective)
        self.assertEqual(hom.apply((3, )), (1, ))
        self.assertEqual(str(hom.image()), "Z/2")

    def test_relation_not_killed(self):
        source = kgroups(BouquetFactory(loops=3)).k0
        target = kgroups(BouquetFactory(loops=1)).k0
        with LogCapture("kgraph.ktheory") as log:
            with self.assertRaises(VerificationError):
                GroupHom(source, target, inclusion_matrix(("v", ), ("v", )))
        log.check((
            "kgraph.ktheory", "ERROR",
            "relation (-2,) is not killed in the target"))

    def test_image_outside_target(self):
        source = FgAbelianGroup.free([(1, 0)], ("a", "b"))
        target = FgAbelianGroup.free([(0, 1)], ("a", "b"))
        with self.assertRaises(VerificationError):
            GroupHom(source, target, IntMatrix.identity(2))
