# -*- coding: utf-8 -*-

"""Tests for the parameters registry."""

from __future__ import unicode_literals

from django.test import SimpleTestCase
from django.test.utils import override_settings

from .. import tools


class RegistryTestCase(SimpleTestCase):

    def test_registered_apps(self):
        self.assertEqual(
            tools.registry.apps(), ["afcore", "core", "ktheory", "zmodule"])
        self.assertTrue(tools.registry.exists("ktheory", "limit_window"))
        self.assertFalse(tools.registry.exists("ktheory", "window"))

    def test_defaults(self):
        self.assertEqual(
            tools.get_global_parameter("limit_window", app="ktheory"), 3)
        self.assertEqual(
            tools.get_global_parameter("MEMBERSHIP_EXTRA_STEPS",
                                       app="zmodule"), 64)
        self.assertEqual(
            tools.get_global_parameters("core")["check_cases"], 100)

    @override_settings(KGRAPH_PARAMETERS={"ktheory": {"limit_window": 5}})
    def test_overrides(self):
        self.assertEqual(
            tools.get_global_parameter("limit_window", app="ktheory"), 5)
        self.assertEqual(
            tools.get_global_parameters("ktheory"), {"limit_window": 5})
        self.assertEqual(
            tools.registry.get_default("ktheory", "limit_window"), 3)

    def test_not_defined(self):
        with self.assertRaises(tools.NotDefined) as ctx:
            tools.get_global_parameter("nope", app="core")
        self.assertEqual(
            str(ctx.exception), "Parameter nope not defined for app core")
        with self.assertRaises(tools.NotDefined) as ctx:
            tools.get_global_parameters("nope")
        self.assertEqual(str(ctx.exception), "Application nope not registered")

    def test_labels(self):
        self.assertEqual(tools.registry.get_label("afcore"), "AF core")
        self.assertEqual(tools.registry.get_label("ktheory"), "K-theory")
        with self.assertRaises(tools.NotDefined):
            tools.registry.get_label("nope")

    def test_registry_copies_defaults(self):
        registry = tools.Registry()
        defaults = {"value": [1]}
        registry.add("app", defaults, "App")
        defaults["value"].append(2)
        self.assertEqual(registry.get_default("app", "value"), [1])
