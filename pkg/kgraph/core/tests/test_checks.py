# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from django.test import SimpleTestCase
from django.test.utils import override_settings

from ..checks import settings_checks


class CheckParameterNamesTest(SimpleTestCase):

    @override_settings(KGRAPH_PARAMETERS={
        "zmodule": {"membership_extra_steps": 8},
        "ktheory": {"limit_window": 4},
    })
    def test_known_parameters(self):
        """Valid overrides raise nothing."""
        self.assertEqual(settings_checks.check_parameter_names(None), [])
        self.assertEqual(settings_checks.check_parameter_values(None), [])

    @override_settings(KGRAPH_PARAMETERS={
        "nope": {},
        "core": {"check_cases": 3, "max_vertex": 4},
    })
    def test_unknown_parameters(self):
        """One warning per unknown application or parameter."""
        errors = settings_checks.check_parameter_names(None)
        self.assertEqual([e.id for e in errors],
                         ["kgraph.W001", "kgraph.W001"])
        self.assertIn("'core.max_vertex'", errors[0].msg)
        self.assertIn("'nope'", errors[1].msg)

    @override_settings(KGRAPH_PARAMETERS={
        "zmodule": {"membership_extra_steps": -1},
        "ktheory": {"limit_window": 1},
    })
    def test_invalid_values(self):
        errors = settings_checks.check_parameter_values(None)
        self.assertEqual([e.id for e in errors],
                         ["kgraph.E001", "kgraph.E002"])

    @override_settings()
    def test_no_overrides(self):
        from django.conf import settings
        del settings.KGRAPH_PARAMETERS
        self.assertEqual(settings_checks.check_parameter_names(None), [])
