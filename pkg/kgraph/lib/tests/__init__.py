# -*- coding: utf-8 -*-

"""Testing utilities."""

from __future__ import unicode_literals

import io
import os
import shutil
import tempfile

from django.test import SimpleTestCase
from django.test.utils import override_settings

from kgraph.core import formats
from .. import sysutils


class ParametersMixin(object):
    """Add tools to manage parameters."""

    def set_global_parameter(self, name, value, app=None):
        """Override a global parameter until the test ends."""
        if app is None:
            app = sysutils.guess_extension_name()
        self.set_global_parameters({name: value}, app=app)

    def set_global_parameters(self, parameters, app=None):
        """Override several global parameters until the test ends."""
        if app is None:
            app = sysutils.guess_extension_name()
        current = getattr(self, "_parameter_overrides", {})
        values = dict((a, dict(p)) for a, p in current.items())
        values.setdefault(app, {}).update(parameters)
        self._parameter_overrides = values
        override = override_settings(KGRAPH_PARAMETERS=values)
        override.enable()
        self.addCleanup(override.disable)


class KGraphTestCase(ParametersMixin, SimpleTestCase):
    """All test cases must inherit from this one."""

    def graph(self, text):
        """Parse a graph file content."""
        return formats.parse_graph(text)

    def write_file(self, name, content):
        """Write content into a temporary directory removed on cleanup."""
        workdir = getattr(self, "_workdir", None)
        if workdir is None:
            workdir = tempfile.mkdtemp()
            self._workdir = workdir
            self.addCleanup(shutil.rmtree, workdir)
        path = os.path.join(workdir, name)
        with io.open(path, "w", encoding="utf-8") as fp:
            fp.write(content)
        return path

    def assertGroup(self, group, structure, generators=None):  # noqa:N802
        """Check the rendered structure (and generator lines) of a group."""
        self.assertEqual(str(group), structure)
        if generators is not None:
            self.assertEqual(group.render_generators(), generators)

    def assertVectorEqual(self, vector, expected):  # noqa:N802
        """Compare a sparse vector with a plain support map."""
        self.assertEqual(dict(vector.items()), expected)
