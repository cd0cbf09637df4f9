# -*- coding: utf-8 -*-

"""Parameters management.

Each application declares its tunables as a dict of defaults and
registers it when it becomes ready. Overrides are read from the
``KGRAPH_PARAMETERS`` setting::

    KGRAPH_PARAMETERS = {
        "zmodule": {"membership_extra_steps": 128},
    }
"""

from __future__ import unicode_literals

import copy

from django.conf import settings

from kgraph.lib import exceptions
from kgraph.lib.sysutils import guess_extension_name


class NotDefined(exceptions.KGraphException):
    """Custom exception for undefined parameters."""

    exit_code = 2

    def __init__(self, app, name=None):
        self.app = app
        self.name = name

    def __str__(self):
        if self.name is None:
            return "Application {} not registered".format(self.app)
        return "Parameter {} not defined for app {}".format(
            self.name, self.app)


class Registry(object):
    """A registry for parameters."""

    def __init__(self):
        """Constructor."""
        self._registry = {}

    def add(self, app, defaults, label):
        """Register the default values of an application."""
        self._registry[app] = {
            "label": label, "defaults": copy.deepcopy(defaults)
        }

    def apps(self):
        """Return registered application names, sorted."""
        return sorted(self._registry)

    def exists(self, app, parameter=None):
        """Check if parameter exists."""
        result = app in self._registry
        if parameter:
            result = result and parameter in self._registry[app]["defaults"]
        return result

    def get_default(self, app, parameter):
        """Retrieve default value for parameter."""
        if app not in self._registry:
            raise NotDefined(app)
        if parameter not in self._registry[app]["defaults"]:
            raise NotDefined(app, parameter)
        return self._registry[app]["defaults"][parameter]

    def get_label(self, app):
        """Human readable name of an application."""
        if app not in self._registry:
            raise NotDefined(app)
        return str(self._registry[app]["label"])

    def get_defaults(self, app):
        """Retrieve default values for application."""
        if app not in self._registry:
            raise NotDefined(app)
        return self._registry[app]["defaults"]


registry = Registry()


def get_overrides():
    """Return the ``KGRAPH_PARAMETERS`` setting (or an empty dict)."""
    return getattr(settings, "KGRAPH_PARAMETERS", None) or {}


def get_global_parameter(name, app=None):
    """Retrieve a global parameter.

    A ``NotDefined`` exception if the parameter doesn't exist.

    :param name: the parameter's name
    :param app: the application owning the parameter
    :return: the corresponding value
    """
    if app is None:
        app = guess_extension_name()
    name = name.lower()
    default = registry.get_default(app, name)
    return get_overrides().get(app, {}).get(name, default)


def get_global_parameters(app):
    """Retrieve all global parameters of a given app.

    :param app: the application owning the parameters
    :return: a dict
    """
    values = dict(registry.get_defaults(app))
    values.update(get_overrides().get(app, {}))
    return values
