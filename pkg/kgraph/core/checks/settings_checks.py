# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from django.core.checks import Error, Warning, register
from django.utils.translation import gettext as _

from kgraph.parameters import tools as param_tools


def _unknown_parameter(app, name=None):
    if name is None:
        msg = _("KGRAPH_PARAMETERS references unknown application '{}'")
        msg = msg.format(app)
    else:
        msg = _("KGRAPH_PARAMETERS references unknown parameter '{}.{}'")
        msg = msg.format(app, name)
    return Warning(
        msg,
        hint=_("Remove the entry or fix its spelling"),
        id="kgraph.W001",
    )


@register()
def check_parameter_names(app_configs, **kwargs):
    """Warn about overrides that match no registered parameter."""
    errors = []
    overrides = param_tools.get_overrides()
    for app in sorted(overrides):
        if not param_tools.registry.exists(app):
            errors.append(_unknown_parameter(app))
            continue
        for name in sorted(overrides[app]):
            if not param_tools.registry.exists(app, name):
                errors.append(_unknown_parameter(app, name))
    return errors


@register()
def check_parameter_values(app_configs, **kwargs):
    """Reject values the computations cannot work with."""
    errors = []
    overrides = param_tools.get_overrides()
    window = overrides.get("ktheory", {}).get("limit_window")
    if window is not None and window < 2:
        errors.append(Error(
            _("ktheory.limit_window must be at least 2 (got {})").format(
                window),
            id="kgraph.E001",
        ))
    steps = overrides.get("zmodule", {}).get("membership_extra_steps")
    if steps is not None and steps < 0:
        errors.append(Error(
            _("zmodule.membership_extra_steps must not be negative "
              "(got {})").format(steps),
            id="kgraph.E002",
        ))
    return errors
