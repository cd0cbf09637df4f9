# -*- coding: utf-8 -*-

"""Shortcuts to run external commands and inspect the caller."""

from __future__ import unicode_literals

import inspect
import shlex
import subprocess

# Frames from these packages are skipped when looking for the caller
PLUMBING_PACKAGES = ("kgraph.lib", "kgraph.parameters")


def exec_cmd(cmd, pinput=None, **kwargs):
    """Run a command and collect what it prints.

    stderr is merged into stdout so error messages keep their place in
    the output.

    :param cmd: an argument list or a command line to split
    :param str pinput: text sent to the process's stdin
    :return: exit code, decoded output
    """
    if not isinstance(cmd, (list, tuple)):
        cmd = shlex.split(cmd)
    process = subprocess.run(
        cmd, input=pinput, stdout=subprocess.PIPE,
        stderr=subprocess.STDOUT, encoding="utf-8", **kwargs)
    return process.returncode, process.stdout


def guess_extension_name():
    """Name of the kgraph application the call comes from.

    The stack is walked upwards until a frame belonging to a kgraph
    module outside of the plumbing packages is found; ``kgraph.zmodule``
    and ``kgraph.zmodule.tests.test_membership`` both give ``zmodule``.

    :return: a string or None
    """
    frame = inspect.currentframe().f_back
    try:
        while frame is not None:
            modname = frame.f_globals.get("__name__", "")
            parts = modname.split(".")
            if (len(parts) > 1 and parts[0] == "kgraph" and
                    not modname.startswith(PLUMBING_PACKAGES)):
                return parts[1]
            frame = frame.f_back
    finally:
        del frame
    return None
