# -*- coding: utf-8 -*-

"""Command-line entry point of ``kgraph-admin.py``.

Every command lives in its own module of this package and defines a
``<Name>Command`` class; ``check_lemmas.py`` provides the
``check-lemmas`` command.
"""

from __future__ import unicode_literals

import argparse
import collections
import contextlib
import importlib
import io
import logging
import os
import sys

import django
from django.apps import apps
from django.conf import settings
from django.core.management.base import CommandError, CommandParser

from kgraph.core.graphs import RelativeGraph
from kgraph.lib.exceptions import BadRequest, KGraphException

PROG = "kgraph-admin.py"

KGRAPH_APPS = (
    "kgraph.lib",
    "kgraph.parameters",
    "kgraph.core",
    "kgraph.zmodule",
    "kgraph.afcore",
    "kgraph.ktheory",
)

CommandResult = collections.namedtuple("CommandResult", ["exit_code", "text"])


def parse_arguments(parser, cmdline, full_help=False):
    """Parse cmdline without letting argparse leave the process.

    ``--help`` prints and exits; what it printed is returned as a
    ``CommandResult`` instead. Usage errors come with the usage line,
    or the whole help when full_help is set.

    :return: a namespace, or a ``CommandResult`` to return as is
    """
    output = io.StringIO()
    try:
        with contextlib.redirect_stdout(output):
            return parser.parse_args(cmdline)
    except CommandError as inst:
        usage = parser.format_help() if full_help else parser.format_usage()
        return CommandResult(2, "{}{}".format(usage, inst))
    except SystemExit as inst:
        return CommandResult(inst.code or 0, output.getvalue())


def logging_config(verbose=False):
    """The ``LOGGING`` dict used when no settings module is present."""
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "kgraph": {"format": "%(name)s: %(levelname)s %(message)s"},
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "kgraph",
            },
        },
        "loggers": {
            "kgraph": {
                "handlers": ["console"],
                "level": "DEBUG" if verbose else "WARNING",
                "propagate": False,
            },
        },
    }


def configure_settings(verbose=False):
    """Configure Django on the fly unless a settings module did it."""
    if not settings.configured:
        settings.configure(
            INSTALLED_APPS=KGRAPH_APPS,
            TEMPLATES=[{
                "BACKEND": "django.template.backends.django.DjangoTemplates",
                "APP_DIRS": True,
            }],
            LOGGING=logging_config(verbose),
        )
    if not apps.ready:
        django.setup()
    if verbose:
        logging.getLogger("kgraph").setLevel(logging.DEBUG)


class Command(object):
    """Base command class.

    A valid command must inherit from this class and implement
    ``handle``, which returns a ``CommandResult``.
    """

    help = "No help available."  # NOQA:A003

    def __init__(self, commands, verbose=False, name=None):
        self._commands = commands
        self._verbose = verbose
        self._parser = CommandParser(
            prog="{} {}".format(PROG, name or ""),
            description=self.help,
            called_from_command_line=False)
        configure_settings(verbose)

    def read_file(self, path):
        try:
            with open(path, encoding="utf-8") as fp:
                return fp.read()
        except (IOError, OSError, UnicodeDecodeError) as inst:
            raise BadRequest("cannot read {}: {}".format(path, inst))

    def format_help(self):
        return self._parser.format_help()

    def run(self, cmdline):
        args = parse_arguments(self._parser, cmdline)
        if isinstance(args, CommandResult):
            return args
        try:
            return self.handle(args)
        except KGraphException as inst:
            return CommandResult(inst.exit_code, "error: {}".format(inst))

    def handle(self, parsed_args):
        """A command must overload this method to be called

        :param parsed_args:
        :rtype: ``CommandResult``
        """
        raise NotImplementedError


def scan_for_commands(dirname=""):
    """Build a dictionnary containing all commands

    :param str dirname: the directory where commands are located
    :return: a dict of commands (name : class)
    """
    path = os.path.join(os.path.dirname(__file__), dirname)
    result = {}
    for f in sorted(os.listdir(path)):
        if f == "__init__.py" or not f.endswith(".py"):
            continue
        modname = f[:-3]
        cmdmod = importlib.import_module(
            "kgraph.core.commands.{}".format(modname))
        cmdclassname = "".join(s.capitalize() for s in modname.split("_"))
        try:
            cmdclass = getattr(cmdmod, "%sCommand" % cmdclassname)
        except AttributeError:
            continue
        result[modname.replace("_", "-")] = cmdclass
    return result


def _top_level_parser(commands):
    parser = CommandParser(
        prog=PROG,
        description="K-theory of graph C*-algebras, computed exactly.",
        epilog="Available commands:\n{}\n".format(
            "\n".join("\t{}".format(c) for c in sorted(commands))),
        formatter_class=argparse.RawDescriptionHelpFormatter,
        called_from_command_line=False)
    parser.add_argument("--verbose", action="store_true",
                        help="Activate verbose output")
    parser.add_argument("command", type=str,
                        help="A valid command name")
    parser.add_argument("args", nargs=argparse.REMAINDER,
                        help="Arguments of the command")
    return parser


def run(argv):
    """Dispatch argv to a command.

    :param list argv: arguments, without the program name
    :rtype: ``CommandResult``
    """
    commands = scan_for_commands()
    parser = _top_level_parser(commands)
    args = parse_arguments(parser, argv, full_help=True)
    if isinstance(args, CommandResult):
        return args
    if args.command not in commands:
        return CommandResult(2, "{}Unknown command '{}'".format(
            parser.format_usage(), args.command))
    command = commands[args.command](
        commands, verbose=args.verbose, name=args.command)
    return command.run(args.args)


def handle_command_line():
    """Parse the command line."""
    result = run(sys.argv[1:])
    stream = sys.stderr if result.exit_code == 2 else sys.stdout
    text = result.text
    if text and not text.endswith("\n"):
        text += "\n"
    stream.write(text)
    sys.exit(result.exit_code)


def relative_graph(graph, toeplitz=False, relative=None):
    """Build the relative graph selected by ``--toeplitz`` or
    ``--relative v1,v2,...`` (regular set by default).

    Listing a vertex that is not regular is an error.
    """
    if toeplitz:
        return RelativeGraph.toeplitz(graph)
    if relative is None:
        return RelativeGraph(graph)
    vertices = [v.strip() for v in relative.split(",") if v.strip()]
    for vertex in vertices:
        graph.check_vertex(vertex)
        if not graph.is_regular(vertex):
            raise BadRequest(
                "vertex {} is not regular and cannot be saturated".format(
                    vertex))
    return RelativeGraph(graph, vertices)


def add_relative_arguments(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--toeplitz", action="store_true",
                       help="Impose no Cuntz-Krieger relation (S_F empty)")
    group.add_argument("--relative", type=str, default=None,
                       help="Comma-separated relative set S_F")
