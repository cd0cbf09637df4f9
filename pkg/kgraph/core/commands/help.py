# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from kgraph.parameters import tools as param_tools
from . import Command, CommandResult


def describe_parameters():
    """List every registered parameter with its current value, grouped
    by application label."""
    lines = ["Parameters (KGRAPH_PARAMETERS):"]
    for app in param_tools.registry.apps():
        lines.append("  {} ({}):".format(
            param_tools.registry.get_label(app), app))
        values = param_tools.get_global_parameters(app)
        for name in sorted(values):
            lines.append("    {} = {}".format(name, values[name]))
    return "\n".join(lines)


class HelpCommand(Command):

    help = "Display the help message associated to a specific command"  # NOQA:A003

    def __init__(self, *args, **kwargs):
        super(HelpCommand, self).__init__(*args, **kwargs)
        self._parser.add_argument(
            "name", type=str, nargs="?",
            help="A command name; without it, list the tunable parameters")

    def handle(self, parsed_args):
        if parsed_args.name is None:
            return CommandResult(0, describe_parameters())
        if parsed_args.name not in self._commands:
            return CommandResult(
                2, "Unknown command: {}".format(parsed_args.name))
        cmd = self._commands[parsed_args.name](
            self._commands, name=parsed_args.name)
        return CommandResult(0, cmd.format_help())
