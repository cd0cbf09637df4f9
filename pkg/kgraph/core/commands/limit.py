# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from kgraph.core import formats
from kgraph.ktheory.lib import direct_limit

from . import Command, CommandResult


class LimitCommand(Command):
    """Report the images of every stage in the final one and whether
    the last ``--window`` of them agree."""

    help = "Approximate the direct limit of K-groups along a chain"  # NOQA:A003

    def __init__(self, *args, **kwargs):
        super(LimitCommand, self).__init__(*args, **kwargs)
        self._parser.add_argument("chain", type=str,
                                  help="Path to a chain file")
        self._parser.add_argument("--window", type=int, default=None,
                                  help="Stability window (at least 2)")

    def handle(self, parsed_args):
        chain = formats.parse_chain(self.read_file(parsed_args.chain))
        limit = direct_limit(chain, window=parsed_args.window)
        lines = limit.report()
        lines.append(limit.k0.render("K0"))
        lines.append(limit.k1.render("K1"))
        lines.append("stabilized: {}".format(
            "yes" if limit.stabilized else "no"))
        return CommandResult(0 if limit.stabilized else 1, "\n".join(lines))
