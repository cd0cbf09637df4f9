# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from kgraph.afcore.bratteli import bratteli
from kgraph.core import formats
from kgraph.lib.exceptions import BadRequest

from . import Command, CommandResult, add_relative_arguments, relative_graph


class BratteliCommand(Command):

    help = (  # NOQA:A003
        "Print the layers of the Bratteli diagram of C_0 ⊆ ... ⊆ C_k"
    )

    def __init__(self, *args, **kwargs):
        super(BratteliCommand, self).__init__(*args, **kwargs)
        self._parser.add_argument("graph", type=str,
                                  help="Path to a graph file")
        self._parser.add_argument("-k", dest="kmax", type=int, required=True,
                                  help="Last layer (at least 1)")
        add_relative_arguments(self._parser)
        self._parser.add_argument("--dot", type=str, default=None,
                                  help="Write the diagram to this DOT file")

    def handle(self, parsed_args):
        graph = formats.parse_graph(self.read_file(parsed_args.graph))
        f = relative_graph(graph, parsed_args.toeplitz, parsed_args.relative)
        diagram = bratteli(f, parsed_args.kmax)
        lines = [diagram.render_table()]
        if parsed_args.dot:
            try:
                with open(parsed_args.dot, "w", encoding="utf-8") as fp:
                    fp.write(diagram.to_dot())
            except (IOError, OSError) as inst:
                raise BadRequest("cannot write {}: {}".format(
                    parsed_args.dot, inst))
            lines.append("dot: {}".format(parsed_args.dot))
        return CommandResult(0, "\n".join(lines))
