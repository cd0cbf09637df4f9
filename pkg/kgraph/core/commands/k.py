# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from kgraph.core import formats
from kgraph.ktheory import constants as kconstants
from kgraph.ktheory.lib import kgroups

from . import Command, CommandResult, add_relative_arguments, relative_graph


class KCommand(Command):
    """K0 = coker(1 - β₀) and K1 = ker(1 - β₀) of a relative graph."""

    help = "Compute K0 and K1 of a (relative) graph"  # NOQA:A003

    def __init__(self, *args, **kwargs):
        super(KCommand, self).__init__(*args, **kwargs)
        self._parser.add_argument("graph", type=str,
                                  help="Path to a graph file")
        add_relative_arguments(self._parser)
        self._parser.add_argument(
            "--all-vertices", action="store_true",
            help="Take K0 relations over every vertex, not only S_F")

    def handle(self, parsed_args):
        graph = formats.parse_graph(self.read_file(parsed_args.graph))
        f = relative_graph(graph, parsed_args.toeplitz, parsed_args.relative)
        if parsed_args.all_vertices:
            relations = kconstants.ALL_VERTICES_RELATIONS
        else:
            relations = kconstants.RELATIVE_SET_RELATIONS
        groups = kgroups(f, relations=relations)
        return CommandResult(0, "\n".join(
            [groups.k0.render("K0"), groups.k1.render("K1")]))
