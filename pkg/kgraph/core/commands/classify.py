# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from kgraph.core import formats
from kgraph.core.lib import classify_vertex

from . import Command, CommandResult


class ClassifyCommand(Command):
    """Print one line per vertex: its kind and whether it is a source."""

    help = "Classify the vertices of a graph"  # NOQA:A003

    def __init__(self, *args, **kwargs):
        super(ClassifyCommand, self).__init__(*args, **kwargs)
        self._parser.add_argument("graph", type=str,
                                  help="Path to a graph file")

    def handle(self, parsed_args):
        graph = formats.parse_graph(self.read_file(parsed_args.graph))
        rows = [("vertex", "class", "source")]
        for vertex in graph.vertices:
            vclass = classify_vertex(graph, vertex)
            rows.append(
                (vertex, vclass.kind, "yes" if vclass.source else "no"))
        widths = [max(len(row[i]) for row in rows) for i in range(2)]
        lines = [
            "{}  {}  {}".format(
                row[0].ljust(widths[0]), row[1].ljust(widths[1]), row[2])
            for row in rows]
        return CommandResult(0, "\n".join(lines))
