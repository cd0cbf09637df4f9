# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from kgraph.core import formats
from kgraph.ktheory.smith import IntMatrix, smith

from . import Command, CommandResult


class SnfCommand(Command):

    help = "Smith normal form of an integer matrix"  # NOQA:A003

    def __init__(self, *args, **kwargs):
        super(SnfCommand, self).__init__(*args, **kwargs)
        self._parser.add_argument("matrix", type=str,
                                  help="Path to a matrix file")

    def handle(self, parsed_args):
        rows, ncols = formats.parse_matrix(
            self.read_file(parsed_args.matrix))
        decomposition = smith(IntMatrix(rows, ncols=ncols))
        verified = decomposition.verify()
        lines = [
            "D =",
            decomposition.D.render(),
            "rank: {}".format(decomposition.rank),
            "invariant factors: {}".format(
                " ".join(str(d) for d in decomposition.invariant_factors) or
                "none"),
            "U·A·Vt = D: {}".format("verified" if verified else "FAILED"),
        ]
        return CommandResult(0 if verified else 1, "\n".join(lines))
