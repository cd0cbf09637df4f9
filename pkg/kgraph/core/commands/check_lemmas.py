# -*- coding: utf-8 -*-

from __future__ import unicode_literals

from kgraph.core import formats
from kgraph.lib.exceptions import BadRequest
from kgraph.lib.suites import registry
from kgraph.parameters import tools as param_tools

from . import Command, CommandResult


class CheckLemmasCommand(Command):
    """Run the seeded property suites and print pass/fail counts.

    Every suite draws from its own generator, seeded with
    ``"<seed>:<suite>"``, so a single suite can be replayed alone.
    """

    help = (  # NOQA:A003
        "Run the zmodule/afcore property suites on random inputs"
    )

    def __init__(self, *args, **kwargs):
        super(CheckLemmasCommand, self).__init__(*args, **kwargs)
        self._parser.add_argument(
            "graph", type=str, nargs="?", default=None,
            help="Path to a graph file (random graphs when omitted)")
        self._parser.add_argument(
            "--cases", type=int, default=None,
            help="Cases per suite")
        self._parser.add_argument(
            "--seed", type=str, default=None,
            help="Seed of the random generators")
        self._parser.add_argument(
            "--suite", type=str, default=None,
            help="Run this suite only ({})".format(
                ", ".join(registry.names())))

    def handle(self, parsed_args):
        cases = parsed_args.cases
        if cases is None:
            cases = param_tools.get_global_parameter(
                "check_cases", app="core")
        if cases < 0:
            raise BadRequest("--cases must not be negative")
        seed = parsed_args.seed
        if seed is None:
            seed = str(param_tools.get_global_parameter(
                "check_seed", app="core"))
        graph = None
        if parsed_args.graph:
            graph = formats.parse_graph(self.read_file(parsed_args.graph))
        names = registry.names()
        if parsed_args.suite is not None:
            if parsed_args.suite not in names:
                raise BadRequest("unknown suite {}".format(parsed_args.suite))
            names = [parsed_args.suite]

        lines = [
            "seed: {}".format(seed),
            "cases: {}".format(cases),
            "graph: {}".format(parsed_args.graph or "random"),
        ]
        passed = failed = 0
        for name in names:
            result = registry.run(name, cases, seed, graph=graph)
            lines.append(str(result))
            for description in result.failures:
                lines.append("  failed: {}".format(description))
            passed += result.passed
            failed += result.failed
        lines.append("total: {} passed, {} failed".format(passed, failed))
        return CommandResult(1 if failed else 0, "\n".join(lines))
