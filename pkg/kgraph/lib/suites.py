# -*- coding: utf-8 -*-

"""Registry of seeded property suites (used by ``check-lemmas``)."""

from __future__ import unicode_literals

import logging
import random

logger = logging.getLogger("kgraph.lib")


class SuiteResult(object):
    """Outcome of one property suite."""

    def __init__(self, name):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.failures = []

    def record(self, ok, description=None):
        """Account for one case.

        :param bool ok: case outcome
        :param str description: what failed (kept for failed cases only)
        """
        if ok:
            self.passed += 1
            return
        self.failed += 1
        self.failures.append(description)
        logger.warning("%s: case failed: %s", self.name, description)

    @property
    def ok(self):
        return self.failed == 0

    def __str__(self):
        return "{}: {} passed, {} failed".format(
            self.name, self.passed, self.failed)


class Registry(object):
    """A registry for property suites."""

    def __init__(self):
        self._suites = {}

    def add(self, name, func):
        """Register a suite.

        :param str name: dotted suite name (``<app>.<suite>``)
        :param func: callable ``(rng, cases, graph=None) -> SuiteResult``
        """
        self._suites[name] = func

    def names(self):
        return sorted(self._suites)

    def get(self, name):
        return self._suites[name]

    def run(self, name, cases, seed, graph=None):
        """Run one suite with its own seeded generator."""
        rng = random.Random("{}:{}".format(seed, name))
        return self._suites[name](rng, cases, graph=graph)

    def run_all(self, cases, seed, graph=None):
        """Run every registered suite, in name order."""
        return [self.run(name, cases, seed, graph=graph)
                for name in self.names()]


registry = Registry()
