# -*- coding: utf-8 -*-

"""
:mod:`exceptions` --- Custom kgraph exceptions
----------------------------------------------

Every exception carries the exit code the command-line tool returns
when it reaches the top level.
"""

from __future__ import unicode_literals


class KGraphException(Exception):
    """
    Base class for kgraph custom exceptions.
    """
    exit_code = None

    def __init__(self, *args, **kwargs):
        if "exit_code" in kwargs:
            self.exit_code = kwargs["exit_code"]
            del kwargs["exit_code"]
        super(KGraphException, self).__init__(*args, **kwargs)


class InternalError(KGraphException):
    """
    Use this exception when a computation cannot be completed or
    produced a result that does not satisfy its own post-conditions.
    """
    exit_code = 1


class VerificationError(InternalError):
    """
    A result checked by direct evaluation did not match (for example
    (1-αβ)h != g after the h-recursion).
    """


class BadRequest(KGraphException):
    """
    Use this exception when received data doesn't validate a specific
    format (example: wrong graph file line) or doesn't respect
    validation rules.
    """
    exit_code = 2


class ParseError(BadRequest):
    """A malformed line in a graph, chain or matrix file."""

    def __init__(self, lineno, msg):
        self.lineno = lineno
        self.msg = msg
        super(ParseError, self).__init__(
            "line {}: {}".format(lineno, msg))


class AdmissibilityError(BadRequest):
    """A chain of relative graphs is not admissible."""

    def __init__(self, stage, item, msg):
        self.stage = stage
        self.item = item
        self.msg = msg
        super(AdmissibilityError, self).__init__(
            "stage {} ({}): {}".format(stage, item, msg))


class PreconditionError(BadRequest):
    """
    An operator was called outside its domain (negative power, support
    outside the regular set, non-zero total, ...).
    """


class NotFound(KGraphException):
    """
    Use this exception to indicate the requested vertex or edge could
    not be found.
    """
    exit_code = 2


class Conflict(KGraphException):
    """
    Use this exception to indicate that an identifier is declared
    twice.
    """
    exit_code = 2
