# -*- coding: utf-8 -*-

"""Deciding membership in I = (1 - αβ)(W).

If (1 - αβ)h = v with h finitely supported then h vanishes below the
lowest level of v and h_i = v_i + β₀(h_{i-1}). The recursion is
therefore forced; it either leaves S (no), reaches zero (yes), loops
on a nonzero tail (no) or runs into the iteration cap (unknown).
"""

from __future__ import unicode_literals

import logging

from kgraph.core.lib import regular_set
from kgraph.lib.exceptions import VerificationError
from kgraph.parameters import tools as param_tools
from . import constants
from .operators import beta0, one_minus_alpha_beta
from .vectors import Level0Vector, LevelledVector

logger = logging.getLogger("kgraph.zmodule")


class IMembershipAnswer(object):
    """Verdict of ``is_in_I``.

    :param str verdict: ``yes``, ``no`` or ``unknown``
    :param witness: h with (1 - αβ)h = v (yes only)
    :param str reason: ``support-leaves-S`` or ``forced-cycle`` (no only)
    :param int level: level at which the recursion stopped
    """

    def __init__(self, verdict, witness=None, reason=None, level=None):
        self.verdict = verdict
        self.witness = witness
        self.reason = reason
        self.level = level

    @property
    def is_yes(self):
        return self.verdict == constants.YES

    @property
    def is_no(self):
        return self.verdict == constants.NO

    @property
    def is_unknown(self):
        return self.verdict == constants.UNKNOWN

    def __str__(self):
        if self.reason:
            return "{} ({})".format(self.verdict, self.reason)
        return self.verdict

    def __repr__(self):
        return "<IMembershipAnswer: {}>".format(self)


def is_in_I(vector, relative_set=None, extra_steps=None):
    """Run the forced recursion on vector.

    :param ``LevelledVector`` vector: the queried element of V
    :param relative_set: vertices playing the role of S (regular set
        when omitted)
    :param int extra_steps: tail iterations allowed beyond
        ``max level + |E⁰|`` (``membership_extra_steps`` parameter
        when omitted)
    :rtype: ``IMembershipAnswer``
    """
    graph = vector.graph
    domain = (regular_set(graph) if relative_set is None
              else frozenset(relative_set))
    if extra_steps is None:
        extra_steps = param_tools.get_global_parameter(
            "membership_extra_steps", app="zmodule")
    if not vector:
        return IMembershipAnswer(
            constants.YES, witness=LevelledVector.zero(graph))

    low, high = vector.min_level, vector.max_level
    cap = high + len(graph.vertices) + extra_steps
    slices = {}
    previous = Level0Vector.zero(graph)
    seen = set()
    level = low
    answer = None
    while answer is None:
        if level > cap:
            answer = IMembershipAnswer(constants.UNKNOWN, level=level)
            break
        current = vector.slice(level) + beta0(previous, domain)
        if not current.lies_in(domain):
            answer = IMembershipAnswer(
                constants.NO, reason=constants.SUPPORT_LEAVES_S, level=level)
            break
        if level >= high:
            if not current:
                answer = IMembershipAnswer(
                    constants.YES,
                    witness=LevelledVector.from_slices(graph, slices),
                    level=level)
                break
            if current in seen:
                answer = IMembershipAnswer(
                    constants.NO, reason=constants.FORCED_CYCLE, level=level)
                break
            seen.add(current)
        slices[level] = current
        previous = current
        level += 1

    if answer.is_yes:
        image = one_minus_alpha_beta(answer.witness, domain)
        if image != vector:
            raise VerificationError(
                "forced recursion produced a wrong witness")
    logger.debug("is_in_I(%r): %s at level %s", vector, answer, answer.level)
    return answer


def classes_equal_mod_I(first, second, relative_set=None, extra_steps=None):
    """Whether first and second agree in V / I (is_in_I of the
    difference)."""
    return is_in_I(first - second, relative_set=relative_set,
                   extra_steps=extra_steps)
