# -*- coding: utf-8 -*-

"""K-groups of relative graphs, induced maps along chains and direct
limits."""

from __future__ import unicode_literals

import collections
import logging

from kgraph.core.graphs import Graph, RelativeGraph
from kgraph.lib.exceptions import BadRequest, PreconditionError
from kgraph.parameters import tools as param_tools
from . import constants
from .groups import FgAbelianGroup, GroupHom, inclusion_matrix
from .smith import IntMatrix, kernel_basis

logger = logging.getLogger("kgraph.ktheory")

KGroups = collections.namedtuple("KGroups", ["k0", "k1"])

InducedMaps = collections.namedtuple("InducedMaps", ["k0", "k1"])


def _relative(f):
    if isinstance(f, Graph):
        return RelativeGraph(f)
    return f


def _relation_column(f, vertex, rows):
    graph = f.graph
    column = dict((y, 0) for y in rows)
    column[vertex] += 1
    for edge in graph.out_edges(vertex):
        column[edge.terminus] -= 1
    return [column[y] for y in rows]


def b_matrix(f, columns=None):
    """Matrix of 1-β₀ for a relative graph.

    Rows are the vertices of F⁰, columns the vertices of S_F; entry
    (y, x) is [y = x] - |xF¹y|.

    :param f: a ``RelativeGraph`` (a plain ``Graph`` uses its regular set)
    :param columns: column vertices, S_F when omitted
    :rtype: ``IntMatrix``
    """
    f = _relative(f)
    rows = f.vertices
    if columns is None:
        columns = f.relative_vertices
    data = [_relation_column(f, x, rows) for x in columns]
    matrix = IntMatrix.from_columns(data, len(rows))
    return IntMatrix(matrix.rows, ncols=len(columns),
                     row_labels=rows, col_labels=columns)


def kgroups(f, relations=constants.RELATIVE_SET_RELATIONS):
    """Compute K₀ = coker(1-β₀) and K₁ = ker(1-β₀).

    :param f: a ``RelativeGraph`` (a plain ``Graph`` uses its regular set)
    :param str relations: ``relative-set`` takes the K₀ relation columns
        over S_F; ``all-vertices`` takes them over every vertex of F⁰
    :rtype: ``KGroups``
    """
    f = _relative(f)
    if relations not in constants.RELATION_CHOICES:
        raise BadRequest("unknown relation span '{}'".format(relations))
    matrix = b_matrix(f)
    k1 = FgAbelianGroup.free(kernel_basis(matrix), f.relative_vertices)
    if relations == constants.ALL_VERTICES_RELATIONS:
        matrix = b_matrix(f, columns=f.vertices)
    k0 = FgAbelianGroup.cokernel(matrix)
    logger.debug("%r: K0 = %s, K1 = %s", f, k0, k1)
    return KGroups(k0, k1)


def in_edge_k1_condition(f, vector):
    """In-edge form of the K₁ description.

    Checks f(x) = Σ_{e ∈ F¹x} f(o(e)) at every vertex x, for a vector
    supported on S_F.

    :param f: a ``RelativeGraph``
    :param vector: mapping vertex -> int
    :rtype: bool
    """
    f = _relative(f)
    values = dict((x, c) for x, c in dict(vector).items() if c)
    for vertex in sorted(values):
        f.graph.check_vertex(vertex)
        if vertex not in f.relative_set:
            raise PreconditionError(
                "vertex {} is outside the relative set".format(vertex))
    for vertex in f.vertices:
        incoming = sum(values.get(edge.origin, 0)
                       for edge in f.graph.in_edges(vertex))
        if values.get(vertex, 0) != incoming:
            return False
    return True


def induced_maps(chain, groups=None):
    """Maps induced by the inclusions F_N ⊆ F_{N+1}.

    K₀ sends [δ_x] to [δ_x]; K₁ is the inclusion of kernel lattices.
    Both are validated (``VerificationError`` otherwise).

    :param ``Chain`` chain: an admissible chain
    :param groups: precomputed ``kgroups`` per stage (optional)
    :return: a list of ``InducedMaps``
    """
    if groups is None:
        groups = [kgroups(stage) for stage in chain]
    result = []
    for index in range(len(chain) - 1):
        current, following = chain[index], chain[index + 1]
        k0 = GroupHom(
            groups[index].k0, groups[index + 1].k0,
            inclusion_matrix(current.vertices, following.vertices))
        k1 = GroupHom(
            groups[index].k1, groups[index + 1].k1,
            inclusion_matrix(current.relative_vertices,
                             following.relative_vertices))
        result.append(InducedMaps(k0, k1))
    return result


class DirectLimit(object):
    """Outcome of ``direct_limit``.

    ``images`` holds, per non-final stage, the images of its K-groups
    in the final stage; ``k0`` and ``k1`` are the images of the last
    non-final stage.
    """

    def __init__(self, chain, window, groups, maps, images, stabilized):
        self.chain = chain
        self.window = window
        self.groups = groups
        self.maps = maps
        self.images = images
        self.stabilized = stabilized
        self.k0 = images[-1].k0
        self.k1 = images[-1].k1

    @property
    def window_stages(self):
        """1-based indices of the stages inside the window."""
        last = len(self.chain) - 1
        return list(range(last - self.window + 1, last + 1))

    def report(self):
        """Per-stage lines followed by the window verdict."""
        final = len(self.chain)
        lines = []
        for index, groups in enumerate(self.groups):
            line = "stage {}: K0 = {}, K1 = {}".format(
                index + 1, groups.k0, groups.k1)
            if index < len(self.images):
                image = self.images[index]
                line += "; image in stage {}: K0 = {}, K1 = {}".format(
                    final, image.k0, image.k1)
            lines.append(line)
        stages = self.window_stages
        lines.append("window: {} (stages {}..{})".format(
            self.window, stages[0], stages[-1]))
        return lines


def _window_agrees(images, attr):
    groups = [getattr(image, attr) for image in images]
    for first, second in zip(groups, groups[1:]):
        if not first.is_isomorphic(second):
            return False
        if not first.same_subgroup(second):
            return False
    return True


def direct_limit(chain, window=None):
    """Approximate the direct limit of the K-groups along a chain.

    For every non-final stage N, G_N is the image of K_•(F_N) in
    K_•(F_final). The limit is reported stabilized when the images of
    the last ``window`` non-final stages share their isomorphism type
    and coincide as subgroups (so the connecting maps are isomorphisms
    onto the images). This is a heuristic, never a proof.

    :param ``Chain`` chain: an admissible chain
    :param int window: stability window (>= 2), ``limit_window``
        parameter when omitted
    :rtype: ``DirectLimit``
    """
    if window is None:
        window = param_tools.get_global_parameter(
            "limit_window", app="ktheory")
    if window < 2:
        raise PreconditionError(
            "the stability window must be at least 2 (got {})".format(
                window))
    if len(chain) < window + 1:
        raise PreconditionError(
            "a window of {} needs at least {} stages (got {})".format(
                window, window + 1, len(chain)))
    groups = [kgroups(stage) for stage in chain]
    maps = induced_maps(chain, groups=groups)
    final_stage, final = chain[len(chain) - 1], groups[-1]
    images = []
    for stage, stage_groups in zip(chain.stages[:-1], groups[:-1]):
        k0 = GroupHom(
            stage_groups.k0, final.k0,
            inclusion_matrix(stage.vertices, final_stage.vertices))
        k1 = GroupHom(
            stage_groups.k1, final.k1,
            inclusion_matrix(stage.relative_vertices,
                             final_stage.relative_vertices))
        images.append(KGroups(k0.image(), k1.image()))
    tail = images[-window:]
    stabilized = _window_agrees(tail, "k0") and _window_agrees(tail, "k1")
    result = DirectLimit(chain, window, groups, maps, images, stabilized)
    if not stabilized:
        logger.warning(
            "direct limit not stabilized over %d stages: K0 %s, K1 %s",
            window, ", ".join(str(image.k0) for image in tail),
            ", ".join(str(image.k1) for image in tail))
    return result
