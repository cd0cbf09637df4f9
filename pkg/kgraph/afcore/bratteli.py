# -*- coding: utf-8 -*-

"""Bratteli diagrams of the inclusions C_k ⊆ C_{k+1}."""

from __future__ import unicode_literals

import collections

from django.template.loader import render_to_string

from kgraph.lib.exceptions import PreconditionError
from . import constants
from .defects import blocks_at, defect, full, path_powers, render_element

BratteliEdge = collections.namedtuple(
    "BratteliEdge", ["layer", "source", "target", "multiplicity"])


class BratteliDiagram(object):
    """Layers 0..kmax of blocks plus the edges between them.

    ``layers[k]`` is the sorted list of (``DefectBasisElement``, size)
    of C_k; ``edges`` connect layer k to layer k + 1.
    """

    def __init__(self, relative_graph, kmax, layers, edges):
        self.relative_graph = relative_graph
        self.kmax = kmax
        self.layers = layers
        self.edges = edges

    def propagated_sizes(self):
        """Layer sizes obtained from layer 0 through the edges."""
        sizes = [dict(self.layers[0])]
        for k in range(self.kmax):
            nxt = collections.defaultdict(int)
            for edge in self.edges:
                if edge.layer == k:
                    nxt[edge.target] += edge.multiplicity * sizes[k].get(
                        edge.source, 0)
            for node, _ in self.layers[k + 1]:
                nxt.setdefault(node, 0)
            sizes.append(dict(nxt))
        return sizes

    def is_consistent(self):
        """Propagated sizes equal the block sizes of every layer."""
        return self.propagated_sizes() == [dict(layer)
                                           for layer in self.layers]

    def dimension(self, k):
        return sum(size * size for _, size in self.layers[k])

    def render_table(self):
        lines = []
        for k, layer in enumerate(self.layers):
            blocks = " ".join("{}={}".format(render_element(node), size)
                              for node, size in layer)
            lines.append("layer {} (dim {}): {}".format(
                k, self.dimension(k), blocks))
        return "\n".join(lines)

    def to_dot(self):
        """Graphviz source, one cluster per layer."""
        def node_id(k, node):
            return "{}:{}:{}:{}".format(
                k, node.kind, node.level,
                node.vertex.replace('"', '\\"'))

        layers = []
        for k, layer in enumerate(self.layers):
            layers.append({
                "index": k,
                "nodes": [{"id": node_id(k, node),
                           "label": render_element(node).replace(
                               '"', '\\"'),
                           "size": size} for node, size in layer],
            })
        edges = [{"source": node_id(e.layer, e.source),
                  "target": node_id(e.layer + 1, e.target),
                  "multiplicity": e.multiplicity} for e in self.edges]
        content = render_to_string(
            "afcore/bratteli.dot", {"layers": layers, "edges": edges})
        return content.rstrip("\n") + "\n"


def bratteli(f, kmax):
    """Build the Bratteli diagram of C_0 ⊆ C_1 ⊆ ... ⊆ C_kmax.

    A full node (k, y) feeds the defect node (k, y) once when y is
    outside S_F and the full node (k + 1, z) |yF¹z| times; defect
    nodes are carried over once.

    :param f: the ``RelativeGraph``
    :param int kmax: last layer (>= 1)
    :rtype: ``BratteliDiagram``
    """
    if kmax < 1:
        raise PreconditionError(
            "kmax must be at least 1 (got {})".format(kmax))
    powers = path_powers(f, kmax)
    layers = [blocks_at(f, k, powers) for k in range(kmax + 1)]
    matrix = powers[1]
    edges = []
    for k in range(kmax):
        for node, _ in layers[k]:
            if node.kind == constants.DEFECT:
                edges.append(BratteliEdge(k, node, node, 1))
                continue
            if node.vertex not in f.relative_set:
                edges.append(
                    BratteliEdge(k, node, defect(k, node.vertex), 1))
            for target, value in sorted(matrix.row(node.vertex).items()):
                edges.append(
                    BratteliEdge(k, node, full(k + 1, target), value))
    return BratteliDiagram(f, kmax, layers, edges)
