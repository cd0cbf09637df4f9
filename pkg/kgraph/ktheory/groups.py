# -*- coding: utf-8 -*-

"""
:mod:`groups` --- Finitely generated abelian groups
---------------------------------------------------

Every group handled here is a subquotient of a labelled lattice
ℤ^basis: the subgroup spanned by some vectors plus a relation
lattice, divided by the relation lattice. Cokernels (K0) take the
whole lattice; kernels (K1) take no relation at all; images along a
chain take both.
"""

from __future__ import unicode_literals

import logging
import math

from kgraph.lib.exceptions import VerificationError
from . import smith as smith_tools

logger = logging.getLogger("kgraph.ktheory")


def _size_key(vector):
    return (sum(abs(value) for value in vector), tuple(-v for v in vector))


def render_combination(vector, labels):
    """Render an integer combination of named basis elements.

    Terms look like ``+2·d(x)``, sorted by decreasing coefficient then
    by identifier; the empty combination renders as ``0``.
    """
    terms = [(coeff, label) for coeff, label in zip(vector, labels) if coeff]
    if not terms:
        return "0"
    terms.sort(key=lambda term: (-term[0], term[1]))
    return " ".join(
        "{:+d}·d({})".format(coeff, label) for coeff, label in terms)


def render_structure(rank, torsion):
    """``Z^r (+) Z/d1 (+) ...``; ``Z`` for rank 1, ``0`` when trivial."""
    parts = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append("Z^{}".format(rank))
    parts += ["Z/{}".format(d) for d in torsion]
    return " (+) ".join(parts) if parts else "0"


class FgAbelianGroup(object):
    """A finitely generated abelian group in canonical form.

    :param basis: labels of the ambient lattice coordinates
    :param int rank: free rank
    :param torsion: invariant factors (each >= 2, increasing)
    :param generators: ambient vectors, ``rank`` free ones first then
        one per invariant factor
    :param relations: spanning vectors of the relation lattice
    """

    def __init__(self, basis, rank, torsion, generators, relations=()):
        self.basis = tuple(basis)
        self.rank = rank
        self.torsion = tuple(torsion)
        self.generators = tuple(tuple(g) for g in generators)
        self.relations = tuple(tuple(r) for r in relations)
        self._relation_form = smith_tools.hermite(
            self.relations, size=len(self.basis))

    @classmethod
    def cokernel(cls, matrix):
        """ℤ^rows / column span of matrix (rows labelled)."""
        size = matrix.nrows
        basis = matrix.row_labels or tuple(str(i) for i in range(size))
        relations = [c for c in matrix.columns() if any(c)]
        decomposition = smith_tools.smith(matrix)
        identity = [tuple(int(i == j) for j in range(size))
                    for i in range(size)]
        return cls._from_decomposition(
            decomposition, identity, relations, basis)

    @classmethod
    def free(cls, vectors, basis):
        """The sublattice spanned by independent vectors."""
        return cls.subquotient(vectors, (), basis)

    @classmethod
    def subquotient(cls, vectors, relations, basis):
        """(span(vectors) + span(relations)) / span(relations).

        The group is ℤ^p / {c : Σ c_i v_i ∈ span(relations)}; the
        relation lattice on coefficients comes from the kernel of
        [vectors | relations].
        """
        vectors = [tuple(v) for v in vectors]
        relations = [tuple(r) for r in relations if any(r)]
        size = len(basis)
        p = len(vectors)
        joined = smith_tools.IntMatrix.from_columns(
            vectors + relations, size)
        coefficient_relations = [
            k[:p] for k in smith_tools.kernel_basis(joined)]
        coefficient_relations = [k for k in coefficient_relations if any(k)]
        matrix = smith_tools.IntMatrix.from_columns(coefficient_relations, p)
        decomposition = smith_tools.smith(matrix)
        return cls._from_decomposition(
            decomposition, vectors, relations, basis)

    @classmethod
    def _from_decomposition(cls, decomposition, spanning, relations, basis):
        size = len(basis)
        p = len(spanning)
        diagonal = decomposition.diagonal
        free, torsion = [], []
        for i in range(p):
            d = diagonal[i] if i < len(diagonal) else 0
            if d == 1:
                continue
            coeffs = decomposition.U_inv.column(i)
            vector = tuple(
                sum(c * v[k] for c, v in zip(coeffs, spanning))
                for k in range(size))
            if d == 0:
                free.append(vector)
            else:
                torsion.append((d, vector))
        torsion.sort(key=lambda item: item[0])
        group = cls(basis, len(free), [d for d, _ in torsion], [], relations)
        group.generators = group._polish(free, torsion)
        return group

    def _polish(self, free, torsion):
        """Pick small representatives of the same subgroups.

        A torsion generator of order d is replaced by its smallest
        multiple k·t with k prime to d. Free generators are reduced
        modulo the relations plus the torsion part, then put in
        ``hermite`` form.
        """
        size = len(self.basis)
        torsion = [self._smallest_multiple(v, d) for d, v in torsion]
        saturation = smith_tools.hermite(
            list(self.relations) + torsion, size=size)
        free = [smith_tools.reduce_modulo(v, saturation) for v in free]
        if free:
            free = smith_tools.hermite(free, size=size)
            free = [smith_tools.reduce_modulo(v, saturation) for v in free]
        return tuple(free) + tuple(torsion)

    def _smallest_multiple(self, vector, order):
        candidates = (
            smith_tools.reduce_modulo(
                [k * value for value in vector], self._relation_form)
            for k in range(1, order) if math.gcd(k, order) == 1)
        return min(candidates, key=_size_key)

    @property
    def invariants(self):
        """(rank, torsion): equal invariants mean isomorphic groups."""
        return (self.rank, self.torsion)

    @property
    def order(self):
        """Number of elements, or None when infinite."""
        if self.rank:
            return None
        result = 1
        for d in self.torsion:
            result *= d
        return result

    def is_trivial(self):
        return not self.rank and not self.torsion

    def is_isomorphic(self, other):
        return self.invariants == other.invariants

    def is_zero(self, vector):
        """Whether vector lies in the relation lattice."""
        return not any(smith_tools.reduce_modulo(vector, self._relation_form))

    def coordinates(self, vector):
        """Coordinates of the class of vector on the generators.

        Torsion coordinates are reduced modulo their invariant factor.

        :return: a tuple, or None when vector is not in the group
        """
        solution = smith_tools.solve_lattice(
            list(self.generators) + list(self.relations), vector)
        if solution is None:
            return None
        coords = list(solution[:len(self.generators)])
        for index, d in enumerate(self.torsion):
            coords[self.rank + index] %= d
        return tuple(coords)

    def contains(self, vector):
        return self.coordinates(vector) is not None

    def same_subgroup(self, other):
        """Equality as subgroups of the same ambient quotient."""
        if self.basis != other.basis:
            return False
        if self._relation_form != other._relation_form:
            return False
        return (all(other.contains(g) for g in self.generators) and
                all(self.contains(g) for g in other.generators))

    def __str__(self):
        return render_structure(self.rank, self.torsion)

    def __repr__(self):
        return "<FgAbelianGroup: {}>".format(self)

    def render_generators(self):
        """One line per generator."""
        lines = []
        for index, vector in enumerate(self.generators):
            text = render_combination(vector, self.basis)
            if index < self.rank:
                lines.append("generator: {}".format(text))
            else:
                lines.append("generator (order {}): {}".format(
                    self.torsion[index - self.rank], text))
        return lines

    def render(self, name):
        lines = ["{} = {}".format(name, self)]
        lines += ["  {}".format(line) for line in self.render_generators()]
        return "\n".join(lines)


def inclusion_matrix(source_labels, target_labels):
    """Matrix of the map sending d(x) to d(x), x in source_labels."""
    index = dict((label, i) for i, label in enumerate(target_labels))
    columns = []
    for label in source_labels:
        column = [0] * len(target_labels)
        column[index[label]] = 1
        columns.append(column)
    return smith_tools.IntMatrix.from_columns(columns, len(target_labels))


class GroupHom(object):
    """A homomorphism induced by an ambient integer matrix.

    :param ``FgAbelianGroup`` source: the source group
    :param ``FgAbelianGroup`` target: the target group
    :param ``IntMatrix`` ambient: target basis x source basis matrix
    """

    def __init__(self, source, target, ambient):
        self.source = source
        self.target = target
        self.ambient = ambient
        self._validate()
        columns = [self.target.coordinates(v) for v in self.images]
        self.matrix = smith_tools.IntMatrix.from_columns(
            columns, len(target.generators))

    @property
    def images(self):
        """Ambient images of the source generators."""
        return [self.ambient.apply(g) for g in self.source.generators]

    def _validate(self):
        for relation in self.source.relations:
            if not self.target.is_zero(self.ambient.apply(relation)):
                logger.error("relation %s is not killed in the target",
                             relation)
                raise VerificationError(
                    "induced map is not well defined on relations")
        for generator, image in zip(self.source.generators, self.images):
            if not self.target.contains(image):
                logger.error("generator %s leaves the target", generator)
                raise VerificationError(
                    "induced map does not land in the target")

    def apply(self, coordinates):
        """Image of an element given by source coordinates."""
        result = self.matrix.apply(coordinates)
        result = list(result)
        for index, d in enumerate(self.target.torsion):
            result[self.target.rank + index] %= d
        return tuple(result)

    @property
    def injective(self):
        """Coefficient vectors killed by the map must already be zero."""
        images = self.images
        p = len(images)
        if not p:
            return True
        joined = smith_tools.IntMatrix.from_columns(
            images + list(self.target.relations), len(self.target.basis))
        for k in smith_tools.kernel_basis(joined):
            coeffs = k[:p]
            vector = tuple(
                sum(c * g[i] for c, g in zip(coeffs, self.source.generators))
                for i in range(len(self.source.basis)))
            if not self.source.is_zero(vector):
                return False
        return True

    @property
    def surjective(self):
        span = self.images + list(self.target.relations)
        return all(
            smith_tools.solve_lattice(span, g) is not None
            for g in self.target.generators)

    @property
    def is_isomorphism(self):
        return self.injective and self.surjective

    def image(self):
        """The image, as a subgroup of the target's ambient quotient."""
        return FgAbelianGroup.subquotient(
            self.images, self.target.relations, self.target.basis)

    def __repr__(self):
        return "<GroupHom: {} -> {}>".format(self.source, self.target)
