# -*- coding: utf-8 -*-

"""
:mod:`smith` --- Exact integer linear algebra
---------------------------------------------

Smith normal form with unimodular transforms, kernel lattices, a
Hermite form used to canonicalise lattice bases and integral solving.
The normal forms come from ``sympy.polys.matrices.normalforms`` working
on ``DomainMatrix`` objects over ``ZZ``; ``IntMatrix`` only carries the
row and column labels and converts values back to Python ``int``.
"""

from __future__ import unicode_literals

import functools
import math

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import (
    hermite_normal_form, smith_normal_decomp
)

from kgraph.lib.exceptions import BadRequest


class IntMatrix(object):
    """A dense rectangular integer matrix with optional labels.

    :param rows: iterable of rows (iterables of int)
    :param int ncols: number of columns, needed when there is no row
    :param row_labels: names of the rows (vertices of F^0 for b_matrix)
    :param col_labels: names of the columns (vertices of S_F)
    """

    def __init__(self, rows, ncols=None, row_labels=None, col_labels=None):
        self.rows = tuple(tuple(int(value) for value in row) for row in rows)
        if ncols is None:
            if self.rows:
                ncols = len(self.rows[0])
            elif col_labels is not None:
                ncols = len(col_labels)
            else:
                ncols = 0
        self.nrows = len(self.rows)
        self.ncols = ncols
        for row in self.rows:
            if len(row) != ncols:
                raise BadRequest("rows of unequal length")
        self.row_labels = (
            tuple(row_labels) if row_labels is not None else None)
        self.col_labels = (
            tuple(col_labels) if col_labels is not None else None)
        if self.row_labels is not None and len(self.row_labels) != self.nrows:
            raise BadRequest("row labels do not match the row count")
        if self.col_labels is not None and len(self.col_labels) != ncols:
            raise BadRequest("column labels do not match the column count")

    @classmethod
    def identity(cls, size):
        return cls.from_domain(DomainMatrix.eye(size, ZZ))

    @classmethod
    def zero(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = [list(column) for column in columns]
        return cls([[column[i] for column in columns] for i in range(nrows)],
                   ncols=len(columns))

    @classmethod
    def from_domain(cls, matrix):
        """Convert a ``DomainMatrix`` over ZZ (or integral QQ)."""
        nrows, ncols = matrix.shape
        if not nrows or not ncols:
            return cls.zero(nrows, ncols)
        if matrix.domain != ZZ:
            matrix = matrix.convert_to(ZZ)
        return cls([[int(value) for value in row]
                    for row in matrix.to_list()], ncols=ncols)

    def to_domain(self):
        """The same matrix as a ``DomainMatrix`` over ZZ."""
        return DomainMatrix(
            [[ZZ(value) for value in row] for row in self.rows],
            self.shape, ZZ)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return IntMatrix(
            self.columns(), ncols=self.nrows,
            row_labels=self.col_labels, col_labels=self.row_labels)

    def multiply(self, other):
        if self.ncols != other.nrows:
            raise BadRequest("cannot multiply {}x{} by {}x{}".format(
                self.nrows, self.ncols, other.nrows, other.ncols))
        if 0 in (self.nrows, self.ncols, other.ncols):
            return IntMatrix.zero(self.nrows, other.ncols)
        return IntMatrix.from_domain(self.to_domain() * other.to_domain())

    def apply(self, vector):
        """Return A·v for a vector given as a sequence."""
        vector = list(vector)
        if len(vector) != self.ncols:
            raise BadRequest("vector of size {} for {} columns".format(
                len(vector), self.ncols))
        return tuple(sum(a * b for a, b in zip(row, vector))
                     for row in self.rows)

    def is_zero(self):
        return not any(any(row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return "<IntMatrix: {}x{}>".format(self.nrows, self.ncols)

    def render(self):
        """Right-aligned text rendering, one row per line."""
        if not self.rows or not self.ncols:
            return "(empty {}x{} matrix)".format(self.nrows, self.ncols)
        width = max(len(str(value)) for row in self.rows for value in row)
        return "\n".join(
            " ".join(str(value).rjust(width) for value in row)
            for row in self.rows)


class SmithDecomposition(object):
    """U·A·Vt = D with U and Vt unimodular.

    ``U_inv`` and ``Vt_inv`` are kept alongside so that kernels,
    cokernels and lattice solving need no further inversion.
    """

    def __init__(self, matrix, U, D, Vt, U_inv, Vt_inv, rank):
        self.matrix = matrix
        self.U = U
        self.D = D
        self.Vt = Vt
        self.U_inv = U_inv
        self.Vt_inv = Vt_inv
        self.rank = rank

    @property
    def diagonal(self):
        """Every diagonal entry of D (min(rows, cols) of them)."""
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def invariant_factors(self):
        """The nonzero diagonal entries, in divisibility order."""
        return self.diagonal[:self.rank]

    def verify(self):
        """Check U·A·Vt = D, the diagonal shape and the divisibility
        chain. Return True when everything holds."""
        product = self.U.multiply(self.matrix).multiply(self.Vt)
        if product != self.D:
            return False
        for i in range(self.D.nrows):
            for j in range(self.D.ncols):
                if i != j and self.D[i, j]:
                    return False
        factors = self.diagonal
        for i, value in enumerate(factors):
            if value < 0:
                return False
            if i >= self.rank and value:
                return False
        for first, second in zip(factors[:self.rank],
                                 factors[1:self.rank]):
            if second % first:
                return False
        size = self.U.nrows
        if self.U.multiply(self.U_inv) != IntMatrix.identity(size):
            return False
        size = self.Vt.nrows
        return self.Vt.multiply(self.Vt_inv) == IntMatrix.identity(size)


def _inverse(matrix):
    """Inverse of a unimodular ``DomainMatrix`` over ZZ."""
    if not matrix.shape[0]:
        return matrix
    return matrix.convert_to(QQ).inv().convert_to(ZZ)


def smith(matrix):
    """Compute the Smith normal form of an integer matrix.

    The decomposition is sympy's ``smith_normal_decomp``; rows of D
    with a negative diagonal entry are negated together with the
    matching rows of U.

    :param ``IntMatrix`` matrix: the matrix A
    :rtype: ``SmithDecomposition``
    """
    m, n = matrix.shape
    if matrix.is_zero():
        U, Vt = DomainMatrix.eye(m, ZZ), DomainMatrix.eye(n, ZZ)
        D = IntMatrix.zero(m, n)
    else:
        smf, U, Vt = smith_normal_decomp(matrix.to_domain())
        D = IntMatrix.from_domain(smf)
        signs = [-1 if i < n and D[i, i] < 0 else 1 for i in range(m)]
        if -1 in signs:
            flip = DomainMatrix.diag([ZZ(s) for s in signs], ZZ)
            U = flip * U
            D = IntMatrix.from_domain(flip * smf)
    rank = sum(1 for value in
               (D[i, i] for i in range(min(m, n))) if value)
    return SmithDecomposition(
        matrix, IntMatrix.from_domain(U), D, IntMatrix.from_domain(Vt),
        IntMatrix.from_domain(_inverse(U)),
        IntMatrix.from_domain(_inverse(Vt)), rank)


def content(vector):
    """gcd of the entries (0 for the zero vector)."""
    return functools.reduce(math.gcd, (abs(value) for value in vector), 0)


def _pivot(vector):
    """Index of the last nonzero entry, or None."""
    for index in range(len(vector) - 1, -1, -1):
        if vector[index]:
            return index
    return None


def hermite(vectors, size=None):
    """Hermite form of the lattice spanned by vectors, read right to
    left.

    The vectors are the columns handed to sympy's
    ``hermite_normal_form``. Each returned vector has a positive last
    nonzero entry (its pivot); pivots are distinct, and every entry
    sitting at another vector's pivot is reduced into ``[0, pivot)``.
    Vectors are sorted by pivot position. The result only depends on
    the lattice.

    :param vectors: iterable of integer sequences of equal length
    :param int size: vector length, needed when vectors is empty
    :return: a list of tuples
    """
    vectors = [tuple(vector) for vector in vectors]
    if size is None:
        size = len(vectors[0]) if vectors else 0
    vectors = [vector for vector in vectors if any(vector)]
    if not vectors or not size:
        return []
    form = hermite_normal_form(
        IntMatrix.from_columns(vectors, size).to_domain())
    return IntMatrix.from_domain(form).columns()


def reduce_modulo(vector, hermite_rows):
    """Reduce vector modulo the lattice given in ``hermite`` form.

    Entries at pivot positions end up in ``[0, pivot)``.
    """
    vector = list(vector)
    for row in reversed(hermite_rows):
        p = _pivot(row)
        q = vector[p] // row[p]
        if q:
            for k in range(len(vector)):
                vector[k] -= q * row[k]
    return tuple(vector)


def kernel_basis(matrix):
    """Basis of the lattice ker(A) in ℤ^columns.

    Read off from the columns of Vt past the rank, then put in
    ``hermite`` form (each vector primitive, last nonzero entry
    positive).

    :param ``IntMatrix`` matrix: the matrix A
    :return: a list of tuples
    """
    decomposition = smith(matrix)
    vectors = [decomposition.Vt.column(j)
               for j in range(decomposition.rank, matrix.ncols)]
    return hermite(vectors, size=matrix.ncols)


def solve_lattice(basis, vector):
    """Integral coordinates of vector in the lattice spanned by basis.

    With U·B·Vt = D, B·x = v becomes D·y = U·v and x = Vt·y.

    :param basis: list of integer sequences (the spanning columns)
    :param vector: integer sequence
    :return: a tuple of coefficients, one per basis vector, or None
    """
    vector = list(vector)
    if not basis:
        return () if not any(vector) else None
    matrix = IntMatrix.from_columns(basis, len(vector))
    decomposition = smith(matrix)
    target = decomposition.U.apply(vector)
    diagonal = decomposition.diagonal
    coords = [0] * matrix.ncols
    for i, value in enumerate(target):
        if i < decomposition.rank:
            if value % diagonal[i]:
                return None
            coords[i] = value // diagonal[i]
        elif value:
            return None
    return decomposition.Vt.apply(coords)
