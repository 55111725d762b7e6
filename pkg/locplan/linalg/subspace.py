# -*- coding: utf-8 -*-
"""
Sparse edge vectors and row-reduced subspaces of GF(p)^E

Created on Mon Oct 19 13:58:41 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import numpy as np

from ..base.errors import InputError
from ..graph.graph import vertex_key
from .field import FieldTag, row_reduce, nullspace, left_nullspace

__all__ = ['EdgeVector', 'Subspace', 'span_basis', 'contains',
           'orthogonal_complement', 'supported_subspace']


class EdgeVector(object):
    """
    Vector over GF(2) or GF(3) indexed by edge ids. Zero entries are not
    stored.
    """

    def __init__(self, field, entries=None):
        """
        Parameters
        ----------
        field : FieldTag or str
        entries : dict, optional
            edge id -> field element. Integers are reduced modulo the field
            order, so -1 is accepted over GF(3).
        """
        self.field = FieldTag.parse(field)
        self._entries = dict()
        if entries is None:
            entries = dict()
        for eid, val in dict(entries).items():
            val = self.field.canonical(val)
            if val != 0:
                self._entries[eid] = val

    @classmethod
    def from_support(cls, field, edges):
        """
        0/1 vector of an edge set
        """
        return cls(field, dict((e, 1) for e in edges))

    @classmethod
    def from_dense(cls, field, ambient, values):
        return cls(field, dict(zip(ambient, [int(x) for x in values])))

    @property
    def entries(self):
        return dict(self._entries)

    @property
    def support(self):
        return frozenset(self._entries)

    @property
    def weight(self):
        return len(self._entries)

    def is_zero(self):
        return len(self._entries) == 0

    def __getitem__(self, eid):
        return self._entries.get(eid, 0)

    def to_dense(self, ambient):
        """
        Dense int64 array following ``ambient``

        Raises
        ------
        InputError
            If the support leaves the ambient edge set
        """
        index = dict((e, i) for i, e in enumerate(ambient))
        dense = np.zeros(len(index), dtype=np.int64)
        for eid, val in self._entries.items():
            if eid not in index:
                raise InputError('Edge {} is outside the ambient edge set'
                                 ''.format(eid))
            dense[index[eid]] = val
        return dense

    def _check(self, other):
        if not isinstance(other, EdgeVector):
            raise TypeError('Expected an EdgeVector. Got: {}'.format(type(other)))
        if other.field != self.field:
            raise InputError('Cannot mix vectors over {} and {}'
                             ''.format(self.field, other.field))

    def __add__(self, other):
        self._check(other)
        entries = dict(self._entries)
        for eid, val in other._entries.items():
            entries[eid] = entries.get(eid, 0) + val
        return EdgeVector(self.field, entries)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return EdgeVector(self.field, dict((e, v * factor)
                                           for e, v in self._entries.items()))

    def dot(self, other):
        self._check(other)
        total = sum(val * other[eid] for eid, val in self._entries.items())
        return total % self.field.order

    def binary_pattern(self):
        """
        GF(2) vector with the same support
        """
        return EdgeVector.from_support(FieldTag.GF2, self._entries)

    def __eq__(self, other):
        if not isinstance(other, EdgeVector):
            return NotImplemented
        return self.field == other.field and self._entries == other._entries

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.field, frozenset(self._entries.items())))

    def __repr__(self):
        items = sorted(self._entries.items(), key=lambda kv: vertex_key(kv[0]))
        return 'EdgeVector({}, {{{}}})'.format(
            self.field, ', '.join('{}: {}'.format(k, v) for k, v in items))


class Subspace(object):
    """
    Subspace of GF(p)^E stored as a reduced row echelon basis.

    The ambient edge ids are kept in ascending ``vertex_key`` order, which
    makes the echelon form, and therefore every basis handed out, unique.
    """

    def __init__(self, field, ambient, matrix=None):
        """
        Parameters
        ----------
        field : FieldTag or str
        ambient : iterable
            Edge ids (distinct)
        matrix : array-like, optional
            Spanning rows as dense vectors over ``ambient`` in the order
            given. The zero subspace by default.
        """
        self.field = FieldTag.parse(field)
        ambient = list(ambient)
        if len(set(ambient)) != len(ambient):
            raise InputError('Ambient edge ids must be distinct')
        order = sorted(range(len(ambient)), key=lambda i: vertex_key(ambient[i]))
        self._ambient = tuple(ambient[i] for i in order)
        self._index = dict((e, i) for i, e in enumerate(self._ambient))

        n = len(self._ambient)
        if matrix is None or np.asarray(matrix).size == 0:
            self._matrix = np.zeros((0, n), dtype=np.int64)
            self._pivots = tuple()
        else:
            mat = np.asarray(matrix, dtype=np.int64)
            if mat.ndim == 1:
                mat = mat.reshape(1, -1)
            if mat.shape[1] != n:
                raise InputError('Expected rows of length {}. Got: {}'
                                 ''.format(n, mat.shape[1]))
            reduced = row_reduce(mat[:, order], self.field)
            self._matrix = reduced.matrix
            self._pivots = reduced.pivots
        self._matrix.setflags(write=False)

    @classmethod
    def full(cls, field, ambient):
        ambient = list(ambient)
        return cls(field, ambient, np.eye(len(ambient), dtype=np.int64))

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient)

    @classmethod
    def _from_reduced(cls, field, ambient, matrix):
        # matrix is already over the sorted ambient
        return cls(field, ambient, matrix)

    @property
    def ambient(self):
        return self._ambient

    @property
    def dim(self):
        return self._matrix.shape[0]

    @property
    def matrix(self):
        """
        Basis as a read-only (dim x |ambient|) array
        """
        return self._matrix

    @property
    def pivots(self):
        return self._pivots

    @property
    def basis(self):
        """
        Basis rows as EdgeVectors
        """
        return [EdgeVector.from_dense(self.field, self._ambient, row)
                for row in self._matrix]

    def column_index(self, eid):
        return self._index[eid]

    def dense(self, vector):
        """
        Dense form of an EdgeVector over this ambient
        """
        if vector.field != self.field:
            raise InputError('Cannot mix vectors over {} and {}'
                             ''.format(self.field, vector.field))
        return vector.to_dense(self._ambient)

    def contains(self, vector):
        return contains(self, vector)

    def __contains__(self, vector):
        return contains(self, vector) is not None

    def is_subspace_of(self, other):
        """
        True if every basis row of ``self`` lies in ``other``
        """
        self._check_compatible(other)
        if self.dim > other.dim:
            return False
        return all(_contains_dense(other, self._permute_to(other, row))
                   is not None for row in self._matrix)

    def _permute_to(self, other, row):
        if self._ambient == other._ambient:
            return row
        dense = np.zeros(len(other._ambient), dtype=np.int64)
        for i, e in enumerate(self._ambient):
            dense[other._index[e]] = row[i]
        return dense

    def _check_compatible(self, other):
        if not isinstance(other, Subspace):
            raise TypeError('Expected a Subspace. Got: {}'.format(type(other)))
        if self.field != other.field:
            raise InputError('Cannot compare subspaces over {} and {}'
                             ''.format(self.field, other.field))
        if set(self._ambient) != set(other._ambient):
            raise InputError('Subspaces live over different edge sets')

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self._ambient == other._ambient
                and np.array_equal(self._matrix, other._matrix))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.field, self._ambient, self._matrix.tobytes()))

    def __repr__(self):
        return 'Subspace({}, dim={}, |ambient|={})'.format(
            self.field, self.dim, len(self._ambient))


def span_basis(vectors, field, ambient):
    """
    Row-reduced basis of the span of ``vectors``

    Parameters
    ----------
    vectors : iterable of EdgeVector
    field : FieldTag or str
    ambient : iterable
        Edge ids every vector is supported on

    Returns
    -------
    Subspace

    Raises
    ------
    InputError
        Mixed fields or vectors supported outside ``ambient``
    """
    field = FieldTag.parse(field)
    ambient = list(ambient)
    rows = []
    for vec in vectors:
        if not isinstance(vec, EdgeVector):
            raise TypeError('span_basis expects EdgeVector objects. Got: {}'
                            ''.format(type(vec)))
        if vec.field != field:
            raise InputError('Cannot mix vectors over {} and {}'
                             ''.format(vec.field, field))
        rows.append(vec.to_dense(ambient))
    if len(rows) == 0:
        return Subspace(field, ambient)
    return Subspace(field, ambient, np.vstack(rows))


def _contains_dense(space, dense):
    p = space.field.order
    dense = np.mod(np.asarray(dense, dtype=np.int64), p)
    if space.dim == 0:
        return [] if not dense.any() else None
    coefficients = dense[list(space.pivots)]
    residual = np.mod(dense - coefficients.dot(space.matrix), p)
    if residual.any():
        return None
    return [int(c) for c in coefficients]


def contains(space, vector):
    """
    Expresses ``vector`` over the basis of ``space``

    Parameters
    ----------
    space : Subspace
    vector : EdgeVector

    Returns
    -------
    list of int or None
        Coefficients ``c`` with ``sum(c[i] * space.basis[i]) == vector``, None
        if ``vector`` is not in ``space``
    """
    try:
        dense = space.dense(vector)
    except InputError:
        if vector.field != space.field:
            raise
        return None
    return _contains_dense(space, dense)


def orthogonal_complement(space):
    """
    All vectors orthogonal to every basis row of ``space`` under the standard
    dot product

    Returns
    -------
    Subspace
        Dimension ``|ambient| - space.dim``
    """
    n = len(space.ambient)
    if space.dim == 0:
        return Subspace.full(space.field, space.ambient)
    kernel = nullspace(space.matrix, space.field, num_cols=n)
    return Subspace._from_reduced(space.field, space.ambient, kernel)


def supported_subspace(space, edges):
    """
    All vectors of ``space`` that vanish outside ``edges``

    Parameters
    ----------
    space : Subspace
    edges : iterable
        Subset of the ambient edge ids

    Returns
    -------
    Subspace
    """
    edges = set(edges)
    unknown = edges.difference(space.ambient)
    if unknown:
        raise InputError('Edges {} are outside the ambient edge set'
                         ''.format(sorted(unknown, key=vertex_key)))
    if space.dim == 0:
        return Subspace(space.field, space.ambient)
    outside = [i for i, e in enumerate(space.ambient) if e not in edges]
    if len(outside) == 0:
        return space
    combos = left_nullspace(space.matrix[:, outside], space.field,
                            num_rows=space.dim)
    if combos.shape[0] == 0:
        return Subspace(space.field, space.ambient)
    rows = np.mod(combos.dot(space.matrix), space.field.order)
    return Subspace._from_reduced(space.field, space.ambient, rows)
