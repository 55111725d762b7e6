# -*- coding: utf-8 -*-
"""
Dense matrix kernels over the prime fields GF(2) and GF(3)

Created on Mon Oct 19 13:20:05 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import sys
from collections import namedtuple
from enum import Enum
import numpy as np

if sys.version_info.major == 3:
    unicode = str

__all__ = ['FieldTag', 'RowReduceResult', 'to_field', 'row_reduce', 'rank',
           'nullspace', 'left_nullspace', 'solve']


class FieldTag(Enum):
    """
    The two fields the package computes over. The value is the order.
    """
    GF2 = 2
    GF3 = 3

    @property
    def order(self):
        return self.value

    @classmethod
    def parse(cls, value):
        """
        Accepts a FieldTag, the strings ``'gf2'`` / ``'gf3'`` (any case) or
        the integers 2 / 3

        Returns
        -------
        FieldTag
        """
        if isinstance(value, cls):
            return value
        if isinstance(value, (str, unicode)):
            token = value.strip().lower().replace('(', '').replace(')', '')
            for item in cls:
                if token in (item.name.lower(), str(item.value)):
                    return item
            raise ValueError('Unknown field: "{}". Use gf2 or gf3'.format(value))
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
            for item in cls:
                if item.value == value:
                    return item
            raise ValueError('Unknown field order: {}'.format(value))
        raise TypeError('field should be a FieldTag, str or int. Provided '
                        'object was of type: {}'.format(type(value)))

    def inverse(self, a):
        """
        Multiplicative inverse of a nonzero element
        """
        a = int(a) % self.value
        if a == 0:
            raise ZeroDivisionError('0 has no inverse in {}'.format(self))
        return pow(a, self.value - 2, self.value)

    def canonical(self, a):
        """
        Representative in 0..p-1, so that -1 becomes p-1
        """
        return int(a) % self.value

    def signed(self, a):
        """
        Representative in -1, 0, 1
        """
        a = int(a) % self.value
        return a - self.value if a > self.value // 2 else a

    def __str__(self):
        return self.name.lower()


RowReduceResult = namedtuple('RowReduceResult', ['matrix', 'rank', 'pivots'])


def to_field(matrix, field):
    """
    Copy of ``matrix`` as a 2D int64 array with entries in 0..p-1
    """
    field = FieldTag.parse(field)
    mat = np.array(matrix, dtype=np.int64)
    if mat.ndim == 1:
        mat = mat.reshape(1, -1)
    if mat.ndim != 2:
        raise ValueError('Expected a 2D matrix. Got shape: {}'.format(mat.shape))
    return np.mod(mat, field.order)


def row_reduce(matrix, field):
    """
    Reduced row echelon form over the given field.

    Pivot entries are 1 and every pivot column is zero outside its pivot row.
    Zero rows are dropped.

    Parameters
    ----------
    matrix : array-like
        2D integer matrix
    field : FieldTag

    Returns
    -------
    RowReduceResult
        ``matrix`` (rank x n), ``rank`` and the tuple of pivot columns
    """
    field = FieldTag.parse(field)
    p = field.order
    mat = to_field(matrix, field)
    m, n = mat.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nonzero = np.nonzero(mat[row:, col])[0]
        if len(nonzero) == 0:
            continue
        pivot = row + nonzero[0]
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        if mat[row, col] != 1:
            mat[row] = (mat[row] * field.inverse(mat[row, col])) % p
        factors = mat[:, col].copy()
        factors[row] = 0
        if factors.any():
            mat = np.mod(mat - np.outer(factors, mat[row]), p)
        pivots.append(col)
        row += 1
    return RowReduceResult(matrix=mat[:row].copy(), rank=row,
                           pivots=tuple(pivots))


def rank(matrix, field):
    """
    Rank over the given field
    """
    mat = np.asarray(matrix)
    if mat.size == 0:
        return 0
    return row_reduce(mat, field).rank


def nullspace(matrix, field, num_cols=None):
    """
    Basis of ``{x : matrix @ x = 0}``

    Parameters
    ----------
    matrix : array-like
        2D matrix with ``num_cols`` columns (may have no rows)
    field : FieldTag
    num_cols : int, optional
        Number of columns, required when ``matrix`` has no rows

    Returns
    -------
    numpy.ndarray
        (n - rank) x n matrix, rows in reduced echelon form
    """
    field = FieldTag.parse(field)
    p = field.order
    mat = np.asarray(matrix)
    if num_cols is None:
        num_cols = mat.shape[1]
    if mat.size == 0:
        return np.eye(num_cols, dtype=np.int64)
    reduced = row_reduce(mat, field)
    pivot_set = set(reduced.pivots)
    free_cols = [c for c in range(num_cols) if c not in pivot_set]
    basis = np.zeros((len(free_cols), num_cols), dtype=np.int64)
    for index, free in enumerate(free_cols):
        basis[index, free] = 1
        for row, col in enumerate(reduced.pivots):
            basis[index, col] = (-reduced.matrix[row, free]) % p
    if len(free_cols) == 0:
        return basis
    return row_reduce(basis, field).matrix


def left_nullspace(matrix, field, num_rows=None):
    """
    Basis of ``{y : y @ matrix = 0}``
    """
    mat = np.asarray(matrix)
    if num_rows is None:
        num_rows = mat.shape[0]
    if mat.size == 0:
        return np.eye(num_rows, dtype=np.int64)
    return nullspace(mat.T, field, num_cols=num_rows)


def solve(matrix, target, field):
    """
    One solution ``x`` of ``x @ matrix = target``

    Parameters
    ----------
    matrix : array-like
        k x n matrix
    target : array-like
        Vector of length n
    field : FieldTag

    Returns
    -------
    numpy.ndarray or None
        Vector of length k (free coordinates set to 0), None when the system
        is inconsistent
    """
    field = FieldTag.parse(field)
    mat = np.asarray(matrix, dtype=np.int64)
    target = np.mod(np.asarray(target, dtype=np.int64).ravel(), field.order)
    num_rows = mat.shape[0] if mat.ndim == 2 else 0
    if num_rows == 0:
        return np.zeros(0, dtype=np.int64) if not target.any() else None
    augmented = np.concatenate([mat.T, target.reshape(-1, 1)], axis=1)
    reduced = row_reduce(augmented, field)
    if len(reduced.pivots) > 0 and reduced.pivots[-1] == num_rows:
        return None
    solution = np.zeros(num_rows, dtype=np.int64)
    for row, col in enumerate(reduced.pivots):
        solution[col] = reduced.matrix[row, -1]
    return solution
