"""
Exact linear algebra over GF(2) and GF(3)
"""

from . import field, subspace
from .field import FieldTag, row_reduce, rank, nullspace, left_nullspace, \
    solve
from .subspace import *

__all__ = ['field', 'subspace', 'FieldTag', 'row_reduce', 'rank',
           'nullspace', 'left_nullspace', 'solve']
__all__ += subspace.__all__
