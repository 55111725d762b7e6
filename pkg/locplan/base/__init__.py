"""
General helper functions: validation, parsing and the exception hierarchy
"""

from . import num_utils, string_utils, errors
from .errors import *

__all__ = ['num_utils', 'string_utils', 'errors']
__all__ += errors.__all__
