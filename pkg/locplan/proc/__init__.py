"""
Parallel helpers and the end to end embedding pipeline
"""

from . import comp_utils, pipeline
from .pipeline import *

__all__ = ['comp_utils', 'pipeline']
__all__ += pipeline.__all__
