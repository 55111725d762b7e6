"""
Short cycle generators, r-local matroids and graph realization
"""

from . import short_cycles, local_matroid, realization
from .short_cycles import *
from .local_matroid import *
from .realization import *

__all__ = ['short_cycles', 'local_matroid', 'realization']
__all__ += short_cycles.__all__
__all__ += local_matroid.__all__
__all__ += realization.__all__
