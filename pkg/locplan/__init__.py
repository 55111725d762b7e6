"""
The locplan package
"""
from .__version__ import version as __version__
from . import base, graph, linalg, matroid, surface, proc, io, oracle
from .base import *
from .graph import *
from .linalg import *
from .matroid import *
from .surface import *
from .proc import *
from .io import *

__all__ = ['__version__']
# Traditional hierarchical approach - importing submodules
__all__ += base.__all__
__all__ += graph.__all__
__all__ += linalg.__all__
__all__ += matroid.__all__
__all__ += surface.__all__
__all__ += proc.__all__
__all__ += io.__all__

# Making things easier by surfacing all low-level modules directly:
__all__ += ['num_utils', 'string_utils', 'families', 'comp_utils', 'oracle']
