"""
Multigraphs and the metric primitives built on them
"""

from . import graph, locality, families
from .graph import *
from .locality import *

__all__ = ['locality', 'families']
__all__ += graph.__all__
__all__ += locality.__all__
