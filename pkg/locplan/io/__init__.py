"""
Reading graph files and reading / writing embedding files
"""

from . import reader, embedding_io
from .reader import *
from .embedding_io import *

__all__ = ['reader', 'embedding_io']
__all__ += reader.__all__
__all__ += embedding_io.__all__
