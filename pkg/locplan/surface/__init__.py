"""
Combinatorial embeddings and the embedding / dual graph duality
"""

from . import embedding, duality
from .embedding import *
from .duality import *

__all__ = ['embedding', 'duality']
__all__ += embedding.__all__
__all__ += duality.__all__
