"""
Brute-force references for small instances
"""

from . import bruteforce
from .bruteforce import *

__all__ = ['bruteforce']
__all__ += bruteforce.__all__
