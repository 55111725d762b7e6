# -*- coding: utf-8 -*-
"""
Exceptions raised across locplan

Created on Mon Oct 19 09:40:02 2026
"""
from __future__ import division, print_function, unicode_literals, \
    absolute_import

__all__ = ['InputError', 'PreconditionError', 'NotLocallyRealizable',
           'VerificationError', 'CapsExceeded']


class InputError(ValueError):
    """
    Malformed user input: unknown vertices, loops in a user graph, mixed
    fields, inconsistent files
    """
    pass


class PreconditionError(ValueError):
    """
    An operation was called on arguments that violate its precondition
    """
    pass


class NotLocallyRealizable(ValueError):
    """
    Raised by the embedding builder when an atomic cut of G is not a cycle of
    the realization H.

    Parameters
    ----------
    vertex : object
        Vertex of G whose atomic cut failed
    message : str
        Human readable description
    """

    def __init__(self, vertex, message):
        super(NotLocallyRealizable, self).__init__(message)
        self.vertex = vertex


class VerificationError(RuntimeError):
    """
    An internal post-condition failed. Never caught inside the package.
    """
    pass


class CapsExceeded(RuntimeError):
    """
    A brute-force oracle was asked to work beyond its search caps
    """
    pass
