# -*- coding: utf-8 -*-
"""
Validation of the numeric parameters: locality, half radius, integer lists

Created on Mon Oct 19 10:03:27 2026
"""

from __future__ import division, print_function, unicode_literals, absolute_import
import sys
import math
from numbers import Integral, Real

if sys.version_info.major == 3:
    from collections.abc import Iterable
    unicode = str
else:
    from collections import Iterable

__all__ = ['INFINITY', 'contains_integers', 'validate_locality',
           'validate_half_radius', 'is_infinite', 'locality_to_str']

INFINITY = math.inf

_INFINITY_WORDS = ('inf', 'infinity', '∞')


def contains_integers(iter_int, min_val=None):
    """
    Checks if the provided object is iterable (list, tuple etc.) and contains
    integers optionally greater than or equal to the provided min_val

    Parameters
    ----------
    iter_int : :class:`collections.Iterable`
        Iterable (e.g. list, tuple, etc.) of integers
    min_val : int, optional, default = None
        Lower bound every element must respect. Ignored by default.

    Returns
    -------
    bool
    """
    if not isinstance(iter_int, Iterable):
        raise TypeError('iter_int should be an Iterable')
    iter_int = list(iter_int)
    if len(iter_int) == 0:
        return False

    if min_val is not None:
        if not isinstance(min_val, (int, float)):
            raise TypeError('min_val should be an integer. Provided object was '
                            'of type: {}'.format(type(min_val)))
        if min_val % 1 != 0:
            raise ValueError('min_val should be an integer')

    for item in iter_int:
        if isinstance(item, bool) or not isinstance(item, Integral):
            return False
        if min_val is not None and item < min_val:
            return False
    return True


def is_infinite(r):
    """
    True if ``r`` is the infinite locality
    """
    return isinstance(r, Real) and math.isinf(r) and r > 0


def validate_locality(r, name='r'):
    """
    Validates a locality parameter.

    Parameters
    ----------
    r : int, float('inf') or str
        An integer at least 2, or infinity. Strings ``'inf'``,
        ``'infinity'``, ``'∞'`` and decimal integers are accepted as well.
    name : str, optional
        Name reported in the raised errors

    Returns
    -------
    int or float
        The integer locality, or ``math.inf``
    """
    if isinstance(r, (str, unicode)):
        token = r.strip().lower()
        if token in _INFINITY_WORDS:
            return INFINITY
        try:
            r = int(token)
        except ValueError:
            raise ValueError('{} should be an integer or "inf". Got: "{}"'
                             ''.format(name, r))
    if isinstance(r, bool) or not isinstance(r, Real):
        raise TypeError('{} should be an integer or infinity. Provided object '
                        'was of type: {}'.format(name, type(r)))
    if is_infinite(r):
        return INFINITY
    if r % 1 != 0:
        raise ValueError('{} should be an integer'.format(name))
    r = int(r)
    if r < 2:
        raise ValueError('{} should be at least 2. Got: {}'.format(name, r))
    return r


def validate_half_radius(rho):
    """
    Validates a radius counted in half units (rho = 2s for radius s, rho =
    2s + 1 for radius s + 1/2). Infinity stands for the whole component.

    Returns
    -------
    int or float
    """
    if isinstance(rho, bool) or not isinstance(rho, Real):
        raise TypeError('rho should be a non-negative integer')
    if is_infinite(rho):
        return INFINITY
    if rho % 1 != 0 or rho < 0:
        raise ValueError('rho should be a non-negative integer. Got: {}'
                         ''.format(rho))
    return int(rho)


def locality_to_str(r):
    """
    Formats a locality the way the command line accepts it
    """
    return 'inf' if is_infinite(r) else str(int(r))
