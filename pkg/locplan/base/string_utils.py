# -*- coding: utf-8 -*-
"""
Utilities for validating string arguments and parsing hand-written graph
files

Created on Mon Oct 19 09:52:13 2026
"""

from __future__ import division, print_function, absolute_import, unicode_literals
import sys
import numpy as np

from .errors import InputError

if sys.version_info.major == 3:
    unicode = str
    from collections.abc import Iterable
else:
    from collections import Iterable

__all__ = ['format_quantity', 'format_time', 'validate_single_string_arg',
           'validate_list_of_strings', 'str_to_other',
           'remove_extra_delimiters', 'parse_edge_line']


def format_quantity(value, unit_names, factors, decimals=2):
    """
    Formats the provided quantity such as time to the largest unit that does
    not exceed it

    Parameters
    ----------
    value : number
        value in base units. For example - time in seconds
    unit_names : array-like
        Names of the units for each scale of the value
    factors : array-like
        Scaling factors for each scale of the value, ascending
    decimals : uint, optional. default = 2
        Number of decimal places

    Returns
    -------
    str
        String with value formatted correctly
    """
    if not isinstance(unit_names, Iterable):
        raise TypeError('unit_names must an Iterable')
    if not isinstance(factors, Iterable):
        raise TypeError('factors must be an Iterable')
    if len(unit_names) != len(factors):
        raise ValueError('unit_names and factors must be of the same length')
    unit_names = validate_list_of_strings(unit_names, 'unit_names')
    index = None

    for index, val in enumerate(factors):
        if value < val:
            index -= 1
            break

    index = max(0, index)

    return '{} {}'.format(np.round(value / factors[index], decimals),
                          unit_names[index])


def format_time(time_in_seconds, decimals=2):
    """
    Formats the provided time in seconds to msec, seconds, minutes, or hours.
    Used for the timing lines printed in verbose mode.

    Parameters
    ----------
    time_in_seconds : number
        Time in seconds
    decimals : uint, optional. default = 2
        Number of decimal places

    Returns
    -------
    str

    Examples
    --------
    >>> from locplan.base.string_utils import format_time
    >>> format_time(95.2)
    '1.59 mins'
    """
    units = ['msec', 'sec', 'mins', 'hours']
    factors = [0.001, 1, 60, 3600]
    return format_quantity(time_in_seconds, units, factors, decimals=decimals)


def validate_single_string_arg(value, name):
    """
    Validates a single string parameter and returns it trimmed

    Parameters
    ----------
    value : str
        Value of the parameter
    name : str
        Name of the parameter, used in the raised errors

    Returns
    -------
    str
        Cleaned string value of the parameter
    """
    if not isinstance(value, (str, unicode)):
        raise TypeError(name + ' should be a string')
    value = value.strip()
    if len(value) <= 0:
        raise InputError(name + ' should not be an empty string')
    return value


def validate_list_of_strings(str_list, parm_name='parameter'):
    """
    Validates and trims a list of strings. A single string is promoted to a
    list with one element

    Parameters
    ----------
    str_list : array-like
        list or tuple of strings
    parm_name : str, Optional. Default = 'parameter'
        Name of the parameter reported in the raised errors

    Returns
    -------
    list of str
    """
    if isinstance(str_list, (str, unicode)):
        return [validate_single_string_arg(str_list, parm_name)]

    if not isinstance(str_list, (list, tuple)):
        raise TypeError(parm_name + ' should be a string or list / tuple of '
                                    'strings')

    return [validate_single_string_arg(x, parm_name) for x in str_list]


def str_to_other(value):
    """
    Casts a single token of a text file to an integer when it looks like one.
    Vertex names in edge lists are integers whenever possible and strings
    otherwise.

    Parameters
    ----------
    value : str / unicode
        Token without spaces

    Returns
    -------
    int or str
    """
    if not isinstance(value, (str, unicode)):
        raise TypeError('Expected object of type str. Provided object was: {}'
                        ''.format(type(value)))
    value = value.strip()
    if len(value.split()) > 1:
        raise ValueError('Expected a string without spaces. Got: "{}"'
                         ''.format(value))
    try:
        return int(value)
    except ValueError:
        return value


def remove_extra_delimiters(line, separator=' '):
    """
    Removes extra spaces (or other delimiters) between tokens of a line

    Parameters
    ----------
    line : str / unicode
        Line to be cleaned
    separator : str / unicode, Optional. Default = ' '
        Separator between tokens

    Returns
    -------
    line : str
        Line with extra separators removed
    """
    if not isinstance(line, (str, unicode)):
        raise TypeError('line should be a string')
    if not isinstance(separator, (str, unicode)):
        raise TypeError('separator should be a string')
    if len(separator) == 0:
        raise ValueError('separator should not be empty')
    items = line.replace('\t', separator).split(separator)
    real = [item.strip() for item in items if len(item.strip()) > 0]
    return separator.join(real)


def parse_edge_line(line):
    """
    Parses one line of a plain edge list.

    Parameters
    ----------
    line : str
        A line of the form ``u v``. Anything after ``#`` is a comment.

    Returns
    -------
    tuple or None
        ``(u, v)`` with integer-looking tokens cast to int, None for blank
        and comment lines

    Raises
    ------
    ValueError
        If the line does not hold exactly two tokens
    """
    line = line.split('#', 1)[0]
    line = remove_extra_delimiters(line)
    if len(line) == 0:
        return None
    tokens = line.split(' ')
    if len(tokens) != 2:
        raise ValueError('Expected two vertices per line. Got: "{}"'
                         ''.format(line))
    return str_to_other(tokens[0]), str_to_other(tokens[1])
