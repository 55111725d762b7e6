# -*- coding: utf-8 -*-
"""
Abstract :class:`~locplan.io.GraphReader` base-class and the readers for the
two graph file formats

Created on Wed Oct 21 14:02:51 2026
"""

from __future__ import division, print_function, absolute_import, unicode_literals
import abc
import io
import json
import os
import sys

from ..base.errors import InputError
from ..base.string_utils import validate_single_string_arg, \
    validate_list_of_strings, parse_edge_line
from ..graph.graph import Graph

if sys.version_info.major == 3:
    unicode = str
else:
    FileNotFoundError = ValueError

__all__ = ['GraphReader', 'JsonGraphReader', 'EdgeListReader', 'read_graph']


class GraphReader(object):
    """
    Abstract class that defines the most basic functionality of a graph file
    reader. A reader turns one file into a single :class:`~locplan.Graph`
    """
    __metaclass__ = abc.ABCMeta

    def __init__(self, file_path, *args, **kwargs):
        """
        Parameters
        -----------
        file_path : str
            Path to the file that needs to be read

        Attributes
        ----------
        self._input_file_path : str
            Path to the file that will be read

        Raises
        ------
        FileNotFoundError
        """
        file_path = validate_single_string_arg(file_path, 'file_path')
        if not os.path.exists(file_path):
            raise FileNotFoundError(file_path + ' does not exist')
        self._input_file_path = file_path

    @abc.abstractmethod
    def read(self, *args, **kwargs):
        """
        Extracts the graph from the provided file

        Returns
        -------
        graph : Graph
            Loops are rejected

        Raises
        ------
        NotImplementedError : if the child class does not implement this method
        InputError : if the content is malformed
        """
        raise NotImplementedError('The read method needs to be '
                                  'implemented by the child class')

    def can_read(self, *args, **kwargs):
        """
        Checks whether the provided file can be read by this reader by
        comparing the file extension against the ``extension`` keyword
        argument.

        Parameters
        ----------
        extension : str or iterable of str, Optional. Default = None
            File extension for the input file.

        Returns
        -------
        file_path : str
            Absolute path to the file if it can be read, else None

        Raises
        ------
        NotImplementedError : if this function is called for this or a child
        class that does not provide the ``extension`` keyword argument
        """
        targ_ext = kwargs.get('extension', None)
        if not targ_ext:
            raise NotImplementedError('Either can_read() has not been '
                                      'implemented by this Reader or the '
                                      '"extension" keyword argument was '
                                      'missing')
        if isinstance(targ_ext, (str, unicode)):
            targ_ext = [targ_ext]
        targ_ext = validate_list_of_strings(targ_ext,
                                            parm_name='(keyword argument) '
                                                      '"extension"')
        targ_ext = [item.replace('.', '').lower() for item in targ_ext]

        file_path = os.path.abspath(self._input_file_path)
        extension = os.path.splitext(file_path)[1][1:].lower()
        if extension in targ_ext:
            return file_path
        return None


def _as_id(value, what):
    # JSON has no tuples; slice vertices come back as lists
    if isinstance(value, list):
        return tuple(_as_id(x, what) for x in value)
    if isinstance(value, bool) or not isinstance(value, (int, str, unicode)):
        raise InputError('{} ids must be integers or strings. Got: {}'
                         ''.format(what, value))
    return value


class JsonGraphReader(GraphReader):
    """
    Reads ``{"vertices": [...], "edges": [[edge_id, u, v], ...]}``. The
    vertex list is optional.
    """

    def can_read(self, *args, **kwargs):
        return super(JsonGraphReader, self).can_read(extension='json')

    def read(self, *args, **kwargs):
        with io.open(self._input_file_path, mode='r', encoding='utf-8') as fp:
            try:
                data = json.load(fp)
            except ValueError as err:
                raise InputError('{} is not valid JSON: {}'.format(
                    self._input_file_path, err))
        if not isinstance(data, dict) or 'edges' not in data:
            raise InputError('Expected an object with an "edges" list')
        edges = []
        for item in data['edges']:
            if not isinstance(item, list) or len(item) != 3:
                raise InputError('Edges must be [edge_id, u, v]. Got: {}'
                                 ''.format(item))
            edges.append(tuple(_as_id(x, 'Edge and vertex') for x in item))
        vertices = data.get('vertices')
        if vertices is not None:
            vertices = [_as_id(v, 'Vertex') for v in vertices]
        return Graph(vertices=vertices, edges=edges, allow_loops=False)


class EdgeListReader(GraphReader):
    """
    Reads plain text with one edge ``u v`` per line. Edge ids are assigned
    0, 1, 2, ... in file order.
    """

    def can_read(self, *args, **kwargs):
        return super(EdgeListReader, self).can_read(
            extension=['txt', 'edges', 'el', 'edgelist'])

    def read(self, *args, **kwargs):
        pairs = []
        with io.open(self._input_file_path, mode='r', encoding='utf-8') as fp:
            for number, line in enumerate(fp):
                try:
                    pair = parse_edge_line(line)
                except ValueError as err:
                    raise InputError('Line {}: {}'.format(number + 1, err))
                if pair is not None:
                    pairs.append(pair)
        return Graph.from_pairs(pairs, allow_loops=False)


def read_graph(file_path):
    """
    Reads a graph file, JSON or edge list, chosen by extension (edge list for
    anything that is not ``.json``)

    Parameters
    ----------
    file_path : str

    Returns
    -------
    Graph
    """
    reader = JsonGraphReader(file_path)
    if reader.can_read() is None:
        reader = EdgeListReader(file_path)
    return reader.read()
