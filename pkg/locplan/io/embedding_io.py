# -*- coding: utf-8 -*-
"""
JSON files for graphs and pseudo-surface embeddings

Created on Wed Oct 21 15:20:07 2026
"""

from __future__ import division, print_function, absolute_import, unicode_literals
import io
import json
import os
import sys

from ..base.errors import InputError
from ..base.string_utils import validate_single_string_arg
from ..surface.embedding import PseudoEmbedding

if sys.version_info.major == 2:
    FileNotFoundError = ValueError

__all__ = ['graph_to_dict', 'write_graph', 'write_embedding',
           'read_embedding']


def graph_to_dict(graph):
    """
    ``{"vertices": [...], "edges": [[edge_id, u, v], ...]}`` with the
    reference orientation kept
    """
    def plain(x):
        return list(plain(y) for y in x) if isinstance(x, tuple) else x

    return {'vertices': [plain(v) for v in graph.vertices],
            'edges': [[plain(e)] + [plain(x) for x in graph.ends(e)]
                      for e in graph.edge_ids]}


def _dump(data, file_path):
    file_path = validate_single_string_arg(file_path, 'file_path')
    with io.open(file_path, mode='w', encoding='utf-8') as fp:
        fp.write(json.dumps(data, indent=1, sort_keys=True,
                            ensure_ascii=False))
    return file_path


def write_graph(graph, file_path):
    """
    Writes ``graph`` in the JSON graph format read by ``JsonGraphReader``

    Returns
    -------
    str
        The path written
    """
    return _dump(graph_to_dict(graph), file_path)


def write_embedding(pseudo, file_path):
    """
    Writes a pseudo-embedding (blocks with rotations, signs, faces and Euler
    genus, plus the identification of block vertices)

    Returns
    -------
    str
        The path written
    """
    if not isinstance(pseudo, PseudoEmbedding):
        raise TypeError('pseudo should be a PseudoEmbedding')
    return _dump(pseudo.to_dict(), file_path)


def read_embedding(file_path):
    """
    Reads a file written by ``write_embedding``

    Returns
    -------
    PseudoEmbedding
        Block vertices are the string labels of the file

    Raises
    ------
    FileNotFoundError
    InputError
        Malformed content
    """
    file_path = validate_single_string_arg(file_path, 'file_path')
    if not os.path.exists(file_path):
        raise FileNotFoundError(file_path + ' does not exist')
    with io.open(file_path, mode='r', encoding='utf-8') as fp:
        try:
            data = json.load(fp)
        except ValueError as err:
            raise InputError('{} is not valid JSON: {}'.format(file_path, err))
    if not isinstance(data, dict):
        raise InputError('Expected a JSON object in {}'.format(file_path))
    return PseudoEmbedding.from_dict(data)
