# -*- coding: utf-8 -*-
"""
Named graphs used as fixtures by the tests, the oracles and the command line

Created on Mon Oct 19 11:48:50 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import networkx as nx

from .graph import Graph

__all__ = ['complete_graph', 'cycle_graph', 'path_graph', 'petersen_graph',
           'cube_graph', 'complete_bipartite_graph', 'ladder_graph',
           'torus_grid', 'two_triangles', 'FAMILIES', 'named_graph']


def complete_graph(n):
    """
    K_n on vertices 0..n-1
    """
    return Graph.from_networkx(nx.complete_graph(n))


def cycle_graph(n):
    """
    C_n with vertices 0..n-1 in cyclic order
    """
    return Graph.from_networkx(nx.cycle_graph(n))


def path_graph(n):
    return Graph.from_networkx(nx.path_graph(n))


def petersen_graph():
    return Graph.from_networkx(nx.petersen_graph())


def cube_graph():
    """
    Skeleton of the 3-cube. Vertex ``i`` is the corner whose binary digits
    are the coordinates.
    """
    return Graph.from_networkx(nx.hypercube_graph(3))


def complete_bipartite_graph(m, n):
    """
    K_{m,n}; the first side is 0..m-1
    """
    return Graph.from_networkx(nx.complete_bipartite_graph(m, n))


def ladder_graph(rungs):
    """
    Ladder with ``rungs`` rungs. ``ladder_graph(4)`` has 8 vertices: the rails
    are 0..3 and 4..7, rung ``i`` joins ``i`` and ``i + 4``.
    """
    return Graph.from_networkx(nx.ladder_graph(rungs))


def torus_grid(rows, cols):
    """
    Cartesian product C_rows x C_cols. Vertex ``i * cols + j`` is the grid
    point ``(i, j)``.
    """
    return Graph.from_networkx(nx.grid_2d_graph(rows, cols, periodic=True))


def two_triangles():
    """
    Two triangles sharing the vertex 0 (the bowtie): 0-1-2 and 0-3-4
    """
    return Graph.from_pairs([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


FAMILIES = {'K4': lambda: complete_graph(4),
            'K5': lambda: complete_graph(5),
            'K33': lambda: complete_bipartite_graph(3, 3),
            'C3': lambda: cycle_graph(3),
            'C6': lambda: cycle_graph(6),
            'C10': lambda: cycle_graph(10),
            'petersen': petersen_graph,
            'cube': cube_graph,
            'L8': lambda: ladder_graph(4),
            'torus6x6': lambda: torus_grid(6, 6),
            'TT': two_triangles}


def named_graph(name):
    """
    Looks up one of the graphs in ``FAMILIES`` by name (case-insensitive)

    Parameters
    ----------
    name : str

    Returns
    -------
    Graph
    """
    lookup = dict((key.lower(), val) for key, val in FAMILIES.items())
    try:
        return lookup[name.lower()]()
    except KeyError:
        raise ValueError('Unknown graph name: "{}". Available: {}'
                         ''.format(name, sorted(FAMILIES)))
