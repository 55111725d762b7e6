# -*- coding: utf-8 -*-
"""
Finite multigraphs with stable vertex and edge identifiers

Created on Mon Oct 19 10:21:44 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import sys
from collections import namedtuple
from numbers import Integral, Real
import networkx as nx

from ..base.errors import InputError

if sys.version_info.major == 3:
    unicode = str

__all__ = ['Graph', 'Dart', 'vertex_key', 'vertex_label']


Dart = namedtuple('Dart', ['edge', 'end'])
Dart.__doc__ = """
One end of an edge. ``end`` is 0 for the tail and 1 for the head of the
reference orientation; a loop owns both darts at its vertex.
"""


def vertex_key(item):
    """
    Sort key for vertex and edge identifiers.

    Integers sort before strings, which sort before tuples (slice vertices
    created by local cutting). Mixed identifiers therefore have one
    deterministic order.

    Parameters
    ----------
    item : int, str or tuple
        Identifier

    Returns
    -------
    tuple
    """
    if isinstance(item, bool):
        return 0, int(item)
    if isinstance(item, (Integral, Real)):
        return 0, item
    if isinstance(item, (str, unicode)):
        return 1, item
    if isinstance(item, tuple):
        return 2, tuple(vertex_key(x) for x in item)
    return 3, repr(item)


def vertex_label(item):
    """
    String form of an identifier for file output. Slice vertices ``(v, k)``
    become ``'v#k'``.
    """
    if isinstance(item, tuple):
        return '#'.join(vertex_label(x) for x in item)
    return '{}'.format(item)


class Graph(object):
    """
    Immutable finite multigraph.

    Parallel edges are allowed. Loops are allowed unless ``allow_loops`` is
    False (user input). Every edge carries a reference orientation: the
    stored pair of ends ``(tail, head)``.
    """

    def __init__(self, vertices=None, edges=None, keep_orientation=False,
                 allow_loops=True):
        """
        Parameters
        ----------
        vertices : iterable, optional
            Vertex identifiers. Derived from the edges when omitted.
        edges : iterable, optional
            Triples ``(edge_id, u, v)``
        keep_orientation : bool, optional. Default = False
            Keep ``(u, v)`` as given. By default the ends are sorted so that
            the tail is the smaller vertex.
        allow_loops : bool, optional. Default = True
            Whether edges with equal ends are accepted

        Raises
        ------
        InputError
            Duplicate edge ids, undeclared endpoints or forbidden loops
        """
        if edges is None:
            edges = []
        ends = dict()
        for item in edges:
            try:
                eid, u, v = item
            except (TypeError, ValueError):
                raise InputError('Edges must be given as (edge_id, u, v). Got: '
                                 '{}'.format(item))
            if eid in ends:
                raise InputError('Duplicate edge id: {}'.format(eid))
            if u == v and not allow_loops:
                raise InputError('Loop at vertex {} (edge {}) is not allowed'
                                 ''.format(u, eid))
            if not keep_orientation and vertex_key(v) < vertex_key(u):
                u, v = v, u
            ends[eid] = (u, v)

        if vertices is None:
            vertex_set = set()
            for u, v in ends.values():
                vertex_set.update((u, v))
        else:
            vertex_set = set(vertices)
            for eid, (u, v) in ends.items():
                for x in (u, v):
                    if x not in vertex_set:
                        raise InputError('Endpoint {} of edge {} is not a '
                                         'declared vertex'.format(x, eid))

        self._ends = ends
        self._vertices = tuple(sorted(vertex_set, key=vertex_key))
        self._edge_ids = tuple(sorted(ends, key=vertex_key))
        incident = dict((x, []) for x in self._vertices)
        for eid in self._edge_ids:
            u, v = ends[eid]
            incident[u].append(eid)
            if v != u:
                incident[v].append(eid)
        self._incident = dict((x, tuple(val)) for x, val in incident.items())
        self._signature = None
        self._simple = None

    # construction helpers

    @classmethod
    def from_pairs(cls, pairs, vertices=None, allow_loops=True):
        """
        Builds a graph from ``(u, v)`` pairs. Edge ids are 0, 1, 2, ... in the
        given order.
        """
        return cls(vertices=vertices,
                   edges=[(i, u, v) for i, (u, v) in enumerate(pairs)],
                   allow_loops=allow_loops)

    @classmethod
    def from_networkx(cls, nx_graph, relabel=True):
        """
        Converts a networkx graph or multigraph.

        Parameters
        ----------
        nx_graph : networkx.Graph or networkx.MultiGraph
        relabel : bool, optional. Default = True
            Relabel vertices to 0..n-1 in sorted order (networkx generators
            use tuples for grids and cubes)

        Returns
        -------
        Graph
            Edge ids are 0..m-1 in sorted order of the (sorted) end pairs
        """
        if relabel:
            nx_graph = nx.convert_node_labels_to_integers(nx_graph,
                                                          ordering='sorted')
        pairs = []
        for u, v in nx_graph.edges():
            if vertex_key(v) < vertex_key(u):
                u, v = v, u
            pairs.append((u, v))
        pairs.sort(key=lambda p: (vertex_key(p[0]), vertex_key(p[1])))
        return cls.from_pairs(pairs, vertices=list(nx_graph.nodes()))

    def to_networkx(self):
        """
        Returns
        -------
        networkx.MultiGraph
            Edge keys are the edge ids
        """
        nx_graph = nx.MultiGraph()
        nx_graph.add_nodes_from(self._vertices)
        for eid in self._edge_ids:
            u, v = self._ends[eid]
            nx_graph.add_edge(u, v, key=eid)
        return nx_graph

    def to_simple_networkx(self):
        """
        Underlying simple graph: loops dropped, parallel edges merged
        """
        return self._simple_view().copy()

    def _simple_view(self):
        if self._simple is not None:
            return self._simple
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self._vertices)
        for eid in self._edge_ids:
            u, v = self._ends[eid]
            if u != v:
                nx_graph.add_edge(u, v)
        self._simple = nx_graph
        return nx_graph

    # basic queries

    @property
    def vertices(self):
        return self._vertices

    @property
    def edge_ids(self):
        return self._edge_ids

    @property
    def num_vertices(self):
        return len(self._vertices)

    @property
    def num_edges(self):
        return len(self._edge_ids)

    def has_vertex(self, v):
        return v in self._incident

    def has_edge(self, eid):
        return eid in self._ends

    def check_vertex(self, v):
        """
        Raises InputError for unknown vertices
        """
        if v not in self._incident:
            raise InputError('Unknown vertex: {}'.format(v))

    def ends(self, eid):
        """
        Returns
        -------
        tuple
            ``(tail, head)`` of the reference orientation
        """
        try:
            return self._ends[eid]
        except KeyError:
            raise InputError('Unknown edge: {}'.format(eid))

    def is_loop(self, eid):
        u, v = self.ends(eid)
        return u == v

    @property
    def has_loops(self):
        return any(u == v for u, v in self._ends.values())

    def incident_edges(self, v):
        """
        Edge ids at ``v`` in ascending order, each loop listed once
        """
        self.check_vertex(v)
        return self._incident[v]

    def atomic_cut_edges(self, v):
        """
        Non-loop edges at ``v``
        """
        return tuple(e for e in self.incident_edges(v) if not self.is_loop(e))

    def degree(self, v):
        return sum(2 if self.is_loop(e) else 1 for e in self.incident_edges(v))

    def other_end(self, eid, v):
        u, w = self.ends(eid)
        if v == u:
            return w
        if v == w:
            return u
        raise InputError('Vertex {} is not an end of edge {}'.format(v, eid))

    def neighbors(self, v):
        """
        Distinct neighbours of ``v`` (``v`` itself when it carries a loop)
        """
        found = set(self.other_end(e, v) for e in self.incident_edges(v))
        return tuple(sorted(found, key=vertex_key))

    def darts_at(self, v):
        """
        Darts whose end lies at ``v``, ascending by (edge, end)
        """
        darts = []
        for eid in self.incident_edges(v):
            u, w = self._ends[eid]
            if u == v:
                darts.append(Dart(eid, 0))
            if w == v:
                darts.append(Dart(eid, 1))
        return darts

    def dart_vertex(self, dart):
        return self.ends(dart.edge)[dart.end]

    # derived graphs

    def edge_subgraph(self, edge_ids, keep_vertices=False):
        """
        Subgraph on the given edges, orientation kept. Only their endpoints
        are kept unless ``keep_vertices``.
        """
        edge_ids = list(edge_ids)
        edges = [(e,) + self.ends(e) for e in edge_ids]
        if keep_vertices:
            vertices = self._vertices
        else:
            vertices = set()
            for _, u, v in edges:
                vertices.update((u, v))
        return Graph(vertices=vertices, edges=edges, keep_orientation=True)

    def induced_subgraph(self, vertices):
        """
        Subgraph induced by ``vertices``, orientation kept
        """
        vertices = set(vertices)
        for v in vertices:
            self.check_vertex(v)
        edges = [(e,) + self._ends[e] for e in self._edge_ids
                 if self._ends[e][0] in vertices and self._ends[e][1] in vertices]
        return Graph(vertices=vertices, edges=edges, keep_orientation=True)

    def remove_vertex(self, v):
        self.check_vertex(v)
        return self.induced_subgraph([x for x in self._vertices if x != v])

    def identify(self, mapping):
        """
        Quotient graph: every vertex ``x`` becomes ``mapping.get(x, x)``. Edge
        ids and orientation are kept; identified ends may produce loops.
        """
        vertices = set(mapping.get(x, x) for x in self._vertices)
        edges = [(e, mapping.get(self._ends[e][0], self._ends[e][0]),
                  mapping.get(self._ends[e][1], self._ends[e][1]))
                 for e in self._edge_ids]
        return Graph(vertices=vertices, edges=edges, keep_orientation=True)

    def components(self):
        """
        Vertex sets of the connected components, each sorted, ordered by their
        smallest vertex
        """
        comps = [sorted(c, key=vertex_key) for c in
                 nx.connected_components(self._simple_view())]
        comps.sort(key=lambda c: vertex_key(c[0]))
        return [tuple(c) for c in comps]

    @property
    def num_components(self):
        return len(self.components())

    def distances_from(self, v, cutoff=None):
        """
        Breadth-first distances from ``v``

        Returns
        -------
        dict
            vertex -> distance, for every vertex reachable within ``cutoff``
        """
        self.check_vertex(v)
        return nx.single_source_shortest_path_length(
            self._simple_view(), v, cutoff=cutoff)

    def signature(self):
        """
        Hashable structural key: vertices plus oriented edges
        """
        if self._signature is None:
            self._signature = (self._vertices,
                               tuple((e,) + self._ends[e] for e in self._edge_ids))
        return self._signature

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.signature() == other.signature()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return 'Graph(|V|={}, |E|={})'.format(self.num_vertices, self.num_edges)
