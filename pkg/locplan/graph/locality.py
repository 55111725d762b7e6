# -*- coding: utf-8 -*-
"""
Metric and locality primitives: balls, r-local cutvertices, local cutting,
r-local blocks and girth

Created on Mon Oct 19 11:02:18 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
from collections import deque, Counter

from ..base.num_utils import INFINITY, validate_locality, validate_half_radius, \
    is_infinite
from ..base.errors import PreconditionError
from .graph import Graph, vertex_key

__all__ = ['BlockDecomposition', 'ball', 'is_r_local_cutvertex',
           'locally_cut', 'r_local_blocks', 'girth',
           'is_r_locally_2_connected']


def ball(graph, v, rho):
    """
    Ball around ``v`` with radius ``rho / 2``.

    Parameters
    ----------
    graph : Graph
    v : vertex id
    rho : int or math.inf
        Radius counted in half units. For ``rho = 2s`` the ball holds the
        vertices at distance at most ``s`` and the edges between them, except
        edges whose two ends are both at distance exactly ``s``. For
        ``rho = 2s + 1`` all those induced edges are kept. Infinity gives the
        component of ``v``.

    Returns
    -------
    Graph
        Induced piece of ``graph`` with edge ids and orientation kept
    """
    rho = validate_half_radius(rho)
    graph.check_vertex(v)
    if is_infinite(rho):
        dist = graph.distances_from(v)
        return graph.induced_subgraph(dist.keys())

    s, half = divmod(rho, 2)
    dist = graph.distances_from(v, cutoff=s)
    edges = []
    for eid in graph.edge_ids:
        a, b = graph.ends(eid)
        if a not in dist or b not in dist:
            continue
        if not half and dist[a] == s and dist[b] == s:
            continue
        edges.append((eid, a, b))
    return Graph(vertices=dist.keys(), edges=edges, keep_orientation=True)


def _punctured_components(graph, v, r):
    r = validate_locality(r)
    punctured = ball(graph, v, r).remove_vertex(v)
    return punctured.components()


def is_r_local_cutvertex(graph, v, r):
    """
    Checks whether the punctured ball ``B_{r/2}(v) - v`` is disconnected.

    Parameters
    ----------
    graph : Graph
    v : vertex id
    r : int or math.inf
        Locality, at least 2

    Returns
    -------
    bool
        False for isolated vertices
    """
    return len(_punctured_components(graph, v, r)) >= 2


def is_r_locally_2_connected(graph, r):
    """
    True if no vertex of ``graph`` is an r-local cutvertex
    """
    return not any(is_r_local_cutvertex(graph, v, r) for v in graph.vertices)


def locally_cut(graph, v, r):
    """
    Replaces ``v`` by one slice vertex per component of its punctured ball.

    Every non-loop edge ``vu`` is reattached to the slice of the component
    holding ``u``. Loops at ``v`` stay with the first slice.

    Parameters
    ----------
    graph : Graph
    v : vertex id
        Must be an r-local cutvertex
    r : int or math.inf

    Returns
    -------
    cut_graph : Graph
        Same edge ids, orientation kept
    slice_map : dict
        slice vertex -> ``v``. Slices are the tuples ``(v, 1)``, ``(v, 2)``...

    Raises
    ------
    PreconditionError
        If ``v`` is not an r-local cutvertex
    """
    graph.check_vertex(v)
    comps = _punctured_components(graph, v, r)
    if len(comps) < 2:
        raise PreconditionError('{} is not an {}-local cutvertex'.format(v, r))
    component_of = dict()
    for index, comp in enumerate(comps):
        for x in comp:
            component_of[x] = index
    slices = [(v, index + 1) for index in range(len(comps))]

    edges = []
    for eid in graph.edge_ids:
        a, b = graph.ends(eid)
        if a == v and b == v:
            a = b = slices[0]
        elif a == v:
            a = slices[component_of[b]]
        elif b == v:
            b = slices[component_of[a]]
        edges.append((eid, a, b))
    vertices = [x for x in graph.vertices if x != v] + slices
    cut_graph = Graph(vertices=vertices, edges=edges, keep_orientation=True)
    return cut_graph, dict((s, v) for s in slices)


class BlockDecomposition(object):
    """
    Edge-disjoint decomposition of a graph into its r-local blocks
    """

    def __init__(self, graph, r, blocks, slice_map):
        """
        Parameters
        ----------
        graph : Graph
            The decomposed graph
        r : int or math.inf
        blocks : list of Graph
            Connected components after all local cuts
        slice_map : dict
            block vertex -> originating vertex of ``graph``
        """
        self.graph = graph
        self.r = r
        self.blocks = list(blocks)
        self.slice_map = dict(slice_map)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def block_of_edge(self, eid):
        """
        Index of the block holding edge ``eid``
        """
        for index, block in enumerate(self.blocks):
            if block.has_edge(eid):
                return index
        raise KeyError(eid)

    def identified_vertices(self):
        """
        Vertices of the original graph with two or more slices
        """
        counts = Counter(self.slice_map.values())
        return sorted([v for v, c in counts.items() if c > 1], key=vertex_key)

    def edge_partition(self):
        """
        Block edge sets as a set of frozensets
        """
        return set(frozenset(b.edge_ids) for b in self.blocks)


def r_local_blocks(graph, r, reverse=False, verbose=False):
    """
    Cuts locally at r-local cutvertices until none remains.

    Parameters
    ----------
    graph : Graph
    r : int or math.inf
    reverse : bool, optional. Default = False
        Process candidate vertices in descending instead of ascending order.
        The resulting blocks do not depend on it.
    verbose : bool, optional. Default = False
        Print every cut

    Returns
    -------
    BlockDecomposition
    """
    r = validate_locality(r)
    current = graph
    origin = dict((x, x) for x in graph.vertices)
    while True:
        found = None
        for x in sorted(current.vertices, key=vertex_key, reverse=reverse):
            if is_r_local_cutvertex(current, x, r):
                found = x
                break
        if found is None:
            break
        current, slice_map = locally_cut(current, found, r)
        if verbose:
            print('Cut {} into {} slices'.format(origin[found], len(slice_map)))
        for s in slice_map:
            origin[s] = origin[found]
        del origin[found]

    blocks = [current.induced_subgraph(comp) for comp in current.components()]
    return BlockDecomposition(graph, r, blocks, origin)


def girth(graph):
    """
    Length of a shortest cycle.

    Returns
    -------
    int or math.inf
        1 with a loop, 2 with parallel edges, infinity for forests
    """
    if graph.has_loops:
        return 1
    pairs = Counter(frozenset(graph.ends(e)) for e in graph.edge_ids)
    if any(c > 1 for c in pairs.values()):
        return 2

    best = INFINITY
    adjacency = dict((v, graph.neighbors(v)) for v in graph.vertices)
    for root in graph.vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best
