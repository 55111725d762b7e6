# -*- coding: utf-8 -*-
"""
Polynomial-size generating sets for the span of the short cycles of a graph

Two families are produced. For a pair of vertices v, w at distance d, take a
maximum set of internally disjoint shortest v-w paths P_1, ..., P_k and the
cycles P_i P_{i+1} (length 2d). For a vertex v and an edge e = xy with
d(v, x) = d(v, y) = d, take two shortest paths from v to x and to y that only
share v, closed up by e (length 2d + 1). Every cycle of length at most r is a
sum of members of the two families with length at most r.

Created on Mon Oct 19 14:40:12 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import itertools
from collections import OrderedDict
import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from ..base.errors import InputError
from ..base.num_utils import validate_locality, is_infinite
from ..graph.graph import vertex_key
from ..linalg.field import FieldTag
from ..linalg.subspace import EdgeVector

__all__ = ['CycleWalk', 'max_disjoint_shortest_paths', 'odd_cycle_through',
           'short_cycle_generators', 'exhaustive_short_cycles',
           'effective_radius']

_EXHAUSTIVE_EDGE_LIMIT = 20
_CACHE_SIZE = 32
_GENERATOR_CACHE = OrderedDict()


class CycleWalk(object):
    """
    Closed walk visiting each vertex once.

    ``vertices[i]`` and ``vertices[i + 1]`` (cyclically) are the ends of
    ``edges[i]``. Edges are stored explicitly since the graph may have
    parallel edges.
    """

    def __init__(self, vertices, edges):
        vertices = tuple(vertices)
        edges = tuple(edges)
        if len(vertices) != len(edges) or len(edges) == 0:
            raise InputError('A cycle needs as many vertices as edges, and at '
                             'least one edge')
        if len(set(vertices)) != len(vertices):
            raise InputError('A cycle visits every vertex once. Got: {}'
                             ''.format(vertices))
        if len(set(edges)) != len(edges):
            raise InputError('A cycle uses every edge once. Got: {}'
                             ''.format(edges))
        self.vertices = vertices
        self.edges = edges

    @property
    def length(self):
        return len(self.edges)

    def __len__(self):
        return len(self.edges)

    @property
    def edge_set(self):
        return frozenset(self.edges)

    def sort_key(self):
        return len(self.edges), tuple(sorted((vertex_key(e) for e in self.edges)))

    def steps(self):
        """
        ``(edge, from_vertex, to_vertex)`` triples along the walk
        """
        k = len(self.vertices)
        return [(self.edges[i], self.vertices[i], self.vertices[(i + 1) % k])
                for i in range(k)]

    def reversed(self):
        """
        The same cycle traversed the other way round, from the same start
        """
        vertices = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        edges = tuple(reversed(self.edges))
        return CycleWalk(vertices, edges)

    def is_cycle_of(self, graph):
        """
        True if every step follows an edge of ``graph`` between the recorded
        vertices
        """
        for eid, a, b in self.steps():
            if not graph.has_edge(eid):
                return False
            if set(graph.ends(eid)) != set((a, b)):
                return False
        return True

    def vector(self, graph, field):
        """
        EdgeVector of the cycle.

        Over GF(2) the characteristic vector of the edge set. Over GF(3) an
        edge gets +1 when traversed from tail to head of its reference
        orientation in ``graph`` and -1 otherwise; a loop gets +1.

        Raises
        ------
        InputError
            If the walk does not run along ``graph``
        """
        field = FieldTag.parse(field)
        if not self.is_cycle_of(graph):
            raise InputError('{} is not a cycle of the graph'.format(self))
        if field == FieldTag.GF2:
            return EdgeVector.from_support(field, self.edges)
        entries = dict()
        for eid, a, b in self.steps():
            tail, head = graph.ends(eid)
            entries[eid] = 1 if (tail == a and head == b) or tail == head else -1
        return EdgeVector(field, entries)

    def __eq__(self, other):
        if not isinstance(other, CycleWalk):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return 'CycleWalk(vertices={}, edges={})'.format(list(self.vertices),
                                                         list(self.edges))


def _join_paths(first, second):
    """
    Cycle made of two internally disjoint paths with common ends, the second
    one walked backwards
    """
    verts_a, edges_a = first
    verts_b, edges_b = second
    vertices = list(verts_a) + list(reversed(verts_b[1:-1]))
    edges = list(edges_a) + list(reversed(edges_b))
    return CycleWalk(vertices, edges)


def _split_network(graph, dist, source, usable):
    """
    Unit capacity flow network on the layered structure: every vertex other
    than ``source`` is split into an in and out node, every usable oriented
    edge becomes its own node so that parallel edges stay distinct.
    """
    network = nx.DiGraph()
    for x in sorted(dist, key=vertex_key):
        if x != source:
            network.add_edge(('in', x), ('out', x), capacity=1)
    for eid, x, y in usable:
        network.add_edge(('out', x), ('edge', eid), capacity=1)
        network.add_edge(('edge', eid), ('in', y), capacity=1)
    return network


def _decompose(flow, source, sink):
    """
    Splits a unit flow on an acyclic network into source-sink paths

    Returns
    -------
    list of (vertices, edges)
    """
    residual = dict((u, dict((w, val) for w, val in targets.items() if val > 0))
                    for u, targets in flow.items())
    paths = []
    while residual.get(source):
        node = source
        vertices = [source[1]]
        edges = []
        while node != sink:
            nxt = sorted(residual[node], key=lambda n: (n[0], vertex_key(n[1])))[0]
            residual[node][nxt] -= 1
            if residual[node][nxt] == 0:
                del residual[node][nxt]
            if nxt[0] == 'edge':
                edges.append(nxt[1])
            elif nxt[0] == 'in':
                vertices.append(nxt[1])
            node = nxt
        paths.append((tuple(vertices), tuple(edges)))
    return paths


def max_disjoint_shortest_paths(graph, v, w, distances=None):
    """
    Maximum set of internally vertex-disjoint shortest v-w paths.

    Computed as a unit capacity maximum flow (Edmonds-Karp) on the layered
    shortest path structure with split vertices.

    Parameters
    ----------
    graph : Graph
    v, w : vertex ids
        Distinct vertices
    distances : dict, optional
        Precomputed breadth-first distances from ``v``

    Returns
    -------
    list of (vertices, edges)
        Each path runs from ``v`` to ``w``. Sorted by edge ids. Empty if
        ``w`` is not reachable.
    """
    graph.check_vertex(v)
    graph.check_vertex(w)
    if v == w:
        raise InputError('Shortest paths need two distinct vertices')
    dist_v = distances if distances is not None else graph.distances_from(v)
    if w not in dist_v:
        return []
    dist_w = graph.distances_from(w)
    d = dist_v[w]
    on_path = dict((x, dist_v[x]) for x in dist_v
                   if x in dist_w and dist_v[x] + dist_w[x] == d)

    usable = []
    for eid in graph.edge_ids:
        a, b = graph.ends(eid)
        if a not in on_path or b not in on_path:
            continue
        if on_path[b] == on_path[a] + 1:
            usable.append((eid, a, b))
        elif on_path[a] == on_path[b] + 1:
            usable.append((eid, b, a))

    network = _split_network(graph, on_path, v, usable)
    source, sink = ('out', v), ('in', w)
    # w is not split: paths end at its in node
    network.remove_edge(('in', w), ('out', w))
    _, flow = nx.maximum_flow(network, source, sink, flow_func=edmonds_karp)
    paths = _decompose(flow, source, sink)
    return sorted(paths, key=lambda p: tuple(vertex_key(e) for e in p[1]))


def odd_cycle_through(graph, eid, v, distances=None):
    """
    Cycle formed by an edge ``e = xy`` with ``d(v, x) = d(v, y)`` and two
    shortest paths from ``v`` to ``x`` and to ``y`` that share only ``v``.

    Parameters
    ----------
    graph : Graph
    eid : edge id
    v : vertex id
    distances : dict, optional
        Precomputed breadth-first distances from ``v``

    Returns
    -------
    CycleWalk or None
        None if the ends of ``e`` are at different distances from ``v``, if
        ``e`` is a loop, or if no such pair of paths exists
    """
    x, y = graph.ends(eid)
    if x == y:
        return None
    dist = distances if distances is not None else graph.distances_from(v)
    if x not in dist or y not in dist or dist[x] != dist[y] or dist[x] == 0:
        return None
    d = dist[x]
    layered = dict((u, du) for u, du in dist.items() if du <= d)
    usable = []
    for other in graph.edge_ids:
        a, b = graph.ends(other)
        if a not in layered or b not in layered:
            continue
        if layered[b] == layered[a] + 1:
            usable.append((other, a, b))
        elif layered[a] == layered[b] + 1:
            usable.append((other, b, a))

    network = _split_network(graph, layered, v, usable)
    sink = ('sink', None)
    network.add_edge(('out', x), sink, capacity=1)
    network.add_edge(('out', y), sink, capacity=1)
    value, flow = nx.maximum_flow(network, ('out', v), sink,
                                  flow_func=edmonds_karp)
    if value < 2:
        return None
    paths = _decompose(flow, ('out', v), sink)
    to_x = [p for p in paths if p[0][-1] == x][0]
    to_y = [p for p in paths if p[0][-1] == y][0]
    vertices = list(to_x[0]) + list(reversed(to_y[0][1:]))
    edges = list(to_x[1]) + [eid] + list(reversed(to_y[1]))
    return CycleWalk(vertices, edges)


def effective_radius(graph, r):
    """
    Finite stand-in for the locality: infinity and anything at least |V|
    both mean every cycle
    """
    r = validate_locality(r)
    if is_infinite(r) or r > graph.num_vertices:
        return max(graph.num_vertices, 2)
    return r


def _generate(graph, r, verbose=False):
    found = dict()

    def keep(walk):
        if walk.length <= r and walk.edge_set not in found:
            found[walk.edge_set] = walk

    for eid in graph.edge_ids:
        if graph.is_loop(eid):
            x = graph.ends(eid)[0]
            keep(CycleWalk([x], [eid]))

    vertices = sorted(graph.vertices, key=vertex_key)
    for i, v in enumerate(vertices):
        dist = graph.distances_from(v, cutoff=r // 2)
        for w in vertices[i + 1:]:
            if w not in dist or 2 * dist[w] > r:
                continue
            paths = max_disjoint_shortest_paths(graph, v, w, distances=dist)
            for first, second in zip(paths[:-1], paths[1:]):
                keep(_join_paths(first, second))
        for eid in graph.edge_ids:
            a, b = graph.ends(eid)
            if a == b or a not in dist or b not in dist:
                continue
            if dist[a] != dist[b] or 2 * dist[a] + 1 > r:
                continue
            walk = odd_cycle_through(graph, eid, v, distances=dist)
            if walk is not None:
                keep(walk)
    if verbose:
        print('Found {} short cycle generators with r = {}'
              ''.format(len(found), r))
    return sorted(found.values(), key=lambda walk: walk.sort_key())


def exhaustive_short_cycles(graph, r):
    """
    Every cycle of length at most ``r``, enumerated directly.

    Only meant for small graphs (at most 20 edges). Uses the simple cycles of
    the underlying simple graph and expands them over parallel edges.

    Returns
    -------
    list of CycleWalk
    """
    r = effective_radius(graph, r)
    if graph.num_edges > _EXHAUSTIVE_EDGE_LIMIT:
        raise InputError('Exhaustive cycle enumeration is limited to {} edges'
                         ''.format(_EXHAUSTIVE_EDGE_LIMIT))
    between = dict()
    found = []
    for eid in graph.edge_ids:
        a, b = graph.ends(eid)
        if a == b:
            found.append(CycleWalk([a], [eid]))
        else:
            between.setdefault(frozenset((a, b)), []).append(eid)
    if r >= 2:
        for (a, b), group in [(tuple(sorted(k, key=vertex_key)), g)
                              for k, g in between.items()]:
            for e, f in itertools.combinations(group, 2):
                found.append(CycleWalk([a, b], [e, f]))
    simple = graph.to_simple_networkx()
    for cycle in nx.simple_cycles(simple, length_bound=r):
        if len(cycle) < 3:
            continue
        options = [between[frozenset((cycle[i], cycle[(i + 1) % len(cycle)]))]
                   for i in range(len(cycle))]
        for edges in itertools.product(*options):
            found.append(CycleWalk(cycle, edges))
    unique = dict()
    for walk in found:
        unique.setdefault(walk.edge_set, walk)
    return sorted(unique.values(), key=lambda walk: walk.sort_key())


def short_cycle_generators(graph, r, field=FieldTag.GF2, exhaustive=False,
                           verbose=False):
    """
    Generators for the span of all cycles of length at most ``r``.

    Parameters
    ----------
    graph : Graph
    r : int or math.inf
        Locality. Infinity (or anything above |V|) stands for r = |V|.
    field : FieldTag, optional
        The walks do not depend on it; it is validated for symmetry with the
        rest of the pipeline
    exhaustive : bool, optional. Default = False
        Enumerate every short cycle instead (graphs with at most 20 edges)
    verbose : bool, optional. Default = False

    Returns
    -------
    list of CycleWalk
        Deduplicated by edge set, sorted by length then edge ids
    """
    FieldTag.parse(field)
    r = effective_radius(graph, r)
    if exhaustive:
        return exhaustive_short_cycles(graph, r)

    key = graph.signature()
    if key in _GENERATOR_CACHE:
        cached_r, walks = _GENERATOR_CACHE[key]
        if cached_r >= r:
            _GENERATOR_CACHE.move_to_end(key)
            return [walk for walk in walks if walk.length <= r]

    walks = _generate(graph, r, verbose=verbose)
    _GENERATOR_CACHE[key] = (r, walks)
    while len(_GENERATOR_CACHE) > _CACHE_SIZE:
        _GENERATOR_CACHE.popitem(last=False)
    return list(walks)
