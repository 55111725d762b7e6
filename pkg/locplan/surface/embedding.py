# -*- coding: utf-8 -*-
"""
Combinatorial embeddings: rotation systems with edge signs, face tracing,
Euler genus, orientability and pseudo-surface embeddings made of blocks

Created on Tue Oct 20 13:47:55 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
from collections import Counter, deque, namedtuple
import numpy as np

from ..base.errors import InputError
from ..base.num_utils import locality_to_str, validate_locality
from ..graph.graph import Graph, Dart, vertex_key, vertex_label
from ..graph.locality import r_local_blocks
from ..linalg.field import FieldTag
from ..linalg.subspace import EdgeVector
from ..matroid.short_cycles import CycleWalk

__all__ = ['Dart', 'FaceWalk', 'CombinatorialEmbedding', 'MapInvariants',
           'PseudoEmbedding', 'trace_faces', 'map_invariants', 'dual_graph',
           'arbitrary_embedding', 'flip_vertex', 'split_rotators',
           'opposite']


def opposite(dart):
    """
    The other end of the same edge
    """
    return Dart(dart.edge, 1 - dart.end)


class FaceWalk(object):
    """
    Closed walk around a face, stored as the darts it leaves from. A face
    of an isolated vertex is empty and remembers the vertex.
    """

    def __init__(self, graph, darts, vertex=None):
        self.graph = graph
        self.darts = tuple(darts)
        if len(self.darts) == 0 and vertex is None:
            raise InputError('An empty face needs its vertex')
        self._vertex = vertex

    @property
    def length(self):
        return len(self.darts)

    def __len__(self):
        return len(self.darts)

    @property
    def vertices(self):
        if len(self.darts) == 0:
            return (self._vertex,)
        return tuple(self.graph.dart_vertex(d) for d in self.darts)

    @property
    def edges(self):
        return tuple(d.edge for d in self.darts)

    def edge_counts(self):
        return Counter(self.edges)

    def vector(self, field):
        """
        GF(2): parity of the number of traversals of each edge. GF(3): +1 for
        every traversal from tail to head, -1 for every traversal back.
        """
        field = FieldTag.parse(field)
        entries = dict()
        for d in self.darts:
            step = 1 if (field == FieldTag.GF2 or d.end == 0) else -1
            entries[d.edge] = entries.get(d.edge, 0) + step
        return EdgeVector(field, entries)

    def is_simple_cycle(self):
        """
        True if the walk visits every vertex and every edge at most once
        """
        if len(self.darts) == 0:
            return False
        return (len(set(self.vertices)) == len(self.darts)
                and len(set(self.edges)) == len(self.darts))

    def as_cycle(self):
        """
        CycleWalk of a face that is a simple cycle
        """
        if not self.is_simple_cycle():
            raise InputError('Face {} is not a cycle'.format(self))
        return CycleWalk(self.vertices, self.edges)

    def __repr__(self):
        return 'FaceWalk({})'.format([(d.edge, d.end) for d in self.darts])


class CombinatorialEmbedding(object):
    """
    Rotation system plus edge signs.

    ``rotations[v]`` is the cyclic order of the darts at ``v``. An edge with
    sign -1 is twisted. Faces are derived by tracing, never stored.
    """

    def __init__(self, graph, rotations, signs=None):
        """
        Parameters
        ----------
        graph : Graph
        rotations : dict
            vertex -> sequence of Dart (or ``(edge, end)`` pairs)
        signs : dict, optional
            edge id -> +1 / -1. All +1 by default.

        Raises
        ------
        InputError
            If a dart is missing, repeated or placed at the wrong vertex
        """
        self.graph = graph
        self.rotations = dict()
        seen = set()
        for v in graph.vertices:
            darts = [Dart(*d) for d in rotations.get(v, [])]
            for d in darts:
                if not graph.has_edge(d.edge) or d.end not in (0, 1):
                    raise InputError('Unknown dart {} at vertex {}'.format(d, v))
                if graph.dart_vertex(d) != v:
                    raise InputError('Dart {} does not belong to vertex {}'
                                     ''.format(d, v))
                if d in seen:
                    raise InputError('Dart {} appears twice'.format(d))
                seen.add(d)
            self.rotations[v] = tuple(darts)
        extra = set(rotations).difference(graph.vertices)
        if extra:
            raise InputError('Rotations given for unknown vertices: {}'
                             ''.format(sorted(extra, key=vertex_key)))
        if len(seen) != 2 * graph.num_edges:
            raise InputError('Every dart must appear in exactly one rotation')

        if signs is None:
            signs = dict()
        self.signs = dict()
        for eid in graph.edge_ids:
            s = signs.get(eid, 1)
            if s not in (1, -1):
                raise InputError('Edge signs must be +1 or -1. Got {} for edge '
                                 '{}'.format(s, eid))
            self.signs[eid] = s

        self._position = dict()
        for v, darts in self.rotations.items():
            for i, d in enumerate(darts):
                self._position[d] = (v, i)
        self._faces = None
        self.auxiliary = None
        self.face_vertices = None

    def succ(self, dart):
        v, i = self._position[dart]
        darts = self.rotations[v]
        return darts[(i + 1) % len(darts)]

    def pred(self, dart):
        v, i = self._position[dart]
        darts = self.rotations[v]
        return darts[(i - 1) % len(darts)]

    def flip_function(self):
        """
        Vertex signs ``f`` with ``f(u) f(w) = sign(e)`` for every edge, or
        None when the embedding is not orientable
        """
        graph = self.graph
        flips = dict()
        for root in graph.vertices:
            if root in flips:
                continue
            flips[root] = 1
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for eid in graph.incident_edges(x):
                    y = graph.other_end(eid, x)
                    value = flips[x] * self.signs[eid]
                    if y not in flips:
                        flips[y] = value
                        queue.append(y)
                    elif flips[y] != value:
                        return None
        return flips

    @property
    def orientable(self):
        return self.flip_function() is not None

    def _orbit(self, dart, side):
        states = []
        d, s = dart, side
        while True:
            states.append((d, s))
            other = opposite(d)
            s = s * self.signs[d.edge]
            d = self.succ(other) if s == 1 else self.pred(other)
            if (d, s) == (dart, side):
                return states

    def faces(self):
        """
        Traced faces, cached.

        Each face is traced once. On an orientable embedding every face is
        traced in the direction given by the flip function, so the faces are
        coherently oriented.
        """
        if self._faces is not None:
            return list(self._faces)
        flips = self.flip_function()
        used = set()
        faces = []
        ordered = []
        for preferred in (True, False):
            for v in sorted(self.graph.vertices, key=vertex_key):
                side = flips[v] if flips is not None else 1
                if not preferred:
                    side = -side
                for d in self.rotations[v]:
                    ordered.append((d, side))
        for v in sorted(self.graph.vertices, key=vertex_key):
            if len(self.rotations[v]) == 0:
                faces.append(FaceWalk(self.graph, [], vertex=v))
        for d, side in ordered:
            if flips is not None and side != flips[self.graph.dart_vertex(d)]:
                continue
            if (d, side) in used:
                continue
            states = self._orbit(d, side)
            for state_dart, state_side in states:
                used.add((state_dart, state_side))
                mirror = (opposite(state_dart),
                          -state_side * self.signs[state_dart.edge])
                used.add(mirror)
            faces.append(FaceWalk(self.graph, [x[0] for x in states]))
        self._faces = faces
        return list(faces)

    @property
    def num_faces(self):
        return len(self.faces())

    def euler_genus(self):
        """
        2c - |V| + |E| - |F|
        """
        g = self.graph
        return (2 * g.num_components - g.num_vertices + g.num_edges
                - self.num_faces)

    def face_vectors(self, field):
        return [face.vector(field) for face in self.faces()]

    def attach_auxiliary(self, auxiliary, face_vertices):
        """
        Records the graph whose vertices are the faces (built by
        ``build_embedding``) and the face -> vertex map
        """
        self.auxiliary = auxiliary
        self.face_vertices = list(face_vertices)

    def __repr__(self):
        return 'CombinatorialEmbedding({}, faces={}, euler_genus={})'.format(
            self.graph, self.num_faces, self.euler_genus())


def trace_faces(emb):
    """
    Face walks of an embedding

    Parameters
    ----------
    emb : CombinatorialEmbedding

    Returns
    -------
    list of FaceWalk
    """
    return emb.faces()


MapInvariants = namedtuple('MapInvariants', ['face_vectors', 'num_faces',
                                             'euler_genus', 'orientable',
                                             'k_admissible'])


def map_invariants(emb, field):
    """
    Face vectors, Euler genus, orientability and k-admissibility.

    Parameters
    ----------
    emb : CombinatorialEmbedding
    field : FieldTag

    Returns
    -------
    MapInvariants
        ``k_admissible`` is True over GF(2); over GF(3) it is True when the
        traced face vectors sum to zero
    """
    field = FieldTag.parse(field)
    vectors = emb.face_vectors(field)
    total = EdgeVector(field)
    for vec in vectors:
        total = total + vec
    return MapInvariants(face_vectors=vectors, num_faces=len(vectors),
                         euler_genus=emb.euler_genus(),
                         orientable=emb.orientable,
                         k_admissible=total.is_zero())


def dual_graph(emb):
    """
    One vertex per face (numbered in tracing order), one edge per edge of the
    embedded graph joining the faces on its two sides

    Returns
    -------
    Graph
        Same edge ids. The tail is the face that leaves from the tail end of
        the edge when exactly one side does so.
    """
    occurrences = dict()
    faces = emb.faces()
    for index, face in enumerate(faces):
        for d in face.darts:
            occurrences.setdefault(d.edge, []).append((index, d.end))
    edges = []
    for eid in emb.graph.edge_ids:
        sides = occurrences[eid]
        if len(sides) != 2:
            raise InputError('Edge {} is not on exactly two face sides'
                             ''.format(eid))
        (f1, end1), (f2, end2) = sides
        if end1 != 0 and end2 == 0:
            f1, f2 = f2, f1
        edges.append((eid, f1, f2))
    return Graph(vertices=range(len(faces)), edges=edges, keep_orientation=True)


def arbitrary_embedding(graph):
    """
    Darts in ascending order at every vertex, every sign +1
    """
    rotations = dict((v, sorted(graph.darts_at(v),
                                key=lambda d: (vertex_key(d.edge), d.end)))
                     for v in graph.vertices)
    return CombinatorialEmbedding(graph, rotations)


def flip_vertex(emb, v):
    """
    Local re-signing at ``v``: the rotation is reversed and the signs of the
    non-loop edges at ``v`` change. The faces stay the same.
    """
    emb.graph.check_vertex(v)
    rotations = dict(emb.rotations)
    rotations[v] = tuple(reversed(emb.rotations[v]))
    signs = dict(emb.signs)
    for eid in emb.graph.atomic_cut_edges(v):
        signs[eid] = -signs[eid]
    return CombinatorialEmbedding(emb.graph, rotations, signs)


class PseudoEmbedding(object):
    """
    Embeddings of the pieces of a graph plus the map that glues the pieces
    back together. Every vertex of the original graph with several preimages
    is a singular point of the pseudo-surface.
    """

    def __init__(self, blocks, identification, field=FieldTag.GF2, r=None):
        """
        Parameters
        ----------
        blocks : list of CombinatorialEmbedding
        identification : dict
            block vertex -> vertex of the original graph
        field : FieldTag, optional
        r : int or math.inf, optional
        """
        self.blocks = list(blocks)
        self.identification = dict(identification)
        self.field = FieldTag.parse(field)
        self.r = r
        for emb in self.blocks:
            for v in emb.graph.vertices:
                if v not in self.identification:
                    raise InputError('Block vertex {} has no identification'
                                     ''.format(v))

    def __len__(self):
        return len(self.blocks)

    def identified_graph(self):
        """
        Graph obtained by identifying every block vertex with its image
        """
        vertices = set()
        edges = []
        for emb in self.blocks:
            block = emb.graph
            vertices.update(self.identification[v] for v in block.vertices)
            for eid in block.edge_ids:
                tail, head = block.ends(eid)
                edges.append((eid, self.identification[tail],
                              self.identification[head]))
        return Graph(vertices=vertices, edges=edges, keep_orientation=True)

    def singularities(self):
        """
        Vertices of the original graph with two or more preimages
        """
        counts = Counter(self.identification[v] for emb in self.blocks
                         for v in emb.graph.vertices)
        return sorted([v for v, c in counts.items() if c > 1], key=vertex_key)

    def euler_genera(self):
        return [emb.euler_genus() for emb in self.blocks]

    def to_dict(self):
        """
        JSON-ready description: every block with its vertices, rotations,
        signs, traced faces and Euler genus, plus the identification
        """
        blocks = []
        for emb in self.blocks:
            block = emb.graph
            blocks.append({
                'vertices': [vertex_label(v) for v in block.vertices],
                'rotations': dict((vertex_label(v),
                                   [[d.edge, d.end] for d in emb.rotations[v]])
                                  for v in block.vertices),
                'signs': dict((str(e), emb.signs[e]) for e in block.edge_ids),
                'faces': [[[d.edge, d.end] for d in face.darts]
                          for face in emb.faces()],
                'euler_genus': emb.euler_genus()})
        identification = dict()
        for emb in self.blocks:
            for v in emb.graph.vertices:
                identification[vertex_label(v)] = self.identification[v]
        return {'field': str(self.field),
                'r': None if self.r is None else locality_to_str(self.r),
                'blocks': blocks,
                'identification': identification}

    @classmethod
    def from_dict(cls, data):
        """
        Rebuilds a pseudo-embedding written by ``to_dict``. Block vertices
        are the labels; edge ends are recovered from the darts.

        Raises
        ------
        InputError
            Malformed content
        """
        try:
            field = FieldTag.parse(data.get('field', 'gf2'))
            r = data.get('r')
            r = None if r is None else validate_locality(r)
            identification = dict(data['identification'])
            blocks = []
            for item in data['blocks']:
                labels = [str(v) for v in item['vertices']]
                ends = dict()
                rotations = dict()
                for label, darts in item['rotations'].items():
                    darts = [Dart(d[0], int(d[1])) for d in darts]
                    rotations[str(label)] = darts
                    for d in darts:
                        ends.setdefault(d.edge, [None, None])[d.end] = str(label)
                edges = []
                for eid, (tail, head) in ends.items():
                    if tail is None or head is None:
                        raise InputError('Edge {} misses a dart'.format(eid))
                    edges.append((eid, tail, head))
                block = Graph(vertices=labels, edges=edges,
                              keep_orientation=True)
                by_name = dict((str(e), e) for e in block.edge_ids)
                signs = dict((by_name[k], int(s))
                             for k, s in item.get('signs', {}).items()
                             if k in by_name)
                blocks.append(CombinatorialEmbedding(block, rotations, signs))
        except (KeyError, TypeError, IndexError) as err:
            raise InputError('Malformed embedding description: {}'.format(err))
        return cls(blocks, dict((str(k), v) for k, v in identification.items()),
                   field=field, r=r)


def split_rotators(emb, r):
    """
    Splits the rotator of every r-local cutvertex into one rotator per slice,
    each keeping the darts of that slice in their cyclic order.

    Parameters
    ----------
    emb : CombinatorialEmbedding
    r : int or math.inf

    Returns
    -------
    PseudoEmbedding
        One block per r-local block of the embedded graph
    """
    decomposition = r_local_blocks(emb.graph, r)
    blocks = []
    for block in decomposition.blocks:
        rotations = dict()
        for x in block.vertices:
            origin = decomposition.slice_map[x]
            rotations[x] = [d for d in emb.rotations[origin]
                            if block.has_edge(d.edge)
                            and block.dart_vertex(d) == x]
        signs = dict((e, emb.signs[e]) for e in block.edge_ids)
        blocks.append(CombinatorialEmbedding(block, rotations, signs))
    return PseudoEmbedding(blocks, decomposition.slice_map, r=r)
