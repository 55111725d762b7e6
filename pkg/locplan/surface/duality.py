# -*- coding: utf-8 -*-
"""
Both directions of the duality between embeddings and dual graphs: building
an embedding whose faces are the vertices of a realization, and extracting
the dual quotient of an embedding. Also facial generation, holes and the
fencing diagnostics.

Created on Tue Oct 20 16:05:21 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import itertools
from collections import Counter
import numpy as np
import networkx as nx

from ..base.errors import InputError, NotLocallyRealizable, \
    VerificationError, CapsExceeded
from ..graph.graph import Graph, Dart, vertex_key
from ..linalg.field import FieldTag, solve, left_nullspace
from ..linalg.subspace import Subspace, EdgeVector, span_basis, \
    orthogonal_complement
from ..matroid.local_matroid import build_local_matroid, cut_space
from .embedding import CombinatorialEmbedding, dual_graph, map_invariants

__all__ = ['HolePartition', 'build_embedding', 'facially_generated',
           'facial_certificate', 'is_S_facial', 'holes', 'hole_classes',
           'dual_quotient', 'fencing_check', 'is_r_locally_planar']

FACE_SEARCH_LIMIT = 20
FENCING_FACE_LIMIT = 16
_CHUNK = 1 << 14


def _cycle_order(graph, h_graph, g):
    """
    Walks the cycle of ``h_graph`` formed by the edges at ``g``.

    Starts at the least edge and moves towards its lesser neighbouring edge;
    a cycle of two parallel edges starts from the tail of the least edge.

    Returns
    -------
    list of (edge, direction)
        direction is +1 when the edge is walked from its tail to its head in
        ``h_graph``
    """
    cut = sorted(graph.atomic_cut_edges(g), key=vertex_key)
    if len(cut) == 0:
        return []
    if len(cut) == 1:
        if not h_graph.is_loop(cut[0]):
            raise NotLocallyRealizable(g, 'The edge at {} is not a loop of the '
                                          'realization'.format(g))
        return [(cut[0], 1)]

    cut_set = set(cut)
    at = dict()
    for eid in cut:
        a, b = h_graph.ends(eid)
        if a == b:
            raise NotLocallyRealizable(g, 'The edges at {} do not form a cycle '
                                          'of the realization'.format(g))
        at.setdefault(a, []).append(eid)
        at.setdefault(b, []).append(eid)
    if any(len(val) != 2 for val in at.values()):
        raise NotLocallyRealizable(g, 'The edges at {} do not form a cycle of '
                                      'the realization'.format(g))

    first = cut[0]
    tail, head = h_graph.ends(first)
    next_at_tail = [e for e in at[tail] if e != first][0]
    next_at_head = [e for e in at[head] if e != first][0]
    if len(cut) == 2 or vertex_key(next_at_head) <= vertex_key(next_at_tail):
        start, current = tail, head
    else:
        start, current = head, tail

    order = [(first, 1 if start == tail else -1)]
    previous = first
    while current != start or len(order) < len(cut):
        options = [e for e in at[current] if e != previous]
        if len(order) == len(cut) or len(options) != 1:
            break
        eid = options[0]
        a, b = h_graph.ends(eid)
        order.append((eid, 1 if a == current else -1))
        current = b if a == current else a
        previous = eid
    if len(order) != len(cut) or current != start \
            or set(e for e, _ in order) != cut_set:
        raise NotLocallyRealizable(g, 'The edges at {} do not form a single '
                                      'cycle of the realization'.format(g))
    return order


def build_embedding(graph, h_graph, field=FieldTag.GF2):
    """
    Embedding of ``graph`` whose faces are the vertices of the realization
    ``h_graph`` after splitting it at its corners.

    The rotation at a vertex g follows the cycle its edges form in
    ``h_graph``. An edge is twisted when the cycles at its two ends walk it
    in the same direction. The corners at every vertex x of ``h_graph`` pair
    up the edge ends that consecutive steps of those cycles use; splitting x
    along the resulting cycles gives a graph K whose vertices are exactly the
    faces, and the faces are checked against K.

    Parameters
    ----------
    graph : Graph
        Loop-free
    h_graph : Graph
        Same edge ids; every atomic cut of ``graph`` must be a cycle in it
    field : FieldTag, optional. Default = GF2

    Returns
    -------
    CombinatorialEmbedding
        With K and the face -> K vertex map attached

    Raises
    ------
    InputError
        Different edge sets or loops in ``graph``
    NotLocallyRealizable
        An atomic cut is not a cycle of ``h_graph``
    VerificationError
        Faces do not match K, are not cycles, or fail k-admissibility
    """
    field = FieldTag.parse(field)
    if set(graph.edge_ids) != set(h_graph.edge_ids):
        raise InputError('The realization must have the edges of the graph')
    if graph.has_loops:
        raise InputError('build_embedding needs a loop-free graph')

    rotations = dict()
    direction = dict()
    corners = dict()
    for g in graph.vertices:
        order = _cycle_order(graph, h_graph, g)
        rotations[g] = []
        for eid, sense in order:
            end = 0 if graph.ends(eid)[0] == g else 1
            rotations[g].append(Dart(eid, end))
            direction[(g, eid)] = sense
        # consecutive steps meet at a corner of h_graph
        for i, (eid, sense) in enumerate(order):
            nxt, nxt_sense = order[(i + 1) % len(order)]
            arrive = Dart(eid, 1 if sense == 1 else 0)
            leave = Dart(nxt, 0 if nxt_sense == 1 else 1)
            x = h_graph.dart_vertex(arrive)
            corners.setdefault(x, []).append((arrive, leave))

    signs = dict()
    for eid in graph.edge_ids:
        tail, head = graph.ends(eid)
        signs[eid] = 1 if direction[(tail, eid)] != direction[(head, eid)] else -1
    emb = CombinatorialEmbedding(graph, rotations, signs)

    auxiliary = _split_corners(h_graph, corners)
    faces = emb.faces()
    if len(faces) != auxiliary.num_vertices:
        raise VerificationError('{} faces but {} corner cycles'.format(
            len(faces), auxiliary.num_vertices))
    by_cut = dict()
    for k in auxiliary.vertices:
        counts = Counter()
        for eid in auxiliary.incident_edges(k):
            counts[eid] += 2 if auxiliary.is_loop(eid) else 1
        by_cut.setdefault(frozenset(counts.items()), []).append(k)
    face_vertices = []
    for face in faces:
        if not face.is_simple_cycle():
            raise VerificationError('Face {} is not a cycle'.format(face))
        matches = by_cut.get(frozenset(face.edge_counts().items()), [])
        if len(matches) == 0:
            raise VerificationError('Face {} matches no corner cycle'
                                    ''.format(face))
        face_vertices.append(matches.pop(0))
    if field == FieldTag.GF3 and not map_invariants(emb, field).k_admissible:
        raise VerificationError('Built embedding is not GF(3)-admissible')
    emb.attach_auxiliary(auxiliary, face_vertices)
    return emb


def _split_corners(h_graph, corners):
    """
    Splits every vertex of ``h_graph`` along the cycles of its corner pairing
    """
    owner = dict()
    for x in h_graph.vertices:
        pairing = nx.MultiGraph()
        pairing.add_nodes_from(h_graph.darts_at(x))
        for arrive, leave in corners.get(x, []):
            pairing.add_edge(arrive, leave)
        if any(deg != 2 for _, deg in pairing.degree()):
            raise VerificationError('Corner pairing at {} is not a union of '
                                    'cycles'.format(x))
        comps = [sorted(c, key=lambda d: (vertex_key(d.edge), d.end))
                 for c in nx.connected_components(pairing)]
        comps.sort(key=lambda c: (vertex_key(c[0].edge), c[0].end))
        for index, comp in enumerate(comps):
            for d in comp:
                owner[d] = (x, index + 1)
    vertices = set(owner.values())
    edges = [(eid, owner[Dart(eid, 0)], owner[Dart(eid, 1)])
             for eid in h_graph.edge_ids]
    return Graph(vertices=vertices, edges=edges, keep_orientation=True)


def _face_matrix(emb, field, ambient):
    vectors = emb.face_vectors(field)
    if len(vectors) == 0:
        return np.zeros((0, len(ambient)), dtype=np.int64)
    return np.vstack([vec.to_dense(ambient) for vec in vectors])


def _sum_faces(emb, indices, field):
    faces = emb.faces()
    total = EdgeVector(field)
    for i in indices:
        total = total + faces[i].vector(field)
    return total


def _certificate_by_cuts(emb, target):
    """
    GF(3) facial certificate on an orientable embedding, whose coherent face
    vectors sum over a face set X to the signed cut of X in K (the dual
    graph when the embedding was not built here): solve for a set whose
    GF(2) cut is the support of ``target``, then fix the side of every
    component of K so that the signed sum matches
    """
    field = FieldTag.GF3
    faces = emb.faces()
    if emb.auxiliary is not None:
        aux, face_vertices = emb.auxiliary, emb.face_vertices
    else:
        aux, face_vertices = dual_graph(emb), list(range(len(faces)))
    ambient = emb.graph.edge_ids
    binary = _face_matrix(emb, FieldTag.GF2, ambient)
    support = target.binary_pattern().to_dense(ambient)
    solution = solve(binary, support, FieldTag.GF2)
    if solution is None:
        return None
    chosen = set(i for i in range(len(faces)) if solution[i])
    face_of = dict((k, i) for i, k in enumerate(face_vertices))
    result = set()
    for comp in aux.components():
        members = set(face_of[k] for k in comp)
        edges = set()
        for k in comp:
            edges.update(aux.incident_edges(k))
        part = EdgeVector(field, dict((e, target[e]) for e in edges))
        inside = members & chosen
        total = _sum_faces(emb, inside, field)
        total = EdgeVector(field, dict((e, total[e]) for e in edges))
        if total == part:
            result |= inside
        elif total == -part:
            result |= members - inside
        else:
            return None
    return sorted(result)


def _certificate_by_search(emb, target, field):
    faces = emb.faces()
    if len(faces) > FACE_SEARCH_LIMIT:
        raise CapsExceeded('Facial search is limited to {} faces. Got {}'
                           ''.format(FACE_SEARCH_LIMIT, len(faces)))
    ambient = emb.graph.edge_ids
    matrix = _face_matrix(emb, field, ambient)
    goal = target.to_dense(ambient)
    p = field.order
    num = len(faces)
    powers = 1 << np.arange(num, dtype=np.int64)
    for start in range(0, 1 << num, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, 1 << num), dtype=np.int64)
        bits = ((masks[:, None] & powers[None, :]) > 0).astype(np.int64)
        sums = np.mod(bits.dot(matrix), p)
        hits = np.nonzero((sums == goal[None, :]).all(axis=1))[0]
        if len(hits) > 0:
            return [int(i) for i in np.nonzero(bits[hits[0]])[0]]
    return None


def facially_generated(emb, cycle, field=FieldTag.GF2):
    """
    Finds faces whose boundaries, all taken with coefficient +1, sum to the
    vector of ``cycle``.

    Parameters
    ----------
    emb : CombinatorialEmbedding
    cycle : CycleWalk
    field : FieldTag, optional. Default = GF2

    Returns
    -------
    list of int or None
        Face indices (into ``emb.faces()``). Over GF(2) found by a linear
        solve; over GF(3) as a side of an edge cut of K on orientable
        embeddings, otherwise by exhaustive search over at most 20 faces.

    Raises
    ------
    InputError
        If ``cycle`` is not a cycle of the embedded graph
    CapsExceeded
        GF(3) search on a non-orientable embedding with more than 20 faces
    """
    field = FieldTag.parse(field)
    if not cycle.is_cycle_of(emb.graph):
        raise InputError('{} is not a cycle of the embedded graph'.format(cycle))
    return facial_certificate(emb, cycle.vector(emb.graph, field))


def facial_certificate(emb, target):
    """
    Faces whose boundaries sum to the vector ``target``, or None. Works like
    ``facially_generated`` on a vector given over the edges of the embedded
    graph.
    """
    field = target.field
    if field == FieldTag.GF2:
        ambient = emb.graph.edge_ids
        solution = solve(_face_matrix(emb, field, ambient),
                         target.to_dense(ambient), field)
        if solution is None:
            return None
        return [int(i) for i in np.nonzero(solution)[0]]
    if emb.orientable:
        return _certificate_by_cuts(emb, target)
    return _certificate_by_search(emb, target, field)


def is_S_facial(emb, space, generators=None, field=None):
    """
    Checks that every cycle in ``space`` is facially generated.

    Over GF(2) this is the containment of ``space`` in the span of the face
    boundaries. Over GF(3) every generator is checked for a certificate.

    Parameters
    ----------
    emb : CombinatorialEmbedding
    space : Subspace
    generators : list of CycleWalk, optional
        Cycles spanning ``space`` (needed over GF(3))
    field : FieldTag, optional
        Defaults to the field of ``space``

    Returns
    -------
    bool
    """
    field = space.field if field is None else FieldTag.parse(field)
    if space.dim == 0:
        return True
    if field == FieldTag.GF2:
        face_span = span_basis(emb.face_vectors(field), field,
                               emb.graph.edge_ids)
        return space.is_subspace_of(face_span)
    if generators is None:
        raise InputError('GF(3) faciality needs the generating cycles')
    return all(facially_generated(emb, walk, field) is not None
               for walk in generators)


def holes(emb, space):
    """
    Faces whose boundary vector is not in ``space``

    Returns
    -------
    list of int
        Face indices
    """
    return [i for i, vec in enumerate(emb.face_vectors(space.field))
            if space.contains(vec) is None]


class HolePartition(object):
    """
    Holes of an embedding grouped by the areas that contain them
    """

    def __init__(self, holes, classes, area_space):
        """
        Parameters
        ----------
        holes : list of int
        classes : list of list of int
        area_space : Subspace
            Over the face indices: the face sets whose boundary lies in S
        """
        self.holes = list(holes)
        self.classes = [list(c) for c in classes]
        self.area_space = area_space

    def class_of(self, face):
        for index, members in enumerate(self.classes):
            if face in members:
                return index
        raise KeyError(face)

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return 'HolePartition({} holes, {} classes)'.format(len(self.holes),
                                                            len(self.classes))


def _area_space(emb, space):
    field = FieldTag.GF2
    faces = emb.faces()
    ambient = emb.graph.edge_ids
    matrix = _face_matrix(emb, field, ambient)
    perp = np.asarray(orthogonal_complement(space).matrix)
    if perp.shape[0] == 0:
        return Subspace.full(field, range(len(faces)))
    pairing = np.mod(matrix.dot(perp.T), 2)
    areas = left_nullspace(pairing, field, num_rows=len(faces))
    return Subspace(field, range(len(faces)), areas)


def hole_classes(emb, space):
    """
    Groups the holes: two holes are equivalent when every area contains
    both or neither of them, i.e. their columns agree on a basis of the area
    space.

    Parameters
    ----------
    emb : CombinatorialEmbedding
    space : Subspace over GF(2)

    Returns
    -------
    HolePartition
    """
    if space.field != FieldTag.GF2:
        raise InputError('hole_classes works over GF(2)')
    hole_list = holes(emb, space)
    area = _area_space(emb, space)
    matrix = np.asarray(area.matrix)
    groups = dict()
    for face in hole_list:
        column = matrix[:, area.column_index(face)]
        groups.setdefault(column.tobytes(), []).append(face)
    classes = sorted(groups.values(), key=lambda c: c[0])
    return HolePartition(hole_list, classes, area)


def dual_quotient(emb, space):
    """
    Dual graph of ``emb`` with every class of holes identified to a vertex

    Parameters
    ----------
    emb : CombinatorialEmbedding
    space : Subspace over GF(2)

    Returns
    -------
    quotient : Graph
    check : bool
        True if the cut space of the quotient equals ``space``
    """
    partition = hole_classes(emb, space)
    mapping = dict()
    for members in partition.classes:
        for face in members:
            mapping[face] = members[0]
    quotient = dual_graph(emb).identify(mapping)
    return quotient, cut_space(quotient, FieldTag.GF2) == space


def _minimal_supports(area, num_faces):
    masks = []
    rows = [int(''.join(str(int(x)) for x in reversed(row)), 2)
            for row in np.asarray(area.matrix)]
    for coefficients in itertools.product((0, 1), repeat=len(rows)):
        mask = 0
        for c, row in zip(coefficients, rows):
            if c:
                mask ^= row
        if mask:
            masks.append(mask)
    masks.sort(key=lambda m: (bin(m).count('1'), m))
    minimal = []
    for mask in masks:
        if not any(m & mask == m for m in minimal):
            minimal.append(mask)
    return minimal


def fencing_check(emb, space):
    """
    True if the dual quotient check passes and, on embeddings with at most 16
    faces, the hole sets of the minimal areas are pairwise identical or
    disjoint

    Parameters
    ----------
    emb : CombinatorialEmbedding
    space : Subspace over GF(2)

    Returns
    -------
    bool
    """
    _, check = dual_quotient(emb, space)
    if not check:
        return False
    num_faces = emb.num_faces
    if num_faces > FENCING_FACE_LIMIT:
        return True
    area = _area_space(emb, space)
    hole_mask = 0
    for face in holes(emb, space):
        hole_mask |= 1 << face
    traces = set(m & hole_mask for m in _minimal_supports(area, num_faces))
    traces.discard(0)
    for a, b in itertools.combinations(traces, 2):
        if a & b:
            return False
    return True


def is_r_locally_planar(emb, r, field=FieldTag.GF2):
    """
    True if every cycle of length at most ``r`` of the embedded graph is
    facially generated
    """
    matroid = build_local_matroid(emb.graph, r, field)
    return is_S_facial(emb, matroid.circuit_space, matroid.generators, field)
