# -*- coding: utf-8 -*-
"""
Exhaustive references for small instances: short cycle enumeration,
enumeration of all embeddings, minimum Euler genus and graph realization.
None of them is used on the main path.

Created on Thu Oct 22 09:48:33 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import itertools
import time
import warnings
from collections import deque

import numpy as np

from ..base.errors import CapsExceeded
from ..base.num_utils import INFINITY, contains_integers, is_infinite, \
    validate_locality
from ..graph.graph import Graph, vertex_key
from ..graph.locality import r_local_blocks
from ..linalg.field import FieldTag, rank
from ..linalg.subspace import span_basis, orthogonal_complement
from ..matroid.short_cycles import CycleWalk
from ..matroid.local_matroid import cycle_space
from ..matroid.realization import Realization, NotGraphic
from ..surface.embedding import CombinatorialEmbedding

__all__ = ['SearchCaps', 'enumerate_all_short_cycles', 'iter_embeddings',
           'exists_locally_planar_embedding_bruteforce',
           'minimum_euler_genus', 'realize_bruteforce']


class SearchCaps(object):
    """
    Limits of the brute-force searches

    Parameters
    ----------
    max_edges : int, optional. Default = 9
    max_faces : int, optional. Default = 20
        Largest face count for subset searches over faces
    time_budget : float, optional. Default = None
        Seconds per search; unlimited by default
    """

    def __init__(self, max_edges=9, max_faces=20, time_budget=None):
        if not contains_integers([max_edges, max_faces], min_val=0):
            raise TypeError('max_edges and max_faces should be non-negative '
                            'integers')
        if time_budget is not None and time_budget <= 0:
            raise ValueError('time_budget should be positive')
        self.max_edges = max_edges
        self.max_faces = max_faces
        self.time_budget = time_budget
        self._start = None

    def check_graph(self, graph):
        if graph.num_edges > self.max_edges:
            raise CapsExceeded('Brute force is limited to {} edges. Got {}'
                               ''.format(self.max_edges, graph.num_edges))
        if graph.num_edges == self.max_edges:
            warnings.warn('Graph is at the edge cap of the brute-force search')

    def start(self):
        self._start = time.time()

    def tick(self):
        if self.time_budget is None or self._start is None:
            return
        if time.time() - self._start > self.time_budget:
            raise CapsExceeded('Brute force ran out of its {} s budget'
                               ''.format(self.time_budget))

    def __repr__(self):
        return 'SearchCaps(max_edges={}, max_faces={}, time_budget={})'.format(
            self.max_edges, self.max_faces, self.time_budget)


def _caps(caps):
    return SearchCaps() if caps is None else caps


def enumerate_all_short_cycles(graph, r, caps=None):
    """
    Every cycle of length at most ``r`` by depth first search from every
    vertex through larger vertices only, each cycle once

    Parameters
    ----------
    graph : Graph
    r : int or math.inf
    caps : SearchCaps, optional

    Returns
    -------
    list of CycleWalk
        Sorted by length, then edge ids
    """
    caps = _caps(caps)
    caps.check_graph(graph)
    r = validate_locality(r)
    limit = graph.num_edges if is_infinite(r) else r
    rank_of = dict((v, i) for i, v in enumerate(graph.vertices))
    found = dict()

    for eid in graph.edge_ids:
        if graph.is_loop(eid) and limit >= 1:
            found[frozenset([eid])] = CycleWalk([graph.ends(eid)[0]], [eid])

    def extend(start, path, edges):
        current = path[-1]
        for eid in graph.incident_edges(current):
            if eid in edges or graph.is_loop(eid):
                continue
            nxt = graph.other_end(eid, current)
            if nxt == start and len(edges) >= 1:
                key = frozenset(edges + [eid])
                if key not in found:
                    found[key] = CycleWalk(path, edges + [eid])
            elif rank_of[nxt] > rank_of[start] and nxt not in path \
                    and len(edges) + 2 <= limit:
                extend(start, path + [nxt], edges + [eid])

    for v in graph.vertices:
        extend(v, [v], [])
    return sorted(found.values(), key=lambda walk: walk.sort_key())


def _spanning_forest_edges(graph):
    tree = set()
    seen = set()
    for root in graph.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for eid in graph.incident_edges(x):
                y = graph.other_end(eid, x)
                if y not in seen:
                    seen.add(y)
                    tree.add(eid)
                    queue.append(y)
    return tree


def iter_embeddings(graph, orientable_only=False):
    """
    Every rotation system with every sign assignment, signs taken modulo
    local re-signing (edges of a spanning forest stay +1)

    Parameters
    ----------
    graph : Graph
    orientable_only : bool, optional. Default = False
        All signs +1

    Yields
    ------
    CombinatorialEmbedding
    """
    vertices = list(graph.vertices)
    choices = []
    for v in vertices:
        darts = sorted(graph.darts_at(v), key=lambda d: (vertex_key(d.edge),
                                                         d.end))
        if len(darts) <= 2:
            choices.append([tuple(darts)])
        else:
            choices.append([(darts[0],) + rest for rest in
                            itertools.permutations(darts[1:])])
    tree = _spanning_forest_edges(graph)
    free = [e for e in graph.edge_ids if e not in tree]
    sign_choices = [(1,)] * len(free) if orientable_only \
        else [(1, -1)] * len(free)

    for rotation in itertools.product(*choices):
        rotations = dict(zip(vertices, rotation))
        for values in itertools.product(*sign_choices):
            signs = dict(zip(free, values))
            yield CombinatorialEmbedding(graph, rotations, signs)


def _subset_sums(vectors, p):
    num = vectors.shape[0]
    masks = np.arange(1 << num, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(num)[None, :]) & 1).astype(np.int64)
    return np.mod(bits.dot(vectors), p)


def _is_facial_bruteforce(emb, space, cycles, field, caps):
    ambient = emb.graph.edge_ids
    faces = np.array([vec.to_dense(ambient) for vec in
                      emb.face_vectors(field)], dtype=np.int64)
    if field == FieldTag.GF2:
        # linear: S lies in the face span
        basis = np.asarray(space.matrix)
        if basis.shape[0] == 0:
            return True
        return rank(np.vstack([faces, basis]), field) == rank(faces, field)
    if faces.shape[0] > caps.max_faces:
        raise CapsExceeded('Facial search is limited to {} faces'
                           ''.format(caps.max_faces))
    reachable = set(row.tobytes() for row in _subset_sums(faces, field.order))
    for walk in cycles:
        target = np.mod(walk.vector(emb.graph, field).to_dense(ambient),
                        field.order).astype(np.int64)
        if target.tobytes() not in reachable:
            return False
    return True


def _cycles_in_space(graph, space, field, caps):
    # every cycle of the graph lying in S, not only the short ones
    every = enumerate_all_short_cycles(graph, INFINITY, caps)
    return [walk for walk in every
            if space.contains(walk.vector(graph, field)) is not None]


def exists_locally_planar_embedding_bruteforce(graph, r, field=FieldTag.GF2,
                                               caps=None, verbose=False):
    """
    Tries every embedding of every r-local block (orientable ones only over
    GF(3)) and reports whether each block has one in which every cycle of
    S_r is facially generated

    Parameters
    ----------
    graph : Graph
    r : int or math.inf
    field : FieldTag, optional. Default = GF2
    caps : SearchCaps, optional
    verbose : bool, optional. Default = False

    Returns
    -------
    bool
    """
    caps = _caps(caps)
    caps.check_graph(graph)
    field = FieldTag.parse(field)
    r = validate_locality(r)
    caps.start()
    for index, block in enumerate(r_local_blocks(graph, r).blocks):
        short = enumerate_all_short_cycles(block, r, caps)
        space = span_basis([walk.vector(block, field) for walk in short],
                           field, block.edge_ids)
        if space.dim == 0:
            continue
        cycles = _cycles_in_space(block, space, field, caps)
        good = False
        for emb in iter_embeddings(block,
                                   orientable_only=field == FieldTag.GF3):
            caps.tick()
            if _is_facial_bruteforce(emb, space, cycles, field, caps):
                good = True
                break
        if verbose:
            print('Block {}: {}'.format(index, 'embeddable' if good
                                        else 'not embeddable'))
        if not good:
            return False
    return True


def minimum_euler_genus(graph, caps=None, orientable_only=False):
    """
    Smallest Euler genus over all embeddings of ``graph``

    Returns
    -------
    int
    """
    caps = _caps(caps)
    caps.check_graph(graph)
    caps.start()
    best = INFINITY
    for emb in iter_embeddings(graph, orientable_only=orientable_only):
        caps.tick()
        best = min(best, emb.euler_genus())
        if best == 0:
            break
    return int(best)


def realize_bruteforce(space, caps=None):
    """
    Searches a connected multigraph whose cycle space is ``space`` among all
    families of vertex stars: vectors of the orthogonal complement (repeats
    allowed) covering every edge twice, loops (zero columns) never. A
    connected realization has exactly ``|E| - dim + 1`` vertices.

    Parameters
    ----------
    space : Subspace over GF(2)
    caps : SearchCaps, optional

    Returns
    -------
    Realization or NotGraphic
    """
    caps = _caps(caps)
    ground = list(space.ambient)
    if len(ground) > caps.max_edges:
        raise CapsExceeded('Brute force is limited to {} edges. Got {}'
                           ''.format(caps.max_edges, len(ground)))
    if space.field != FieldTag.GF2:
        raise ValueError('realize_bruteforce works over GF(2)')
    caps.start()
    cuts = np.asarray(orthogonal_complement(space).matrix)
    num_vertices = len(ground) - space.dim + 1
    m = len(ground)
    if cuts.shape[0] == 0:
        loops = list(range(m))
        nonzero = []
        vectors = []
    else:
        loops = [j for j in range(m) if not cuts[:, j].any()]
        nonzero = [j for j in range(m) if cuts[:, j].any()]
        combos = np.array(list(itertools.product((0, 1),
                                                 repeat=cuts.shape[0])),
                          dtype=np.int64)
        vectors = [row for row in np.mod(combos.dot(cuts), 2) if row.any()]

    def build(stars):
        ends = dict()
        for index, star in enumerate(stars):
            for j in np.nonzero(star)[0]:
                ends.setdefault(int(j), []).append(index)
        edges = [(ground[j], ends[j][0], ends[j][1]) for j in nonzero]
        edges += [(ground[j], 0, 0) for j in loops]
        return Graph(vertices=range(max(len(stars), 1)), edges=edges,
                     keep_orientation=True)

    def search(chosen, cover, seen):
        caps.tick()
        key = tuple(sorted(chosen))
        if key in seen:
            return None
        seen.add(key)
        open_cols = [j for j in nonzero if cover[j] < 2]
        if not open_cols:
            candidate = build([vectors[i] for i in chosen])
            if cycle_space(candidate, FieldTag.GF2) == space:
                return candidate
            return None
        if len(chosen) >= num_vertices:
            return None
        # a column covered once has exactly one star left to place
        half = [j for j in open_cols if cover[j] == 1]
        j = half[0] if half else open_cols[0]
        for index, vec in enumerate(vectors):
            if not vec[j] or np.any(vec + cover > 2):
                continue
            found = search(chosen + [index], cover + vec, seen)
            if found is not None:
                return found
        return None

    result = search([], np.zeros(m, dtype=np.int64), set())
    if result is None:
        return NotGraphic(ground, 'no family of vertex stars realizes the '
                                  'space')
    return Realization(result, FieldTag.GF2)
