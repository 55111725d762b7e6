# -*- coding: utf-8 -*-
"""
Graph realization of cycle spaces: decides whether a subspace of GF(2)^E is
the cycle space of a multigraph and builds that multigraph. Over GF(3) the
binary pattern is realized first and a column scaling is aligned afterwards.

Created on Tue Oct 20 09:12:36 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import itertools
import time
from collections import deque
import numpy as np
import networkx as nx

from ..base.errors import InputError, VerificationError
from ..base.string_utils import format_time
from ..graph.graph import Graph, vertex_key
from ..linalg.field import FieldTag, row_reduce, left_nullspace, rank
from ..linalg.subspace import Subspace, span_basis, orthogonal_complement, \
    supported_subspace
from .local_matroid import cycle_space

__all__ = ['Realization', 'NotGraphic', 'realize_cycle_space', 'is_cographic',
           'normalize_realization', 'verify_realization', 'align_signs',
           'scaled_cycle_space']

_CHUNK = 4096


class Realization(object):
    """
    A multigraph H on the ground set together with the column scaling that
    turns its signed cycle space into the target (all +1 over GF(2))
    """
    realized = True

    def __init__(self, graph, field=FieldTag.GF2, scaling=None):
        self.graph = graph
        self.field = FieldTag.parse(field)
        if scaling is None:
            scaling = dict((e, 1) for e in graph.edge_ids)
        self.scaling = dict(scaling)

    def __repr__(self):
        flipped = sum(1 for s in self.scaling.values() if s == -1)
        return 'Realization({}, {}, {} flipped columns)'.format(
            self.field, self.graph, flipped)


class NotGraphic(object):
    """
    Refusal report: the elements of the connected piece on which realization
    failed and a human readable reason
    """
    realized = False

    def __init__(self, elements, reason):
        self.elements = tuple(sorted(elements, key=vertex_key))
        self.reason = reason

    def __repr__(self):
        return 'NotGraphic({} elements: {})'.format(len(self.elements),
                                                    self.reason)


def scaled_cycle_space(graph, field, scaling=None):
    """
    Signed cycle space of ``graph`` with column ``e`` multiplied by
    ``scaling[e]``
    """
    field = FieldTag.parse(field)
    space = cycle_space(graph, field)
    if field == FieldTag.GF2 or scaling is None or space.dim == 0:
        return space
    factors = np.array([scaling.get(e, 1) for e in space.ambient],
                       dtype=np.int64)
    return Subspace(field, space.ambient, np.asarray(space.matrix) * factors)


def verify_realization(graph, space, scaling=None):
    """
    Checks that ``graph`` realizes ``space``

    Parameters
    ----------
    graph : Graph
    space : Subspace
    scaling : dict, optional
        edge id -> +1 / -1, only used over GF(3)

    Returns
    -------
    bool
    """
    if set(graph.edge_ids) != set(space.ambient):
        return False
    return scaled_cycle_space(graph, space.field, scaling) == space


class _StarSearch(object):
    """
    Depth-first search for n = rank + 1 cocircuits of a connected binary
    matrix that cover every column exactly twice and whose first n - 1 members
    are independent. Such a family is the set of vertex stars of a graph whose
    cut space is the row space.
    """

    def __init__(self, matrix, verbose=False):
        self.matrix = np.mod(np.asarray(matrix, dtype=np.int64), 2)
        self.rank, self.width = self.matrix.shape
        self.num_stars = self.rank + 1
        self.verbose = verbose
        self.nodes = 0
        self._cocircuit_cache = dict()

    def run(self):
        """
        Returns
        -------
        list of frozenset or None
            Column index sets of the stars
        """
        return self._extend([], np.zeros(self.width, dtype=np.int64))

    def _is_cocircuit(self, support):
        if support in self._cocircuit_cache:
            return self._cocircuit_cache[support]
        outside = [c for c in range(self.width) if c not in support]
        if len(outside) == 0:
            result = self.rank == 1
        else:
            result = self.rank - rank(self.matrix[:, outside], FieldTag.GF2) == 1
        self._cocircuit_cache[support] = result
        return result

    def _allowed_space(self, forbidden):
        if len(forbidden) == 0:
            return self.matrix
        combos = left_nullspace(self.matrix[:, sorted(forbidden)],
                                FieldTag.GF2, num_rows=self.rank)
        if combos.shape[0] == 0:
            return np.zeros((0, self.width), dtype=np.int64)
        return np.mod(combos.dot(self.matrix), 2)

    def _candidates(self, space, e, stars):
        """
        Supports of the vectors of ``space`` that contain column ``e``, in
        increasing size. A vector is the first echelon row (pivot ``e``) plus a
        subset T of the other rows and has at least |T| + 1 entries, so after
        all subsets of size L are formed every support of size L + 1 is known.
        """
        if space.shape[0] == 0:
            return
        order = [e] + [c for c in range(self.width) if c != e]
        reduced = row_reduce(space[:, order], FieldTag.GF2)
        if reduced.rank == 0 or reduced.pivots[0] != 0:
            return
        back = np.argsort(order)
        base = reduced.matrix[0][back]
        rest = reduced.matrix[1:][:, back]
        star_masks = [np.array([c in y for c in range(self.width)]) for y in stars]

        pending = []
        for level in range(rest.shape[0] + 1):
            combos = itertools.combinations(range(rest.shape[0]), level)
            while True:
                chunk = list(itertools.islice(combos, _CHUNK))
                if len(chunk) == 0:
                    break
                if level == 0:
                    vectors = base.reshape(1, -1)
                else:
                    index = np.array(chunk, dtype=np.int64)
                    vectors = np.mod(base + rest[index].sum(axis=1), 2)
                keep = np.ones(vectors.shape[0], dtype=bool)
                for mask in star_masks:
                    keep &= vectors[:, mask].sum(axis=1) <= 1
                for vec in vectors[keep]:
                    support = tuple(int(c) for c in np.nonzero(vec)[0])
                    pending.append((len(support), support))
            pending.sort()
            cut = 0
            while cut < len(pending) and pending[cut][0] <= level + 1:
                cut += 1
            ready, pending = pending[:cut], pending[cut:]
            for _, support in ready:
                yield frozenset(support)
        for _, support in sorted(pending):
            yield frozenset(support)

    def _independent(self, stars, candidate):
        rows = np.zeros((len(stars) + 1, self.width), dtype=np.int64)
        for i, y in enumerate(list(stars) + [candidate]):
            rows[i, sorted(y)] = 1
        return rank(rows, FieldTag.GF2) == len(stars) + 1

    def _extend(self, stars, cover):
        self.nodes += 1
        if len(stars) == self.num_stars - 1:
            if (cover == 0).any():
                return None
            last = frozenset(int(c) for c in np.nonzero(cover == 1)[0])
            if len(last) == 0:
                return None
            return stars + [last]

        ones = np.nonzero(cover == 1)[0]
        if len(stars) > 0 and len(ones) == 0:
            return None
        e = int(ones[0]) if len(ones) > 0 else 0

        forbidden = set(int(c) for c in np.nonzero(cover == 2)[0])
        for y in stars:
            if e in y:
                forbidden.update(c for c in y if c != e)
        space = self._allowed_space(forbidden)

        for candidate in self._candidates(space, e, stars):
            if not self._is_cocircuit(candidate):
                continue
            if not self._independent(stars, candidate):
                continue
            new_cover = cover.copy()
            new_cover[sorted(candidate)] += 1
            found = self._extend(stars + [candidate], new_cover)
            if found is not None:
                return found
        return None


def _matroid_components(matrix):
    """
    Connected components of the column matroid of a reduced echelon matrix,
    as (rows, columns) index lists
    """
    bipartite = nx.Graph()
    bipartite.add_nodes_from(('col', c) for c in range(matrix.shape[1]))
    for i in range(matrix.shape[0]):
        for c in np.nonzero(matrix[i])[0]:
            bipartite.add_edge(('row', i), ('col', int(c)))
    components = []
    for comp in nx.connected_components(bipartite):
        rows = sorted(x[1] for x in comp if x[0] == 'row')
        cols = sorted(x[1] for x in comp if x[0] == 'col')
        components.append((rows, cols))
    components.sort(key=lambda rc: rc[1][0])
    return components


def realize_cycle_space(space, verbose=False):
    """
    Finds a multigraph whose cycle space is ``space``.

    Elements whose unit vector lies in ``space`` become loops, elements with
    equal columns in the orthogonal complement become parallel edges. The
    remaining columns split into connected pieces; each piece with rank k is
    realized by a search for k + 1 vertex stars among the cocircuits. The
    search is exhaustive, so a refusal means no realization exists.

    Parameters
    ----------
    space : Subspace over GF(2)
    verbose : bool, optional. Default = False

    Returns
    -------
    Realization or NotGraphic

    Raises
    ------
    InputError
        If ``space`` is not over GF(2)
    VerificationError
        If the assembled graph fails the final check
    """
    if space.field != FieldTag.GF2:
        raise InputError('realize_cycle_space works over GF(2). Use '
                         'is_cographic for GF(3)')
    t_start = time.time()
    ambient = space.ambient
    cuts = np.asarray(orthogonal_complement(space).matrix)

    loops = []
    classes = dict()
    for c in range(len(ambient)):
        column = cuts[:, c]
        if not column.any():
            loops.append(c)
        else:
            classes.setdefault(column.tobytes(), []).append(c)
    groups = sorted(classes.values(), key=lambda g: g[0])
    reps = [g[0] for g in groups]
    if verbose:
        print('{} loops, {} parallel classes, rank {}'.format(
            len(loops), len(reps), cuts.shape[0]))

    reduced = row_reduce(cuts[:, reps], FieldTag.GF2).matrix \
        if len(reps) > 0 else np.zeros((0, 0), dtype=np.int64)
    ends = dict()
    next_vertex = 0
    for rows, cols in _matroid_components(reduced):
        elements = [ambient[reps[c]] for c in cols]
        if len(cols) == 1:
            ends[reps[cols[0]]] = (next_vertex, next_vertex + 1)
            next_vertex += 2
            continue
        piece = reduced[rows][:, cols]
        search = _StarSearch(piece, verbose=verbose)
        stars = search.run()
        if verbose:
            print('Piece with {} elements and rank {}: {} search nodes'
                  ''.format(len(cols), len(rows), search.nodes))
        if stars is None:
            return NotGraphic(elements, 'no family of {} vertex stars covers '
                              'the {} elements of a connected piece'
                              ''.format(len(rows) + 1, len(cols)))
        for local in range(len(cols)):
            owners = [next_vertex + i for i, y in enumerate(stars) if local in y]
            ends[reps[cols[local]]] = tuple(owners)
        next_vertex += len(stars)

    for group in groups:
        for c in group[1:]:
            ends[c] = ends[group[0]]
    for c in loops:
        ends[c] = (next_vertex, next_vertex)
        next_vertex += 1

    edges = [(ambient[c], u, v) for c, (u, v) in sorted(ends.items())]
    graph = Graph(vertices=range(next_vertex), edges=edges)
    if not verify_realization(graph, space):
        raise VerificationError('Assembled graph does not realize the cycle '
                                'space')
    if verbose:
        print('Realized on {} vertices in {}'.format(
            graph.num_vertices, format_time(time.time() - t_start)))
    return Realization(graph, FieldTag.GF2)


def _spanning_forest(graph):
    """
    Breadth-first spanning forest

    Returns
    -------
    parent : dict
        vertex -> (parent vertex, tree edge) or None for roots
    depth : dict
    """
    parent = dict()
    depth = dict()
    for root in graph.vertices:
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for eid in graph.incident_edges(x):
                y = graph.other_end(eid, x)
                if y not in parent:
                    parent[y] = (x, eid)
                    depth[y] = depth[x] + 1
                    queue.append(y)
    return parent, depth


def _fundamental_cycle(graph, parent, depth, eid):
    """
    Signed vector of the cycle made of ``eid`` (walked tail to head, +1) and
    the tree path back from its head to its tail
    """
    tail, head = graph.ends(eid)
    cycle = {eid: 1}
    if tail == head:
        return cycle
    a, b = tail, head
    down = []
    # from head up to the common ancestor, walking towards the root
    while a != b:
        if depth[b] >= depth[a]:
            up, tree_edge = parent[b]
            cycle[tree_edge] = 1 if graph.ends(tree_edge) == (b, up) else -1
            b = up
        else:
            up, tree_edge = parent[a]
            down.append((up, a, tree_edge))
            a = up
    # from the common ancestor down to the tail
    for up, x, tree_edge in down:
        cycle[tree_edge] = 1 if graph.ends(tree_edge) == (up, x) else -1
    return cycle


def align_signs(graph, target):
    """
    Finds a column scaling that turns the signed GF(3) cycle space of
    ``graph`` into ``target``.

    For every non-tree edge e of a spanning forest T, the vectors of
    ``target`` supported on T + e must form a line with the support of the
    fundamental cycle of e. Comparing the two fixes the relative sign of e
    and every tree edge on its cycle; the constraints are solved by
    two-colouring.

    Parameters
    ----------
    graph : Graph
        Same edge ids as ``target``
    target : Subspace over GF(3)

    Returns
    -------
    dict or None
        edge id -> +1 / -1, None when no scaling exists
    """
    field = FieldTag.GF3
    if target.field != field:
        raise InputError('align_signs works over GF(3)')
    if set(graph.edge_ids) != set(target.ambient):
        raise InputError('graph and target must share their edge ids')

    parent, depth = _spanning_forest(graph)
    tree = set(link[1] for link in parent.values() if link is not None)
    constraints = nx.Graph()
    constraints.add_nodes_from(graph.edge_ids)
    for eid in graph.edge_ids:
        if eid in tree:
            continue
        cycle = _fundamental_cycle(graph, parent, depth, eid)
        line = supported_subspace(target, tree | set([eid]))
        if line.dim != 1:
            return None
        vector = line.basis[0]
        if vector.support != frozenset(cycle):
            return None
        vector = vector.scale(field.inverse(vector[eid]))
        for other, sign in cycle.items():
            if other == eid:
                continue
            parity = field.signed(vector[other] * sign)
            constraints.add_edge(eid, other, parity=parity)

    scaling = dict()
    for root in graph.edge_ids:
        if root in scaling:
            continue
        scaling[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(constraints.neighbors(x), key=vertex_key):
                value = scaling[x] * constraints[x][y]['parity']
                if y not in scaling:
                    scaling[y] = value
                    queue.append(y)
                elif scaling[y] != value:
                    return None

    if scaled_cycle_space(graph, field, scaling) != target:
        return None
    return scaling


def is_cographic(matroid, verbose=False):
    """
    Decides whether the local matroid is the bond matroid of a graph H, i.e.
    whether the orthogonal complement of S is the (scaled) cycle space of H.

    When S is the whole cycle space of a non-planar graph the answer is no
    right away (Whitney's planarity criterion).

    Parameters
    ----------
    matroid : LocalMatroid
    verbose : bool, optional. Default = False

    Returns
    -------
    Realization or NotGraphic
    """
    graph = matroid.graph
    if matroid.is_full_cycle_space and not matroid.is_trivial:
        planar, _ = nx.check_planarity(graph.to_simple_networkx())
        if not planar:
            if verbose:
                print('S is the cycle space of a non-planar graph')
            return NotGraphic(matroid.ground, 'S is the full cycle space of a '
                                              'non-planar graph')
    target = matroid.primal_rep
    if matroid.field == FieldTag.GF2:
        return realize_cycle_space(target, verbose=verbose)

    pattern = span_basis([vec.binary_pattern() for vec in target.basis],
                         FieldTag.GF2, target.ambient)
    outcome = realize_cycle_space(pattern, verbose=verbose)
    if not outcome.realized:
        return outcome
    scaling = align_signs(outcome.graph, target)
    if scaling is None:
        return NotGraphic(matroid.ground, 'the binary pattern is graphic but '
                                          'no column scaling matches over '
                                          'GF(3)')
    if not verify_realization(outcome.graph, target, scaling):
        raise VerificationError('Sign alignment produced a wrong scaling')
    return Realization(outcome.graph, FieldTag.GF3, scaling)


def normalize_realization(graph):
    """
    Cleaves every cutvertex and drops isolated vertices. Each block of the
    underlying simple graph (with its parallel edges) and each loop becomes
    its own component. The cycle space does not change.

    Parameters
    ----------
    graph : Graph

    Returns
    -------
    Graph
        Vertices are relabelled 0, 1, ... block by block. Edge ids and
        orientations are kept.
    """
    between = dict()
    blocks = []
    for eid in graph.edge_ids:
        a, b = graph.ends(eid)
        if a == b:
            blocks.append([eid])
        else:
            between.setdefault(frozenset((a, b)), []).append(eid)
    for pairs in nx.biconnected_component_edges(graph.to_simple_networkx()):
        block = []
        for u, v in pairs:
            block.extend(between[frozenset((u, v))])
        blocks.append(block)
    blocks = [sorted(b, key=vertex_key) for b in blocks]
    blocks.sort(key=lambda b: vertex_key(b[0]))

    edges = []
    next_vertex = 0
    for block in blocks:
        local = set()
        for eid in block:
            local.update(graph.ends(eid))
        relabel = dict()
        for x in sorted(local, key=vertex_key):
            relabel[x] = next_vertex
            next_vertex += 1
        for eid in block:
            a, b = graph.ends(eid)
            edges.append((eid, relabel[a], relabel[b]))
    return Graph(vertices=range(next_vertex), edges=edges,
                 keep_orientation=True)
