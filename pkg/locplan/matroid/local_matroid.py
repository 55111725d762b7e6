# -*- coding: utf-8 -*-
"""
Cut and cycle spaces of graphs and the r-local matroid carried by the span of
the short cycles

Created on Mon Oct 19 15:31:07 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import warnings

from ..base.num_utils import validate_locality
from ..linalg.field import FieldTag
from ..linalg.subspace import EdgeVector, span_basis, \
    orthogonal_complement, supported_subspace
from .short_cycles import short_cycle_generators

__all__ = ['atomic_cut', 'cut_space', 'cycle_space', 'LocalMatroid',
           'build_local_matroid', 'is_locally_connected']


def atomic_cut(graph, v, field):
    """
    Vector of the edges at ``v``.

    Parameters
    ----------
    graph : Graph
    v : vertex id
    field : FieldTag

    Returns
    -------
    EdgeVector
        GF(2): the non-loop edges at ``v``. GF(3): +1 on edges whose tail is
        ``v`` and -1 on edges whose head is ``v``. Loops vanish in both.
    """
    field = FieldTag.parse(field)
    graph.check_vertex(v)
    entries = dict()
    for eid in graph.atomic_cut_edges(v):
        tail, _ = graph.ends(eid)
        entries[eid] = 1 if (field == FieldTag.GF2 or tail == v) else -1
    return EdgeVector(field, entries)


def cut_space(graph, field):
    """
    Span of the atomic cuts, dimension ``|V| - c``
    """
    field = FieldTag.parse(field)
    return span_basis([atomic_cut(graph, v, field) for v in graph.vertices],
                      field, graph.edge_ids)


def cycle_space(graph, field):
    """
    Orthogonal complement of the cut space, dimension ``|E| - |V| + c``.
    Over GF(3) it is spanned by the signed cycle vectors (+1 along the
    reference orientation).
    """
    return orthogonal_complement(cut_space(graph, field))


class LocalMatroid(object):
    """
    Matroid on the edges of a graph whose circuits are the minimal non-empty
    supports of a subspace S of the cycle space.

    Only S is stored. The rows of S represent the dual matroid, the rows of
    its orthogonal complement represent the matroid itself.
    """

    def __init__(self, graph, circuit_space, generators=None, r=None):
        """
        Parameters
        ----------
        graph : Graph
        circuit_space : Subspace
            Over the edge ids of ``graph``
        generators : list of CycleWalk, optional
            Cycles spanning ``circuit_space``
        r : int or math.inf, optional
            Locality the space was built for
        """
        if set(circuit_space.ambient) != set(graph.edge_ids):
            raise ValueError('circuit_space must live over the edges of graph')
        self.graph = graph
        self.field = circuit_space.field
        self.ground = circuit_space.ambient
        self.circuit_space = circuit_space
        self.generators = list(generators) if generators is not None else []
        self.r = r
        self._primal = None
        self._full = None

    @property
    def rank(self):
        """
        alpha = |E| - dim S
        """
        return len(self.ground) - self.circuit_space.dim

    @property
    def dual_rep(self):
        return self.circuit_space

    @property
    def primal_rep(self):
        if self._primal is None:
            self._primal = orthogonal_complement(self.circuit_space)
        return self._primal

    @property
    def is_trivial(self):
        return self.circuit_space.dim == 0

    @property
    def is_full_cycle_space(self):
        """
        True if S is the whole cycle space of the graph
        """
        if self._full is None:
            g = self.graph
            expected = g.num_edges - g.num_vertices + g.num_components
            self._full = self.circuit_space.dim == expected
        return self._full

    def generator_vectors(self):
        return [walk.vector(self.graph, self.field) for walk in self.generators]

    def __repr__(self):
        return 'LocalMatroid({}, |E|={}, dim S={}, rank={}, r={})'.format(
            self.field, len(self.ground), self.circuit_space.dim, self.rank,
            self.r)


def build_local_matroid(graph, r, field=FieldTag.GF2, exhaustive=False,
                        verbose=False):
    """
    r-local matroid of ``graph``: S is the span of the cycles of length at
    most ``r``.

    Parameters
    ----------
    graph : Graph
    r : int or math.inf
    field : FieldTag, optional. Default = GF2
    exhaustive : bool, optional. Default = False
        Span every short cycle instead of the generating families
    verbose : bool, optional. Default = False

    Returns
    -------
    LocalMatroid
    """
    field = FieldTag.parse(field)
    r = validate_locality(r)
    generators = short_cycle_generators(graph, r, field=field,
                                        exhaustive=exhaustive, verbose=verbose)
    vectors = [walk.vector(graph, field) for walk in generators]
    space = span_basis(vectors, field, graph.edge_ids)
    if space.dim == 0 and graph.num_edges > 0:
        warnings.warn('No cycle of length at most {} exists. Every embedding '
                      'is {}-locally planar'.format(r, r))
    matroid = LocalMatroid(graph, space, generators=generators, r=r)
    if verbose:
        print(matroid)
    return matroid


def is_locally_connected(graph, space):
    """
    Checks that no vector orthogonal to ``space`` is supported on a non-empty
    proper subset of an atomic cut.

    For every vertex v the vectors of the orthogonal complement supported on
    the non-loop edges at v form a subspace V_v. The check passes when every
    V_v has dimension at most 1 and its generator covers every edge at v.

    Parameters
    ----------
    graph : Graph
    space : Subspace
        Subspace of the cycle space of ``graph``

    Returns
    -------
    connected : bool
    witness : tuple or None
        ``(v, vector)`` for the first failing vertex
    """
    complement = orthogonal_complement(space)
    for v in graph.vertices:
        cut = set(graph.atomic_cut_edges(v))
        if len(cut) == 0:
            continue
        local = supported_subspace(complement, cut)
        if local.dim >= 2:
            return False, (v, local.basis[-1])
        if local.dim == 1:
            vector = local.basis[0]
            if vector.support != cut:
                return False, (v, vector)
    return True, None
