# -*- coding: utf-8 -*-
"""
End to end decision and construction of r-locally planar embeddings:
block decomposition, per-block duality, gluing, the search for the largest
admissible r and the genus deficit bound

Created on Wed Oct 21 10:36:18 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import math
import time
import warnings
from collections import namedtuple
from fractions import Fraction

from ..base.errors import InputError, NotLocallyRealizable, \
    VerificationError
from ..base.num_utils import INFINITY, is_infinite, validate_locality, \
    locality_to_str
from ..base.string_utils import format_time
from ..graph.locality import r_local_blocks, girth
from ..linalg.field import FieldTag
from ..matroid.local_matroid import build_local_matroid
from ..matroid.realization import is_cographic, normalize_realization
from ..surface.embedding import PseudoEmbedding, arbitrary_embedding, \
    split_rotators
from ..surface.duality import build_embedding, is_S_facial, \
    facial_certificate
from .comp_utils import parallel_compute

__all__ = ['Verdict', 'Embeddable', 'NotEmbeddable', 'BlockAnalysis',
           'analyze', 'analyze_block', 'glue_blocks', 'max_r',
           'genus_deficit_bound', 'face_count_lower_bound',
           'verify_pseudo_embedding']


BlockAnalysis = namedtuple('BlockAnalysis', ['embedding', 'refusal', 'alpha',
                                             'dim_s'])
BlockAnalysis.__doc__ = """
Outcome for one block: an embedding, or the NotGraphic refusal, with the
rank of the block's local matroid and the dimension of its S_r
"""


class Verdict(object):
    """
    Answer of ``analyze``. Truthy when the graph is embeddable.
    """
    embeddable = None

    def __init__(self, graph, r, field, decomposition):
        self.graph = graph
        self.r = r
        self.field = field
        self.decomposition = decomposition

    def __bool__(self):
        return bool(self.embeddable)

    __nonzero__ = __bool__


class Embeddable(Verdict):
    """
    r-locally planar r-nice pseudo-surface embedding, one embedding per block
    """
    embeddable = True

    def __init__(self, graph, r, field, decomposition, embedding, analyses):
        super(Embeddable, self).__init__(graph, r, field, decomposition)
        self.embedding = embedding
        self.analyses = list(analyses)

    @property
    def euler_genera(self):
        return self.embedding.euler_genera()

    def report(self):
        """
        Summary dictionary: one entry per block plus the identified vertices
        """
        blocks = []
        for index, (emb, item) in enumerate(zip(self.embedding.blocks,
                                                self.analyses)):
            blocks.append({'block': index,
                           'edges': len(emb.graph.edge_ids),
                           'faces': emb.num_faces,
                           'euler_genus': emb.euler_genus(),
                           'orientable': emb.orientable,
                           'alpha': item.alpha,
                           'dim_s': item.dim_s})
        return {'embeddable': True,
                'r': locality_to_str(self.r),
                'field': str(self.field),
                'blocks': blocks,
                'singularities': self.embedding.singularities()}

    def __repr__(self):
        return 'Embeddable(r={}, {}, blocks={}, euler genera={})'.format(
            locality_to_str(self.r), self.field, len(self.embedding),
            self.euler_genera)


class NotEmbeddable(Verdict):
    """
    The local matroid of block ``block`` is not cographic
    """
    embeddable = False

    def __init__(self, graph, r, field, decomposition, block, refusal):
        super(NotEmbeddable, self).__init__(graph, r, field, decomposition)
        self.block = block
        self.refusal = refusal

    def report(self):
        return {'embeddable': False,
                'r': locality_to_str(self.r),
                'field': str(self.field),
                'block': self.block,
                'elements': list(self.refusal.elements),
                'reason': self.refusal.reason}

    def __repr__(self):
        return 'NotEmbeddable(r={}, {}, block {}: {})'.format(
            locality_to_str(self.r), self.field, self.block,
            self.refusal.reason)


def _is_forest(graph):
    return graph.num_edges == graph.num_vertices - graph.num_components


def analyze_block(block, r, field=FieldTag.GF2, verbose=False):
    """
    Duality step for one r-local block.

    Parameters
    ----------
    block : Graph
        Free of r-local cutvertices
    r : int or math.inf
    field : FieldTag, optional. Default = GF2
    verbose : bool, optional. Default = False

    Returns
    -------
    BlockAnalysis

    Raises
    ------
    VerificationError
        If a realization does not yield an S_r-facial embedding
    """
    field = FieldTag.parse(field)
    if _is_forest(block):
        return BlockAnalysis(arbitrary_embedding(block), None,
                             block.num_edges, 0)
    matroid = build_local_matroid(block, r, field, verbose=verbose)
    if matroid.is_trivial:
        return BlockAnalysis(arbitrary_embedding(block), None, matroid.rank, 0)

    outcome = is_cographic(matroid, verbose=verbose)
    if not outcome.realized:
        return BlockAnalysis(None, outcome, matroid.rank,
                             matroid.circuit_space.dim)
    h_graph = normalize_realization(outcome.graph)
    try:
        emb = build_embedding(block, h_graph, field)
    except NotLocallyRealizable as err:
        raise VerificationError('Block realization is not locally realizable '
                                'at {}: {}'.format(err.vertex, err))
    if not is_S_facial(emb, matroid.circuit_space, matroid.generators, field):
        raise VerificationError('Built embedding is not S_r-facial')
    return BlockAnalysis(emb, None, matroid.rank, matroid.circuit_space.dim)


def glue_blocks(decomposition, embeddings, field=FieldTag.GF2):
    """
    Identifies the slices of every locally cut vertex again.

    Parameters
    ----------
    decomposition : BlockDecomposition
    embeddings : list of CombinatorialEmbedding
        One per block, in block order
    field : FieldTag, optional

    Returns
    -------
    PseudoEmbedding
    """
    embeddings = list(embeddings)
    if len(embeddings) != len(decomposition.blocks):
        raise InputError('Expected {} block embeddings. Got {}'.format(
            len(decomposition.blocks), len(embeddings)))
    for index, (block, emb) in enumerate(zip(decomposition.blocks,
                                             embeddings)):
        if emb.graph != block:
            raise InputError('Embedding {} does not embed block {}'
                             ''.format(index, index))
    return PseudoEmbedding(embeddings, decomposition.slice_map, field=field,
                           r=decomposition.r)


def analyze(graph, r, field=FieldTag.GF2, cores=1, verbose=False):
    """
    Decides whether ``graph`` has an r-locally planar embedding in a
    pseudo-surface whose singularities are r-local (orientable over GF(3)),
    and builds one.

    Parameters
    ----------
    graph : Graph
        Loop-free
    r : int, math.inf or str
    field : FieldTag, optional. Default = GF2
    cores : uint, optional. Default = 1
        Cores used to analyze the blocks
    verbose : bool, optional. Default = False

    Returns
    -------
    Verdict
        ``Embeddable`` or ``NotEmbeddable`` (the first refused block)
    """
    if graph.has_loops:
        raise InputError('Input graphs must not have loops')
    field = FieldTag.parse(field)
    r = validate_locality(r)
    t_start = time.time()

    decomposition = r_local_blocks(graph, r, verbose=verbose)
    if verbose:
        print('{} {}-local blocks'.format(len(decomposition),
                                          locality_to_str(r)))
    results = parallel_compute(decomposition.blocks, analyze_block,
                               cores=cores, lengthy_computation=True,
                               func_args=[r, field],
                               func_kwargs={'verbose': verbose},
                               verbose=verbose)

    for index, item in enumerate(results):
        if item.refusal is not None:
            if verbose:
                print('Block {} refused after {}'.format(
                    index, format_time(time.time() - t_start)))
            return NotEmbeddable(graph, r, field, decomposition, index,
                                 item.refusal)
    pseudo = glue_blocks(decomposition, [item.embedding for item in results],
                         field=field)
    if verbose:
        print('Embedded {} blocks in {}'.format(
            len(results), format_time(time.time() - t_start)))
    return Embeddable(graph, r, field, decomposition, pseudo, results)


def max_r(graph, field=FieldTag.GF2, cores=1, verbose=False):
    """
    Largest r for which ``analyze`` accepts, found by bisection over
    [girth - 1, |V|]. Embeddability is monotone in r, and every r below the
    girth is accepted trivially.

    Parameters
    ----------
    graph : Graph
    field : FieldTag, optional. Default = GF2
    cores : uint, optional. Default = 1
    verbose : bool, optional. Default = False

    Returns
    -------
    int or math.inf
        Infinity when r = |V| is accepted, since no cycle is longer
    """
    field = FieldTag.parse(field)
    shortest = girth(graph)
    n = graph.num_vertices
    if is_infinite(shortest):
        return INFINITY
    lo, hi = shortest - 1, n + 1
    if lo >= n:
        return INFINITY

    trial = max(lo + 1, int(math.ceil(n / 2)))
    while hi - lo > 1:
        if not lo < trial < hi:
            trial = (lo + hi) // 2
        accepted = bool(analyze(graph, trial, field=field, cores=cores))
        if verbose:
            print('r = {}: {}'.format(trial, 'embeddable' if accepted
                                      else 'not embeddable'))
        if accepted:
            lo = trial
        else:
            hi = trial
        trial = (lo + hi) // 2
    return INFINITY if lo >= n else lo


def genus_deficit_bound(graph, r, field=FieldTag.GF2, verbose=False):
    """
    Upper bound on how far the Euler genus of a built embedding can exceed the
    minimum: alpha + 2E / g - E - 1, with g the girth

    Parameters
    ----------
    graph : Graph
        Connected
    r : int or math.inf
    field : FieldTag, optional. Default = GF2
    verbose : bool, optional. Default = False

    Returns
    -------
    fractions.Fraction
        For forests the term 2E / g is taken as 0 and a warning is issued
    """
    if graph.num_vertices == 0 or graph.num_components != 1:
        raise InputError('The genus deficit bound needs a connected graph')
    alpha = build_local_matroid(graph, r, field).rank
    num_edges = graph.num_edges
    shortest = girth(graph)
    if verbose:
        print('alpha = {}, E = {}, girth = {}'.format(
            alpha, num_edges, locality_to_str(shortest)))
    if is_infinite(shortest):
        warnings.warn('The graph is a forest; the girth term is dropped')
        return Fraction(alpha - num_edges - 1)
    return Fraction(alpha) + Fraction(2 * num_edges, shortest) - num_edges - 1


def face_count_lower_bound(graph, r, field=FieldTag.GF2):
    """
    E - alpha + 1, the number of faces every built embedding of a connected
    graph reaches at least
    """
    alpha = build_local_matroid(graph, r, field).rank
    return graph.num_edges - alpha + 1


def _nice_blocks(pseudo, r):
    blocks = []
    identification = dict()
    for emb in pseudo.blocks:
        split = split_rotators(emb, r)
        for piece in split.blocks:
            blocks.append(piece)
            for v in piece.graph.vertices:
                identification[v] = pseudo.identification[
                    split.identification[v]]
    return PseudoEmbedding(blocks, identification, field=pseudo.field, r=r)


def verify_pseudo_embedding(graph, pseudo, r, field=None, verbose=False):
    """
    Checks that a pseudo-surface embedding of ``graph`` is r-locally planar.

    Blocks that still carry r-local cutvertices are split first. Every
    generator of S_r must then lie in one block and be facially generated
    there.

    Parameters
    ----------
    graph : Graph
    pseudo : PseudoEmbedding
    r : int, math.inf or str
    field : FieldTag, optional
        Defaults to the field stored with ``pseudo``
    verbose : bool, optional. Default = False

    Returns
    -------
    valid : bool
    message : str
    """
    r = validate_locality(r)
    field = pseudo.field if field is None else FieldTag.parse(field)
    if pseudo.identified_graph() != graph:
        return False, 'Identifying the block vertices does not give the graph'
    nice = _nice_blocks(pseudo, r)
    if verbose:
        print('{} blocks after splitting at {}-local cutvertices'.format(
            len(nice), locality_to_str(r)))

    block_of = dict()
    for index, emb in enumerate(nice.blocks):
        for eid in emb.graph.edge_ids:
            block_of[eid] = index
    matroid = build_local_matroid(graph, r, field)
    if verbose:
        print('Checking {} short cycles over {}'.format(
            len(matroid.generators), field))
    for walk in matroid.generators:
        owners = set(block_of[e] for e in walk.edges)
        if len(owners) != 1:
            return False, 'Cycle {} crosses blocks'.format(walk)
        emb = nice.blocks[owners.pop()]
        if facial_certificate(emb, walk.vector(graph, field)) is None:
            return False, 'Cycle {} is not facially generated'.format(walk)
    return True, '{} blocks, {} short cycles facially generated'.format(
        len(nice), len(matroid.generators))
