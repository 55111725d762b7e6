# -*- coding: utf-8 -*-
"""
Command line entry point ``locplan``

Exit codes: 0 embeddable / valid, 1 not embeddable / invalid, 2 bad input.

Created on Thu Oct 22 13:27:10 2026
"""

from __future__ import division, print_function, unicode_literals, \
    absolute_import
import argparse
import json
import sys

from .__version__ import version
from .base.errors import CapsExceeded, VerificationError, InputError, \
    PreconditionError, NotLocallyRealizable
from .base.num_utils import validate_locality, locality_to_str
from .graph.graph import vertex_label
from .graph.locality import r_local_blocks
from .io.reader import read_graph
from .io.embedding_io import write_embedding, read_embedding
from .linalg.field import FieldTag
from .matroid.local_matroid import build_local_matroid
from .oracle.bruteforce import exists_locally_planar_embedding_bruteforce
from .proc.pipeline import analyze, max_r, genus_deficit_bound, \
    verify_pseudo_embedding

__all__ = ['main', 'build_parser']

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2


def _add_graph(parser):
    parser.add_argument('--graph', required=True,
                        help='graph file: JSON or a "u v" edge list')


def _add_locality(parser):
    parser.add_argument('--r', required=True,
                        help='locality: an integer >= 2 or inf')


def _add_field(parser):
    parser.add_argument('--field', default='gf2', choices=['gf2', 'gf3'],
                        type=str.lower, help='field of the local matroid')


def _add_verbose(parser):
    parser.add_argument('--verbose', action='store_true',
                        help='print progress information')


def build_parser():
    """
    Argument parser with the subcommands analyze, max-r, verify, blocks and
    bound
    """
    parser = argparse.ArgumentParser(
        prog='locplan',
        description='Locally planar embeddings through local matroids')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + version)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    cmd = sub.add_parser('analyze', help='decide r-local planarity and build '
                                         'an embedding')
    _add_graph(cmd)
    _add_locality(cmd)
    _add_field(cmd)
    cmd.add_argument('--out', help='write the embedding JSON here')
    cmd.add_argument('--cores', type=int, default=1,
                     help='cores used for the blocks')
    cmd.add_argument('--oracle', action='store_true',
                     help='cross-check the verdict by brute force (small '
                          'graphs only)')
    _add_verbose(cmd)

    cmd = sub.add_parser('max-r', help='largest r with an r-locally planar '
                                       'embedding')
    _add_graph(cmd)
    _add_field(cmd)
    cmd.add_argument('--cores', type=int, default=1)
    _add_verbose(cmd)

    cmd = sub.add_parser('verify', help='check an embedding file')
    _add_graph(cmd)
    cmd.add_argument('--embedding', required=True, help='embedding JSON file')
    _add_locality(cmd)
    cmd.add_argument('--field', default=None, choices=['gf2', 'gf3'],
                     type=str.lower,
                     help='defaults to the field stored in the file')
    _add_verbose(cmd)

    cmd = sub.add_parser('blocks', help='list the r-local blocks')
    _add_graph(cmd)
    _add_locality(cmd)
    _add_verbose(cmd)

    cmd = sub.add_parser('bound', help='genus deficit bound')
    _add_graph(cmd)
    _add_locality(cmd)
    _add_field(cmd)
    _add_verbose(cmd)
    return parser


def _locality(text):
    try:
        return validate_locality(text)
    except (TypeError, ValueError) as err:
        raise InputError(str(err))


def _run_analyze(args):
    graph = read_graph(args.graph)
    r = _locality(args.r)
    field = FieldTag.parse(args.field)
    verdict = analyze(graph, r, field=field, cores=args.cores,
                      verbose=args.verbose)
    print(json.dumps(verdict.report(), sort_keys=True, default=vertex_label))
    if args.oracle:
        try:
            expected = exists_locally_planar_embedding_bruteforce(graph, r,
                                                                  field)
        except CapsExceeded as err:
            print('Oracle skipped: {}'.format(err))
        else:
            if expected != bool(verdict):
                raise VerificationError('Brute force says {} for r = {}'
                                        ''.format(expected, locality_to_str(r)))
            print('Oracle agrees')
    if verdict and args.out:
        write_embedding(verdict.embedding, args.out)
        if args.verbose:
            print('Embedding written to {}'.format(args.out))
    return EXIT_OK if verdict else EXIT_NO


def _run_max_r(args):
    graph = read_graph(args.graph)
    value = max_r(graph, field=FieldTag.parse(args.field), cores=args.cores,
                  verbose=args.verbose)
    print(locality_to_str(value))
    return EXIT_OK


def _run_verify(args):
    graph = read_graph(args.graph)
    pseudo = read_embedding(args.embedding)
    field = None if args.field is None else FieldTag.parse(args.field)
    valid, message = verify_pseudo_embedding(graph, pseudo, _locality(args.r),
                                             field=field, verbose=args.verbose)
    print(('valid: ' if valid else 'invalid: ') + message)
    return EXIT_OK if valid else EXIT_NO


def _run_blocks(args):
    graph = read_graph(args.graph)
    decomposition = r_local_blocks(graph, _locality(args.r),
                                   verbose=args.verbose)
    for index, block in enumerate(decomposition.blocks):
        slices = ['{}->{}'.format(vertex_label(v), vertex_label(origin))
                  for v, origin in sorted(decomposition.slice_map.items(),
                                          key=lambda item: str(item[0]))
                  if block.has_vertex(v) and v != origin]
        print('block {}: edges {} slices {}'.format(
            index, [vertex_label(e) for e in block.edge_ids], slices))
    return EXIT_OK


def _run_bound(args):
    graph = read_graph(args.graph)
    field = FieldTag.parse(args.field)
    r = _locality(args.r)
    alpha = build_local_matroid(graph, r, field).rank
    bound = genus_deficit_bound(graph, r, field, verbose=args.verbose)
    print('alpha = {}'.format(alpha))
    print('bound = {}'.format(bound))
    return EXIT_OK


_COMMANDS = {'analyze': _run_analyze,
             'max-r': _run_max_r,
             'verify': _run_verify,
             'blocks': _run_blocks,
             'bound': _run_bound}


def main(argv=None):
    """
    Runs one subcommand

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name. ``sys.argv[1:]`` by default

    Returns
    -------
    int
        Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_INPUT if err.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (InputError, PreconditionError, NotLocallyRealizable,
            IOError) as err:
        # FileNotFoundError is an IOError
        print('locplan: error: {}'.format(err), file=sys.stderr)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
