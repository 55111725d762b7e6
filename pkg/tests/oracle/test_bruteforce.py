# -*- coding: utf-8 -*-
"""
Created on Sat Oct 24 17:12:30 2026
"""
from __future__ import division, print_function, unicode_literals, \
    absolute_import
import math
import sys
import unittest
import warnings

sys.path.append("../../locplan/")
from locplan.base.errors import CapsExceeded
from locplan.graph.graph import Graph
from locplan.graph.families import complete_graph, complete_bipartite_graph, \
    cycle_graph, two_triangles
from locplan.linalg.field import FieldTag
from locplan.matroid.local_matroid import cycle_space, cut_space
from locplan.matroid.realization import verify_realization
from locplan.oracle.bruteforce import *
from ..graph.graph_fixtures import capture_stdout


class TestSearchCaps(unittest.TestCase):

    def test_defaults(self):
        caps = SearchCaps()
        self.assertEqual(caps.max_edges, 9)
        self.assertEqual(caps.max_faces, 20)
        self.assertIsNone(caps.time_budget)
        self.assertTrue('max_edges=9' in repr(caps))

    def test_invalid(self):
        with self.assertRaises(TypeError):
            _ = SearchCaps(max_edges=1.5)
        with self.assertRaises(TypeError):
            _ = SearchCaps(max_faces=True)
        with self.assertRaises(TypeError):
            _ = SearchCaps(max_edges=-1)
        with self.assertRaises(ValueError):
            _ = SearchCaps(time_budget=0)

    def test_edge_cap(self):
        caps = SearchCaps()
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            caps.check_graph(complete_bipartite_graph(3, 3))
        self.assertEqual(len(caught), 1)
        with self.assertRaises(CapsExceeded):
            caps.check_graph(complete_graph(5))
        SearchCaps(max_edges=10).check_graph(cycle_graph(4))

    def test_time_budget(self):
        with self.assertRaises(CapsExceeded):
            _ = minimum_euler_genus(complete_graph(4),
                                    caps=SearchCaps(time_budget=1e-9))


class TestEnumerateShortCycles(unittest.TestCase):

    def test_k4(self):
        triangles = enumerate_all_short_cycles(complete_graph(4), 3)
        self.assertEqual(len(triangles), 4)
        every = enumerate_all_short_cycles(complete_graph(4), 4)
        self.assertEqual(len(every), 7)
        self.assertEqual([walk.length for walk in every], [3] * 4 + [4] * 3)
        self.assertEqual(len(enumerate_all_short_cycles(complete_graph(4),
                                                        math.inf)), 7)

    def test_cycle(self):
        self.assertEqual(enumerate_all_short_cycles(cycle_graph(6), 5), [])
        found = enumerate_all_short_cycles(cycle_graph(6), 6)
        self.assertEqual(len(found), 1)
        self.assertTrue(found[0].is_cycle_of(cycle_graph(6)))

    def test_multigraph(self):
        graph = Graph.from_pairs([(0, 1), (0, 1), (1, 1), (1, 2)])
        found = enumerate_all_short_cycles(graph, 2)
        self.assertEqual(sorted(sorted(walk.edges) for walk in found),
                         [[0, 1], [2]])


class TestIterEmbeddings(unittest.TestCase):

    def test_counts(self):
        graph = complete_graph(4)
        self.assertEqual(sum(1 for _ in iter_embeddings(graph)), 128)
        self.assertEqual(sum(1 for _ in iter_embeddings(
            graph, orientable_only=True)), 16)
        self.assertEqual(sum(1 for _ in iter_embeddings(cycle_graph(3))), 2)

    def test_genera(self):
        genera = set(emb.euler_genus() for emb in
                     iter_embeddings(complete_graph(4), orientable_only=True))
        self.assertEqual(genera, set([0, 2]))


class TestExistsLocallyPlanar(unittest.TestCase):

    def test_accepted(self):
        self.assertTrue(exists_locally_planar_embedding_bruteforce(
            complete_graph(4), 3))
        self.assertTrue(exists_locally_planar_embedding_bruteforce(
            complete_graph(4), math.inf, field=FieldTag.GF3))
        self.assertTrue(exists_locally_planar_embedding_bruteforce(
            cycle_graph(6), 5))

    def test_refused(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            self.assertFalse(exists_locally_planar_embedding_bruteforce(
                complete_bipartite_graph(3, 3), math.inf))

    def test_caps(self):
        with self.assertRaises(CapsExceeded):
            _ = exists_locally_planar_embedding_bruteforce(complete_graph(5),
                                                           3)

    def test_verbose(self):
        with capture_stdout() as get_stdout:
            _ = exists_locally_planar_embedding_bruteforce(two_triangles(), 3,
                                                           verbose=True)
            logs = get_stdout()
        self.assertTrue('Block 0: embeddable' in logs)
        self.assertTrue('Block 1: embeddable' in logs)


class TestMinimumEulerGenus(unittest.TestCase):

    def test_planar(self):
        self.assertEqual(minimum_euler_genus(complete_graph(4)), 0)

    def test_k33(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            self.assertEqual(minimum_euler_genus(
                complete_bipartite_graph(3, 3)), 1)
            self.assertEqual(minimum_euler_genus(
                complete_bipartite_graph(3, 3), orientable_only=True), 2)


class TestRealizeBruteforce(unittest.TestCase):

    def test_graphic(self):
        space = cycle_space(complete_graph(4), FieldTag.GF2)
        outcome = realize_bruteforce(space)
        self.assertTrue(outcome.realized)
        self.assertTrue(verify_realization(outcome.graph, space))

    def test_gf3(self):
        with self.assertRaises(ValueError):
            _ = realize_bruteforce(cycle_space(complete_graph(4),
                                               FieldTag.GF3))

    def test_caps(self):
        with self.assertRaises(CapsExceeded):
            _ = realize_bruteforce(cut_space(complete_graph(5), FieldTag.GF2))


if __name__ == '__main__':
    unittest.main()
