# -*- coding: utf-8 -*-
"""
Created on Sat Oct 24 14:18:55 2026
"""
from __future__ import division, print_function, unicode_literals, absolute_import
import math
import unittest
import sys
import warnings
from fractions import Fraction
from multiprocessing import cpu_count

sys.path.append("../../locplan/")
from locplan.base.errors import InputError
from locplan.graph.graph import Graph
from locplan.graph.families import complete_graph, complete_bipartite_graph, \
    cycle_graph, cube_graph, path_graph, petersen_graph, torus_grid, \
    two_triangles
from locplan.graph.locality import r_local_blocks
from locplan.linalg.field import FieldTag
from locplan.surface.embedding import PseudoEmbedding
from locplan.oracle.bruteforce import exists_locally_planar_embedding_bruteforce, \
    minimum_euler_genus
from locplan.proc.pipeline import *
from ..graph.graph_fixtures import capture_stdout, torus_embedding, \
    random_graph, small_connected_graphs


class TestAnalyze(unittest.TestCase):

    def test_k4(self):
        verdict = analyze(complete_graph(4), 3)
        self.assertTrue(verdict)
        self.assertIsInstance(verdict, Embeddable)
        self.assertEqual(verdict.euler_genera, [0])
        self.assertEqual(verdict.embedding.singularities(), [])
        report = verdict.report()
        self.assertEqual(report['r'], '3')
        self.assertEqual(report['field'], 'gf2')
        self.assertEqual(report['blocks'][0]['faces'], 4)
        self.assertEqual(report['blocks'][0]['alpha'], 3)
        self.assertEqual(report['blocks'][0]['dim_s'], 3)

    def test_cube(self):
        verdict = analyze(cube_graph(), 4)
        self.assertTrue(verdict)
        self.assertEqual(verdict.euler_genera, [0])
        self.assertEqual(verdict.embedding.blocks[0].num_faces, 6)

    def test_refused(self):
        for graph, r in [(complete_graph(5), 3),
                         (complete_bipartite_graph(3, 3), 4)]:
            verdict = analyze(graph, r)
            self.assertFalse(verdict)
            self.assertIsInstance(verdict, NotEmbeddable)
            self.assertEqual(verdict.block, 0)
            report = verdict.report()
            self.assertFalse(report['embeddable'])
            self.assertEqual(len(report['elements']), graph.num_edges)
            self.assertTrue('non-planar' in report['reason'])

    def test_below_girth(self):
        verdict = analyze(complete_bipartite_graph(3, 3), 3)
        self.assertTrue(verdict)
        verdict = analyze(complete_graph(5), 2)
        self.assertTrue(verdict)
        self.assertEqual(len(verdict.embedding), 10)

    def test_two_triangles(self):
        verdict = analyze(two_triangles(), 3)
        self.assertTrue(verdict)
        self.assertEqual(len(verdict.embedding), 2)
        self.assertEqual(verdict.report()['singularities'], [0])
        self.assertEqual(verdict.euler_genera, [0, 0])

    def test_torus(self):
        for field in FieldTag:
            verdict = analyze(torus_grid(6, 6), 4, field=field)
            self.assertTrue(verdict)
            emb = verdict.embedding.blocks[0]
            self.assertEqual(emb.num_faces, 36)
            self.assertEqual(emb.euler_genus(), 2)
            self.assertTrue(emb.orientable)
            self.assertEqual(verdict.analyses[0].alpha, 37)
            self.assertEqual(verdict.analyses[0].dim_s, 35)

    def test_gf3(self):
        verdict = analyze(complete_graph(4), 3, field='gf3')
        self.assertTrue(verdict)
        self.assertTrue(verdict.embedding.blocks[0].orientable)
        self.assertEqual(verdict.report()['field'], 'gf3')

    def test_infinite_locality(self):
        self.assertTrue(analyze(cycle_graph(6), math.inf))
        self.assertFalse(analyze(complete_graph(5), 'inf'))

    def test_loops_rejected(self):
        with self.assertRaises(InputError):
            _ = analyze(Graph.from_pairs([(0, 1), (1, 1)]), 3)

    def test_verbose(self):
        with capture_stdout() as get_stdout:
            _ = analyze(two_triangles(), 3, verbose=True)
            logs = get_stdout()
        self.assertTrue('2 3-local blocks' in logs)
        self.assertTrue('Embedded 2 blocks in' in logs)

    def test_parallel_blocks(self):
        if cpu_count() < 2:
            return
        serial = analyze(two_triangles(), 3, cores=1)
        parallel = analyze(two_triangles(), 3, cores=2)
        self.assertEqual(serial.report(), parallel.report())

    def test_monotone(self):
        graphs = [petersen_graph(), complete_bipartite_graph(3, 3),
                  cube_graph(), two_triangles(), cycle_graph(5)]
        for graph in graphs:
            accepted = [bool(analyze(graph, r)) for r in range(2, 9)]
            for smaller, larger in zip(accepted[:-1], accepted[1:]):
                self.assertTrue(smaller or not larger)


class TestAnalyzeBlock(unittest.TestCase):

    def test_forest_block(self):
        result = analyze_block(path_graph(2), 3)
        self.assertIsNone(result.refusal)
        self.assertEqual(result.alpha, 1)
        self.assertEqual(result.dim_s, 0)

    def test_refusal(self):
        result = analyze_block(complete_graph(5), 3)
        self.assertIsNone(result.embedding)
        self.assertFalse(result.refusal.realized)


class TestGlueBlocks(unittest.TestCase):

    def test_errors(self):
        graph = two_triangles()
        decomposition = r_local_blocks(graph, 3)
        embeddings = [analyze_block(block, 3).embedding
                      for block in decomposition.blocks]
        pseudo = glue_blocks(decomposition, embeddings)
        self.assertIsInstance(pseudo, PseudoEmbedding)
        self.assertEqual(pseudo.identified_graph(), graph)
        with self.assertRaises(InputError):
            _ = glue_blocks(decomposition, embeddings[:1])
        with self.assertRaises(InputError):
            _ = glue_blocks(decomposition, list(reversed(embeddings)))


class TestMaxR(unittest.TestCase):

    def test_values(self):
        self.assertEqual(max_r(petersen_graph()), 4)
        self.assertTrue(math.isinf(max_r(complete_graph(4))))
        self.assertTrue(math.isinf(max_r(path_graph(5))))
        self.assertEqual(max_r(complete_bipartite_graph(3, 3)), 3)

    def test_torus(self):
        self.assertEqual(max_r(torus_grid(6, 6)), 5)

    def test_verbose(self):
        with capture_stdout() as get_stdout:
            _ = max_r(petersen_graph(), verbose=True)
            logs = get_stdout()
        self.assertTrue('r = 5: not embeddable' in logs)


class TestBounds(unittest.TestCase):

    def test_genus_deficit_zero(self):
        self.assertEqual(genus_deficit_bound(complete_graph(4), 3), 0)
        self.assertEqual(genus_deficit_bound(cycle_graph(6), 6), 0)
        self.assertEqual(genus_deficit_bound(torus_grid(6, 6), 4), 0)

    def test_genus_deficit_verbose(self):
        with capture_stdout() as get_stdout:
            _ = genus_deficit_bound(complete_graph(4), 3, verbose=True)
            logs = get_stdout()
        self.assertEqual(logs.strip(), 'alpha = 3, E = 6, girth = 3')

    def test_genus_deficit_fraction(self):
        # alpha = 15, girth 5
        bound = genus_deficit_bound(petersen_graph(), 4)
        self.assertIsInstance(bound, Fraction)
        self.assertEqual(bound, Fraction(15) + Fraction(30, 5) - 15 - 1)

    def test_forest_warns(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            bound = genus_deficit_bound(path_graph(4), 3)
        self.assertEqual(bound, -1)
        self.assertTrue(any('forest' in str(w.message) for w in caught))

    def test_disconnected(self):
        with self.assertRaises(InputError):
            _ = genus_deficit_bound(Graph.from_pairs([(0, 1), (2, 3)]), 3)

    def test_deficit_against_minimum_genus(self):
        graphs = [(complete_graph(4), 3), (cycle_graph(6), 6),
                  (two_triangles(), 3),
                  (Graph.from_pairs([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4),
                                     (4, 2), (0, 4)]), 3)]
        for graph, r in graphs:
            built = sum(analyze(graph, r).euler_genera)
            self.assertTrue(built - minimum_euler_genus(graph)
                            <= genus_deficit_bound(graph, r))

    def test_face_count(self):
        self.assertEqual(face_count_lower_bound(complete_graph(4), 3), 4)
        self.assertEqual(face_count_lower_bound(torus_grid(6, 6), 4), 36)
        self.assertEqual(face_count_lower_bound(cycle_graph(6), 5), 1)


class TestVerifyPseudoEmbedding(unittest.TestCase):

    def test_built_embeddings(self):
        for graph, r in [(two_triangles(), 3), (complete_graph(4), 3),
                         (cube_graph(), 4)]:
            verdict = analyze(graph, r)
            valid, message = verify_pseudo_embedding(graph, verdict.embedding,
                                                     r)
            self.assertTrue(valid)
        valid, message = verify_pseudo_embedding(
            two_triangles(), analyze(two_triangles(), 3).embedding, 3)
        self.assertEqual(message, '2 blocks, 2 short cycles facially generated')

    def test_torus_fixture(self):
        emb = torus_embedding(6, 6)
        pseudo = PseudoEmbedding([emb], dict((v, v) for v in emb.graph.vertices),
                                 r=4)
        valid, _ = verify_pseudo_embedding(emb.graph, pseudo, 4)
        self.assertTrue(valid)
        valid, message = verify_pseudo_embedding(emb.graph, pseudo, 6)
        self.assertFalse(valid)
        self.assertTrue(message.endswith('is not facially generated'))

    def test_wrong_graph(self):
        pseudo = analyze(complete_graph(4), 3).embedding
        valid, message = verify_pseudo_embedding(cube_graph(), pseudo, 3)
        self.assertFalse(valid)
        self.assertEqual(message, 'Identifying the block vertices does not '
                                  'give the graph')

    def test_below_girth_splits_further(self):
        graph = two_triangles()
        verdict = analyze(graph, 3)
        valid, message = verify_pseudo_embedding(graph, verdict.embedding, 2)
        self.assertTrue(valid)
        self.assertTrue(message.endswith('0 short cycles facially generated'))


class TestOracleAgreement(unittest.TestCase):

    def assert_agrees(self, graph, r, field):
        verdict = analyze(graph, r, field=field)
        expected = exists_locally_planar_embedding_bruteforce(graph, r,
                                                              field=field)
        self.assertEqual(bool(verdict), expected,
                         msg='{} at r = {} over {}'.format(graph, r, field))
        if verdict and field == FieldTag.GF3:
            for emb in verdict.embedding.blocks:
                self.assertTrue(emb.orientable)

    def test_small_graphs(self):
        graphs = [complete_graph(4), cycle_graph(6), two_triangles(),
                  cycle_graph(4), Graph.from_pairs([(0, 1), (1, 2), (2, 0),
                                                    (2, 3), (3, 4), (4, 2),
                                                    (0, 4)])]
        for graph in graphs:
            for r in [3, 4, 5, math.inf]:
                for field in FieldTag:
                    self.assert_agrees(graph, r, field)

    def test_every_graph_up_to_eight_edges(self):
        graphs = small_connected_graphs(8)
        self.assertEqual(len(graphs), 380)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            for graph in graphs:
                for r in [3, 4, 5, math.inf]:
                    for field in FieldTag:
                        self.assert_agrees(graph, r, field)

    def test_random_nine_edge_graphs(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            for seed in range(100):
                graph = random_graph(seed, 5 + seed % 3, 9)
                for r in [3, 4, 5, math.inf]:
                    self.assert_agrees(graph, r, FieldTag.GF2)

    def test_k33(self):
        graph = complete_bipartite_graph(3, 3)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            for r in [3, 4]:
                self.assertEqual(bool(analyze(graph, r)),
                                 exists_locally_planar_embedding_bruteforce(
                                     graph, r))
            self.assert_agrees(graph, 4, FieldTag.GF3)


if __name__ == '__main__':
    unittest.main()
