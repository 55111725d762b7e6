# -*- coding: utf-8 -*-
"""
Created on Fri Oct 23 10:47:03 2026
"""
from __future__ import division, print_function, unicode_literals, absolute_import
import math
import unittest
import sys

import networkx as nx

sys.path.append("../../locplan/")
from locplan.base.errors import InputError, PreconditionError
from locplan.graph.graph import Graph
from locplan.graph.locality import *
from locplan.graph.families import complete_graph, cycle_graph, path_graph, \
    petersen_graph, cube_graph, ladder_graph, torus_grid, two_triangles
from .graph_fixtures import capture_stdout, random_graph


class TestBall(unittest.TestCase):

    def test_integer_radius_drops_outer_edges(self):
        ball_graph = ball(cycle_graph(6), 0, 4)
        self.assertEqual(set(ball_graph.vertices), set([4, 5, 0, 1, 2]))
        self.assertEqual(ball_graph.num_edges, 4)
        self.assertEqual(ball_graph.num_components, 1)

    def test_zero_radius(self):
        ball_graph = ball(petersen_graph(), 3, 0)
        self.assertEqual(ball_graph.vertices, (3,))
        self.assertEqual(ball_graph.num_edges, 0)

    def test_half_radius_keeps_induced_edges(self):
        graph = complete_graph(4)
        self.assertEqual(ball(graph, 0, 3), graph)
        self.assertEqual(ball(graph, 0, 2).num_edges, 3)

    def test_infinite_radius(self):
        graph = Graph.from_pairs([(0, 1), (1, 2), (3, 4)])
        ball_graph = ball(graph, 0, math.inf)
        self.assertEqual(ball_graph.vertices, (0, 1, 2))

    def test_monotone(self):
        for graph in [petersen_graph(), cube_graph(), ladder_graph(4)]:
            for v in graph.vertices:
                for rho in range(7):
                    small = ball(graph, v, rho)
                    large = ball(graph, v, rho + 1)
                    self.assertTrue(set(small.vertices)
                                    <= set(large.vertices))
                    self.assertTrue(set(small.edge_ids)
                                    <= set(large.edge_ids))

    def test_unknown_vertex(self):
        with self.assertRaises(InputError):
            _ = ball(cycle_graph(4), 9, 2)

    def test_invalid_radius(self):
        with self.assertRaises(ValueError):
            _ = ball(cycle_graph(4), 0, -1)
        with self.assertRaises(TypeError):
            _ = ball(cycle_graph(4), 0, 'two')


class TestLocalCutvertex(unittest.TestCase):

    def test_k4(self):
        graph = complete_graph(4)
        for v in graph.vertices:
            self.assertFalse(is_r_local_cutvertex(graph, v, 3))
        self.assertTrue(is_r_locally_2_connected(graph, 3))

    def test_two_triangles(self):
        graph = two_triangles()
        self.assertTrue(is_r_local_cutvertex(graph, 0, 3))
        self.assertFalse(is_r_local_cutvertex(graph, 1, 3))

    def test_long_cycle(self):
        graph = cycle_graph(10)
        for v in graph.vertices:
            self.assertTrue(is_r_local_cutvertex(graph, v, 4))
        self.assertFalse(is_r_local_cutvertex(graph, 0, 10))
        self.assertFalse(is_r_locally_2_connected(graph, 4))

    def test_classical_cutvertex_every_r(self):
        graph = two_triangles()
        for r in [2, 3, 4, 5, 6, math.inf]:
            self.assertTrue(is_r_local_cutvertex(graph, 0, r))

    def test_isolated_and_leaf(self):
        graph = Graph.from_pairs([(0, 1)], vertices=[0, 1, 2])
        self.assertFalse(is_r_local_cutvertex(graph, 2, 3))
        self.assertFalse(is_r_local_cutvertex(graph, 0, 3))

    def test_invalid_locality(self):
        with self.assertRaises(ValueError):
            _ = is_r_local_cutvertex(cycle_graph(4), 0, 1)


class TestLocallyCut(unittest.TestCase):

    def test_two_triangles(self):
        graph = two_triangles()
        cut_graph, slice_map = locally_cut(graph, 0, 3)
        self.assertEqual(slice_map, {(0, 1): 0, (0, 2): 0})
        self.assertEqual(cut_graph.edge_ids, graph.edge_ids)
        self.assertEqual(cut_graph.num_components, 2)
        self.assertFalse(cut_graph.has_vertex(0))
        self.assertEqual(cut_graph.degree((0, 1)), 2)

    def test_long_cycle_becomes_path(self):
        cut_graph, slice_map = locally_cut(cycle_graph(10), 0, 4)
        self.assertEqual(cut_graph.num_edges, 10)
        self.assertEqual(cut_graph.num_vertices, 11)
        self.assertEqual(cut_graph.num_components, 1)
        for s in slice_map:
            self.assertEqual(cut_graph.degree(s), 1)

    def test_infinite_locality(self):
        cut_graph, _ = locally_cut(two_triangles(), 0, math.inf)
        self.assertEqual(cut_graph.num_components, 2)

    def test_keeps_short_cycles(self):
        graph = two_triangles()
        cut_graph, _ = locally_cut(graph, 0, 3)
        self.assertEqual(girth(cut_graph), 3)

    def test_not_a_cutvertex(self):
        with self.assertRaises(PreconditionError):
            _ = locally_cut(complete_graph(4), 0, 3)


class TestRLocalBlocks(unittest.TestCase):

    def check_partition(self, graph, decomposition):
        seen = set()
        for block in decomposition.blocks:
            edges = set(block.edge_ids)
            self.assertFalse(edges & seen)
            seen |= edges
            self.assertTrue(is_r_locally_2_connected(block,
                                                     decomposition.r))
            for v in block.vertices:
                self.assertTrue(graph.has_vertex(decomposition.slice_map[v]))
        self.assertEqual(seen, set(graph.edge_ids))

    def test_two_triangles(self):
        graph = two_triangles()
        decomposition = r_local_blocks(graph, 3)
        self.assertEqual(len(decomposition), 2)
        self.assertEqual(decomposition.edge_partition(),
                         set([frozenset([0, 1, 2]), frozenset([3, 4, 5])]))
        self.assertEqual(decomposition.identified_vertices(), [0])
        self.assertEqual(decomposition.block_of_edge(4), 1)
        self.check_partition(graph, decomposition)

    def test_k4_single_block(self):
        graph = complete_graph(4)
        decomposition = r_local_blocks(graph, 3)
        self.assertEqual(len(decomposition), 1)
        self.assertEqual(decomposition.blocks[0], graph)
        self.assertEqual(decomposition.identified_vertices(), [])

    def test_long_cycle(self):
        graph = cycle_graph(10)
        decomposition = r_local_blocks(graph, 4)
        self.assertEqual(len(decomposition), 10)
        for block in decomposition:
            self.assertEqual(block.num_edges, 1)
        self.check_partition(graph, decomposition)
        self.assertEqual(len(r_local_blocks(graph, 10)), 1)

    def test_unknown_edge(self):
        decomposition = r_local_blocks(two_triangles(), 3)
        with self.assertRaises(KeyError):
            _ = decomposition.block_of_edge(17)

    def test_order_independent(self):
        cases = [(two_triangles(), 3), (cycle_graph(10), 4),
                 (ladder_graph(4), 3), (ladder_graph(4), 4),
                 (cube_graph(), 3), (petersen_graph(), 5)]
        for seed in range(10):
            cases.append((random_graph(seed, 8, 10), 3 + seed % 3))
        for graph, r in cases:
            forward = r_local_blocks(graph, r)
            backward = r_local_blocks(graph, r, reverse=True)
            self.assertEqual(forward.edge_partition(),
                             backward.edge_partition())
            self.check_partition(graph, forward)

    def test_verbose(self):
        with capture_stdout() as get_stdout:
            _ = r_local_blocks(two_triangles(), 3, verbose=True)
            logs = get_stdout()
        self.assertTrue('Cut 0 into 2 slices' in logs)


class TestGirth(unittest.TestCase):

    def test_fixtures(self):
        self.assertEqual(girth(petersen_graph()), 5)
        self.assertEqual(girth(complete_graph(4)), 3)
        self.assertEqual(girth(cube_graph()), 4)
        self.assertEqual(girth(cycle_graph(10)), 10)
        self.assertEqual(girth(torus_grid(6, 6)), 4)

    def test_forest(self):
        self.assertTrue(math.isinf(girth(path_graph(5))))
        self.assertTrue(math.isinf(girth(Graph(vertices=[0]))))

    def test_parallel_and_loop(self):
        self.assertEqual(girth(Graph.from_pairs([(0, 1), (1, 2), (0, 1)])), 2)
        self.assertEqual(girth(Graph.from_pairs([(0, 1), (1, 1)])), 1)


def punctured_ball_is_split(graph, v, r):
    # independent of ball(): networkx distances and a fresh punctured graph
    nx_graph = graph.to_networkx()
    if math.isinf(r):
        dist = nx.single_source_shortest_path_length(nx_graph, v)
        s, half = None, True
    else:
        s, half = divmod(r, 2)
        dist = nx.single_source_shortest_path_length(nx_graph, v, cutoff=s)
    punctured = nx.MultiGraph()
    punctured.add_nodes_from(x for x in dist if x != v)
    for a, b in nx_graph.edges():
        if v in (a, b) or a not in dist or b not in dist:
            continue
        if not half and dist[a] == s and dist[b] == s:
            continue
        punctured.add_edge(a, b)
    return nx.number_connected_components(punctured) >= 2


class TestBlocksAgainstNetworkx(unittest.TestCase):

    def graphs(self):
        graphs = [complete_graph(4), cycle_graph(10), two_triangles(),
                  petersen_graph(), cube_graph(), ladder_graph(5)]
        for seed in range(60):
            num_vertices = 5 + seed % 4
            graphs.append(random_graph(seed, num_vertices,
                                       num_vertices + seed % 5))
        return graphs

    def test_cutvertices(self):
        for graph in self.graphs():
            for r in [2, 3, 4, 5, 6, math.inf]:
                for v in graph.vertices:
                    self.assertEqual(is_r_local_cutvertex(graph, v, r),
                                     punctured_ball_is_split(graph, v, r))

    def test_decomposition(self):
        for graph in self.graphs():
            for r in [2, 3, 4, 5, 6, math.inf]:
                decomposition = r_local_blocks(graph, r)
                edges = sorted(e for block in decomposition.blocks
                               for e in block.edge_ids)
                self.assertEqual(edges, sorted(graph.edge_ids))
                for block in decomposition.blocks:
                    for v in block.vertices:
                        self.assertFalse(punctured_ball_is_split(block, v, r))
                    for eid in block.edge_ids:
                        ends = set(decomposition.slice_map[x]
                                   for x in block.ends(eid))
                        self.assertEqual(ends, set(graph.ends(eid)))
                bound = None if math.isinf(r) else r
                simple = graph.to_simple_networkx()
                for cycle in nx.simple_cycles(simple, length_bound=bound):
                    owners = set()
                    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                        eid = [e for e in graph.incident_edges(a)
                               if graph.other_end(e, a) == b][0]
                        owners.add(decomposition.block_of_edge(eid))
                    self.assertEqual(len(owners), 1)


if __name__ == '__main__':
    unittest.main()
