# -*- coding: utf-8 -*-
"""
Created on Fri Oct 23 10:11:27 2026
"""
from __future__ import division, print_function, unicode_literals, absolute_import
import unittest
import sys
import networkx as nx

sys.path.append("../../locplan/")
from locplan.base.errors import InputError
from locplan.graph.graph import Graph, Dart, vertex_key, vertex_label
from locplan.graph.families import cycle_graph, cube_graph, path_graph


class TestVertexKey(unittest.TestCase):

    def test_mixed_order(self):
        items = [('a', 1), 'b', 3, (2, 1), 'a', 0]
        self.assertEqual(sorted(items, key=vertex_key),
                         [0, 3, 'a', 'b', (2, 1), ('a', 1)])

    def test_label(self):
        self.assertEqual(vertex_label(4), '4')
        self.assertEqual(vertex_label((3, 2)), '3#2')
        self.assertEqual(vertex_label(((3, 1), 2)), '3#1#2')
        self.assertEqual(vertex_label('x'), 'x')


class TestConstruction(unittest.TestCase):

    def test_sorted_orientation(self):
        graph = Graph(edges=[(0, 2, 1), (1, 'b', 'a')])
        self.assertEqual(graph.ends(0), (1, 2))
        self.assertEqual(graph.ends(1), ('a', 'b'))

    def test_keep_orientation(self):
        graph = Graph(edges=[(0, 2, 1)], keep_orientation=True)
        self.assertEqual(graph.ends(0), (2, 1))

    def test_derived_vertices(self):
        graph = Graph(edges=[(5, 3, 1), (2, 1, 7)])
        self.assertEqual(graph.vertices, (1, 3, 7))
        self.assertEqual(graph.edge_ids, (2, 5))

    def test_isolated_vertices(self):
        graph = Graph(vertices=[0, 1, 2], edges=[(0, 0, 1)])
        self.assertEqual(graph.num_vertices, 3)
        self.assertEqual(graph.incident_edges(2), ())
        self.assertEqual(graph.degree(2), 0)

    def test_duplicate_edge_id(self):
        with self.assertRaises(InputError):
            _ = Graph(edges=[(0, 0, 1), (0, 1, 2)])

    def test_undeclared_endpoint(self):
        with self.assertRaises(InputError):
            _ = Graph(vertices=[0, 1], edges=[(0, 0, 2)])

    def test_forbidden_loop(self):
        with self.assertRaises(InputError):
            _ = Graph(edges=[(0, 1, 1)], allow_loops=False)
        with self.assertRaises(InputError):
            _ = Graph.from_pairs([(0, 1), (1, 1)], allow_loops=False)

    def test_malformed_edge(self):
        with self.assertRaises(InputError):
            _ = Graph(edges=[(0, 1)])
        with self.assertRaises(InputError):
            _ = Graph(edges=[5])

    def test_from_pairs(self):
        graph = Graph.from_pairs([(0, 1), (1, 2), (0, 1)])
        self.assertEqual(graph.edge_ids, (0, 1, 2))
        self.assertEqual(graph.ends(2), (0, 1))

    def test_from_networkx(self):
        graph = cube_graph()
        self.assertEqual(graph.num_vertices, 8)
        self.assertEqual(graph.num_edges, 12)
        self.assertEqual(graph.ends(0), (0, 1))
        for eid in graph.edge_ids:
            u, v = graph.ends(eid)
            self.assertEqual(bin(u ^ v).count('1'), 1)

    def test_to_networkx(self):
        graph = Graph.from_pairs([(0, 1), (0, 1), (1, 1)])
        nx_graph = graph.to_networkx()
        self.assertIsInstance(nx_graph, nx.MultiGraph)
        self.assertEqual(nx_graph.number_of_edges(), 3)
        self.assertTrue(nx_graph.has_edge(0, 1, key=1))
        simple = graph.to_simple_networkx()
        self.assertEqual(simple.number_of_edges(), 1)


class TestQueries(unittest.TestCase):

    def setUp(self):
        # loop 0 at vertex 0, edges 1 and 2 parallel between 0 and 1
        self.graph = Graph(edges=[(0, 0, 0), (1, 0, 1), (2, 1, 0), (3, 1, 2)])

    def test_loops(self):
        self.assertTrue(self.graph.has_loops)
        self.assertTrue(self.graph.is_loop(0))
        self.assertFalse(self.graph.is_loop(1))

    def test_incidence(self):
        self.assertEqual(self.graph.incident_edges(0), (0, 1, 2))
        self.assertEqual(self.graph.atomic_cut_edges(0), (1, 2))
        self.assertEqual(self.graph.degree(0), 4)
        self.assertEqual(self.graph.degree(1), 3)
        self.assertEqual(self.graph.neighbors(0), (0, 1))

    def test_darts(self):
        self.assertEqual(self.graph.darts_at(0),
                         [Dart(0, 0), Dart(0, 1), Dart(1, 0), Dart(2, 0)])
        self.assertEqual(self.graph.dart_vertex(Dart(3, 1)), 2)

    def test_other_end(self):
        self.assertEqual(self.graph.other_end(3, 2), 1)
        self.assertEqual(self.graph.other_end(0, 0), 0)
        with self.assertRaises(InputError):
            _ = self.graph.other_end(3, 0)

    def test_unknown(self):
        with self.assertRaises(InputError):
            self.graph.check_vertex(9)
        with self.assertRaises(InputError):
            _ = self.graph.ends(9)
        with self.assertRaises(InputError):
            _ = self.graph.incident_edges('x')
        self.assertFalse(self.graph.has_edge(9))
        self.assertTrue(self.graph.has_vertex(2))


class TestDerivedGraphs(unittest.TestCase):

    def test_edge_subgraph(self):
        graph = cycle_graph(6)
        sub = graph.edge_subgraph([0, 2])
        self.assertEqual(sub.edge_ids, (0, 2))
        self.assertEqual(sub.vertices, (0, 1, 2))
        sub = graph.edge_subgraph([0], keep_vertices=True)
        self.assertEqual(sub.num_vertices, 6)

    def test_induced_subgraph(self):
        graph = cycle_graph(6)
        sub = graph.induced_subgraph([0, 1, 2, 5])
        self.assertEqual(set(sub.edge_ids), set([0, 1, 2]))

    def test_remove_vertex(self):
        graph = cycle_graph(6).remove_vertex(0)
        self.assertEqual(graph.num_vertices, 5)
        self.assertEqual(graph.num_edges, 4)
        self.assertEqual(graph.num_components, 1)

    def test_identify(self):
        graph = cycle_graph(4)
        quotient = graph.identify({2: 0})
        self.assertEqual(quotient.vertices, (0, 1, 3))
        self.assertEqual(quotient.edge_ids, graph.edge_ids)
        self.assertFalse(quotient.has_loops)
        self.assertEqual(quotient.degree(0), 4)

    def test_identify_makes_loop(self):
        quotient = path_graph(2).identify({1: 0})
        self.assertTrue(quotient.is_loop(0))
        self.assertEqual(quotient.num_vertices, 1)

    def test_components(self):
        graph = Graph.from_pairs([(3, 4), (0, 1)], vertices=[0, 1, 2, 3, 4])
        self.assertEqual(graph.components(), [(0, 1), (2,), (3, 4)])
        self.assertEqual(graph.num_components, 3)

    def test_distances(self):
        dist = cycle_graph(6).distances_from(0)
        self.assertEqual(dist, {0: 0, 1: 1, 5: 1, 2: 2, 4: 2, 3: 3})
        dist = cycle_graph(6).distances_from(0, cutoff=1)
        self.assertEqual(set(dist), set([0, 1, 5]))


class TestEquality(unittest.TestCase):

    def test_equal(self):
        self.assertEqual(cycle_graph(5), cycle_graph(5))
        self.assertEqual(hash(cycle_graph(5)), hash(cycle_graph(5)))
        self.assertNotEqual(cycle_graph(5), cycle_graph(6))

    def test_orientation_matters(self):
        one = Graph(edges=[(0, 1, 2)])
        two = Graph(edges=[(0, 2, 1)], keep_orientation=True)
        self.assertNotEqual(one, two)

    def test_other_types(self):
        self.assertFalse(cycle_graph(3) == 'C3')
        self.assertTrue(cycle_graph(3) != 3)


if __name__ == '__main__':
    unittest.main()
