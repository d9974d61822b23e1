#!/usr/bin/env python3
"""
Unit tests for Cayley graphs, EP witnesses and Moss approximants
"""

import django
import math
import os
import random
import sys
import unittest

# Django setup for tests
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(os.path.dirname(current_dir))
sys.path.insert(0, project_root)
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')

django.setup()

from django.test import override_settings  # noqa: E402

from cayley.construction import cayley_ball, vc_extension_graph  # noqa: E402
from cayley.extension import (  # noqa: E402
    Demand, check_consistent, d_witness_search, ep_sweep, ep_witness,
)
from cayley.graphs import (  # noqa: E402
    FiniteGraph, VertexTuple, extend_tuple_congruence, graph_metric, tuples_congruent,
)
from cayley.moss import moss_approximant  # noqa: E402
from core.exceptions import (  # noqa: E402
    BudgetExceeded, InsufficientDomain, LengthMismatch, PreconditionFailed,
)
from core.results import NotFound, NotFoundWithinDomain, VacuouslySatisfied  # noqa: E402
from groups.catalog import GroupSpec  # noqa: E402
from groups.elements import identity, parse_element, power  # noqa: E402
from groups.enumeration import ball  # noqa: E402
from groups.generating import standard_generators  # noqa: E402
from lengths.construction import word_length_table  # noqa: E402
from lengths.tables import LengthTable, constant_table  # noqa: E402

FREE2 = GroupSpec.free(2)
VC = GroupSpec.vc()


def e(group, token):
    return parse_element(group, token)


def path_graph(size):
    names = [f"v{i}" for i in range(1, size + 1)]
    return FiniteGraph(names, list(zip(names, names[1:])))


def free_word_length(radius):
    return word_length_table(standard_generators(FREE2), radius)


class TestCayleyBall(unittest.TestCase):
    """Cayley graphs of length tables"""

    def test_star_at_radius_one(self):
        graph = cayley_ball(free_word_length(1), 1)
        self.assertEqual(len(graph), 5)
        self.assertEqual(graph.vertices[0], '1')
        self.assertEqual(graph.degree('1'), 4)
        self.assertEqual(graph.edge_count, 4)
        for v in graph.vertices[1:]:
            self.assertEqual(graph.neighbors(v), ['1'])

    def test_tree_at_radius_two(self):
        table = free_word_length(2)
        graph = cayley_ball(table, 2)
        self.assertEqual(len(graph), 17)
        self.assertEqual(graph.edge_count, 16)
        for g in table.domain:
            if table.value(g) <= 1:
                self.assertEqual(graph.degree(g.token), 4)
            self.assertEqual(graph.distance('1', g.token), table.value(g))
        self.assertTrue(graph.is_connected())

    def test_constant_three_is_a_single_vertex(self):
        table = constant_table(FREE2, ball(FREE2, standard_generators(FREE2), 2), 3)
        graph = cayley_ball(table, 2)
        self.assertEqual(graph.vertices, ('1',))
        self.assertEqual(graph.edges, [])

    def test_missing_products(self):
        domain = ball(FREE2, standard_generators(FREE2), 1)
        values = {g: (0 if g.is_identity else 1) for g in domain}
        table = LengthTable(FREE2, tuple(domain), values, complete_below=0)
        with self.assertRaises(InsufficientDomain) as caught:
            cayley_ball(table, 1)
        self.assertIn(e(FREE2, 'a-1 b1'), caught.exception.missing)

    def test_exports(self):
        graph = cayley_ball(free_word_length(1), 1)
        data = graph.to_dict()
        self.assertEqual(data['vertices'][0], '1')
        self.assertEqual(len(data['edges']), 4)
        self.assertTrue(all(i < j for i, j in data['edges']))
        restored = FiniteGraph.from_dict(data)
        self.assertEqual(restored.to_dict(), data)
        dot = graph.to_dot()
        self.assertTrue(dot.startswith('graph G {'))
        self.assertIn('"1" -- "a1";', dot)
        self.assertEqual(dot, restored.to_dot())


class TestMetric(unittest.TestCase):
    """Graph metric and tuple congruence"""

    def test_path(self):
        graph = path_graph(3)
        self.assertEqual(graph.distance('v1', 'v3'), 2)
        self.assertEqual(graph_metric(graph)[0, 2], 2)

    def test_components(self):
        graph = FiniteGraph(['x', 'y'])
        self.assertTrue(math.isinf(graph.distance('x', 'y')))
        self.assertFalse(graph.is_connected())

    def test_triangle_inequality(self):
        metric = graph_metric(cayley_ball(free_word_length(2), 2))
        rng = random.Random(11)
        size = metric.shape[0]
        for _ in range(500):
            i, j, k = (rng.randrange(size) for _ in range(3))
            self.assertLessEqual(metric[i, k], metric[i, j] + metric[j, k])
            self.assertEqual(metric[i, j], metric[j, i])

    def test_congruence(self):
        path = path_graph(3)
        cayley = cayley_ball(free_word_length(1), 1)
        edge = VertexTuple(path, ('v1', 'v2'))
        self.assertTrue(tuples_congruent(edge, edge))
        self.assertTrue(tuples_congruent(edge, VertexTuple(cayley, ('1', 'a1'))))
        self.assertFalse(tuples_congruent(VertexTuple(path, ('v1', 'v3')), edge))
        with self.assertRaises(LengthMismatch):
            tuples_congruent(edge, VertexTuple(path, ('v1',)))
        with self.assertRaises(PreconditionFailed):
            VertexTuple(path, ('v9',))

    def test_loops_rejected(self):
        with self.assertRaises(ValueError):
            FiniteGraph(['x'], [('x', 'x')])


class TestConsistency(unittest.TestCase):
    """Consistent distance vectors and D-witnesses"""

    def setUp(self):
        self.table = free_word_length(3)
        self.one = identity(FREE2)
        self.g0 = e(FREE2, 'a1 b1 a1')

    def test_examples(self):
        self.assertEqual(self.table.value(self.g0), 3)
        self.assertTrue(check_consistent(self.table, (self.one, self.g0), (2, 1)))
        self.assertFalse(check_consistent(self.table, (self.one, self.g0), (1, 1)))
        self.assertTrue(check_consistent(self.table, (self.g0,), (0,)))

    def test_permutation_symmetry(self):
        rng = random.Random(5)
        pool = [g for g in self.table.domain if self.table.value(g) <= 1]
        for _ in range(50):
            a = tuple(rng.sample(pool, 3))
            d = tuple(rng.randint(0, 3) for _ in range(3))
            order = [2, 0, 1]
            self.assertEqual(
                check_consistent(self.table, a, d),
                check_consistent(self.table, tuple(a[i] for i in order),
                                 tuple(d[i] for i in order))
            )

    def test_missing_products(self):
        table = free_word_length(1)
        with self.assertRaises(InsufficientDomain):
            check_consistent(table, (e(FREE2, 'a1'), e(FREE2, 'b1')), (1, 1))
        with self.assertRaises(LengthMismatch):
            check_consistent(table, (self.one,), (1, 1))

    def test_sphere_membership(self):
        table = free_word_length(2)
        domain = ball(FREE2, standard_generators(FREE2), 2)
        found = d_witness_search(table, (self.one,), (2,), domain)
        self.assertEqual(table.value(found), 2)
        first = next(g for g in domain if table.value(g) == 2)
        self.assertEqual(found, first)

    def test_tree_has_no_common_neighbor(self):
        table = free_word_length(2)
        domain = ball(FREE2, standard_generators(FREE2), 2)
        result = d_witness_search(table, (self.one, e(FREE2, 'a1')), (1, 1), domain)
        self.assertIsInstance(result, NotFoundWithinDomain)
        self.assertEqual(result.checked, 17)

    def test_constant_one(self):
        domain = ball(FREE2, standard_generators(FREE2), 2)
        table = constant_table(FREE2, domain, 1)
        a = e(FREE2, 'a1')
        found = d_witness_search(table, (self.one, a), (1, 1), domain)
        self.assertNotIn(found, (self.one, a))
        self.assertEqual(found, domain[2])

    def test_inconsistent_is_vacuous(self):
        result = d_witness_search(self.table, (self.one, self.g0), (1, 1),
                                  self.table.domain)
        self.assertIsInstance(result, VacuouslySatisfied)

    def test_undecided_values(self):
        table = constant_table(FREE2, ball(FREE2, standard_generators(FREE2), 1), 1)
        with self.assertRaises(InsufficientDomain):
            d_witness_search(table, (self.one,), (1,), [e(FREE2, 'a2')])


class TestExtensionProperty(unittest.TestCase):
    """EP witnesses on small graphs"""

    def test_path_examples(self):
        path = path_graph(3)
        self.assertEqual(ep_witness(path, ('v1',), (1,)), 'v2')
        self.assertEqual(ep_witness(path, VertexTuple(path, ('v1', 'v3')), (1, 1)), 'v2')
        self.assertTrue(
            extend_tuple_congruence(VertexTuple(path, ('v1', 'v3')), 'v2', (1, 1))
        )

    def test_not_found(self):
        edge = path_graph(2)
        result = ep_witness(edge, ('v1', 'v2'), (2, 2))
        self.assertIsInstance(result, NotFound)
        self.assertEqual(result.checked, 2)

    def test_witnesses_realize_the_demand(self):
        graph = cayley_ball(free_word_length(2), 2)
        rng = random.Random(3)
        for _ in range(40):
            a = VertexTuple(graph, tuple(rng.sample(graph.vertices, 2)))
            d = (rng.randint(0, 3), rng.randint(0, 3))
            found = ep_witness(graph, a, d)
            if not isinstance(found, NotFound):
                self.assertTrue(extend_tuple_congruence(a, found, d))

    def test_sweep(self):
        path = path_graph(3)
        report = ep_sweep(path, [Demand(('v1',), (2,)), Demand(('v1', 'v2'), (3, 3))])
        self.assertEqual(report.checked, 2)
        self.assertEqual(report.passed, 1)
        self.assertFalse(report.all_passed)
        self.assertEqual(report.to_dict()['failures'],
                         [{'tuple': ['v1', 'v2'], 'distances': [3, 3]}])


class TestMoss(unittest.TestCase):
    """Bounded Moss approximants"""

    def test_single_edge(self):
        graph = moss_approximant(1, 1, 1)
        self.assertEqual(graph.vertices, ('w0.0', 'w1.0'))
        self.assertEqual(graph.edges, [(0, 1)])

    def test_neighbors_and_second_neighbors(self):
        graph = moss_approximant(1, 2, 2)
        round_one = [v for v in graph.vertices if v.startswith('w1.')]
        self.assertTrue(round_one)
        for v in round_one:
            self.assertEqual(graph.distance(ep_witness(graph, (v,), (1,)), v), 1)
            self.assertEqual(graph.distance(ep_witness(graph, (v,), (2,)), v), 2)

    def test_met_demands_survive(self):
        graph = moss_approximant(2, 3, 3)
        self.assertTrue(graph.is_connected())
        ledgers = graph.meta['rounds']
        self.assertEqual([ledger.round for ledger in ledgers], [1, 2, 3])
        demands = [demand for ledger in ledgers for demand in ledger.satisfied]
        self.assertTrue(demands)
        report = ep_sweep(graph, demands)
        self.assertEqual(report.passed, report.checked)

    def test_cached_metric_matches_bfs(self):
        graph = moss_approximant(2, 2, 2)
        for v in graph.vertices[:10]:
            self.assertTrue((graph.distance_row(v) == graph.bfs_row(v)).all())

    def test_vertex_budget(self):
        with override_settings(LENGTHLAB={'MOSS_VERTEX_CAP': 3}):
            with self.assertRaises(BudgetExceeded):
                moss_approximant(1, 3, 1)


class TestVcExtension(unittest.TestCase):
    """The path extension that breaks EP for the virtually cyclic group"""

    def test_adjacent_ends(self):
        edge = FiniteGraph(['u', 'v'], [('u', 'v')])
        gamma = vc_extension_graph(edge, 'u', 'v', 1)
        self.assertEqual(gamma.vertices, ('u', 'v', 'w0.0'))
        self.assertEqual(gamma.neighbors('w0.0'), ['u', 'v'])
        self.assertEqual(gamma.distance('u', 'v'), 1)
        self.assertTrue(gamma.meta['extension']['old_distances_preserved'])
        self.assertEqual(len(edge), 2)

    def test_wrong_distance(self):
        with self.assertRaises(PreconditionFailed):
            vc_extension_graph(path_graph(3), 'v1', 'v3', 1)

    def test_virtually_cyclic_ball(self):
        delta = cayley_ball(word_length_table(standard_generators(VC), 6), 6)
        b = e(VC, 'b')
        b2, b3 = power(b, 2).token, power(b, 3).token
        m = int(delta.distance('1', b.token))
        self.assertEqual(m, 1)
        gamma = vc_extension_graph(delta, '1', b.token, m)
        w0 = gamma.meta['extension']['path'][0]
        self.assertEqual(gamma.distance(w0, '1'), 1)
        self.assertLess(gamma.distance(w0, '1'), gamma.distance(w0, b2))
        self.assertLessEqual(gamma.distance(w0, b.token), m)
        self.assertLess(m, gamma.distance(w0, b3))

        rng = random.Random(8)
        for _ in range(100):
            u, v = rng.sample(delta.vertices, 2)
            self.assertEqual(delta.distance(u, v), gamma.distance(u, v))


if __name__ == '__main__':
    unittest.main()
