#!/usr/bin/env python3
"""
Unit tests for the construction kernels and the two counterexamples
"""

import django
import json
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

from cayley.extension import check_consistent  # noqa: E402
from core.exceptions import (  # noqa: E402
    BudgetExceeded, ClassNotStabilized, PreconditionFailed,
)
from core.results import NotFoundWithinRadius, VacuouslySatisfied  # noqa: E402
from genericity.counterexamples import ex_ab_exhaustive, ex_vc_checks  # noqa: E402
from genericity.invariants import (  # noqa: E402
    cofinite_generating_set, icc_invariant_split, separating_conjugator,
)
from genericity.kernels import (  # noqa: E402
    dense_bounded_proper_kernel, incomparability_kernel, lemD_kernel, tt_kernel,
    word_length_descent_kernel,
)
from genericity.reports import ACCEPTED, NOT_FOUND, VACUOUS  # noqa: E402
from groups.catalog import GroupSpec  # noqa: E402
from groups.elements import elements, identity, parse_element  # noqa: E402
from groups.enumeration import ball  # noqa: E402
from groups.generating import standard_generators  # noqa: E402
from lengths.construction import length_from_weight, word_length_table  # noqa: E402
from lengths.tables import constant_table  # noqa: E402
from lengths.weights import constant_weight  # noqa: E402

FREE2 = GroupSpec.free(2)
VC = GroupSpec.vc()
C4 = GroupSpec.cyclic(4)
AB2 = GroupSpec.ab_torsion(2)


def e(group, token):
    return parse_element(group, token)


def free_ball(radius):
    return ball(FREE2, standard_generators(FREE2), radius)


def free_word_length(radius):
    return word_length_table(standard_generators(FREE2), radius)


def random_weight_length(rng, domain):
    """l_omega for random weights in [1, 3] on a few short inverse pairs, default 4"""
    pool = [g for g in free_ball(2) if not g.is_identity]
    mapping = {}
    while len(mapping) < 6:
        g = rng.choice(pool)
        if g in mapping:
            continue
        w = rng.randint(1, 3)
        mapping[g] = w
        mapping[~g] = w
    return length_from_weight(constant_weight(FREE2, mapping, 4), domain, 4)


class TestLemD(unittest.TestCase):
    """Density of D(a, d)"""

    def setUp(self):
        self.table = free_word_length(4)
        self.one = identity(FREE2)
        self.g0 = e(FREE2, 'a1 b1 a1')

    def test_finds_witness(self):
        report = lemD_kernel(self.table, free_ball(1), (self.one, self.g0), (2, 1), radius=8)
        self.assertEqual(report.status, ACCEPTED)
        self.assertTrue(report.overall)
        self.assertIsNotNone(report.witness)
        self.assertEqual(report.notes['M'], 4)
        self.assertEqual(report.weight.default.value, 4)

    def test_inconsistent_is_vacuous(self):
        report = lemD_kernel(self.table, free_ball(1), (self.one, self.g0), (1, 1))
        self.assertEqual(report.status, VACUOUS)
        self.assertIsInstance(report.outcome, VacuouslySatisfied)
        self.assertTrue(report.overall)

    def test_finite_group_may_fail(self):
        table = word_length_table(standard_generators(C4), 2)
        a = (identity(C4), e(C4, '(2)'))
        report = lemD_kernel(table, ball(C4, standard_generators(C4), 2), a, (1, 1), radius=3)
        self.assertIn(report.status, (ACCEPTED, NOT_FOUND))
        if report.status == NOT_FOUND:
            self.assertIsInstance(report.outcome, NotFoundWithinRadius)
            self.assertFalse(report.overall)

    def test_zero_distance_forces_the_tuple_entry(self):
        a1 = e(FREE2, 'a1')
        report = lemD_kernel(self.table, free_ball(1), (self.one, a1), (0, 1), radius=8)
        self.assertEqual(report.status, ACCEPTED, report.render())
        self.assertTrue(report.overall, report.render())
        self.assertEqual(report.witness, self.one)
        self.assertEqual(report.notes['candidates'], 'g = a_1, forced by d_1 = 0')
        self.assertEqual(len(report.rejected), 0)

    def test_zero_distance_alone(self):
        report = lemD_kernel(self.table, free_ball(1), (self.g0,), (0,), debug=True)
        self.assertEqual(report.witness, self.g0)
        self.assertTrue(report.overall, report.render())
        self.assertNotIn('I1_size', report.notes)

    def test_candidates_skip_translates_of_the_window(self):
        a3 = e(FREE2, 'a3')
        report = lemD_kernel(self.table, free_ball(1), (self.one, a3), (2, 1), radius=8)
        self.assertEqual(report.notes['candidates'],
                         'ball elements outside B = a_i F, in BFS order')
        self.assertIn({'candidate': 'a2', 'reason': 'g lies in B = a_i F'},
                      report.rejected)
        self.assertNotEqual(report.witness, e(FREE2, 'a2'))

    def test_debug_mode(self):
        report = lemD_kernel(self.table, free_ball(1), (self.one, self.g0), (2, 1),
                             radius=8, debug=True)
        self.assertTrue(report.overall)
        self.assertGreater(report.notes['I1_size'], 0)

    def test_seeded_instances(self):
        rng = random.Random(7)
        pool = free_ball(2)
        instances = 0
        while instances < 10:
            n = rng.randint(1, 2)
            a = tuple(rng.sample(pool, n))
            d = tuple(rng.randint(1, 3) for _ in range(n))
            if not check_consistent(self.table, a, d):
                continue
            instances += 1
            report = lemD_kernel(self.table, free_ball(1), a, d, radius=8)
            self.assertEqual(report.status, ACCEPTED, report.render())
            self.assertTrue(report.overall, report.render())
            witness_checks = [c for c in report.checks
                              if c.description == 'g is a D(a, d) witness for l_omega']
            self.assertEqual(len(witness_checks), 1)
            self.assertTrue(witness_checks[0].passed)

    def test_report_json(self):
        report = lemD_kernel(self.table, free_ball(1), (self.one, self.g0), (2, 1), radius=8)
        data = json.loads(json.dumps(report.to_dict()))
        self.assertEqual(list(data)[:3], ['kernel', 'inputs', 'status'])
        self.assertEqual(data['kernel'], 'lemD')
        self.assertEqual(data['witness'], report.witness.token)
        self.assertTrue(data['overall'])
        self.assertIn('PASS', report.render())


class TestTopologicalTransitivity(unittest.TestCase):
    """Conjugation moves one window onto another"""

    def test_word_length_to_constant(self):
        F = [e(FREE2, t) for t in ('a1', 'a-1', 'b1', 'b-1')]
        t0 = free_word_length(2)
        t1 = constant_table(FREE2, free_ball(2), 1)
        report = tt_kernel(t0, t1, F, radius=8, debug=True)
        self.assertEqual(report.status, ACCEPTED)
        self.assertTrue(report.overall)
        self.assertFalse(report.witness.is_identity)
        self.assertEqual(report.rejected[0], {'candidate': '1', 'reason': 'F^(g^-1) meets F'})

    def test_identity_in_F_rejected(self):
        with self.assertRaises(PreconditionFailed):
            tt_kernel(free_word_length(2), free_word_length(2), [identity(FREE2)])

    def test_seeded_instances(self):
        rng = random.Random(21)
        pool = [g for g in free_ball(2) if not g.is_identity]
        t0 = free_word_length(2)
        for _ in range(10):
            t1 = random_weight_length(rng, free_ball(2))
            F = rng.sample(pool, 2)
            report = tt_kernel(t0, t1, F, radius=8)
            self.assertEqual(report.status, ACCEPTED, report.render())
            self.assertTrue(report.overall, report.render())
            self.assertLessEqual(len(report.inputs['F']), 4)

    def test_abelian_negative_control(self):
        X = standard_generators(AB2)
        t0 = word_length_table(X, 15)
        t1 = constant_table(AB2, elements(AB2), 1)
        F = [e(AB2, '(1,0,0)'), e(AB2, '(0,1,0)')]
        report = tt_kernel(t0, t1, F, radius=8)
        self.assertEqual(report.status, NOT_FOUND)
        self.assertIsInstance(report.outcome, NotFoundWithinRadius)
        self.assertEqual(report.outcome.checked, 16)
        self.assertFalse(report.overall)


class TestSupplementedKernels(unittest.TestCase):
    """Descent, bounded and proper density, incomparability"""

    def setUp(self):
        self.table = free_word_length(4)

    def test_descent(self):
        g = e(FREE2, 'a1 b1')
        report = word_length_descent_kernel(self.table, g, free_ball(1), radius=8)
        self.assertEqual(report.kernel, 'word_length_descent')
        self.assertEqual(report.status, ACCEPTED)
        self.assertTrue(report.overall, report.render())

    def test_descent_length_one(self):
        g = e(FREE2, 'a1')
        report = word_length_descent_kernel(self.table, g, free_ball(1))
        self.assertEqual(report.status, ACCEPTED, report.render())
        self.assertEqual(report.witness, identity(FREE2))
        self.assertTrue(report.overall, report.render())

    def test_bounded_and_proper(self):
        report = dense_bounded_proper_kernel(self.table, free_ball(1), radius=3)
        self.assertTrue(report.overall, report.render())
        census = report.notes['proper_census']
        self.assertGreaterEqual(census['complete_below'], 1)

    def test_incomparability(self):
        report = incomparability_kernel(self.table, self.table, free_ball(1), 1, radius=3)
        self.assertEqual(report.status, ACCEPTED)
        self.assertTrue(report.overall, report.render())
        self.assertEqual(self.table.value(report.witness), 3)
        self.assertEqual(report.notes['k2'], 2)


class TestInvariantSplit(unittest.TestCase):
    """Finite conjugacy classes and separating conjugators"""

    def test_virtually_cyclic(self):
        X = standard_generators(VC)
        report = icc_invariant_split(word_length_table(X, 3), e(VC, 'a'), X, 1)
        self.assertTrue(report.overall)
        self.assertTrue(report.notes['in_U'])
        self.assertEqual(len(report.notes['class']), 2)

    def test_cyclic_split(self):
        x = e(C4, '(2)')
        X = cofinite_generating_set(C4, [x])
        self.assertEqual([g.token for g in X], ['(1)', '(3)'])
        word = icc_invariant_split(word_length_table(X, 3), x, X, 1)
        self.assertFalse(word.notes['in_U'])
        self.assertTrue(word.overall)
        flat = icc_invariant_split(constant_table(C4, elements(C4), 1), x, X, 1)
        self.assertTrue(flat.notes['in_U'])
        self.assertTrue(flat.overall)

    def test_class_must_stabilize(self):
        X = standard_generators(FREE2)
        with self.assertRaises(ClassNotStabilized):
            icc_invariant_split(free_word_length(4), e(FREE2, 'a1'), X, 1)

    def test_cofinite_preconditions(self):
        with self.assertRaises(PreconditionFailed):
            cofinite_generating_set(FREE2, [])
        with self.assertRaises(PreconditionFailed):
            cofinite_generating_set(C4, [e(C4, '(1)')])

    def test_separating_conjugator(self):
        X = standard_generators(FREE2)
        a, b = e(FREE2, 'a1'), e(FREE2, 'b1')
        self.assertEqual(separating_conjugator([a], [a], X, 3), b)
        self.assertEqual(separating_conjugator([a, b], [a], X, 3), b)
        Z2 = GroupSpec.free_abelian(2)
        x = e(Z2, '(1,0)')
        result = separating_conjugator([x], [x], standard_generators(Z2), 3)
        self.assertIsInstance(result, NotFoundWithinRadius)
        with self.assertRaises(PreconditionFailed):
            separating_conjugator([identity(FREE2)], [a], X, 3)


class TestCounterexamples(unittest.TestCase):
    """The torsion product and the virtually cyclic group"""

    def test_torsion_product_k1(self):
        report = ex_ab_exhaustive(1)
        self.assertTrue(report.overall, report.render())
        self.assertEqual(report.notes['subsets'], 32)
        self.assertEqual(report.notes['generating_sets'] + report.notes['skipped'], 32)
        self.assertGreater(report.notes['skipped'], 0)

    def test_torsion_product_k2(self):
        report = ex_ab_exhaustive(2)
        self.assertTrue(report.overall, report.render())
        self.assertEqual(report.notes['inverse_classes'], 11)
        self.assertEqual(report.notes['subsets'], 2048)
        self.assertEqual(set(report.notes['k_X(g)']) - {'1', '2'}, set())

    def test_subset_budget(self):
        with override_settings(LENGTHLAB={'SUBSET_CAP': 16}):
            with self.assertRaises(BudgetExceeded):
                ex_ab_exhaustive(1)

    def test_virtually_cyclic(self):
        report = ex_vc_checks(20)
        self.assertTrue(report.overall, report.render())
        self.assertEqual(report.notes['elements_tested'], 164)
        self.assertEqual(report.notes['m'], 1)
        self.assertEqual(report.notes['w0_distances'], [1, 1, 2, 2])


if __name__ == '__main__':
    unittest.main()
