#!/usr/bin/env python3
"""
Unit tests for length tables, weights and their constructions
"""

import django
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

from core.exceptions import (  # noqa: E402
    BudgetExceeded, CapTooSmall, DefaultTooSmall, EmptyDomain, PreconditionFailed,
)
from core.results import (  # noqa: E402
    BoundedByCOnDomain, NotWordLengthOnDomain, WitnessAgainst, WordLength,
)
from groups.catalog import GroupSpec  # noqa: E402
from groups.elements import conjugate, identity, parse_element  # noqa: E402
from groups.enumeration import ball  # noqa: E402
from groups.generating import GeneratingSet, standard_generators  # noqa: E402
from lengths.comparison import incomparability_witness, lipschitz_compare  # noqa: E402
from lengths.construction import (  # noqa: E402
    brute_force_length, conjugate_length, length_from_weight,
    reconstruct_word_length, wm_construction, word_length_table,
)
from lengths.tables import (  # noqa: E402
    Capped, LengthTable, WindowConstraint, constant_table, is_bounded_on_domain,
    level_census, validate_length_axioms,
)
from lengths.weights import (  # noqa: E402
    Constant, ProperRamp, WeightSpec, conjugate_weight, constant_weight,
)

FREE2 = GroupSpec.free(2)
VC = GroupSpec.vc()
C4 = GroupSpec.cyclic(4)


def e(group, token):
    return parse_element(group, token)


def free_ball(radius):
    return ball(FREE2, standard_generators(FREE2), radius)


def random_mapping(rng, pool, pairs, low, high):
    """pairs inverse pairs with weights in [low, high]"""
    mapping = {}
    while len(mapping) < 2 * pairs:
        g = rng.choice(pool)
        if g not in mapping:
            mapping[g] = mapping[~g] = rng.randint(low, high)
    return mapping


def random_generating_set(rng):
    choices = ['a, b', 'a, a b', 'a, b, a b']
    return GeneratingSet.parse(FREE2, rng.choice(choices))


class TestValidation(unittest.TestCase):
    """Axiom checks on finite tables"""

    def test_constant_table_is_valid(self):
        t = constant_table(FREE2, free_ball(2), 3)
        self.assertTrue(validate_length_axioms(t).is_valid)
        self.assertEqual(t.complete_below, 2)

    def test_word_length_is_valid(self):
        t = word_length_table(standard_generators(FREE2), 3)
        report = validate_length_axioms(t)
        self.assertTrue(report.is_valid)
        self.assertGreater(report.checked_triples, 0)

    def test_symmetry_breach(self):
        one, a = identity(FREE2), e(FREE2, 'a')
        t = LengthTable(FREE2, (one, a, ~a), {one: 0, a: 1, ~a: 2})
        axioms = {v.axiom for v in validate_length_axioms(t).violations}
        self.assertIn('L2', axioms)

    def test_missing_inverse_and_identity(self):
        a = e(FREE2, 'a')
        t = LengthTable(FREE2, (a,), {a: 1})
        axioms = {v.axiom for v in validate_length_axioms(t).violations}
        self.assertEqual(axioms, {'L1', 'closure'})

    def test_capped_triangle(self):
        one, a = identity(FREE2), e(FREE2, 'a')
        a2, a_2 = e(FREE2, 'a2'), e(FREE2, 'a-2')
        values = {one: 0, a: 1, ~a: 1, a2: Capped(1), a_2: Capped(1)}
        t = LengthTable(FREE2, (one, a, ~a, a2, a_2), values)
        self.assertTrue(validate_length_axioms(t).is_valid)
        values[a2] = values[a_2] = Capped(2)
        t = LengthTable(FREE2, (one, a, ~a, a2, a_2), values)
        axioms = {v.axiom for v in validate_length_axioms(t).violations}
        self.assertEqual(axioms, {'L3'})

    def test_table_json(self):
        one, a = identity(FREE2), e(FREE2, 'a')
        t = LengthTable(FREE2, (one, a, ~a), {one: 0, a: Capped(4), ~a: Capped(4)},
                        exact_radius=1)
        data = t.to_dict()
        self.assertEqual(data['entries'][1], ['a1', {'capped': 4}])
        self.assertEqual(LengthTable.from_dict(data), t)


class TestLengthFromWeight(unittest.TestCase):
    """Cheapest decompositions"""

    def test_standard_support(self):
        a, b = e(FREE2, 'a'), e(FREE2, 'b')
        omega = constant_weight(FREE2, {a: 1, b: 1}, 10)
        t = length_from_weight(omega, free_ball(3), cap=20)
        self.assertEqual(t.value(e(FREE2, 'a b a-1')), 3)
        self.assertTrue(validate_length_axioms(t).is_valid)

    def test_shortcut_through_product(self):
        omega = constant_weight(FREE2, {e(FREE2, 'a'): 1, e(FREE2, 'a b'): 1}, 10)
        b = e(FREE2, 'b')
        t = length_from_weight(omega, free_ball(2), cap=20)
        self.assertEqual(t.value(b), 2)
        self.assertEqual(brute_force_length(omega, b, 3), 2)

    def test_empty_support(self):
        omega = WeightSpec.build(FREE2, {}, Constant(5))
        t = length_from_weight(omega, free_ball(2), cap=20)
        for g in t.domain:
            self.assertEqual(t.value(g), 0 if g.is_identity else 5)

    def test_capped_values(self):
        omega = constant_weight(FREE2, {e(FREE2, 'a'): 1}, 10)
        t = length_from_weight(omega, [e(FREE2, 'a4'), e(FREE2, 'a2')], cap=3)
        self.assertEqual(t.value(e(FREE2, 'a4')), Capped(3))
        self.assertEqual(t.value(e(FREE2, 'a2')), 2)
        self.assertTrue(validate_length_axioms(t).is_valid)
        with self.assertRaises(CapTooSmall):
            length_from_weight(omega, [e(FREE2, 'a4')], cap=3, exact=True)

    def test_complete_below_tracks_the_domain(self):
        omega = constant_weight(FREE2, {e(FREE2, 'a'): 1, e(FREE2, 'b'): 1}, 10)
        t = length_from_weight(omega, free_ball(2), cap=20)
        self.assertEqual(t.complete_below, 2)

    def test_single_factor_bound_and_monotonicity(self):
        rng = random.Random(5)
        domain = free_ball(3)
        pool = [g for g in free_ball(2) if not g.is_identity]
        for _ in range(20):
            mapping = random_mapping(rng, pool, 3, 1, 6)
            omega = WeightSpec.build(FREE2, mapping, Constant(8))
            heavier = WeightSpec.build(
                FREE2, {g: w + 1 for g, w in omega.support_map.items()}, Constant(9)
            )
            light = length_from_weight(omega, domain, cap=20)
            heavy = length_from_weight(heavier, domain, cap=20)
            for g in domain:
                self.assertLessEqual(light.value(g), omega.weight(g))
                self.assertLessEqual(light.value(g), heavy.value(g))

    def test_oracle_equivalence(self):
        """length_from_weight matches the brute-force oracle on 100 weights"""
        rng = random.Random(2024)
        domain = free_ball(3)
        pool = [g for g in free_ball(2) if not g.is_identity]
        for _ in range(100):
            M = rng.randint(5, 10)
            mapping = random_mapping(rng, pool, 3, 2, M - 1)
            omega = WeightSpec.build(FREE2, mapping, Constant(M))
            t = length_from_weight(omega, domain, cap=M)
            for g in domain:
                self.assertEqual(t.value(g), brute_force_length(omega, g, 4),
                                 f"{g.token} under {omega.to_dict()}")

    def test_brute_force_edges(self):
        omega = constant_weight(FREE2, {e(FREE2, 'a'): 1}, 7)
        self.assertEqual(brute_force_length(omega, identity(FREE2), 3), 0)
        self.assertEqual(brute_force_length(omega, e(FREE2, 'b'), 3), 7)

    def test_ramp_weights(self):
        omega = WeightSpec.build(FREE2, {e(FREE2, 'a'): 1, e(FREE2, 'b'): 1},
                                 ProperRamp(2))
        # first off-support pair in BFS order is a2 / a-2
        self.assertEqual(omega.weight(e(FREE2, 'a2')), 3)
        self.assertEqual(omega.weight(e(FREE2, 'a-2')), 3)
        self.assertEqual(omega.weight(e(FREE2, 'a1 b1')), 4)
        t = length_from_weight(omega, free_ball(3), cap=6)
        self.assertEqual(t.value(e(FREE2, 'a2')), 2)
        self.assertTrue(validate_length_axioms(t).is_valid)
        with override_settings(LENGTHLAB={'RAMP_CAP_LIMIT': 5}):
            with self.assertRaises(BudgetExceeded):
                length_from_weight(omega, free_ball(1), cap=6)

    def test_weight_json(self):
        omega = WeightSpec.build(FREE2, {e(FREE2, 'a b'): 2}, ProperRamp(3))
        self.assertEqual(WeightSpec.from_dict(omega.to_dict()), omega)

    def test_asymmetric_support_rejected(self):
        a = e(FREE2, 'a')
        with self.assertRaises(ValueError):
            WeightSpec(FREE2, ((a, 1),), Constant(3))


class TestWordLength(unittest.TestCase):
    """BFS word lengths"""

    def test_examples(self):
        self.assertEqual(
            word_length_table(standard_generators(FREE2), 2).value(e(FREE2, 'a b')), 2
        )
        self.assertEqual(
            word_length_table(standard_generators(VC), 3).value(e(VC, 'a^2 b')), 3
        )
        t = word_length_table(GeneratingSet.parse(C4, '(1)'), 2)
        self.assertEqual(t.value(e(C4, '2')), 2)
        self.assertEqual(t.exact_radius, 2)


class TestWmConstruction(unittest.TestCase):
    """Weights agreeing with a base length on a finite window"""

    def setUp(self):
        self.base = word_length_table(standard_generators(FREE2), 4)
        self.F = [identity(FREE2)] + list(standard_generators(FREE2))

    def test_constant_default(self):
        omega = wm_construction(self.base, self.F, Constant(2))
        t = length_from_weight(omega, self.base.domain, cap=10)
        self.assertTrue(WindowConstraint(self.base, tuple(self.F)).holds_for(t))
        self.assertIsInstance(is_bounded_on_domain(t, 2), BoundedByCOnDomain)
        self.assertTrue(validate_length_axioms(t.restrict(free_ball(2))).is_valid)

    def test_ramp_default(self):
        omega = wm_construction(self.base, self.F, ProperRamp(2))
        t = length_from_weight(omega, free_ball(3), cap=8)
        self.assertTrue(WindowConstraint(self.base, tuple(self.F)).holds_for(t))
        census = level_census(t)
        self.assertEqual(census['levels']['0'], 1)
        self.assertEqual(census['levels']['1'], 4)
        self.assertGreaterEqual(census['complete_below'], 2)

    def test_trivial_window(self):
        omega = wm_construction(self.base, [identity(FREE2)], Constant(4))
        t = length_from_weight(omega, free_ball(2), cap=10)
        self.assertTrue(all(t.value(g) == 4 for g in t.domain if not g.is_identity))

    def test_default_too_small(self):
        with self.assertRaises(DefaultTooSmall):
            wm_construction(self.base, self.F, Constant(1))
        with self.assertRaises(DefaultTooSmall):
            wm_construction(self.base, self.F, ProperRamp(0))

    def test_window_agreement_on_random_instances(self):
        """l_{omega_M} lies in W(l, F) for 20 seeded triples"""
        rng = random.Random(27)
        pool = [g for g in free_ball(2) if not g.is_identity]
        for _ in range(20):
            base = word_length_table(random_generating_set(rng), 3)
            F = [g for g in rng.sample(pool, rng.randint(1, 6)) if g in base]
            F += [~f for f in F]
            top = max(base.value(f) for f in F) if F else 0
            omega = wm_construction(base, F, Constant(top + rng.randint(1, 3)))
            t = length_from_weight(omega, F, cap=20)
            for f in F:
                self.assertEqual(t.value(f), base.value(f))


class TestConjugation(unittest.TestCase):
    """The conjugation action on lengths and weights"""

    def test_identity_acts_trivially(self):
        t = word_length_table(standard_generators(FREE2), 3)
        moved = conjugate_length(identity(FREE2), t)
        self.assertEqual(moved.domain, t.domain)
        self.assertEqual(moved.values, t.values)

    def test_action_laws(self):
        rng = random.Random(9)
        t = word_length_table(standard_generators(FREE2), 3)
        pool = free_ball(2)
        for _ in range(200):
            g, h = rng.choice(pool), rng.choice(pool)
            once = conjugate_length(g * h, t)
            twice = conjugate_length(g, conjugate_length(h, t))
            self.assertEqual(set(once.domain), set(twice.domain))
            for x in once.domain:
                self.assertEqual(once.value(x), twice.value(x))
            self.assertEqual(conjugate_length(identity(FREE2), t).values, t.values)

    def test_conjugated_word_length(self):
        rng = random.Random(13)
        pool = free_ball(2)
        for _ in range(20):
            X = random_generating_set(rng)
            g = rng.choice(pool)
            moved = GeneratingSet.build(FREE2, [conjugate(x, ~g) for x in X])
            expected = word_length_table(moved, 3)
            actual = conjugate_length(g, word_length_table(X, 3))
            self.assertEqual(set(actual.domain), set(expected.domain))
            for x in expected.domain:
                self.assertEqual(actual.value(x), expected.value(x))

    def test_dropped_points_and_empty_domain(self):
        t = word_length_table(standard_generators(FREE2), 2)
        a, b = e(FREE2, 'a'), e(FREE2, 'b')
        bab = e(FREE2, "b a b-1")
        moved = conjugate_length(b, t, domain=[bab, a, e(FREE2, "a5")])
        self.assertEqual(moved.meta["dropped"], ["a5"])
        self.assertEqual(moved.value(bab), 1)
        self.assertEqual(moved.value(a), 3)
        with self.assertRaises(EmptyDomain):
            conjugate_length(b, t, domain=[e(FREE2, 'a5')])

    def test_conjugate_weight(self):
        rng = random.Random(4)
        pool = [g for g in free_ball(2) if not g.is_identity]
        domain = free_ball(2)
        for _ in range(10):
            omega = WeightSpec.build(
                FREE2, random_mapping(rng, pool, 3, 1, 3), Constant(5)
            )
            g = rng.choice(pool)
            moved = length_from_weight(conjugate_weight(g, omega), domain, cap=10)
            base = length_from_weight(omega, [conjugate(x, g) for x in domain], cap=10)
            for x in domain:
                self.assertEqual(moved.value(x), base.value(conjugate(x, g)))
        ramp = WeightSpec.build(FREE2, {}, ProperRamp(1))
        with self.assertRaises(PreconditionFailed):
            conjugate_weight(e(FREE2, 'a'), ramp)


class TestReconstruction(unittest.TestCase):
    """Recognizing word lengths through the descent condition"""

    def test_free_word_length(self):
        result = reconstruct_word_length(word_length_table(standard_generators(FREE2), 3))
        self.assertIsInstance(result, WordLength)
        self.assertEqual([x.token for x in result.generators],
                         ['a1', 'a-1', 'b1', 'b-1'])

    def test_constant_three(self):
        result = reconstruct_word_length(constant_table(FREE2, free_ball(2), 3))
        self.assertIsInstance(result, NotWordLengthOnDomain)
        self.assertEqual(result.element, e(FREE2, 'a'))

    def test_constant_one(self):
        t = constant_table(FREE2, free_ball(1), 1)
        result = reconstruct_word_length(t)
        self.assertIsInstance(result, WordLength)
        self.assertEqual(len(result.generators), len(t) - 1)

    def test_round_trip(self):
        rng = random.Random(21)
        for _ in range(5):
            t = word_length_table(random_generating_set(rng), 3)
            result = reconstruct_word_length(t)
            self.assertIsInstance(result, WordLength)
            rebuilt = word_length_table(GeneratingSet.build(FREE2, result.generators), 3)
            self.assertEqual(rebuilt.values, t.values)


class TestComparison(unittest.TestCase):
    """Bi-Lipschitz comparison on a window"""

    def test_word_length_against_constant(self):
        t1 = word_length_table(standard_generators(FREE2), 4)
        t2 = constant_table(FREE2, t1.domain, 1)
        result = lipschitz_compare(t1, t2, 3)
        self.assertIsInstance(result, WitnessAgainst)
        self.assertEqual(result.element, e(FREE2, 'a4'))

    def test_self_comparison(self):
        t = word_length_table(standard_generators(FREE2), 3)
        self.assertIsInstance(lipschitz_compare(t, t, 1), BoundedByCOnDomain)

    def test_bounded_construction(self):
        base = word_length_table(standard_generators(FREE2), 4)
        F = [identity(FREE2)] + list(standard_generators(FREE2))
        t1 = length_from_weight(wm_construction(base, F, Constant(2)), base.domain, cap=10)
        self.assertIsInstance(lipschitz_compare(t1, base, 2), BoundedByCOnDomain)

    def test_incomparability(self):
        t1 = word_length_table(standard_generators(FREE2), 4)
        t2 = constant_table(FREE2, t1.domain, 3)
        forward, backward = incomparability_witness(t1, t2, 1)
        self.assertIsInstance(forward, WitnessAgainst)
        self.assertIsInstance(backward, WitnessAgainst)
        self.assertEqual(backward.element, e(FREE2, 'a'))


if __name__ == '__main__':
    unittest.main()
