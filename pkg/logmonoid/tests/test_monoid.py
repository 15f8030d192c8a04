#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2026 logmonoid developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Unit testing monoid presentations and their operations.
"""

import random
import unittest
from math import gcd

from logmonoid.errors import IllDefinedMap, InvalidPresentation, NotSharp, OwnerMismatch, ZeroRho
from logmonoid.monoid import (MonoidPresentation, add_redundant_generator, component_count, double_dual, dual_monoid,
                              element_eq, eliminate_generators, enumerate_window, groupification, is_saturated,
                              is_sharp, membership, monoid_from_vectors, node_monoid_embedding, preimages,
                              pushout_int, saturate, sharpen, unit_generators)
from logmonoid.oracle import Bound, hilbert_bruteforce, hom_bruteforce
from logmonoid.tests.corpus import random_sharp_presentations
from logmonoid.utils import add


def single_relation(a1, a2):
    return MonoidPresentation(2, (((a1, 0), (0, a2)),))


class TestPresentation(unittest.TestCase):
    """Test construction, groupification and element equality."""

    def setUp(self):
        self.two_edge = single_relation(4, 6)

    def test_gcd_torsion_law(self):
        """The torsion of <e1, e2 | a1 e1 = a2 e2> has order gcd(a1, a2)."""
        for a1 in range(1, 13):
            for a2 in range(1, 13):
                group = groupification(single_relation(a1, a2))
                self.assertEqual(group.free_rank, 1)
                self.assertEqual(group.torsion_order, gcd(a1, a2))
                self.assertEqual(component_count(single_relation(a1, a2)), gcd(a1, a2))

    def test_group_string(self):
        self.assertEqual(str(groupification(self.two_edge)), "Z + Z/2")
        self.assertEqual(str(groupification(MonoidPresentation(2))), "Z^2")
        self.assertEqual(str(groupification(MonoidPresentation(0))), "0")

    def test_presentation_string(self):
        self.assertEqual(str(self.two_edge), "<e1, e2 | 4e1 = 6e2>")
        self.assertEqual(str(MonoidPresentation(1)), "<e1>")

    def test_invalid_presentation(self):
        with self.assertRaises(InvalidPresentation):
            MonoidPresentation(2, (((1, 0), (0, -1)),))
        with self.assertRaises(InvalidPresentation):
            MonoidPresentation(2, (((1, 0, 0), (0, 1)),))
        with self.assertRaises(InvalidPresentation):
            MonoidPresentation(2, labels=("a",))

    def test_element_eq(self):
        presentation = self.two_edge
        self.assertTrue(element_eq(presentation.element((4, 0)), presentation.element((0, 6))))
        self.assertFalse(element_eq(presentation.generator(0), presentation.generator(1)))
        self.assertEqual(presentation.element((8, 0)), presentation.element((4, 6)))
        self.assertEqual(len({presentation.element((4, 0)), presentation.element((0, 6))}), 1)

    def test_owner_mismatch(self):
        with self.assertRaises(OwnerMismatch):
            element_eq(self.two_edge.generator(0), single_relation(2, 3).generator(0))

    def test_element_arithmetic(self):
        e1 = self.two_edge.generator(0)
        e2 = self.two_edge.generator(1)
        self.assertEqual(4 * e1, 6 * e2)
        self.assertEqual(str(e1 + e2), "e1 + e2")
        self.assertEqual((e1 + e1).degree, 2)


class TestSharpness(unittest.TestCase):
    """Test sharpness, units and sharpening."""

    def test_free_monoid_is_sharp(self):
        result = is_sharp(MonoidPresentation(2))
        self.assertTrue(result.sharp)
        self.assertTrue(all(b > 0 for b in result.beta))

    def test_two_edge_is_sharp(self):
        result = is_sharp(single_relation(4, 6))
        self.assertTrue(result.sharp)
        self.assertEqual(4 * result.beta[0], 6 * result.beta[1])

    def test_free_unit(self):
        """e1 + e2 = 0 makes both generators units."""
        presentation = MonoidPresentation(3, (((1, 1, 0), (0, 0, 0)),))
        result = is_sharp(presentation)
        self.assertFalse(result.sharp)
        self.assertIn(result.unit, (0, 1))
        total = add(result.inverse, tuple(int(i == result.unit) for i in range(3)))
        self.assertFalse(any(presentation.coordinates(total)))
        self.assertEqual(unit_generators(presentation), [0, 1])
        self.assertTrue(is_sharp(sharpen(presentation)).sharp)

    def test_torsion_unit(self):
        """2e1 = 0 makes e1 a torsion unit."""
        presentation = MonoidPresentation(1, (((2,), (0,)),))
        result = is_sharp(presentation)
        self.assertFalse(result.sharp)
        self.assertEqual(result.unit, 0)
        self.assertEqual(result.inverse, (1,))

    def test_zero_generators_are_sharp(self):
        presentation = MonoidPresentation(2, (((1, 0), (0, 0)),))
        result = is_sharp(presentation)
        self.assertTrue(result.sharp)
        self.assertEqual(result.beta[0], 0)


class TestMembership(unittest.TestCase):
    """Test membership and preimage search."""

    def setUp(self):
        self.numerical = single_relation(3, 2)

    def test_numerical_semigroup(self):
        """<2, 3> contains every natural number but 1."""
        group = self.numerical.group
        one = group.add(group.project((0, 1)), group.negate(group.project((1, 0))))
        self.assertEqual(membership(self.numerical, one).status, "no")
        self.assertFalse(membership(self.numerical, one))
        for k in range(2, 8):
            result = membership(self.numerical, group.scale(k, one))
            self.assertEqual(result.status, "yes")
            self.assertEqual(self.numerical.coordinates(result.witness), group.scale(k, one))
        self.assertEqual(membership(self.numerical, group.negate(one)).status, "no")

    def test_preimages(self):
        presentation = single_relation(4, 6)
        target = presentation.coordinates((4, 0))
        found = preimages(presentation, target, limit=2)
        self.assertEqual(sorted(found), [(0, 6), (4, 0)])

    def test_preimages_respect_bound(self):
        presentation = single_relation(2, 2)
        target = presentation.coordinates((4, 0))
        self.assertEqual(preimages(presentation, target, bound=3, limit=5), [])
        found = preimages(presentation, target, bound=4, limit=5)
        self.assertEqual(sorted(found), [(0, 4), (2, 2), (4, 0)])

        free = MonoidPresentation(4)
        target = free.coordinates((20, 0, 0, 0))
        self.assertEqual(preimages(free, target, bound=8), [])
        self.assertEqual(preimages(free, target, bound=20), [(20, 0, 0, 0)])
        for vector in preimages(free, free.coordinates((3, 2, 0, 1)), bound=6, limit=10):
            self.assertLessEqual(sum(vector), 6)

    def test_undecided_within_bound(self):
        free = MonoidPresentation(1)
        result = membership(free, free.coordinates((50,)), bound=4)
        self.assertEqual(result.status, "unknown")
        self.assertEqual(result.bound, 4)
        self.assertFalse(result)
        self.assertEqual(membership(free, free.coordinates((50,)), bound=64).status, "yes")

    def test_undecided_without_sharpness(self):
        """<e1, e2 | e1 + e2 = 0> is Z, searched by degree."""
        presentation = MonoidPresentation(2, (((1, 1), (0, 0)),))
        self.assertFalse(is_sharp(presentation).sharp)
        target = presentation.coordinates((10, 0))
        result = membership(presentation, target, bound=3)
        self.assertEqual(result.status, "unknown")
        self.assertEqual(result.bound, 3)
        result = membership(presentation, target, bound=12)
        self.assertEqual(result.status, "yes")
        self.assertEqual(presentation.coordinates(result.witness), target)

    def test_enumerate_window(self):
        window = enumerate_window(MonoidPresentation(2), 2)
        self.assertEqual(len(window), 6)


class TestSaturationAndDuals(unittest.TestCase):
    """Test saturation, dual monoids and double duals."""

    def test_dual_of_free_monoid(self):
        toric = dual_monoid(MonoidPresentation(2))
        self.assertEqual(len(toric.hilbert_basis), 2)
        self.assertEqual(sorted(toric.pairing), [(0, 1), (1, 0)])

    def test_saturate_torsion(self):
        """<e1, e2 | 2e1 = 2e2> saturates to N with torsion Z/2."""
        result = saturate(single_relation(2, 2))
        self.assertEqual(len(result.hilbert_basis), 1)
        self.assertEqual(str(result.torsion), "Z/2")

    def test_saturate_two_edge(self):
        result = saturate(single_relation(4, 6))
        self.assertEqual(len(result.hilbert_basis), 1)
        self.assertEqual(result.group.free_rank, 1)
        self.assertEqual(result.torsion.torsion_order, 2)

    def test_saturate_requires_sharp(self):
        with self.assertRaises(NotSharp):
            saturate(MonoidPresentation(2, (((1, 1), (0, 0)),)))

    def test_is_saturated(self):
        self.assertTrue(is_saturated(MonoidPresentation(2)))
        self.assertTrue(is_saturated(MonoidPresentation(3, (((1, 0, 1), (0, 2, 0)),))))
        self.assertFalse(is_saturated(single_relation(3, 2)))
        self.assertFalse(is_saturated(single_relation(2, 2)))

    def test_monoid_from_vectors(self):
        presentation = monoid_from_vectors([(1, 0), (1, 1), (1, 2)], 2)
        self.assertEqual(presentation.labels, ("h1", "h2", "h3"))
        self.assertEqual(presentation.group.free_rank, 2)
        self.assertEqual(presentation.group.torsion_order, 1)
        self.assertTrue(element_eq(presentation.element((1, 0, 1)), presentation.element((0, 2, 0))))

    def test_double_dual_is_saturation(self):
        """Double dual and sharpened saturation agree, and both match brute force in the box."""
        rng = random.Random(2024)
        presentations = random_sharp_presentations(rng, 100)
        self.assertEqual(len(presentations), 100)
        bound = Bound(box=10)
        for presentation in presentations:
            saturation = saturate(presentation)
            dual_dual = double_dual(presentation)
            self.assertEqual(sorted(dual_dual.hilbert_basis), sorted(saturation.hilbert_basis))
            rank = presentation.group.free_rank
            fits = all(abs(a) <= bound.box for h in saturation.hilbert_basis for a in h)
            if 0 < rank <= 3 and fits:
                dual = dual_monoid(presentation)
                self.assertEqual(hilbert_bruteforce(dual.hilbert_basis, rank, bound),
                                 sorted(saturation.hilbert_basis))

    def test_dual_matches_hom_bruteforce(self):
        """Hilbert basis pairings of the dual are the minimal maps to N."""
        rng = random.Random(99)
        bound = Bound(box=6)
        for presentation in random_sharp_presentations(rng, 30, max_gens=3, max_relations=2):
            dual = dual_monoid(presentation)
            if all(a <= bound.box for row in dual.pairing for a in row):
                self.assertEqual(sorted(dual.pairing), hom_bruteforce(presentation, bound))


class TestNodeMonoid(unittest.TestCase):
    """Test the integral pushout and the node monoid embedding."""

    def test_pushout_ill_defined(self):
        base = MonoidPresentation(2, (((1, 0), (0, 1)),), labels=("t1", "t2"))
        free = MonoidPresentation(2)
        with self.assertRaises(IllDefinedMap) as context:
            pushout_int(free, MonoidPresentation(1), base, [(1, 0), (0, 1)], [(1,), (1,)])
        self.assertEqual(context.exception.side, "first")
        self.assertEqual(context.exception.relation, 0)

    def test_pushout_group(self):
        """N (+)_N N^2 along t -> (2) and t -> (1, 1) has groupification Z^2."""
        pushout = pushout_int(MonoidPresentation(1), MonoidPresentation(2), MonoidPresentation(1), [(2,)], [(1, 1)])
        self.assertEqual(pushout.n_gens, 3)
        self.assertEqual(str(pushout.group), "Z^2")

    def test_zero_rho(self):
        presentation = MonoidPresentation(2, (((1, 0), (0, 0)),))
        with self.assertRaises(ZeroRho):
            node_monoid_embedding(presentation, (1, 0))

    def test_embedding_claims(self):
        """The node monoid embeds, and its image is the pairs (q, q + c rho)."""
        rng = random.Random(17)
        presentations = random_sharp_presentations(rng, 5, max_gens=3, max_relations=2, max_entry=2)
        for presentation in presentations:
            candidates = [tuple(rng.randint(0, 2) for _ in range(presentation.n_gens)) for _ in range(10)]
            rho = next((v for v in candidates if any(presentation.coordinates(v))), None)
            if rho is None:
                continue
            result = node_monoid_embedding(presentation, rho, elements=[((0,) * presentation.n_gens, 1, 2)],
                                           window=6)
            self.assertTrue(result.injective)
            self.assertTrue(result.image_characterized)
            self.assertEqual(result.collisions, ())
            self.assertEqual(result.mismatches, ())
            self.assertEqual(result.pushout.labels[-2:], ("z", "w"))
            (_, (left, right)), = result.images
            self.assertEqual(left, presentation.element(rho))
            self.assertEqual(right, presentation.element(add(rho, rho)))

    def test_image_on_even_steps(self):
        """With rho = 2 in N, (p, q) is an image pair exactly when q - p is even."""
        result = node_monoid_embedding(MonoidPresentation(1), (2,), window=6)
        self.assertEqual(result.checked_pairs, 49)
        self.assertTrue(result.injective)
        self.assertTrue(result.image_characterized)


class TestTietze(unittest.TestCase):
    """Test generator elimination and redundant generators."""

    def test_round_trip(self):
        presentation = single_relation(4, 6)
        extended = add_redundant_generator(presentation, (1, 1), label="s")
        self.assertEqual(extended.labels, ("e1", "e2", "s"))
        self.assertEqual(str(extended.group), str(presentation.group))
        result = eliminate_generators(extended)
        self.assertEqual(result.kept, (0, 1))
        self.assertEqual(result.substitution[2], (1, 1))
        self.assertEqual(str(result.presentation), str(presentation))

    def test_zero_generator_eliminated(self):
        presentation = MonoidPresentation(3, (((1, 0, 0), (0, 0, 0)), ((0, 1, 0), (1, 0, 2))))
        result = eliminate_generators(presentation)
        self.assertEqual(result.kept, (2,))
        self.assertEqual(result.substitution, ((0,), (2,), (1,)))
        self.assertEqual(str(result.presentation.group), "Z")


if __name__ == "__main__":
    unittest.main()
