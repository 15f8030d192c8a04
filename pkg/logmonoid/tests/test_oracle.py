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

"""Unit testing the brute-force reference implementations.
"""

import random
import unittest

from logmonoid.errors import DimensionTooLarge, TooManyVariables
from logmonoid.intlin import LinearSystem, lp_feasible
from logmonoid.logcurve import build_basic_monoid, tropical_system
from logmonoid.monoid import MonoidPresentation
from logmonoid.oracle import (Bound, canonical_residue, enumerate_elements, fm_feasible, hilbert_bruteforce,
                              hom_bruteforce, saturation_bruteforce, unit_search)
from logmonoid.tests.corpus import loop_graph, random_presentation, two_edge_graph


def random_system(rng, max_vars=5, max_rows=5, max_entry=3):
    n = rng.randint(1, max_vars)

    def rows():
        return tuple((tuple(rng.randint(-max_entry, max_entry) for _ in range(n)), rng.randint(-2, 2))
                     for _ in range(rng.randint(0, max_rows // 2)))

    return LinearSystem(n, rows(), rows(), rows())


class TestBound(unittest.TestCase):

    def test_validation(self):
        self.assertEqual(Bound().multiplier, 12)
        for name in ("degree", "box", "multiplier"):
            with self.assertRaises(ValueError):
                Bound(**{name: 0})


class TestEliminationOracle(unittest.TestCase):
    """Test the exact LP against plain elimination."""

    def test_random_agreement(self):
        rng = random.Random(23)
        for _ in range(150):
            system = random_system(rng)
            expected = fm_feasible(system)
            for method in ("fourier_motzkin", "simplex"):
                witness = lp_feasible(system, method)
                self.assertEqual(witness is not None, expected, (method, system))
                if witness is not None:
                    self.assertTrue(system.satisfied_by(witness))

    def test_loop_graph(self):
        """m[v,1] = m[v,1] + m[e] forces m[e] = 0 against m[e] > 0."""
        system = tropical_system(build_basic_monoid(loop_graph()))
        self.assertFalse(fm_feasible(system))
        self.assertIsNone(lp_feasible(system))

    def test_two_edge_graph(self):
        system = tropical_system(build_basic_monoid(two_edge_graph(4, 6)))
        self.assertTrue(fm_feasible(system))

    def test_strict_and_weak(self):
        self.assertFalse(fm_feasible(LinearSystem(1, (), (((1,), 0),), (((-1,), 0),))))
        self.assertTrue(fm_feasible(LinearSystem(1, (), (((1,), 0), ((-1,), 0)))))

    def test_too_many_variables(self):
        with self.assertRaises(TooManyVariables):
            fm_feasible(LinearSystem(7))


class TestEnumerationOracles(unittest.TestCase):
    """Test the enumeration oracles on small monoids."""

    def test_residues_match_group_coordinates(self):
        rng = random.Random(5)
        for _ in range(40):
            presentation = random_presentation(rng, max_gens=3)
            n = presentation.n_gens
            for _ in range(10):
                u = tuple(rng.randint(-3, 3) for _ in range(n))
                v = tuple(rng.randint(-3, 3) for _ in range(n))
                self.assertEqual(canonical_residue(presentation, u) == canonical_residue(presentation, v),
                                 presentation.coordinates(u) == presentation.coordinates(v))

    def test_saturation_adds_torsion(self):
        """In <e1, e2 | 2e1 = 2e2> the torsion element e1 - e2 is saturated in."""
        presentation = MonoidPresentation(2, (((2, 0), (0, 2)),))
        bound = Bound(degree=4, box=2, multiplier=2)
        saturation = saturation_bruteforce(presentation, bound)
        torsion = canonical_residue(presentation, (1, -1))
        self.assertIn(torsion, saturation)
        self.assertNotIn(torsion, enumerate_elements(presentation, bound))
        self.assertNotIn(canonical_residue(presentation, (-1, 0)), saturation)

    def test_unit_search(self):
        self.assertIsNotNone(unit_search(MonoidPresentation(2, (((1, 1), (0, 0)),))))
        self.assertIsNone(unit_search(MonoidPresentation(2)))
        self.assertIsNone(unit_search(MonoidPresentation(2, (((4, 0), (0, 6)),))))

    def test_hom_bruteforce(self):
        self.assertEqual(hom_bruteforce(MonoidPresentation(2), Bound(box=3)), [(0, 1), (1, 0)])
        self.assertEqual(hom_bruteforce(MonoidPresentation(2, (((4, 0), (0, 6)),)), Bound(box=4)), [(3, 2)])

    def test_hilbert_bruteforce(self):
        self.assertEqual(hilbert_bruteforce([(0, 1), (2, -1)], 2, Bound(box=4)), [(1, 0), (1, 1), (1, 2)])
        self.assertEqual(hilbert_bruteforce([(1, 0), (0, 1)], 2, Bound(box=3)), [(0, 1), (1, 0)])
        with self.assertRaises(DimensionTooLarge):
            hilbert_bruteforce([], 4)


if __name__ == "__main__":
    unittest.main()
