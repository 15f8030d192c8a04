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

"""Unit testing decorated dual graphs and their basic monoids.
"""

import random
import unittest
from math import gcd

from logmonoid.errors import InvalidGraph, NotFeasible, ZeroRho
from logmonoid.intlin import columns, verify_certificate
from logmonoid.logcurve import (DecoratedDualGraph, Edge, Vertex, build_basic_monoid, fs_basic_monoid,
                                ghost_section_check, reduced_presentation, saturation_count, tropical_feasible,
                                tropical_system, tropicalization_check, varrho_matrix, varrho_saturation_count)
from logmonoid.monoid import MonoidPresentation, is_sharp
from logmonoid.slb import enumerate_saturation_data
from logmonoid.tests.corpus import loop_graph, one_vertex_graph, random_graph, two_edge_graph


class TestBasicMonoid(unittest.TestCase):
    """Test the construction of the basic monoid."""

    def setUp(self):
        self.graph = two_edge_graph(4, 6)
        self.basic = build_basic_monoid(self.graph)

    def test_generators(self):
        self.assertEqual(self.basic.presentation.labels, ("m[v1,1]", "m[v2,1]", "m[e1]", "m[e2]"))
        self.assertEqual(self.basic.gen_labels[0], ("vertex", "v1", 1))
        self.assertEqual(self.basic.edge_index("e2"), 3)
        self.assertEqual(self.basic.vertex_index("v2", 1), 1)
        self.assertEqual(self.basic.reduced_gens, (1, 2, 3))

    def test_relations(self):
        presentation = self.basic.presentation
        self.assertEqual(len(presentation.relations), 3)
        self.assertEqual(presentation.describe_relation(0), "m[v1,1] = 0")
        self.assertEqual(presentation.describe_relation(1), "m[v2,1] = m[v1,1] + 4m[e1]")
        self.assertEqual(self.basic.relation_labels[2], "edge e2 branch 1")

    def test_reduced_presentation(self):
        reduced = reduced_presentation(self.basic)
        self.assertEqual(str(reduced.presentation), "<m[e1], m[e2] | 4m[e1] = 6m[e2]>")

    def test_negative_contact_order(self):
        """A negative mu puts the edge generator on the target side."""
        graph = DecoratedDualGraph(1, (Vertex("a", frozenset({1})), Vertex("b", frozenset({1}))),
                                   (Edge("e", "a", "b", (-2,)),))
        basic = build_basic_monoid(graph)
        self.assertEqual(basic.presentation.describe_relation(0), "m[b,1] + 2m[e] = m[a,1]")

    def test_invalid_graphs(self):
        disconnected = DecoratedDualGraph(1, (Vertex("a"), Vertex("b")))
        with self.assertRaises(InvalidGraph):
            build_basic_monoid(disconnected)
        out_of_range = DecoratedDualGraph(1, (Vertex("a", frozenset({2})),))
        with self.assertRaises(InvalidGraph):
            build_basic_monoid(out_of_range)
        unknown = DecoratedDualGraph(1, (Vertex("a"),), (Edge("e", "a", "b", (1,)),))
        with self.assertRaises(InvalidGraph):
            build_basic_monoid(unknown)
        with self.assertRaises(InvalidGraph):
            DecoratedDualGraph(1, ()).validate()

    def test_strict_contact(self):
        """Contact outside I_v | I_v' is rejected only under strict contact."""
        graph = DecoratedDualGraph(1, (Vertex("a"), Vertex("b")), (Edge("e", "a", "b", (3,)),))
        self.assertEqual(graph.strict_contact_violations(), [("e", 1)])
        build_basic_monoid(graph)
        with self.assertRaises(InvalidGraph):
            build_basic_monoid(graph, strict=True)


class TestTropicalCondition(unittest.TestCase):
    """Test the tropical feasibility check."""

    def test_two_edge_witness(self):
        result = tropical_feasible(build_basic_monoid(two_edge_graph(4, 6)))
        self.assertTrue(result.feasible)
        self.assertEqual(result.witness, (0, 12, 3, 2))
        self.assertEqual(result.vertex_positions, {"v1": (0,), "v2": (12,)})
        self.assertEqual(result.edge_lengths, {"e1": 3, "e2": 2})

    def test_loop_infeasible(self):
        """m_v = m_v + m_e forces m_e = 0."""
        basic = build_basic_monoid(loop_graph())
        for method in ("fourier_motzkin", "simplex"):
            result = tropical_feasible(basic, method)
            self.assertFalse(result.feasible)
            self.assertTrue(verify_certificate(tropical_system(basic), result.certificate))

    def test_edgeless_graph(self):
        basic = build_basic_monoid(one_vertex_graph(2))
        result = tropical_feasible(basic)
        self.assertTrue(result.feasible)
        self.assertTrue(all(w > 0 for w in result.witness))
        self.assertEqual(saturation_count(basic), 1)
        self.assertEqual(varrho_saturation_count(basic.graph), 1)

    def test_sharpness_equivalence(self):
        """Tropical feasibility holds exactly when the monoid is sharp with nonzero reduced generators."""
        rng = random.Random(41)
        corpus = [two_edge_graph(4, 6), loop_graph(), one_vertex_graph()]
        corpus += [random_graph(rng) for _ in range(120)]
        outcomes = set()
        for graph in corpus:
            basic = build_basic_monoid(graph)
            presentation = basic.presentation
            nonzero = all(any(presentation.generator_images[i]) for i in basic.reduced_gens)
            feasible = tropical_feasible(basic).feasible
            self.assertEqual(feasible, is_sharp(presentation).sharp and nonzero)
            outcomes.add(feasible)
        self.assertEqual(outcomes, {True, False})


class TestSaturationCount(unittest.TestCase):
    """Test both saturation counts."""

    def test_saturation_count_law(self):
        """The two-edge graph has gcd(mu1, mu2) saturations, one per character."""
        for mu1 in range(1, 11):
            for mu2 in range(1, 11):
                basic = build_basic_monoid(two_edge_graph(mu1, mu2))
                self.assertEqual(saturation_count(basic), gcd(mu1, mu2))
                data = enumerate_saturation_data(basic)
                self.assertEqual(len(data), gcd(mu1, mu2))
                self.assertEqual(len({datum.phases for datum in data}), gcd(mu1, mu2))

    def test_varrho_two_edge(self):
        """Columns (mu1, 0), (0, mu2) for the edges and (-1, -1) for m[v2,1]."""
        varrho = varrho_matrix(two_edge_graph(4, 6))
        self.assertEqual(columns(varrho.matrix), [(4, 0), (0, 6), (-1, -1)])
        self.assertEqual(varrho.row_labels, (("e1", 1), ("e2", 1)))
        self.assertEqual(varrho_saturation_count(two_edge_graph(4, 6)), 2)
        self.assertEqual(varrho_saturation_count(two_edge_graph(6, 9)), 3)

    def test_varrho_orientation(self):
        """Reversing an edge flips its column but not the count."""
        graph = two_edge_graph(4, 6)
        reversed_matrix = varrho_matrix(graph, {"e1": True}).matrix
        self.assertEqual(columns(reversed_matrix)[0], (-4, 0))
        self.assertEqual(varrho_saturation_count(graph, {"e1": True}), 2)

    def test_varrho_cross_check(self):
        """Both counts agree on random graphs with loops and multi-edges."""
        rng = random.Random(1234)
        for _ in range(200):
            graph = random_graph(rng)
            basic = build_basic_monoid(graph)
            self.assertEqual(varrho_saturation_count(graph), saturation_count(basic))

    def test_widening_warns(self):
        graph = DecoratedDualGraph(1, (Vertex("a"), Vertex("b")), (Edge("e", "a", "b", (3,)),))
        with self.assertLogs("logmonoid.logcurve", level="WARNING"):
            varrho_matrix(graph)
        self.assertEqual(varrho_saturation_count(graph), saturation_count(build_basic_monoid(graph)))


class TestFsBasicMonoid(unittest.TestCase):
    """Test the sharpened saturation of basic monoids."""

    def test_two_two(self):
        """(2, 2) sharpens to N with torsion Z/2."""
        result = fs_basic_monoid(build_basic_monoid(two_edge_graph(2, 2)))
        self.assertEqual(len(result.hilbert_basis), 1)
        self.assertEqual(result.group.free_rank, 1)
        self.assertEqual(str(result.torsion), "Z/2")

    def test_four_six(self):
        result = fs_basic_monoid(build_basic_monoid(two_edge_graph(4, 6)))
        self.assertEqual(len(result.hilbert_basis), 1)
        self.assertEqual(result.torsion.torsion_order, 2)

    def test_infeasible(self):
        with self.assertRaises(NotFeasible):
            fs_basic_monoid(build_basic_monoid(loop_graph()))


class TestGhostSections(unittest.TestCase):
    """Test edge slopes of ghost sections into N."""

    def setUp(self):
        self.graph = two_edge_graph(4, 6)
        self.target = MonoidPresentation(1, labels=("t",))
        self.rho = {"e1": (3,), "e2": (2,)}

    def test_unique_slopes(self):
        result = ghost_section_check(self.graph, self.target, self.rho, {"v1": (0,), "v2": (6,)}, {"x1": 10})
        self.assertEqual(result.failed, ())
        self.assertEqual(result.ambiguous, ())
        self.assertEqual(result.slopes[("e1", False)], 2)
        self.assertEqual(result.slopes[("e1", True)], -2)
        self.assertEqual(result.slopes[("e2", False)], 3)

    def test_no_slope(self):
        result = ghost_section_check(self.graph, self.target, self.rho, {"v1": (0,), "v2": (5,)})
        self.assertIsNone(result.slopes)
        self.assertEqual(result.failed, ("e1", "e2"))

    def test_zero_rho(self):
        with self.assertRaises(ZeroRho):
            ghost_section_check(self.graph, self.target, {"e1": (0,), "e2": (2,)}, {"v1": (0,), "v2": (6,)})

    def test_negative_marking(self):
        with self.assertRaises(InvalidGraph):
            ghost_section_check(self.graph, self.target, self.rho, {"v1": (0,), "v2": (6,)}, {"x1": -1})


class TestTropicalization(unittest.TestCase):
    """Test tropicalization of generator assignments."""

    def setUp(self):
        self.basic = build_basic_monoid(two_edge_graph(4, 6))
        self.target = MonoidPresentation(1, labels=("t",))

    def test_valid_assignment(self):
        result = tropicalization_check(self.basic, self.target, [(0,), (12,), (3,), (2,)])
        self.assertTrue(result)
        self.assertEqual(result.violated_relations, ())

    def test_zero_reduced_generators(self):
        result = tropicalization_check(self.basic, self.target, [(0,), (0,), (0,), (0,)])
        self.assertFalse(result)
        self.assertEqual(result.zero_generators, (1, 2, 3))

    def test_violated_relation(self):
        result = tropicalization_check(self.basic, self.target, [(0,), (12,), (3,), (3,)])
        self.assertFalse(result)
        self.assertEqual(result.violated_relations, (2,))


if __name__ == "__main__":
    unittest.main()
