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

"""Graphs and presentations shared by the tests.
"""

from logmonoid.logcurve import DecoratedDualGraph, Edge, Marking, Vertex
from logmonoid.monoid import MonoidPresentation, is_sharp


def two_edge_graph(mu1, mu2):
    """v1 (I empty) and v2 (I = {1}) joined by e1, e2 oriented v1 -> v2."""
    vertices = (Vertex("v1", frozenset()), Vertex("v2", frozenset({1}), (Marking("x1", (mu1 + mu2,)),)))
    edges = (Edge("e1", "v1", "v2", (mu1,)), Edge("e2", "v1", "v2", (mu2,)))
    return DecoratedDualGraph(1, vertices, edges, {"genus": 1})


def loop_graph():
    """One vertex with I = {1} and a loop of contact order 1."""
    return DecoratedDualGraph(1, (Vertex("v", frozenset({1})),), (Edge("e", "v", "v", (1,)),))


def one_vertex_graph(r=1):
    return DecoratedDualGraph(r, (Vertex("v", frozenset(range(1, r + 1))),))


def random_graph(rng, max_vertices=5, max_edges=8, max_r=3, max_mu=5):
    """Connected graph with loops and multi-edges allowed."""
    r = rng.randint(1, max_r)
    n_vertices = rng.randint(1, max_vertices)
    ids = ["v%d" % (k + 1) for k in range(n_vertices)]
    vertices = tuple(Vertex(v, frozenset(j for j in range(1, r + 1) if rng.random() < 0.5)) for v in ids)
    pairs = [(ids[rng.randrange(k)], ids[k]) for k in range(1, n_vertices)]
    while len(pairs) < max_edges and rng.random() < 0.6:
        pairs.append((rng.choice(ids), rng.choice(ids)))
    edges = []
    for k, (source, target) in enumerate(pairs):
        if rng.random() < 0.5:
            source, target = target, source
        mu = tuple(rng.randint(-max_mu, max_mu) for _ in range(r))
        edges.append(Edge("e%d" % (k + 1), source, target, mu))
    return DecoratedDualGraph(r, vertices, tuple(edges))


def random_presentation(rng, max_gens=4, max_relations=3, max_entry=3):
    n = rng.randint(1, max_gens)
    relations = []
    for _ in range(rng.randint(0, max_relations)):
        lhs = tuple(rng.randint(0, max_entry) for _ in range(n))
        rhs = tuple(rng.randint(0, max_entry) for _ in range(n))
        if lhs != rhs:
            relations.append((lhs, rhs))
    return MonoidPresentation(n, tuple(relations))


def random_sharp_presentations(rng, count, **kwargs):
    """*count* random presentations verified sharp."""
    found = []
    for _ in range(50 * count):
        presentation = random_presentation(rng, **kwargs)
        if is_sharp(presentation).sharp:
            found.append(presentation)
            if len(found) == count:
                break
    return found
