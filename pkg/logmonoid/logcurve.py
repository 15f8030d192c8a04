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

"""Decorated dual graphs and the basic monoid of a prestable map.

The graph records the branches D_1..D_r of the divisor, a degeneracy
set I_v per vertex, contact orders per marking and one stored
orientation per edge with its contact vector. The basic monoid has
generators m[v,j] and m[e] with relations

    m[v,j] = 0                        for j not in I_v,
    m[v',j] = m[v,j] + mu[e,j] m[e]   for every edge e: v -> v'.
"""

import logging
from dataclasses import dataclass, field

import networkx as nx

from logmonoid.errors import (InvalidGraph, InvariantViolation, NotFeasible, NotSharp, ZeroRho)
from logmonoid.intlin import (LinearSystem, column_matrix, cokernel_structure, identity, int_matrix,
                              kernel_basis, lattice_membership, lp_solve, rows_of)
from logmonoid.monoid import (MonoidElement, MonoidPresentation, double_dual, eliminate_generators,
                              element_eq, is_sharp, saturate)
from logmonoid.utils import add, clear_denominators, primitive, scale, sub, unit_vector

LOG = logging.getLogger(__name__)


def id_key(value):
    """Sort key putting numeric ids in numeric order before the others."""
    text = str(value)
    return (0, int(text), "") if text.isdigit() else (1, 0, text)


@dataclass(frozen=True)
class Marking:
    id: str
    mu: tuple


@dataclass(frozen=True)
class Vertex:
    id: str
    degeneracy: frozenset = frozenset()
    markings: tuple = ()


@dataclass(frozen=True)
class Edge:
    """A node, stored with the orientation source -> target."""

    id: str
    source: str
    target: str
    mu: tuple

    @property
    def is_loop(self):
        return self.source == self.target

    def oriented_mu(self, reverse=False):
        return tuple(-a for a in self.mu) if reverse else tuple(self.mu)

    def endpoints(self, reverse=False):
        return (self.target, self.source) if reverse else (self.source, self.target)


@dataclass(frozen=True)
class DecoratedDualGraph:
    r: int
    vertices: tuple
    edges: tuple = ()
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def sorted_vertices(self):
        return sorted(self.vertices, key=lambda v: id_key(v.id))

    @property
    def sorted_edges(self):
        return sorted(self.edges, key=lambda e: id_key(e.id))

    def vertex(self, vertex_id):
        for vertex in self.vertices:
            if vertex.id == vertex_id:
                return vertex
        raise InvalidGraph("unknown vertex %r" % vertex_id)

    @property
    def markings(self):
        return [m for v in self.sorted_vertices for m in v.markings]

    def to_networkx(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(v.id for v in self.vertices)
        graph.add_edges_from((e.source, e.target, e.id) for e in self.edges)
        return graph

    def edge_branches(self, edge):
        """I_e = I_v | I_v' | supp(mu_e)."""
        source, target = self.vertex(edge.source), self.vertex(edge.target)
        support = {j + 1 for j, a in enumerate(edge.mu) if a != 0}
        return frozenset(source.degeneracy | target.degeneracy | support)

    def strict_contact_violations(self):
        """(edge, branch) pairs with mu != 0 outside I_v | I_v'."""
        violations = []
        for edge in self.sorted_edges:
            allowed = self.vertex(edge.source).degeneracy | self.vertex(edge.target).degeneracy
            violations.extend((edge.id, j + 1) for j, a in enumerate(edge.mu) if a != 0 and j + 1 not in allowed)
        return violations

    def validate(self, strict=False):
        if self.r < 0:
            raise InvalidGraph("negative number of divisor branches")
        if not self.vertices:
            raise InvalidGraph("a dual graph needs at least one vertex")
        for kind, ids in (("vertex", [v.id for v in self.vertices]),
                          ("edge", [e.id for e in self.edges]),
                          ("marking", [m.id for v in self.vertices for m in v.markings])):
            if len(set(ids)) != len(ids):
                raise InvalidGraph("%s ids are not unique" % kind)
        vertex_ids = {v.id for v in self.vertices}
        for vertex in self.vertices:
            bad = [j for j in vertex.degeneracy if not 1 <= j <= self.r]
            if bad:
                raise InvalidGraph("vertex %s has branch indices %s outside 1..%d" % (vertex.id, sorted(bad), self.r))
            for marking in vertex.markings:
                if len(marking.mu) != self.r:
                    raise InvalidGraph("marking %s has %d contact orders, expected %d"
                                       % (marking.id, len(marking.mu), self.r))
                if any(a < 0 for a in marking.mu):
                    raise InvalidGraph("marking %s has a negative contact order" % marking.id)
        for edge in self.edges:
            if edge.source not in vertex_ids or edge.target not in vertex_ids:
                raise InvalidGraph("edge %s has an unknown endpoint" % edge.id)
            if len(edge.mu) != self.r:
                raise InvalidGraph("edge %s has %d contact orders, expected %d" % (edge.id, len(edge.mu), self.r))
        if not nx.is_connected(self.to_networkx()):
            raise InvalidGraph("the dual graph is not connected")
        if strict:
            violations = self.strict_contact_violations()
            if violations:
                raise InvalidGraph("contact orders vanish outside I_v | I_v' under strict contact; violated at %s"
                                   % violations)
        return self


@dataclass(frozen=True, eq=False)
class BasicMonoid:
    graph: DecoratedDualGraph
    presentation: MonoidPresentation
    gen_labels: tuple
    reduced_gens: tuple
    relation_labels: tuple

    def vertex_index(self, vertex_id, branch):
        return self.gen_labels.index(("vertex", vertex_id, branch))

    def edge_index(self, edge_id):
        return self.gen_labels.index(("edge", edge_id))


def build_basic_monoid(graph, strict=False):
    graph.validate(strict)
    r = graph.r
    gen_labels = [("vertex", v.id, j) for v in graph.sorted_vertices for j in range(1, r + 1)]
    gen_labels += [("edge", e.id) for e in graph.sorted_edges]
    index = {label: i for i, label in enumerate(gen_labels)}
    n = len(gen_labels)

    relations = []
    relation_labels = []
    for vertex in graph.sorted_vertices:
        for j in range(1, r + 1):
            if j not in vertex.degeneracy:
                relations.append((unit_vector(n, index[("vertex", vertex.id, j)]), (0,) * n))
                relation_labels.append("m[%s,%d] = 0" % (vertex.id, j))
    for edge in graph.sorted_edges:
        e = unit_vector(n, index[("edge", edge.id)])
        for j in range(1, r + 1):
            mu = edge.mu[j - 1]
            lhs = add(unit_vector(n, index[("vertex", edge.target, j)]), scale(max(-mu, 0), e))
            rhs = add(unit_vector(n, index[("vertex", edge.source, j)]), scale(max(mu, 0), e))
            relations.append((lhs, rhs))
            relation_labels.append("edge %s branch %d" % (edge.id, j))

    labels = tuple("m[%s,%d]" % (g[1], g[2]) if g[0] == "vertex" else "m[%s]" % g[1] for g in gen_labels)
    reduced = tuple(i for i, g in enumerate(gen_labels)
                    if g[0] == "edge" or g[2] in graph.vertex(g[1]).degeneracy)
    presentation = MonoidPresentation(n, tuple(relations), labels)
    LOG.debug("basic monoid with %d generators and %d relations", n, len(relations))
    return BasicMonoid(graph, presentation, tuple(gen_labels), reduced, tuple(relation_labels))


@dataclass(frozen=True, eq=False)
class TropicalResult:
    """Tropical feasibility verdict.

    A feasible result carries a primitive integer witness on all
    generators, split into vertex positions in Z^r and edge lengths.
    An infeasible one carries the Farkas certificate of the LP.
    """

    feasible: bool
    witness: tuple = None
    vertex_positions: dict = None
    edge_lengths: dict = None
    certificate: object = None


def tropical_system(basic):
    presentation = basic.presentation
    n = presentation.n_gens
    equalities = tuple((sub(lhs, rhs), 0) for lhs, rhs in presentation.relations)
    equalities += tuple((unit_vector(n, i), 0) for i in range(n) if i not in basic.reduced_gens)
    strict = tuple((unit_vector(n, i), 0) for i in basic.reduced_gens)
    return LinearSystem(n, equalities, (), strict)


def tropical_feasible(basic, method="auto"):
    """Find an N-valued point positive exactly on the reduced generators."""
    result = lp_solve(tropical_system(basic), method)
    if not result.feasible:
        LOG.debug("tropical condition fails")
        return TropicalResult(False, certificate=result.certificate)
    witness = primitive(clear_denominators(result.witness)[0])
    positions = {}
    lengths = {}
    for value, label in zip(witness, basic.gen_labels):
        if label[0] == "vertex":
            positions.setdefault(label[1], [0] * basic.graph.r)[label[2] - 1] = value
        else:
            lengths[label[1]] = value
    return TropicalResult(True, witness, {v: tuple(p) for v, p in positions.items()}, lengths)


def saturation_count(basic):
    """Number of saturation data, |Q^gp_tor|."""
    return basic.presentation.group.torsion_order


@dataclass(frozen=True, eq=False)
class VarrhoMatrix:
    matrix: object
    row_labels: tuple
    col_labels: tuple


def varrho_matrix(graph, orientation=None):
    """The map Z^E + sum_v Z^{I_v} -> sum_e Z^{I_e}.

    *orientation* maps edge ids to True where the stored orientation is
    to be reversed.
    """
    graph.validate()
    orientation = orientation or {}
    rows = []
    for edge in graph.sorted_edges:
        branches = graph.edge_branches(edge)
        allowed = graph.vertex(edge.source).degeneracy | graph.vertex(edge.target).degeneracy
        if branches != allowed:
            LOG.warning("edge %s has contact orders outside I_v | I_v'; widening its branch set to %s",
                        edge.id, sorted(branches))
        rows.extend((edge.id, j) for j in sorted(branches))
    cols = [("edge", e.id) for e in graph.sorted_edges]
    cols += [("vertex", v.id, j) for v in graph.sorted_vertices for j in sorted(v.degeneracy)]

    edges = {e.id: e for e in graph.edges}
    matrix = int_matrix([], len(rows), len(cols))
    for i, (edge_id, j) in enumerate(rows):
        edge = edges[edge_id]
        reverse = bool(orientation.get(edge_id, False))
        mu = edge.oriented_mu(reverse)
        source, target = edge.endpoints(reverse)
        for k, col in enumerate(cols):
            if col[0] == "edge":
                if col[1] == edge_id:
                    matrix[i, k] = mu[j - 1]
            elif col[2] == j and not edge.is_loop:
                if col[1] == source:
                    matrix[i, k] = 1
                elif col[1] == target:
                    matrix[i, k] = -1
    return VarrhoMatrix(matrix, tuple(rows), tuple(cols))


def varrho_saturation_count(graph, orientation=None):
    """Order of (ker varrho)^perp / im(varrho^dual)."""
    matrix = varrho_matrix(graph, orientation).matrix
    n_rows, n_cols = matrix.shape
    if n_cols == 0:
        return 1
    kernel = kernel_basis(matrix)
    if kernel:
        perp = kernel_basis(int_matrix(kernel))
    else:
        perp = rows_of(identity(n_cols))
    if not perp:
        return 1
    basis = column_matrix(perp, n_cols)
    coordinates = []
    for row in rows_of(matrix):
        z = lattice_membership(row, basis)
        if z is None:
            raise InvariantViolation("a row of varrho lies outside (ker varrho)^perp")
        coordinates.append(z)
    group = cokernel_structure(column_matrix(coordinates, len(perp)))
    if group.free_rank:
        raise InvariantViolation("im(varrho^dual) does not have full rank in (ker varrho)^perp")
    return group.torsion_order


def fs_basic_monoid(basic):
    """Sharpening of the saturation of the basic monoid."""
    if not tropical_feasible(basic).feasible:
        raise NotFeasible("the tropical condition fails, so the basic monoid is not fs-saturable here")
    result = saturate(basic.presentation)
    dual_dual = double_dual(basic.presentation)
    if sorted(dual_dual.hilbert_basis) != sorted(result.hilbert_basis):
        raise InvariantViolation("double dual and saturation have different Hilbert bases")
    return result


@dataclass(frozen=True)
class GhostSectionResult:
    """Edge slopes solving m_v' = m_v + m_e rho_e, keyed by (edge id, reversed)."""

    slopes: dict
    solutions: dict
    ambiguous: tuple = ()
    failed: tuple = ()
    markings: dict = None


def _as_element(monoid, value):
    return value if isinstance(value, MonoidElement) else monoid.element(value)


def ghost_section_check(graph, target, rho, vertex_values, marking_values=None, window=16):
    """Solve for the edge slopes of a candidate ghost section.

    Slopes are unique when rho_e has infinite order. Otherwise every
    solution in [-window, window] is reported and the edge is flagged.
    """
    graph.validate()
    if not is_sharp(target).sharp:
        raise NotSharp("ghost sections need a sharp target monoid")
    marking_values = dict(marking_values or {})
    for marking, value in marking_values.items():
        if not isinstance(value, int) or value < 0:
            raise InvalidGraph("marking %s must take a natural value, got %r" % (marking, value))
    group = target.group
    solutions = {}
    ambiguous = []
    failed = []
    for edge in graph.sorted_edges:
        step = _as_element(target, rho[edge.id]).coordinates
        if not any(step):
            raise ZeroRho("rho vanishes on edge %s" % edge.id)
        start = _as_element(target, vertex_values[edge.source]).coordinates
        end = _as_element(target, vertex_values[edge.target]).coordinates
        found = group.solve_multiple(group.add(end, group.negate(start)), step, window)
        solutions[edge.id] = tuple(found)
        if not found:
            failed.append(edge.id)
        elif len(found) > 1:
            ambiguous.append(edge.id)
    slopes = None
    if not failed:
        slopes = {}
        for edge_id, found in solutions.items():
            slopes[(edge_id, False)] = found[0]
            slopes[(edge_id, True)] = -found[0]
    return GhostSectionResult(slopes, solutions, tuple(ambiguous), tuple(failed), marking_values)


@dataclass(frozen=True)
class TropicalizationResult:
    ok: bool
    violated_relations: tuple = ()
    zero_generators: tuple = ()

    def __bool__(self):
        return self.ok


def _is_nonzero(target, element, sharpness):
    if sharpness.sharp:
        return sum(b * x for b, x in zip(sharpness.beta, element.representative)) > 0
    return not element_eq(element, target.zero())


def tropicalization_check(basic, target, assignment):
    """Check a generator assignment into *target* against relations and the reduced generating set."""
    presentation = basic.presentation
    values = [_as_element(target, value) for value in assignment]
    if len(values) != presentation.n_gens:
        raise InvalidGraph("assignment has %d values for %d generators" % (len(values), presentation.n_gens))

    def image(word):
        total = target.zero()
        for coefficient, value in zip(word, values):
            total = total + coefficient * value
        return total

    violated = tuple(k for k, (lhs, rhs) in enumerate(presentation.relations)
                     if not element_eq(image(lhs), image(rhs)))
    sharpness = is_sharp(target)
    zeros = tuple(i for i in basic.reduced_gens if not _is_nonzero(target, values[i], sharpness))
    return TropicalizationResult(not violated and not zeros, violated, zeros)


def reduced_presentation(basic):
    """The basic monoid with forced-zero and defined generators eliminated."""
    return eliminate_generators(basic.presentation)
