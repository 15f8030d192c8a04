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

"""Systems of line bundles over a point.

Over a point every line bundle is trivial, so an slb presentation is
pure scalar data: a section coordinate s_i per generator (zero or a
unit) and a unit phi_j per relation. Units are exact: a positive real
radical base^(1/root) times the root of unity exp(2 pi i phase).
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from sympy import divisors, integer_nthroot

from logmonoid.errors import DimensionMismatch, InvariantViolation, NoPreimageFound, NotFeasible
from logmonoid.intlin import (int_matrix, kernel_basis, lattice_membership, nonnegative_dependency, positive_functional,
                              smith_normal_form)
from logmonoid.logcurve import tropical_feasible
from logmonoid.monoid import DEFAULT_BOUND, MonoidElement, preimages
from logmonoid.utils import clear_denominators, format_fraction, lcm, parse_fraction, unit_vector

LOG = logging.getLogger(__name__)


def _normalize_radical(base, root):
    """Smallest root index with base^(1/root) unchanged."""
    for k in sorted(divisors(root), reverse=True):
        if k == 1:
            break
        numerator, exact_num = integer_nthroot(base.numerator, k)
        denominator, exact_den = integer_nthroot(base.denominator, k)
        if exact_num and exact_den:
            return Fraction(numerator, denominator), root // k
    return base, root


@dataclass(frozen=True)
class ExactUnit:
    """The complex unit base^(1/root) * exp(2 pi i phase).

    The radical is kept in normal form, so equal units compare equal.
    """

    base: Fraction = Fraction(1)
    root: int = 1
    phase: Fraction = Fraction(0)

    def __post_init__(self):
        base = Fraction(self.base)
        root = int(self.root)
        if base <= 0:
            raise ValueError("the magnitude of a unit must be positive, got %s" % base)
        if root < 1:
            raise ValueError("the root index must be at least 1, got %d" % root)
        base, root = _normalize_radical(base, root)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "phase", Fraction(self.phase) % 1)

    @classmethod
    def from_rational(cls, value):
        value = Fraction(value)
        if value == 0:
            raise ValueError("zero is not a unit")
        return cls(abs(value), 1, Fraction(1, 2) if value < 0 else Fraction(0))

    @classmethod
    def root_of_unity(cls, k, n):
        return cls(Fraction(1), 1, Fraction(k, n))

    @classmethod
    def from_literal(cls, literal):
        """Parse {"mag": "p/q", "root": n, "phase": "a/b"}."""
        mag = parse_fraction(literal.get("mag", 1))
        root = literal.get("root", 1)
        if isinstance(root, bool) or not isinstance(root, int):
            raise ValueError("root must be an integer, got %r" % (root,))
        return cls(mag, root, parse_fraction(literal.get("phase", 0)))

    def to_literal(self):
        return {"mag": format_fraction(self.base), "root": self.root, "phase": format_fraction(self.phase)}

    def is_one(self):
        return self.base == 1 and self.root == 1 and self.phase == 0

    def __mul__(self, other):
        if not isinstance(other, ExactUnit):
            return NotImplemented
        root = lcm(self.root, other.root)
        base = self.base ** (root // self.root) * other.base ** (root // other.root)
        return ExactUnit(base, root, self.phase + other.phase)

    def inverse(self):
        return ExactUnit(1 / self.base, self.root, -self.phase)

    def __truediv__(self, other):
        if not isinstance(other, ExactUnit):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return ExactUnit(self.base ** k, self.root, self.phase * k)

    def nth_root(self, n):
        """Principal n-th root."""
        if n < 1:
            raise ValueError("root index must be positive")
        return ExactUnit(self.base, self.root * n, self.phase / n)

    def roots(self, n):
        principal = self.nth_root(n)
        return [principal * ExactUnit.root_of_unity(k, n) for k in range(n)]

    def __str__(self):
        magnitude = format_fraction(self.base)
        if self.root != 1:
            magnitude = "%s^(1/%d)" % (magnitude, self.root)
        if self.phase == 0:
            return magnitude
        if self.phase == Fraction(1, 2):
            return "-" + magnitude
        return "%s*exp(2pi i %s)" % (magnitude, format_fraction(self.phase))


ONE_UNIT = ExactUnit()


def unit_nth_roots(unit, n):
    """All n distinct n-th roots of a unit."""
    return unit.roots(n)


def unit_product(units, exponents):
    """prod(units[k] ** exponents[k])."""
    result = ONE_UNIT
    for unit, exponent in zip(units, exponents):
        if exponent:
            result = result * unit ** int(exponent)
    return result


@dataclass(frozen=True)
class ExactScalar:
    """Zero, or an ExactUnit."""

    unit: Optional[ExactUnit] = None

    @property
    def is_zero(self):
        return self.unit is None

    def __mul__(self, other):
        if isinstance(other, ExactUnit):
            other = ExactScalar(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        return ExactScalar(self.unit * other.unit)

    def __pow__(self, k):
        if k == 0:
            return ONE
        if self.is_zero:
            if k < 0:
                raise ZeroDivisionError("zero has no inverse")
            return ZERO
        return ExactScalar(self.unit ** k)

    def __truediv__(self, other):
        if isinstance(other, ExactUnit):
            other = ExactScalar(other)
        if other.is_zero:
            raise ZeroDivisionError("division by a zero scalar")
        return self * ExactScalar(other.unit.inverse())

    def to_literal(self):
        return None if self.is_zero else self.unit.to_literal()

    def __str__(self):
        return "0" if self.is_zero else str(self.unit)


ZERO = ExactScalar(None)
ONE = ExactScalar(ONE_UNIT)


def as_scalar(value):
    if isinstance(value, ExactScalar):
        return value
    if value is None:
        return ZERO
    if isinstance(value, ExactUnit):
        return ExactScalar(value)
    return ExactScalar(ExactUnit.from_rational(value)) if value != 0 else ZERO


@dataclass(frozen=True, eq=False)
class SlbPointPresentation:
    """An slb presentation over a point, relative to chosen bases."""

    presentation: object
    sections: tuple
    rel_units: tuple

    def __post_init__(self):
        sections = tuple(as_scalar(s) for s in self.sections)
        units = tuple(u if isinstance(u, ExactUnit) else ExactUnit.from_rational(u) for u in self.rel_units)
        if len(sections) != self.presentation.n_gens:
            raise DimensionMismatch("%d sections for %d generators" % (len(sections), self.presentation.n_gens))
        if len(units) != len(self.presentation.relations):
            raise DimensionMismatch("%d relation units for %d relations"
                                    % (len(units), len(self.presentation.relations)))
        object.__setattr__(self, "sections", sections)
        object.__setattr__(self, "rel_units", units)

    @property
    def zero_sections(self):
        return tuple(i for i, s in enumerate(self.sections) if s.is_zero)


@dataclass(frozen=True)
class KernelCertificate:
    """A relation syzygy z whose unit value prod(phi_j ** z_j) is not 1."""

    z: tuple
    value: ExactUnit


@dataclass(frozen=True)
class SupportCertificate:
    """Natural vectors with equal images, one hitting a zero section and one not.

    zero_side - unit_side equals the relation matrix applied to *combination*.
    """

    zero_side: tuple
    unit_side: tuple
    combination: tuple


@dataclass(frozen=True)
class SectionCertificate:
    """Relation combination z, vanishing on zero-section rows, with a section value other than 1."""

    z: tuple
    value: ExactUnit


@dataclass(frozen=True)
class ConsistencyResult:
    consistent: bool
    witness: tuple = None
    certificate: object = None
    reason: str = None

    def __bool__(self):
        return self.consistent


def _check_kernel(slb):
    matrix = slb.presentation.relation_matrix
    for z in kernel_basis(matrix):
        value = unit_product(slb.rel_units, z)
        if not value.is_one():
            return KernelCertificate(z, value)
    return None


def _check_support(slb):
    presentation = slb.presentation
    n = presentation.n_gens
    zero = slb.zero_sections
    if not zero:
        return None
    nonzero = [i for i in range(n) if i not in zero]
    matrix = presentation.relation_matrix
    constraint_rows = [tuple(matrix[i, j] for i in range(n)) for j in range(matrix.shape[1])]
    constraint_rows += [unit_vector(n, i) for i in nonzero]
    orthogonal = kernel_basis(int_matrix(constraint_rows, len(constraint_rows), n))
    vectors = [tuple(b[i] for b in orthogonal) for i in zero]
    if positive_functional(vectors, len(orthogonal)) is not None:
        return None
    dependency = nonnegative_dependency(vectors, len(orthogonal))
    if dependency is None:
        raise InvariantViolation("support test found neither a functional nor a dependency")
    coefficients = clear_denominators(dependency)[0]

    extended = int_matrix([[matrix[i, j] for j in range(matrix.shape[1])] + [int(i == k) for k in nonzero]
                           for i in range(n)], n, matrix.shape[1] + len(nonzero))
    snf = smith_normal_form(extended)
    exponent = 1
    for d in snf.diagonal:
        if d > 1:
            exponent = d
    target = [0] * n
    for i, c in zip(zero, coefficients):
        target[i] = exponent * c
    solution = lattice_membership(target, extended, snf)
    if solution is None:
        raise InvariantViolation("support violation does not lift to the relation lattice")
    combination = solution[:matrix.shape[1]]
    correction = dict(zip(nonzero, solution[matrix.shape[1]:]))
    zero_side = tuple(target[i] if i in zero else max(-correction[i], 0) for i in range(n))
    unit_side = tuple(0 if i in zero else max(correction[i], 0) for i in range(n))
    return SupportCertificate(zero_side, unit_side, tuple(combination))


def _check_sections(slb):
    presentation = slb.presentation
    n = presentation.n_gens
    matrix = presentation.relation_matrix
    n_rel = matrix.shape[1]
    zero = slb.zero_sections
    if zero:
        restricted = int_matrix([[matrix[i, j] for j in range(n_rel)] for i in zero], len(zero), n_rel)
        basis = kernel_basis(restricted)
    else:
        basis = [unit_vector(n_rel, j) for j in range(n_rel)]
    for z in basis:
        moved = tuple(sum(matrix[i, j] * z[j] for j in range(n_rel)) for i in range(n))
        value = unit_product(slb.rel_units, z)
        for i in range(n):
            if moved[i]:
                value = value * slb.sections[i].unit ** moved[i]
        if not value.is_one():
            return SectionCertificate(tuple(z), value)
    return None


def _trivialization(slb):
    """Units chi with prod_i chi_i ** M_ij == phi_j, assuming the kernel condition."""
    presentation = slb.presentation
    snf = presentation.snf
    n = presentation.n_gens
    n_rel = len(presentation.relations)
    diagonal = snf.diagonal
    reduced = []
    for k in range(n):
        if k < snf.rank:
            psi = unit_product(slb.rel_units, [snf.V[j, k] for j in range(n_rel)])
            reduced.append(psi.nth_root(diagonal[k]))
        else:
            reduced.append(ONE_UNIT)
    chi = tuple(unit_product(reduced, [snf.U[k, i] for k in range(n)]) for i in range(n))
    matrix = presentation.relation_matrix
    for j in range(n_rel):
        if unit_product(chi, [matrix[i, j] for i in range(n)]) != slb.rel_units[j]:
            raise InvariantViolation("trivialization does not reproduce relation unit %d" % j)
    return chi


def consistency_check(slb):
    """Decide whether an slb presentation over a point is consistent.

    Three conditions are checked in turn: relation units are trivial on
    relation syzygies, zero sections are constant on fibers, and section
    values agree on fibers. A consistent presentation comes with a
    trivialization chi.
    """
    certificate = _check_kernel(slb)
    if certificate is not None:
        LOG.debug("inconsistent: syzygy %s has value %s", certificate.z, certificate.value)
        return ConsistencyResult(False, certificate=certificate, reason="kernel")
    certificate = _check_support(slb)
    if certificate is not None:
        LOG.debug("inconsistent: zero sections are not constant on a fiber")
        return ConsistencyResult(False, certificate=certificate, reason="support")
    certificate = _check_sections(slb)
    if certificate is not None:
        LOG.debug("inconsistent: section values disagree along %s", certificate.z)
        return ConsistencyResult(False, certificate=certificate, reason="section")
    return ConsistencyResult(True, witness=_trivialization(slb))


def section_value(slb, chi, vector):
    value = ONE
    for i, k in enumerate(vector):
        if k:
            value = value * (slb.sections[i] * chi[i]) ** k
    return value


def realize_section(slb, chi, q, bound=DEFAULT_BOUND):
    """The section of the initial realization at q: prod((chi_i s_i) ** x_i) for x over q."""
    presentation = slb.presentation
    if isinstance(q, MonoidElement):
        first = q.representative
        coords = q.coordinates
        others = [x for x in preimages(presentation, coords, bound, limit=2) if x != first]
    else:
        found = preimages(presentation, q, bound, limit=2)
        if not found:
            raise NoPreimageFound("no preimage of %s within bound %d" % (tuple(q), bound), bound=bound)
        first, others = found[0], found[1:]
    value = section_value(slb, chi, first)
    for other in others[:1]:
        if section_value(slb, chi, other) != value:
            raise InvariantViolation("section values differ on preimages %s and %s" % (first, other))
    return value


def assemble_logmap_slb(basic, vertex_units=None, edge_units=None, vertex_sections=None):
    """The slb presentation of a prestable map with contact data.

    *vertex_units* maps (v, j) with j not in I_v to phi_{v,j}, *edge_units*
    maps (e, j) to phi_{e,j}, and *vertex_sections* maps (v, j) with j not
    in I_v to the section coordinate, by default phi_{v,j} ** -1. Missing
    units are 1. Edge sections and sections for j in I_v vanish.
    """
    graph = basic.graph
    vertex_units = dict(vertex_units or {})
    edge_units = dict(edge_units or {})
    vertex_sections = dict(vertex_sections or {})
    free_keys = [(v.id, j) for v in graph.sorted_vertices for j in range(1, graph.r + 1) if j not in v.degeneracy]
    edge_keys = [(e.id, j) for e in graph.sorted_edges for j in range(1, graph.r + 1)]
    for name, given, allowed in (("vertex unit", vertex_units, free_keys), ("edge unit", edge_units, edge_keys),
                                 ("vertex section", vertex_sections, free_keys)):
        unknown = set(given) - set(allowed)
        if unknown:
            raise DimensionMismatch("unexpected %s keys %s" % (name, sorted(unknown, key=str)))

    rel_units = [vertex_units.get(key, ONE_UNIT) for key in free_keys]
    rel_units += [edge_units.get(key, ONE_UNIT) for key in edge_keys]
    rel_units = [u if isinstance(u, ExactUnit) else ExactUnit.from_rational(u) for u in rel_units]
    units_by_key = dict(zip(free_keys, rel_units))
    sections = []
    for label in basic.gen_labels:
        if label[0] == "edge":
            sections.append(ZERO)
        elif label[2] in graph.vertex(label[1]).degeneracy:
            sections.append(ZERO)
        else:
            key = (label[1], label[2])
            sections.append(as_scalar(vertex_sections.get(key, units_by_key[key].inverse())))
    return SlbPointPresentation(basic.presentation, tuple(sections), tuple(rel_units))


@dataclass(frozen=True)
class SymplecticResult:
    ok: bool
    failures: tuple = ()
    tropical: object = None
    consistency: ConsistencyResult = None

    def __bool__(self):
        return self.ok


def symplectic_logmap_check(basic, slb):
    """Tropical condition plus consistency of the slb presentation."""
    tropical = tropical_feasible(basic)
    consistency = consistency_check(slb)
    failures = []
    if not tropical.feasible:
        failures.append("tropical")
    if not consistency.consistent:
        failures.append("consistency")
    return SymplecticResult(not failures, tuple(failures), tropical, consistency)


@dataclass(frozen=True)
class SaturationDatum:
    """A character of Q^gp_tor, one root of unity per invariant-factor generator.

    *roots* optionally holds, per torsion generator t_k of order d_k, the
    chosen d_k-th root of phi ** z_k where d_k x_k = M z_k.
    """

    character: tuple
    phases: tuple
    roots: tuple = None


def torsion_characters(group):
    """All characters of the torsion subgroup, as phase tuples c_k / d_k."""
    ranges = [range(d) for d in group.invariant_factors]
    return [tuple(Fraction(c, d) for c, d in zip(choice, group.invariant_factors))
            for choice in itertools.product(*ranges)]


def evaluate_character(group, free_values, torsion_phases, x):
    """Value at group coordinates x of the character with the given free values and torsion phases."""
    coords = group.normalize(x)
    value = unit_product(free_values, group.free_part(coords))
    phase = sum((p * c for p, c in zip(torsion_phases, group.torsion_part(coords))), Fraction(0))
    return value * ExactUnit.root_of_unity(phase.numerator, phase.denominator)


def enumerate_saturation_data(basic, slb=None):
    """One datum per character of Q^gp_tor."""
    if not tropical_feasible(basic).feasible:
        raise NotFeasible("saturation data exist only when the tropical condition holds")
    presentation = basic.presentation
    group = presentation.group
    roots_base = None
    if slb is not None:
        roots_base = []
        for k, d in enumerate(group.invariant_factors):
            coords = [0] * group.n_coordinates
            coords[group.free_rank + k] = 1
            lifted = group.lift(coords)
            z = lattice_membership(tuple(d * a for a in lifted), presentation.relation_matrix, presentation.snf)
            if z is None:
                raise InvariantViolation("torsion generator %d does not have order %d" % (k, d))
            roots_base.append(unit_product(slb.rel_units, z).nth_root(d))
    data = []
    for phases in torsion_characters(group):
        character = tuple(ExactUnit(1, 1, p) for p in phases)
        roots = None
        if roots_base is not None:
            roots = tuple(base * value for base, value in zip(roots_base, character))
        data.append(SaturationDatum(character, phases, roots))
    LOG.debug("%d saturation data", len(data))
    return data


def basis_change(slb, u):
    """Act by per-generator units u: s_i -> s_i / u_i and phi_j -> phi_j * prod_i u_i ** M_ij.

    A trivialization chi of the original becomes chi * u.
    """
    u = tuple(u)
    presentation = slb.presentation
    if len(u) != presentation.n_gens:
        raise DimensionMismatch("%d units for %d generators" % (len(u), presentation.n_gens))
    matrix = presentation.relation_matrix
    sections = tuple(s / unit for s, unit in zip(slb.sections, u))
    units = tuple(phi * unit_product(u, [matrix[i, j] for i in range(presentation.n_gens)])
                  for j, phi in enumerate(slb.rel_units))
    return SlbPointPresentation(presentation, sections, units)


def presentation_from_trivialization(presentation, chi, values):
    """Sections s_i = value_i / chi_i and units phi_j = prod_i chi_i ** M_ij."""
    values = [as_scalar(v) for v in values]
    if len(values) != presentation.n_gens or len(chi) != presentation.n_gens:
        raise DimensionMismatch("trivialization data do not match %d generators" % presentation.n_gens)
    matrix = presentation.relation_matrix
    sections = tuple(v / c for v, c in zip(values, chi))
    units = tuple(unit_product(chi, [matrix[i, j] for i in range(presentation.n_gens)])
                  for j in range(len(presentation.relations)))
    return SlbPointPresentation(presentation, sections, units)


