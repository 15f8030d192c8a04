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

"""Brute-force reference implementations for the test suite.

Everything here is deliberately naive and shares no algorithm with the
library: its own lattice echelon form, exhaustive enumeration in boxes
and plain Fourier-Motzkin elimination without equality substitution.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from logmonoid.errors import DimensionTooLarge, TooManyVariables

LOG = logging.getLogger(__name__)

FM_MAX_VARIABLES = 6
HILBERT_MAX_DIMENSION = 3


@dataclass(frozen=True)
class Bound:
    degree: int = 6
    box: int = 10
    multiplier: int = 12

    def __post_init__(self):
        for name in ("degree", "box", "multiplier"):
            if getattr(self, name) < 1:
                raise ValueError("oracle bound %s must be at least 1" % name)


def _echelon(vectors, n):
    rows = [list(v) for v in vectors if any(v)]
    basis = []
    for col in range(n):
        pivots = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(pivots) > 1:
            pivots.sort(key=lambda r: abs(r[col]))
            head = pivots[0]
            survivors = [head]
            for row in pivots[1:]:
                q = row[col] // head[col]
                row = [a - q * b for a, b in zip(row, head)]
                if row[col] != 0:
                    survivors.append(row)
                elif any(row):
                    rest.append(row)
            pivots = survivors
        if pivots:
            head = pivots[0]
            if head[col] < 0:
                head = [-a for a in head]
            basis.append((col, tuple(head)))
        rows = rest
    return tuple(basis)


@lru_cache(maxsize=128)
def _relation_echelon(presentation):
    differences = [tuple(a - b for a, b in zip(lhs, rhs)) for lhs, rhs in presentation.relations]
    return _echelon(differences, presentation.n_gens)


def canonical_residue(presentation, vector):
    """Unique representative of vector modulo the relation lattice."""
    vector = list(vector)
    for col, row in _relation_echelon(presentation):
        q = vector[col] // row[col]
        if q:
            vector = [a - q * b for a, b in zip(vector, row)]
    return tuple(vector)


def _vectors_of_degree(n, degree):
    for combo in itertools.combinations_with_replacement(range(n), degree):
        vector = [0] * n
        for i in combo:
            vector[i] += 1
        yield tuple(vector)


def enumerate_elements(presentation, bound=Bound()):
    """Residue -> first natural representative, over all vectors of degree <= bound.degree."""
    n = presentation.n_gens
    elements = {}
    for degree in range(bound.degree + 1):
        for vector in _vectors_of_degree(n, degree):
            elements.setdefault(canonical_residue(presentation, vector), vector)
    return elements


def saturation_bruteforce(presentation, bound=Bound()):
    """Residues of box vectors v with m v in the monoid for some m <= bound.multiplier."""
    n = presentation.n_gens
    elements = enumerate_elements(presentation, bound)
    found = set()
    for vector in itertools.product(range(-bound.box, bound.box + 1), repeat=n):
        residue = canonical_residue(presentation, vector)
        if residue in found:
            continue
        for m in range(1, bound.multiplier + 1):
            if canonical_residue(presentation, tuple(m * a for a in vector)) in elements:
                found.add(residue)
                break
    return frozenset(found)


def unit_search(presentation, bound=Bound()):
    """A nonzero element whose negative is also an element, or None."""
    elements = enumerate_elements(presentation, bound)
    zero = canonical_residue(presentation, (0,) * presentation.n_gens)
    for residue, vector in elements.items():
        if residue == zero:
            continue
        if canonical_residue(presentation, tuple(-a for a in vector)) in elements:
            return vector
    return None


def hom_bruteforce(presentation, bound=Bound()):
    """Minimal nonzero monoid maps Q -> N, as value vectors on the generators within the box."""
    n = presentation.n_gens
    differences = [tuple(a - b for a, b in zip(lhs, rhs)) for lhs, rhs in presentation.relations]
    homs = [w for w in itertools.product(range(bound.box + 1), repeat=n)
            if any(w) and all(sum(a * b for a, b in zip(w, d)) == 0 for d in differences)]
    homs.sort(key=sum)
    minimal = []
    for w in homs:
        if not any(all(a <= b for a, b in zip(h, w)) for h in minimal):
            minimal.append(w)
    return sorted(minimal)


def _constant_ok(rhs, strict):
    return rhs < 0 if strict else rhs <= 0


def _scaled(coeffs, rhs):
    lead = next(abs(a) for a in coeffs if a != 0)
    return tuple(a / lead for a in coeffs), rhs / lead


def fm_feasible(system):
    """Plain Fourier-Motzkin verdict; equalities become two weak inequalities."""
    n = system.n_vars
    if n > FM_MAX_VARIABLES:
        raise TooManyVariables("brute-force elimination handles at most %d variables" % FM_MAX_VARIABLES)
    constraints = set()
    for row, rhs in system.equalities:
        constraints.add((tuple(Fraction(a) for a in row), Fraction(rhs), False))
        constraints.add((tuple(Fraction(-a) for a in row), Fraction(-rhs), False))
    for row, rhs in system.weak_inequalities:
        constraints.add((tuple(Fraction(a) for a in row), Fraction(rhs), False))
    for row, rhs in system.strict_inequalities:
        constraints.add((tuple(Fraction(a) for a in row), Fraction(rhs), True))
    for var in range(n):
        positive, negative, kept = [], [], set()
        for coeffs, rhs, strict in constraints:
            if coeffs[var] > 0:
                positive.append((coeffs, rhs, strict))
            elif coeffs[var] < 0:
                negative.append((coeffs, rhs, strict))
            else:
                kept.add((coeffs, rhs, strict))
        for p_coeffs, p_rhs, p_strict in positive:
            for n_coeffs, n_rhs, n_strict in negative:
                a, b = p_coeffs[var], -n_coeffs[var]
                coeffs = tuple(b * x + a * y for x, y in zip(p_coeffs, n_coeffs))
                rhs = b * p_rhs + a * n_rhs
                if any(coeffs):
                    coeffs, rhs = _scaled(coeffs, rhs)
                kept.add((coeffs, rhs, p_strict or n_strict))
        constraints = kept
        LOG.debug("oracle elimination of x%d leaves %d constraints", var, len(constraints))
    return all(_constant_ok(rhs, strict) for coeffs, rhs, strict in constraints)


def hilbert_bruteforce(inequalities, dim, bound=Bound()):
    """Irreducible nonzero lattice points of {x : row.x >= 0} in the box.

    Points are taken by increasing total slack; a point is reducible when
    an earlier irreducible point lies below it in the cone order.
    """
    if dim > HILBERT_MAX_DIMENSION:
        raise DimensionTooLarge("brute-force Hilbert bases are limited to dimension %d" % HILBERT_MAX_DIMENSION)
    rows = [tuple(r) for r in inequalities]

    def slacks(point):
        return tuple(sum(a * x for a, x in zip(row, point)) for row in rows)

    points = []
    for point in itertools.product(range(-bound.box, bound.box + 1), repeat=dim):
        if any(point):
            values = slacks(point)
            if all(v >= 0 for v in values):
                points.append((sum(values), point, values))
    points.sort()
    irreducible = []
    for _, point, values in points:
        if not any(all(h <= v for h, v in zip(h_values, values)) for _, h_values in irreducible):
            irreducible.append((point, values))
    return sorted(point for point, _ in irreducible)
