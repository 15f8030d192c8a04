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

"""Exact integer and rational linear algebra.

Integer matrices are 2-d numpy arrays of dtype object holding python
ints, so no arithmetic ever overflows. Vectors are plain tuples of ints,
or of Fractions for rational LP witnesses.

The module provides the Smith normal form with both transforms and
their inverses, lattice kernels, cokernels and membership, exact LP
feasibility (Fourier-Motzkin and a rational simplex) with Farkas
certificates, and Hilbert bases of pointed rational cones.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor

import numpy as np

from logmonoid.errors import DimensionMismatch, InvariantViolation, NonPointedCone
from logmonoid.utils import clear_denominators, dot, gcd_all, lcm_all, primitive, sorted_vectors

LOG = logging.getLogger(__name__)

IntMatrix = np.ndarray

# Systems with more variables than this go to the simplex method.
FM_VARIABLE_LIMIT = 8


def int_matrix(entries, rows=None, cols=None):
    """Return *entries* as a 2-d object array of python ints.

    *rows* and *cols* fix the shape when *entries* is empty.
    """
    if isinstance(entries, np.ndarray):
        if entries.ndim != 2:
            raise DimensionMismatch("expected a 2-d matrix, got shape %s" % (entries.shape,))
        rows, cols = entries.shape
        data = entries.tolist()
    else:
        data = [list(row) for row in entries]
        if data:
            rows = len(data)
            cols = len(data[0])
        else:
            rows = rows or 0
            cols = cols or 0
    matrix = np.zeros((rows, cols), dtype=object)
    for i, row in enumerate(data):
        if len(row) != cols:
            raise DimensionMismatch("ragged matrix: row %d has %d entries, expected %d" % (i, len(row), cols))
        for j, value in enumerate(row):
            matrix[i, j] = int(value)
    return matrix


def column_matrix(vectors, dim):
    """Matrix whose columns are *vectors*, each of length *dim*."""
    vectors = [tuple(v) for v in vectors]
    matrix = np.zeros((dim, len(vectors)), dtype=object)
    for j, vector in enumerate(vectors):
        if len(vector) != dim:
            raise DimensionMismatch("column %d has length %d, expected %d" % (j, len(vector), dim))
        for i, value in enumerate(vector):
            matrix[i, j] = int(value)
    return matrix


def identity(n):
    matrix = np.zeros((n, n), dtype=object)
    for i in range(n):
        matrix[i, i] = 1
    return matrix


def matmul(left, right):
    """Exact matrix product, also for empty inner dimensions."""
    if left.shape[1] != right.shape[0]:
        raise DimensionMismatch("cannot multiply %s by %s" % (left.shape, right.shape))
    if left.shape[1] == 0 or left.shape[0] == 0 or right.shape[1] == 0:
        return np.zeros((left.shape[0], right.shape[1]), dtype=object)
    return left.dot(right)


def apply(matrix, vector):
    """Matrix times vector, returned as a tuple."""
    rows, cols = matrix.shape
    if len(vector) != cols:
        raise DimensionMismatch("vector of length %d for a %dx%d matrix" % (len(vector), rows, cols))
    return tuple(sum((matrix[i, j] * vector[j] for j in range(cols)), 0) for i in range(rows))


def columns(matrix):
    return [tuple(matrix[i, j] for i in range(matrix.shape[0])) for j in range(matrix.shape[1])]


def rows_of(matrix):
    return [tuple(matrix[i, j] for j in range(matrix.shape[1])) for i in range(matrix.shape[0])]


def equal_matrices(left, right):
    return left.shape == right.shape and bool((left == right).all())


@dataclass(frozen=True, eq=False)
class SmithDecomposition:
    """U·A·V = S with U, V unimodular; U_inv and V_inv are their inverses."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self):
        return tuple(self.S[k, k] for k in range(min(self.S.shape)))

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)


def _smallest_nonzero(work, start):
    best = None
    rows, cols = work.shape
    for i in range(start, rows):
        for j in range(start, cols):
            value = work[i, j]
            if value != 0 and (best is None or abs(value) < best[0]):
                best = (abs(value), i, j)
    return None if best is None else best[1:]


def _smallest_in_cross(work, t):
    best = None
    rows, cols = work.shape
    for i in range(t + 1, rows):
        if work[i, t] != 0 and (best is None or abs(work[i, t]) < best[0]):
            best = (abs(work[i, t]), i, t)
    for j in range(t + 1, cols):
        if work[t, j] != 0 and (best is None or abs(work[t, j]) < best[0]):
            best = (abs(work[t, j]), t, j)
    return None if best is None else best[1:]


def _indivisible_row(work, t):
    rows, cols = work.shape
    pivot = work[t, t]
    for i in range(t + 1, rows):
        for j in range(t + 1, cols):
            if work[i, j] % pivot:
                return i
    return None


def smith_normal_form(matrix):
    """Smith normal form of an integer matrix.

    Pivots on the smallest nonzero entry of the remaining block. The
    diagonal is nonnegative with d_1 | d_2 | ... and zeros trailing.
    """
    work = int_matrix(matrix)
    source = work.copy()
    m, n = work.shape
    U, U_inv = identity(m), identity(m)
    V, V_inv = identity(n), identity(n)

    def row_op(target, pivot, q):
        # row target -= q * row pivot
        work[target, :] = work[target, :] - q * work[pivot, :]
        U[target, :] = U[target, :] - q * U[pivot, :]
        U_inv[:, pivot] = U_inv[:, pivot] + q * U_inv[:, target]

    def col_op(target, pivot, q):
        # column target -= q * column pivot
        work[:, target] = work[:, target] - q * work[:, pivot]
        V[:, target] = V[:, target] - q * V[:, pivot]
        V_inv[pivot, :] = V_inv[pivot, :] + q * V_inv[target, :]

    def swap_rows(a, b):
        if a != b:
            work[[a, b], :] = work[[b, a], :]
            U[[a, b], :] = U[[b, a], :]
            U_inv[:, [a, b]] = U_inv[:, [b, a]]

    def swap_cols(a, b):
        if a != b:
            work[:, [a, b]] = work[:, [b, a]]
            V[:, [a, b]] = V[:, [b, a]]
            V_inv[[a, b], :] = V_inv[[b, a], :]

    t = 0
    while t < min(m, n):
        pivot = _smallest_nonzero(work, t)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            for i in range(t + 1, m):
                if work[i, t] != 0:
                    row_op(i, t, work[i, t] // work[t, t])
            for j in range(t + 1, n):
                if work[t, j] != 0:
                    col_op(j, t, work[t, j] // work[t, t])
            leftover = _smallest_in_cross(work, t)
            if leftover is not None:
                swap_rows(t, leftover[0])
                swap_cols(t, leftover[1])
                continue
            bad = _indivisible_row(work, t)
            if bad is None:
                break
            row_op(t, bad, -1)
        if work[t, t] < 0:
            work[t, :] = -work[t, :]
            U[t, :] = -U[t, :]
            U_inv[:, t] = -U_inv[:, t]
        t += 1

    if not equal_matrices(matmul(U, matmul(source, V)), work):
        raise InvariantViolation("Smith normal form transforms do not reproduce the diagonal matrix")
    LOG.debug("Smith normal form of a %dx%d matrix: diagonal %s", m, n, [work[k, k] for k in range(min(m, n))])
    return SmithDecomposition(U, work, V, U_inv, V_inv)


def hermite_normal_form(vectors, length=None):
    """Row-style Hermite normal form of the lattice spanned by *vectors*.

    Returns the nonzero rows: echelon form, positive pivots, entries
    above each pivot reduced into [0, pivot).
    """
    work = [[int(a) for a in v] for v in vectors]
    if not work:
        return []
    length = len(work[0]) if length is None else length
    pivot_row = 0
    for col in range(length):
        if pivot_row >= len(work):
            break
        while True:
            nonzero = [i for i in range(pivot_row, len(work)) if work[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda k: (abs(work[k][col]), k))
            work[pivot_row], work[best] = work[best], work[pivot_row]
            pivot = work[pivot_row][col]
            pending = False
            for k in range(pivot_row + 1, len(work)):
                if work[k][col] != 0:
                    q = work[k][col] // pivot
                    work[k] = [a - q * b for a, b in zip(work[k], work[pivot_row])]
                    if work[k][col] != 0:
                        pending = True
            if not pending:
                break
        if work[pivot_row][col] == 0:
            continue
        if work[pivot_row][col] < 0:
            work[pivot_row] = [-a for a in work[pivot_row]]
        pivot = work[pivot_row][col]
        for k in range(pivot_row):
            q = work[k][col] // pivot
            if q:
                work[k] = [a - q * b for a, b in zip(work[k], work[pivot_row])]
        pivot_row += 1
    return [tuple(row) for row in work[:pivot_row]]


def rank(vectors):
    return len(hermite_normal_form(vectors))


def kernel_basis(matrix, snf=None):
    """Lattice basis of {x : A x = 0}, in Hermite normal form."""
    matrix = int_matrix(matrix)
    snf = snf or smith_normal_form(matrix)
    n = matrix.shape[1]
    vectors = [tuple(snf.V[i, k] for i in range(n)) for k in range(snf.rank, n)]
    return hermite_normal_form(vectors, n)


@dataclass(frozen=True, eq=False)
class AbelianGroup:
    """A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k.

    *projection* maps ambient lattice vectors to coordinates, free
    coordinates first, then one coordinate per invariant factor taken
    modulo that factor. *lift_matrix* maps coordinates back to an
    ambient representative.
    """

    free_rank: int
    invariant_factors: tuple
    projection: IntMatrix
    lift_matrix: IntMatrix

    @property
    def ambient_dim(self):
        return self.projection.shape[1]

    @property
    def n_coordinates(self):
        return self.free_rank + len(self.invariant_factors)

    @property
    def torsion_order(self):
        order = 1
        for d in self.invariant_factors:
            order *= d
        return order

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def normalize(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.n_coordinates:
            raise DimensionMismatch("expected %d group coordinates, got %d" % (self.n_coordinates, len(coords)))
        free = coords[:self.free_rank]
        torsion = tuple(c % d for c, d in zip(coords[self.free_rank:], self.invariant_factors))
        return free + torsion

    def project(self, vector):
        return self.normalize(apply(self.projection, tuple(vector)))

    def lift(self, coords):
        return apply(self.lift_matrix, tuple(coords))

    def zero(self):
        return (0,) * self.n_coordinates

    def add(self, left, right):
        return self.normalize(tuple(a + b for a, b in zip(left, right)))

    def scale(self, k, coords):
        return self.normalize(tuple(k * a for a in coords))

    def negate(self, coords):
        return self.scale(-1, coords)

    def free_part(self, coords):
        return tuple(coords[:self.free_rank])

    def torsion_part(self, coords):
        return tuple(coords[self.free_rank:])

    def order_of(self, coords):
        """Order of an element; 0 for elements of infinite order."""
        coords = self.normalize(coords)
        if any(self.free_part(coords)):
            return 0
        return lcm_all(d // gcd_all((c, d)) for c, d in zip(self.torsion_part(coords), self.invariant_factors))

    def torsion_subgroup(self):
        rows = list(range(self.free_rank, self.n_coordinates))
        return AbelianGroup(0, self.invariant_factors,
                            self.projection[rows, :].copy(),
                            self.lift_matrix[:, rows].copy())

    def solve_multiple(self, target, step, window=16):
        """Integers c with c * step == target.

        When *step* has a nonzero free part the solution is unique if it
        exists. A pure torsion *step* is searched in [-window, window].
        """
        target = self.normalize(target)
        step = self.normalize(step)
        free_step = self.free_part(step)
        if any(free_step):
            k = next(i for i, a in enumerate(free_step) if a != 0)
            value, remainder = divmod(target[k], free_step[k])
            if remainder:
                return []
            return [value] if self.scale(value, step) == target else []
        if any(self.free_part(target)):
            return []
        return [c for c in range(-window, window + 1) if self.scale(c, step) == target]

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % d for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


def cokernel_from_snf(snf):
    m = snf.U.shape[0]
    r = snf.rank
    diagonal = snf.diagonal
    free_rows = list(range(r, m))
    torsion_rows = [k for k in range(r) if diagonal[k] > 1]
    order = free_rows + torsion_rows
    projection = snf.U[order, :].copy() if order else np.zeros((0, m), dtype=object)
    lift_matrix = snf.U_inv[:, order].copy() if order else np.zeros((m, 0), dtype=object)
    return AbelianGroup(len(free_rows), tuple(diagonal[k] for k in torsion_rows), projection, lift_matrix)


def cokernel_structure(matrix, snf=None):
    """Z^I modulo the column span of an I x J matrix."""
    matrix = int_matrix(matrix)
    return cokernel_from_snf(snf or smith_normal_form(matrix))


def lattice_membership(vector, matrix, snf=None):
    """Integer z with A z = v, or None when v is not in the column lattice."""
    matrix = int_matrix(matrix) if not isinstance(matrix, np.ndarray) else matrix
    m, n = matrix.shape
    vector = tuple(int(a) for a in vector)
    if len(vector) != m:
        raise DimensionMismatch("vector of length %d for a lattice in Z^%d" % (len(vector), m))
    snf = snf or smith_normal_form(matrix)
    reduced = apply(snf.U, vector)
    solution = [0] * n
    for k, d in enumerate(snf.diagonal):
        if d == 0:
            break
        if reduced[k] % d:
            return None
        solution[k] = reduced[k] // d
    if any(reduced[snf.rank:]):
        return None
    return apply(snf.V, solution)


def _integral_constraint(row, rhs, n_vars):
    row = tuple(row)
    if len(row) != n_vars:
        raise DimensionMismatch("constraint has %d coefficients for %d variables" % (len(row), n_vars))
    values, _ = clear_denominators(list(row) + [rhs])
    return values[:-1], values[-1]


@dataclass(frozen=True)
class LinearSystem:
    """Equalities row.x = rhs, weak inequalities row.x >= rhs and strict row.x > rhs.

    Rational data is scaled to integers row by row on construction.
    """

    n_vars: int
    equalities: tuple = ()
    weak_inequalities: tuple = ()
    strict_inequalities: tuple = ()

    def __post_init__(self):
        for name in ("equalities", "weak_inequalities", "strict_inequalities"):
            rows = tuple(_integral_constraint(row, rhs, self.n_vars) for row, rhs in getattr(self, name))
            object.__setattr__(self, name, rows)

    @property
    def n_constraints(self):
        return len(self.equalities) + len(self.weak_inequalities) + len(self.strict_inequalities)

    def is_homogeneous(self):
        return all(rhs == 0 for _, rhs in self.equalities + self.weak_inequalities + self.strict_inequalities)

    def homogenized(self):
        """Replace row.x > 0 by row.x >= 1; only sound for homogeneous systems."""
        return LinearSystem(self.n_vars, self.equalities,
                            self.weak_inequalities + tuple((row, 1) for row, _ in self.strict_inequalities))

    def satisfied_by(self, point):
        if point is None or len(point) != self.n_vars:
            return False
        return (all(dot(row, point) == rhs for row, rhs in self.equalities)
                and all(dot(row, point) >= rhs for row, rhs in self.weak_inequalities)
                and all(dot(row, point) > rhs for row, rhs in self.strict_inequalities))


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving infeasibility.

    With E x = e, W x >= b, P x > p: the combination lam.E + w.W + c.P
    vanishes, w and c are nonnegative, and lam.e + w.b + c.p is positive,
    or zero while c is nonzero.
    """

    equalities: tuple
    weak: tuple
    strict: tuple


@dataclass(frozen=True)
class LPResult:
    feasible: bool
    witness: tuple = None
    certificate: FarkasCertificate = None
    method: str = ""


def verify_certificate(system, certificate):
    """Check a Farkas certificate exactly."""
    lam, weak, strict = certificate.equalities, certificate.weak, certificate.strict
    if (len(lam), len(weak), len(strict)) != (len(system.equalities), len(system.weak_inequalities),
                                              len(system.strict_inequalities)):
        return False
    if any(x < 0 for x in weak) or any(x < 0 for x in strict):
        return False
    combination = [Fraction(0)] * system.n_vars
    value = Fraction(0)
    for multipliers, constraints in ((lam, system.equalities), (weak, system.weak_inequalities),
                                     (strict, system.strict_inequalities)):
        for factor, (row, rhs) in zip(multipliers, constraints):
            for k, a in enumerate(row):
                combination[k] += factor * a
            value += factor * rhs
    if any(combination):
        return False
    return value > 0 or (value == 0 and any(strict))


def _normalized(coeffs, rhs):
    values, _ = clear_denominators(list(coeffs) + [rhs])
    g = gcd_all(values[:-1]) or 1
    return tuple(v // g for v in values[:-1]), Fraction(values[-1], g)


def _prune(constraints):
    """Deduplicate inequalities keeping the tightest; None on a contradiction."""
    best = {}
    for coeffs, rhs, strict in constraints:
        if not any(coeffs):
            if rhs > 0 or (strict and rhs == 0):
                return None
            continue
        key, rhs = _normalized(coeffs, rhs)
        current = best.get(key)
        if current is None or (rhs, strict) > current:
            best[key] = (rhs, strict)
    return [([Fraction(a) for a in key], rhs, strict) for key, (rhs, strict) in sorted(best.items())]


def _substitute(constraint, var, coeffs, rhs):
    row, value = constraint[0], constraint[1]
    if row[var] == 0:
        return constraint
    factor = row[var] / coeffs[var]
    new_row = [a - factor * b for a, b in zip(row, coeffs)]
    return (new_row, value - factor * rhs) + tuple(constraint[2:])


def _choose_value(var, involved, values):
    lower, lower_strict, upper, upper_strict = None, False, None, False
    for coeffs, rhs, strict in involved:
        rest = sum((coeffs[k] * values[k] for k in range(len(coeffs)) if k != var and coeffs[k] != 0), Fraction(0))
        bound = (rhs - rest) / coeffs[var]
        if coeffs[var] > 0:
            if lower is None or bound > lower or (bound == lower and strict):
                lower, lower_strict = bound, strict
        elif upper is None or bound < upper or (bound == upper and strict):
            upper, upper_strict = bound, strict
    if lower is not None and not lower_strict:
        return lower
    if lower is not None:
        return (lower + upper) / 2 if upper is not None else lower + 1
    if upper is not None:
        return upper - 1 if upper_strict else upper
    return Fraction(0)


def _fourier_motzkin(system):
    """Exact elimination: equalities by substitution, then Fourier-Motzkin."""
    n = system.n_vars
    equalities = [([Fraction(a) for a in row], Fraction(rhs)) for row, rhs in system.equalities]
    inequalities = ([([Fraction(a) for a in row], Fraction(rhs), False) for row, rhs in system.weak_inequalities]
                    + [([Fraction(a) for a in row], Fraction(rhs), True) for row, rhs in system.strict_inequalities])
    substitutions = []
    for index in range(len(equalities)):
        coeffs, rhs = equalities[index]
        var = next((k for k in range(n) if coeffs[k] != 0), None)
        if var is None:
            if rhs != 0:
                return None
            continue
        substitutions.append((var, coeffs, rhs))
        equalities[index + 1:] = [_substitute(eq, var, coeffs, rhs) for eq in equalities[index + 1:]]
        inequalities = [_substitute(ineq, var, coeffs, rhs) for ineq in inequalities]

    inequalities = _prune(inequalities)
    if inequalities is None:
        return None
    substituted = {var for var, _, _ in substitutions}
    stages = []
    for var in reversed([k for k in range(n) if k not in substituted]):
        involved = [c for c in inequalities if c[0][var] != 0]
        rest = [c for c in inequalities if c[0][var] == 0]
        lower = [c for c in involved if c[0][var] > 0]
        upper = [c for c in involved if c[0][var] < 0]
        combined = []
        for lo in lower:
            for up in upper:
                a, b = lo[0][var], -up[0][var]
                combined.append(([b * x + a * y for x, y in zip(lo[0], up[0])],
                                 b * lo[1] + a * up[1], lo[2] or up[2]))
        stages.append((var, involved))
        inequalities = _prune(rest + combined)
        if inequalities is None:
            return None
        LOG.debug("eliminated x%d, %d constraints remain", var, len(inequalities))

    values = [None] * n
    for var, involved in reversed(stages):
        values[var] = _choose_value(var, involved, values)
    for var, coeffs, rhs in reversed(substitutions):
        rest = sum((coeffs[k] * values[k] for k in range(n) if k != var and coeffs[k] != 0), Fraction(0))
        values[var] = (rhs - rest) / coeffs[var]
    return tuple(values)


class _Tableau:
    """Dense rational simplex tableau for A y = b, y >= 0, b >= 0. Bland's rule throughout."""

    def __init__(self, rows, rhs, ncols):
        m = len(rows)
        self.ncols = ncols
        self.rows = [list(row) + [Fraction(int(k == i)) for k in range(m)] for i, row in enumerate(rows)]
        self.rhs = list(rhs)
        self.basis = [ncols + i for i in range(m)]

    def pivot(self, r, c):
        p = self.rows[r][c]
        self.rows[r] = [x / p for x in self.rows[r]]
        self.rhs[r] /= p
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [x - f * y for x, y in zip(row, self.rows[r])]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def minimize(self, cost, limit):
        while True:
            in_basis = set(self.basis)
            entering = None
            for j in range(limit):
                if j in in_basis:
                    continue
                reduced = cost[j] - sum((cost[b] * row[j] for b, row in zip(self.basis, self.rows)), Fraction(0))
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            ratios = [(self.rhs[i] / row[entering], self.basis[i], i)
                      for i, row in enumerate(self.rows) if row[entering] > 0]
            if not ratios:
                return "unbounded"
            self.pivot(min(ratios)[2], entering)

    def phase_one(self):
        m = len(self.rows)
        cost = [Fraction(0)] * self.ncols + [Fraction(1)] * m
        self.minimize(cost, self.ncols)
        if sum((self.rhs[i] for i, b in enumerate(self.basis) if b >= self.ncols), Fraction(0)) > 0:
            return False
        redundant = []
        for i in range(m):
            if self.basis[i] >= self.ncols:
                col = next((j for j in range(self.ncols) if self.rows[i][j] != 0), None)
                if col is None:
                    redundant.append(i)
                else:
                    self.pivot(i, col)
        keep = [i for i in range(m) if i not in redundant]
        self.rows = [self.rows[i][:self.ncols] for i in keep]
        self.rhs = [self.rhs[i] for i in keep]
        self.basis = [self.basis[i] for i in keep]
        return True

    def solution(self):
        values = [Fraction(0)] * self.ncols
        for i, b in enumerate(self.basis):
            values[b] = self.rhs[i]
        return values


def _simplex(system):
    """Exact two-phase simplex; strict rows are met by maximizing a slack epsilon <= 1."""
    n = system.n_vars
    strict = system.strict_inequalities
    n_slack = len(system.weak_inequalities) + len(strict)
    eps_col = 2 * n + n_slack
    ncols = eps_col + (2 if strict else 0)

    def base_row(coeffs):
        return ([Fraction(a) for a in coeffs] + [Fraction(-a) for a in coeffs]
                + [Fraction(0)] * (ncols - 2 * n))

    rows, rhs = [], []
    for coeffs, b in system.equalities:
        rows.append(base_row(coeffs))
        rhs.append(Fraction(b))
    slack = 2 * n
    for coeffs, b in system.weak_inequalities:
        row = base_row(coeffs)
        row[slack] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(b))
        slack += 1
    for coeffs, b in strict:
        row = base_row(coeffs)
        row[slack] = Fraction(-1)
        row[eps_col] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(b))
        slack += 1
    if strict:
        row = [Fraction(0)] * ncols
        row[eps_col] = Fraction(1)
        row[eps_col + 1] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    tableau = _Tableau(rows, rhs, ncols)
    if not tableau.phase_one():
        return None
    if strict:
        cost = [Fraction(0)] * ncols
        cost[eps_col] = Fraction(-1)
        tableau.minimize(cost, ncols)
        if tableau.solution()[eps_col] <= 0:
            return None
    values = tableau.solution()
    return tuple(values[j] - values[n + j] for j in range(n))


def _solve(system, method):
    if method == "fourier_motzkin":
        return _fourier_motzkin(system)
    if method == "simplex":
        return _simplex(system)
    raise ValueError("unknown LP method %r" % method)


def _resolve_method(system, method):
    if method == "auto":
        return "fourier_motzkin" if system.n_vars <= FM_VARIABLE_LIMIT else "simplex"
    return method


def farkas_certificate(system, method="auto"):
    """Search the alternative system for an infeasibility certificate."""
    n_eq = len(system.equalities)
    n_weak = len(system.weak_inequalities)
    n_strict = len(system.strict_inequalities)
    size = n_eq + n_weak + n_strict
    constraints = system.equalities + system.weak_inequalities + system.strict_inequalities
    vanishing = [(tuple(row[k] for row, _ in constraints), 0) for k in range(system.n_vars)]
    signs = [(tuple(int(i == k) for i in range(size)), 0) for k in range(n_eq, size)]
    value_row = tuple(rhs for _, rhs in constraints)
    strict_sum = tuple(int(k >= n_eq + n_weak) for k in range(size))
    attempts = [vanishing + [(value_row, 1)]]
    if n_strict:
        attempts.append(vanishing + [(value_row, 0), (strict_sum, 1)])
    for equalities in attempts:
        alternative = LinearSystem(size, tuple(equalities), tuple(signs))
        found = _solve(alternative, _resolve_method(alternative, method))
        if found is not None:
            return FarkasCertificate(tuple(found[:n_eq]), tuple(found[n_eq:n_eq + n_weak]),
                                     tuple(found[n_eq + n_weak:]))
    return None


def lp_solve(system, method="auto", certify=True):
    """Decide feasibility of a LinearSystem exactly.

    Positively homogeneous systems have their strict rows replaced by
    row.x >= 1 first. Infeasible systems come with a Farkas certificate
    when *certify* is set.
    """
    method = _resolve_method(system, method)
    work = system
    if system.strict_inequalities and system.is_homogeneous():
        work = system.homogenized()
    LOG.debug("LP with %d variables and %d constraints via %s", system.n_vars, system.n_constraints, method)
    witness = _solve(work, method)
    if witness is not None:
        if not system.satisfied_by(witness):
            raise InvariantViolation("LP witness %s violates the system" % (witness,))
        return LPResult(True, witness, None, method)
    certificate = None
    if certify:
        certificate = farkas_certificate(system)
        if certificate is None or not verify_certificate(system, certificate):
            raise InvariantViolation("infeasible system without a valid Farkas certificate")
    return LPResult(False, None, certificate, method)


def lp_feasible(system, method="auto"):
    """Exact rational witness of the system, or None when infeasible."""
    return lp_solve(system, method, certify=False).witness


def positive_functional(vectors, dim, method="auto"):
    """Rational t with t.v > 0 for every v, or None."""
    system = LinearSystem(dim, (), (), tuple((tuple(v), 0) for v in vectors))
    return lp_feasible(system, method)


def nonnegative_dependency(vectors, dim, method="auto"):
    """Rational c >= 0 with sum(c) = 1 and sum(c_i v_i) = 0, or None.

    Exactly one of this and positive_functional succeeds.
    """
    vectors = [tuple(v) for v in vectors]
    k = len(vectors)
    equalities = [(tuple(v[l] for v in vectors), 0) for l in range(dim)]
    equalities.append(((1,) * k, 1))
    weak = [(tuple(int(i == j) for i in range(k)), 0) for j in range(k)]
    return lp_feasible(LinearSystem(k, tuple(equalities), tuple(weak)), method)


def rational_inverse(vectors):
    """Inverse of a square nonsingular matrix given by rows, as Fraction rows."""
    n = len(vectors)
    work = [[Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(vectors)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if work[i][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]


def _dd_step(rays, row, processed):
    values = [dot(row, r) for r in rays]
    positive = [r for r, v in zip(rays, values) if v > 0]
    negative = [r for r, v in zip(rays, values) if v < 0]
    result = positive + [r for r, v in zip(rays, values) if v == 0]
    if positive and negative:
        tight = {r: frozenset(k for k, a in enumerate(processed) if dot(a, r) == 0) for r in rays}
        for p in positive:
            for q in negative:
                common = tight[p] & tight[q]
                if any(other != p and other != q and common <= tight[other] for other in rays):
                    continue
                result.append(primitive(tuple(dot(row, p) * a - dot(row, q) * b for a, b in zip(q, p))))
    return sorted(set(result))


def extreme_rays(inequalities, dim):
    """Primitive extreme rays of the pointed cone {x : row.x >= 0 for all rows}.

    Double description: start from dim independent rows and add the
    others one at a time, keeping adjacent pairs by the combinatorial test.
    """
    rows = [tuple(int(a) for a in r) for r in inequalities]
    if any(len(r) != dim for r in rows):
        raise DimensionMismatch("inequality rows must have length %d" % dim)
    if dim == 0:
        return []
    if rank(rows) < dim:
        raise NonPointedCone("inequalities of rank %d do not cut out a pointed cone in dimension %d"
                             % (rank(rows), dim))
    chosen = []
    for index, row in enumerate(rows):
        if rank([rows[k] for k in chosen] + [row]) > len(chosen):
            chosen.append(index)
        if len(chosen) == dim:
            break
    inverse = rational_inverse([rows[k] for k in chosen])
    rays = [primitive(clear_denominators([inverse[i][k] for i in range(dim)])[0]) for k in range(dim)]
    processed = [rows[k] for k in chosen]
    for index, row in enumerate(rows):
        if index in chosen:
            continue
        rays = _dd_step(rays, row, processed)
        processed.append(row)
    return sorted_vectors(rays)


def _lattice_basis(vectors, dim):
    """Basis of the lattice span_Q(vectors) intersected with Z^dim."""
    if rank(vectors) == dim:
        return [tuple(int(i == j) for i in range(dim)) for j in range(dim)]
    orthogonal = kernel_basis(int_matrix(vectors))
    return kernel_basis(int_matrix(orthogonal))


def _parallelepiped_points(generators, d):
    """Nonzero lattice points of the half-open parallelepiped spanned by d independent generators."""
    matrix = column_matrix(generators, d)
    snf = smith_normal_form(matrix)
    inverse = rational_inverse(rows_of(matrix))
    points = []
    for residue in itertools.product(*(range(k) for k in snf.diagonal)):
        point = apply(snf.U_inv, residue)
        shift = [floor(sum((inverse[i][j] * point[j] for j in range(d)), Fraction(0))) for i in range(d)]
        point = tuple(p - s for p, s in zip(point, apply(matrix, shift)))
        if any(point):
            points.append(point)
    return points


def _irreducible(candidates, inequalities):
    candidates = sorted({c for c in candidates if any(c)})

    def in_cone(vector):
        return all(dot(a, vector) >= 0 for a in inequalities)

    return [x for x in candidates
            if not any(g != x and in_cone(tuple(a - b for a, b in zip(x, g))) for g in candidates)]


def hilbert_basis(inequalities, dim):
    """Hilbert basis of {x in Z^dim : row.x >= 0 for all rows}, sorted lexicographically.

    Candidates are the extreme rays and the lattice points of the
    half-open parallelepipeds over every independent choice of rays;
    the reducible ones are dropped.
    """
    rows = [tuple(int(a) for a in r) for r in inequalities]
    rays = extreme_rays(rows, dim)
    if not rays:
        return []
    basis = _lattice_basis(rays, dim)
    d = len(basis)
    lattice = column_matrix(basis, dim)
    snf = smith_normal_form(lattice)
    local_rays = [lattice_membership(ray, lattice, snf) for ray in rays]
    if any(r is None for r in local_rays):
        raise InvariantViolation("extreme ray outside its own lattice span")
    local_rows = [apply(lattice.T, row) for row in rows]
    candidates = set(local_rays)
    for subset in itertools.combinations(local_rays, d):
        if rank(subset) == d:
            candidates.update(_parallelepiped_points(subset, d))
    LOG.debug("Hilbert basis: %d rays, %d candidates in dimension %d", len(rays), len(candidates), d)
    result = [apply(lattice, x) for x in _irreducible(candidates, local_rows)]
    return sorted_vectors(result)


def cone_hilbert_basis(generators, dim):
    """Hilbert basis of cone(generators) intersected with the lattice they span over Q."""
    generators = [tuple(int(a) for a in g) for g in generators if any(g)]
    if not generators:
        return []
    basis = _lattice_basis(generators, dim)
    lattice = column_matrix(basis, dim)
    snf = smith_normal_form(lattice)
    local = [lattice_membership(g, lattice, snf) for g in generators]
    facets = extreme_rays(local, len(basis))
    return sorted_vectors(apply(lattice, x) for x in hilbert_basis(facets, len(basis)))
