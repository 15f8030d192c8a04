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

"""Finitely presented fine commutative monoids.

A presentation has generators e_1..e_n and relations lhs = rhs with
natural vectors on both sides. The presented monoid is the image of N^n
in the groupification Z^n / span(lhs - rhs), so it is fine by
construction. Elements are carried as natural preimages and compared
through the relation lattice.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from logmonoid.errors import (DimensionMismatch, IllDefinedMap, InvalidPresentation, InvariantViolation,
                              NotSharp, OwnerMismatch, ZeroRho)
from logmonoid.intlin import (LinearSystem, cokernel_from_snf, column_matrix, cone_hilbert_basis,
                              hilbert_basis, kernel_basis, lattice_membership, lp_feasible,
                              nonnegative_dependency, positive_functional, smith_normal_form)
from logmonoid.utils import (add, clear_denominators, dot, gcd_all, negative_part, positive_part, scale, sub,
                             unit_vector)

LOG = logging.getLogger(__name__)

DEFAULT_BOUND = 64


@dataclass(frozen=True)
class MonoidPresentation:
    """Generators e_1..e_n with relations lhs = rhs over N^n."""

    n_gens: int
    relations: tuple = ()
    labels: tuple = None

    def __post_init__(self):
        if self.n_gens < 0:
            raise InvalidPresentation("negative number of generators")
        relations = []
        for index, (lhs, rhs) in enumerate(self.relations):
            lhs = tuple(int(a) for a in lhs)
            rhs = tuple(int(a) for a in rhs)
            if len(lhs) != self.n_gens or len(rhs) != self.n_gens:
                raise InvalidPresentation("relation %d does not have %d entries per side" % (index, self.n_gens))
            if any(a < 0 for a in lhs + rhs):
                raise InvalidPresentation("relation %d has negative entries" % index)
            relations.append((lhs, rhs))
        object.__setattr__(self, "relations", tuple(relations))
        if self.labels is None:
            labels = tuple("e%d" % (i + 1) for i in range(self.n_gens))
        else:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.n_gens:
                raise InvalidPresentation("%d labels for %d generators" % (len(labels), self.n_gens))
        object.__setattr__(self, "labels", labels)

    @cached_property
    def relation_matrix(self):
        """Columns lhs_j - rhs_j, one per relation."""
        return column_matrix([sub(lhs, rhs) for lhs, rhs in self.relations], self.n_gens)

    @cached_property
    def snf(self):
        return smith_normal_form(self.relation_matrix)

    @cached_property
    def group(self):
        return cokernel_from_snf(self.snf)

    @cached_property
    def generator_images(self):
        return tuple(self.group.project(unit_vector(self.n_gens, i)) for i in range(self.n_gens))

    @cached_property
    def free_images(self):
        return tuple(self.group.free_part(image) for image in self.generator_images)

    def coordinates(self, vector):
        return self.group.project(vector)

    def element(self, vector):
        return MonoidElement(tuple(vector), self)

    def zero(self):
        return MonoidElement((0,) * self.n_gens, self)

    def generator(self, i):
        return MonoidElement(unit_vector(self.n_gens, i), self)

    def describe_relation(self, index):
        lhs, rhs = self.relations[index]
        return "%s = %s" % (format_word(lhs, self.labels), format_word(rhs, self.labels))

    def __str__(self):
        gens = ", ".join(self.labels)
        rels = ", ".join(self.describe_relation(k) for k in range(len(self.relations)))
        return "<%s | %s>" % (gens, rels) if rels else "<%s>" % gens


def format_word(vector, labels):
    terms = []
    for coefficient, label in zip(vector, labels):
        if coefficient == 1:
            terms.append(label)
        elif coefficient:
            terms.append("%d%s" % (coefficient, label))
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True, eq=False)
class MonoidElement:
    """A monoid element given by a natural preimage under N^n -> Q."""

    representative: tuple
    owner: MonoidPresentation

    def __post_init__(self):
        vector = tuple(int(a) for a in self.representative)
        if len(vector) != self.owner.n_gens:
            raise DimensionMismatch("element of length %d in a monoid with %d generators"
                                    % (len(vector), self.owner.n_gens))
        if any(a < 0 for a in vector):
            raise InvalidPresentation("element representatives must be natural vectors")
        object.__setattr__(self, "representative", vector)

    @property
    def coordinates(self):
        return self.owner.coordinates(self.representative)

    @property
    def degree(self):
        return sum(self.representative)

    def __eq__(self, other):
        if not isinstance(other, MonoidElement):
            return NotImplemented
        return element_eq(self, other)

    def __hash__(self):
        return hash(self.coordinates)

    def __add__(self, other):
        _check_owner(self, other)
        return MonoidElement(add(self.representative, other.representative), self.owner)

    def __rmul__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return MonoidElement(scale(k, self.representative), self.owner)

    def __str__(self):
        return format_word(self.representative, self.owner.labels)


def _check_owner(x, y):
    if x.owner is not y.owner and x.owner != y.owner:
        raise OwnerMismatch("elements of %s and %s cannot be compared" % (x.owner, y.owner))


def groupification(presentation):
    """Q^gp = Z^n modulo the span of lhs - rhs."""
    return presentation.group


def element_eq(x, y):
    """True when the two preimages differ by an element of the relation lattice."""
    _check_owner(x, y)
    owner = x.owner
    difference = sub(x.representative, y.representative)
    return lattice_membership(difference, owner.relation_matrix, owner.snf) is not None


@dataclass(frozen=True)
class MembershipResult:
    status: str
    witness: tuple = None
    bound: int = None

    def __bool__(self):
        return self.status == "yes"


@dataclass(frozen=True)
class SharpnessResult:
    """Sharpness verdict.

    A sharp monoid comes with *beta*, the values beta(e_i) of an integer
    functional positive on every nonzero generator, and *functional*, the
    same functional on free group coordinates. A non-sharp monoid comes with
    a unit generator index and a natural vector *inverse* with
    e_unit + inverse = 0.
    """

    sharp: bool
    beta: tuple = None
    functional: tuple = None
    unit: int = None
    inverse: tuple = None


@lru_cache(maxsize=256)
def is_sharp(presentation):
    group = presentation.group
    n = presentation.n_gens
    for i, image in enumerate(presentation.generator_images):
        if any(image) and not any(group.free_part(image)):
            order = group.order_of(image)
            LOG.debug("generator %s is a torsion unit of order %d", presentation.labels[i], order)
            return SharpnessResult(False, unit=i, inverse=scale(order - 1, unit_vector(n, i)))

    nonzero = [i for i in range(n) if any(presentation.generator_images[i])]
    vectors = [presentation.free_images[i] for i in nonzero]
    functional = positive_functional(vectors, group.free_rank) if nonzero else ()
    if functional is not None:
        functional = clear_denominators(functional)[0] if functional else ()
        values = [dot(functional, f) for f in presentation.free_images]
        g = gcd_all(values) or 1
        beta = tuple(v // g for v in values)
        result = SharpnessResult(True, beta=beta, functional=tuple(Fraction(t, g) for t in functional))
        if any(beta[i] < 1 for i in nonzero):
            raise InvariantViolation("interior functional is not positive on the generators")
        return result

    dependency = nonnegative_dependency(vectors, group.free_rank)
    if dependency is None:
        raise InvariantViolation("neither a positive functional nor a dependency exists")
    coefficients = clear_denominators(dependency)[0]
    vector = [0] * n
    for i, c in zip(nonzero, coefficients):
        vector[i] = c * group.exponent
    unit = next(i for i in range(n) if vector[i] > 0)
    inverse = sub(vector, unit_vector(n, unit))
    if any(presentation.coordinates(vector)):
        raise InvariantViolation("unit certificate does not vanish in the group")
    return SharpnessResult(False, unit=unit, inverse=inverse)


def _weight_vectors(weights, total, degree, index=0):
    """Natural vectors x over positive weights with sum(w_i x_i) == total and sum(x_i) <= degree."""
    if index == len(weights):
        if total == 0:
            yield ()
        return
    for k in range(min(total // weights[index], degree) + 1):
        for rest in _weight_vectors(weights, total - k * weights[index], degree - k, index + 1):
            yield (k,) + rest


def membership(presentation, g, bound=DEFAULT_BOUND):
    """Decide whether a group element lies in the monoid.

    *g* is given in groupification coordinates. The answer is "yes" with a
    natural witness, "no" when a cone test or an exhaustive search rules
    it out, or "unknown" once *bound* is exhausted.
    """
    group = presentation.group
    n = presentation.n_gens
    g = group.normalize(g)
    if not any(g):
        return MembershipResult("yes", (0,) * n)

    free_target = group.free_part(g)
    if group.free_rank:
        images = presentation.free_images
        system = LinearSystem(n, tuple((tuple(f[k] for f in images), free_target[k]) for k in range(group.free_rank)),
                              tuple((unit_vector(n, i), 0) for i in range(n)))
        if lp_feasible(system) is None:
            return MembershipResult("no")

    sharpness = is_sharp(presentation)
    if sharpness.sharp:
        height = dot(sharpness.functional, free_target)
        if height.denominator != 1 or height < 0:
            return MembershipResult("no")
        return _weighted_search(presentation, g, sharpness.beta, int(height), bound)
    return _degree_search(presentation, g, bound)


def _weighted_search(presentation, g, beta, height, bound):
    group = presentation.group
    active = [i for i in range(presentation.n_gens) if beta[i] > 0]
    limit = min(height, bound * min((beta[i] for i in active), default=1))
    reach = [{group.zero(): (0,) * presentation.n_gens}]
    for weight in range(1, limit + 1):
        layer = {}
        for i in active:
            if beta[i] > weight:
                continue
            for coords, vector in reach[weight - beta[i]].items():
                target = group.add(coords, presentation.generator_images[i])
                if target not in layer:
                    layer[target] = add(vector, unit_vector(presentation.n_gens, i))
        reach.append(layer)
        LOG.debug("membership search: weight %d holds %d elements", weight, len(layer))
    if limit == height:
        witness = reach[height].get(g)
        return MembershipResult("yes", witness) if witness is not None else MembershipResult("no")
    LOG.warning("membership undecided within bound %d", bound)
    return MembershipResult("unknown", bound=bound)


def _degree_search(presentation, g, bound):
    group = presentation.group
    n = presentation.n_gens
    seen = {group.zero(): (0,) * n}
    frontier = dict(seen)
    for degree in range(1, bound + 1):
        layer = {}
        for coords, vector in frontier.items():
            for i in range(n):
                target = group.add(coords, presentation.generator_images[i])
                if target not in seen and target not in layer:
                    layer[target] = add(vector, unit_vector(n, i))
        if g in layer:
            return MembershipResult("yes", layer[g])
        if not layer:
            return MembershipResult("no")
        seen.update(layer)
        frontier = layer
    LOG.warning("membership undecided within bound %d", bound)
    return MembershipResult("unknown", bound=bound)


def preimages(presentation, g, bound=DEFAULT_BOUND, limit=2):
    """Up to *limit* distinct natural vectors mapping to the group element *g*."""
    group = presentation.group
    n = presentation.n_gens
    g = group.normalize(g)
    found = []
    sharpness = is_sharp(presentation)
    if sharpness.sharp:
        height = dot(sharpness.functional, group.free_part(g))
        if height.denominator != 1 or height < 0:
            return []
        active = [i for i in range(n) if sharpness.beta[i] > 0]
        zero_gens = [i for i in range(n) if sharpness.beta[i] == 0]
        if height > bound * max((sharpness.beta[i] for i in active), default=0):
            LOG.debug("preimage height %s is beyond bound %d", height, bound)
            return []
        for partial in _weight_vectors([sharpness.beta[i] for i in active], int(height), bound):
            vector = [0] * n
            for i, k in zip(active, partial):
                vector[i] = k
            vector = tuple(vector)
            if presentation.coordinates(vector) == g:
                found.append(vector)
                found.extend(add(vector, unit_vector(n, i)) for i in zero_gens if sum(vector) < bound)
            if len(found) >= limit:
                break
        return found[:limit]
    queue = deque([(0,) * n])
    visited = {queue[0]}
    while queue and len(found) < limit:
        vector = queue.popleft()
        if presentation.coordinates(vector) == g:
            found.append(vector)
        if sum(vector) >= bound:
            continue
        for i in range(n):
            nxt = add(vector, unit_vector(n, i))
            if nxt not in visited:
                visited.add(nxt)
                queue.append(nxt)
    return found


def enumerate_window(presentation, degree):
    """Distinct elements of degree <= *degree*: group coordinates -> first representative."""
    group = presentation.group
    n = presentation.n_gens
    seen = {group.zero(): (0,) * n}
    frontier = dict(seen)
    for _ in range(degree):
        layer = {}
        for coords, vector in frontier.items():
            for i in range(n):
                target = group.add(coords, presentation.generator_images[i])
                if target not in seen and target not in layer:
                    layer[target] = add(vector, unit_vector(n, i))
        seen.update(layer)
        frontier = layer
    return seen


@dataclass(frozen=True, eq=False)
class SaturationResult:
    """Sharpened saturation of a sharp fine monoid.

    *hilbert_basis* lives in the free coordinates of the groupification and
    generates *sharp_part*; *embedding* lists the group coordinates (free
    part, then torsion) of every original generator.
    """

    torsion: object
    sharp_part: MonoidPresentation
    hilbert_basis: tuple
    embedding: tuple
    group: object


def monoid_from_vectors(vectors, dim, prefix="h"):
    """Presentation of the submonoid of Z^dim generated by *vectors*."""
    vectors = [tuple(int(a) for a in v) for v in vectors]
    matrix = column_matrix(vectors, dim)
    relations = tuple((positive_part(z), negative_part(z)) for z in kernel_basis(matrix))
    labels = tuple("%s%d" % (prefix, i + 1) for i in range(len(vectors)))
    return MonoidPresentation(len(vectors), relations, labels)


def saturate(presentation):
    if not is_sharp(presentation).sharp:
        raise NotSharp("saturation is only supported for sharp monoids: %s" % presentation)
    group = presentation.group
    basis = tuple(cone_hilbert_basis(presentation.free_images, group.free_rank))
    LOG.debug("saturation: Hilbert basis of size %d in rank %d", len(basis), group.free_rank)
    return SaturationResult(torsion=group.torsion_subgroup(),
                            sharp_part=monoid_from_vectors(basis, group.free_rank),
                            hilbert_basis=basis,
                            embedding=presentation.generator_images,
                            group=group)


@dataclass(frozen=True, eq=False)
class ToricMonoid:
    """A toric monoid given by its Hilbert basis.

    ``pairing[k][i]`` is the value of Hilbert basis element k on generator
    i of the monoid it was dualized from.
    """

    presentation: MonoidPresentation
    hilbert_basis: tuple
    pairing: tuple = field(default=())


def dual_monoid(presentation):
    """Q^dual = Hom(Q, N) as the Hilbert basis of the dual cone in free coordinates."""
    if not is_sharp(presentation).sharp:
        raise NotSharp("dual monoid requires a sharp monoid: %s" % presentation)
    rank = presentation.group.free_rank
    images = presentation.free_images
    basis = tuple(hilbert_basis(images, rank)) if rank else ()
    pairing = tuple(tuple(dot(h, f) for f in images) for h in basis)
    return ToricMonoid(monoid_from_vectors(basis, rank, prefix="w"), basis, pairing)


def double_dual(presentation):
    """Q^dual^dual, in the same free coordinates as saturate()."""
    dual = dual_monoid(presentation)
    rank = presentation.group.free_rank
    basis = tuple(hilbert_basis(dual.hilbert_basis, rank)) if rank else ()
    pairing = tuple(tuple(dot(h, w) for w in dual.hilbert_basis) for h in basis)
    return ToricMonoid(monoid_from_vectors(basis, rank), basis, pairing)


def _image(word, generator_map, length):
    total = (0,) * length
    for coefficient, target in zip(word, generator_map):
        total = add(total, scale(coefficient, target))
    return total


def pushout_int(first, second, base, f, f2):
    """Integral amalgamated sum of *first* and *second* over *base*.

    *f* and *f2* give, per base generator, its image as a natural vector
    over the generators of *first* and *second*.
    """
    for side, target, generator_map in (("first", first, f), ("second", second, f2)):
        generator_map = [tuple(v) for v in generator_map]
        if len(generator_map) != base.n_gens or any(len(v) != target.n_gens for v in generator_map):
            raise DimensionMismatch("generator map to the %s monoid has the wrong shape" % side)
        for index, (lhs, rhs) in enumerate(base.relations):
            left = target.element(_image(lhs, generator_map, target.n_gens))
            right = target.element(_image(rhs, generator_map, target.n_gens))
            if not element_eq(left, right):
                raise IllDefinedMap("base relation %s is not respected by the map to the %s monoid"
                                    % (base.describe_relation(index), side), relation=index, side=side)
    n1, n2 = first.n_gens, second.n_gens
    pad1 = (0,) * n2
    pad2 = (0,) * n1
    relations = [(lhs + pad1, rhs + pad1) for lhs, rhs in first.relations]
    relations += [(pad2 + lhs, pad2 + rhs) for lhs, rhs in second.relations]
    relations += [(tuple(a) + pad1, pad2 + tuple(b)) for a, b in zip(f, f2)]
    return MonoidPresentation(n1 + n2, tuple(relations), first.labels + second.labels)


@dataclass(frozen=True, eq=False)
class NodeEmbedding:
    """The map Q (+)_N N^2 -> Q (+) Q, [q,(a,b)] -> (q + a rho, q + b rho), with its window checks."""

    pushout: MonoidPresentation
    images: tuple
    injective: bool
    image_characterized: bool
    collisions: tuple = ()
    mismatches: tuple = ()
    checked_pairs: int = 0


def node_monoid_embedding(target, rho, elements=(), window=6):
    """Build the node monoid Q (+)_N N^2 and check the embedding claims on a window.

    *rho* is a MonoidElement of *target* or a natural vector. *elements* are
    (q, a, b) triples with q a natural vector.
    """
    if not isinstance(rho, MonoidElement):
        rho = target.element(rho)
    if not is_sharp(target).sharp:
        raise NotSharp("node monoids are built over sharp monoids only")
    if not any(rho.coordinates):
        raise ZeroRho("rho is zero in %s" % target)
    n = target.n_gens
    group = target.group
    node = MonoidPresentation(2, labels=("z", "w"))
    pushout = pushout_int(target, node, MonoidPresentation(1, labels=("t",)),
                          [rho.representative], [(1, 1)])

    def embed(q, a, b):
        return (add(q, scale(a, rho.representative)), add(q, scale(b, rho.representative)))

    images = []
    for q, a, b in elements:
        left, right = embed(tuple(q), a, b)
        images.append(((tuple(q), a, b), (target.element(left), target.element(right))))

    window_elements = enumerate_window(target, window)
    destinations = {}
    for q in window_elements.values():
        for a in range(window + 1):
            for b in range(window + 1 - a):
                left, right = embed(q, a, b)
                key = (target.coordinates(left), target.coordinates(right))
                source = pushout.coordinates(q + (a, b))
                destinations.setdefault(key, set()).add(source)
    collisions = tuple(key for key, sources in destinations.items() if len(sources) > 1)

    rho_coords = rho.coordinates
    mismatches = []
    checked = 0
    for c1, q1 in window_elements.items():
        for c2, q2 in window_elements.items():
            checked += 1
            # pairs differing by a multiple of rho within the window are exactly the enumerated images
            solutions = group.solve_multiple(group.add(c2, group.negate(c1)), rho_coords, window)
            if any(abs(c) <= window for c in solutions) != ((c1, c2) in destinations):
                mismatches.append((q1, q2))
    if collisions or mismatches:
        LOG.warning("node embedding checks failed: %d collisions, %d mismatches", len(collisions), len(mismatches))
    return NodeEmbedding(pushout, tuple(images), not collisions, not mismatches,
                         collisions, tuple(mismatches), checked)


def unit_generators(presentation):
    """Indices of generators that are units of the monoid."""
    group = presentation.group
    n = presentation.n_gens
    units = []
    for i in range(n):
        image = presentation.generator_images[i]
        if not any(group.free_part(image)):
            units.append(i)
            continue
        equalities = tuple((tuple(f[k] for f in presentation.free_images), 0) for k in range(group.free_rank))
        equalities += ((unit_vector(n, i), 1),)
        system = LinearSystem(n, equalities, tuple((unit_vector(n, j), 0) for j in range(n)))
        if lp_feasible(system) is not None:
            units.append(i)
    return units


def sharpen(presentation):
    """Q / Q^*: every unit generator is set to zero."""
    n = presentation.n_gens
    extra = tuple((unit_vector(n, i), (0,) * n) for i in unit_generators(presentation))
    return MonoidPresentation(n, presentation.relations + extra, presentation.labels)


def is_saturated(presentation, bound=DEFAULT_BOUND):
    """True for sharp fs monoids: trivial torsion and every Hilbert basis element is a member."""
    if not is_sharp(presentation).sharp or presentation.group.invariant_factors:
        return False
    result = saturate(presentation)
    return all(membership(presentation, h, bound).status == "yes" for h in result.hilbert_basis)


def component_count(presentation):
    """Number of irreducible components of Spec C[Q], i.e. |Q^gp_tor|."""
    return presentation.group.torsion_order


@dataclass(frozen=True)
class TietzeResult:
    """Result of eliminating generators.

    *substitution* expresses every original generator as a natural vector
    over the surviving generators, listed in *kept*.
    """

    presentation: MonoidPresentation
    substitution: tuple
    kept: tuple


def _defining_relation(relations, alive):
    for index, (lhs, rhs) in enumerate(relations):
        for single, word in ((lhs, rhs), (rhs, lhs)):
            support = [i for i in alive if single[i] != 0]
            if len(support) == 1 and single[support[0]] == 1 and word[support[0]] == 0:
                return index, support[0], word
    return None


def eliminate_generators(presentation):
    """Substitute away generators defined by relations g = w with g not in w."""
    n = presentation.n_gens
    relations = [r for r in presentation.relations if r[0] != r[1]]
    substitution = [unit_vector(n, i) for i in range(n)]
    alive = list(range(n))
    while True:
        found = _defining_relation(relations, alive)
        if found is None:
            break
        index, g, word = found
        del relations[index]

        def replace(vector, g=g, word=word):
            return add(tuple(0 if i == g else a for i, a in enumerate(vector)), scale(vector[g], word))

        relations = [(replace(lhs), replace(rhs)) for lhs, rhs in relations]
        relations = [r for r in relations if r[0] != r[1]]
        substitution = [replace(s) for s in substitution]
        alive.remove(g)
        LOG.debug("eliminated generator %s", presentation.labels[g])
    new_relations = tuple((tuple(lhs[i] for i in alive), tuple(rhs[i] for i in alive)) for lhs, rhs in relations)
    reduced = MonoidPresentation(len(alive), new_relations, tuple(presentation.labels[i] for i in alive))
    return TietzeResult(reduced, tuple(tuple(s[i] for i in alive) for s in substitution), tuple(alive))


def add_redundant_generator(presentation, word, label=None):
    """Add a generator g together with the relation g = word."""
    word = tuple(int(a) for a in word)
    if len(word) != presentation.n_gens:
        raise DimensionMismatch("word of length %d for %d generators" % (len(word), presentation.n_gens))
    n = presentation.n_gens + 1
    relations = tuple((lhs + (0,), rhs + (0,)) for lhs, rhs in presentation.relations)
    relations += ((unit_vector(n, n - 1), word + (0,)),)
    label = label or "e%d" % n
    return MonoidPresentation(n, relations, presentation.labels + (label,))
