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

"""Small helpers on integer and rational vectors shared by the modules.
"""

from fractions import Fraction
from functools import reduce
from math import gcd


def lcm(a, b):
    """Least common multiple of two nonnegative integers."""
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def lcm_all(values):
    """Least common multiple of an iterable of positive integers (1 if empty)."""
    return reduce(lcm, values, 1)


def gcd_all(values):
    """Gcd of an iterable of integers (0 if empty or all zero)."""
    return reduce(gcd, (abs(v) for v in values), 0)


def dot(u, v):
    """Exact dot product of two equally long sequences."""
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(k, v):
    return tuple(k * a for a in v)


def unit_vector(n, i):
    """The i-th standard basis vector of length n."""
    return tuple(1 if k == i else 0 for k in range(n))


def is_zero(v):
    return not any(v)


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = gcd_all(v)
    if g <= 1:
        return tuple(int(a) for a in v)
    return tuple(int(a) // g for a in v)


def clear_denominators(values):
    """Scale rationals by the lcm of their denominators.

    Returns the integer vector and the positive factor used.
    """
    values = [Fraction(x) for x in values]
    factor = lcm_all(x.denominator for x in values)
    return tuple(int(x * factor) for x in values), factor


def positive_part(v):
    return tuple(max(a, 0) for a in v)


def negative_part(v):
    return tuple(max(-a, 0) for a in v)


def sorted_vectors(vectors):
    """Deduplicate and sort vectors lexicographically."""
    return sorted({tuple(int(a) for a in v) for v in vectors})


def format_vector(v):
    return "(" + ", ".join(str(a) for a in v) + ")"


def parse_fraction(text):
    """Parse 'p/q' or 'p' into a Fraction, raising ValueError on junk."""
    if isinstance(text, int):
        return Fraction(text)
    text = str(text).strip()
    if not text:
        raise ValueError("empty rational literal")
    return Fraction(text)


def format_fraction(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)
