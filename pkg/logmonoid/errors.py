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

"""Exceptions raised by the logmonoid library.

Negative mathematical verdicts (infeasible, not sharp, inconsistent,
unknown) are returned as results. The classes below are reserved for
misuse of an operation and for failed internal cross-checks.
"""


class LogMonoidError(Exception):
    """Base class for all logmonoid errors."""


class InputError(LogMonoidError):
    """A document or command line value could not be parsed."""


class DimensionMismatch(LogMonoidError):
    """Vector or matrix sizes do not fit together."""


class InvalidPresentation(LogMonoidError):
    """A monoid presentation has negative or ragged relation data."""


class OwnerMismatch(LogMonoidError):
    """Two monoid elements belong to different presentations."""


class NonPointedCone(LogMonoidError):
    """The cone contains a line."""


class NotSharp(LogMonoidError):
    """The monoid has a nonzero unit."""


class IllDefinedMap(LogMonoidError):
    """A generator map does not respect a relation of its source."""

    def __init__(self, message, relation=None, side=None):
        super().__init__(message)
        self.relation = relation
        self.side = side


class ZeroRho(LogMonoidError):
    """A smoothing parameter is zero in the target monoid."""


class InvalidGraph(LogMonoidError):
    """A decorated dual graph violates its structural constraints."""


class NotFeasible(LogMonoidError):
    """The tropical condition fails for a basic monoid."""


class NoPreimageFound(LogMonoidError):
    """No preimage in N^I was found within the search bound."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class TooManyVariables(LogMonoidError):
    """The brute-force elimination refuses large systems."""


class DimensionTooLarge(LogMonoidError):
    """The brute-force lattice enumeration refuses large dimensions."""


class InvariantViolation(LogMonoidError):
    """An internal cross-check failed. This is a bug, not an input problem."""
