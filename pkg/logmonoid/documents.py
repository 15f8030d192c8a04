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

"""JSON documents for dual graphs and slb presentations.

The pydantic models validate the documents, convert them into library
values and export the JSON schemas committed under ``schemas/``.
"""

import json
import logging
import os
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from logmonoid.errors import InputError
from logmonoid.logcurve import DecoratedDualGraph, Edge, Marking, Vertex, id_key
from logmonoid.monoid import MonoidPresentation
from logmonoid.slb import ONE_UNIT, ZERO, ExactScalar, ExactUnit, SlbPointPresentation

LOG = logging.getLogger(__name__)

SCHEMA_VERSION = "1"


def _coerce_id(value):
    if isinstance(value, bool):
        raise ValueError("ids must be strings or integers")
    return str(value) if isinstance(value, int) else value


class UnitLiteral(BaseModel):
    """(mag)^(1/root) * exp(2 pi i phase); stored in normal form."""

    model_config = ConfigDict(extra="forbid")

    mag: str = "1"
    root: int = Field(default=1, ge=1)
    phase: str = "0"

    @model_validator(mode="before")
    @classmethod
    def normalize(cls, data):
        if isinstance(data, dict):
            literal = dict(data)
            for key in ("mag", "phase"):
                if isinstance(literal.get(key), int) and not isinstance(literal.get(key), bool):
                    literal[key] = str(literal[key])
            unknown = set(literal) - {"mag", "root", "phase"}
            if unknown:
                return literal
            try:
                return ExactUnit.from_literal(literal).to_literal()
            except ZeroDivisionError as err:
                raise ValueError("invalid unit literal: %s" % err) from err
        return data

    def to_unit(self):
        return ExactUnit.from_literal(self.model_dump())

    @classmethod
    def from_unit(cls, unit):
        return cls(**unit.to_literal())


class MarkingDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    mu: List[int]

    @field_validator("id", mode="before")
    @classmethod
    def coerce_id(cls, value):
        return _coerce_id(value)


class VertexDocument(BaseModel):
    """A component: degeneracy set I, markings, and optional slb units per branch."""

    model_config = ConfigDict(extra="forbid")

    id: str
    I: List[int] = Field(default_factory=list)
    markings: List[MarkingDocument] = Field(default_factory=list)
    phi: Optional[List[UnitLiteral]] = None
    sections: Optional[List[Optional[UnitLiteral]]] = None

    @field_validator("id", mode="before")
    @classmethod
    def coerce_id(cls, value):
        return _coerce_id(value)


class EdgeDocument(BaseModel):
    """A node with contact orders for the stored orientation from -> to."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    id: str
    source: str = Field(alias="from")
    to: str
    mu: List[int]
    phi: Optional[List[UnitLiteral]] = None

    @field_validator("id", "source", "to", mode="before")
    @classmethod
    def coerce_ids(cls, value):
        return _coerce_id(value)


class GraphDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal["1"] = SCHEMA_VERSION
    r: int = Field(ge=0)
    vertices: List[VertexDocument] = Field(min_length=1)
    edges: List[EdgeDocument] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_structure(self):
        vertex_ids = [v.id for v in self.vertices]
        if len(set(vertex_ids)) != len(vertex_ids):
            raise ValueError("vertex ids are not unique")
        edge_ids = [e.id for e in self.edges]
        if len(set(edge_ids)) != len(edge_ids):
            raise ValueError("edge ids are not unique")
        marking_ids = [m.id for v in self.vertices for m in v.markings]
        if len(set(marking_ids)) != len(marking_ids):
            raise ValueError("marking ids are not unique")
        for vertex in self.vertices:
            if any(not 1 <= j <= self.r for j in vertex.I):
                raise ValueError("vertex %s: branch indices must lie in 1..%d" % (vertex.id, self.r))
            for marking in vertex.markings:
                if len(marking.mu) != self.r or any(a < 0 for a in marking.mu):
                    raise ValueError("marking %s: mu needs %d natural numbers" % (marking.id, self.r))
            for name in ("phi", "sections"):
                values = getattr(vertex, name)
                if values is not None and len(values) != self.r:
                    raise ValueError("vertex %s: %s needs %d entries" % (vertex.id, name, self.r))
        for edge in self.edges:
            if edge.source not in vertex_ids or edge.to not in vertex_ids:
                raise ValueError("edge %s: unknown endpoint" % edge.id)
            if len(edge.mu) != self.r:
                raise ValueError("edge %s: mu needs %d entries" % (edge.id, self.r))
            if edge.phi is not None and len(edge.phi) != self.r:
                raise ValueError("edge %s: phi needs %d entries" % (edge.id, self.r))
        return self

    def to_graph(self):
        vertices = tuple(Vertex(v.id, frozenset(v.I), tuple(Marking(m.id, tuple(m.mu)) for m in v.markings))
                         for v in self.vertices)
        edges = tuple(Edge(e.id, e.source, e.to, tuple(e.mu)) for e in self.edges)
        return DecoratedDualGraph(self.r, vertices, edges, dict(self.metadata))

    def slb_data(self):
        """Relation units and vertex sections for assemble_logmap_slb; absent entries stay at their defaults."""
        vertex_units, edge_units, vertex_sections = {}, {}, {}
        for vertex in self.vertices:
            for j in range(1, self.r + 1):
                if j in vertex.I:
                    continue
                if vertex.phi is not None:
                    vertex_units[(vertex.id, j)] = vertex.phi[j - 1].to_unit()
                if vertex.sections is not None and vertex.sections[j - 1] is not None:
                    vertex_sections[(vertex.id, j)] = vertex.sections[j - 1].to_unit()
        for edge in self.edges:
            if edge.phi is not None:
                for j in range(1, self.r + 1):
                    edge_units[(edge.id, j)] = edge.phi[j - 1].to_unit()
        return vertex_units, edge_units, vertex_sections

    def canonical(self):
        """Same document with ids, branch sets and markings in canonical order."""
        vertices = [v.model_copy(update={"I": sorted(set(v.I)),
                                         "markings": sorted(v.markings, key=lambda m: id_key(m.id))})
                    for v in sorted(self.vertices, key=lambda v: id_key(v.id))]
        edges = sorted(self.edges, key=lambda e: id_key(e.id))
        return self.model_copy(update={"vertices": vertices, "edges": edges})

    @classmethod
    def from_graph(cls, graph):
        vertices = [VertexDocument(id=v.id, I=sorted(v.degeneracy),
                                   markings=[MarkingDocument(id=m.id, mu=list(m.mu)) for m in v.markings])
                    for v in graph.sorted_vertices]
        edges = [EdgeDocument(id=e.id, source=e.source, to=e.target, mu=list(e.mu)) for e in graph.sorted_edges]
        return cls(r=graph.r, vertices=vertices, edges=edges, metadata=dict(graph.metadata))


class RelationDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    lhs: List[int]
    rhs: List[int]
    unit: UnitLiteral = Field(default_factory=UnitLiteral)


class SlbDocument(BaseModel):
    """An slb presentation over a point. A null section is the zero section."""

    model_config = ConfigDict(extra="forbid")

    schema_version: Literal["1"] = SCHEMA_VERSION
    generators: int = Field(ge=0)
    labels: Optional[List[str]] = None
    relations: List[RelationDocument] = Field(default_factory=list)
    sections: Optional[List[Optional[UnitLiteral]]] = None

    @model_validator(mode="after")
    def check_sizes(self):
        n = self.generators
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels needs %d entries" % n)
        for k, relation in enumerate(self.relations):
            if len(relation.lhs) != n or len(relation.rhs) != n:
                raise ValueError("relation %d needs %d entries per side" % (k, n))
            if any(a < 0 for a in relation.lhs + relation.rhs):
                raise ValueError("relation %d has negative entries" % k)
        if self.sections is not None and len(self.sections) != n:
            raise ValueError("sections needs %d entries" % n)
        return self

    def to_presentation(self):
        monoid = MonoidPresentation(self.generators, tuple((tuple(r.lhs), tuple(r.rhs)) for r in self.relations),
                                    None if self.labels is None else tuple(self.labels))
        if self.sections is None:
            sections = (ExactScalar(ONE_UNIT),) * self.generators
        else:
            sections = tuple(ZERO if s is None else ExactScalar(s.to_unit()) for s in self.sections)
        return SlbPointPresentation(monoid, sections, tuple(r.unit.to_unit() for r in self.relations))

    @classmethod
    def from_presentation(cls, slb):
        monoid = slb.presentation
        relations = [RelationDocument(lhs=list(lhs), rhs=list(rhs), unit=UnitLiteral.from_unit(unit))
                     for (lhs, rhs), unit in zip(monoid.relations, slb.rel_units)]
        sections = [None if s.is_zero else UnitLiteral.from_unit(s.unit) for s in slb.sections]
        return cls(generators=monoid.n_gens, labels=list(monoid.labels), relations=relations, sections=sections)


def _format_validation_error(error):
    return "; ".join("%s: %s" % (".".join(str(part) for part in item["loc"]) or "document", item["msg"])
                     for item in error.errors())


def parse_document(model, text, source="<string>"):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError("%s:%d:%d: invalid JSON: %s" % (source, err.lineno, err.colno, err.msg)) from err
    try:
        return model.model_validate(data)
    except ValidationError as err:
        raise InputError("%s: %s" % (source, _format_validation_error(err))) from err


def _read(path):
    try:
        with open(path, "r") as fd_:
            return fd_.read()
    except OSError as err:
        raise InputError("cannot read %s: %s" % (path, err)) from err


def load_graph_document(path):
    LOG.debug("reading graph document %s", path)
    return parse_document(GraphDocument, _read(path), str(path))


def load_slb_document(path):
    LOG.debug("reading slb document %s", path)
    return parse_document(SlbDocument, _read(path), str(path))


def dump_document(document):
    """Deterministic JSON text of a document."""
    data = document.model_dump(mode="json", by_alias=True, exclude_none=True)
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


SCHEMAS = {"graph.schema.json": GraphDocument, "slb.schema.json": SlbDocument}


def json_schemas():
    return {name: model.model_json_schema(by_alias=True) for name, model in SCHEMAS.items()}


def write_schemas(directory):
    os.makedirs(directory, exist_ok=True)
    written = []
    for name, schema in json_schemas().items():
        path = os.path.join(directory, name)
        with open(path, "w") as fd_:
            fd_.write(json.dumps(schema, indent=2, sort_keys=True) + "\n")
        written.append(path)
    return written
