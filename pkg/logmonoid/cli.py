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

"""Command line front end.

Subcommands: analyze, report, monoid, slb and schema. Exit status 0 means
the analysis ran, whatever its verdicts; 2 means unusable input; 1 means
an internal error.
"""

import argparse
import json
import logging
import sys

import yaml

from logmonoid.config import get_options
from logmonoid.documents import load_graph_document, load_slb_document, write_schemas
from logmonoid.errors import DimensionMismatch, InputError, InvalidGraph, InvalidPresentation
from logmonoid.intlin import FarkasCertificate
from logmonoid.logcurve import (build_basic_monoid, fs_basic_monoid, reduced_presentation, saturation_count,
                                tropical_feasible, varrho_saturation_count)
from logmonoid.logger import setup_logging
from logmonoid.monoid import (MonoidPresentation, double_dual, dual_monoid, format_word, groupification, is_sharp,
                              saturate)
from logmonoid.slb import (KernelCertificate, SectionCertificate, SupportCertificate, assemble_logmap_slb,
                           consistency_check, enumerate_saturation_data, realize_section,
                           symplectic_logmap_check, torsion_characters)
from logmonoid.utils import format_fraction, format_vector

LOG = logging.getLogger(__name__)

INPUT_ERRORS = (InputError, InvalidGraph, InvalidPresentation, DimensionMismatch, OSError, yaml.YAMLError)


def describe_toric(hilbert_basis, rank):
    """Short name of a sharp toric monoid given by its Hilbert basis."""
    if not hilbert_basis:
        return "0"
    if len(hilbert_basis) == rank:
        return "N" if rank == 1 else "N^%d" % rank
    return "cone of rank %d with %d Hilbert basis elements" % (rank, len(hilbert_basis))


def _fractions(values):
    return [format_fraction(v) for v in values]


def _farkas_json(certificate):
    if not isinstance(certificate, FarkasCertificate):
        return None
    return {"equalities": _fractions(certificate.equalities), "weak": _fractions(certificate.weak),
            "strict": _fractions(certificate.strict)}


def _consistency_certificate_json(certificate):
    if isinstance(certificate, KernelCertificate):
        return {"type": "kernel", "z": list(certificate.z), "value": certificate.value.to_literal()}
    if isinstance(certificate, SupportCertificate):
        return {"type": "support", "zero_side": list(certificate.zero_side),
                "unit_side": list(certificate.unit_side), "combination": list(certificate.combination)}
    if isinstance(certificate, SectionCertificate):
        return {"type": "section", "z": list(certificate.z), "value": certificate.value.to_literal()}
    return None


def _consistency_json(result):
    return {"consistent": result.consistent, "reason": result.reason,
            "witness": None if result.witness is None else [u.to_literal() for u in result.witness],
            "certificate": _consistency_certificate_json(result.certificate)}


def build_report(document, options):
    """Run the whole pipeline on a graph document; the result is plain JSON data."""
    graph = document.to_graph()
    LOG.info("Building the basic monoid")
    basic = build_basic_monoid(graph, strict=options['strict_contact'])
    presentation = basic.presentation
    labels = presentation.labels
    report = {"graph": {"r": graph.r, "vertices": len(graph.vertices), "edges": len(graph.edges),
                        "metadata": dict(graph.metadata)}}
    reduced = reduced_presentation(basic)
    report["basic_monoid"] = {
        "generators": list(labels),
        "relations": [presentation.describe_relation(k) for k in range(len(presentation.relations))],
        "reduced_generators": [labels[i] for i in basic.reduced_gens],
        "reduced_presentation": str(reduced.presentation),
        "group": str(presentation.group),
    }

    LOG.info("Checking sharpness")
    sharpness = is_sharp(presentation)
    report["sharpness"] = {"sharp": sharpness.sharp,
                           "beta": None if sharpness.beta is None else list(sharpness.beta),
                           "unit": None if sharpness.unit is None else labels[sharpness.unit]}

    LOG.info("Checking the tropical condition")
    tropical = tropical_feasible(basic)
    report["tropical"] = {
        "feasible": tropical.feasible,
        "witness": None if tropical.witness is None else dict(zip(labels, tropical.witness)),
        "vertex_positions": None if tropical.vertex_positions is None else
        {v: list(p) for v, p in sorted(tropical.vertex_positions.items())},
        "edge_lengths": tropical.edge_lengths,
        "certificate": _farkas_json(tropical.certificate),
    }

    LOG.info("Counting saturations")
    torsion = saturation_count(basic)
    varrho = varrho_saturation_count(graph)
    report["saturation_count"] = {"torsion": torsion, "varrho": varrho, "agree": torsion == varrho}

    report["fs_basic"] = None
    if tropical.feasible:
        fs_result = fs_basic_monoid(basic)
        report["fs_basic"] = {"hilbert_basis": [list(h) for h in fs_result.hilbert_basis],
                              "description": describe_toric(fs_result.hilbert_basis, fs_result.group.free_rank),
                              "torsion": str(fs_result.torsion)}

    LOG.info("Checking consistency of the slb presentation")
    vertex_units, edge_units, vertex_sections = document.slb_data()
    slb = assemble_logmap_slb(basic, vertex_units, edge_units, vertex_sections)
    symplectic = symplectic_logmap_check(basic, slb)
    report["consistency"] = _consistency_json(symplectic.consistency)
    report["symplectic_log_map"] = {"ok": symplectic.ok, "failures": list(symplectic.failures)}
    report["realized_sections"] = None
    if symplectic.consistency.consistent:
        chi = symplectic.consistency.witness
        report["realized_sections"] = {
            labels[i]: realize_section(slb, chi, presentation.generator(i), options['search_bound']).to_literal()
            for i in range(presentation.n_gens)}

    data = []
    if tropical.feasible:
        roots_from = slb if symplectic.consistency.consistent else None
        for datum in enumerate_saturation_data(basic, roots_from):
            data.append({"phases": _fractions(datum.phases),
                         "roots": None if datum.roots is None else [u.to_literal() for u in datum.roots]})
    report["saturation_data"] = data
    return report


def render_report(report):
    lines = []
    graph = report["graph"]
    lines.append("graph: r=%d, %d vertices, %d edges" % (graph["r"], graph["vertices"], graph["edges"]))
    basic = report["basic_monoid"]
    lines.append("basic monoid: %d generators, %d relations, group %s"
                 % (len(basic["generators"]), len(basic["relations"]), basic["group"]))
    lines.append("reduced presentation: %s" % basic["reduced_presentation"])
    sharpness = report["sharpness"]
    if sharpness["sharp"]:
        lines.append("sharp: yes, beta = %s" % format_vector(sharpness["beta"]))
    else:
        lines.append("sharp: no, unit %s" % sharpness["unit"])
    tropical = report["tropical"]
    if tropical["feasible"]:
        lines.append("tropical: feasible, " + ", ".join("%s = %d" % item for item in tropical["witness"].items()))
    else:
        lines.append("tropical: infeasible")
    counts = report["saturation_count"]
    lines.append("saturation count: %d (torsion), %d (varrho)%s"
                 % (counts["torsion"], counts["varrho"], "" if counts["agree"] else " DISAGREE"))
    if report["fs_basic"] is not None:
        lines.append("fs basic monoid: %s, torsion %s" % (report["fs_basic"]["description"],
                                                          report["fs_basic"]["torsion"]))
    consistency = report["consistency"]
    lines.append("consistency: %s" % ("consistent" if consistency["consistent"]
                                      else "inconsistent (%s)" % consistency["reason"]))
    failures = report["symplectic_log_map"]["failures"]
    if not failures:
        lines.append("symplectic log map: yes")
    for failure in failures:
        lines.append("not a symplectic log map: %s condition fails" % failure)
    lines.append("saturation data: %d" % len(report["saturation_data"]))
    return "\n".join(lines) + "\n"


def _dumps(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def cmd_analyze(args, options):
    document = load_graph_document(args.path)
    report = build_report(document, options)
    if options['output'] == 'json':
        sys.stdout.write(_dumps(report))
    else:
        sys.stdout.write(render_report(report))
    return 0


def cmd_report(args, options):
    document = load_graph_document(args.path)
    report = build_report(document, options)
    with open(args.output, "w") as fd_:
        fd_.write(_dumps(report))
    LOG.info("Report written to %s", args.output)
    return 0


def parse_relation(text, n_gens):
    """Parse 'a1,a2,...=b1,b2,...' into a relation over n_gens generators."""
    try:
        lhs, rhs = text.split("=")
        lhs = tuple(int(a) for a in lhs.split(","))
        rhs = tuple(int(a) for a in rhs.split(","))
    except ValueError as err:
        raise InputError("cannot parse relation %r: %s" % (text, err)) from err
    if len(lhs) != n_gens or len(rhs) != n_gens:
        raise InputError("relation %r needs %d entries per side" % (text, n_gens))
    return lhs, rhs


def monoid_output(operation, presentation):
    """Structured result of a monoid subcommand."""
    if operation == "snf":
        return {"diagonal": list(presentation.snf.diagonal)}
    if operation == "gp":
        group = groupification(presentation)
        return {"group": str(group), "free_rank": group.free_rank,
                "invariant_factors": list(group.invariant_factors)}
    sharpness = is_sharp(presentation)
    verdict = {"sharp": sharpness.sharp, "beta": None if sharpness.beta is None else list(sharpness.beta),
               "unit": None if sharpness.unit is None else presentation.labels[sharpness.unit],
               "inverse": None if sharpness.inverse is None else format_word(sharpness.inverse,
                                                                              presentation.labels)}
    if operation == "sharp":
        return verdict
    if not sharpness.sharp:
        LOG.warning("%s needs a sharp monoid, %s is a unit of %s", operation, verdict["unit"], presentation)
        return verdict
    rank = presentation.group.free_rank
    if operation == "saturate":
        result = saturate(presentation)
        return {"sharp_part": describe_toric(result.hilbert_basis, rank), "torsion": str(result.torsion),
                "hilbert_basis": [list(h) for h in result.hilbert_basis]}
    toric = dual_monoid(presentation) if operation == "dual" else double_dual(presentation)
    return {"monoid": describe_toric(toric.hilbert_basis, rank),
            "hilbert_basis": [list(h) for h in toric.hilbert_basis],
            "pairing": [list(row) for row in toric.pairing]}


def cmd_monoid(args, options):
    relations = tuple(parse_relation(text, args.generators) for text in args.relation or [])
    presentation = MonoidPresentation(args.generators, relations)
    result = monoid_output(args.operation, presentation)
    if options['output'] == 'json':
        sys.stdout.write(_dumps(result))
    else:
        for key in sorted(result):
            sys.stdout.write("%s: %s\n" % (key, result[key]))
    return 0


def cmd_slb(args, options):
    slb = load_slb_document(args.path).to_presentation()
    verdict = consistency_check(slb)
    result = _consistency_json(verdict)
    if args.characters:
        group = slb.presentation.group
        result["characters"] = [_fractions(phases) for phases in torsion_characters(group)]
    if options['output'] == 'json':
        sys.stdout.write(_dumps(result))
        return 0
    if result["consistent"]:
        sys.stdout.write("consistent\n")
        sys.stdout.write("chi = (%s)\n" % ", ".join(str(u) for u in verdict.witness))
    else:
        sys.stdout.write("inconsistent (%s): %s\n" % (result["reason"], json.dumps(result["certificate"],
                                                                                  sort_keys=True)))
    if args.characters:
        sys.stdout.write("characters: %d\n" % len(result["characters"]))
    return 0


def cmd_schema(args, options):
    for path in write_schemas(args.schema_dir):
        LOG.info("Wrote %s", path)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(description="Exact monoid algebra for stable log maps.")
    parser.add_argument("-l", "--log-config",
                        help="Log config file to use instead of the standard logging.")
    parser.add_argument("-c", "--config",
                        help="YAML config file with default options.")
    parser.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0,
                        help="Verbosity (between 1 and 2 occurrences with more leading to more "
                        "verbose logging). WARN=0, INFO=1, "
                        "DEBUG=2. This is overridden by the log config file if specified.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", help="Run the full pipeline on a graph document.")
    analyze.add_argument("path")
    analyze.add_argument("--strict-contact", action="store_true", default=None,
                         help="Require contact orders to vanish outside I_v | I_v'.")
    analyze.add_argument("--json", dest="output", action="store_const", const="json", default=None)
    analyze.add_argument("--bound", type=int, help="Search bound for membership and preimages.")
    analyze.set_defaults(func=cmd_analyze)

    report = subparsers.add_parser("report", help="Write the JSON report of a graph document.")
    report.add_argument("path")
    report.add_argument("-o", "--output", required=True, help="Destination of the JSON report.")
    report.add_argument("--strict-contact", action="store_true", default=None)
    report.add_argument("--bound", type=int)
    report.set_defaults(func=cmd_report)

    monoid = subparsers.add_parser("monoid", help="Monoid operations on an inline presentation.")
    monoid.add_argument("operation", choices=["snf", "gp", "sharp", "saturate", "dual", "ddual"])
    monoid.add_argument("-n", "--generators", type=int, required=True)
    monoid.add_argument("-r", "--relation", action="append",
                        help="Relation 'lhs=rhs' with comma separated coefficients; repeatable.")
    monoid.add_argument("--json", dest="output", action="store_const", const="json", default=None)
    monoid.set_defaults(func=cmd_monoid)

    slb = subparsers.add_parser("slb", help="Consistency of an slb presentation document.")
    slb.add_argument("path")
    slb.add_argument("--characters", action="store_true", help="List the torsion characters as well.")
    slb.add_argument("--json", dest="output", action="store_const", const="json", default=None)
    slb.set_defaults(func=cmd_slb)

    schema = subparsers.add_parser("schema", help="Write the JSON schemas of the documents.")
    schema.add_argument("-o", "--output", dest="schema_dir", default="schemas")
    schema.set_defaults(func=cmd_schema)
    return parser


def _command_options(args):
    options = get_options(args.config)
    if getattr(args, "bound", None) is not None:
        options['search_bound'] = args.bound
    if getattr(args, "strict_contact", None):
        options['strict_contact'] = True
    output = getattr(args, "output", None)
    if output == "json" and args.command in ("analyze", "monoid", "slb"):
        options['output'] = "json"
    return options


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        setup_logging(args.log_config, args.verbosity)
        options = _command_options(args)
        return args.func(args, options)
    except INPUT_ERRORS as err:
        LOG.error("%s", err)
        return 2
    except Exception:
        LOG.exception("Internal error while running %s", args.command)
        return 1
