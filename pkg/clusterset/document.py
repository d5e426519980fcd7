# coding=utf8
"""
Copyright (C) 2020 The clusterset developers

This program is free software; you can redistribute it and/or
modify it under the terms of the GNU General Public License
as published by the Free Software Foundation; either version 2
of the License, or (at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

JSON documents: matrix sets and witnesses.

Matrix set:
{"n": int, "clusters": [[int, ...], ...],
 "matrices": [{"name": str, "rows": [[float, ...], ...]}, ...],
 "tolerances": {"row_sum_tol": float, "zero_tol": float, "equality_tol": float},
 "provenance": str}
tolerances and provenance are optional.
"""

import json

from clusterset.matrixcore import Tolerances, validate_stochastic, \
    validate_clustering, MatrixSet
from clusterset.decision import Witness
import clusterset.clusterset_error as cs_error


def read_json(file_name):
    """Load a JSON file. Raise DocumentError if it cannot be parsed."""
    with open(file_name, 'r') as f:
        try:
            return json.load(f)
        except ValueError as err:
            raise cs_error.DocumentError(u"<{}>: invalid JSON ({})".format(file_name, err))


def write_json(obj, file_name):
    with open(file_name, 'w') as f:
        json.dump(obj, f, indent=2, sort_keys=True)
        f.write('\n')


def parse_matrix_set(doc, tol=None):
    """Build a MatrixSet from a decoded document.
    Tolerances given as argument override the document's.
    """
    if not isinstance(doc, dict):
        raise cs_error.DocumentError(u"document must be a JSON object")
    try:
        n = doc['n']
        clusters = doc['clusters']
        raw_matrices = doc['matrices']
    except KeyError as err:
        raise cs_error.DocumentError(u"missing key {}".format(err))
    if tol is None:
        raw_tol = doc.get('tolerances') or {}
        unknown = set(raw_tol) - set(Tolerances._fields)
        if unknown:
            raise cs_error.DocumentError(u"unknown tolerances {}".format(sorted(unknown)))
        tol = Tolerances(**raw_tol)
    if not isinstance(raw_matrices, list) or not raw_matrices:
        raise cs_error.DocumentError(u"'matrices' must be a nonempty list")
    clustering = validate_clustering(clusters, n)
    names = []
    matrices = []
    for idx, raw in enumerate(raw_matrices):
        if not isinstance(raw, dict) or 'rows' not in raw:
            raise cs_error.DocumentError(u"matrix {} has no 'rows'".format(idx))
        name = str(raw.get('name', u"P{}".format(idx)))
        names.append(name)
        matrices.append(validate_stochastic(raw['rows'], tol, name=name))
    return MatrixSet(matrices, clustering, names)


def dump_matrix_set(S, provenance=None):
    """Document of a matrix set"""
    doc = {'n': S.n,
           'clusters': S.clustering.to_list(),
           'matrices': [{'name': name, 'rows': P.entries.tolist()} for name, P in S],
           'tolerances': S.tol.to_dict()}
    if provenance:
        doc['provenance'] = provenance
    return doc


def load_matrix_set(file_name, tol=None):
    return parse_matrix_set(read_json(file_name), tol)


def save_matrix_set(S, file_name, provenance=None):
    write_json(dump_matrix_set(S, provenance), file_name)


def load_witness(file_name):
    doc = read_json(file_name)
    if not isinstance(doc, dict):
        raise cs_error.DocumentError(u"witness must be a JSON object")
    return Witness.from_dict(doc)


def save_witness(witness, file_name):
    write_json(witness.to_dict(), file_name)
