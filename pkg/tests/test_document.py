#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
"""

import os
import json

import pytest
import numpy as np
import pandas as pd

from clusterset import generators
from clusterset.document import parse_matrix_set, dump_matrix_set, load_matrix_set, \
    save_matrix_set, load_witness, save_witness, read_json
from clusterset.matrixcore import Tolerances
from clusterset.decision import decide
from clusterset.simulation import SwitchingPolicy, run
from clusterset.records import TrajectoryRecord
import clusterset.clusterset_error as cs_error


@pytest.mark.parametrize("name", sorted(generators.FIXTURES))
def test_shipped_fixtures_match_generators(fixtures_path, name):
    builder, provenance = generators.FIXTURES[name]
    file_name = os.path.join(fixtures_path, name + '.json')
    assert read_json(file_name)['provenance'] == provenance
    S = load_matrix_set(file_name)
    expected = builder()
    assert S.names == expected.names
    assert S.clustering == expected.clustering
    for P, Q in zip(S.matrices, expected.matrices):
        assert np.allclose(P.entries, Q.entries)


def test_save_and_load(tmp_path, example2):
    file_name = str(tmp_path / 'example2.json')
    save_matrix_set(example2, file_name, provenance=u"test")
    doc = read_json(file_name)
    assert doc['provenance'] == u"test"
    assert doc['clusters'] == [[0, 1], [2, 3]]
    S = load_matrix_set(file_name)
    assert S.names == example2.names
    assert all(P == Q for P, Q in zip(S.matrices, example2.matrices))


def test_default_names():
    doc = {'n': 2, 'clusters': [[0, 1]], 'matrices': [{'rows': [[1, 0], [0, 1]]}]}
    assert parse_matrix_set(doc).names == ('P0',)


def test_document_tolerances():
    doc = {'n': 2, 'clusters': [[0, 1]],
           'matrices': [{'name': 'A', 'rows': [[0.5, 0.5 + 1e-10], [0, 1]]}],
           'tolerances': {'row_sum_tol': 1e-11}}
    with pytest.raises(cs_error.RowSumViolation):
        parse_matrix_set(doc)
    # tolerances given by the caller win
    S = parse_matrix_set(doc, Tolerances())
    assert S.tol == Tolerances()
    doc['tolerances'] = {'row_sum': 1e-9}
    with pytest.raises(cs_error.DocumentError):
        parse_matrix_set(doc)


@pytest.mark.parametrize("doc", [
    [],
    {'clusters': [[0, 1]], 'matrices': []},
    {'n': 2, 'clusters': [[0, 1]], 'matrices': []},
    {'n': 2, 'clusters': [[0, 1]], 'matrices': [[[1, 0], [0, 1]]]},
])
def test_malformed_documents(doc):
    with pytest.raises(cs_error.DocumentError):
        parse_matrix_set(doc)


def test_row_sum_error_names_matrix():
    doc = {'n': 2, 'clusters': [[0, 1]],
           'matrices': [{'name': 'ok', 'rows': [[1, 0], [0, 1]]},
                        {'name': 'bad', 'rows': [[1, 0], [0.2, 0.2]]}]}
    with pytest.raises(cs_error.RowSumViolation) as excinfo:
        parse_matrix_set(doc)
    assert 'bad' in str(excinfo.value)


def test_invalid_json(tmp_path):
    file_name = tmp_path / 'broken.json'
    file_name.write_text(u'{"n": 2,')
    with pytest.raises(cs_error.DocumentError):
        load_matrix_set(str(file_name))


def test_dump_is_json(example4):
    doc = dump_matrix_set(example4)
    assert 'provenance' not in doc
    assert json.loads(json.dumps(doc)) == doc


def test_witness_file(tmp_path, example1):
    witness = decide(example1).witness
    file_name = str(tmp_path / 'witness.json')
    save_witness(witness, file_name)
    assert load_witness(file_name) == witness
    (tmp_path / 'list.json').write_text(u'[]')
    with pytest.raises(cs_error.DocumentError):
        load_witness(str(tmp_path / 'list.json'))


def test_trajectory_record(tmp_path, example2):
    traj = run([0., 1., 0.25, 0.75], SwitchingPolicy.periodic(['P1', 'P2']), example2, 12)
    file_name = str(tmp_path / 'traj.csv')
    TrajectoryRecord(file_name, example2.n).write(traj)
    df = pd.read_csv(file_name, keep_default_na=False)
    assert list(df.columns) == ['t', 'matrix', 'spread', 'x_0', 'x_1', 'x_2', 'x_3']
    assert len(df) == 13
    assert list(df['t']) == list(range(13))
    assert df['matrix'][0] == ''
    assert list(df['matrix'][1:]) == traj.policy_log
    assert np.allclose(df[['x_0', 'x_1', 'x_2', 'x_3']].values, np.array(traj.states))
    assert np.allclose(df['spread'], traj.spread_log)


def test_trajectory_record_default_name():
    record = TrajectoryRecord(None, 2)
    assert record.file_name.endswith('_trajectory.csv')
