#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
"""

import os
import shutil
import hashlib
from collections import namedtuple

import pytest
import numpy as np

import clusterset
from clusterset.matrixcore import validate_stochastic, validate_clustering
from clusterset import generators


CounterExample = namedtuple('CounterExample', ['P1', 'P2', 'clustering'])


def sha256(file_path):
    hash_sha256 = hashlib.sha256()
    with open(file_path, "rb") as f:
        for chunk in iter(lambda: f.read(4096), b""):
            hash_sha256.update(chunk)
    return hash_sha256.hexdigest()


@pytest.fixture(scope="session")
def fixtures_path():
    dir_path = os.path.dirname(os.path.realpath(clusterset.__file__))
    return os.path.join(dir_path, 'data', 'fixtures')


@pytest.fixture(scope="session")
def example1():
    return generators.example1()


@pytest.fixture(scope="session")
def example2():
    return generators.example2()


@pytest.fixture(scope="session")
def example3():
    return generators.example3()


@pytest.fixture(scope="session")
def example4():
    return generators.example4()


@pytest.fixture(scope="session")
def identity_set():
    return generators.identity()


@pytest.fixture(scope="session")
def uniform_set():
    return generators.uniform()


@pytest.fixture(scope="session")
def product_counterexample():
    """P1 has no common influence w.r.t. {{0, 1}, {2}}:
    tau(P1) = 0.75, tau(P2) = 0 but tau(P1 P2) = 0.75.
    """
    C = validate_clustering([[0, 1], [2]], 3)
    P1 = validate_stochastic([[0.75, 0.25, 0.],
                              [0., 0.25, 0.75],
                              [0., 0., 1.]])
    P2 = validate_stochastic([[0.5, 0.5, 0.],
                              [0.5, 0.5, 0.],
                              [0., 0., 1.]])
    return CounterExample(P1, P2, C)


@pytest.fixture
def rng():
    return np.random.default_rng(20200517)


@pytest.fixture
def fixture_files(fixtures_path, tmp_path):
    """Copy of the shipped fixtures in a temporary directory"""
    for f in os.listdir(fixtures_path):
        shutil.copy(os.path.join(fixtures_path, f), str(tmp_path))
    return tmp_path
