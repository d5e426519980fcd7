#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
"""

import pytest
import numpy as np

from clusterset.matrixcore import MatrixSet
from clusterset.decision import decide
from clusterset.simulation import SwitchingPolicy, step, cluster_spread, run, \
    detect_cluster_consensus, support_trajectories, forward_product_check, \
    witness_initial_state
from clusterset.generators import random_clustering, random_stochastic, \
    random_common_influence
import clusterset.clusterset_error as cs_error


def test_step(example3):
    x = np.array([1., 0., 0., 0.])
    assert np.allclose(step(x, example3.get('P')), [0.5, 0.25, 0.125, 0.25])
    with pytest.raises(cs_error.DimensionMismatch):
        step(np.zeros(3), example3.get('P'))


def test_cluster_spread(example2):
    assert cluster_spread([0., 1., 3., 3.5], example2.clustering) == 1.
    assert cluster_spread([2., 2., 3., 3.], example2.clustering) == 0.


def test_uniform_converges_in_one_step(uniform_set):
    traj = run([0., 1.], SwitchingPolicy.periodic(['U']), uniform_set, 20)
    assert traj.horizon == 20
    assert traj.policy_log == ['U'] * 20
    profile = detect_cluster_consensus(traj, uniform_set.clustering)
    assert profile.converged
    assert profile.per_cluster_values == [pytest.approx(0.5)]
    assert profile.convergence_time == 1
    assert profile.final_spread == 0.


def test_identity_witness_keeps_spread(identity_set):
    witness = decide(identity_set).witness
    x0 = witness_initial_state(witness, identity_set.n)
    assert list(x0) == [0., 1.]
    traj = run(x0, SwitchingPolicy.witness_replay(witness), identity_set, 50)
    assert min(traj.spread_log) == 1.
    profile = detect_cluster_consensus(traj, identity_set.clustering)
    assert not profile.converged
    assert profile.per_cluster_values is None
    assert profile.final_spread == 1.


def test_example1_witness_replay(example1):
    witness = decide(example1).witness
    x0 = witness_initial_state(witness, example1.n)
    assert list(x0) == [0., 0., 1., 1., 0.5]
    traj = run(x0, SwitchingPolicy.witness_replay(witness), example1, 100)
    assert min(traj.spread_log) == 1.


def test_example2_converges(example2):
    traj = run([0., 1., 0., 1.], SwitchingPolicy.uniform_random(3), example2, 200)
    profile = detect_cluster_consensus(traj, example2.clustering)
    assert profile.converged
    assert len(profile.per_cluster_values) == 2


def test_random_policy_is_reproducible(example2):
    first = SwitchingPolicy.uniform_random(42).sequence(example2, 50)
    second = SwitchingPolicy.uniform_random(42).sequence(example2, 50)
    assert first == second
    assert set(first) <= set(example2.names)


@pytest.mark.parametrize("kind, kwargs", [
    ('cyclic', {}),
    ('fixed', {}),
    ('periodic', {'names': []}),
    ('witness', {}),
])
def test_invalid_policies(kind, kwargs):
    with pytest.raises(cs_error.ValidationError):
        SwitchingPolicy(kind, **kwargs)


def test_policy_sequence_errors(example2):
    with pytest.raises(cs_error.ValidationError):
        SwitchingPolicy.fixed_sequence(['P1', 'P2']).sequence(example2, 3)
    with pytest.raises(cs_error.UnknownMatrixName):
        SwitchingPolicy.periodic(['P1', 'P9']).sequence(example2, 3)


def test_run_errors(example2):
    policy = SwitchingPolicy.periodic(['P1'])
    with pytest.raises(cs_error.ValidationError):
        run(np.zeros(4), policy, example2, -1)
    with pytest.raises(cs_error.DimensionMismatch):
        run(np.zeros(2), policy, example2, 5)
    traj = run(np.zeros(4), policy, example2, 0)
    assert traj.horizon == 0
    with pytest.raises(cs_error.ValidationError):
        detect_cluster_consensus(traj, example2.clustering, eps=0.)


def test_support_replay_of_a_witness(example1):
    supports = support_trajectories(0, 2, ['P'], example1, 30)
    assert supports.disjoint
    assert supports.numeric_steps == 10
    assert supports.pairs[0] == (0b11, 0b1100)
    assert all(pair == (0b11, 0b1100) for pair in supports.pairs)


def test_support_replay_meets(example2):
    supports = support_trajectories(0, 1, ['P2'], example2, 4)
    assert not supports.disjoint
    assert supports.pairs[0] == (0b11, 0b11)


def test_graph_and_numeric_supports_agree(rng):
    for _ in range(100):
        n = int(rng.integers(2, 7))
        C = random_clustering(rng, n, 1)
        S = MatrixSet([random_stochastic(rng, n, density=0.3) for _ in range(2)], C)
        i, j = (int(v) for v in rng.integers(0, n, size=2))
        sequence = [S.names[int(m)] for m in rng.integers(0, 2, size=2 * n)]
        supports = support_trajectories(i, j, sequence, S, 2 * n)
        assert supports.numeric_steps == 2 * n


def test_support_replay_errors(example1):
    with pytest.raises(cs_error.IndexOutOfRange):
        support_trajectories(0, 5, ['P'], example1, 3)
    with pytest.raises(cs_error.EmptySequence):
        support_trajectories(0, 2, [], example1, 3)
    assert support_trajectories(0, 2, [], example1, 0).pairs == []


def test_forward_product_check(example2):
    check = forward_product_check(['P1', 'P2'], example2, 200)
    assert len(check.taus) == 200
    assert check.taus[-1] < 1e-6
    assert all(b <= a + 1e-12 for a, b in zip(check.taus, check.taus[1:]))
    assert len(check.limit_rows) == 2
    for row in check.limit_rows:
        assert row.sum() == pytest.approx(1.)


def test_forward_product_check_without_consensus(example1):
    check = forward_product_check(['P'], example1, 20)
    assert check.taus[-1] == pytest.approx(1.)
    assert check.limit_rows is None
    with pytest.raises(cs_error.ValidationError):
        forward_product_check(['P'], example1, 0)


def test_steps_stay_in_the_convex_hull(rng):
    for _ in range(50):
        n = int(rng.integers(2, 7))
        S = MatrixSet([random_stochastic(rng, n, density=0.4) for _ in range(2)],
                      random_clustering(rng, n, 1))
        traj = run(rng.normal(size=n), SwitchingPolicy.uniform_random(int(rng.integers(100))),
                   S, 20)
        for x, y in zip(traj.states, traj.states[1:]):
            assert np.min(y) >= np.min(x) - 1e-12
            assert np.max(y) <= np.max(x) + 1e-12


def test_common_influence_keeps_cluster_consensus(rng):
    for _ in range(50):
        n = int(rng.integers(2, 7))
        C = random_clustering(rng, n, int(rng.integers(1, n + 1)))
        x = np.dot(C.indicator(), rng.normal(size=C.K))
        assert cluster_spread(x, C) == 0.
        for _ in range(5):
            x = step(x, random_common_influence(rng, C))
            assert cluster_spread(x, C) < 1e-10
