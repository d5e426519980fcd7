#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
"""

import pytest
import numpy as np
from hypothesis import given, settings, strategies as st

from clusterset.matrixcore import Tolerances, validate_stochastic, validate_clustering, \
    MatrixSet, has_common_influence, check_cut_balance, check_assumptions, \
    regime_of, AssumptionReport, matrix_product, window_products, single_cluster
from clusterset.generators import random_clustering, random_common_influence, \
    random_matrix_set, random_stochastic
import clusterset.clusterset_error as cs_error


def test_identity_is_valid():
    P = validate_stochastic(np.eye(3))
    assert P.n == 3
    assert np.array_equal(P.support, np.eye(3, dtype=bool))


def test_entries_are_read_only():
    P = validate_stochastic([[0.5, 0.5], [0., 1.]])
    with pytest.raises(ValueError):
        P.entries[0, 0] = 1.


@pytest.mark.parametrize("raw, error", [
    ([[1.1, -0.1], [0., 1.]], cs_error.NegativeEntry),
    ([[0.5, 0.4], [0., 1.]], cs_error.RowSumViolation),
    ([[0.5, 0.5]], cs_error.NonSquare),
    ([1.], cs_error.NonSquare),
    ([], cs_error.NonSquare),
    ([["a", "b"], ["c", "d"]], cs_error.NonSquare),
    ([[np.nan, 1.], [0., 1.]], cs_error.NonFinite),
    ([[np.inf, 0.], [0., 1.]], cs_error.NonFinite),
])
def test_invalid_matrices(raw, error):
    with pytest.raises(error):
        validate_stochastic(raw)


def test_validation_errors_share_a_base_class():
    with pytest.raises(cs_error.ValidationError):
        validate_stochastic([[2., 0.], [0., 1.]])


def test_row_sum_message_names_matrix_and_row():
    with pytest.raises(cs_error.RowSumViolation) as excinfo:
        validate_stochastic([[1., 0.], [0.3, 0.3]], name='Pbad')
    assert 'Pbad' in str(excinfo.value)
    assert 'row 1' in str(excinfo.value)


def test_near_zero_entries_are_clamped():
    P = validate_stochastic([[1. - 1e-13, 1e-13], [-1e-13, 1.]])
    assert P.entries[0, 1] == 0.
    assert P.entries[1, 0] == 0.
    assert P.entries[0, 0] == 1.
    assert not P.support[0, 1]


def test_row_sum_tolerance():
    validate_stochastic([[0.5, 0.5 + 1e-10], [0., 1.]])
    with pytest.raises(cs_error.RowSumViolation):
        validate_stochastic([[0.5, 0.5 + 1e-10], [0., 1.]],
                            Tolerances(row_sum_tol=1e-11))


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2 ** 32 - 1),
       n=st.integers(min_value=1, max_value=6))
def test_validation_is_idempotent(seed, n):
    rng = np.random.default_rng(seed)
    raw = rng.random((n, n))
    raw[rng.random((n, n)) < 0.3] = 1e-14
    raw /= raw.sum(axis=1)[:, np.newaxis]
    P = validate_stochastic(raw)
    Q = validate_stochastic(P.entries)
    assert np.array_equal(P.entries, Q.entries)
    assert P == Q


@pytest.mark.parametrize("values", [
    {'row_sum_tol': -1e-9},
    {'zero_tol': 1e-3},
    {'equality_tol': 'abc'},
])
def test_invalid_tolerances(values):
    with pytest.raises(cs_error.ValidationError):
        Tolerances(**values)


def test_clustering_keeps_order():
    C = validate_clustering([[3, 2], [0, 1]], 4)
    assert C.clusters == ((2, 3), (0, 1))
    assert C.cluster_of == (1, 1, 0, 0)
    assert C.K == 2
    assert C.masks == (0b1100, 0b0011)
    assert C.same_cluster(2, 3)
    assert not C.same_cluster(1, 2)


@pytest.mark.parametrize("sets, n, error", [
    ([[0, 1], [1, 2]], 3, cs_error.Overlap),
    ([[0, 1]], 3, cs_error.NotCovering),
    ([[0, 1, 2], []], 3, cs_error.EmptyCluster),
    ([[0, 1, 3]], 3, cs_error.IndexOutOfRange),
    ([[0]], 0, cs_error.ValidationError),
])
def test_invalid_clusterings(sets, n, error):
    with pytest.raises(error):
        validate_clustering(sets, n)


def test_matrix_set_names(example2):
    assert example2.names == ('P1', 'P2')
    assert example2.index_of('P2') == 1
    with pytest.raises(cs_error.UnknownMatrixName):
        example2.get('P3')
    unnamed = MatrixSet(example2.matrices, example2.clustering)
    assert unnamed.names == ('P0', 'P1')


def test_matrix_set_errors(example2):
    P = validate_stochastic(np.eye(4))
    with pytest.raises(cs_error.DuplicateName):
        MatrixSet([P, P], example2.clustering, ['A', 'A'])
    with pytest.raises(cs_error.DimensionMismatch):
        MatrixSet([validate_stochastic(np.eye(3))], example2.clustering)
    with pytest.raises(cs_error.ValidationError):
        MatrixSet([], example2.clustering)


def test_common_influence_blocks(example2):
    holds, blocks = has_common_influence(example2.get('P1'), example2.clustering)
    assert holds
    assert np.allclose(blocks, [[0.8, 0.2], [0.2, 0.8]])


def test_common_influence_violated(product_counterexample):
    holds, _ = has_common_influence(product_counterexample.P1,
                                    product_counterexample.clustering)
    assert not holds
    holds, _ = has_common_influence(product_counterexample.P2,
                                    product_counterexample.clustering)
    assert holds


def test_single_cluster_always_has_common_influence(rng):
    raw = rng.random((5, 5))
    P = validate_stochastic(raw / raw.sum(axis=1)[:, np.newaxis])
    assert has_common_influence(P, single_cluster(5))[0]


def test_cut_balance():
    assert check_cut_balance(validate_stochastic([[0.5, 0.5], [0.5, 0.5]])) == 1.
    assert check_cut_balance(validate_stochastic([[0.5, 0.5], [0.25, 0.75]])) == pytest.approx(2.)
    # all the flow goes from 1 to 0, none back
    assert check_cut_balance(validate_stochastic([[1., 0.], [1., 0.]])) is None


def test_cut_balance_of_doubly_stochastic(rng):
    entries = np.zeros((6, 6))
    for w in (0.2, 0.3, 0.5):
        entries[np.arange(6), rng.permutation(6)] += w
    assert check_cut_balance(validate_stochastic(entries)) == 1.


@pytest.mark.parametrize("raw", [
    [[1. - 5e-10, 0.], [0., 1.]],
    [[0.5 - 5e-10, 0.5, 0.], [0.5, 0.5, 0.], [0., 0., 1.]],
])
def test_cut_balance_within_row_sum_tolerance(raw):
    # rows off by less than row_sum_tol carry no flow out of their block
    assert check_cut_balance(validate_stochastic(raw)) == 1.
    report = check_assumptions(MatrixSet([validate_stochastic(raw)], single_cluster(len(raw))))
    assert report.cut_balance_constant == 1.


def test_cut_balance_cap():
    with pytest.raises(cs_error.DimensionTooLarge):
        check_cut_balance(validate_stochastic(np.eye(5)), cap=4)


def test_assumptions_example2(example2):
    report = check_assumptions(example2)
    assert report.a1_self_loops
    assert report.a2_symmetric_pattern
    assert report.a3_delta == pytest.approx(0.1)
    assert not report.a4_doubly_stochastic
    assert report.common_influence
    assert report.regime == AssumptionReport.A123
    assert report.sufficient
    assert set(report.to_dict()['block_sums']) == {'P1', 'P2'}


def test_assumptions_regimes():
    lazy_cycle = validate_stochastic([[0.5, 0.5, 0.], [0., 0.5, 0.5], [0.5, 0., 0.5]])
    S = MatrixSet([lazy_cycle], single_cluster(3))
    report = check_assumptions(S)
    assert not report.a2_symmetric_pattern
    assert report.a4_doubly_stochastic
    assert report.regime == AssumptionReport.A14
    swap = validate_stochastic([[0., 1.], [1., 0.]])
    report = check_assumptions(MatrixSet([swap], single_cluster(2)))
    assert not report.a1_self_loops
    assert report.regime == AssumptionReport.NONE
    assert not report.sufficient


def test_regime_precedence():
    assert regime_of(True, True, 0.1, True) == AssumptionReport.A123
    assert regime_of(True, False, 0.1, True) == AssumptionReport.A14
    assert regime_of(False, True, 0.1, True) == AssumptionReport.NONE


def test_matrix_product(example4):
    Qa, Qb = example4.get('Qa'), example4.get('Qb')
    product = matrix_product(Qb, Qa)
    assert np.allclose(product.entries, np.dot(Qb.entries, Qa.entries))
    with pytest.raises(cs_error.DimensionMismatch):
        matrix_product(Qa, validate_stochastic(np.eye(2)))


def test_all_window_products(example4):
    products = window_products(example4, 2)
    assert products.names == ('Qa*Qa', 'Qb*Qa', 'Qa*Qb', 'Qb*Qb')
    assert products.clustering == example4.clustering
    assert window_products(example4, 1).names == example4.names


def test_selected_window_products(example4):
    products = window_products(example4, 2, [('Qa', 'Qb'), ('Qb', 'Qa')])
    assert products.names == ('Qb*Qa', 'Qa*Qb')
    expected = np.dot(example4.get('Qb').entries, example4.get('Qa').entries)
    assert np.allclose(products.get('Qb*Qa').entries, expected)
    with pytest.raises(cs_error.ValidationError):
        window_products(example4, 2, [('Qa',)])
    with pytest.raises(cs_error.ValidationError):
        window_products(example4, 0)


def test_products_keep_common_influence(rng):
    for _ in range(50):
        n = int(rng.integers(2, 7))
        C = random_clustering(rng, n, int(rng.integers(1, n + 1)))
        P1, P2 = random_common_influence(rng, C), random_common_influence(rng, C)
        assert has_common_influence(matrix_product(P1, P2), C)[0]


def test_regime_does_not_depend_on_matrix_order(rng):
    for _ in range(30):
        n = int(rng.integers(2, 6))
        regime = rng.choice([AssumptionReport.A123, AssumptionReport.A14])
        S = random_matrix_set(rng, n, int(rng.integers(1, n + 1)), 2, regime)
        names = S.names + ('R',)
        matrices = S.matrices + (random_stochastic(rng, n),)
        report = check_assumptions(MatrixSet(matrices, S.clustering, names))
        reverse = check_assumptions(MatrixSet(matrices[::-1], S.clustering, names[::-1]))
        assert report.regime == reverse.regime
        assert report.common_influence == reverse.common_influence
        assert report.cut_balance_constant == reverse.cut_balance_constant
