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

Cluster ergodicity coefficient and its Dobrushin special case.
"""

from collections import namedtuple
import numbers
import numpy as np

from clusterset.const import DefaultValues
from clusterset.matrixcore import single_cluster
import clusterset.clusterset_error as cs_error


CoefficientValue = namedtuple('CoefficientValue', ['value', 'arg_cluster', 'arg_pair'])

FORWARD = 'forward'
BACKWARD = 'backward'
CLOSED_FORM = 'closed_form'
EXHAUSTIVE = 'exhaustive'


def tau_of_array(arr, C):
    """tau_C of a row-stochastic numpy array.
    Ties go to the smallest (k, i, j).
    """
    best = None
    for k, cluster in enumerate(C.clusters):
        if len(cluster) < 2:
            continue
        rows = arr[list(cluster)]
        dist = 0.5 * np.abs(rows[:, np.newaxis, :] - rows[np.newaxis, :, :]).sum(axis=2)
        upper = np.triu_indices(len(cluster), k=1)
        pair_dist = dist[upper]
        idx = int(np.argmax(pair_dist))
        value = float(pair_dist[idx])
        if best is None or value > best.value:
            pair = (cluster[upper[0][idx]], cluster[upper[1][idx]])
            best = CoefficientValue(value=value, arg_cluster=k, arg_pair=pair)
    if best is None:
        # only singleton clusters
        v = C.clusters[0][0]
        return CoefficientValue(value=0., arg_cluster=0, arg_pair=(v, v))
    return best._replace(value=min(1., max(0., best.value)))


def tau_c(P, C):
    """Cluster ergodicity coefficient:
    half the largest L1 distance between two rows of the same cluster.
    """
    if P.n != C.n:
        msg = u"matrix dimension {} does not match clustering dimension {}"
        raise cs_error.DimensionMismatch(msg.format(P.n, C.n))
    return tau_of_array(P.entries, C)


def dobrushin(P):
    """Dobrushin ergodicity coefficient, i.e. tau_C with one cluster"""
    return tau_c(P, single_cluster(P.n)).value


def half_l1_variational(P, i, j, mode=CLOSED_FORM, cap=DefaultValues.EXHAUSTIVE_CAP,
                        chunk=4096):
    """max over A of sum_{s in A} (p_is - p_js), equal to ||p_i - p_j||_1 / 2.
    closed_form takes A = {s: p_is > p_js}, exhaustive tries every subset.
    """
    n = P.n
    for v in (i, j):
        if not 0 <= v < n:
            raise cs_error.IndexOutOfRange(u"vertex {} not in [0, {})".format(v, n))
    diff = P.entries[i] - P.entries[j]
    if mode == CLOSED_FORM:
        return float(np.maximum(diff, 0.).sum())
    elif mode == EXHAUSTIVE:
        if n > cap:
            msg = u"exhaustive mode limited to n <= {}, got {}".format(cap, n)
            raise cs_error.DimensionTooLarge(msg)
        bits = 1 << np.arange(n)
        best = 0.
        for start in range(0, 1 << n, chunk):
            subsets = np.arange(start, min(start + chunk, 1 << n))
            x = ((subsets[:, np.newaxis] & bits) != 0).astype(np.float64)
            best = max(best, float(np.max(np.dot(x, diff))))
        return best
    else:
        raise ValueError(u"unknown mode <{}>".format(mode))


def _resolve(S, idx):
    if isinstance(idx, str):
        return S.index_of(idx)
    if not isinstance(idx, numbers.Integral) or not 0 <= idx < len(S):
        msg = u"matrix index {} not in [0, {})".format(idx, len(S))
        raise cs_error.IndexOutOfRange(msg)
    return idx


def prefix_products(sequence, S, order=FORWARD):
    """Yield every prefix product of the sequence as a numpy array.
    forward: P(t)...P(1); backward: P(1)...P(t).
    """
    if len(sequence) == 0:
        raise cs_error.EmptySequence(u"no matrix to multiply")
    if order not in (FORWARD, BACKWARD):
        raise ValueError(u"unknown order <{}>".format(order))
    indices = [_resolve(S, idx) for idx in sequence]
    product = None
    for idx in indices:
        entries = S.matrices[idx].entries
        if product is None:
            product = entries.copy()
        elif order == FORWARD:
            product = np.dot(entries, product)
        else:
            product = np.dot(product, entries)
        yield product


def product_tau_decay(sequence, S, order=FORWARD):
    """tau_C of every prefix product.
    Nonincreasing when the matrices have common influence.
    """
    return [tau_of_array(product, S.clustering)
            for product in prefix_products(sequence, S, order)]
