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
"""

from collections import namedtuple
import numbers
import numpy as np

from clusterset.const import DefaultValues
import clusterset.clusterset_error as cs_error


class Tolerances(namedtuple('Tolerances',
                            ['row_sum_tol', 'zero_tol', 'equality_tol'])):
    """Numerical tolerances shared by a matrix set.
    Entries at or below zero_tol are exact zeros.
    """
    __slots__ = ()

    def __new__(cls, row_sum_tol=DefaultValues.ROW_SUM_TOL,
                zero_tol=DefaultValues.ZERO_TOL,
                equality_tol=DefaultValues.EQUALITY_TOL):
        values = (row_sum_tol, zero_tol, equality_tol)
        for name, value in zip(cls._fields, values):
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise cs_error.ValidationError(u"{}: not a number".format(name))
            if not 0 <= value < DefaultValues.MAX_TOL:
                msg = u"{} must be in [0, {}), got {}"
                raise cs_error.ValidationError(msg.format(name,
                                                          DefaultValues.MAX_TOL,
                                                          value))
        return super(Tolerances, cls).__new__(cls, *[float(v) for v in values])

    def to_dict(self):
        return dict(self._asdict())


class StochasticMatrix():
    """An immutable, validated row-stochastic matrix.
    Build it with validate_stochastic().
    """
    def __init__(self, entries, tol):
        self._entries = entries
        self._entries.flags.writeable = False
        self.tol = tol

    @property
    def n(self):
        return self._entries.shape[0]

    @property
    def entries(self):
        """read-only numpy array"""
        return self._entries

    @property
    def support(self):
        """boolean array of the positive entries"""
        return self._entries > self.tol.zero_tol

    def __eq__(self, other):
        if not isinstance(other, StochasticMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash(self._entries.tobytes())

    def __repr__(self):
        return u"StochasticMatrix(n={}, entries={})".format(self.n,
                                                            self._entries.tolist())


def _clamp_rows(arr, zero_tol):
    """Set near-zero entries to zero and renormalize the rows that changed.
    Repeat until nothing moves.
    """
    arr[arr == 0] = 0.  # no negative zeros
    while True:
        clamp = (arr <= zero_tol) & (arr != 0)
        if not np.any(clamp):
            return arr
        changed_rows = np.any(clamp, axis=1)
        arr[clamp] = 0.
        sums = arr[changed_rows].sum(axis=1)
        arr[changed_rows] = arr[changed_rows] / sums[:, np.newaxis]


def validate_stochastic(raw, tol=None, name=None):
    """Check and return a StochasticMatrix.
    Entries in [-zero_tol, zero_tol] are clamped to zero and their row renormalized.
    """
    if tol is None:
        tol = Tolerances()
    label = u"matrix <{}>".format(name) if name is not None else u"matrix"
    try:
        arr = np.array(raw, dtype=np.float64)
    except (TypeError, ValueError):
        raise cs_error.NonSquare(u"{}: not a numerical array".format(label))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise cs_error.NonSquare(u"{}: shape {} is not square".format(label,
                                                                       arr.shape))
    if not np.all(np.isfinite(arr)):
        i, j = np.argwhere(~np.isfinite(arr))[0]
        raise cs_error.NonFinite(u"{}: entry ({}, {}) is not finite".format(label, i, j))
    negative = arr < -tol.zero_tol
    if np.any(negative):
        i, j = np.argwhere(negative)[0]
        msg = u"{}: entry ({}, {}) is negative ({})"
        raise cs_error.NegativeEntry(msg.format(label, i, j, arr[i, j]))
    row_sums = np.where(arr > tol.zero_tol, arr, 0.).sum(axis=1)
    bad_rows = np.abs(row_sums - 1.) > tol.row_sum_tol
    if np.any(bad_rows):
        i = int(np.argmax(bad_rows))
        msg = u"{}: row {} sums to {!r}"
        raise cs_error.RowSumViolation(msg.format(label, i, row_sums[i]))
    return StochasticMatrix(_clamp_rows(arr, tol.zero_tol), tol)


class Clustering():
    """An ordered partition of {0,...,n-1}.
    Build it with validate_clustering().
    """
    def __init__(self, n, clusters):
        self.n = n
        self.clusters = tuple(tuple(sorted(c)) for c in clusters)
        cluster_of = [None] * n
        for k, cluster in enumerate(self.clusters):
            for v in cluster:
                cluster_of[v] = k
        self.cluster_of = tuple(cluster_of)
        # one bitmask per cluster
        self.masks = tuple(sum(1 << v for v in c) for c in self.clusters)

    @property
    def K(self):
        return len(self.clusters)

    def indicator(self):
        """n x K matrix of cluster indicators"""
        arr = np.zeros((self.n, self.K))
        for v, k in enumerate(self.cluster_of):
            arr[v, k] = 1.
        return arr

    def same_cluster(self, i, j):
        return self.cluster_of[i] == self.cluster_of[j]

    def to_list(self):
        return [list(c) for c in self.clusters]

    def __eq__(self, other):
        if not isinstance(other, Clustering):
            return NotImplemented
        return self.n == other.n and self.clusters == other.clusters

    def __hash__(self):
        return hash((self.n, self.clusters))

    def __repr__(self):
        return u"Clustering(n={}, clusters={})".format(self.n, self.to_list())


def single_cluster(n):
    """The K=1 clustering of global consensus"""
    return Clustering(n, [range(n)])


def validate_clustering(sets, n):
    """Check and return a Clustering. Cluster order is kept.
    """
    if not isinstance(n, numbers.Integral) or n <= 0:
        raise cs_error.ValidationError(u"n must be a positive integer, got {}".format(n))
    seen = set()
    for k, cluster in enumerate(sets):
        if len(cluster) == 0:
            raise cs_error.EmptyCluster(u"cluster {} is empty".format(k))
        for v in cluster:
            if not isinstance(v, numbers.Integral) or not 0 <= v < n:
                msg = u"cluster {}: vertex {} not in [0, {})"
                raise cs_error.IndexOutOfRange(msg.format(k, v, n))
            if v in seen:
                raise cs_error.Overlap(u"vertex {} appears twice".format(v))
            seen.add(v)
    missing = sorted(set(range(n)) - seen)
    if missing:
        raise cs_error.NotCovering(u"vertices {} belong to no cluster".format(missing))
    return Clustering(n, [[int(v) for v in c] for c in sets])


class MatrixSet():
    """A finite set of named stochastic matrices sharing a clustering.
    """
    def __init__(self, matrices, clustering, names=None):
        matrices = tuple(matrices)
        if not matrices:
            raise cs_error.ValidationError(u"a matrix set cannot be empty")
        if names is None:
            names = [u"P{}".format(i) for i in range(len(matrices))]
        names = tuple(str(name) for name in names)
        if len(names) != len(matrices):
            raise cs_error.ValidationError(u"one name per matrix is required")
        if len(set(names)) != len(names):
            dup = sorted(n for n in set(names) if names.count(n) > 1)
            raise cs_error.DuplicateName(u"duplicated matrix names: {}".format(dup))
        for name, mat in zip(names, matrices):
            if mat.n != clustering.n:
                msg = u"matrix <{}> has dimension {}, clustering has {}"
                raise cs_error.DimensionMismatch(msg.format(name, mat.n, clustering.n))
        self.matrices = matrices
        self.names = names
        self.clustering = clustering
        self.n = clustering.n
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def tol(self):
        return self.matrices[0].tol

    def __len__(self):
        return len(self.matrices)

    def __iter__(self):
        return iter(zip(self.names, self.matrices))

    def index_of(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise cs_error.UnknownMatrixName(u"unknown matrix <{}>".format(name))

    def get(self, name):
        return self.matrices[self.index_of(name)]

    def with_matrix(self, matrix, name):
        """Return a new set with one more matrix"""
        return MatrixSet(self.matrices + (matrix,), self.clustering,
                         self.names + (name,))


def _check_dims(P, C):
    if P.n != C.n:
        msg = u"matrix dimension {} does not match clustering dimension {}"
        raise cs_error.DimensionMismatch(msg.format(P.n, C.n))


def block_sums(P, C):
    """n x K matrix: total weight each row puts on each cluster"""
    _check_dims(P, C)
    return np.dot(P.entries, C.indicator())


def has_common_influence(P, C, tol=None):
    """Check the inter-cluster common influence of P w.r.t. C.
    Return a boolean and the K x K block sums (first row of each cluster).
    """
    if tol is None:
        tol = P.tol
    row_blocks = block_sums(P, C)
    blocks = np.zeros((C.K, C.K))
    holds = True
    for k, cluster in enumerate(C.clusters):
        rows = row_blocks[list(cluster)]
        blocks[k] = rows[0]
        spread = rows.max(axis=0) - rows.min(axis=0)
        off_diag = np.delete(spread, k)
        if np.any(off_diag > tol.equality_tol):
            holds = False
    return holds, blocks


def check_cut_balance(P, cap=DefaultValues.CUT_BALANCE_CAP, chunk=4096):
    """Return the smallest C >= 1 such that every cut's forward flow
    is at most C times its reverse flow, or None if P is not cut-balanced.
    Exhaustive over the 2^n - 2 nonempty proper subsets.
    """
    n = P.n
    if n > cap:
        msg = u"cut-balance check limited to n <= {}, got {}"
        raise cs_error.DimensionTooLarge(msg.format(cap, n))
    zero_tol = P.tol.zero_tol
    entries = P.entries
    col_sums = entries.sum(axis=0)
    bits = 1 << np.arange(n)
    ratio = 1.
    for start in range(1, (1 << n) - 1, chunk):
        subsets = np.arange(start, min(start + chunk, (1 << n) - 1))
        x = ((subsets[:, np.newaxis] & bits) != 0).astype(np.float64)
        inner = np.einsum('si,ij,sj->s', x, entries, x)
        forward = np.einsum('si,ij,sj->s', x, entries, 1. - x)
        reverse = np.dot(x, col_sums) - inner
        blocked = (reverse <= zero_tol) & (forward > zero_tol)
        if np.any(blocked):
            return None
        flowing = reverse > zero_tol
        if np.any(flowing):
            ratio = max(ratio, float(np.max(forward[flowing] / reverse[flowing])))
    if ratio <= 1. + P.tol.equality_tol:
        return 1.
    return ratio


class AssumptionReport(namedtuple('AssumptionReport',
                                  ['a1_self_loops', 'a2_symmetric_pattern',
                                   'a3_delta', 'a4_doubly_stochastic',
                                   'cut_balance_constant', 'common_influence',
                                   'regime', 'block_sums'])):
    """Structural assumptions of a matrix set"""
    __slots__ = ()

    A123 = 'A123'
    A14 = 'A14'
    NONE = 'none'

    @property
    def sufficient(self):
        """True when a missing witness proves cluster consensus"""
        return self.regime != self.NONE and self.common_influence

    def to_dict(self):
        dict_report = dict(self._asdict())
        dict_report['block_sums'] = {name: blocks.tolist()
                                     for name, blocks in self.block_sums.items()}
        return dict_report


def regime_of(a1, a2, a3_delta, a4):
    """A123 takes precedence over A14"""
    if a1 and a2 and a3_delta is not None:
        return AssumptionReport.A123
    elif a1 and a4:
        return AssumptionReport.A14
    else:
        return AssumptionReport.NONE


def check_assumptions(S, cut_balance_cap=DefaultValues.CUT_BALANCE_CAP):
    """Report which structural assumptions hold on the matrix set.
    """
    tol = S.tol
    a1 = a2 = a4 = common_influence = True
    delta = None
    cut_constant = 1.
    all_blocks = {}
    for name, P in S:
        support = P.support
        a1 = a1 and bool(np.all(np.diag(support)))
        a2 = a2 and bool(np.array_equal(support, support.T))
        positive = P.entries[support]
        if positive.size:
            delta = float(positive.min()) if delta is None else min(delta, float(positive.min()))
        col_sums = P.entries.sum(axis=0)
        a4 = a4 and bool(np.all(np.abs(col_sums - 1.) <= tol.row_sum_tol))
        holds, blocks = has_common_influence(P, S.clustering, tol)
        common_influence = common_influence and holds
        all_blocks[name] = blocks
        if cut_constant is not None and S.n <= cut_balance_cap:
            constant = check_cut_balance(P, cap=cut_balance_cap)
            cut_constant = None if constant is None else max(cut_constant, constant)
    if S.n > cut_balance_cap:
        cut_constant = None
    return AssumptionReport(a1_self_loops=a1, a2_symmetric_pattern=a2,
                            a3_delta=delta, a4_doubly_stochastic=a4,
                            cut_balance_constant=cut_constant,
                            common_influence=common_influence,
                            regime=regime_of(a1, a2, delta, a4),
                            block_sums=all_blocks)


def matrix_product(P1, P2):
    """P1 . P2, revalidated"""
    if P1.n != P2.n:
        msg = u"cannot multiply {0}x{0} by {1}x{1}".format(P1.n, P2.n)
        raise cs_error.DimensionMismatch(msg)
    return validate_stochastic(np.dot(P1.entries, P2.entries), P1.tol)


def window_products(S, L, windows=None):
    """Set of the L-step products Q(L)...Q(1) of matrices of S.
    windows restricts the set to the given name sequences (Q(1), ..., Q(L)),
    all L^|S| products are formed otherwise.
    Names are joined by '*', leftmost factor applied last.
    """
    if L < 1:
        raise cs_error.ValidationError(u"window length must be positive")
    if windows is not None:
        return _selected_windows(S, L, windows)
    products = list(zip(S.names, S.matrices))
    for _ in range(L - 1):
        products = [(u"{}*{}".format(name, prev_name), matrix_product(P, prev))
                    for prev_name, prev in products
                    for name, P in zip(S.names, S.matrices)]
    names = [name for name, _ in products]
    matrices = [P for _, P in products]
    return MatrixSet(matrices, S.clustering, names)


def _selected_windows(S, L, windows):
    names = []
    matrices = []
    for window in windows:
        if len(window) != L:
            msg = u"window {} does not have {} matrices".format(list(window), L)
            raise cs_error.ValidationError(msg)
        product = S.get(window[0])
        for name in window[1:]:
            product = matrix_product(S.get(name), product)
        names.append(u"*".join(reversed(window)))
        matrices.append(product)
    return MatrixSet(matrices, S.clustering, names)
