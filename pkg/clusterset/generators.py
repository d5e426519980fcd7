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

Random matrix sets with inter-cluster common influence, and the
reference fixtures shipped with the package.
"""

import numpy as np

from clusterset.const import DefaultValues
from clusterset.matrixcore import Tolerances, validate_stochastic, \
    validate_clustering, MatrixSet, AssumptionReport
import clusterset.clusterset_error as cs_error


def random_clustering(rng, n, K):
    """Random partition of n vertices in K nonempty clusters"""
    if not 1 <= K <= n:
        raise cs_error.ValidationError(u"need 1 <= K <= n, got K={}, n={}".format(K, n))
    perm = rng.permutation(n)
    cuts = np.sort(rng.choice(np.arange(1, n), size=K - 1, replace=False))
    clusters = [sorted(int(v) for v in part) for part in np.split(perm, cuts)]
    clusters.sort()
    return validate_clustering(clusters, n)


def _grid(rng, size, grid_step, low=1):
    """Random multiples of grid_step in [low * grid_step, 1]"""
    top = int(round(1. / grid_step))
    return grid_step * rng.integers(low, top + 1, size=size)


def symmetric_pattern(rng, C, edge_prob=0.5):
    """Symmetric support with self-loops in which every pair of clusters is
    either fully decoupled or linked from each of its vertices.
    """
    n = C.n
    upper = np.triu(rng.random((n, n)) < edge_prob, 1)
    pattern = upper | upper.T | np.eye(n, dtype=bool)
    for k, cluster in enumerate(C.clusters):
        for other in C.clusters[k + 1:]:
            block = pattern[np.ix_(cluster, other)]
            if not (block.any(axis=1).all() and block.any(axis=0).all()):
                pattern[np.ix_(cluster, other)] = False
                pattern[np.ix_(other, cluster)] = False
    return pattern


def block_projection(pattern, C, rng, grid_step=DefaultValues.GRID_STEP):
    """Fill a support pattern so that every row of cluster k puts the same
    mass B[k, k'] on cluster k'. B has a dominant diagonal: the cluster keeps
    at least half of each row.
    """
    n = C.n
    entries = np.zeros((n, n))
    weights = np.where(pattern, _grid(rng, (n, n), 0.5), 0.)
    for k, cluster in enumerate(C.clusters):
        linked = [k2 for k2, other in enumerate(C.clusters)
                  if k2 != k and pattern[np.ix_(cluster, other)].any()]
        masses = np.zeros(C.K)
        if linked:
            masses[k] = rng.choice([0.5, 0.75])
            others = _grid(rng, len(linked), grid_step)
            masses[linked] = (1. - masses[k]) * others / others.sum()
        else:
            masses[k] = 1.
        for i in cluster:
            for k2, other in enumerate(C.clusters):
                if masses[k2] == 0:
                    continue
                w = weights[i, list(other)]
                entries[i, list(other)] = masses[k2] * w / w.sum()
    return entries


def random_a123_matrix(rng, C, tol=None, edge_prob=0.5):
    """Positive diagonal, symmetric support, common influence"""
    pattern = symmetric_pattern(rng, C, edge_prob)
    return validate_stochastic(block_projection(pattern, C, rng), tol)


def cluster_permutation(rng, C):
    """Permutation mapping every cluster onto a cluster of the same size"""
    sizes = [len(c) for c in C.clusters]
    target = list(range(C.K))
    for size in set(sizes):
        same = [k for k in range(C.K) if sizes[k] == size]
        shuffled = list(rng.permutation(same))
        for k, k2 in zip(same, shuffled):
            target[k] = int(k2)
    perm = np.zeros(C.n, dtype=int)
    for k, cluster in enumerate(C.clusters):
        image = rng.permutation(C.clusters[target[k]])
        perm[list(cluster)] = image
    return perm


def random_a14_matrix(rng, C, tol=None):
    """Lazy cluster-respecting permutation: doubly stochastic,
    positive diagonal and common influence.
    """
    laziness = rng.choice([0.25, 0.5, 0.75])
    perm = cluster_permutation(rng, C)
    entries = laziness * np.eye(C.n)
    entries[np.arange(C.n), perm] += 1. - laziness
    return validate_stochastic(entries, tol)


def random_matrix_set(rng, n, K, size, regime=AssumptionReport.A123,
                      tol=None, clustering=None):
    """Random set of size matrices on a shared random clustering"""
    if clustering is None:
        clustering = random_clustering(rng, n, K)
    if regime == AssumptionReport.A123:
        matrices = [random_a123_matrix(rng, clustering, tol) for _ in range(size)]
    elif regime == AssumptionReport.A14:
        matrices = [random_a14_matrix(rng, clustering, tol) for _ in range(size)]
    else:
        raise cs_error.ValidationError(u"cannot generate regime <{}>".format(regime))
    return MatrixSet(matrices, clustering)


def random_stochastic(rng, n, tol=None, density=1.):
    """Plain random stochastic matrix, no structure"""
    entries = rng.random((n, n)) * (rng.random((n, n)) < density)
    entries[np.arange(n), rng.integers(0, n, size=n)] += 1.
    entries /= entries.sum(axis=1)[:, np.newaxis]
    return validate_stochastic(entries, tol)


def random_common_influence(rng, C, tol=None):
    """Dense random stochastic matrix projected on common influence"""
    entries = np.zeros((C.n, C.n))
    for k, cluster in enumerate(C.clusters):
        masses = rng.dirichlet(np.ones(C.K))
        for i in cluster:
            for k2, other in enumerate(C.clusters):
                w = rng.random(len(other)) + 1e-3
                entries[i, list(other)] = masses[k2] * w / w.sum()
    return validate_stochastic(entries, tol)


def random_doubly_stochastic(rng, n, terms=3, tol=None):
    """Convex combination of permutation matrices"""
    weights = rng.dirichlet(np.ones(terms))
    entries = np.zeros((n, n))
    for w in weights:
        entries[np.arange(n), rng.permutation(n)] += w
    return validate_stochastic(entries, tol)


def _matrix_set(n, clusters, matrices):
    tol = Tolerances()
    C = validate_clustering(clusters, n)
    return MatrixSet([validate_stochastic(rows, tol, name=name) for name, rows in matrices],
                     C, [name for name, _ in matrices])


def example1():
    """A cluster split in two closed halves U1={0,1} and U2={2,3}"""
    return _matrix_set(5, [[0, 1, 2, 3], [4]],
                       [('P', [[0.5, 0.5, 0., 0., 0.],
                               [0.25, 0.75, 0., 0., 0.],
                               [0., 0., 0.5, 0.5, 0.],
                               [0., 0., 0.25, 0.75, 0.],
                               [0., 0., 0., 0., 1.]])])


def example2():
    """Every cluster induces a strongly connected subgraph"""
    return _matrix_set(4, [[0, 1], [2, 3]],
                       [('P1', [[0.6, 0.2, 0.1, 0.1],
                                [0.3, 0.5, 0.1, 0.1],
                                [0.1, 0.1, 0.7, 0.1],
                                [0.1, 0.1, 0.2, 0.6]]),
                        ('P2', [[0.5, 0.5, 0., 0.],
                                [0.25, 0.75, 0., 0.],
                                [0., 0., 0.4, 0.6],
                                [0., 0., 0.6, 0.4]])])


def example3():
    """Cluster {2, 3} has no inner edge, both reach vertex 0"""
    return _matrix_set(4, [[0, 1], [2, 3]],
                       [('P', [[0.5, 0.25, 0.125, 0.125],
                               [0.25, 0.5, 0.25, 0.],
                               [0.125, 0.125, 0.75, 0.],
                               [0.25, 0., 0., 0.75]])])


def example4():
    """Switching topologies only jointly connected over two steps"""
    return _matrix_set(4, [[0, 1], [2, 3]],
                       [('Qa', [[0.5, 0.5, 0., 0.],
                                [0.25, 0.75, 0., 0.],
                                [0., 0., 1., 0.],
                                [0., 0., 0., 1.]]),
                        ('Qb', [[1., 0., 0., 0.],
                                [0., 1., 0., 0.],
                                [0., 0., 0.5, 0.5],
                                [0., 0., 0.25, 0.75]])])


def identity(n=2):
    """No agent listens to another: the smallest negative instance"""
    return _matrix_set(n, [list(range(n))], [('I', np.eye(n).tolist())])


def uniform(n=2):
    """Uniform averaging: consensus after one step"""
    return _matrix_set(n, [list(range(n))], [('U', np.full((n, n), 1. / n).tolist())])


EXAMPLE4_WINDOWS = [('Qa', 'Qb'), ('Qb', 'Qa')]

FIXTURES = {'example1': (example1, u"avoiding cycle of length one: S1=U1, S'1=U2"),
            'example2': (example2, u"clusters induce strongly connected subgraphs"),
            'example3': (example3, u"single matrix with cluster-spanning trees"),
            'example4': (example4, u"switching topologies, jointly connected "
                                   u"over windows of two steps"),
            'identity': (identity, u"identity: no agent ever listens to the other"),
            'uniform': (uniform, u"uniform averaging: consensus in one step")}
