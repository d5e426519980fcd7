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
import numpy as np

from clusterset.const import DefaultValues
from clusterset.graph import graph_of, out_neighbors, mask_of
from clusterset.ergodicity import prefix_products, tau_of_array, FORWARD
import clusterset.clusterset_error as cs_error
import clusterset.messenger as msgr


class SwitchingPolicy():
    """Choose the matrix applied at each step.
    kind is one of 'fixed', 'periodic', 'random', 'witness'.
    """
    FIXED = 'fixed'
    PERIODIC = 'periodic'
    RANDOM = 'random'
    WITNESS = 'witness'
    KINDS = (FIXED, PERIODIC, RANDOM, WITNESS)

    def __init__(self, kind, names=None, seed=None, witness=None):
        if kind not in self.KINDS:
            raise cs_error.ValidationError(u"unknown policy <{}>".format(kind))
        self.kind = kind
        self.names = list(names) if names else []
        self.seed = seed
        self.witness = witness
        if kind in (self.FIXED, self.PERIODIC) and not self.names:
            raise cs_error.ValidationError(u"policy <{}> needs matrix names".format(kind))
        if kind == self.WITNESS and witness is None:
            raise cs_error.ValidationError(u"policy <witness> needs a witness")

    @classmethod
    def fixed_sequence(cls, names):
        return cls(cls.FIXED, names=names)

    @classmethod
    def periodic(cls, names):
        return cls(cls.PERIODIC, names=names)

    @classmethod
    def uniform_random(cls, seed):
        return cls(cls.RANDOM, seed=seed)

    @classmethod
    def witness_replay(cls, witness):
        return cls(cls.WITNESS, witness=witness)

    def sequence(self, S, T):
        """List of T matrix names, checked against S.
        A witness is replayed cycle-first in reverse order: x(t+1) = P(t+1)x(t)
        acts on rows, so P(l) must follow P(l+1) to keep S_l and S'_l apart.
        """
        if self.kind == self.FIXED:
            if T > len(self.names):
                msg = u"fixed sequence has {} matrices, {} steps requested"
                raise cs_error.ValidationError(msg.format(len(self.names), T))
            names = self.names[:T]
        elif self.kind == self.PERIODIC:
            names = [self.names[t % len(self.names)] for t in range(T)]
        elif self.kind == self.RANDOM:
            rng = np.random.default_rng(self.seed)
            names = [S.names[m] for m in rng.integers(0, len(S), size=T)]
        else:
            cycle = self.witness.matrix_names[::-1]
            names = [cycle[t % len(cycle)] for t in range(T)]
        for name in set(names):
            S.index_of(name)
        return names


class Trajectory():
    """States x(0..T), the matrix applied at each step and the cluster spread
    of every state.
    """
    def __init__(self, states, policy_log, spread_log):
        assert len(states) == len(policy_log) + 1
        self.states = states
        self.policy_log = policy_log
        self.spread_log = spread_log

    @property
    def horizon(self):
        return len(self.policy_log)

    @property
    def final_state(self):
        return self.states[-1]


class ConsensusProfile(namedtuple('ConsensusProfile',
                                  ['converged', 'per_cluster_values',
                                   'convergence_time', 'final_spread'])):
    __slots__ = ()

    def to_dict(self):
        return dict(self._asdict())


SupportTrajectory = namedtuple('SupportTrajectory', ['pairs', 'disjoint', 'numeric_steps'])
ForwardCheck = namedtuple('ForwardCheck', ['taus', 'limit_rows'])


def _check_vector(x, n):
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (n,):
        msg = u"state of shape {} for dimension {}".format(x.shape, n)
        raise cs_error.DimensionMismatch(msg)
    return x


def step(x, P):
    """x(t+1) = P x(t)"""
    return np.dot(P.entries, _check_vector(x, P.n))


def cluster_spread(x, C):
    """Largest difference between two agents of the same cluster"""
    x = _check_vector(x, C.n)
    return float(max(x[list(c)].max() - x[list(c)].min() for c in C.clusters))


def run(x0, policy, S, T):
    """Apply T steps of the policy from x0"""
    if T < 0:
        raise cs_error.ValidationError(u"horizon must be nonnegative")
    names = policy.sequence(S, T)
    x = _check_vector(x0, S.n).copy()
    states = [x]
    spread_log = [cluster_spread(x, S.clustering)]
    for name in names:
        x = step(x, S.get(name))
        states.append(x)
        spread_log.append(cluster_spread(x, S.clustering))
    return Trajectory(states, names, spread_log)


def detect_cluster_consensus(traj, C, eps=DefaultValues.EPS,
                             min_window=DefaultValues.MIN_WINDOW):
    """Converged if the spread stays below eps over the trailing window
    of max(min_window, T/10) steps.
    """
    if not eps > 0:
        raise cs_error.ValidationError(u"eps must be positive")
    spreads = [cluster_spread(x, C) for x in traj.states]
    window = max(min_window, traj.horizon // 10)
    final_spread = spreads[-1]
    converged = all(s <= eps for s in spreads[-(window + 1):])
    if not converged:
        return ConsensusProfile(False, None, None, final_spread)
    convergence_time = len(spreads)
    while convergence_time > 0 and spreads[convergence_time - 1] <= eps:
        convergence_time -= 1
    final = traj.final_state
    alphas = [float(np.mean(final[list(c)])) for c in C.clusters]
    return ConsensusProfile(True, alphas, convergence_time, final_spread)


def _periodic(sequence, T):
    if not sequence:
        raise cs_error.EmptySequence(u"no matrix in the sequence")
    return [sequence[t % len(sequence)] for t in range(T)]


def support_trajectories(i, j, sequence, S, T, numeric_horizon=None):
    """Supports of e_i^T P(1)...P(t) and e_j^T P(1)...P(t) for t = 1..T.
    The sequence is repeated if shorter than T.
    Supports are computed as iterated graph images and, for the first
    numeric_horizon steps (default min(T, 2n)), from the row vectors.
    """
    for v in (i, j):
        if not 0 <= v < S.n:
            raise cs_error.IndexOutOfRange(u"vertex {} not in [0, {})".format(v, S.n))
    if numeric_horizon is None:
        numeric_horizon = min(T, 2 * S.n)
    names = _periodic(sequence, T) if T else []
    graphs = {name: graph_of(S.get(name)) for name in set(names)}
    masks = [1 << i, 1 << j]
    rows = [np.eye(S.n)[i], np.eye(S.n)[j]]
    pairs = []
    disjoint = True
    for t, name in enumerate(names, start=1):
        masks = [out_neighbors(graphs[name], m) for m in masks]
        if t <= numeric_horizon:
            entries = S.get(name).entries
            rows = [np.dot(r, entries) for r in rows]
            # rescaling keeps small entries resolvable, supports are unchanged
            rows = [r / r.max() for r in rows]
            for r, m in zip(rows, masks):
                numeric = mask_of(np.flatnonzero(r > 0))
                if numeric != m:
                    msg = u"step {}: numeric support {} differs from N^t {}"
                    raise cs_error.SupportMismatch(msg.format(t, bin(numeric), bin(m)))
        pairs.append(tuple(masks))
        if masks[0] & masks[1]:
            disjoint = False
    msgr.debug(u"support replay of {} steps, disjoint: {}".format(T, disjoint))
    return SupportTrajectory(pairs, disjoint, min(numeric_horizon, T))


def forward_product_check(sequence, S, T, tau_limit=DefaultValues.TAU_LIMIT):
    """tau_C of P(t)...P(1) for t = 1..T.
    When the last one is below tau_limit, also return the common row y_k
    of each cluster.
    """
    if T < 1:
        raise cs_error.ValidationError(u"horizon must be at least 1")
    names = _periodic(sequence, T)
    taus = []
    product = None
    for product in prefix_products(names, S, FORWARD):
        taus.append(tau_of_array(product, S.clustering).value)
    limit_rows = None
    if taus[-1] <= tau_limit:
        limit_rows = [product[list(c)].mean(axis=0) for c in S.clustering.clusters]
    return ForwardCheck(taus, limit_rows)


def witness_initial_state(witness, n):
    """0 on S_1, 1 on S'_1, 0.5 elsewhere"""
    x0 = np.full(n, 0.5)
    for v in range(n):
        if witness.s_cycle[0] >> v & 1:
            x0[v] = 0.
        elif witness.s_prime_cycle[0] >> v & 1:
            x0[v] = 1.
    return x0
