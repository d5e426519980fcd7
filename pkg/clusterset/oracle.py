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

Cross-validation of the decision procedure against simulated dynamics
on small random matrix sets.
"""

from collections import namedtuple, Counter
from multiprocessing import Pool
import traceback

import numpy as np

from clusterset.const import DefaultValues
from clusterset.matrixcore import check_assumptions, AssumptionReport
from clusterset.graph import graph_of, has_cluster_spanning_trees
from clusterset.decision import decide, verify_witness, \
    CONSENSUS, NOT_CONSENSUS
from clusterset.simulation import SwitchingPolicy, run, \
    support_trajectories, forward_product_check, witness_initial_state
from clusterset.generators import random_matrix_set
import clusterset.clusterset_error as cs_error
import clusterset.messenger as msgr


REGIMES = (AssumptionReport.A123, AssumptionReport.A14)

CaseResult = namedtuple('CaseResult', ['index', 'regime', 'size', 'verdict',
                                       'witness_length', 'agree', 'reason'])


class OracleHarness():
    """Generate random matrix sets alternating between the A123 and A14
    generators, decide them and check the verdict numerically.
    Case i only depends on (seed, i).
    """
    def __init__(self, cases=DefaultValues.ORACLE_CASES,
                 n=DefaultValues.ORACLE_N, K=DefaultValues.ORACLE_K,
                 seed=DefaultValues.ORACLE_SEED,
                 max_set_size=DefaultValues.ORACLE_MAX_SET_SIZE,
                 horizon=DefaultValues.HORIZON, eps=DefaultValues.EPS,
                 min_spread=DefaultValues.ORACLE_MIN_SPREAD,
                 state_budget=DefaultValues.STATE_BUDGET,
                 liveness=True, jobs=1):
        if not 1 <= n <= DefaultValues.ORACLE_MAX_N:
            msg = u"oracle is limited to 1 <= n <= {}, got {}"
            raise cs_error.DimensionTooLarge(msg.format(DefaultValues.ORACLE_MAX_N, n))
        if not 1 <= K <= n:
            raise cs_error.ValidationError(u"need 1 <= K <= n, got K={}".format(K))
        if cases < 1 or max_set_size < 1 or jobs < 1:
            raise cs_error.ValidationError(u"cases, set size and jobs must be positive")
        self.cases = cases
        self.n = n
        self.K = K
        self.seed = seed
        self.max_set_size = max_set_size
        self.horizon = horizon
        self.eps = eps
        self.min_spread = min_spread
        self.state_budget = state_budget
        self.liveness = liveness
        self.jobs = jobs

    def case_matrix_set(self, index):
        rng = np.random.default_rng([self.seed, index])
        size = int(rng.integers(1, self.max_set_size + 1))
        return random_matrix_set(rng, self.n, self.K, size, REGIMES[index % 2]), rng

    def check_case(self, index):
        S, rng = self.case_matrix_set(index)
        report = check_assumptions(S)
        verdict = witness_length = None
        try:
            result = decide(S, report, state_budget=self.state_budget,
                            liveness=self.liveness)
            verdict = result.verdict
            if verdict == CONSENSUS:
                reason = self.check_positive(S, rng)
            elif verdict == NOT_CONSENSUS:
                witness_length = result.witness.length
                reason = self.check_negative(S, result.witness)
            else:
                reason = u"inconclusive on a set of regime {}".format(report.regime)
        except cs_error.ClusterSetError as err:
            reason = u"{}: {}".format(type(err).__name__, err)
        return CaseResult(index=index, regime=report.regime, size=len(S),
                          verdict=verdict, witness_length=witness_length,
                          agree=reason is None, reason=reason)

    def check_positive(self, S, rng):
        """Every matrix has cluster-spanning trees and random switching
        drives tau_C and the spread below eps.
        """
        for name, P in S:
            spanning, _ = has_cluster_spanning_trees(graph_of(P), S.clustering)
            if not spanning:
                return u"matrix <{}> has no cluster-spanning trees".format(name)
        policy = SwitchingPolicy.uniform_random(int(rng.integers(2 ** 31)))
        names = policy.sequence(S, self.horizon)
        tau = forward_product_check(names, S, self.horizon).taus[-1]
        if not tau < self.eps:
            return u"tau_C of the forward product is {:g}".format(tau)
        traj = run(rng.random(S.n), policy, S, self.horizon)
        if not traj.spread_log[-1] < self.eps:
            return u"final spread is {:g}".format(traj.spread_log[-1])
        return None

    def check_negative(self, S, witness):
        """The witness verifies, its support replay stays disjoint
        and its dynamics replay keeps the clusters apart.
        """
        verification = verify_witness(witness, S)
        if not verification.valid:
            return u"witness fails {}: {}".format(verification.condition,
                                                  verification.detail)
        i, j, _ = witness.seed
        T = 2 * 3 ** S.n
        replay = support_trajectories(i, j, witness.forward_sequence(T), S, T)
        if not replay.disjoint:
            return u"supports meet within {} steps".format(T)
        traj = run(witness_initial_state(witness, S.n),
                   SwitchingPolicy.witness_replay(witness), S, self.horizon)
        if min(traj.spread_log) < self.min_spread:
            return u"witness replay spread fell to {:g}".format(min(traj.spread_log))
        return None

    def run(self):
        """Return the case results ordered by index"""
        indices = range(self.cases)
        if self.jobs > 1:
            with Pool(self.jobs) as pool:
                return pool.map(oracle_worker, [(self, i) for i in indices])
        results = []
        for i in indices:
            results.append(self.check_case(i))
            msgr.percent(i + 1, self.cases, u"oracle cases ")
        return results


def oracle_worker(args):
    """Check one case in a worker process"""
    harness, index = args
    msgr.raise_on_error = True
    try:
        return harness.check_case(index)
    except Exception:
        return CaseResult(index=index, regime=None, size=None, verdict=None,
                          witness_length=None, agree=False,
                          reason=traceback.format_exc().splitlines()[-1])


def summarize(results):
    """Counts by regime and verdict, and the number of disagreements"""
    return {'cases': len(results),
            'disagreements': sum(not r.agree for r in results),
            'regimes': dict(Counter(str(r.regime) for r in results)),
            'verdicts': dict(Counter(str(r.verdict) for r in results)),
            'max_witness_length': max([r.witness_length for r in results
                                       if r.witness_length is not None], default=None)}


def format_table(results):
    """One text line per case"""
    header = u"{:>5} {:>6} {:>4} {:>20} {:>4} {:>6}  {}".format(
        u"case", u"regime", u"size", u"verdict", u"len", u"agree", u"reason")
    lines = [header]
    for r in results:
        lines.append(u"{:>5} {:>6} {:>4} {:>20} {:>4} {:>6}  {}".format(
            r.index, str(r.regime), str(r.size), str(r.verdict),
            u"-" if r.witness_length is None else r.witness_length,
            u"yes" if r.agree else u"NO", r.reason or u""))
    return lines
