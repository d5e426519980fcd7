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

Decide whether a finite set of stochastic matrices is a cluster
consensus set by searching for avoiding set cycles.

The search runs on pair states (S, S'), two disjoint nonempty vertex
sets. Each matrix P maps (S, S') to (N_P(S), N_P(S')) when both images
stay disjoint. A seed ({i}, {j}) with i, j in the same cluster is live
when an infinite run starts from it; live seeds refute cluster consensus.
"""

from collections import namedtuple, deque
import time

from clusterset.const import DefaultValues
from clusterset.graph import graph_of, out_neighbors, vertices_of, mask_of, \
    check_dimension, same_cluster_sinks
from clusterset.matrixcore import check_assumptions, has_common_influence
import clusterset.clusterset_error as cs_error
import clusterset.messenger as msgr


CONSENSUS = 'ConsensusSet'
NOT_CONSENSUS = 'NotConsensusSet'
NECESSARY_ONLY = 'NecessaryOnlyPassed'

COND_DISJOINT = '(i)'
COND_CONTAINMENT = '(ii)'
COND_SEED = '(iii)'
COND_LENGTH = 'length'


def length_bound(n):
    """Number of ordered pairs of disjoint nonempty subsets of n vertices"""
    return 3 ** n - 2 ** (n + 1) + 1


class PairState(namedtuple('PairState', ['s', 's_prime'])):
    """Two disjoint nonempty vertex sets, as bitmasks"""
    __slots__ = ()

    @property
    def is_valid(self):
        return bool(self.s and self.s_prime and not self.s & self.s_prime)

    def to_dict(self):
        return {'s': vertices_of(self.s), 's_prime': vertices_of(self.s_prime)}


class Witness():
    """Avoiding set cycles certifying that a set is not a cluster consensus set.

    prefix is a list of (matrix name, PairState): the walk from the seed
    to the first state of the cycle. The cycle applies matrix_names[l]
    to (s_cycle[l], s_prime_cycle[l]).
    """
    def __init__(self, seed, matrix_names, s_cycle, s_prime_cycle, prefix=None):
        self.seed = tuple(seed)
        self.matrix_names = list(matrix_names)
        self.s_cycle = list(s_cycle)
        self.s_prime_cycle = list(s_prime_cycle)
        self.prefix = list(prefix) if prefix else []

    @property
    def length(self):
        return len(self.matrix_names)

    @property
    def cycle(self):
        return [PairState(s, sp) for s, sp in zip(self.s_cycle, self.s_prime_cycle)]

    def forward_sequence(self, steps):
        """Matrix names of the prefix followed by the repeated cycle"""
        names = [name for name, _ in self.prefix]
        while len(names) < steps:
            names.extend(self.matrix_names)
        return names[:steps]

    def to_dict(self):
        i, j, k = self.seed
        return {'seed': {'i': i, 'j': j, 'cluster': k},
                'prefix': [dict(state.to_dict(), matrix=name)
                           for name, state in self.prefix],
                'cycle': [dict(state.to_dict(), matrix=name)
                          for name, state in zip(self.matrix_names, self.cycle)]}

    @classmethod
    def from_dict(cls, dict_witness):
        """Read the JSON witness format. Raise DocumentError if malformed."""
        try:
            seed = dict_witness['seed']
            seed = (int(seed['i']), int(seed['j']), int(seed['cluster']))
            prefix = [(str(step['matrix']),
                       PairState(mask_of(step['s']), mask_of(step['s_prime'])))
                      for step in dict_witness.get('prefix', [])]
            cycle = [(str(step['matrix']), mask_of(step['s']), mask_of(step['s_prime']))
                     for step in dict_witness['cycle']]
        except (KeyError, TypeError, ValueError) as err:
            raise cs_error.DocumentError(u"malformed witness: {}".format(err))
        if any(v < 0 for v in seed):
            raise cs_error.DocumentError(u"malformed witness: negative seed index")
        return cls(seed=seed,
                   matrix_names=[c[0] for c in cycle],
                   s_cycle=[c[1] for c in cycle],
                   s_prime_cycle=[c[2] for c in cycle],
                   prefix=prefix)

    def __eq__(self, other):
        if not isinstance(other, Witness):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return u"Witness({})".format(self.to_dict())


SearchStats = namedtuple('SearchStats', ['explored_states', 'seeds_examined',
                                         'transitions', 'live_states'])


class DecisionResult(namedtuple('DecisionResult', ['verdict', 'witness', 'stats'])):
    __slots__ = ()

    def to_dict(self):
        return {'verdict': self.verdict,
                'witness_length': self.witness.length if self.witness else None,
                'stats': dict(self.stats._asdict())}


Verification = namedtuple('Verification', ['valid', 'condition', 'detail'])


class PairStateSearch():
    """Explore the pair-state transition system reachable from the seeds
    and keep its live region.
    """
    def __init__(self, matrix_set,
                 state_budget=DefaultValues.STATE_BUDGET,
                 dimension_cap=DefaultValues.DIMENSION_CAP,
                 liveness=True):
        check_dimension(matrix_set.n, dimension_cap)
        self.matrix_set = matrix_set
        self.state_budget = state_budget
        self.liveness = liveness
        self.graphs = [graph_of(P) for P in matrix_set.matrices]
        # matrices are tried in name order
        self.order = sorted(range(len(matrix_set)), key=lambda m: matrix_set.names[m])
        self.image_cache = [{} for _ in self.graphs]
        self.seeds = [PairState(1 << i, 1 << j)
                      for cluster in matrix_set.clustering.clusters
                      for a, i in enumerate(cluster) for j in cluster[a + 1:]]
        self.seeds.sort()
        self.successors = {}
        self.live = set()
        self.transitions = 0

    def image(self, m, mask):
        cache = self.image_cache[m]
        try:
            return cache[mask]
        except KeyError:
            cache[mask] = out_neighbors(self.graphs[m], mask)
            return cache[mask]

    def step_state(self, m, state):
        """Tight image of the state under matrix m, or None if not disjoint"""
        s = self.image(m, state.s)
        s_prime = self.image(m, state.s_prime)
        if s and s_prime and not s & s_prime:
            return PairState(s, s_prime)
        return None

    def explore(self):
        """Breadth-first exploration from every seed
        """
        queue = deque(self.seeds)
        for seed in self.seeds:
            self.successors[seed] = None
        while queue:
            state = queue.popleft()
            succ = []
            for m in self.order:
                self.transitions += 1
                nxt = self.step_state(m, state)
                if nxt is None:
                    continue
                succ.append((m, nxt))
                if nxt not in self.successors:
                    self.successors[nxt] = None
                    queue.append(nxt)
                    if len(self.successors) > self.state_budget:
                        msg = u"more than {} pair states explored".format(self.state_budget)
                        raise cs_error.StateBudgetExceeded(msg)
            self.successors[state] = succ
        msgr.debug(u"{} pair states explored".format(len(self.successors)))
        return self

    def prune(self):
        """Greatest fixpoint: remove states without successor in the region
        until none is left.
        """
        self.live = set(self.successors)
        if not self.liveness:
            return self
        out_count = {state: len(succ) for state, succ in self.successors.items()}
        predecessors = {state: [] for state in self.successors}
        for state, succ in self.successors.items():
            for _, nxt in succ:
                predecessors[nxt].append(state)
        dead = deque(state for state, count in out_count.items() if count == 0)
        while dead:
            state = dead.popleft()
            self.live.discard(state)
            for pred in predecessors[state]:
                out_count[pred] -= 1
                if out_count[pred] == 0:
                    dead.append(pred)
        msgr.debug(u"{} live pair states".format(len(self.live)))
        return self

    def live_seeds(self):
        return [seed for seed in self.seeds if seed in self.live]

    def extract_witness(self, seed):
        """Walk from a live seed, always taking the first matrix (by name)
        that stays in the live region, until a state repeats.
        """
        names = self.matrix_set.names
        i, j = vertices_of(seed.s)[0], vertices_of(seed.s_prime)[0]
        k = self.matrix_set.clustering.cluster_of[i]
        walk = []
        position = {}
        state = seed
        while state not in position:
            if state not in self.live:
                raise cs_error.InternalInconsistency(u"walk left the live region")
            position[state] = len(walk)
            choice = None
            for m, nxt in self.successors[state]:
                if nxt in self.live:
                    choice = (m, nxt)
                    break
            if choice is None:
                msg = u"live state {} has no live successor".format(state.to_dict())
                raise cs_error.InternalInconsistency(msg)
            walk.append((names[choice[0]], state))
            state = choice[1]
        entry = position[state]
        cycle = walk[entry:]
        return Witness(seed=(i, j, k),
                       matrix_names=[name for name, _ in cycle],
                       s_cycle=[st.s for _, st in cycle],
                       s_prime_cycle=[st.s_prime for _, st in cycle],
                       prefix=walk[:entry])

    def stats(self):
        return SearchStats(explored_states=len(self.successors),
                           seeds_examined=len(self.seeds),
                           transitions=self.transitions,
                           live_states=len(self.live))


def _search(S, state_budget, dimension_cap, liveness):
    start_time = time.time()
    search = PairStateSearch(S, state_budget=state_budget,
                             dimension_cap=dimension_cap,
                             liveness=liveness)
    search.explore().prune()
    seeds = search.live_seeds()
    witness = search.extract_witness(seeds[0]) if seeds else None
    msgr.verbose(u"pair-state search: {} states in {:.3f}s".format(
        len(search.successors), time.time() - start_time))
    return witness, search.stats()


def decide(S, report=None,
           state_budget=DefaultValues.STATE_BUDGET,
           dimension_cap=DefaultValues.DIMENSION_CAP,
           liveness=True):
    """Decide the cluster consensus property of S.
    A missing witness proves consensus only under regime A123 or A14
    with common influence. Otherwise the result is NecessaryOnlyPassed.
    """
    if report is None:
        report = check_assumptions(S)
    witness, stats = _search(S, state_budget, dimension_cap, liveness)
    if witness is not None:
        msgr.verbose(u"live seed found: {}".format(witness.seed))
        return DecisionResult(NOT_CONSENSUS, witness, stats)
    elif report.sufficient:
        return DecisionResult(CONSENSUS, None, stats)
    else:
        msgr.verbose(u"no witness, but assumptions do not hold (regime {}, "
                     u"common influence {})".format(report.regime,
                                                    report.common_influence))
        return DecisionResult(NECESSARY_ONLY, None, stats)


def decide_necessary_only(S,
                          state_budget=DefaultValues.STATE_BUDGET,
                          dimension_cap=DefaultValues.DIMENSION_CAP):
    """Assumption-free necessary condition. Never returns ConsensusSet.
    """
    for name, P in S:
        holds, _ = has_common_influence(P, S.clustering)
        if not holds:
            msg = u"matrix <{}> has no inter-cluster common influence".format(name)
            raise cs_error.CommonInfluenceViolated(msg)
    check_dimension(S.n, dimension_cap)
    witness, stats = _search(S, state_budget, dimension_cap, True)
    if witness is not None:
        return DecisionResult(NOT_CONSENSUS, witness, stats)
    return DecisionResult(NECESSARY_ONLY, None, stats)


def _fail(condition, detail):
    return Verification(False, condition, detail)


def verify_witness(W, S, C=None):
    """Check the disjointness, image containment and seed of a witness,
    independently of how it was produced.
    """
    if C is None:
        C = S.clustering
    graphs = {name: graph_of(S.get(name))
              for name in set(W.matrix_names) | {name for name, _ in W.prefix}}
    ell = W.length
    if ell == 0 or len(W.s_cycle) != ell or len(W.s_prime_cycle) != ell:
        return _fail(COND_CONTAINMENT, u"cycle is empty or its lists differ in length")
    full = (1 << C.n) - 1
    states = [state for _, state in W.prefix] + W.cycle
    for idx, state in enumerate(states):
        if (state.s | state.s_prime) & ~full:
            return _fail(COND_DISJOINT, u"state {} has vertices out of range".format(idx))
        if not state.s or not state.s_prime:
            return _fail(COND_DISJOINT, u"state {} has an empty set".format(idx))
        if state.s & state.s_prime:
            return _fail(COND_DISJOINT, u"state {} sets intersect".format(idx))
    # (ii) cyclic containment, then the prefix chain into the cycle
    for l in range(ell):
        G = graphs[W.matrix_names[l]]
        nxt = (l + 1) % ell
        if out_neighbors(G, W.s_cycle[l]) & ~W.s_cycle[nxt]:
            return _fail(COND_CONTAINMENT, u"N(S_{}) not in S_{}".format(l + 1, nxt + 1))
        if out_neighbors(G, W.s_prime_cycle[l]) & ~W.s_prime_cycle[nxt]:
            return _fail(COND_CONTAINMENT, u"N(S'_{}) not in S'_{}".format(l + 1, nxt + 1))
    chain = W.prefix + [(None, W.cycle[0])]
    for t in range(len(W.prefix)):
        name, state = chain[t]
        target = chain[t + 1][1]
        G = graphs[name]
        if (out_neighbors(G, state.s) & ~target.s or
                out_neighbors(G, state.s_prime) & ~target.s_prime):
            return _fail(COND_CONTAINMENT, u"prefix step {} not contained".format(t))
    # (iii) same-cluster seed inside the first sets
    i, j, k = W.seed
    if not (0 <= i < C.n and 0 <= j < C.n) or i == j:
        return _fail(COND_SEED, u"seed vertices invalid")
    if not (C.cluster_of[i] == C.cluster_of[j] == k):
        return _fail(COND_SEED, u"seed vertices {} and {} not both in cluster {}".format(i, j, k))
    # the prefix chain is closed, so its start may carry the seed
    if not any(state.s >> i & 1 and state.s_prime >> j & 1
               for state in (chain[0][1], W.cycle[0])):
        return _fail(COND_SEED, u"seed neither in the first sets of the prefix "
                                u"nor in those of the cycle")
    if ell > length_bound(C.n):
        return _fail(COND_LENGTH, u"cycle length {} above {}".format(ell, length_bound(C.n)))
    return Verification(True, None, None)


def rotate_witness(W, l):
    """Make cycle position l the first one.
    The skipped cycle steps are appended to the prefix.
    """
    if not 0 <= l < W.length:
        raise cs_error.IndexOutOfRange(u"cycle position {} not in [0, {})".format(l, W.length))
    cycle = list(zip(W.matrix_names, W.cycle))
    rotated = cycle[l:] + cycle[:l]
    return Witness(seed=W.seed,
                   matrix_names=[name for name, _ in rotated],
                   s_cycle=[st.s for _, st in rotated],
                   s_prime_cycle=[st.s_prime for _, st in rotated],
                   prefix=W.prefix + cycle[:l])


def sink_witness(S):
    """Length-one witness from two sinks of a condensation holding vertices
    of the same cluster, or None. Sinks are closed under N_P.
    """
    C = S.clustering
    for name, P in S:
        found = same_cluster_sinks(graph_of(P), C)
        if found is not None:
            sink_a, sink_b, i, j = found
            return Witness(seed=(i, j, C.cluster_of[i]), matrix_names=[name],
                           s_cycle=[sink_a], s_prime_cycle=[sink_b])
    return None
