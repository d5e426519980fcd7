#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
NAME:      clusterset

PURPOSE:   Decide whether a finite set of stochastic matrices drives
           every switching sequence to cluster consensus, certify negative
           answers and check them against simulated dynamics.

COPYRIGHT: (C) 2015-2020 by Laurent Courty
           (C) 2020 The clusterset developers

            This program is free software; you can redistribute it and/or
            modify it under the terms of the GNU General Public License
            as published by the Free Software Foundation; either version 2
            of the License, or (at your option) any later version.

            This program is distributed in the hope that it will be useful,
            but WITHOUT ANY WARRANTY; without even the implied warranty of
            MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
            GNU General Public License for more details.
"""

import sys
import os
import re
import json
import time
import traceback
from datetime import timedelta

from pyinstrument import Profiler
import numpy as np

from clusterset.configreader import ConfigReader
import clusterset.clusterset_error as cs_error
import clusterset.messenger as msgr
from clusterset.const import VerbosityLevel, ExitCode
from clusterset import parser
from clusterset.document import load_matrix_set, save_matrix_set, \
    load_witness, save_witness
from clusterset.matrixcore import check_assumptions, window_products
from clusterset.graph import graph_of, has_cluster_spanning_trees, scc_condensation, \
    to_dot, condensation_to_dot
from clusterset.ergodicity import tau_c, dobrushin, product_tau_decay
from clusterset.decision import decide, decide_necessary_only, verify_witness, \
    sink_witness, CONSENSUS, NOT_CONSENSUS
from clusterset.simulation import SwitchingPolicy, run, detect_cluster_consensus, \
    forward_product_check, witness_initial_state
from clusterset.records import TrajectoryRecord
from clusterset.oracle import OracleHarness, summarize, format_table
from clusterset.generators import FIXTURES, EXAMPLE4_WINDOWS, example4, \
    random_matrix_set


VERDICT_EXIT = {CONSENSUS: ExitCode.POSITIVE,
                NOT_CONSENSUS: ExitCode.NEGATIVE}


def main(argv=None):
    # default functions for subparsers
    parser.validate_parser.set_defaults(func=cmd_validate)
    parser.decide_parser.set_defaults(func=cmd_decide)
    parser.verify_parser.set_defaults(func=cmd_verify)
    parser.simulate_parser.set_defaults(func=cmd_simulate)
    parser.tau_parser.set_defaults(func=cmd_tau)
    parser.oracle_parser.set_defaults(func=cmd_oracle)
    parser.fixtures_parser.set_defaults(func=cmd_fixtures)
    parser.version_parser.set_defaults(func=clusterset_version)
    # get parsed arguments
    try:
        args = parser.arg_parser.parse_args(argv)
    except SystemExit as err:
        # usage errors are operational errors
        return ExitCode.ERROR if err.code else ExitCode.POSITIVE
    if not hasattr(args, 'func'):
        parser.arg_parser.print_usage()
        return ExitCode.ERROR
    if args.func is clusterset_version:
        return clusterset_version(args)
    return run_command(args)


def set_verbosity(cli_args):
    if cli_args.q and cli_args.q == 2:
        msgr.set_verbosity(VerbosityLevel.SUPER_QUIET)
    elif cli_args.q == 1:
        msgr.set_verbosity(VerbosityLevel.QUIET)
    elif cli_args.v == 1:
        msgr.set_verbosity(VerbosityLevel.VERBOSE)
    elif cli_args.v and cli_args.v >= 2:
        msgr.set_verbosity(VerbosityLevel.DEBUG)
    else:
        msgr.set_verbosity(VerbosityLevel.MESSAGE)


def run_command(cli_args):
    """Read the options and run one command.
    Errors are reported on one line and give exit code 1.
    """
    set_verbosity(cli_args)
    msgr.raise_on_error = True
    start = time.time()
    prof = Profiler() if cli_args.p else None
    try:
        if prof is not None:
            prof.start()
        conf_reader = ConfigReader(cli_args.config, cli_args)
        conf_reader.display_run_param()
        exit_code = cli_args.func(cli_args, conf_reader.run_config())
    except (cs_error.ClusterSetError, OSError):
        # only print the last line of the traceback
        traceback_lines = traceback.format_exc().splitlines()
        print(msgr.FATAL + traceback_lines[-1], file=sys.stderr)
        return ExitCode.ERROR
    finally:
        if prof is not None:
            prof.stop()
            print(prof.output_text(unicode=True, color=True), file=sys.stderr)
    elapsed = timedelta(seconds=int(time.time() - start))
    msgr.verbose(u"Elapsed time: {}".format(elapsed))
    return exit_code


def print_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_validate(cli_args, conf):
    """Report the assumptions of a matrix set"""
    S = load_matrix_set(conf.input_path, conf.tolerances)
    report = check_assumptions(S, conf.decision_params['cut_balance_cap'])
    spanning = {name: has_cluster_spanning_trees(graph_of(P), S.clustering)[0]
                for name, P in S}
    sink = sink_witness(S)
    print_json({'n': S.n, 'clusters': S.clustering.to_list(),
                'matrices': list(S.names),
                'assumptions': report.to_dict(),
                'sufficient': report.sufficient,
                'cluster_spanning_trees': spanning,
                'sink_witness': sink.to_dict() if sink else None})
    if cli_args.dot:
        write_dot_files(S, cli_args.dot)
    return ExitCode.POSITIVE


def write_dot_files(S, out_dir):
    """Graph and condensation of every matrix, as DOT files"""
    os.makedirs(out_dir, exist_ok=True)
    for name, P in S:
        G = graph_of(P)
        base = os.path.join(out_dir, re.sub(r'[^\w.-]', '_', name))
        with open(base + '.dot', 'w') as f:
            f.write(to_dot(G, name=name))
        with open(base + '_condensation.dot', 'w') as f:
            f.write(condensation_to_dot(scc_condensation(G), name=name))
    msgr.message(u"Graphs written to <{}>".format(out_dir))


def decision_set(cli_args, S):
    """Matrix set or its window products"""
    if cli_args.windows:
        windows = [w.split(',') for w in cli_args.windows]
        return window_products(S, len(windows[0]), windows)
    elif cli_args.window_length:
        return window_products(S, cli_args.window_length)
    return S


def cmd_decide(cli_args, conf):
    """Decide the cluster consensus property.
    0: ConsensusSet, 3: NotConsensusSet, 2: NecessaryOnlyPassed
    """
    S = decision_set(cli_args, load_matrix_set(conf.input_path, conf.tolerances))
    if cli_args.necessary_only:
        result = decide_necessary_only(S, state_budget=conf.state_budget,
                                       dimension_cap=conf.dimension_cap)
        regime = None
    else:
        report = check_assumptions(S, conf.decision_params['cut_balance_cap'])
        regime = report.regime
        result = decide(S, report, state_budget=conf.state_budget,
                        dimension_cap=conf.dimension_cap)
    output = result.to_dict()
    output['regime'] = regime
    if result.witness is not None:
        output['witness'] = result.witness.to_dict()
        if conf.witness_path:
            save_witness(result.witness, conf.witness_path)
            msgr.message(u"Witness written to <{}>".format(conf.witness_path))
    print_json(output)
    return VERDICT_EXIT.get(result.verdict, ExitCode.INCONCLUSIVE)


def cmd_verify(cli_args, conf):
    """Check a witness: 0 if valid, 3 otherwise"""
    S = load_matrix_set(conf.input_path, conf.tolerances)
    witness = load_witness(conf.witness_path)
    verification = verify_witness(witness, S)
    print_json(dict(verification._asdict()))
    if verification.valid:
        return ExitCode.POSITIVE
    msgr.message(u"Witness violates condition {}".format(verification.condition))
    return ExitCode.NEGATIVE


def switching_policy(cli_args, conf):
    if cli_args.policy == SwitchingPolicy.RANDOM:
        return SwitchingPolicy.uniform_random(conf.seed)
    elif cli_args.policy == SwitchingPolicy.WITNESS:
        if not cli_args.witness:
            raise cs_error.ValidationError(u"policy <witness> needs --witness")
        return SwitchingPolicy.witness_replay(load_witness(cli_args.witness))
    return SwitchingPolicy(cli_args.policy, names=cli_args.matrices)


def initial_state(cli_args, conf, policy, n):
    if cli_args.x0 is not None:
        return np.array(cli_args.x0)
    elif policy.kind == SwitchingPolicy.WITNESS:
        return witness_initial_state(policy.witness, n)
    return np.random.default_rng(conf.seed).random(n)


def cmd_simulate(cli_args, conf):
    """Write the trajectory as CSV and print the consensus profile.
    Not converging is not an error.
    """
    S = load_matrix_set(conf.input_path, conf.tolerances)
    policy = switching_policy(cli_args, conf)
    traj = run(initial_state(cli_args, conf, policy, S.n), policy, S, conf.horizon)
    profile = detect_cluster_consensus(traj, S.clustering, conf.eps,
                                       conf.sim_params['min_window'])
    record = TrajectoryRecord(conf.out_path, S.n).write(traj)
    output = profile.to_dict()
    if traj.horizon:
        check = forward_product_check(traj.policy_log, S, traj.horizon,
                                      conf.sim_params['tau_limit'])
        output['tau_c_product'] = check.taus[-1]
        output['limit_rows'] = (None if check.limit_rows is None
                                else [row.tolist() for row in check.limit_rows])
    if record.file_name == '-':
        # stdout holds the CSV
        print(json.dumps(output, sort_keys=True), file=sys.stderr)
    else:
        msgr.message(u"Trajectory written to <{}>".format(record.file_name))
        print_json(output)
    return ExitCode.POSITIVE


def cmd_tau(cli_args, conf):
    """Coefficients of each matrix, or decay along a product"""
    S = load_matrix_set(conf.input_path, conf.tolerances)
    if cli_args.matrices:
        decay = product_tau_decay(cli_args.matrices, S, cli_args.order)
        print_json({'order': cli_args.order,
                    'sequence': cli_args.matrices,
                    'tau_c': [c.value for c in decay]})
    else:
        coefficients = {}
        for name, P in S:
            coef = tau_c(P, S.clustering)
            coefficients[name] = {'tau_c': coef.value,
                                  'arg_cluster': coef.arg_cluster,
                                  'arg_pair': list(coef.arg_pair),
                                  'dobrushin': dobrushin(P)}
        print_json(coefficients)
    return ExitCode.POSITIVE


def cmd_oracle(cli_args, conf):
    """Cross-validate decisions on random sets.
    0 if every case agrees, 4 otherwise
    """
    p = conf.oracle_params
    harness = OracleHarness(cases=p['cases'], n=p['n'], K=p['k'], seed=p['seed'],
                            max_set_size=p['max_set_size'],
                            horizon=conf.horizon, eps=conf.eps,
                            min_spread=p['min_spread'],
                            state_budget=conf.state_budget,
                            liveness=not cli_args.inject_bug,
                            jobs=p['jobs'])
    if cli_args.inject_bug:
        msgr.warning(u"liveness fixpoint disabled")
    results = harness.run()
    for line in format_table(results):
        print(line)
    summary = summarize(results)
    print_json(summary)
    if summary['disagreements']:
        msgr.message(u"{} disagreement(s)".format(summary['disagreements']))
        return ExitCode.DISAGREEMENT
    return ExitCode.POSITIVE


def cmd_fixtures(cli_args, conf):
    """Write the reference fixtures and optional random sets"""
    os.makedirs(cli_args.out, exist_ok=True)
    for name, (build, provenance) in FIXTURES.items():
        save_matrix_set(build(), os.path.join(cli_args.out, name + '.json'), provenance)
    save_matrix_set(window_products(example4(), 2, EXAMPLE4_WINDOWS),
                    os.path.join(cli_args.out, 'example4_windows.json'),
                    u"products of the jointly connected windows of example4")
    rng = np.random.default_rng(cli_args.random_seed)
    for i in range(cli_args.random):
        size = int(rng.integers(1, conf.oracle_params['max_set_size'] + 1))
        S = random_matrix_set(rng, cli_args.agents, cli_args.clusters, size,
                              cli_args.regime)
        provenance = u"random {} set {} of seed {}".format(cli_args.regime, i,
                                                          cli_args.random_seed)
        file_name = u"random_{}_{}.json".format(cli_args.regime, i)
        save_matrix_set(S, os.path.join(cli_args.out, file_name), provenance)
    msgr.message(u"Fixtures written to <{}>".format(cli_args.out))
    return ExitCode.POSITIVE


def clusterset_version(cli_args):
    """Display the software version number from a file
    """
    root = os.path.dirname(__file__)
    f_version = os.path.join(root, 'data', 'VERSION')
    with open(f_version, 'r') as f:
        print(f.readline().strip())
    return ExitCode.POSITIVE


if __name__ == "__main__":
    sys.exit(main())
